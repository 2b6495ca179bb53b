#pragma once

#include <vector>

#include "hyperlat/scalar.hpp"

namespace hyperlat {

using SVector = std::vector<Scalar>;
using SMatrix = std::vector<SVector>;  // row-major; acts on column vectors from the left

SVector zero_vector(Ring ring, int n);
SMatrix zero_matrix(Ring ring, int rows, int cols);
SMatrix identity(Ring ring, int n);

SMatrix mul(const SMatrix& a, const SMatrix& b);
SVector act(const SMatrix& a, const SVector& v);
SMatrix adjoint(const SMatrix& a);  // conjugate transpose
/// Inverse over the division ring (row reduction by left multiplication).
SMatrix inverse(const SMatrix& a);

SVector add(const SVector& a, const SVector& b);
SVector sub(const SVector& a, const SVector& b);
SVector neg(const SVector& a);
SVector right_mul(const SVector& v, const Scalar& s);  // v * s
SVector left_mul(const Scalar& s, const SVector& v);   // s * v

/// Sum of conj(x_i) g_ij y_j.
Scalar hermitian(const SMatrix& gram, const SVector& x, const SVector& y);

bool is_integral(const SVector& v);
bool is_integral(const SMatrix& m);
bool is_zero(const SVector& v);

/// Generator g of the left ideal spanned by the coordinates, so v = w*g with w
/// integral.  Zero for the zero vector.
Scalar content(const SVector& v);

/// Rank over the fraction field (right vector space of the columns).
int column_rank(const SMatrix& a);

std::string str(const SVector& v);

}  // namespace hyperlat
