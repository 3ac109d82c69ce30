#pragma once

#include "gakit/multivector.hpp"

// Products of the Euclidean geometric algebra. The fiducial basis e_1..e_n is orthonormal,
// so every product reduces to a sign rule on blade masks. All functions throw
// ArgumentError when the operands have different dimensions.
namespace gakit {

Multivector wedge(const Multivector& x, const Multivector& y);

/// sum_k <X>_k . <Y>_k; on canonical blades e_A . e_B = delta_AB.
double scalar_product(const Multivector& x, const Multivector& y);

/// <X>_j contracted onto <Y>_{j+k} lands in grade k; equal grades give reverse(X) . Y.
Multivector contract_left(const Multivector& x, const Multivector& y);
Multivector contract_right(const Multivector& x, const Multivector& y);

Multivector clifford_product(const Multivector& x, const Multivector& y);

/// (XY - YX) / 2 under the Euclidean Clifford product.
Multivector commutator(const Multivector& x, const Multivector& y);

} // namespace gakit
