#pragma once

#include <span>

#include "gakit/multivector.hpp"

namespace gakit::detail {

/// z ^ v for a vector v given by coordinates.
Multivector wedge_vector_right(const Multivector& z, std::span<const double> v);

/// v ^ z.
Multivector wedge_vector_left(std::span<const double> v, const Multivector& z);

/// v _| z (Euclidean).
Multivector contract_vector_left(std::span<const double> v, const Multivector& z);

} // namespace gakit::detail
