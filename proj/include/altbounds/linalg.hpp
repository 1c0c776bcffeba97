#pragma once

// Small dense matrices over the rationals.

#include <optional>
#include <vector>

#include "altbounds/exact.hpp"

namespace altbounds {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
// Gauss-Jordan inverse; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace altbounds
