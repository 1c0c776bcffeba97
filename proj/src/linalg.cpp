#include "altbounds/linalg.hpp"

#include <stdexcept>

namespace altbounds {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  if (a.front().size() != b.size()) throw std::invalid_argument("matrix shapes do not match");
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  RationalMatrix out(a.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix work = a;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(work[c], work[pivot]);
    std::swap(inv[c], inv[pivot]);
    const Rational scale = Rational(1) / work[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      work[c][j] *= scale;
      inv[c][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || work[i][c] == 0) continue;
      const Rational factor = work[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= factor * work[c][j];
        inv[i][j] -= factor * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace altbounds
