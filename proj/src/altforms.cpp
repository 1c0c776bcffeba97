#include "altbounds/altforms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace altbounds {

AltMatrix::AltMatrix(int n, FieldSpec field)
    : n_(n), field_(std::move(field)), upper_(static_cast<std::size_t>(alt_dimension(n)), 0) {
  if (n < 1) throw std::invalid_argument("matrix side must be positive");
}

AltMatrix::AltMatrix(int n, FieldSpec field, std::vector<FieldValue> upper)
    : n_(n), field_(std::move(field)), upper_(std::move(upper)) {
  if (n < 1) throw std::invalid_argument("matrix side must be positive");
  if (upper_.size() != static_cast<std::size_t>(alt_dimension(n))) {
    throw std::invalid_argument("expected " + std::to_string(alt_dimension(n)) + " upper entries");
  }
  for (FieldValue v : upper_) {
    if (v >= field_.q()) throw std::invalid_argument("entry outside the field");
  }
}

std::size_t AltMatrix::slot(int i, int j) const {
  return static_cast<std::size_t>(i * n_ - i * (i + 1) / 2 + (j - i - 1));
}

FieldValue AltMatrix::at(int i, int j) const {
  if (i == j) return 0;
  if (i < j) return upper_[slot(i, j)];
  return field_.neg(upper_[slot(j, i)]);
}

void AltMatrix::set(int i, int j, FieldValue v) {
  if (i == j) throw std::invalid_argument("alternating matrices have a zero diagonal");
  if (i < j) {
    upper_[slot(i, j)] = v;
  } else {
    upper_[slot(j, i)] = field_.neg(v);
  }
}

bool AltMatrix::is_zero() const {
  return std::all_of(upper_.begin(), upper_.end(), [](FieldValue v) { return v == 0; });
}

std::vector<std::vector<FieldValue>> AltMatrix::dense() const {
  std::vector<std::vector<FieldValue>> out(n_, std::vector<FieldValue>(n_, 0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

namespace {
void require_compatible(const AltMatrix& a, const AltMatrix& b) {
  if (a.n() != b.n() || !(a.field() == b.field())) {
    throw std::invalid_argument("matrices differ in size or field");
  }
}
}  // namespace

AltMatrix operator+(const AltMatrix& a, const AltMatrix& b) {
  require_compatible(a, b);
  AltMatrix out = a;
  for (std::size_t k = 0; k < out.upper_.size(); ++k) out.upper_[k] = a.field_.add(a.upper_[k], b.upper_[k]);
  return out;
}

AltMatrix operator-(const AltMatrix& a, const AltMatrix& b) {
  require_compatible(a, b);
  AltMatrix out = a;
  for (std::size_t k = 0; k < out.upper_.size(); ++k) out.upper_[k] = a.field_.sub(a.upper_[k], b.upper_[k]);
  return out;
}

bool operator==(const AltMatrix& a, const AltMatrix& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.upper_ == b.upper_;
}

BigInt space_size(int n, long q) { return ipow(q, static_cast<unsigned long>(alt_dimension(n))); }

namespace {
std::uint64_t checked_space_size(int n, int q) {
  const BigInt size = space_size(n, q);
  if (size > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw std::out_of_range("Alt_" + std::to_string(n) + "(F_" + std::to_string(q) + ") is too large to index");
  }
  return size.get_ui();
}
}  // namespace

std::uint64_t encode(const AltMatrix& a) {
  const std::uint64_t q = static_cast<std::uint64_t>(a.field().q());
  checked_space_size(a.n(), a.field().q());
  std::uint64_t idx = 0;
  const auto upper = a.upper();
  for (std::size_t k = upper.size(); k-- > 0;) idx = idx * q + upper[k];
  return idx;
}

AltMatrix decode(std::uint64_t idx, int n, const FieldSpec& field) {
  if (idx >= checked_space_size(n, field.q())) throw std::out_of_range("matrix index out of range");
  const std::uint64_t q = static_cast<std::uint64_t>(field.q());
  std::vector<FieldValue> upper(static_cast<std::size_t>(alt_dimension(n)));
  for (auto& v : upper) {
    v = static_cast<FieldValue>(idx % q);
    idx /= q;
  }
  return AltMatrix(n, field, std::move(upper));
}

AltEnumeration::AltEnumeration(int n, FieldSpec field)
    : n_(n), field_(std::move(field)), first_(0), last_(checked_space_size(n_, field_.q())) {}

AltEnumeration::AltEnumeration(int n, FieldSpec field, std::uint64_t first, std::uint64_t last)
    : n_(n), field_(std::move(field)), first_(first), last_(last) {
  if (first_ > last_ || last_ > checked_space_size(n_, field_.q())) {
    throw std::out_of_range("enumeration range out of bounds");
  }
}

AltEnumeration::iterator AltEnumeration::begin() const {
  if (first_ == last_) return end();
  return {first_, decode(first_, n_, field_)};
}

AltEnumeration::iterator AltEnumeration::end() const { return {last_, AltMatrix(n_, field_)}; }

AltEnumeration::iterator& AltEnumeration::iterator::operator++() {
  ++idx_;
  // odometer increment of the base-q digits
  const int n = current_.n();
  const FieldValue top = static_cast<FieldValue>(current_.field().q() - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const FieldValue v = current_.at(i, j);
      if (v < top) {
        current_.set(i, j, static_cast<FieldValue>(v + 1));
        return *this;
      }
      current_.set(i, j, 0);
    }
  }
  return *this;
}

int rank(std::vector<std::vector<FieldValue>> rows, const FieldSpec& field) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const FieldValue inv = field.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const FieldValue factor = field.mul(rows[i][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        rows[i][k] = field.sub(rows[i][k], field.mul(factor, rows[r][k]));
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank(const AltMatrix& a) { return rank(a.dense(), a.field()); }

BigInt gaussian_binomial(int n, int k, const BigInt& base) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(base, static_cast<unsigned long>(n - i)) - 1;
    den *= ipow(base, static_cast<unsigned long>(i + 1)) - 1;
  }
  return exact_div(num, den);
}

BigInt count_rank(int n, long q, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("rank out of range");
  // Inclusion-exclusion over subspaces of an i-dimensional column space:
  // Alt_n(W) has q^{C(s,2)} elements for dim W = s, and the Moebius function
  // of the subspace lattice is (-1)^{i-s} q^{C(i-s,2)}.
  const BigInt base(q);
  BigInt sum = 0;
  for (int s = 0; s <= i; ++s) {
    const unsigned long e = static_cast<unsigned long>(s * (s - 1) / 2 + (i - s) * (i - s - 1) / 2);
    BigInt term = ipow(base, e) * gaussian_binomial(i, s, base);
    if ((i - s) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return gaussian_binomial(n, i, base) * sum;
}

RankDistribution rank_distribution(int n, long q) {
  RankDistribution out;
  for (int i = 0; i <= n; ++i) out.counts.push_back(count_rank(n, q, i));
  return out;
}

RankDistribution enumerate_rank_distribution(int n, const FieldSpec& field) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const AltMatrix& a : AltEnumeration(n, field)) ++counts[static_cast<std::size_t>(rank(a))];
  RankDistribution out;
  for (auto c : counts) out.counts.emplace_back(static_cast<unsigned long>(c));
  return out;
}

BigInt ball_volume(int n, long q, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("radius out of range");
  BigInt total = 0;
  for (int i = 0; i <= r; ++i) total += count_rank(n, q, i);
  return total;
}

int ball_volume_exponent_asymptotic(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("radius out of range");
  if (r % 2 == 0) return r * n - r * (r + 1) / 2;
  return (r - 1) * n - (r - 1) * r / 2;
}

std::vector<AltMatrix> decompose_rank2(const AltMatrix& a) {
  const FieldSpec& f = a.field();
  const int n = a.n();
  std::vector<AltMatrix> summands;
  AltMatrix rest = a;
  while (!rest.is_zero()) {
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rest.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    // B = (c_i c_j^T - c_j c_i^T) / rest(i,j) agrees with rest on rows and
    // columns i, j, so rest - B vanishes there and loses exactly rank 2.
    const FieldValue scale = f.inv(rest.at(pi, pj));
    AltMatrix piece(n, f);
    for (int r = 0; r < n; ++r) {
      for (int c = r + 1; c < n; ++c) {
        const FieldValue x = f.mul(rest.at(r, pi), rest.at(c, pj));
        const FieldValue y = f.mul(rest.at(r, pj), rest.at(c, pi));
        piece.set(r, c, f.mul(f.sub(x, y), scale));
      }
    }
    rest = rest - piece;
    summands.push_back(std::move(piece));
  }
  return summands;
}

MatrixCode anticode_subspace(int n, const FieldSpec& field, const std::vector<std::vector<FieldValue>>& basis) {
  const int t = static_cast<int>(basis.size());
  if (t < 1 || t > n) throw std::invalid_argument("subspace dimension must lie in [1, n]");
  for (const auto& u : basis) {
    if (u.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("basis vector has the wrong length");
  }
  if (rank(basis, field) != t) throw std::invalid_argument("basis vectors are linearly dependent");

  // Alt_n(U) is spanned by u_a u_b^T - u_b u_a^T for a < b.
  std::vector<AltMatrix> generators;
  for (int x = 0; x < t; ++x) {
    for (int y = x + 1; y < t; ++y) {
      AltMatrix g(n, field);
      for (int r = 0; r < n; ++r) {
        for (int c = r + 1; c < n; ++c) {
          g.set(r, c, field.sub(field.mul(basis[x][r], basis[y][c]), field.mul(basis[y][r], basis[x][c])));
        }
      }
      generators.push_back(std::move(g));
    }
  }

  MatrixCode code{n, field, {}, std::nullopt};
  const auto q = static_cast<std::uint64_t>(field.q());
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < generators.size(); ++k) total *= q;
  code.elements.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    AltMatrix m(n, field);
    std::uint64_t digits = idx;
    for (const AltMatrix& g : generators) {
      const auto coeff = static_cast<FieldValue>(digits % q);
      digits /= q;
      if (coeff == 0) continue;
      for (int r = 0; r < n; ++r) {
        for (int c = r + 1; c < n; ++c) m.set(r, c, field.add(m.at(r, c), field.mul(coeff, g.at(r, c))));
      }
    }
    code.elements.push_back(std::move(m));
  }
  return code;
}

int min_distance(const MatrixCode& code) {
  if (code.elements.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < code.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < code.elements.size(); ++j) {
      best = std::min(best, rank_distance(code.elements[i], code.elements[j]));
    }
  }
  return best;
}

}  // namespace altbounds
