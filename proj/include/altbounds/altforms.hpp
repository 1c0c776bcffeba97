#pragma once

// The space Alt_n(F_q) of n x n alternating matrices with the rank metric.

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "altbounds/exact.hpp"
#include "altbounds/gf.hpp"

namespace altbounds {

// Alternating matrix stored by its strictly upper triangular entries in
// row-major order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
class AltMatrix {
 public:
  AltMatrix(int n, FieldSpec field);
  // Throws std::invalid_argument if upper has the wrong length or out-of-range entries.
  AltMatrix(int n, FieldSpec field, std::vector<FieldValue> upper);

  int n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  std::span<const FieldValue> upper() const { return upper_; }

  // Full-matrix entry: zero on the diagonal, -A(j,i) below it.
  FieldValue at(int i, int j) const;
  // Sets A(i,j) = v and A(j,i) = -v; requires i != j.
  void set(int i, int j, FieldValue v);

  bool is_zero() const;
  std::vector<std::vector<FieldValue>> dense() const;

  friend AltMatrix operator+(const AltMatrix& a, const AltMatrix& b);
  friend AltMatrix operator-(const AltMatrix& a, const AltMatrix& b);
  friend bool operator==(const AltMatrix& a, const AltMatrix& b);

 private:
  std::size_t slot(int i, int j) const;  // requires i < j

  int n_;
  FieldSpec field_;
  std::vector<FieldValue> upper_;
};

inline int alt_dimension(int n) { return n * (n - 1) / 2; }

// |Alt_n(F_q)| = q^{n(n-1)/2}
BigInt space_size(int n, long q);

// Base-q encoding with upper()[0] as the least significant digit.
// Both throw std::out_of_range when the index space does not fit in 63 bits
// or idx is not below q^{n(n-1)/2}.
std::uint64_t encode(const AltMatrix& a);
AltMatrix decode(std::uint64_t idx, int n, const FieldSpec& field);

// Streams Alt_n(F_q) in encode order over [first, last) without materializing it.
class AltEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = AltMatrix;
    using difference_type = std::ptrdiff_t;
    using pointer = const AltMatrix*;
    using reference = const AltMatrix&;

    iterator(std::uint64_t idx, AltMatrix current) : idx_(idx), current_(std::move(current)) {}
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    std::uint64_t index() const { return idx_; }
    iterator& operator++();
    friend bool operator==(const iterator& a, const iterator& b) { return a.idx_ == b.idx_; }

   private:
    std::uint64_t idx_;
    AltMatrix current_;
  };

  AltEnumeration(int n, FieldSpec field);
  AltEnumeration(int n, FieldSpec field, std::uint64_t first, std::uint64_t last);

  std::uint64_t size() const { return last_ - first_; }
  iterator begin() const;
  iterator end() const;

 private:
  int n_;
  FieldSpec field_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// Rank over F_q of an arbitrary matrix given by rows (Gaussian elimination).
int rank(std::vector<std::vector<FieldValue>> rows, const FieldSpec& field);
int rank(const AltMatrix& a);

inline int rank_distance(const AltMatrix& a, const AltMatrix& b) { return rank(a - b); }

// Gaussian binomial [n choose k]_base.
BigInt gaussian_binomial(int n, int k, const BigInt& base);

// Number of matrices in Alt_n(F_q) of rank exactly i (zero for odd i).
BigInt count_rank(int n, long q, int i);

struct RankDistribution {
  std::vector<BigInt> counts;  // counts[i] for i = 0..n
};

RankDistribution rank_distribution(int n, long q);
// Exhaustive count; only for spaces that fit the enumeration.
RankDistribution enumerate_rank_distribution(int n, const FieldSpec& field);

// |{M : rank(M) <= r}|
BigInt ball_volume(int n, long q, int r);

// Leading exponent of the ball volume as q grows.
int ball_volume_exponent_asymptotic(int n, int r);

// rank(a)/2 alternating matrices of rank 2 summing to a.
std::vector<AltMatrix> decompose_rank2(const AltMatrix& a);

struct MatrixCode {
  int n = 0;
  FieldSpec field;
  std::vector<AltMatrix> elements;
  std::optional<int> declared_min_dist;
};

// Alt_n(U) = {M : colsp(M) in U} for U spanned by the given independent vectors.
// Throws std::invalid_argument if the basis is dependent or has the wrong length.
MatrixCode anticode_subspace(int n, const FieldSpec& field, const std::vector<std::vector<FieldValue>>& basis);

// Minimum pairwise rank distance; throws std::invalid_argument for fewer than two elements.
int min_distance(const MatrixCode& code);

}  // namespace altbounds
