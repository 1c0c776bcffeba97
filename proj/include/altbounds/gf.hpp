#pragma once

// Finite fields F_q, q = p^m <= 2^16, with table-driven arithmetic.
//
// Elements are encoded as integers in [0, q): the coefficient vector
// (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... + c_{m-1} x^{m-1} maps to
// sum c_i p^i. Multiplication is modulo a fixed monic irreducible of degree m,
// chosen as the smallest one when its coefficients are read as a base-p number
// with the leading coefficient most significant.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace altbounds {

using FieldValue = std::uint16_t;

bool is_prime(long x);

// (p, m) with p^m == q, or nullopt when q is not a prime power > 1.
std::optional<std::pair<int, int>> prime_power_decomposition(long q);

class FieldSpec {
 public:
  // Throws std::invalid_argument for non-prime p, m < 1 or p^m > 2^16.
  static FieldSpec make(int p, int m);
  // Throws std::invalid_argument unless q is a prime power in [2, 2^16].
  static FieldSpec of_order(long q);

  int p() const { return t_->p; }
  int m() const { return t_->m; }
  int q() const { return t_->q; }
  // Coefficients low to high, including the leading 1. Just {0, 1} when m == 1.
  const std::vector<int>& modulus() const { return t_->modulus; }

  FieldValue add(FieldValue a, FieldValue b) const {
    return t_->add_table.empty() ? add_digits(a, b) : t_->add_table[index(a, b)];
  }
  FieldValue neg(FieldValue a) const { return t_->neg_table[a]; }
  FieldValue sub(FieldValue a, FieldValue b) const { return add(a, neg(b)); }
  FieldValue mul(FieldValue a, FieldValue b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp_table[t_->log_table[a] + t_->log_table[b]];
  }
  // Throws std::domain_error on zero.
  FieldValue inv(FieldValue a) const;
  FieldValue pow(FieldValue a, unsigned long e) const;
  FieldValue div(FieldValue a, FieldValue b) const { return mul(a, inv(b)); }

  FieldValue primitive_element() const { return t_->exp_table[1]; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.t_ == b.t_ || (a.t_->q == b.t_->q && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    int p = 0;
    int m = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<FieldValue> add_table;  // q*q entries, only for small q
    std::vector<FieldValue> neg_table;
    std::vector<FieldValue> inv_table;
    std::vector<std::uint32_t> log_table;
    std::vector<FieldValue> exp_table;  // length 2(q-1) so log sums need no reduction
  };

  explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::size_t index(FieldValue a, FieldValue b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(t_->q) + b;
  }
  FieldValue add_digits(FieldValue a, FieldValue b) const;

  std::shared_ptr<const Tables> t_;
};

// Value-semantic field element; arithmetic between different fields throws
// std::invalid_argument.
class FieldElement {
 public:
  FieldElement(FieldSpec spec, FieldValue value);

  const FieldSpec& spec() const { return spec_; }
  FieldValue value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inv() const { return {spec_, spec_.inv(value_)}; }
  FieldElement pow(unsigned long e) const { return {spec_, spec_.pow(value_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {spec_, spec_.neg(value_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.spec_ == b.spec_;
  }

 private:
  FieldSpec spec_;
  FieldValue value_;
};

}  // namespace altbounds
