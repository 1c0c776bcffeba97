#include "altbounds/exact.hpp"

#include <stdexcept>

namespace altbounds {

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt ipow(long base, unsigned long exponent) { return ipow(BigInt(base), exponent); }

BigInt floor(const Rational& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("exact_div: " + num.get_str() + " is not divisible by " + den.get_str());
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace altbounds
