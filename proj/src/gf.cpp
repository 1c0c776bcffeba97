#include "altbounds/gf.hpp"

#include <stdexcept>
#include <string>

namespace altbounds {

namespace {

constexpr long kMaxFieldOrder = 1L << 16;

using Poly = std::vector<int>;  // coefficients low to high, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree deg whose lower coefficients are the base-p digits of code.
Poly monic_from_code(long code, int deg, int p) {
  Poly f(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[i] = static_cast<int>(code % p);
    code /= p;
  }
  f[deg] = 1;
  return f;
}

long ipow_long(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int deg = 1; deg <= m / 2; ++deg) {
    for (long code = 0; code < ipow_long(p, deg); ++code) {
      if (poly_mod(f, monic_from_code(code, deg, p), p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(int p, int m) {
  for (long code = 0; code < ipow_long(p, m); ++code) {
    Poly f = monic_from_code(code, m, p);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

bool is_prime(long x) {
  if (x < 2) return false;
  for (long d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power_decomposition(long q) {
  if (q < 2) return std::nullopt;
  long p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), m};
}

FieldSpec FieldSpec::make(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<int>(q);
  t->modulus = m == 1 ? Poly{0, 1} : smallest_irreducible(p, m);

  // Multiplication of encoded elements by polynomial arithmetic; only used to build tables.
  auto to_poly = [&](long v) {
    Poly a(m, 0);
    for (int i = 0; i < m; ++i) {
      a[i] = static_cast<int>(v % p);
      v /= p;
    }
    return a;
  };
  auto from_poly = [&](const Poly& a) {
    long v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  };
  auto slow_mul = [&](long a, long b) {
    if (m == 1) return (a * b) % p;
    Poly pa = to_poly(a), pb = to_poly(b), prod(2 * m, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    }
    return from_poly(poly_mod(prod, t->modulus, p));
  };

  t->neg_table.resize(q);
  for (long v = 0; v < q; ++v) {
    Poly a = to_poly(v);
    for (int& c : a) c = (p - c) % p;
    t->neg_table[v] = static_cast<FieldValue>(from_poly(a));
  }

  // The multiplicative group is cyclic; find a generator by order counting.
  long generator = -1;
  for (long g = 1; g < q && generator < 0; ++g) {
    long x = g, order = 1;
    while (x != 1) {
      x = slow_mul(x, g);
      ++order;
    }
    if (order == q - 1) generator = g;
  }
  t->log_table.assign(q, 0);
  t->exp_table.assign(2 * (q - 1), 0);
  long x = 1;
  for (long e = 0; e < q - 1; ++e) {
    t->exp_table[e] = static_cast<FieldValue>(x);
    t->exp_table[e + q - 1] = static_cast<FieldValue>(x);
    t->log_table[x] = static_cast<std::uint32_t>(e);
    x = slow_mul(x, generator);
  }
  t->inv_table.assign(q, 0);
  for (long v = 1; v < q; ++v) {
    t->inv_table[v] = t->exp_table[(q - 1 - t->log_table[v]) % (q - 1)];
  }

  FieldSpec spec(t);
  if (q <= 256) {
    t->add_table.resize(q * q);
    for (long a = 0; a < q; ++a) {
      for (long b = 0; b < q; ++b) {
        t->add_table[a * q + b] = spec.add_digits(static_cast<FieldValue>(a), static_cast<FieldValue>(b));
      }
    }
  }
  return spec;
}

FieldSpec FieldSpec::of_order(long q) {
  auto pm = prime_power_decomposition(q);
  if (!pm) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power > 1");
  return make(pm->first, pm->second);
}

FieldValue FieldSpec::add_digits(FieldValue a, FieldValue b) const {
  const int p = t_->p;
  if (p == 2) return static_cast<FieldValue>(a ^ b);
  long out = 0, scale = 1, x = a, y = b;
  for (int i = 0; i < t_->m; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return static_cast<FieldValue>(out);
}

FieldValue FieldSpec::inv(FieldValue a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(t_->q));
  return t_->inv_table[a];
}

FieldValue FieldSpec::pow(FieldValue a, unsigned long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const unsigned long order = static_cast<unsigned long>(t_->q - 1);
  return t_->exp_table[(static_cast<unsigned long>(t_->log_table[a]) * (e % order)) % order];
}

FieldElement::FieldElement(FieldSpec spec, FieldValue value) : spec_(std::move(spec)), value_(value) {
  if (value_ >= spec_.q()) throw std::invalid_argument("field element out of range");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("operands belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_.div(a.value_, b.value_)};
}

}  // namespace altbounds
