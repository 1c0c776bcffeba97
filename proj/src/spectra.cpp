#include "altbounds/spectra.hpp"

#include <stdexcept>
#include <string>

#include "altbounds/altforms.hpp"
#include "altbounds/gf.hpp"

namespace altbounds {

namespace {

void require_params(int n, long q) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!prime_power_decomposition(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

BigInt qpow(long q, long e) { return ipow(q, static_cast<unsigned long>(e)); }

}  // namespace

BigInt degree(int n, long q) { return exact_div((qpow(q, n) - 1) * (qpow(q, n - 1) - 1), qpow(q, 2) - 1); }

SpectrumTable eigenvalues(int n, long q) {
  require_params(n, q);
  SpectrumTable st;
  st.n = n;
  st.q = q;
  st.diameter = n / 2;
  const BigInt den = qpow(q, 2) - 1;
  for (int x = 0; x <= st.diameter; ++x) {
    // (q^{2n-2x-1} - q^n - q^{n-1} + 1) / (q^2 - 1)
    st.theta.push_back(exact_div(qpow(q, 2 * n - 2 * x - 1) - qpow(q, n) - qpow(q, n - 1) + 1, den));
  }
  for (int x = 1; x <= st.diameter; ++x) {
    if (!(st.theta[x] < st.theta[x - 1])) throw std::logic_error("eigenvalues are not strictly decreasing");
  }
  return st;
}

IntersectionArray intersection_array(int n, long q) {
  require_params(n, q);
  const int d = n / 2;
  const BigInt den = qpow(q, 2) - 1;
  const BigInt delta = degree(n, q);
  IntersectionArray ia;
  ia.n = n;
  ia.q = q;
  for (int i = 0; i <= d; ++i) {
    // b_i vanishes at i = n/2 (n even), where q^{n-2i-1} would be fractional
    ia.b.push_back(n == 2 * i ? BigInt(0)
                              : exact_div(qpow(q, 4 * i) * (qpow(q, n - 2 * i) - 1) * (qpow(q, n - 2 * i - 1) - 1), den));
    ia.c.push_back(i == 0 ? BigInt(0) : exact_div(qpow(q, 2 * i - 2) * (qpow(q, 2 * i) - 1), den));
    ia.a.push_back(delta - ia.b.back() - ia.c.back());
  }
  ia.k.push_back(1);
  for (int i = 0; i < d; ++i) ia.k.push_back(exact_div(ia.k[i] * ia.b[i], ia.c[i + 1]));

  if (ia.b[d] != 0 || ia.c[1] != 1 || ia.b[0] != delta) throw std::logic_error("intersection array boundary values");
  BigInt total = 0;
  for (const auto& v : ia.k) total += v;
  if (total != space_size(n, q)) throw std::logic_error("valencies do not sum to the vertex count");
  return ia;
}

std::vector<Polynomial> distance_polynomials(const IntersectionArray& ia) {
  const int d = ia.diameter();
  std::vector<Polynomial> v;
  v.push_back(Polynomial::constant(1));
  if (d >= 1) v.push_back(Polynomial::x());
  for (int i = 1; i < d; ++i) {
    const Polynomial shifted = Polynomial({Rational(-ia.a[i]), Rational(1)}) * v[i];
    const Polynomial next = shifted - Rational(ia.b[i - 1]) * v[i - 1];
    v.push_back(Rational(1, 1) / Rational(ia.c[i + 1]) * next);
  }
  return v;
}

SpectrumTable multiplicities(SpectrumTable st, const IntersectionArray& ia) {
  if (st.n != ia.n || st.q != ia.q) throw std::invalid_argument("spectrum and intersection array differ in (n, q)");
  const auto v = distance_polynomials(ia);
  const BigInt size = space_size(st.n, st.q);
  st.mult.clear();
  for (const auto& theta : st.theta) {
    Rational norm = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational val = v[i](Rational(theta));
      norm += val * val / Rational(ia.k[i]);
    }
    Rational m = Rational(size) / norm;
    m.canonicalize();
    if (m.get_den() != 1 || m <= 0) {
      throw std::logic_error("non-integral multiplicity " + to_string(m) + " for eigenvalue " + to_string(theta));
    }
    st.mult.push_back(m.get_num());
  }
  BigInt total = 0, trace = 0;
  for (std::size_t j = 0; j < st.mult.size(); ++j) {
    total += st.mult[j];
    trace += st.mult[j] * st.theta[j];
  }
  if (total != size || trace != 0) throw std::logic_error("multiplicities fail the trace identities");
  return st;
}

SpectrumTable spectrum(int n, long q) { return multiplicities(eigenvalues(n, q), intersection_array(n, q)); }

EigenMatrices eigenmatrices(const SpectrumTable& st, const IntersectionArray& ia) {
  const auto v = distance_polynomials(ia);
  const std::size_t d1 = v.size();
  if (st.theta.size() != d1) throw std::invalid_argument("spectrum size does not match the diameter");
  EigenMatrices em;
  em.P.assign(d1, std::vector<Rational>(d1, Rational(0)));
  for (std::size_t j = 0; j < d1; ++j) {
    for (std::size_t i = 0; i < d1; ++i) em.P[j][i] = v[i](Rational(st.theta[j]));
  }
  auto inv = inverse(em.P);
  if (!inv) throw std::logic_error("eigenmatrix P is singular");
  const Rational size(space_size(st.n, st.q));
  em.Q = std::move(*inv);
  for (auto& row : em.Q) {
    for (auto& x : row) x *= size;
  }
  RationalMatrix check = multiply(em.P, em.Q);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      if (check[i][j] != (i == j ? size : Rational(0))) throw std::logic_error("P Q != |X| I");
    }
  }
  return em;
}

BigInt delta_walks(int n, long q) {
  require_params(n, q);
  const IntersectionArray ia = intersection_array(n, q);
  const BigInt product = ia.b[0] * ia.a[1];
  const BigInt den = qpow(q, 2) - 1;
  const BigInt closed = exact_div((qpow(q, n) - 1) * (qpow(q, n - 1) - 1) *
                                      (qpow(q, n + 2) + qpow(q, n + 1) - qpow(q, n) - qpow(q, n - 1) - qpow(q, 4) -
                                       qpow(q, 2) + 2),
                                  den * den);
  if (product != closed) {
    throw std::logic_error("closed 3-walk formula disagrees with delta * a_1 at n=" + std::to_string(n));
  }
  return product;
}

Rational t_threshold(int n, long q) {
  if (n < 6) throw std::invalid_argument("t_threshold requires n >= 6");
  require_params(n, q);
  const int half = n / 2;
  const BigInt top = qpow(q, 2 * half - 2);
  Rational closed(qpow(q, 2) * (qpow(q, n - 2) - 1) * (qpow(q, n - 3) - 1) - top + 1, top - 1);
  closed.canonicalize();

  const SpectrumTable st = eigenvalues(n, q);
  const BigInt& delta = st.theta[0];
  const BigInt& last = st.theta[half];
  Rational from_spectrum(-(delta * delta + delta * last - delta_walks(n, q)), delta * (last + 1));
  from_spectrum.canonicalize();
  if (closed != from_spectrum) throw std::logic_error("the two t_n expressions disagree");
  return closed;
}

int threshold_index(const SpectrumTable& st) {
  const Rational t = t_threshold(st.n, st.q);
  int s = -1;
  for (int x = 0; x <= st.diameter; ++x) {
    if (Rational(st.theta[x]) >= t) s = x;
  }
  if (s < 0) throw std::logic_error("no eigenvalue reaches t_n");
  return s;
}

}  // namespace altbounds
