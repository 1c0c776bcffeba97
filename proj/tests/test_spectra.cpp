#include "doctest.h"

#include "altbounds/altforms.hpp"
#include "altbounds/linalg.hpp"
#include "altbounds/spectra.hpp"

using namespace altbounds;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Multiplicities from the trace equations sum_j m_j theta_j^s = |X| [s==0], ..., solved by
// Cramer's rule on the Vandermonde system for s = 0..D with the walk counts at a vertex.
std::vector<Rational> cramer_multiplicities(const SpectrumTable& st, const std::vector<Rational>& walks) {
  const std::size_t m = st.theta.size();
  RationalMatrix v(m, std::vector<Rational>(m));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t j = 0; j < m; ++j) v[s][j] = Rational(ipow(st.theta[j], static_cast<unsigned long>(s)));
  }
  auto det = [](RationalMatrix a) {
    Rational d = 1;
    const std::size_t k = a.size();
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && a[p][c] == 0) ++p;
      if (p == k) return Rational(0);
      if (p != c) {
        std::swap(a[p], a[c]);
        d = -d;
      }
      d *= a[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        const Rational f = a[r][c] / a[c][c];
        for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      }
    }
    return d;
  };
  const Rational base = det(v);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < m; ++j) {
    RationalMatrix w = v;
    for (std::size_t s = 0; s < m; ++s) w[s][j] = walks[s];
    out.push_back(det(w) / base);
  }
  return out;
}

}  // namespace

TEST_CASE("degree equals the number of rank-2 matrices") {
  for (int n = 2; n <= 9; ++n) {
    for (long q : {2L, 3L, 4L, 5L, 7L}) CHECK(degree(n, q) == count_rank(n, q, 2));
  }
}

TEST_CASE("eigenvalues of small instances") {
  CHECK(eigenvalues(4, 2).theta == ints({35, 3, -5}));
  CHECK(eigenvalues(5, 2).theta == ints({155, 27, -5}));
  CHECK(eigenvalues(4, 2).diameter == 2);
  CHECK(eigenvalues(7, 3).diameter == 3);
  CHECK_THROWS_AS(eigenvalues(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues(4, 6), std::invalid_argument);
}

TEST_CASE("intersection array of Alt_4(F_2)") {
  const auto ia = intersection_array(4, 2);
  CHECK(ia.b == ints({35, 16, 0}));
  CHECK(ia.c == ints({0, 1, 20}));
  CHECK(ia.a == ints({0, 18, 15}));
  CHECK(ia.k == ints({1, 35, 28}));
}

TEST_CASE("intersection array invariants") {
  for (int n = 2; n <= 11; ++n) {
    for (long q : {2L, 3L, 4L, 5L}) {
      const auto ia = intersection_array(n, q);
      const int d = ia.diameter();
      CHECK(d == n / 2);
      CHECK(ia.c[1] == 1);
      CHECK(ia.b[static_cast<std::size_t>(d)] == 0);
      BigInt total = 0;
      for (int i = 0; i <= d; ++i) {
        const auto u = static_cast<std::size_t>(i);
        CHECK(ia.a[u] + ia.b[u] + ia.c[u] == ia.b[0]);
        CHECK(ia.k[u] == count_rank(n, q, 2 * i));
        total += ia.k[u];
      }
      CHECK(total == space_size(n, q));
    }
  }
}

TEST_CASE("multiplicities") {
  CHECK(spectrum(4, 2).mult == ints({1, 35, 28}));
  for (auto [n, q] : std::vector<std::pair<int, long>>{{4, 2}, {5, 2}, {4, 3}, {6, 2}, {7, 3}, {8, 2}}) {
    CAPTURE(n);
    CAPTURE(q);
    const SpectrumTable st = spectrum(n, q);
    const auto ia = intersection_array(n, q);
    // closed walks at a vertex from the tridiagonal recurrence; |X| times that is tr(A^s)
    const std::size_t m = st.theta.size();
    std::vector<Rational> walks;
    std::vector<Rational> w(m, 0);  // w[i]: walks of length s from vertex 0 to distance i
    w[0] = 1;
    for (std::size_t s = 0; s < m; ++s) {
      walks.push_back(w[0] * Rational(space_size(n, q)));
      std::vector<Rational> nw(m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        if (w[i] == 0) continue;
        nw[i] += w[i] * Rational(ia.a[i]);
        if (i + 1 < m) nw[i + 1] += w[i] * Rational(ia.b[i]);
        if (i > 0) nw[i - 1] += w[i] * Rational(ia.c[i]);
      }
      w = nw;
    }
    const auto oracle = cramer_multiplicities(st, walks);
    for (std::size_t j = 0; j < m; ++j) CHECK(oracle[j] == Rational(st.mult[j]));
  }
}

TEST_CASE("eigenmatrices") {
  const SpectrumTable st = spectrum(4, 2);
  const auto ia = intersection_array(4, 2);
  const EigenMatrices em = eigenmatrices(st, ia);
  const RationalMatrix pq = multiply(em.P, em.Q);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(pq[i][j] == (i == j ? Rational(64) : Rational(0)));
    CHECK(em.Q[0][i] == Rational(st.mult[i]));
  }
  const auto v = distance_polynomials(ia);
  CHECK(v[2](Rational(35)) == 28);
  for (int n = 4; n <= 8; ++n) {
    const auto s = spectrum(n, 3);
    const auto polys = distance_polynomials(intersection_array(n, 3));
    for (std::size_t j = 1; j < s.theta.size(); ++j) {
      Rational sum = 0;
      for (const auto& p : polys) sum += p(Rational(s.theta[j]));
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("closed 3-walks") {
  CHECK(delta_walks(4, 2) == 630);
  CHECK(delta_walks(5, 2) == 6510);
  CHECK(delta_walks(4, 3) == 25220);
  CHECK(delta_walks(3, 3) == 650);
  for (int n = 3; n <= 10; ++n) {
    for (long q : {2L, 3L, 4L, 5L}) {
      const auto st = spectrum(n, q);
      BigInt tr = 0;
      for (std::size_t j = 0; j < st.theta.size(); ++j) tr += st.mult[j] * st.theta[j] * st.theta[j] * st.theta[j];
      CHECK(tr == delta_walks(n, q) * space_size(n, q));
    }
  }
}

TEST_CASE("k = 3 threshold") {
  CHECK(t_threshold(6, 2) == 27);
  for (int n = 6; n <= 14; n += 2) {
    for (long q : {2L, 3L, 4L, 5L}) CHECK(t_threshold(n, q) == Rational(ipow(q, n - 1) - q * q - 1));
  }
  for (int n = 6; n <= 12; ++n) {
    for (long q : {2L, 3L, 4L, 5L}) {
      const auto st = eigenvalues(n, q);
      const int s = threshold_index(st);
      CHECK(s == n / 2 - 2);
      const Rational t = t_threshold(n, q);
      CHECK(Rational(st.theta[static_cast<std::size_t>(s)]) >= t);
      CHECK(Rational(st.theta[static_cast<std::size_t>(s + 1)]) < t);
    }
  }
  CHECK_THROWS_AS(t_threshold(5, 2), std::invalid_argument);
}

TEST_CASE("n = 4 and 5 give strongly regular graphs") {
  for (int n : {4, 5}) {
    for (long q : {2L, 3L, 4L}) {
      const auto ia = intersection_array(n, q);
      CHECK(ia.diameter() == 2);
      // lambda = a_1, mu = c_2, and k(k - lambda - 1) = mu (v - k - 1)
      const BigInt k = ia.b[0];
      CHECK(k * (k - ia.a[1] - 1) == ia.c[2] * (space_size(n, q) - k - 1));
    }
  }
}
