#include "doctest.h"

#include "altbounds/altforms.hpp"
#include "altbounds/bounds.hpp"
#include "altbounds/spectra.hpp"

using namespace altbounds;

TEST_CASE("singleton-like values") {
  CHECK(singleton_like(2, 4, 2) == 8);
  CHECK(singleton_like(2, 4, 1) == 64);
  CHECK(singleton_like(2, 6, 3) == 32);
  CHECK(singleton_like(2, 7, 3) == 128);
  CHECK(singleton_like(3, 5, 2) == 243);
  CHECK_THROWS_AS(singleton_like(2, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(singleton_like(2, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(singleton_like(6, 4, 1), std::invalid_argument);
}

TEST_CASE("hoffman ratio bound") {
  CHECK(hoffman(2, 4).exact == 8);
  CHECK(hoffman(2, 4).floored == 8);
  CHECK(hoffman(2, 5).exact == 32);
  // independent closed form |X| (-theta_min)/(theta_0 - theta_min)
  for (int n = 4; n <= 9; ++n) {
    for (long q : {2L, 3L, 7L}) {
      const auto st = eigenvalues(n, q);
      Rational want(space_size(n, q) * -st.theta.back(), st.theta.front() - st.theta.back());
      want.canonicalize();
      CHECK(hoffman(q, n).exact == want);
    }
  }
}

TEST_CASE("higher ratio bounds") {
  CHECK(ratio_k2(2, 6).exact == 32);
  CHECK(ratio_k2(2, 7).exact == 128);
  CHECK(ratio_k3(2, 8).exact == 128);
  CHECK(ratio_k3(3, 8).exact == Rational(ipow(3, 7)));
  CHECK_THROWS_AS(ratio_k2(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(ratio_k3(2, 7), std::invalid_argument);
}

TEST_CASE("minor polynomial LP") {
  CHECK(ratio_general_lp(2, 6, 2).bound.exact == 32);
  CHECK(ratio_general_lp(2, 8, 3).bound.exact == 128);
  CHECK(ratio_general_lp(2, 6, 0).bound.exact == Rational(space_size(6, 2)));
  for (int n = 4; n <= 10; ++n) {
    for (long q : {2L, 3L}) {
      CAPTURE(n);
      CAPTURE(q);
      CHECK(ratio_general_lp(q, n, 1).bound.exact == hoffman(q, n).exact);
      if (n >= 6) CHECK(ratio_general_lp(q, n, 2).bound.exact == ratio_k2(q, n).exact);
      if (n >= 8) CHECK(ratio_general_lp(q, n, 3).bound.exact == ratio_k3(q, n).exact);
    }
  }
  CHECK_THROWS_AS(ratio_general_lp(2, 6, 4), std::invalid_argument);
  CHECK_THROWS_AS(ratio_general_lp(2, 6, -1), std::invalid_argument);
}

TEST_CASE("divided-difference rows match the closed form") {
  // f[theta_0..theta_s] = sum_i f(theta_i) / prod_{j != i} (theta_i - theta_j)
  const long q = 3;
  const int n = 9;
  const auto st = eigenvalues(n, q);
  const LPBound lp = ratio_general_lp(q, n, 1);
  const auto& rows = lp.program.constraints();
  // variables x_1..x_D, x_0 folded into the right-hand side; rows for s = 2..D
  REQUIRE(rows.size() == static_cast<std::size_t>(st.diameter - 1));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t s = r + 2;
    std::vector<Rational> w(s + 1);
    for (std::size_t i = 0; i <= s; ++i) {
      Rational den = 1;
      for (std::size_t j = 0; j <= s; ++j) {
        if (j != i) den *= Rational(st.theta[i] - st.theta[j]);
      }
      w[i] = 1 / den;
    }
    CHECK(rows[r].relation == Relation::equal);
    CHECK(rows[r].rhs == -w[0]);
    for (std::size_t i = 1; i < rows[r].coeffs.size() + 1; ++i) {
      CHECK(rows[r].coeffs[i - 1] == (i <= s ? w[i] : Rational(0)));
    }
  }
}

TEST_CASE("delsarte LP") {
  CHECK(delsarte_lp(2, 4, 2).bound.exact == 8);
  CHECK(delsarte_lp(2, 6, 3).bound.exact == 32);
  for (int n = 3; n <= 8; ++n) {
    for (long q : {2L, 3L}) CHECK(delsarte_lp(q, n, 1).bound.exact == Rational(space_size(n, q)));
  }
  const LPBound lp = delsarte_lp(2, 4, 2);
  REQUIRE(lp.solution.status == LPStatus::optimal);
  CHECK(is_feasible(lp.program, lp.solution.assignment));
}

TEST_CASE("code-anticode") {
  CHECK(code_anticode_dim(4, 2) == 3);
  CHECK(code_anticode_dim(6, 3) == 5);
  for (int n = 2; n <= 10; ++n) CHECK(code_anticode_dim(n, 1) == n * (n - 1) / 2);
  CHECK_THROWS_AS(code_anticode_dim(4, 3), std::invalid_argument);
}

TEST_CASE("sphere packing and perfectness") {
  CHECK(sphere_packing(2, 4, 2) == 64);
  CHECK(sphere_packing(2, 5, 2) == 1024);
  CHECK(sphere_packing(2, 4, 1) == 64);
  CHECK(sphere_packing(2, 6, 3) == ipow(2, 15) / (1 + count_rank(6, 2, 2)));
  CHECK(perfectness_check(2, 4, 2) == Perfectness::impossible_even_d);
  CHECK(perfectness_check(2, 4, 1) == Perfectness::tight);
  CHECK(ball_volume(6, 2, 2) == 652);
  CHECK(perfectness_check(2, 6, 3) == Perfectness::not_tight);
  CHECK(to_string(Perfectness::not_tight) == "not-tight");
}

TEST_CASE("total distance") {
  CHECK(total_distance(2, 4, 2) == BigInt(8));
  CHECK(total_distance(2, 5, 2) == BigInt(128));
  std::string why;
  CHECK_FALSE(total_distance(2, 6, 2, &why).has_value());
  CHECK_FALSE(why.empty());
  for (int n = 4; n <= 12; ++n) {
    for (long q : {2L, 3L, 4L, 5L}) {
      const BigInt want = ipow(q, n % 2 == 0 ? n - 1 : 2 * n - 3);
      CHECK(total_distance(q, n, n / 2) == want);
    }
  }
}

TEST_CASE("linear codes with q odd") {
  CHECK(gq_linear_dim(4, 3) == 2);
  CHECK_FALSE(gq_linear_dim(5, 3).has_value());
  CHECK_FALSE(gq_linear_dim(4, 2).has_value());
}

TEST_CASE("full reports of the worked instances") {
  const BoundReport r = full_report(2, 4, 2);
  CHECK(r.best() == 8);
  for (const auto& [name, held] : r.equivalences) CHECK(held);
  CHECK(r.equivalences.count("hoffman=singleton") == 1);
  CHECK(r.entries.at("sphere-packing").value == BigInt(64));
  CHECK_FALSE(r.entries.at("ratio-k2").applicable());
  CHECK(r.perfectness == Perfectness::impossible_even_d);

  const BoundReport r6 = full_report(2, 6, 3);
  for (const char* name : {"singleton", "ratio-k2", "minor-lp", "delsarte-lp"}) {
    CHECK(r6.entries.at(name).value == BigInt(32));
  }
  const BoundReport r8 = full_report(2, 8, 4);
  for (const char* name : {"singleton", "ratio-k3", "minor-lp", "delsarte-lp"}) {
    CHECK(r8.entries.at(name).value == BigInt(128));
  }
  const BoundReport g = full_report(3, 4, 2);
  CHECK(g.entries.at("gq-linear-dim").linear_only);
  CHECK(g.entries.at("gq-linear-dim").value == BigInt(9));
  CHECK(full_report(2, 4, 1).entries.at("delsarte-lp").value == BigInt(64));
  CHECK_THROWS_AS(full_report(2, 4, 3), std::invalid_argument);
}

TEST_CASE("dominance and monotonicity") {
  for (int n = 4; n <= 10; ++n) {
    for (long q : {2L, 3L}) {
      std::map<std::string, BigInt> prev;
      for (int d = 1; d <= n / 2; ++d) {
        CAPTURE(n);
        CAPTURE(q);
        CAPTURE(d);
        const BoundReport r = full_report(q, n, d);
        const BigInt del = *r.entries.at("delsarte-lp").value;
        const BigInt ca = ipow(q, static_cast<unsigned long>(code_anticode_dim(n, d)));
        CHECK(del <= sphere_packing(q, n, d));
        CHECK(del <= ca);
        CHECK(singleton_like(q, n, d) <= ca);
        // d = 1 is the whole space for both
        if (d >= 2) CHECK((singleton_like(q, n, d) == ca) == (n == 2 * d));
        for (const auto& [name, e] : r.entries) {
          if (!e.value) continue;
          if (prev.count(name)) CHECK(*e.value <= prev[name]);
          prev[name] = *e.value;
        }
      }
    }
  }
}

TEST_CASE("names") {
  CHECK(bound_names().size() == 10);
  CHECK(bound_names().front() == "singleton");
  CHECK(equivalence_names().size() == 4);
}
