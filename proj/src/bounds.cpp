#include "altbounds/bounds.hpp"

#include <stdexcept>
#include <string>

#include "altbounds/altforms.hpp"
#include "altbounds/gf.hpp"
#include "altbounds/spectra.hpp"

namespace altbounds {

namespace {

void require_params(long q, int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!prime_power_decomposition(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

void require_distance(int n, int d) {
  if (d < 1 || d > n / 2) {
    throw std::invalid_argument("d = " + std::to_string(d) + " must lie in [1, floor(n/2)] = [1, " +
                                std::to_string(n / 2) + "]");
  }
}

ExactBound make_bound(Rational r) {
  r.canonicalize();
  return {r, floor(r)};
}

}  // namespace

BigInt singleton_like(long q, int n, int d) {
  require_params(q, n);
  require_distance(n, d);
  const int half = n / 2;
  const long num = static_cast<long>(n) * (n - 1) * (half - d + 1);
  const long den = 2L * half;
  if (num % den != 0) throw std::logic_error("Singleton-like exponent is not integral");
  return ipow(q, static_cast<unsigned long>(num / den));
}

ExactBound hoffman(long q, int n) {
  const SpectrumTable st = eigenvalues(n, q);
  const BigInt& top = st.theta.front();
  const BigInt& bottom = st.theta.back();
  return make_bound(Rational(space_size(n, q) * -bottom, top - bottom));
}

ExactBound ratio_k2(long q, int n) {
  if (n < 6) throw std::invalid_argument("ratio_k2: spectrum too small, needs n >= 6");
  const SpectrumTable st = eigenvalues(n, q);
  // theta_i is the largest eigenvalue with theta_i <= -1
  int i = -1;
  for (int x = 0; x <= st.diameter && i < 0; ++x) {
    if (st.theta[x] <= -1) i = x;
  }
  if (i < 1) throw std::logic_error("ratio_k2: no usable eigenvalue <= -1");
  const BigInt& t0 = st.theta[0];
  const BigInt& ti = st.theta[i];
  const BigInt& tp = st.theta[i - 1];
  return make_bound(Rational(space_size(n, q) * (t0 + ti * tp), (t0 - ti) * (t0 - tp)));
}

ExactBound ratio_k3(long q, int n) {
  if (n < 8) throw std::invalid_argument("ratio_k3 needs n >= 8");
  const SpectrumTable st = eigenvalues(n, q);
  const int s = threshold_index(st);
  const int r = st.diameter;
  if (s + 1 >= r) throw std::logic_error("ratio_k3: threshold index leaves no room below theta_r");
  const BigInt walks = delta_walks(n, q);
  const BigInt& t0 = st.theta[0];
  const BigInt& ts = st.theta[s];
  const BigInt& ts1 = st.theta[s + 1];
  const BigInt& tr = st.theta[r];
  const BigInt num = walks - t0 * (ts + ts1 + tr) - ts * ts1 * tr;
  const BigInt den = (t0 - ts) * (t0 - ts1) * (t0 - tr);
  return make_bound(Rational(space_size(n, q) * num, den));
}

LPBound ratio_general_lp(long q, int n, int k) {
  const SpectrumTable st = spectrum(n, q);
  const int r = st.diameter;
  if (k < 0 || k > r) throw std::invalid_argument("k must lie in [0, floor(n/2)]");

  // Divided differences as linear forms over (x_0, ..., x_r), where x_i = f(theta_i):
  // dd[i][j] = f[theta_i, ..., theta_j].
  const std::size_t size = static_cast<std::size_t>(r) + 1;
  using Form = std::vector<Rational>;
  std::vector<std::vector<Form>> dd(size, std::vector<Form>(size, Form(size, Rational(0))));
  for (std::size_t i = 0; i < size; ++i) dd[i][i][i] = 1;
  for (std::size_t len = 1; len < size; ++len) {
    for (std::size_t i = 0; i + len < size; ++i) {
      const std::size_t j = i + len;
      const Rational gap = Rational(st.theta[j] - st.theta[i]);
      for (std::size_t v = 0; v < size; ++v) dd[i][j][v] = (dd[i + 1][j][v] - dd[i][j - 1][v]) / gap;
    }
  }

  std::vector<Rational> objective;
  for (int i = 1; i <= r; ++i) objective.emplace_back(st.mult[i]);
  LinearProgram lp(Sense::minimize, objective);
  for (int i = 1; i <= r; ++i) lp.set_variable_name(static_cast<std::size_t>(i - 1), "x" + std::to_string(i));
  lp.set_objective_offset(Rational(st.mult[0]));  // x_0 = f(theta_0) = 1
  for (int s = k + 1; s <= r; ++s) {
    const Form& form = dd[0][static_cast<std::size_t>(s)];
    lp.add_constraint(Form(form.begin() + 1, form.end()), Relation::equal, Rational(-form[0]));
  }
  LPSolution sol = solve(lp);
  if (sol.status != LPStatus::optimal) {
    throw std::logic_error("minor-polynomial LP is " + to_string(sol.status));
  }
  return {make_bound(sol.value), std::move(lp), std::move(sol)};
}

LPBound delsarte_lp(long q, int n, int d) {
  require_params(q, n);
  require_distance(n, d);
  const SpectrumTable st = spectrum(n, q);
  const IntersectionArray ia = intersection_array(n, q);
  const EigenMatrices em = eigenmatrices(st, ia);
  const int D = st.diameter;

  // Variables beta_d..beta_D; beta_0 = 1 enters through the offset and the right-hand sides.
  LinearProgram lp(Sense::maximize, std::vector<Rational>(static_cast<std::size_t>(D - d + 1), Rational(1)));
  lp.set_objective_offset(Rational(1));
  for (int i = d; i <= D; ++i) lp.set_variable_name(static_cast<std::size_t>(i - d), "b" + std::to_string(i));
  for (int j = 1; j <= D; ++j) {
    std::vector<Rational> row;
    for (int i = d; i <= D; ++i) row.push_back(em.Q[i][j]);
    lp.add_constraint(std::move(row), Relation::greater_equal, Rational(-em.Q[0][j]));
  }
  LPSolution sol = solve(lp);
  if (sol.status != LPStatus::optimal) throw std::logic_error("Delsarte LP is " + to_string(sol.status));
  return {make_bound(sol.value), std::move(lp), std::move(sol)};
}

int code_anticode_dim(int n, int d) {
  require_distance(n, d);
  if (2 * d - 1 > n) throw std::invalid_argument("anticode needs 2d - 1 <= n");
  return (n * (n - 1) - 2 * (d - 1) * (2 * d - 1)) / 2;
}

BigInt sphere_packing(long q, int n, int d) {
  require_params(q, n);
  require_distance(n, d);
  const int t = (2 * d - 1) / 2;
  return floor(Rational(space_size(n, q), ball_volume(n, q, t)));
}

std::string to_string(Perfectness p) {
  switch (p) {
    case Perfectness::impossible_even_d:
      return "perfect-impossible-even-d";
    case Perfectness::not_tight:
      return "not-tight";
    case Perfectness::tight:
      return "tight";
  }
  return "unknown";
}

Perfectness perfectness_check(long q, int n, int d) {
  require_params(q, n);
  require_distance(n, d);
  if (d % 2 == 0) return Perfectness::impossible_even_d;
  const BigInt whole = space_size(n, q);
  const BigInt ball = ball_volume(n, q, d - 1);
  if (mpz_divisible_p(whole.get_mpz_t(), ball.get_mpz_t()) != 0 && whole / ball >= 2) return Perfectness::tight;
  return Perfectness::not_tight;
}

std::optional<BigInt> total_distance(long q, int n, int d, std::string* reason) {
  require_params(q, n);
  require_distance(n, d);
  // n even: h = n/2, eps = q^{1-n}; n odd: h = (n-1)/2, eps = q^{3-2n}
  const int half = n / 2;
  const long eps_exp = n % 2 == 0 ? n - 1 : 2 * n - 3;
  const Rational eps(BigInt(1), ipow(q, static_cast<unsigned long>(eps_exp)));
  const Rational slack = Rational(d - half) + eps;
  if (slack <= 0) {
    if (reason) {
      *reason = n % 2 == 0 ? "requires d > n/2 - q^(1-n)" : "requires d > (n-1)/2 - q^(3-2n)";
    }
    return std::nullopt;
  }
  return floor(Rational(d - half + 1) / slack);
}

std::optional<int> gq_linear_dim(int n, long q) {
  if (n % 2 != 0 || q % 2 == 0) return std::nullopt;
  return n / 2;
}

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names = {
      "singleton", "hoffman",        "ratio-k2",       "ratio-k3",       "minor-lp",
      "delsarte-lp", "code-anticode", "sphere-packing", "total-distance", "gq-linear-dim"};
  return names;
}

const std::vector<std::string>& equivalence_names() {
  static const std::vector<std::string> names = {"hoffman=singleton", "ratio-k2=singleton", "ratio-k3=singleton",
                                                 "minor-lp=delsarte-lp"};
  return names;
}

BigInt BoundReport::best() const {
  std::optional<BigInt> out;
  for (const auto& [name, entry] : entries) {
    if (!entry.value || entry.linear_only) continue;
    if (!out || *entry.value < *out) out = *entry.value;
  }
  return out ? *out : space_size(n, q);
}

BoundReport full_report(long q, int n, int d) {
  require_params(q, n);
  require_distance(n, d);
  BoundReport rep;
  rep.q = q;
  rep.n = n;
  rep.d = d;
  const BigInt whole = space_size(n, q);

  auto put = [&](const std::string& name, BigInt value, std::optional<Rational> exact = std::nullopt) {
    BoundEntry e;
    if (value > whole) {
      value = whole;
      e.clamped = true;
    }
    e.value = std::move(value);
    e.exact = std::move(exact);
    rep.entries[name] = std::move(e);
  };
  auto na = [&](const std::string& name, std::string reason) {
    BoundEntry e;
    e.reason = std::move(reason);
    rep.entries[name] = std::move(e);
  };

  const BigInt singleton = singleton_like(q, n, d);
  put("singleton", singleton);

  if (d == 2) {
    const ExactBound h = hoffman(q, n);
    put("hoffman", h.floored, h.exact);
    rep.equivalences["hoffman=singleton"] = h.exact == Rational(singleton);
  } else {
    na("hoffman", "bounds A_q(n,4) only (d = 2)");
  }
  if (d == 3) {
    const ExactBound b = ratio_k2(q, n);
    put("ratio-k2", b.floored, b.exact);
    rep.equivalences["ratio-k2=singleton"] = b.exact == Rational(singleton);
  } else {
    na("ratio-k2", "bounds A_q(n,6) only (d = 3)");
  }
  if (d == 4) {
    const ExactBound b = ratio_k3(q, n);
    put("ratio-k3", b.floored, b.exact);
    rep.equivalences["ratio-k3=singleton"] = b.exact == Rational(singleton);
  } else {
    na("ratio-k3", "bounds A_q(n,8) only (d = 4)");
  }

  const LPBound minor = ratio_general_lp(q, n, d - 1);
  put("minor-lp", minor.bound.floored, minor.bound.exact);
  const LPBound del = delsarte_lp(q, n, d);
  put("delsarte-lp", del.bound.floored, del.bound.exact);
  rep.equivalences["minor-lp=delsarte-lp"] = minor.bound.exact == del.bound.exact;

  put("code-anticode", ipow(q, static_cast<unsigned long>(code_anticode_dim(n, d))));
  put("sphere-packing", sphere_packing(q, n, d));

  std::string reason;
  if (auto td = total_distance(q, n, d, &reason)) {
    put("total-distance", *td);
  } else {
    na("total-distance", reason);
  }

  if (2 * d != n) {
    na("gq-linear-dim", "requires 2d = n");
  } else if (auto dim = gq_linear_dim(n, q)) {
    put("gq-linear-dim", ipow(q, static_cast<unsigned long>(*dim)));
    rep.entries["gq-linear-dim"].linear_only = true;
  } else {
    na("gq-linear-dim", "requires n even and q odd");
  }

  rep.perfectness = perfectness_check(q, n, d);
  return rep;
}

}  // namespace altbounds
