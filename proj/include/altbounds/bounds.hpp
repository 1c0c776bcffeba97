#pragma once

// Upper bounds on A_q(n, 2d), the largest size of a set of n x n alternating
// matrices over F_q with pairwise rank distance at least 2d. All values are
// exact; d ranges over 1..floor(n/2).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altbounds/exact.hpp"
#include "altbounds/ratlp.hpp"

namespace altbounds {

// A rational-valued bound together with its floor.
struct ExactBound {
  Rational exact;
  BigInt floored;
};

struct LPBound {
  ExactBound bound;
  LinearProgram program;
  LPSolution solution;
};

// q^{n(n-1)/(2 floor(n/2)) * (floor(n/2) - d + 1)}
BigInt singleton_like(long q, int n, int d);

// Independence number bound |X| (-theta_min) / (theta_0 - theta_min); applies to d = 2.
ExactBound hoffman(long q, int n);
// Best degree-2 polynomial ratio bound on alpha_2; applies to d = 3. Requires n >= 6.
ExactBound ratio_k2(long q, int n);
// Best degree-3 polynomial ratio bound on alpha_3; applies to d = 4. Requires n >= 8.
ExactBound ratio_k3(long q, int n);

// Minor-polynomial LP: minimize sum_i m(theta_i) f(theta_i) over polynomials
// f of degree <= k with f(theta_0) = 1 and f(theta_i) >= 0. Bounds alpha_k,
// hence A_q(n, 2(k+1)). k = 0 is allowed and gives the whole space.
LPBound ratio_general_lp(long q, int n, int k);

// Delsarte LP over the inner distribution beta_0..beta_D with Q-number constraints.
LPBound delsarte_lp(long q, int n, int d);

// Linear code dimension bound from the Alt_n(U) anticode with dim U = 2d - 1.
int code_anticode_dim(int n, int d);
// |C| <= floor(q^{n(n-1)/2} / |ball of rank radius floor((2d-1)/2)|)
BigInt sphere_packing(long q, int n, int d);

enum class Perfectness { impossible_even_d, not_tight, tight };
std::string to_string(Perfectness p);
Perfectness perfectness_check(long q, int n, int d);

// Total-distance bound; only applicable at d = floor(n/2).
std::optional<BigInt> total_distance(long q, int n, int d, std::string* reason = nullptr);
// dim C <= n/2 for linear codes with 2d = n, n even and q odd.
std::optional<int> gq_linear_dim(int n, long q);

struct BoundEntry {
  std::optional<BigInt> value;       // cardinality bound, clamped to the whole space
  std::optional<Rational> exact;     // LP and ratio bounds before flooring
  std::string reason;                // why the bound does not apply
  bool clamped = false;
  bool linear_only = false;          // holds for linear codes only
  bool applicable() const { return value.has_value(); }
};

struct BoundReport {
  long q = 0;
  int n = 0;
  int d = 0;
  std::map<std::string, BoundEntry> entries;
  std::map<std::string, bool> equivalences;  // only the checks that apply
  Perfectness perfectness = Perfectness::not_tight;

  // Minimum applicable bound valid for all codes (linear-only entries excluded).
  BigInt best() const;
};

// Names in report column order.
const std::vector<std::string>& bound_names();
const std::vector<std::string>& equivalence_names();

// Throws std::invalid_argument unless 1 <= d <= floor(n/2).
BoundReport full_report(long q, int n, int d);

}  // namespace altbounds
