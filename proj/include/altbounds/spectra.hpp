#pragma once

// Closed-form spectral data of the alternating forms graph: the graph on
// Alt_n(F_q) with A ~ B iff rank(A - B) = 2. It is distance-regular with
// diameter floor(n/2), so everything here is exact and independent of the
// (exponentially large) graph itself.

#include <vector>

#include "altbounds/exact.hpp"
#include "altbounds/linalg.hpp"
#include "altbounds/polynomial.hpp"

namespace altbounds {

struct SpectrumTable {
  int n = 0;
  long q = 0;
  int diameter = 0;
  std::vector<BigInt> theta;  // theta[0] > theta[1] > ... > theta[diameter]
  std::vector<BigInt> mult;   // empty until multiplicities() fills it
};

struct IntersectionArray {
  int n = 0;
  long q = 0;
  std::vector<BigInt> b;
  std::vector<BigInt> c;
  std::vector<BigInt> a;
  std::vector<BigInt> k;  // valency of the distance-i relation

  int diameter() const { return static_cast<int>(b.size()) - 1; }
};

struct EigenMatrices {
  RationalMatrix P;  // P[j][i] = v_i(theta_j)
  RationalMatrix Q;  // |X| P^{-1}; Q[i][j] is the Q-number Q_j(i)
};

// (q^n - 1)(q^{n-1} - 1)/(q^2 - 1), the valency
BigInt degree(int n, long q);

// All of the following throw std::invalid_argument when n < 2 or q is not a
// prime power.
SpectrumTable eigenvalues(int n, long q);
IntersectionArray intersection_array(int n, long q);

// v_0 = 1, v_1 = x, c_{i+1} v_{i+1} = (x - a_i) v_i - b_{i-1} v_{i-1}
std::vector<Polynomial> distance_polynomials(const IntersectionArray& ia);

// Fills mult[j] = |X| / sum_i v_i(theta_j)^2 / k_i. Throws std::logic_error
// if a multiplicity comes out non-integral or the trace identities fail.
SpectrumTable multiplicities(SpectrumTable st, const IntersectionArray& ia);

// Eigenvalues with multiplicities in one call.
SpectrumTable spectrum(int n, long q);

EigenMatrices eigenmatrices(const SpectrumTable& st, const IntersectionArray& ia);

// Number of closed 3-walks at a vertex, delta * a_1.
BigInt delta_walks(int n, long q);

// The k = 3 ratio-bound threshold; requires n >= 6.
Rational t_threshold(int n, long q);

// Largest s with theta_s >= t_threshold(n, q); requires n >= 6.
int threshold_index(const SpectrumTable& st);

}  // namespace altbounds
