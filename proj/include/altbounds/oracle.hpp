#pragma once

// Brute-force ground truth for small parameters: the alternating forms graph
// built explicitly from rank computations, and exhaustive checks against the
// closed-form data in spectra.hpp.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "altbounds/exact.hpp"
#include "altbounds/gf.hpp"
#include "altbounds/spectra.hpp"

namespace altbounds {

// Raised when an instance is too large for explicit construction.
class ResourceGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kMaxOracleVertices = 1ULL << 20;
// total neighbor-list length N * degree (4 bytes each)
inline constexpr std::uint64_t kMaxOracleAdjacency = 1ULL << 27;
inline constexpr std::uint64_t kMaxAlphaVertices = 1ULL << 14;

using Vertex = std::uint32_t;

// Vertex i is decode(i). The graph is a Cayley graph of (Alt_n(F_q), +), so
// adjacency is stored as neighbor lists obtained by translating the rank-2
// matrices around the zero vertex.
class DenseGraph {
 public:
  DenseGraph(int n, FieldSpec field);

  int n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  std::uint32_t size() const { return size_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  // Index of decode(u) + decode(v) and decode(u) - decode(v).
  Vertex add(Vertex u, Vertex v) const;
  Vertex sub(Vertex u, Vertex v) const;

 private:
  int n_;
  FieldSpec field_;
  int digits_;
  std::uint32_t size_;
  std::vector<std::vector<Vertex>> adj_;
};

// Throws ResourceGuardError when q^{n(n-1)/2} exceeds kMaxOracleVertices or the
// adjacency lists would exceed kMaxOracleAdjacency entries.
DenseGraph build_graph(int n, long q);

std::vector<int> bfs_distances(const DenseGraph& g, Vertex source);

struct GeodesicCheck {
  bool pass = false;
  std::optional<Vertex> counterexample;
  std::vector<std::uint64_t> distance_histogram;
};
GeodesicCheck verify_geodesic_rank(const DenseGraph& g);

struct DistanceRegularityCheck {
  bool pass = false;
  bool constant = false;          // counts independent of the vertex pair
  bool matches_formulas = false;  // equal to intersection_array(n, q)
  std::vector<std::uint64_t> b, c, a;
  std::string message;
};
// Uses vertex 0 plus extra_sources random sources drawn with seed.
DistanceRegularityCheck verify_distance_regularity(const DenseGraph& g, int extra_sources = 3,
                                                   std::uint64_t seed = 1);

struct SpectrumCheck {
  bool pass = false;
  bool annihilation_checked = false;
  bool annihilates = false;
  bool traces_match = false;
  std::vector<BigInt> traces;  // tr(A^s), s = 0..2D
  std::string message;
};
// Annihilation runs as a dense integer product when N <= max_dense_vertices.
SpectrumCheck verify_spectrum(const DenseGraph& g, const SpectrumTable& st, std::uint32_t max_dense_vertices = 4096);

// (A^s)_{v,v}
BigInt closed_walks(const DenseGraph& g, int s, Vertex v = 0);

// Compares closed walks of lengths 0..s_max at `samples` random vertices with vertex 0.
bool verify_walk_regularity(const DenseGraph& g, int s_max, int samples = 10, std::uint64_t seed = 1);

struct AlphaResult {
  std::uint64_t size = 0;
  std::vector<Vertex> witness;
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
};

// Largest set of vertices pairwise at graph distance > k. Exact branch and
// bound with greedy-coloring bounds; stops after node_budget search nodes and
// reports the best set found with proven_optimal = false.
AlphaResult exact_alpha_k(const DenseGraph& g, int k, std::uint64_t node_budget = 100'000'000);

// Pairwise rank distance >= 2(k+1) for every pair, by direct rank computation.
bool validate_witness(const DenseGraph& g, const std::vector<Vertex>& witness, int k);

}  // namespace altbounds
