#include "altbounds/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>

#include "altbounds/altforms.hpp"

namespace altbounds {

DenseGraph::DenseGraph(int n, FieldSpec field)
    : n_(n), field_(std::move(field)), digits_(alt_dimension(n)), size_(0) {
  const BigInt total = space_size(n_, field_.q());
  if (total > BigInt(static_cast<unsigned long>(kMaxOracleVertices))) {
    throw ResourceGuardError("Alt_" + std::to_string(n_) + "(F_" + std::to_string(field_.q()) + ") has " +
                             total.get_str() + " vertices, above the oracle limit of 2^20");
  }
  const BigInt entries = total * degree(n_, field_.q());
  if (entries > BigInt(static_cast<unsigned long>(kMaxOracleAdjacency))) {
    throw ResourceGuardError("Alt_" + std::to_string(n_) + "(F_" + std::to_string(field_.q()) + ") needs " +
                             entries.get_str() + " adjacency entries, above the oracle limit of 2^27");
  }
  size_ = static_cast<std::uint32_t>(total.get_ui());

  // Neighbors of 0 are the rank-2 matrices; everything else is a translate.
  std::vector<Vertex> around_zero;
  for (auto it = AltEnumeration(n_, field_).begin(); it.index() < size_; ++it) {
    if (rank(*it) == 2) around_zero.push_back(static_cast<Vertex>(it.index()));
  }
  adj_.resize(size_);
  for (Vertex v = 0; v < size_; ++v) {
    auto& list = adj_[v];
    list.reserve(around_zero.size());
    for (Vertex s : around_zero) list.push_back(add(v, s));
    std::sort(list.begin(), list.end());
  }
}

bool DenseGraph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Vertex DenseGraph::add(Vertex u, Vertex v) const {
  const auto q = static_cast<std::uint32_t>(field_.q());
  if (q == 2) return u ^ v;
  Vertex out = 0, scale = 1;
  for (int k = 0; k < digits_; ++k) {
    out += field_.add(static_cast<FieldValue>(u % q), static_cast<FieldValue>(v % q)) * scale;
    u /= q;
    v /= q;
    scale *= q;
  }
  return out;
}

Vertex DenseGraph::sub(Vertex u, Vertex v) const {
  const auto q = static_cast<std::uint32_t>(field_.q());
  if (q == 2) return u ^ v;
  Vertex out = 0, scale = 1;
  for (int k = 0; k < digits_; ++k) {
    out += field_.sub(static_cast<FieldValue>(u % q), static_cast<FieldValue>(v % q)) * scale;
    u /= q;
    v /= q;
    scale *= q;
  }
  return out;
}

DenseGraph build_graph(int n, long q) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return DenseGraph(n, FieldSpec::of_order(q));
}

std::vector<int> bfs_distances(const DenseGraph& g, Vertex source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

GeodesicCheck verify_geodesic_rank(const DenseGraph& g) {
  GeodesicCheck out;
  const auto dist = bfs_distances(g, 0);
  out.distance_histogram.assign(static_cast<std::size_t>(g.n() / 2) + 1, 0);
  out.pass = true;
  for (Vertex v = 0; v < g.size(); ++v) {
    const int r = rank(decode(v, g.n(), g.field()));
    if (dist[v] < 0 || 2 * dist[v] != r) {
      out.pass = false;
      if (!out.counterexample) out.counterexample = v;
      continue;
    }
    ++out.distance_histogram[static_cast<std::size_t>(dist[v])];
  }
  return out;
}

DistanceRegularityCheck verify_distance_regularity(const DenseGraph& g, int extra_sources, std::uint64_t seed) {
  DistanceRegularityCheck out;
  const std::size_t diameter = static_cast<std::size_t>(g.n() / 2);
  std::vector<std::optional<std::uint64_t>> b(diameter + 1), c(diameter + 1), a(diameter + 1);
  out.constant = true;

  std::vector<Vertex> sources{0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, g.size() - 1);
  for (int i = 0; i < extra_sources; ++i) sources.push_back(pick(rng));

  auto record = [&](std::optional<std::uint64_t>& slot, std::uint64_t value) {
    if (!slot) {
      slot = value;
    } else if (*slot != value) {
      out.constant = false;
    }
  };
  for (Vertex u : sources) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = 0; v < g.size(); ++v) {
      const int i = dist[v];
      if (i < 0 || static_cast<std::size_t>(i) > diameter) {
        out.constant = false;
        out.message = "vertex unreachable or beyond the diameter";
        continue;
      }
      std::uint64_t down = 0, same = 0, up = 0;
      for (Vertex z : g.neighbors(v)) {
        const int dz = dist[z];
        if (dz == i - 1) {
          ++down;
        } else if (dz == i) {
          ++same;
        } else if (dz == i + 1) {
          ++up;
        }
      }
      record(c[static_cast<std::size_t>(i)], down);
      record(a[static_cast<std::size_t>(i)], same);
      record(b[static_cast<std::size_t>(i)], up);
    }
  }
  for (std::size_t i = 0; i <= diameter; ++i) {
    out.b.push_back(b[i].value_or(0));
    out.c.push_back(c[i].value_or(0));
    out.a.push_back(a[i].value_or(0));
  }

  const IntersectionArray ia = intersection_array(g.n(), g.field().q());
  out.matches_formulas = true;
  for (std::size_t i = 0; i <= diameter; ++i) {
    if (ia.b[i] != BigInt(static_cast<unsigned long>(out.b[i])) ||
        ia.c[i] != BigInt(static_cast<unsigned long>(out.c[i])) ||
        ia.a[i] != BigInt(static_cast<unsigned long>(out.a[i]))) {
      out.matches_formulas = false;
      out.message = "recovered intersection numbers differ from the formulas at i = " + std::to_string(i);
      break;
    }
  }
  if (!out.constant && out.message.empty()) out.message = "intersection numbers depend on the vertex pair";
  out.pass = out.constant && out.matches_formulas;
  return out;
}

namespace {

using Wide = __int128;

std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("oracle integer arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

BigInt to_big(Wide x) {
  const bool negative = x < 0;
  unsigned __int128 m = negative ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
  BigInt out = 0;
  BigInt scale = 1;
  while (m != 0) {
    out += scale * BigInt(static_cast<unsigned long>(m % 1000000000ULL));
    m /= 1000000000ULL;
    scale *= 1000000000UL;
  }
  return negative ? BigInt(-out) : out;
}

// y = A x for the adjacency matrix
std::vector<std::int64_t> apply_adjacency(const DenseGraph& g, const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> y(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    Wide acc = 0;
    for (Vertex w : g.neighbors(v)) acc += x[w];
    y[v] = narrow(acc);
  }
  return y;
}

}  // namespace

SpectrumCheck verify_spectrum(const DenseGraph& g, const SpectrumTable& st, std::uint32_t max_dense_vertices) {
  SpectrumCheck out;
  const std::uint32_t size = g.size();
  if (st.n != g.n() || st.q != g.field().q() || st.mult.size() != st.theta.size()) {
    out.message = "spectrum table does not describe this graph";
    return out;
  }

  // prod_x (A - theta_x I) applied column by column; the matrix is N x N and
  // each column is one exact integer vector.
  if (size <= max_dense_vertices) {
    out.annihilation_checked = true;
    out.annihilates = true;
    for (Vertex col = 0; col < size && out.annihilates; ++col) {
      std::vector<std::int64_t> x(size, 0);
      x[col] = 1;
      for (const BigInt& theta : st.theta) {
        const std::int64_t t = theta.get_si();
        std::vector<std::int64_t> y = apply_adjacency(g, x);
        for (Vertex v = 0; v < size; ++v) y[v] = narrow(static_cast<Wide>(y[v]) - static_cast<Wide>(t) * x[v]);
        x = std::move(y);
      }
      out.annihilates = std::all_of(x.begin(), x.end(), [](std::int64_t e) { return e == 0; });
    }
    if (!out.annihilates) out.message = "the minimal polynomial from the spectrum does not annihilate A";
  }

  // tr(A^s) for s = 0..2D from w_j = A^j e_v: (A^{a+b})_{vv} = <w_a, w_b>.
  const int D = st.diameter;
  std::vector<Wide> traces(static_cast<std::size_t>(2 * D) + 1, 0);
  for (Vertex v = 0; v < size; ++v) {
    std::vector<std::vector<std::int64_t>> w;
    w.emplace_back(size, 0);
    w[0][v] = 1;
    for (int j = 1; j <= D; ++j) w.push_back(apply_adjacency(g, w.back()));
    for (int s = 0; s <= 2 * D; ++s) {
      const int lo = s / 2, hi = s - s / 2;
      Wide dot = 0;
      for (Vertex u = 0; u < size; ++u) dot += static_cast<Wide>(w[lo][u]) * w[hi][u];
      traces[static_cast<std::size_t>(s)] += dot;
    }
  }
  out.traces_match = true;
  for (int s = 0; s <= 2 * D; ++s) {
    BigInt expected = 0;
    for (std::size_t j = 0; j < st.theta.size(); ++j) {
      expected += st.mult[j] * ipow(st.theta[j], static_cast<unsigned long>(s));
    }
    out.traces.push_back(to_big(traces[static_cast<std::size_t>(s)]));
    if (out.traces.back() != expected) {
      out.traces_match = false;
      if (out.message.empty()) out.message = "trace of A^" + std::to_string(s) + " disagrees with the spectrum";
    }
  }
  out.pass = out.traces_match && (!out.annihilation_checked || out.annihilates);
  return out;
}

BigInt closed_walks(const DenseGraph& g, int s, Vertex v) {
  if (s < 0) throw std::invalid_argument("walk length must be non-negative");
  std::vector<BigInt> x(g.size(), BigInt(0));
  x[v] = 1;
  for (int step = 0; step < s; ++step) {
    std::vector<BigInt> y(g.size(), BigInt(0));
    for (Vertex u = 0; u < g.size(); ++u) {
      if (x[u] == 0) continue;
      for (Vertex w : g.neighbors(u)) y[w] += x[u];
    }
    x = std::move(y);
  }
  return x[v];
}

bool verify_walk_regularity(const DenseGraph& g, int s_max, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, g.size() - 1);
  std::vector<BigInt> at_zero;
  for (int s = 0; s <= s_max; ++s) at_zero.push_back(closed_walks(g, s, 0));
  for (int i = 0; i < samples; ++i) {
    const Vertex v = pick(rng);
    for (int s = 0; s <= s_max; ++s) {
      if (closed_walks(g, s, v) != at_zero[static_cast<std::size_t>(s)]) return false;
    }
  }
  return true;
}

namespace {

// Maximum clique over a bitset compatibility graph (MCQ-style: greedy
// coloring gives the bound, vertices expanded in reverse color order).
class CliqueSearch {
 public:
  CliqueSearch(std::vector<std::vector<std::uint64_t>> adj, std::uint64_t budget)
      : adj_(std::move(adj)), words_(adj_.empty() ? 0 : adj_.front().size()), budget_(budget) {}

  void seed(std::vector<std::size_t> clique) { best_ = std::move(clique); }

  void run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) all[v / 64] |= 1ULL << (v % 64);
    std::vector<std::size_t> current;
    expand(current, all);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  bool exhausted() const { return !stopped_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  using Bits = std::vector<std::uint64_t>;

  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  // Greedy sequential coloring of P; fills order/colors with nondecreasing colors.
  void color(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
    Bits uncolored = p;
    std::size_t k = 0;
    while (!empty(uncolored)) {
      ++k;
      Bits candidates = uncolored;
      while (!empty(candidates)) {
        std::size_t v = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          if (candidates[w] != 0) {
            v = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
            break;
          }
        }
        uncolored[v / 64] &= ~(1ULL << (v % 64));
        candidates[v / 64] &= ~(1ULL << (v % 64));
        for (std::size_t w = 0; w < words_; ++w) candidates[w] &= ~adj_[v][w];
        order.push_back(v);
        colors.push_back(k);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bits p) {
    if (stopped_) return;
    if (++nodes_ > budget_) {
      stopped_ = true;
      return;
    }
    std::vector<std::size_t> order, colors;
    color(p, order, colors);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colors[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (empty(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      if (stopped_) return;
      p[v / 64] &= ~(1ULL << (v % 64));
    }
  }

  std::vector<Bits> adj_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::vector<std::size_t> best_;
};

}  // namespace

AlphaResult exact_alpha_k(const DenseGraph& g, int k, std::uint64_t node_budget) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  AlphaResult out;
  if (k == 0) {
    out.size = g.size();
    out.witness.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) out.witness[v] = v;
    out.proven_optimal = true;
    return out;
  }
  if (g.size() > kMaxAlphaVertices) {
    throw ResourceGuardError("exact_alpha_k is limited to 2^14 vertices");
  }

  const auto dist0 = bfs_distances(g, 0);
  // The graph is vertex-transitive, so some optimal set contains vertex 0;
  // the rest lies among the vertices farther than k from 0.
  std::vector<Vertex> candidates;
  for (Vertex v = 1; v < g.size(); ++v) {
    if (dist0[v] > k) candidates.push_back(v);
  }
  const std::size_t m = candidates.size();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> compat(m, std::vector<std::uint64_t>(words, 0));
  std::vector<std::size_t> deg(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (dist0[g.sub(candidates[i], candidates[j])] > k) {
        compat[i][j / 64] |= 1ULL << (j % 64);
        compat[j][i / 64] |= 1ULL << (i % 64);
        ++deg[i];
        ++deg[j];
      }
    }
  }

  // Relabel by decreasing degree so the coloring sees dense vertices first.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
  std::vector<std::vector<std::uint64_t>> relabeled(m, std::vector<std::uint64_t>(words, 0));
  std::vector<std::size_t> position(m);
  for (std::size_t i = 0; i < m; ++i) position[order[i]] = i;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (compat[order[i]][j / 64] >> (j % 64) & 1ULL) {
        const std::size_t pj = position[j];
        relabeled[i][pj / 64] |= 1ULL << (pj % 64);
      }
    }
  }

  // Greedy lower bound: repeatedly take the first remaining compatible vertex.
  std::vector<std::size_t> greedy;
  for (std::size_t v = 0; v < m; ++v) {
    const bool ok = std::all_of(greedy.begin(), greedy.end(),
                                [&](std::size_t u) { return (relabeled[u][v / 64] >> (v % 64)) & 1ULL; });
    if (ok) greedy.push_back(v);
  }

  CliqueSearch search(std::move(relabeled), node_budget);
  search.seed(greedy);
  search.run();

  out.witness.push_back(0);
  for (std::size_t v : search.best()) out.witness.push_back(candidates[order[v]]);
  std::sort(out.witness.begin(), out.witness.end());
  out.size = out.witness.size();
  out.proven_optimal = search.exhausted();
  out.nodes = search.nodes();
  return out;
}

bool validate_witness(const DenseGraph& g, const std::vector<Vertex>& witness, int k) {
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const AltMatrix x = decode(witness[i], g.n(), g.field());
    for (std::size_t j = i + 1; j < witness.size(); ++j) {
      if (witness[i] == witness[j]) return false;
      if (rank_distance(x, decode(witness[j], g.n(), g.field())) < 2 * (k + 1)) return false;
    }
  }
  return true;
}

}  // namespace altbounds
