#pragma once

#include <optional>

#include "mstinf/derived_metrics.hpp"
#include "mstinf/kruskal.hpp"

namespace mstinf {

enum class Verdict { Minimal, NotMinimal, LocallyMinimal, NotLocallyMinimal };
enum class CertifyMethod { Exactness, Bottleneck, LocalPaths };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Minimal: return "MINIMAL";
    case Verdict::NotMinimal: return "NOT_MINIMAL";
    case Verdict::LocallyMinimal: return "LOCALLY_MINIMAL";
    case Verdict::NotLocallyMinimal: return "NOT_LOCALLY_MINIMAL";
  }
  return "?";
}

inline const char* to_string(CertifyMethod m) {
  switch (m) {
    case CertifyMethod::Exactness: return "exactness";
    case CertifyMethod::Bottleneck: return "bottleneck";
    case CertifyMethod::LocalPaths: return "local_paths";
  }
  return "?";
}

/// An edge is exact when its length equals the distance between the two
/// sides of the cut it spans, i.e. no strictly shorter pair bridges that
/// cut. The report records the cut distance and a pair attaining it.
template <typename S>
struct ExactEdgeReport {
  Edge edge;
  bool exact = false;
  S cut_distance{};
  std::pair<int, int> witness{-1, -1};
};

/// A single swap that strictly shortens the tree: remove one edge, insert
/// a cheaper pair bridging the same cut.
template <typename S>
struct ImprovingSwap {
  Edge remove;
  std::pair<int, int> insert{-1, -1};
  S removed_length{};
  S inserted_length{};
};

template <typename S>
struct Certificate {
  Verdict verdict{};
  CertifyMethod method{};
  std::vector<ExactEdgeReport<S>> per_edge;        // exactness route only
  std::optional<ImprovingSwap<S>> swap;            // on a negative verdict
  std::optional<std::pair<int, int>> violating_pair;  // bottleneck route
};

template <typename S>
ExactEdgeReport<S> classify_edge(const MetricSpace<S>& space, const Tree& t,
                                 const Edge& e,
                                 Compare<S> cmp = default_compare<S>()) {
  const CutPartition cut = cut_partition(t, e);
  const auto best = set_distance(space, cut.side1, cut.side2);
  ExactEdgeReport<S> rep;
  rep.edge = e;
  rep.cut_distance = best.value;
  rep.witness = best.witness;
  rep.exact = cmp.eq(space.dist(e.u, e.v), best.value);
  return rep;
}

template <typename S>
bool is_exact_edge(const MetricSpace<S>& space, const Tree& t, const Edge& e,
                   Compare<S> cmp = default_compare<S>()) {
  return classify_edge(space, t, e, cmp).exact;
}

/// Minimality via edge exactness: the tree is minimal among all spanning
/// trees exactly when every edge is exact. A non-exact edge yields an
/// improving swap to the cheapest pair bridging its cut.
template <typename S>
Certificate<S> verify_mst_by_exactness(const MetricSpace<S>& space,
                                       const Tree& t,
                                       Compare<S> cmp = default_compare<S>()) {
  if (space.size() != t.n)
    throw std::invalid_argument("verify_mst_by_exactness: size mismatch");
  Certificate<S> cert;
  cert.method = CertifyMethod::Exactness;
  cert.verdict = Verdict::Minimal;
  for (const Edge& e : t.edges) {
    cert.per_edge.push_back(classify_edge(space, t, e, cmp));
    const auto& rep = cert.per_edge.back();
    if (!rep.exact && cert.verdict == Verdict::Minimal) {
      cert.verdict = Verdict::NotMinimal;
      cert.swap = ImprovingSwap<S>{e, rep.witness, space.dist(e.u, e.v),
                                   rep.cut_distance};
    }
  }
  return cert;
}

/// Minimality via the bottleneck bound: the tree is minimal exactly when
/// its bottleneck metric nowhere exceeds the ambient metric. On a violating
/// pair (v, w) the longest edge of the path from v to w is longer than
/// d(v, w), so swapping it for (v, w) shortens the tree.
///
/// Deliberately shares no per-edge machinery with the exactness route.
template <typename S>
Certificate<S> verify_mst_by_bottleneck(const MetricSpace<S>& space,
                                        const Tree& t,
                                        Compare<S> cmp = default_compare<S>()) {
  if (space.size() != t.n)
    throw std::invalid_argument("verify_mst_by_bottleneck: size mismatch");
  const auto wt = induced_weighted_tree(t, space);
  const Mat<S> bn = bottleneck_matrix(wt);
  Certificate<S> cert;
  cert.method = CertifyMethod::Bottleneck;
  cert.verdict = Verdict::Minimal;
  for (int v = 0; v < t.n && cert.verdict == Verdict::Minimal; ++v)
    for (int w = v + 1; w < t.n; ++w) {
      if (cmp.le(bn(v, w), space.dist(v, w))) continue;
      cert.verdict = Verdict::NotMinimal;
      cert.violating_pair = {v, w};
      Edge widest{-1, -1};
      S widest_len{};
      for (const Edge& e : path(t, v, w)) {
        if (widest.u == -1 || widest_len < space.dist(e.u, e.v)) {
          widest = e;
          widest_len = space.dist(e.u, e.v);
        }
      }
      cert.swap = ImprovingSwap<S>{widest, {v, w}, widest_len, space.dist(v, w)};
      break;
    }
  return cert;
}

/// Local minimality: no single swap T[e -> f] with e on the path between
/// f's endpoints shortens the tree. Checked two independent ways, by the
/// definition (scan all pairs and all path edges) and through edge
/// exactness, which is equivalent; a disagreement would mean a bug, not a
/// property of the input.
template <typename S>
Certificate<S> verify_locally_minimal(const MetricSpace<S>& space,
                                      const Tree& t,
                                      Compare<S> cmp = default_compare<S>()) {
  if (space.size() != t.n)
    throw std::invalid_argument("verify_locally_minimal: size mismatch");

  std::optional<ImprovingSwap<S>> by_definition;
  for (int v = 0; v < t.n && !by_definition; ++v)
    for (int w = v + 1; w < t.n; ++w) {
      for (const Edge& e : path(t, v, w)) {
        if (cmp.lt(space.dist(v, w), space.dist(e.u, e.v))) {
          by_definition =
              ImprovingSwap<S>{e, {v, w}, space.dist(e.u, e.v), space.dist(v, w)};
          break;
        }
      }
      if (by_definition) break;
    }

  Certificate<S> cert;
  cert.method = CertifyMethod::LocalPaths;
  for (const Edge& e : t.edges)
    cert.per_edge.push_back(classify_edge(space, t, e, cmp));
  const bool all_exact =
      std::all_of(cert.per_edge.begin(), cert.per_edge.end(),
                  [](const auto& rep) { return rep.exact; });

  if (all_exact == by_definition.has_value())
    throw std::logic_error(
        "verify_locally_minimal: path scan and exactness disagree");

  cert.verdict =
      all_exact ? Verdict::LocallyMinimal : Verdict::NotLocallyMinimal;
  cert.swap = by_definition;
  return cert;
}

/// Undirected simple graph on 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;  // sorted, distinct
};

inline bool is_connected(const SimpleGraph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> visited(g.n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int seen = 1;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (int nb : adj[cur])
      if (!visited[nb]) {
        visited[nb] = 1;
        ++seen;
        stack.push_back(nb);
      }
  }
  return seen == g.n;
}

enum class GminMethod { Auto, BruteForce, Bottleneck };

inline GminMethod resolve_gmin_method(int n, GminMethod method) {
  if (method != GminMethod::Auto) return method;
  return n <= 12 ? GminMethod::BruteForce : GminMethod::Bottleneck;
}

/// Graph of candidate edges: pairs (v, w) whose distance is attained as
/// the distance between the two sides of some bipartition separating v
/// from w. Every minimal spanning tree lives inside this graph, and its
/// connectivity decides whether the union of all minimal spanning trees
/// does.
///
/// BruteForce enumerates all 2^(n-1) - 1 bipartitions. Bottleneck uses
/// the equivalent criterion that (v, w) qualifies exactly when d(v, w)
/// equals the bottleneck distance of v and w over a minimal spanning
/// tree; it runs in polynomial time. Auto picks BruteForce up to n = 12.
template <typename S>
SimpleGraph candidate_edge_graph(const MetricSpace<S>& space,
                                 GminMethod method = GminMethod::Auto,
                                 Compare<S> cmp = default_compare<S>()) {
  const int n = space.size();
  if (n < 2)
    throw std::invalid_argument("candidate_edge_graph: need at least 2 points");
  method = resolve_gmin_method(n, method);

  SimpleGraph g;
  g.n = n;

  if (method == GminMethod::BruteForce) {
    if (n > 24)
      throw input_error("candidate_edge_graph: brute force limited to n <= 24");
    std::vector<char> qualifies(static_cast<std::size_t>(n) * n, 0);
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    // Vertex 0 stays on side 1; masks range over subsets of the rest.
    for (std::uint64_t mask = 1; mask < top; ++mask) {
      std::vector<int> side1, side2;
      side1.push_back(0);
      for (int v = 1; v < n; ++v)
        ((mask >> (v - 1)) & 1 ? side2 : side1).push_back(v);
      const auto best = set_distance(space, side1, side2);
      for (int v : side1)
        for (int w : side2)
          if (cmp.eq(space.dist(v, w), best.value))
            qualifies[static_cast<std::size_t>(std::min(v, w)) * n +
                      std::max(v, w)] = 1;
    }
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (qualifies[static_cast<std::size_t>(v) * n + w])
          g.edges.push_back({v, w});
    return g;
  }

  const Tree mst = kruskal_mst(space);
  const Mat<S> bn = bottleneck_matrix(induced_weighted_tree(mst, space));
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (cmp.eq(space.dist(v, w), bn(v, w))) g.edges.push_back({v, w});
  return g;
}

}  // namespace mstinf
