#pragma once

#include <json.hpp>

#include "mstinf/certify.hpp"
#include "mstinf/exactify.hpp"

namespace mstinf {

using nlohmann::json;

/// Serialized documents carry a numeric_mode tag. Rational values always
/// travel as strings "p/q" in lowest terms, so round trips are exact;
/// doubles travel as JSON numbers.
template <typename S>
const char* numeric_mode_name();
template <>
inline const char* numeric_mode_name<Rational>() { return "rational"; }
template <>
inline const char* numeric_mode_name<double>() { return "float64"; }

inline json scalar_to_json(const Rational& r) { return format_rational(r); }
inline json scalar_to_json(double x) { return x; }

/// Rational mode accepts strings ("p/q", integers, finite decimals) and
/// integer JSON numbers. Non-integer JSON numbers are rejected: a binary
/// double is almost never the value the author meant, so inexact inputs
/// must be spelled out as strings.
template <typename S>
S scalar_from_json(const json& j);

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned())
    return Rational(j.get<long long>());
  if (j.is_number_float())
    throw input_error(
        "rational mode needs exact values; write " + j.dump() +
        " as a string, e.g. \"" + j.dump() + "\" or a fraction \"p/q\"");
  throw input_error("expected a numeric value, got " + j.dump());
}

template <>
inline double scalar_from_json<double>(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw input_error("expected a numeric value, got " + j.dump());
}

inline const json& require_field(const json& j, const char* key) {
  if (!j.is_object()) throw input_error("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw input_error(std::string("missing field '") + key + "'");
  return *it;
}

inline int require_count(const json& j, const char* key) {
  const json& f = require_field(j, key);
  if (!f.is_number_integer() || f.get<long long>() < 1 ||
      f.get<long long>() > (1 << 20))
    throw input_error(std::string("field '") + key +
                      "' must be a positive integer");
  return f.get<int>();
}

inline json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

inline Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw input_error("an edge must be a pair of vertex indices, got " + j.dump());
  const int a = j[0].get<int>(), b = j[1].get<int>();
  if (a == b) throw input_error("edge endpoints must differ, got " + j.dump());
  return edge(a, b);
}

inline json pair_to_json(const std::pair<int, int>& p) {
  return json::array({p.first, p.second});
}

template <typename S>
json space_to_json(const MetricSpace<S>& space) {
  json j;
  j["numeric_mode"] = numeric_mode_name<S>();
  j["n"] = space.size();
  if (!space.labels.empty()) j["labels"] = space.labels;
  json rows = json::array();
  for (int v = 0; v < space.size(); ++v) {
    json row = json::array();
    for (int w = 0; w < space.size(); ++w)
      row.push_back(scalar_to_json(space.dist(v, w)));
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  return j;
}

/// Shape validation only; metric axioms are checked separately so that
/// callers can report violations instead of refusing to load.
template <typename S>
MetricSpace<S> space_from_json(const json& j) {
  const int n = require_count(j, "n");
  const json& rows = require_field(j, "dist");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw input_error("'dist' must be an n x n matrix");
  MetricSpace<S> space;
  space.dist.resize(n, n);
  for (int v = 0; v < n; ++v) {
    if (!rows[v].is_array() || static_cast<int>(rows[v].size()) != n)
      throw input_error("'dist' must be an n x n matrix");
    for (int w = 0; w < n; ++w)
      space.dist(v, w) = scalar_from_json<S>(rows[v][w]);
  }
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != n)
      throw input_error("'labels' must list one string per point");
    for (const auto& s : *it) {
      if (!s.is_string()) throw input_error("'labels' must list strings");
      space.labels.push_back(s.get<std::string>());
    }
  }
  return space;
}

inline json tree_to_json(const Tree& t) {
  json j;
  j["n"] = t.n;
  json edges = json::array();
  for (const Edge& e : t.edges) edges.push_back(edge_to_json(e));
  j["edges"] = std::move(edges);
  return j;
}

/// A loaded tree keeps the file's edge order: commands that process edges
/// "as listed" need it, while Tree itself stores edges sorted.
struct LoadedTree {
  Tree tree;
  std::vector<Edge> file_order;
};

inline LoadedTree tree_from_json(const json& j) {
  const int n = require_count(j, "n");
  const json& arr = require_field(j, "edges");
  if (!arr.is_array())
    throw input_error("'edges' must be an array of vertex pairs");
  std::vector<Edge> edges;
  for (const auto& e : arr) edges.push_back(edge_from_json(e));
  LoadedTree lt;
  lt.file_order = edges;
  lt.tree = make_tree(n, std::move(edges));
  return lt;
}

template <typename S>
json weighted_tree_to_json(const WeightedTree<S>& wt) {
  json j = tree_to_json(wt.tree);
  j["numeric_mode"] = numeric_mode_name<S>();
  json w = json::array();
  for (const S& x : wt.weights) w.push_back(scalar_to_json(x));
  j["weights"] = std::move(w);
  return j;
}

/// Weights align with the file's edge order.
template <typename S>
WeightedTree<S> weighted_tree_from_json(const json& j) {
  LoadedTree lt = tree_from_json(j);
  const json& arr = require_field(j, "weights");
  if (!arr.is_array() || arr.size() != lt.file_order.size())
    throw input_error("'weights' must list one value per edge");
  std::vector<S> by_sorted(lt.tree.edges.size());
  for (std::size_t i = 0; i < lt.file_order.size(); ++i)
    by_sorted[lt.tree.edge_index(lt.file_order[i])] =
        scalar_from_json<S>(arr[i]);
  return make_weighted_tree(lt.tree, std::move(by_sorted));
}

template <typename S>
json swap_to_json(const ImprovingSwap<S>& s) {
  json j;
  j["remove"] = edge_to_json(s.remove);
  j["insert"] = pair_to_json(s.insert);
  j["removed_length"] = scalar_to_json(s.removed_length);
  j["inserted_length"] = scalar_to_json(s.inserted_length);
  return j;
}

template <typename S>
json certificate_to_json(const Certificate<S>& cert) {
  json j;
  j["numeric_mode"] = numeric_mode_name<S>();
  j["method"] = to_string(cert.method);
  j["verdict"] = to_string(cert.verdict);
  if (!cert.per_edge.empty()) {
    json edges = json::array();
    for (const auto& rep : cert.per_edge) {
      json e;
      e["edge"] = edge_to_json(rep.edge);
      e["exact"] = rep.exact;
      e["cut_distance"] = scalar_to_json(rep.cut_distance);
      e["witness"] = pair_to_json(rep.witness);
      edges.push_back(std::move(e));
    }
    j["per_edge"] = std::move(edges);
  }
  j["swap"] = cert.swap ? swap_to_json(*cert.swap) : json(nullptr);
  if (cert.method == CertifyMethod::Bottleneck)
    j["violating_pair"] =
        cert.violating_pair ? pair_to_json(*cert.violating_pair) : json(nullptr);
  return j;
}

template <typename S>
json trace_to_json(const ExactifyTrace<S>& trace) {
  json j;
  j["numeric_mode"] = numeric_mode_name<S>();
  j["initial_length"] = scalar_to_json(trace.initial_length);
  j["final_length"] = scalar_to_json(trace.final_length);
  json steps = json::array();
  for (const auto& st : trace.steps) {
    json s;
    s["index"] = st.index;
    s["edge"] = edge_to_json(st.processed);
    s["action"] = st.action == StepAction::Kept ? "kept" : "swapped";
    s["removed"] = st.removed ? edge_to_json(*st.removed) : json(nullptr);
    s["inserted"] = st.inserted ? pair_to_json(*st.inserted) : json(nullptr);
    s["side_sizes"] = json::array({st.side1_size, st.side2_size});
    s["length_before"] = scalar_to_json(st.length_before);
    s["length_after"] = scalar_to_json(st.length_after);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

inline const char* to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::DiagonalNotZero: return "diagonal_not_zero";
    case AxiomKind::NotSymmetric: return "not_symmetric";
    case AxiomKind::NotPositive: return "not_positive";
    case AxiomKind::TriangleBroken: return "triangle_broken";
  }
  return "?";
}

inline json violations_to_json(const std::vector<AxiomViolation>& vs) {
  json j;
  j["valid"] = vs.empty();
  json arr = json::array();
  for (const auto& v : vs) {
    json e;
    e["kind"] = to_string(v.kind);
    e["points"] = v.k >= 0 ? json::array({v.i, v.j, v.k})
                           : json::array({v.i, v.j});
    e["detail"] = v.describe();
    arr.push_back(std::move(e));
  }
  j["violations"] = std::move(arr);
  return j;
}

inline json graph_to_json(const SimpleGraph& g, GminMethod method) {
  json j;
  j["n"] = g.n;
  json edges = json::array();
  for (const Edge& e : g.edges) edges.push_back(edge_to_json(e));
  j["edges"] = std::move(edges);
  j["edge_count"] = static_cast<int>(g.edges.size());
  j["method"] = method == GminMethod::BruteForce ? "brute_force" : "bottleneck";
  j["connected"] = is_connected(g);
  return j;
}

inline json meta_to_json(const FixtureMeta& m) {
  json j;
  j["name"] = m.name;
  j["good"] = m.is_good;
  j["mst_exists"] = m.mst_exists;
  j["mst_length"] = m.mst_length ? json(*m.mst_length) : json(nullptr);
  j["notes"] = m.notes;
  return j;
}

/// Canonical text form: two-space indent, keys in lexicographic order (the
/// container sorts them), trailing newline. Equal documents serialize to
/// equal bytes.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mstinf
