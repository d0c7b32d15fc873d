#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>

#include "mstinf/mstinf.hpp"

namespace mstinf {
namespace {

enum class NumericMode { Rational, Float };

struct Options {
  std::string space_path;
  std::string tree_path;
  std::string out_path;
  std::string trace_path;
  std::string method = "both";       // certify: exact|bottleneck|local|both
  std::string gmin_method = "auto";  // gmin: auto|brute|bottleneck
  std::string order = "asc";         // exactify: asc|given|random:SEED
  std::string kind;                  // rho: sum|max
  std::string name;                  // fixtures emit / truncate
  int n = 0;
  NumericMode mode = NumericMode::Rational;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::parse_error& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream o(path);
  if (!o) throw input_error("cannot write '" + path + "'");
  o << dump_json(doc);
}

void emit(const json& doc, const Options& opt, std::ostream& out) {
  if (!opt.out_path.empty())
    write_json_file(opt.out_path, doc);
  else
    out << dump_json(doc);
}

template <typename S>
MetricSpace<S> load_space_checked(const Options& opt) {
  auto space = space_from_json<S>(load_json_file(opt.space_path));
  const auto viols = check_metric_axioms(space.dist, default_compare<S>());
  if (!viols.empty())
    throw input_error("'" + opt.space_path + "' is not a metric space (" +
                      std::to_string(viols.size()) +
                      " axiom violation(s)); run check-metric for the list");
  return space;
}

template <typename S>
LoadedTree load_tree_for(const MetricSpace<S>& space, const Options& opt) {
  LoadedTree lt = tree_from_json(load_json_file(opt.tree_path));
  if (lt.tree.n != space.size())
    throw input_error("'" + opt.tree_path + "' spans " +
                      std::to_string(lt.tree.n) + " vertices but '" +
                      opt.space_path + "' has " +
                      std::to_string(space.size()) + " points");
  return lt;
}

template <typename S>
json tree_doc(const MetricSpace<S>& space, const Tree& t) {
  json doc = tree_to_json(t);
  doc["numeric_mode"] = numeric_mode_name<S>();
  doc["length"] = scalar_to_json(tree_length(t, space));
  return doc;
}

template <typename S>
int cmd_check_metric(const Options& opt, std::ostream& out) {
  const auto space = space_from_json<S>(load_json_file(opt.space_path));
  const auto viols = check_metric_axioms(space.dist, default_compare<S>());
  json doc = violations_to_json(viols);
  doc["numeric_mode"] = numeric_mode_name<S>();
  emit(doc, opt, out);
  return viols.empty() ? 0 : 1;
}

template <typename S>
int cmd_mst(const Options& opt, std::ostream& out) {
  const auto space = load_space_checked<S>(opt);
  emit(tree_doc(space, kruskal_mst(space)), opt, out);
  return 0;
}

template <typename S>
int cmd_certify(const Options& opt, std::ostream& out) {
  const auto space = load_space_checked<S>(opt);
  const Tree t = load_tree_for(space, opt).tree;
  if (opt.method == "exact" || opt.method == "bottleneck") {
    const auto cert = opt.method == "exact"
                          ? verify_mst_by_exactness(space, t)
                          : verify_mst_by_bottleneck(space, t);
    emit(certificate_to_json(cert), opt, out);
    return cert.verdict == Verdict::Minimal ? 0 : 1;
  }
  if (opt.method == "local") {
    const auto cert = verify_locally_minimal(space, t);
    emit(certificate_to_json(cert), opt, out);
    return cert.verdict == Verdict::LocallyMinimal ? 0 : 1;
  }
  const auto a = verify_mst_by_exactness(space, t);
  const auto b = verify_mst_by_bottleneck(space, t);
  if (a.verdict != b.verdict)
    throw std::logic_error("certificate methods disagree");
  json doc;
  doc["numeric_mode"] = numeric_mode_name<S>();
  doc["method"] = "both";
  doc["verdict"] = to_string(a.verdict);
  doc["agreement"] = true;
  doc["exactness"] = certificate_to_json(a);
  doc["bottleneck"] = certificate_to_json(b);
  emit(doc, opt, out);
  return a.verdict == Verdict::Minimal ? 0 : 1;
}

template <typename S>
int cmd_exactify(const Options& opt, std::ostream& out) {
  const auto space = load_space_checked<S>(opt);
  const LoadedTree lt = load_tree_for(space, opt);

  std::optional<std::vector<int>> order;
  if (opt.order == "given") {
    std::vector<int> perm;
    for (const Edge& e : lt.file_order)
      perm.push_back(lt.tree.edge_index(e));
    order = std::move(perm);
  } else if (opt.order.starts_with("random:")) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(opt.order.substr(7));
    } catch (const std::exception&) {
      throw input_error("--order random:SEED needs an unsigned integer seed");
    }
    std::mt19937_64 rng(seed);
    std::vector<int> perm(lt.tree.edges.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng() % i]);
    order = std::move(perm);
  } else if (opt.order != "asc") {
    throw input_error("--order must be asc, given, or random:SEED");
  }

  auto [final_tree, trace] = exactify(space, lt.tree, std::move(order));
  if (!opt.trace_path.empty()) write_json_file(opt.trace_path, trace_to_json(trace));
  json doc = tree_doc(space, final_tree);
  doc["initial_length"] = scalar_to_json(trace.initial_length);
  emit(doc, opt, out);
  return 0;
}

template <typename S>
int cmd_rho(const Options& opt, std::ostream& out) {
  const auto wt = weighted_tree_from_json<S>(load_json_file(opt.tree_path));
  MetricSpace<S> derived;
  derived.dist =
      opt.kind == "sum" ? path_sum_matrix(wt) : bottleneck_matrix(wt);
  emit(space_to_json(derived), opt, out);
  return 0;
}

template <typename S>
int cmd_gmin(const Options& opt, std::ostream& out) {
  const auto space = load_space_checked<S>(opt);
  GminMethod method = GminMethod::Auto;
  if (opt.gmin_method == "brute") method = GminMethod::BruteForce;
  if (opt.gmin_method == "bottleneck") method = GminMethod::Bottleneck;
  method = resolve_gmin_method(space.size(), method);
  json doc = graph_to_json(candidate_edge_graph(space, method), method);
  doc["numeric_mode"] = numeric_mode_name<S>();
  emit(doc, opt, out);
  return 0;
}

int cmd_fixtures_list(const Options& opt, std::ostream& out) {
  json doc;
  doc["numeric_mode"] = opt.mode == NumericMode::Rational
                            ? numeric_mode_name<Rational>()
                            : numeric_mode_name<double>();
  json arr = json::array();
  for (const auto& meta : fixture_catalog()) arr.push_back(meta_to_json(meta));
  doc["fixtures"] = std::move(arr);
  emit(doc, opt, out);
  return 0;
}

int cmd_truncate(const Options& opt, std::ostream& out) {
  CountableSpace cs =
      opt.name == "any_tree"
          ? [&] {
              if (opt.tree_path.empty())
                throw input_error("fixture 'any_tree' needs --tree");
              return any_tree_space(
                  weighted_tree_from_json<Rational>(load_json_file(opt.tree_path)));
            }()
          : fixture(opt.name);
  int n = opt.n;
  if (n == 0 && cs.max_points) n = *cs.max_points;
  if (n < 1) throw input_error("--n is required and must be positive");
  if (n > 4096) throw input_error("truncations are capped at n = 4096");
  const MetricSpace<Rational> space = prefix(cs, n);

  json doc;
  if (opt.mode == NumericMode::Rational) {
    doc = space_to_json(space);
  } else {
    MetricSpace<double> fspace;
    fspace.labels = space.labels;
    fspace.dist.resize(n, n);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) fspace.dist(v, w) = to_double(space.dist(v, w));
    doc = space_to_json(fspace);
  }
  doc["fixture"] = cs.name;
  emit(doc, opt, out);
  return 0;
}

NumericMode resolve_mode(const std::string& flag) {
  std::string value = flag;
  if (value.empty()) {
    if (const char* env = std::getenv("MSTINF_NUMERIC")) value = env;
  }
  if (value.empty() || value == "rational") return NumericMode::Rational;
  if (value == "float" || value == "float64") return NumericMode::Float;
  throw input_error("numeric mode must be 'rational' or 'float', got '" +
                    value + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "minimal spanning trees over finite metric spaces and finite "
      "truncations of countable ones"};
  app.require_subcommand(1);

  Options opt;
  std::string numeric_flag;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "write the JSON document here instead of stdout");
    sub->add_option("--numeric", numeric_flag,
                    "numeric mode: rational (exact, default) or float")
        ->check(CLI::IsMember({"rational", "float", "float64"}));
  };
  const auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", opt.space_path, "JSON space file")->required();
  };
  const auto add_tree = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--tree", opt.tree_path, "JSON tree file");
    if (required) o->required();
  };

  auto* check = app.add_subcommand("check-metric", "validate the metric axioms of a space file");
  add_space(check);
  add_common(check);

  auto* mst = app.add_subcommand("mst", "minimal spanning tree of a space");
  add_space(mst);
  add_common(mst);

  auto* certify = app.add_subcommand("certify", "certify a spanning tree as minimal or locally minimal");
  add_space(certify);
  add_tree(certify, true);
  certify->add_option("--method", opt.method, "exact | bottleneck | local | both (default)")
      ->check(CLI::IsMember({"exact", "bottleneck", "local", "both"}));
  add_common(certify);

  auto* exactify_cmd = app.add_subcommand("exactify", "one-pass conversion of a spanning tree into a minimal one");
  add_space(exactify_cmd);
  add_tree(exactify_cmd, true);
  exactify_cmd->add_option("--order", opt.order, "edge processing order: asc (default) | given | random:SEED");
  exactify_cmd->add_option("--trace", opt.trace_path, "write the step-by-step trace here");
  add_common(exactify_cmd);

  auto* rho = app.add_subcommand("rho", "emit a metric derived from a weighted tree as a space file");
  add_tree(rho, true);
  rho->add_option("--kind", opt.kind, "sum (path-sum metric) | max (bottleneck metric)")
      ->required()
      ->check(CLI::IsMember({"sum", "max"}));
  add_common(rho);

  auto* gmin = app.add_subcommand("gmin", "graph of pairs attaining some bipartition distance");
  add_space(gmin);
  gmin->add_option("--method", opt.gmin_method, "auto (default) | brute | bottleneck")
      ->check(CLI::IsMember({"auto", "brute", "bottleneck"}));
  add_common(gmin);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "registry of built-in countable spaces");
  fixtures_cmd->require_subcommand(1);
  auto* fx_list = fixtures_cmd->add_subcommand("list", "catalog with declared properties");
  add_common(fx_list);
  auto* fx_emit = fixtures_cmd->add_subcommand("emit", "emit a finite truncation as a space file");
  fx_emit->add_option("--name", opt.name, "fixture name")->required();
  fx_emit->add_option("--n", opt.n, "number of points");
  add_tree(fx_emit, false);
  add_common(fx_emit);

  auto* truncate = app.add_subcommand("truncate", "emit a finite truncation of a named fixture");
  truncate->add_option("--name", opt.name, "fixture name")->required();
  truncate->add_option("--n", opt.n, "number of points");
  add_tree(truncate, false);
  add_common(truncate);

  std::vector<const char*> argv{"mstinf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    opt.mode = resolve_mode(numeric_flag);
    const bool exact = opt.mode == NumericMode::Rational;
    if (app.got_subcommand(check))
      return exact ? cmd_check_metric<Rational>(opt, out)
                   : cmd_check_metric<double>(opt, out);
    if (app.got_subcommand(mst))
      return exact ? cmd_mst<Rational>(opt, out) : cmd_mst<double>(opt, out);
    if (app.got_subcommand(certify))
      return exact ? cmd_certify<Rational>(opt, out)
                   : cmd_certify<double>(opt, out);
    if (app.got_subcommand(exactify_cmd))
      return exact ? cmd_exactify<Rational>(opt, out)
                   : cmd_exactify<double>(opt, out);
    if (app.got_subcommand(rho))
      return exact ? cmd_rho<Rational>(opt, out) : cmd_rho<double>(opt, out);
    if (app.got_subcommand(gmin))
      return exact ? cmd_gmin<Rational>(opt, out) : cmd_gmin<double>(opt, out);
    if (app.got_subcommand(fixtures_cmd))
      return fixtures_cmd->got_subcommand(fx_list) ? cmd_fixtures_list(opt, out)
                                                   : cmd_truncate(opt, out);
    if (app.got_subcommand(truncate)) return cmd_truncate(opt, out);
    throw std::logic_error("unreachable: no subcommand dispatched");
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mstinf
