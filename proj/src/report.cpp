#include "rtn/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "rtn/exact_oracle.hpp"
#include "rtn/flow.hpp"
#include "rtn/graph.hpp"
#include "rtn/moments.hpp"
#include "rtn/sp_decomp.hpp"
#include "rtn/tn_sim.hpp"

namespace rtn {

using nlohmann::json;

std::string input_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json metadata(std::string_view input, std::uint64_t seed) {
  return {{"tool_version", kToolVersion}, {"input_hash", input_hash(input)}, {"seed", seed}};
}

json rational_json(const Rational& r) {
  if (denominator(r) == 1) {
    const BigInt& v = numerator(r);
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
      return v.convert_to<std::uint64_t>();
    return v.str();
  }
  return numerator(r).str() + "/" + denominator(r).str();
}

Graph checked_graph(std::string_view text) {
  Graph g = parse_graph(text);
  if (const auto v = validate(g); !v.ok()) {
    std::string msg = "invalid graph:";
    for (const auto& s : v.violations) msg += " " + s + ";";
    throw GraphError(msg);
  }
  return g;
}

struct OrderPipeline {
  FlowResult flow;
  ClusteredGraph clusters;
  OrderDAG dag;
  std::optional<MeasureExpr> expression;
  std::optional<NotSeriesParallel> kernel;
};

OrderPipeline run_order_pipeline(const FlowNetwork& net, TieBreak tb) {
  OrderPipeline p;
  p.flow = max_flow(net, tb);
  p.clusters = residual_clusters(net, p.flow);
  p.dag = partial_order(p.clusters, p.flow);
  if (const auto problems = check_order_dag(p.dag); !problems.empty())
    throw InvariantFailure("order graph check failed: " + problems.front());
  if (p.flow.value == 0) {
    p.expression = MeasureExpr::one();
    return p;
  }
  auto d = decompose(p.dag);
  if (auto* t = std::get_if<SPTree>(&d))
    p.expression = measure_expr(*t);
  else
    p.kernel = std::get<NotSeriesParallel>(d);
  return p;
}

std::vector<std::string> named(const FlowNetwork& net, const std::vector<int>& nodes) {
  std::vector<std::string> out;
  for (int v : nodes) out.push_back(net.name(v));
  return out;
}

json summary_json(const Summary& s) {
  return {{"mean", s.mean}, {"std_error", s.std_error}, {"variance", s.variance}};
}

json summaries_json(const std::vector<Summary>& ss, int first_order) {
  json arr = json::array();
  for (std::size_t i = 0; i < ss.size(); ++i) {
    json j = summary_json(ss[i]);
    j["n"] = first_order + static_cast<int>(i);
    arr.push_back(j);
  }
  return arr;
}

}  // namespace

std::string histogram_csv(const Histogram& h) {
  std::ostringstream os;
  os.precision(17);
  os << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    os << h.edges[i] << ',' << h.edges[i + 1] << ',' << h.counts[i] << '\n';
  return os.str();
}

json cmd_analyze(std::string_view graph_text, const AnalyzeOptions& opt) {
  if (opt.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const Graph g = checked_graph(graph_text);
  const FlowNetwork net = build_flow_network(g);
  const OrderPipeline p = run_order_pipeline(net, TieBreak::Canonical);

  json out = metadata(graph_text, 0);
  out["maxflow"] = p.flow.value;
  out["series_parallel"] = p.expression.has_value();
  out["expression"] = p.expression ? render_measure_expr(*p.expression) : "not series-parallel";

  std::optional<MomentSeq> free_moments;
  if (p.expression) free_moments = moments(*p.expression, opt.n_max);

  // Exact enumeration for every order that fits the budget.
  json oracle = json::array();
  std::vector<std::pair<int, std::uint64_t>> exact;
  for (int n = 1; n <= std::min(opt.n_max, 7); ++n) {
    try {
      exact.emplace_back(n, limit_moment(g, n, opt.oracle_budget));
    } catch (const BudgetExceeded&) {
      break;
    }
  }
  bool agree = true;
  for (auto [n, m] : exact) {
    oracle.push_back({{"n", n}, {"m", m}});
    if (free_moments && (*free_moments)[n] != Rational(m)) agree = false;
  }

  json moments_json = {{"n_max", opt.n_max}};
  if (free_moments) {
    json arr = json::array();
    for (const auto& v : free_moments->values()) arr.push_back(rational_json(v));
    moments_json["free"] = arr;
    if (!free_moments->all_integers()) throw InvariantFailure("free moments are not integers");
  }
  moments_json["oracle"] = oracle;
  if (free_moments && !exact.empty()) moments_json["engines_agree"] = agree;
  out["moments"] = moments_json;
  if (!agree) throw InvariantFailure("moment engines disagree:\n" + out.dump(2));

  // Rényi corrections from whichever moments are known.
  json renyi = json::array();
  for (int n = 2; n <= opt.n_max; ++n) {
    double m = 0;
    if (free_moments)
      m = (*free_moments)[n].convert_to<double>();
    else if (n <= static_cast<int>(exact.size()))
      m = static_cast<double>(exact[n - 1].second);
    else
      break;
    renyi.push_back({{"n", n}, {"value", std::log(m) / (n - 1)}});
  }
  json corrections = {{"renyi", renyi}};
  if (p.expression) {
    const auto vn = vn_correction(*p.expression, opt.vn_method);
    corrections["von_neumann"] = {{"value", vn.value}, {"std_error", vn.std_error}, {"exact", vn.exact}};
  }
  out["corrections"] = corrections;

  if (opt.moments_only) return out;

  const CutSet cut = min_cut(net, p.flow);
  json cut_edges = json::array();
  for (int e : cut.crossing_edges)
    cut_edges.push_back({net.name(net.edges()[e].u), net.name(net.edges()[e].v)});
  out["min_cut"] = {{"source_side", named(net, cut.source_side)}, {"edges", cut_edges}};

  json paths = json::array();
  for (const auto& path : p.flow.paths) paths.push_back(named(net, path));
  out["paths"] = paths;

  json clusters = json::array();
  for (const auto& c : p.clusters.members) clusters.push_back(named(net, c));
  out["clusters"] = clusters;

  json edges = json::array();
  for (auto [u, v] : p.dag.edges) edges.push_back({u, v});
  out["order"] = {{"nodes", order_node_labels(p.dag, p.clusters, net)},
                  {"edges", edges},
                  {"source", p.dag.source},
                  {"sink", p.dag.sink}};
  if (p.kernel) {
    json ke = json::array();
    for (auto [u, v] : p.kernel->kernel_edges) ke.push_back({u, v});
    out["kernel"] = {{"nodes", p.kernel->kernel_nodes}, {"edges", ke}};
  }

  const OrderPipeline rev = run_order_pipeline(net, TieBreak::Reversed);
  out["tie_break"] = {
      {"reversed_expression", rev.expression ? render_measure_expr(*rev.expression) : "not series-parallel"},
      {"stable", rev.expression == p.expression}};
  return out;
}

json cmd_oracle(std::string_view graph_text, int n, std::optional<double> dimension, std::uint64_t budget) {
  const Graph g = checked_graph(graph_text);
  const MomentPolynomial num = moment_polynomial(g, n, budget);
  const MomentPolynomial den = normalization_polynomial(g, n, budget);
  const int flow = max_flow(build_flow_network(g)).value;

  auto poly_json = [](const MomentPolynomial& p) {
    json hist = json::array();
    for (auto [h, c] : p.histogram) hist.push_back({{"h", h}, {"count", c}});
    return json{{"histogram", hist},
                {"exponent_offset", p.exponent_offset},
                {"min", p.min_key()},
                {"count_at_min", p.count_at_min()},
                {"total", p.total()}};
  };

  json out = metadata(graph_text, 0);
  out["n"] = n;
  out["maxflow"] = flow;
  json pj = poly_json(num);
  for (auto it = pj.begin(); it != pj.end(); ++it) out[it.key()] = it.value();
  out["min_matches_flow"] = num.min_key() == (n - 1) * flow;
  out["normalization"] = poly_json(den);
  if (dimension) {
    out["evaluation"] = {{"dimension", *dimension},
                         {"moment", num.evaluate(*dimension)},
                         {"normalization", den.evaluate(*dimension)}};
  }
  if (num.min_key() != (n - 1) * flow)
    throw InvariantFailure("Hamiltonian minimum differs from (n-1)*maxflow:\n" + out.dump(2));
  return out;
}

CommandOutput cmd_simulate(std::string_view graph_text, const SimulateOptions& opt) {
  const Graph g = checked_graph(graph_text);
  const EmpiricalReport r = empirical_report(g, opt.dimension, opt.samples, opt.n_max, opt.seed);

  json out = metadata(graph_text, opt.seed);
  out["dimension"] = r.dimension;
  out["samples"] = r.samples;
  out["n_max"] = r.n_max;
  out["maxflow"] = r.maxflow;
  out["trace_tilde"] = summary_json(r.trace_tilde);
  out["raw_moments"] = summaries_json(r.raw_moments, 1);
  out["normalized_moments"] = summaries_json(r.normalized_moments, 1);
  out["renyi_tilde"] = summaries_json(r.renyi_tilde, 2);
  out["von_neumann_tilde"] = summary_json(r.vn_tilde);
  out["renyi_normalized"] = summaries_json(r.renyi_normalized, 2);
  out["von_neumann_normalized"] = summary_json(r.vn_normalized);
  out["page_gap"] = summary_json(r.page_gap);
  out["rank_bound"] = {{"holds", r.rank_bound_holds}, {"worst_tail_ratio", r.worst_tail_ratio}};
  if (opt.per_sample) {
    json arr = json::array();
    for (const auto& s : r.per_sample) {
      arr.push_back({{"trace_tilde", s.trace_tilde},
                     {"raw_moments", s.raw_moments},
                     {"normalized_moments", s.normalized_moments},
                     {"renyi_tilde", s.renyi_tilde},
                     {"von_neumann_tilde", s.vn_tilde},
                     {"renyi_normalized", s.renyi_normalized},
                     {"von_neumann_normalized", s.vn_normalized},
                     {"page_gap", s.page_gap},
                     {"rank_ok", s.rank_ok}});
    }
    out["per_sample"] = arr;
  }
  if (!r.rank_bound_holds) throw InvariantFailure("rank bound violated:\n" + out.dump(2));
  return {out, histogram_csv(make_histogram(r.pooled_eigenvalues, opt.bins))};
}

CommandOutput cmd_sample_measure(std::string_view expr_text, int size, int count, std::uint64_t seed, int bins) {
  const MeasureExpr e = parse_measure_expr(expr_text).canonical();
  const SpectrumSample s = sample_spectrum(e, size, count, seed);
  const MomentSeq exact = moments(e, 4);

  json out = metadata(expr_text, seed);
  out["expression"] = render_measure_expr(e);
  out["size"] = size;
  out["count"] = count;
  json m = json::array();
  for (int k = 1; k <= 4; ++k)
    m.push_back({{"n", k}, {"empirical", s.moment(k)}, {"exact", rational_json(exact[k])}});
  out["moments"] = m;

  const auto sampled = vn_from_sample(s);
  json vn = {{"estimate", sampled.value}, {"std_error", sampled.std_error}};
  if (const auto closed = vn_correction(e); closed.exact) vn["exact"] = closed.value;
  out["von_neumann"] = vn;
  return {out, histogram_csv(make_histogram(s.pooled(), bins))};
}

}  // namespace rtn
