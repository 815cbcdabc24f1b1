// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance below is fixed in advance; none is tuned
// to the seeds.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rtn/exact_oracle.hpp"
#include "rtn/flow.hpp"
#include "rtn/graph_builders.hpp"
#include "rtn/measure_sampling.hpp"
#include "rtn/moments.hpp"
#include "rtn/report.hpp"
#include "rtn/rng.hpp"
#include "rtn/tn_sim.hpp"

using namespace rtn;

namespace {

const char* kRunningExpression =
    "box(times(box(pow_box(mp,3), times(pow_box(mp,2), mp)), box(times(mp, mp), mp)), pow_box(mp,2))";

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(RTN_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

// Every simulated instance feeds the rank-bound criterion.
struct RankLog {
  int instances = 0;
  int samples = 0;
  bool holds = true;
  double worst = 0;

  void add(const EmpiricalReport& r) {
    ++instances;
    samples += r.samples;
    holds = holds && r.rank_bound_holds;
    worst = std::max(worst, r.worst_tail_ratio);
  }
};

RankLog rank_log;

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

MeasureExpr random_expr(Rng& rng, int depth) {
  const auto pick = rng.below(depth > 0 ? 4 : 2);
  if (pick == 0) return rng.below(4) == 0 ? MeasureExpr::one() : MeasureExpr::mp();
  if (pick == 1) return MeasureExpr::mp();
  std::vector<MeasureExpr> kids;
  const int k = 2 + static_cast<int>(rng.below(2));
  for (int i = 0; i < k; ++i) kids.push_back(random_expr(rng, depth - 1));
  return pick == 2 ? MeasureExpr::free_conv(kids) : MeasureExpr::class_conv(kids);
}

Outcome running_example_analysis() {
  Outcome o;
  const auto j = cmd_analyze(read_data("running_example.graph"), {.n_max = 5});
  const auto got = parse_measure_expr(j["expression"].get<std::string>()).canonical();
  const auto want = parse_measure_expr(kRunningExpression).canonical();
  o.require(j["maxflow"] == 4, "maxflow " + j["maxflow"].dump());
  o.require(got == want, "expression " + j["expression"].get<std::string>());
  o.detail = o.pass ? "maxflow 4, expression " + j["expression"].get<std::string>() : o.detail;
  return o;
}

Outcome two_engine_equality() {
  Outcome o;
  const Graph g = running_example();
  const MomentPolynomial p = moment_polynomial(g, 2);
  o.require(p.total() == 131072, "state count " + std::to_string(p.total()));
  const std::uint64_t oracle = limit_moment(g, 2);
  const Rational free = moments(parse_measure_expr(kRunningExpression), 2)[2];
  o.require(Rational(oracle) == free, "oracle " + std::to_string(oracle) + " vs free " + free.str());
  if (o.pass) o.detail = "m_2 = " + std::to_string(oracle) + " from both engines over 2^17 assignments";
  return o;
}

Outcome fuss_catalan_moments() {
  Outcome o;
  for (int s = 1; s <= 4; ++s) {
    const MomentSeq m = moments(MeasureExpr::mp_power(s), 8);
    for (int n = 1; n <= 8; ++n)
      o.require(m[n] == Rational(fuss_catalan(n, s)), "s=" + std::to_string(s) + " n=" + std::to_string(n));
  }
  const Graph chain = series_chain(2);
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t m = limit_moment(chain, n);
    o.require(BigInt(m) == fuss_catalan(n, 2), "chain n=" + std::to_string(n) + " gives " + std::to_string(m));
  }
  if (o.pass) o.detail = "s<=4, n<=8 exact; chain s=2 enumeration 1, 3, 12, 55";
  return o;
}

Outcome min_hamiltonian_family() {
  Outcome o;
  int graphs = 0, checks = 0;
  for_each_small_graph(4, 6, [&](const Graph& g) {
    ++graphs;
    const int flow = max_flow(build_flow_network(g)).value;
    for (int n : {2, 3}) {
      ++checks;
      const int h_min = min_H_bruteforce(g, n);
      if (h_min != (n - 1) * flow) o.require(false, serialize(g) + " n=" + std::to_string(n));
      const MomentPolynomial z = normalization_polynomial(g, n);
      if (z.min_key() != 0) o.require(false, "min h != 0 for " + serialize(g));
      // With no half-edges every constant assignment has h = 0.
      if (g.boundary_count() > 0 && z.count_at_min() != 1)
        o.require(false, "h minimizer not unique for " + serialize(g));
    }
  });
  o.require(graphs > 1000, "family too small: " + std::to_string(graphs));
  if (o.pass)
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(checks) + " (graph, n) pairs";
  return o;
}

Outcome page_correction() {
  Outcome o;
  const EmpiricalReport r = empirical_report(single_vertex(), 64, 200, 2, 2024);
  rank_log.add(r);
  const double gap = r.page_gap.mean;
  o.require(std::abs(gap - 0.5) <= 0.05, fmt("page gap %.4f", gap));
  const VnEstimate vn = vn_correction(MeasureExpr::mp());
  o.require(vn.exact && vn.value == 0.5, fmt("closed form %.6f", vn.value));
  if (o.pass) o.detail = fmt("log D - S = %.4f +- %.4f at D=64; closed form 0.5", gap, r.page_gap.std_error);
  return o;
}

Outcome lattice_measure() {
  Outcome o;
  const auto j = cmd_analyze(read_data("lattice_2x3.graph"), {.n_max = 4});
  o.require(j["maxflow"] == 2, "maxflow " + j["maxflow"].dump());
  const auto e = parse_measure_expr(j["expression"].get<std::string>());
  o.require(e.canonical() == MeasureExpr::mp_power(3), "expression " + j["expression"].get<std::string>());
  const VnEstimate vn = vn_correction(e);
  o.require(vn.exact && std::abs(vn.value - 13.0 / 12.0) < 1e-15, fmt("vn %.17g", vn.value));
  if (o.pass) o.detail = "maxflow 2, pow_box(mp,3), vn = 13/12";
  return o;
}

Outcome finite_d_end_to_end() {
  Outcome o;
  const Graph g = series_chain(2);
  std::string worst;
  double worst_z = 0;
  for (int d : {2, 3}) {
    const EmpiricalReport r = empirical_report(g, d, 4000, 3, 700 + d);
    rank_log.add(r);
    for (int n = 1; n <= 3; ++n) {
      const double exact = moment_polynomial(g, n).evaluate(d);
      const Summary& s = r.raw_moments[n - 1];
      const double z = std::abs(s.mean - exact) / s.std_error;
      if (z > worst_z) {
        worst_z = z;
        worst = fmt("D=%g n=%g", d, n);
      }
      o.require(z <= 3, fmt("D=%g n=%g: |dev| = %.2f SE", d, n, z));
    }
  }
  if (o.pass) o.detail = "4000 samples per D; worst deviation " + fmt("%.2f SE", worst_z) + " (" + worst + ")";
  return o;
}

Outcome concentration() {
  Outcome o;
  const Graph g = series_chain(2);
  std::vector<double> xs, ys;
  for (int d : {2, 4, 8, 16, 32}) {
    const EmpiricalReport r = empirical_report(g, d, 2000, 1, 800 + d);
    rank_log.add(r);
    xs.push_back(std::log(static_cast<double>(d)));
    ys.push_back(std::log(r.trace_tilde.variance));
    const double z = std::abs(r.trace_tilde.mean - 1.0) / r.trace_tilde.std_error;
    o.require(z <= 3, fmt("D=%g: mean Tr = %.4f (%.2f SE)", d, r.trace_tilde.mean, z));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i] / k, my += ys[i] / k;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  o.require(slope <= -0.5, fmt("slope %.3f", slope));
  if (o.pass) o.detail = fmt("log Var(Tr) slope %.3f over D = 2..32", slope);
  return o;
}

Outcome engine_self_checks() {
  Outcome o;
  const PowerSeries s = s_transform(moments(MeasureExpr::mp(), 8));
  PowerSeries one_plus_z(s.precision()), unit(s.precision());
  one_plus_z[0] = 1;
  one_plus_z[1] = 1;
  unit[0] = 1;
  o.require(s * one_plus_z == unit, "S_MP (1+z) != 1");

  Rng rng(2718, 0);
  int failures = 0;
  for (int t = 0; t < 50; ++t) {
    const MeasureExpr a = random_expr(rng, 2), b = random_expr(rng, 2), c = random_expr(rng, 2);
    const bool comm = moments(MeasureExpr::free_conv({a, b}), 8) == moments(MeasureExpr::free_conv({b, a}), 8);
    const bool assoc = moments(MeasureExpr::free_conv({MeasureExpr::free_conv({a, b}), c}), 8) ==
                       moments(MeasureExpr::free_conv({a, MeasureExpr::free_conv({b, c})}), 8);
    failures += !comm + !assoc;
  }
  o.require(failures == 0, std::to_string(failures) + " commutativity/associativity failures");

  const SpectrumSample mp = sample_spectrum(MeasureExpr::mp(), 256, 20, 31);
  const double m1 = mp.moment(1), m2 = mp.moment(2);
  o.require(std::abs(m1 - 1) <= 0.05 && std::abs(m2 - 2) / 2 <= 0.05, fmt("empirical m1 %.4f m2 %.4f", m1, m2));
  if (o.pass) o.detail = fmt("S_MP(1+z) = 1; 50 random triples; sampled m1 %.4f m2 %.4f", m1, m2);
  return o;
}

Outcome rank_bound() {
  Outcome o;
  // Instances where the bound is strictly below the matrix size.
  for (int d : {2, 3, 4}) rank_log.add(empirical_report(bottleneck(), d, 50, 2, 900 + d));
  rank_log.add(empirical_report(running_example(), 2, 20, 2, 999));
  o.require(rank_log.holds, fmt("worst tail ratio %.3g", rank_log.worst));
  if (o.pass)
    o.detail = std::to_string(rank_log.instances) + " instances, " + std::to_string(rank_log.samples) +
               " samples; worst tail ratio " + fmt("%.2g", rank_log.worst);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 means no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "running example flow and measure", 1, running_example_analysis},
      {2, "two-engine moment equality", 10, two_engine_equality},
      {3, "Fuss-Catalan moments", 5, fuss_catalan_moments},
      {4, "minimum Hamiltonian equals (n-1) maxflow", 60, min_hamiltonian_family},
      {5, "Page correction", 60, page_correction},
      {6, "lattice measure", 1, lattice_measure},
      {7, "finite-D end-to-end moments", 0, finite_d_end_to_end},
      {8, "concentration of Tr rho~", 0, concentration},
      {9, "free-probability engine self-checks", 60, engine_self_checks},
      {10, "rank bound", 0, rank_bound},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += fmt(" [time %.2f s exceeds %.0f s]", secs, c.limit_seconds);
    }
    failed += !o.pass;
    std::printf("%s  %2d  %-42s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
