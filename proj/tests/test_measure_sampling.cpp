#include "doctest.h"

#include <cmath>
#include <numeric>

#include "rtn/measure_sampling.hpp"

using namespace rtn;

namespace {

MeasureExpr parse(const char* s) { return parse_measure_expr(s); }

double rel_err(double got, double want) { return std::abs(got - want) / want; }

// Mean of per-draw means and its standard error.
std::pair<double, double> mean_with_se(const SpectrumSample& s) {
  std::vector<double> means;
  for (const auto& d : s.draws) means.push_back(std::accumulate(d.begin(), d.end(), 0.0) / d.size());
  const double k = static_cast<double>(means.size());
  const double mean = std::accumulate(means.begin(), means.end(), 0.0) / k;
  double var = 0;
  for (double m : means) var += (m - mean) * (m - mean);
  return {mean, std::sqrt(var / (k - 1) / k)};
}

}  // namespace

TEST_CASE("delta at one samples exactly") {
  const auto s = sample_spectrum(MeasureExpr::one(), 16, 3, 1);
  for (double x : s.pooled()) CHECK(x == 1.0);
  CHECK_THROWS_AS(sample_spectrum(MeasureExpr::mp(), 1, 1, 0), std::invalid_argument);
}

TEST_CASE("Wishart spectrum matches Catalan moments") {
  const auto s = sample_spectrum(MeasureExpr::mp(), 256, 20, 3);
  CHECK(s.size == 256);
  CHECK(s.draws.size() == 20);
  CHECK(rel_err(s.moment(1), 1.0) < 0.05);
  CHECK(rel_err(s.moment(2), 2.0) < 0.05);
  for (double x : s.pooled()) CHECK(x >= 0.0);
}

TEST_CASE("free square of MP") {
  const auto s = sample_spectrum(MeasureExpr::mp_power(2), 256, 10, 4);
  CHECK(rel_err(s.moment(2), 3.0) < 0.05);
}

TEST_CASE("classical product and mixed expressions") {
  const auto s = sample_spectrum(parse("times(mp, mp)"), 200, 10, 5);
  CHECK(rel_err(s.moment(2), 4.0) < 0.05);

  // Non-MP factor inside a free product goes through a Haar rotation.
  const MeasureExpr e = parse("box(times(mp, mp), mp)");
  const auto m = moments(e, 2);
  const auto t = sample_spectrum(e, 200, 10, 6);
  CHECK(rel_err(t.moment(2), m[2].convert_to<double>()) < 0.08);
}

TEST_CASE("sample means sit within three standard errors of one") {
  for (const char* text : {"mp", "pow_box(mp,2)", "times(mp, mp)", "box(mp, times(mp, mp))"}) {
    CAPTURE(text);
    const auto [mean, se] = mean_with_se(sample_spectrum(parse(text), 64, 30, 8));
    CHECK(std::abs(mean - 1.0) < 3 * se + 1e-12);
  }
}

TEST_CASE("sampling is deterministic per seed") {
  const MeasureExpr e = parse("box(mp, times(mp, mp))");
  const auto a = sample_spectrum(e, 32, 3, 99);
  const auto b = sample_spectrum(e, 32, 3, 99);
  CHECK(a.draws == b.draws);
  const auto c = sample_spectrum(e, 32, 3, 100);
  CHECK(a.draws != c.draws);
  // Draw i depends on (seed, i) only, not on how many draws are requested.
  const auto d = sample_spectrum(e, 32, 1, 99);
  CHECK(d.draws.front() == a.draws.front());
}

TEST_CASE("Renyi corrections") {
  CHECK(renyi_correction(moments(MeasureExpr::mp(), 2), 2) == doctest::Approx(std::log(2.0)));
  CHECK(renyi_correction(moments(MeasureExpr::mp_power(2), 3), 2) == doctest::Approx(std::log(3.0)));
  CHECK(renyi_correction(moments(MeasureExpr::one(), 5), 4) == 0.0);
  CHECK_THROWS_AS(renyi_correction(moments(MeasureExpr::mp(), 3), 4), std::out_of_range);
  CHECK_THROWS_AS(renyi_correction(moments(MeasureExpr::mp(), 3), 1), std::out_of_range);
}

TEST_CASE("von Neumann corrections") {
  const auto mp = vn_correction(MeasureExpr::mp());
  CHECK(mp.exact);
  CHECK(mp.value == doctest::Approx(0.5));
  CHECK(vn_correction(MeasureExpr::mp_power(3)).value == doctest::Approx(13.0 / 12.0));
  CHECK(vn_correction(MeasureExpr::one()).value == 0.0);

  const auto sampled = vn_correction(MeasureExpr::mp(), {false, 200, 10, 1});
  CHECK_FALSE(sampled.exact);
  CHECK(sampled.std_error > 0);
  CHECK(std::abs(sampled.value - 0.5) < 0.03);

  const auto mixed = vn_correction(parse("times(mp, mp)"), {true, 100, 10, 2});
  CHECK_FALSE(mixed.exact);
  CHECK(mixed.value > 0);
}

TEST_CASE("histogram") {
  const Histogram h = make_histogram({0.0, 0.5, 1.0, 1.0}, 2);
  REQUIRE(h.edges.size() == 3);
  CHECK(h.edges.front() == 0.0);
  CHECK(h.edges.back() == 1.0);
  CHECK(h.counts == std::vector<std::uint64_t>{1, 3});
  const Histogram flat = make_histogram({1.0, 1.0}, 4);
  CHECK(std::accumulate(flat.counts.begin(), flat.counts.end(), std::uint64_t{0}) == 2);
  CHECK(xlogx(0.0) == 0.0);
}
