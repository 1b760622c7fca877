#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "adgibbs/errors.hpp"
#include "adgibbs/glmm.hpp"
#include "adgibbs/samplers.hpp"

using namespace adgibbs;

namespace {

ProductState random_state(int d, CounterRng& rng) {
  ProductState s;
  s.coords.resize(static_cast<std::size_t>(d));
  for (auto& c : s.coords) c = rng.next_normal();
  return s;
}

}  // namespace

TEST_CASE("log posterior at simple points") {
  GlmmModel one{{0}};
  ProductState zero2{{0.0, 0.0}};
  CHECK(glmm_log_posterior(one, zero2) == doctest::Approx(-1.0).epsilon(1e-14));

  GlmmModel two{{2, 3}};
  ProductState zero3{{0.0, 0.0, 0.0}};
  CHECK(glmm_log_posterior(two, zero3) == doctest::Approx(-2.0).epsilon(1e-14));

  try {
    glmm_log_posterior(two, zero2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("gradient at the origin and under large random effects") {
  GlmmModel one{{0}};
  ProductState zero2{{0.0, 0.0}};
  const std::vector<double> g = glmm_grad(one, zero2);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(g[1] == doctest::Approx(-1.0).epsilon(1e-14));

  // for large x_i the exponential term dominates and the gradient
  // plunges below y_i - x_i
  GlmmModel m{{3}};
  for (double x = 0.0; x <= 50.0; x += 5.0) {
    ProductState s{{x, 0.0}};
    const double gi = glmm_grad(m, s)[0];
    CHECK(gi <= 3.0 - x + 1e-12);
  }
}

TEST_CASE("gradient matches central finite differences") {
  const GlmmModel model = make_synthetic_glmm(4, 42);
  CounterRng rng(90210);
  const double h = 1e-5;
  for (int trial = 0; trial < 100; ++trial) {
    const ProductState s = random_state(model.dimension(), rng);
    const std::vector<double> g = glmm_grad(model, s);
    for (int i = 0; i < model.dimension(); ++i) {
      const double up = glmm_log_posterior(model, s.with_coord(i, s.coords[i] + h));
      const double dn = glmm_log_posterior(model, s.with_coord(i, s.coords[i] - h));
      const double fd = (up - dn) / (2.0 * h);
      CHECK(std::abs(g[static_cast<std::size_t>(i)] - fd) <=
            1e-6 * std::max(1.0, std::abs(g[static_cast<std::size_t>(i)])));
    }
  }
}

TEST_CASE("synthetic data generation is reproducible") {
  const GlmmModel a = make_synthetic_glmm(5, 42);
  const GlmmModel b = make_synthetic_glmm(5, 42);
  const GlmmModel c = make_synthetic_glmm(5, 43);
  REQUIRE(a.y.size() == 5);
  CHECK(a.y == b.y);
  CHECK(a.y != c.y);
  for (long y : a.y) CHECK(y >= 0);
}

TEST_CASE("random-walk proposal density and symmetry") {
  CHECK(std::exp(gaussian_rw_log_density(2.0, 1.3, 1.3)) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI * 2.0)).epsilon(1e-12));
  CHECK(std::exp(gaussian_rw_log_density(1.0, 0.0, 1.0)) ==
        doctest::Approx(0.241971).epsilon(1e-5));
  CHECK(gaussian_rw_log_density(0.7, -0.4, 2.2) ==
        gaussian_rw_log_density(0.7, 2.2, -0.4));
  CHECK_THROWS_AS(check_scale(0.001, ScaleRange{}), Error);
  CHECK_THROWS_AS(check_scale(200.0, ScaleRange{}), Error);
}

TEST_CASE("acceptance-rate controller update") {
  const ScaleRange range;
  CHECK(scale_adapt_update(1.0, true, 1, range) ==
        doctest::Approx(std::exp(0.56)).epsilon(1e-12));
  CHECK(scale_adapt_update(1.0, false, 1, range) ==
        doctest::Approx(std::exp(-0.44)).epsilon(1e-12));
  CHECK(scale_adapt_update(range.b, true, 1, range) == range.b);
  CHECK(scale_adapt_update(range.a, false, 1, range) == range.a);
  // increments shrink with n
  const double g5 = scale_adapt_update(1.0, true, 32, range);
  CHECK(std::abs(std::log(g5)) ==
        doctest::Approx(std::pow(32.0, -0.6) * 0.56).epsilon(1e-12));
}

TEST_CASE("variance-targeting update scales by 2.4 squared") {
  const ScaleRange range;
  CHECK(variance_adapt_update(1.0, range) == doctest::Approx(5.76).epsilon(1e-12));
  CHECK(variance_adapt_update(0.0, range) == range.a);
  CHECK(variance_adapt_update(100.0, ScaleRange{0.01, 10.0}) == 10.0);
}

TEST_CASE("both controllers honor the diminishing envelope and the range") {
  const GlmmModel model = make_synthetic_glmm(3, 42);
  const GlmmTarget target(model);
  const ScaleRange range;
  const GaussianRwProposal proposal(range);
  const int d = model.dimension();
  const SelectionProbs alpha = validate_selection_probs(
      std::vector<double>(static_cast<std::size_t>(d), 1.0 / d), 1.0 / d);
  const std::vector<double> gamma0(static_cast<std::size_t>(d), 1.0);
  ProductState x0;
  x0.coords.assign(static_cast<std::size_t>(d), 0.0);

  auto run_with = [&](AdaptationRule& rule) {
    CounterRng rng = CounterRng::substream(5150, 0);
    std::vector<double> prev = gamma0;
    run_adaptive_chain_stream(
        target, &proposal, rule, x0, alpha, gamma0, 3000, rng,
        [&](const TraceRow& row) {
          REQUIRE(row.gamma.has_value());
          // gamma_n digests the outcome of row n-1, so the increment is
          // bounded by the Robbins-Monro step at index n-1
          const double envelope =
              std::pow(static_cast<double>(std::max(row.n - 1, 1L)), -0.6) +
              1e-12;
          for (int i = 0; i < d; ++i) {
            const double g = (*row.gamma)[static_cast<std::size_t>(i)];
            CHECK(g >= range.a);
            CHECK(g <= range.b);
            CHECK(std::abs(std::log(g) -
                           std::log(prev[static_cast<std::size_t>(i)])) <=
                  envelope);
          }
          prev = *row.gamma;
        });
  };

  Accept44Rule rule44(gamma0, range, d);
  run_with(rule44);
  Var24Rule rule24(gamma0, range, d);
  run_with(rule24);
}

TEST_CASE("short adaptive run produces a coherent summary") {
  const GlmmModel model = make_synthetic_glmm(5, 42);
  GlmmRunOptions options;
  options.steps = 40000;
  options.burnin = 2000;
  options.seed = 12;
  const GlmmSummary s = glmm_run(model, GlmmStrategy::Accept44, options);
  CHECK(s.strategy == "accept44");
  CHECK(s.steps == 40000);
  REQUIRE(s.accept_rates.size() == 6);
  REQUIRE(s.gamma_final.size() == 6);
  REQUIRE(s.coord_means.size() == 6);
  CHECK(s.theta_se > 0.0);
  CHECK(std::isfinite(s.theta_mean));
  for (double r : s.accept_rates) {
    CHECK(r > 0.2);
    CHECK(r < 0.7);
  }
  for (double g : s.gamma_final) {
    CHECK(g >= options.range.a);
    CHECK(g <= options.range.b);
  }
  // determinism of the whole pipeline
  const GlmmSummary again = glmm_run(model, GlmmStrategy::Accept44, options);
  CHECK(again.theta_mean == s.theta_mean);
  CHECK(again.gamma_final == s.gamma_final);

  try {
    options.steps = 10;
    glmm_run(model, GlmmStrategy::Accept44, options);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadArgument);
  }
}
