#include <doctest.h>

#include <cmath>
#include <vector>

#include "adgibbs/errors.hpp"
#include "adgibbs/rng.hpp"
#include "adgibbs/theory.hpp"

using namespace adgibbs;

namespace {

std::vector<double> random_y_point(int d, double eps, CounterRng& rng) {
  std::vector<double> w(static_cast<std::size_t>(d));
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.next_uniform());
    total += x;
  }
  const double slack = 1.0 - d * eps;
  for (auto& x : w) x = eps + slack * (x / total);
  return w;
}

}  // namespace

TEST_CASE("total variation on finite vectors") {
  CHECK(tv_finite({0.3, 0.7}, {0.3, 0.7}) == 0.0);
  CHECK(tv_finite({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  // hand sum: (0.10 + 0.07 + 0.03)/2
  CHECK(tv_finite({0.45, 0.08, 0.47}, {0.35, 0.15, 0.5}) ==
        doctest::Approx(0.1).epsilon(1e-12));
  try {
    tv_finite({0.5, 0.5}, {1.0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
  try {
    tv_finite({0.5, 0.4}, {0.5, 0.5});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalized);
  }
}

TEST_CASE("mixture coefficient r = min alpha_i / beta_i") {
  const SelectionProbs a = validate_selection_probs({0.9, 0.1}, 0.1);
  const SelectionProbs b = validate_selection_probs({0.5, 0.5}, 0.1);
  CHECK(mixture_coefficient(a, a) == doctest::Approx(1.0));
  CHECK(mixture_coefficient(a, b) == doctest::Approx(0.2).epsilon(1e-14));
  try {
    const SelectionProbs c = validate_selection_probs({0.4, 0.3, 0.3}, 0.1);
    mixture_coefficient(a, c);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("mixture residual is a probability vector, r above its floor") {
  CounterRng rng(1001);
  const double eps = 0.1;
  const int d = 3;
  const double floor_r = eps / (1.0 - (d - 1) * eps);
  for (int trial = 0; trial < 300; ++trial) {
    const SelectionProbs a =
        validate_selection_probs(random_y_point(d, eps, rng), eps);
    const SelectionProbs b =
        validate_selection_probs(random_y_point(d, eps, rng), eps);
    const double r = mixture_coefficient(a, b);
    CHECK(r >= floor_r - 1e-12);
    CHECK(r <= 1.0 + 1e-12);
    if (r < 1.0 - 1e-9) {
      double total = 0.0;
      for (int i = 0; i < d; ++i) {
        const double q = (a.probs[static_cast<std::size_t>(i)] -
                          r * b.probs[static_cast<std::size_t>(i)]) /
                         (1.0 - r);
        CHECK(q >= -1e-12);
        total += q;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("kernel Lipschitz bound delta/(eps+delta)") {
  const SelectionProbs a = validate_selection_probs({0.5, 0.5}, 0.1);
  const SelectionProbs b = validate_selection_probs({0.6, 0.4}, 0.1);
  CHECK(kernel_lipschitz_bound(a, a) == 0.0);
  // delta = 0.1, eps = 0.1
  CHECK(kernel_lipschitz_bound(a, b) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("uniform convergence bound values") {
  MinorizationCertificate cert;
  cert.m = 1;
  cert.s = 0.3;
  CHECK(uniform_bound(cert, 0.5, 2, 2) == doctest::Approx(0.49).epsilon(1e-12));
  CHECK(uniform_bound(cert, 0.5, 2, 0) == 1.0);
  cert.m = 2;
  cert.s = 0.5;
  const double expected = std::pow(1.0 - std::pow(1.0 / 9.0, 2) * 0.5, 5);
  CHECK(uniform_bound(cert, 0.1, 2, 10) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.969513).epsilon(1e-5));
}

TEST_CASE("uniform bound is nonincreasing in n and s") {
  MinorizationCertificate cert;
  cert.m = 2;
  double prev = 2.0;
  cert.s = 0.5;
  for (long n = 0; n <= 40; n += 2) {
    const double v = uniform_bound(cert, 0.1, 2, n);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  prev = 2.0;
  for (double s = 0.1; s <= 0.95; s += 0.05) {
    cert.s = s;
    const double v = uniform_bound(cert, 0.1, 2, 10);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("strong uniform upgrade certificate") {
  MinorizationCertificate c = strong_unif_upgrade(1, 0.5);
  CHECK(c.m == 5);
  CHECK(c.s == doctest::Approx(0.03125).epsilon(1e-14));
  CHECK(c.measure_kind == MeasureKind::StationaryPi);
  c = strong_unif_upgrade(2, 0.5);
  CHECK(c.m == 10);
  CHECK(c.s == doctest::Approx(0.03125).epsilon(1e-14));
  c = strong_unif_upgrade(1, 0.9);
  CHECK(c.m == 2);
  CHECK(c.s == doctest::Approx(0.10125).epsilon(1e-12));
  try {
    strong_unif_upgrade(1, 1.5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadMass);
  }
}

TEST_CASE("systematic scan certificate converts to uniform random scan") {
  MinorizationCertificate in;
  in.m = 1;
  in.s = 1.0;
  MinorizationCertificate out = systematic_minorization(in, 2);
  CHECK(out.m == 2);
  CHECK(out.s == doctest::Approx(0.25).epsilon(1e-14));
  in.m = 2;
  in.s = 0.5;
  out = systematic_minorization(in, 2);
  CHECK(out.m == 4);
  CHECK(out.s == doctest::Approx(0.03125).epsilon(1e-14));
  in.m = 1;
  in.s = 0.4;
  out = systematic_minorization(in, 3);
  CHECK(out.m == 3);
  CHECK(out.s == doctest::Approx(0.4 / 27.0).epsilon(1e-12));
}

TEST_CASE("drift growth rate r(s)") {
  CHECK(drift_rate_r(0.5) == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(drift_rate_r(0.1) ==
        doctest::Approx(1.0 + 0.1 * std::pow(0.9, 9)).epsilon(1e-12));
  CHECK(drift_rate_r(1e-6) ==
        doctest::Approx(1.0 + 1e-6 * std::exp(-1.0)).epsilon(1e-6));
  try {
    drift_rate_r(1.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadExponent);
  }
}

TEST_CASE("drift exponent selection on the dyadic grid") {
  CHECK(drift_exponent_select(0.5, 0.5) == doctest::Approx(0.5));
  const double eps = 0.1, xi = 0.01;
  const double s = drift_exponent_select(eps, xi);
  const double threshold = 1.0 + eps * xi / (1.0 - 2.0 * eps * xi);
  CHECK(drift_rate_r(s) < threshold);
  // largest feasible grid point: doubling s must break the inequality
  // (unless s is already the top of the grid)
  if (s < 0.5) CHECK(drift_rate_r(2.0 * s) >= threshold);
  CHECK_THROWS_AS(drift_exponent_select(0.1, 0.0), Error);
}

TEST_CASE("guarded floor forgives 1e-12 rounding") {
  CHECK(guarded_floor(3.0) == 3.0);
  CHECK(guarded_floor(3.0 - 1e-13) == 3.0);
  CHECK(guarded_floor(2.9999) == 2.0);
  CHECK(guarded_floor(-1.0000000000001) == -1.0);
}

TEST_CASE("drift bound holds for a discrete heavy-ish tailed Metropolis") {
  // pi(x) proportional to exp(-|x|) on {-200..200}, proposal +/-1 each
  // with probability 1/2 (hold at the ends); V_s = pi^{-s}
  const long N = 200;
  auto logpi = [](long x) { return -static_cast<double>(std::labs(x)); };
  for (const double s : {0.5, 0.25, 0.125, 0.0625}) {
    const double r = drift_rate_r(s);
    for (long x = -N + 5; x <= N - 5; ++x) {
      if (std::labs(x) < 3) continue;  // bound targets the tails
      double ratio = 0.0;
      double stay = 1.0;
      for (const long y : {x - 1, x + 1}) {
        const double acc = std::min(1.0, std::exp(logpi(y) - logpi(x)));
        const double move = 0.5 * acc;
        stay -= move;
        // V_s(y)/V_s(x) = exp(-s (logpi(y) - logpi(x)))
        ratio += move * std::exp(-s * (logpi(y) - logpi(x)));
      }
      ratio += stay;
      CHECK(ratio <= r + 1e-9);
    }
  }
}
