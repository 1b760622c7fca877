#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adgibbs/model.hpp"
#include "adgibbs/samplers.hpp"

namespace adgibbs {

/// Poisson random-effects model: Y_i ~ Pois(e^{theta + X_i}) with unit
/// normal priors on theta and each X_i. Coordinate order of the
/// posterior state: (x_1..x_n, theta), dimension d = n + 1.
struct GlmmModel {
  std::vector<long> y;

  int n() const { return static_cast<int>(y.size()); }
  int dimension() const { return n() + 1; }
};

/// Synthetic dataset: theta* = 0.5, x* drawn from the prior, y from the
/// model, all from the given seed.
GlmmModel make_synthetic_glmm(int n, std::uint64_t seed);

/// Unnormalized log posterior
///   sum_i [y_i (theta + x_i) - e^{theta + x_i}] - x'x/2 - theta^2/2.
double glmm_log_posterior(const GlmmModel& model, const ProductState& state);

/// Gradient of glmm_log_posterior: component i is
/// -e^{theta + x_i} + y_i - x_i, the theta component is
/// sum_i (y_i - e^{theta + x_i}) - theta.
std::vector<double> glmm_grad(const GlmmModel& model, const ProductState& state);

class GlmmTarget : public TargetModel {
 public:
  explicit GlmmTarget(GlmmModel model);

  int dimension() const override { return model_.dimension(); }
  const SpaceDescriptor& space() const override { return space_; }
  double log_density(const ProductState& state) const override;
  double conditional_log_density(int i, const ProductState& state,
                                 double value) const override;

  const GlmmModel& model() const { return model_; }

 private:
  GlmmModel model_;
  SpaceDescriptor space_;
};

/// Allowed proposal-variance range [a, b].
struct ScaleRange {
  double a = 0.01;
  double b = 100.0;
};

void check_scale(double gamma, const ScaleRange& range);

/// N(from, gamma) random-walk log density (gamma is a variance).
double gaussian_rw_log_density(double gamma, double from, double to);

/// Symmetric Gaussian random-walk proposal with per-coordinate variance
/// gamma_i. Each draw consumes two uniforms (Box-Muller).
class GaussianRwProposal : public ProposalFamily {
 public:
  explicit GaussianRwProposal(ScaleRange range = {}) : range_(range) {}

  bool symmetric() const override { return true; }
  double log_density(int i, double gamma_i, const ProductState& state,
                     double from, double to) const override;
  double sample(int i, double gamma_i, const ProductState& state, double from,
                CounterRng& rng) const override;

  const ScaleRange& range() const { return range_; }

 private:
  ScaleRange range_;
};

/// Robbins-Monro move toward acceptance proportion 0.44:
///   log gamma += n^{-0.6} (1{accepted} - 0.44), clamped to [a, b].
double scale_adapt_update(double gamma_i, bool accepted, long n,
                          const ScaleRange& range);

/// Scale to 2.4 x the empirical standard deviation: returns
/// clamp(5.76 var, a, b).
double variance_adapt_update(double empirical_var, const ScaleRange& range);

enum class GlmmStrategy { Accept44, Var24, Fixed };

std::string strategy_name(GlmmStrategy strategy);

/// Proposal-scale controllers for the adaptive chain driver. Both keep
/// alpha constant uniform and change only the selected coordinate's
/// gamma per step, so |log gamma_n - log gamma_{n-1}| <= n^{-0.6}.
class Accept44Rule : public AdaptationRule {
 public:
  Accept44Rule(std::vector<double> gamma0, ScaleRange range, int dimension);

  SelectionProbs update_alpha(const History& history) override;
  bool adapts_gamma() const override { return true; }
  std::vector<double> update_gamma(const History& history) override;

 private:
  std::vector<double> gamma_;
  ScaleRange range_;
  SelectionProbs alpha_;
  long seen_ = 0;
};

/// Tracks per-coordinate running variance (Welford) and moves log gamma
/// toward log(clamp(5.76 var, a, b)) by at most n^{-0.6} per step.
class Var24Rule : public AdaptationRule {
 public:
  Var24Rule(std::vector<double> gamma0, ScaleRange range, int dimension);

  SelectionProbs update_alpha(const History& history) override;
  bool adapts_gamma() const override { return true; }
  std::vector<double> update_gamma(const History& history) override;

 private:
  std::vector<double> gamma_;
  ScaleRange range_;
  SelectionProbs alpha_;
  long seen_ = 0;
  std::vector<long> count_;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

struct GlmmSummary {
  double theta_mean = 0.0;
  double theta_se = 0.0;
  std::vector<double> coord_means;  // x_1..x_n, theta
  std::vector<double> coord_ses;
  std::vector<double> accept_rates;  // accepted / selected, per coordinate
  std::vector<double> gamma_final;
  std::uint64_t seed = 0;
  long steps = 0;
  std::string strategy;
};

struct GlmmRunOptions {
  long steps = 100000;
  std::uint64_t seed = 0;
  std::uint64_t replica_index = 0;
  ScaleRange range;
  double gamma0 = 1.0;
  long burnin = 0;  // rows discarded before averaging
};

/// Runs the component-wise Metropolis chain with the chosen scale
/// strategy and returns batch-means summaries (32 batches).
GlmmSummary glmm_run(const GlmmModel& model, GlmmStrategy strategy,
                     const GlmmRunOptions& options);

}  // namespace adgibbs
