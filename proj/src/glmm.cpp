#include "adgibbs/glmm.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace adgibbs {

namespace {

long draw_poisson(double rate, CounterRng& rng) {
  // inversion by sequential search; fine for the small rates used here
  const double u = rng.next_uniform();
  double pmf = std::exp(-rate);
  double cum = pmf;
  long k = 0;
  while (u > cum && k < 100000) {
    ++k;
    pmf *= rate / static_cast<double>(k);
    cum += pmf;
  }
  return k;
}

SelectionProbs uniform_alpha(int d) {
  SelectionProbs alpha;
  alpha.epsilon = 1.0 / static_cast<double>(d);
  alpha.probs.assign(static_cast<std::size_t>(d), alpha.epsilon);
  return alpha;
}

void check_state_dim(const GlmmModel& model, const ProductState& state) {
  if (state.dimension() != model.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dimension must be n + 1");
  }
}

}  // namespace

GlmmModel make_synthetic_glmm(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::BadArgument, "need n >= 1 observations");
  CounterRng rng(seed);
  const double theta_star = 0.5;
  GlmmModel model;
  model.y.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x_star = rng.next_normal();
    model.y.push_back(draw_poisson(std::exp(theta_star + x_star), rng));
  }
  return model;
}

double glmm_log_posterior(const GlmmModel& model, const ProductState& state) {
  check_state_dim(model, state);
  const int n = model.n();
  const double theta = state.coords[static_cast<std::size_t>(n)];
  double lp = -0.5 * theta * theta;
  for (int i = 0; i < n; ++i) {
    const double xi = state.coords[static_cast<std::size_t>(i)];
    const double eta = theta + xi;
    lp += static_cast<double>(model.y[static_cast<std::size_t>(i)]) * eta -
          std::exp(eta) - 0.5 * xi * xi;
  }
  return lp;
}

std::vector<double> glmm_grad(const GlmmModel& model, const ProductState& state) {
  check_state_dim(model, state);
  const int n = model.n();
  const double theta = state.coords[static_cast<std::size_t>(n)];
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  double gtheta = -theta;
  for (int i = 0; i < n; ++i) {
    const double xi = state.coords[static_cast<std::size_t>(i)];
    const double yi = static_cast<double>(model.y[static_cast<std::size_t>(i)]);
    const double mean = std::exp(theta + xi);
    g[static_cast<std::size_t>(i)] = -mean + yi - xi;
    gtheta += yi - mean;
  }
  g[static_cast<std::size_t>(n)] = gtheta;
  return g;
}

GlmmTarget::GlmmTarget(GlmmModel model) : model_(std::move(model)) {
  space_.axes.resize(static_cast<std::size_t>(model_.dimension()));
  for (Axis& ax : space_.axes) ax.kind = AxisKind::RealLine;
}

double GlmmTarget::log_density(const ProductState& state) const {
  return glmm_log_posterior(model_, state);
}

double GlmmTarget::conditional_log_density(int i, const ProductState& state,
                                           double value) const {
  return glmm_log_posterior(model_, state.with_coord(i, value));
}

void check_scale(double gamma, const ScaleRange& range) {
  if (!(range.a > 0.0) || !(range.a <= range.b) || !std::isfinite(range.b)) {
    throw Error(ErrorKind::BadArgument, "scale range needs 0 < a <= b < inf");
  }
  if (!(gamma >= range.a) || !(gamma <= range.b)) {
    throw Error(ErrorKind::ScaleOutOfRange,
                "proposal variance outside [a, b]");
  }
}

double gaussian_rw_log_density(double gamma, double from, double to) {
  const double diff = to - from;
  return -0.5 * std::log(2.0 * M_PI * gamma) - diff * diff / (2.0 * gamma);
}

double GaussianRwProposal::log_density(int /*i*/, double gamma_i,
                                       const ProductState& /*state*/,
                                       double from, double to) const {
  check_scale(gamma_i, range_);
  return gaussian_rw_log_density(gamma_i, from, to);
}

double GaussianRwProposal::sample(int /*i*/, double gamma_i,
                                  const ProductState& /*state*/, double from,
                                  CounterRng& rng) const {
  check_scale(gamma_i, range_);
  return from + std::sqrt(gamma_i) * rng.next_normal();
}

double scale_adapt_update(double gamma_i, bool accepted, long n,
                          const ScaleRange& range) {
  check_scale(gamma_i, range);
  if (n < 1) throw Error(ErrorKind::BadArgument, "step index must be >= 1");
  const double step = std::pow(static_cast<double>(n), -0.6);
  const double next =
      std::exp(std::log(gamma_i) + step * ((accepted ? 1.0 : 0.0) - 0.44));
  return std::clamp(next, range.a, range.b);
}

double variance_adapt_update(double empirical_var, const ScaleRange& range) {
  if (!(empirical_var >= 0.0)) {
    throw Error(ErrorKind::BadArgument, "empirical variance must be >= 0");
  }
  return std::clamp(5.76 * empirical_var, range.a, range.b);
}

Accept44Rule::Accept44Rule(std::vector<double> gamma0, ScaleRange range,
                           int dimension)
    : gamma_(std::move(gamma0)), range_(range), alpha_(uniform_alpha(dimension)) {
  for (double g : gamma_) check_scale(g, range_);
}

SelectionProbs Accept44Rule::update_alpha(const History&) { return alpha_; }

std::vector<double> Accept44Rule::update_gamma(const History& history) {
  // catch up on rows appended since the previous call (one per step)
  while (seen_ < history.size()) {
    ++seen_;
    const int i = history.coord(seen_);
    gamma_[static_cast<std::size_t>(i)] = scale_adapt_update(
        gamma_[static_cast<std::size_t>(i)], history.accepted(seen_), seen_,
        range_);
  }
  return gamma_;
}

Var24Rule::Var24Rule(std::vector<double> gamma0, ScaleRange range,
                     int dimension)
    : gamma_(std::move(gamma0)),
      range_(range),
      alpha_(uniform_alpha(dimension)),
      count_(static_cast<std::size_t>(dimension), 0),
      mean_(static_cast<std::size_t>(dimension), 0.0),
      m2_(static_cast<std::size_t>(dimension), 0.0) {
  for (double g : gamma_) check_scale(g, range_);
}

SelectionProbs Var24Rule::update_alpha(const History&) { return alpha_; }

std::vector<double> Var24Rule::update_gamma(const History& history) {
  while (seen_ < history.size()) {
    ++seen_;
    const ProductState& x = history.state(seen_);
    for (std::size_t k = 0; k < mean_.size(); ++k) {
      ++count_[k];
      const double delta = x.coords[k] - mean_[k];
      mean_[k] += delta / static_cast<double>(count_[k]);
      m2_[k] += delta * (x.coords[k] - mean_[k]);
    }
    const std::size_t i = static_cast<std::size_t>(history.coord(seen_));
    if (count_[i] >= 2) {
      const double var = m2_[i] / static_cast<double>(count_[i] - 1);
      const double target = std::log(variance_adapt_update(var, range_));
      const double step = std::pow(static_cast<double>(seen_), -0.6);
      const double cur = std::log(gamma_[i]);
      gamma_[i] = std::exp(cur + std::clamp(target - cur, -step, step));
    }
  }
  return gamma_;
}

std::string strategy_name(GlmmStrategy strategy) {
  switch (strategy) {
    case GlmmStrategy::Accept44:
      return "accept44";
    case GlmmStrategy::Var24:
      return "var24";
    case GlmmStrategy::Fixed:
      return "fixed";
  }
  throw Error(ErrorKind::BadArgument, "unknown strategy");
}

GlmmSummary glmm_run(const GlmmModel& model, GlmmStrategy strategy,
                     const GlmmRunOptions& options) {
  const int d = model.dimension();
  const long kept_steps = options.steps - options.burnin;
  constexpr long kBatches = 32;
  if (options.steps < 1000 || kept_steps < kBatches) {
    throw Error(ErrorKind::BadArgument,
                "glmm_run needs steps >= 1000 and > 32 rows after burn-in");
  }

  GlmmTarget target(model);
  GaussianRwProposal proposals(options.range);
  std::vector<double> gamma0(static_cast<std::size_t>(d), options.gamma0);

  std::unique_ptr<AdaptationRule> rule;
  switch (strategy) {
    case GlmmStrategy::Accept44:
      rule = std::make_unique<Accept44Rule>(gamma0, options.range, d);
      break;
    case GlmmStrategy::Var24:
      rule = std::make_unique<Var24Rule>(gamma0, options.range, d);
      break;
    case GlmmStrategy::Fixed:
      rule = std::make_unique<ConstantRule>(uniform_alpha(d));
      break;
  }

  const long batch_size = kept_steps / kBatches;
  const long used = batch_size * kBatches;  // drop the ragged remainder
  const std::size_t ds = static_cast<std::size_t>(d);
  std::vector<std::vector<double>> batch_sums(
      ds, std::vector<double>(kBatches, 0.0));
  std::vector<long> selected(ds, 0), accepted(ds, 0);
  std::vector<double> gamma_final(gamma0);

  CounterRng rng = CounterRng::substream(options.seed, options.replica_index);
  ProductState x0;
  x0.coords.assign(ds, 0.0);
  ChainOptions chain_options;
  chain_options.base_seed = options.seed;
  chain_options.replica_index = options.replica_index;
  chain_options.history_window = 1;

  run_adaptive_chain_stream(
      target, &proposals, *rule, x0, uniform_alpha(d), gamma0, options.steps,
      rng,
      [&](const TraceRow& row) {
        ++selected[static_cast<std::size_t>(row.coord - 1)];
        if (row.accepted) ++accepted[static_cast<std::size_t>(row.coord - 1)];
        if (row.gamma.has_value()) gamma_final = *row.gamma;
        const long k = row.n - options.burnin - 1;  // post-burn-in offset
        if (k < 0 || k >= used) return;
        const long b = k / batch_size;
        for (std::size_t c = 0; c < ds; ++c) {
          batch_sums[c][static_cast<std::size_t>(b)] += row.state.coords[c];
        }
      },
      chain_options);

  GlmmSummary summary;
  summary.seed = options.seed;
  summary.steps = options.steps;
  summary.strategy = strategy_name(strategy);
  summary.gamma_final = gamma_final;
  summary.coord_means.resize(ds);
  summary.coord_ses.resize(ds);
  summary.accept_rates.resize(ds);
  for (std::size_t c = 0; c < ds; ++c) {
    double mean = 0.0;
    for (double s : batch_sums[c]) mean += s;
    mean /= static_cast<double>(used);
    double ss = 0.0;
    for (double s : batch_sums[c]) {
      const double m = s / static_cast<double>(batch_size);
      ss += (m - mean) * (m - mean);
    }
    summary.coord_means[c] = mean;
    summary.coord_ses[c] =
        std::sqrt(ss / static_cast<double>(kBatches * (kBatches - 1)));
    summary.accept_rates[c] =
        selected[c] > 0
            ? static_cast<double>(accepted[c]) / static_cast<double>(selected[c])
            : 0.0;
  }
  summary.theta_mean = summary.coord_means[ds - 1];
  summary.theta_se = summary.coord_ses[ds - 1];
  return summary;
}

}  // namespace adgibbs
