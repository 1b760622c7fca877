#include "adgibbs/samplers.hpp"

#include <cmath>

#include "adgibbs/io.hpp"

namespace adgibbs {

void ChainTrace::write_csv(std::ostream& os) const {
  if (rows.empty()) return;
  const int d = rows.front().state.dimension();
  const bool with_gamma = rows.front().gamma.has_value();
  os << "n,coord,accepted";
  for (int k = 1; k <= d; ++k) os << ",x" << k;
  for (int k = 1; k <= d; ++k) os << ",alpha" << k;
  if (with_gamma) {
    for (int k = 1; k <= d; ++k) os << ",gamma" << k;
  }
  os << "\n";
  for (const TraceRow& row : rows) {
    os << row.n << "," << row.coord << "," << (row.accepted ? 1 : 0);
    for (double v : row.state.coords) os << "," << format_double(v);
    for (double v : row.alpha.probs) os << "," << format_double(v);
    if (with_gamma) {
      for (double v : *row.gamma) os << "," << format_double(v);
    }
    os << "\n";
  }
}

int pick_coordinate(const SelectionProbs& alpha, CounterRng& rng) {
  const double u = rng.next_uniform();
  double cum = 0.0;
  const int d = alpha.dimension();
  for (int i = 0; i < d; ++i) {
    cum += alpha.probs[i];
    if (u <= cum) return i;  // tie at the boundary goes to the lower index
  }
  return d - 1;  // guards against cum < 1 from rounding
}

std::pair<ProductState, int> rsg_step(const TargetModel& model,
                                      const SelectionProbs& alpha,
                                      const ProductState& state,
                                      CounterRng& rng) {
  if (!model.has_conditional_sampler()) {
    throw Error(ErrorKind::MissingConditionalSampler,
                "rsg_step needs exact conditional samplers");
  }
  const int i = pick_coordinate(alpha, rng);
  const double value = model.sample_conditional(i, state, rng);
  return {state.with_coord(i, value), i};
}

double acceptance_prob(const TargetModel& model, const ProposalFamily& proposals,
                       int i, double gamma_i, const ProductState& state,
                       double candidate) {
  const double current = state.coords[i];
  const double lp_current = model.conditional_log_density(i, state, current);
  if (!std::isfinite(lp_current)) {
    throw Error(ErrorKind::NonFiniteLogDensity,
                "target log density is not finite at the current state");
  }
  const double lp_candidate = model.conditional_log_density(i, state, candidate);
  double log_ratio = lp_candidate - lp_current;
  if (!proposals.symmetric()) {
    log_ratio += proposals.log_density(i, gamma_i, state, candidate, current) -
                 proposals.log_density(i, gamma_i, state, current, candidate);
  }
  if (log_ratio >= 0.0) return 1.0;
  return std::exp(log_ratio);
}

std::pair<ProductState, bool> mwg_step(const TargetModel& model,
                                       const ProposalFamily& proposals, int i,
                                       double gamma_i, const ProductState& state,
                                       CounterRng& rng) {
  const double candidate = proposals.sample(i, gamma_i, state, state.coords[i], rng);
  const double a = acceptance_prob(model, proposals, i, gamma_i, state, candidate);
  const double u = rng.next_uniform();
  if (u < a) {
    return {state.with_coord(i, candidate), true};
  }
  return {state, false};
}

void run_adaptive_chain_stream(const TargetModel& model,
                               const ProposalFamily* proposals,
                               AdaptationRule& rule, const ProductState& x0,
                               const SelectionProbs& alpha0,
                               const std::optional<std::vector<double>>& gamma0,
                               long steps, CounterRng& rng,
                               const RowObserver& observe,
                               const ChainOptions& options) {
  if (steps < 1) {
    throw Error(ErrorKind::BadArgument, "steps must be >= 1");
  }
  if (proposals == nullptr && !model.has_conditional_sampler()) {
    throw Error(ErrorKind::MissingConditionalSampler,
                "AdapRSG mode needs exact conditional samplers");
  }
  const bool adapt_gamma = proposals != nullptr && rule.adapts_gamma();

  History history(options.history_window);
  history.start(x0);

  ProductState state = x0;
  std::vector<double> gamma;
  if (proposals != nullptr) {
    if (!gamma0.has_value()) {
      throw Error(ErrorKind::BadArgument, "Metropolis modes need gamma0");
    }
    gamma = *gamma0;
  }

  TraceRow row;
  for (long n = 1; n <= steps; ++n) {
    SelectionProbs alpha = rule.update_alpha(history);
    try {
      alpha = validate_selection_probs(alpha.probs, alpha0.epsilon);
    } catch (const Error&) {
      throw Error(ErrorKind::AdaptationLeftY,
                  "adaptation rule returned alpha outside Y");
    }
    if (adapt_gamma) {
      gamma = rule.update_gamma(history);
    }

    int coord = 0;
    bool accepted = true;
    if (proposals == nullptr) {
      auto [next, i] = rsg_step(model, alpha, state, rng);
      state = std::move(next);
      coord = i;
    } else {
      const int i = pick_coordinate(alpha, rng);
      auto [next, acc] = mwg_step(model, *proposals, i, gamma[i], state, rng);
      state = std::move(next);
      coord = i;
      accepted = acc;
    }

    history.append(state, alpha, gamma, coord, accepted);

    row.n = n;
    row.coord = coord + 1;
    row.accepted = accepted;
    row.state = state;
    row.alpha = std::move(alpha);
    if (proposals != nullptr) {
      row.gamma = gamma;
    }
    observe(row);
  }
}

ChainTrace run_adaptive_chain(const TargetModel& model,
                              const ProposalFamily* proposals,
                              AdaptationRule& rule, const ProductState& x0,
                              const SelectionProbs& alpha0,
                              const std::optional<std::vector<double>>& gamma0,
                              long steps, CounterRng& rng,
                              const ChainOptions& options) {
  ChainTrace trace;
  trace.base_seed = options.base_seed;
  trace.replica_index = options.replica_index;
  trace.rows.reserve(static_cast<std::size_t>(steps));
  run_adaptive_chain_stream(model, proposals, rule, x0, alpha0, gamma0, steps,
                            rng, [&](const TraceRow& row) { trace.rows.push_back(row); },
                            options);
  return trace;
}

}  // namespace adgibbs
