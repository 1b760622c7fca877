#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "adgibbs/model.hpp"
#include "adgibbs/rng.hpp"
#include "adgibbs/selection.hpp"
#include "adgibbs/state.hpp"

namespace adgibbs {

struct TraceRow {
  long n = 0;                 // step index, starting at 1
  int coord = 0;              // 1-based selected coordinate
  bool accepted = true;       // always true for exact Gibbs updates
  ProductState state;
  SelectionProbs alpha;
  std::optional<std::vector<double>> gamma;
};

/// Time series of a single chain run with RNG provenance.
struct ChainTrace {
  std::vector<TraceRow> rows;
  std::uint64_t base_seed = 0;
  std::uint64_t replica_index = 0;

  /// CSV per the wire format: header n,coord,accepted,x1..xd,
  /// alpha1..alphad[,gamma1..gammad]; reals as shortest round-trip
  /// decimals, booleans as 0/1.
  void write_csv(std::ostream& os) const;
};

/// Inverse-CDF coordinate choice over alpha in index order, consuming
/// exactly one uniform. A draw landing exactly on a cumulative sum
/// resolves to the lower index. Returns a 0-based coordinate.
int pick_coordinate(const SelectionProbs& alpha, CounterRng& rng);

/// One random scan Gibbs update: resamples a single alpha-chosen
/// coordinate from its full conditional. Returns the new state and the
/// 0-based updated coordinate.
std::pair<ProductState, int> rsg_step(const TargetModel& model,
                                      const SelectionProbs& alpha,
                                      const ProductState& state,
                                      CounterRng& rng);

/// Metropolis-Hastings acceptance probability for replacing coordinate i
/// by `candidate`. Computed in log space; for symmetric families the
/// proposal ratio term is skipped entirely.
double acceptance_prob(const TargetModel& model, const ProposalFamily& proposals,
                       int i, double gamma_i, const ProductState& state,
                       double candidate);

/// One Metropolis-within-Gibbs update of coordinate i. Consumes the
/// proposal family's documented variate count plus one accept/reject
/// uniform.
std::pair<ProductState, bool> mwg_step(const TargetModel& model,
                                       const ProposalFamily& proposals, int i,
                                       double gamma_i, const ProductState& state,
                                       CounterRng& rng);

struct ChainOptions {
  std::uint64_t base_seed = 0;
  std::uint64_t replica_index = 0;
  std::size_t history_window = SIZE_MAX;
};

using RowObserver = std::function<void(const TraceRow&)>;

/// Generic adaptive chain driver covering three modes:
///   - no proposals:           exact conditional updates (AdapRSG)
///   - proposals, fixed gamma: AdapRSMwG
///   - proposals + R'_n:       AdapRSadapMwG
/// Each step sets alpha_n (and gamma_n) from the history through n-1,
/// then performs one coordinate update. Rows are delivered in order.
void run_adaptive_chain_stream(const TargetModel& model,
                               const ProposalFamily* proposals,
                               AdaptationRule& rule, const ProductState& x0,
                               const SelectionProbs& alpha0,
                               const std::optional<std::vector<double>>& gamma0,
                               long steps, CounterRng& rng,
                               const RowObserver& observe,
                               const ChainOptions& options = {});

/// As run_adaptive_chain_stream, collecting the full trace.
ChainTrace run_adaptive_chain(const TargetModel& model,
                              const ProposalFamily* proposals,
                              AdaptationRule& rule, const ProductState& x0,
                              const SelectionProbs& alpha0,
                              const std::optional<std::vector<double>>& gamma0,
                              long steps, CounterRng& rng,
                              const ChainOptions& options = {});

}  // namespace adgibbs
