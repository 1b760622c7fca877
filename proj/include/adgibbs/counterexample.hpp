#pragma once

#include <array>
#include <mutex>
#include <utility>
#include <vector>

#include "adgibbs/model.hpp"
#include "adgibbs/samplers.hpp"
#include "adgibbs/selection.hpp"

namespace adgibbs {

/// Point of the staircase space {(i,j) : i = j or i = j+1}.
struct StairState {
  long i = 1;
  long j = 1;

  bool valid() const { return j >= 1 && (i == j || i == j + 1); }
  bool operator==(const StairState&) const = default;
};

/// Adaptation speed sequence a(n) for the staircase update rule. Any
/// nondecreasing sequence with a(n) > 8 and a(n) -> infinity yields a
/// member of the same sampler class; how fast it grows decides whether
/// the untruncated chain is transient.
class AdaptSpeed {
 public:
  virtual ~AdaptSpeed() = default;
  virtual double a(long n) const = 0;
};

/// The deterministic regime schedule driving the adaptation speed:
///   b_0 = 0, b_1 = b1, b_n = b_{n-1} (1 + 1/(10 + log n)),
///   c_n = sum_{k<=n} b_k,
///   a(n) = 10 + log k  for  c_{k-1} < n <= c_k.
/// c_n is kept as an exact real; the regime test is the real comparison.
/// Memoization is extended lazily under a mutex, so concurrent readers
/// are safe.
class StairSchedule : public AdaptSpeed {
 public:
  explicit StairSchedule(double b1 = 1000.0);

  double b(int n) const;
  double c(int n) const;
  /// a(n) for a step index n >= 1. Exceeds 8 and is nondecreasing.
  double a(long n) const override;
  /// Regime index k with c_{k-1} < n <= c_k.
  int regime(long n) const;

 private:
  void extend_index(int n) const;
  void extend_to(double n) const;

  mutable std::mutex mu_;
  mutable std::vector<double> b_;  // b_[k] = b_k
  mutable std::vector<double> c_;  // c_[k] = c_k
};

/// a(n) = a0 + rate * n: a fast-growing speed for which the adaptation
/// bias 4/a(n) vanishes quickly, so the truncated sampler visibly
/// converges. The regime schedule above grows far too slowly for that
/// to happen in any feasible number of steps.
class LinearSpeed : public AdaptSpeed {
 public:
  explicit LinearSpeed(double a0 = 10.0, double rate = 1.0);
  double a(long n) const override;

 private:
  double a0_;
  double rate_;
};

/// Unnormalized target pi(i,j) = j^-2.
double stair_pi_weight(const StairState& state);

/// The adaptation rule: (1/2 + 4/a_n, 1/2 - 4/a_n) when i = j, swapped
/// when i = j + 1. Entries use epsilon = 1/2 - 4/a(1).
SelectionProbs stair_alpha(const StairState& state, long n,
                           const AdaptSpeed& schedule);

/// Full conditional of the given coordinate (1 or 2) as an explicit pmf.
std::vector<std::pair<StairState, double>> stair_conditional(
    const StairState& state, int coord);

/// Exact one-step law of the adaptive chain at step n: the alpha(n)
/// mixture of the two coordinate conditionals.
std::vector<std::pair<StairState, double>> stair_kernel_row(
    const StairState& state, long n, const AdaptSpeed& schedule);

/// Target model view of the staircase (M = 0: untruncated; M >= 2:
/// support clipped to {1..M}^2 with conditionals renormalized there).
/// Coordinate order: x1 = i, x2 = j. The conditional sampler consumes
/// exactly one uniform per draw.
class StairModel : public TargetModel {
 public:
  explicit StairModel(long M = 0);

  int dimension() const override { return 2; }
  const SpaceDescriptor& space() const override { return space_; }
  double log_density(const ProductState& state) const override;
  double conditional_log_density(int i, const ProductState& state,
                                 double value) const override;
  bool has_conditional_sampler() const override { return true; }
  double sample_conditional(int i, const ProductState& state,
                            CounterRng& rng) const override;
  bool is_enumerable() const override { return M_ > 0; }
  std::vector<ProductState> enumerate_support() const override;

  long truncation() const { return M_; }

 private:
  bool in_support(double i, double j) const;
  long M_;
  SpaceDescriptor space_;
};

/// Adaptation rule wrapping stair_alpha for the generic chain runner.
class StairAlphaRule : public AdaptationRule {
 public:
  explicit StairAlphaRule(const AdaptSpeed& schedule)
      : schedule_(&schedule) {}
  SelectionProbs update_alpha(const History& history) override;

 private:
  const AdaptSpeed* schedule_;
};

/// Simulates the adaptive chain with rule stair_alpha from x0.
ChainTrace simulate_stair(const StairState& x0, long steps,
                          const AdaptSpeed& schedule, CounterRng& rng);

/// Streaming variant for long runs.
void simulate_stair_stream(const StairState& x0, long steps,
                           const AdaptSpeed& schedule, CounterRng& rng,
                           const RowObserver& observe);

enum class TruncationMode {
  Hold,         // moves leaving the truncated space become self-transitions
  Renormalize,  // conditionals renormalized over in-range states
};

/// Exact one-step row of the truncated chain at step n, as a dense
/// vector over the truncated state list (see truncated_states()).
std::vector<double> truncated_kernel_row(const StairState& state, long n,
                                         long M, const AdaptSpeed& schedule,
                                         TruncationMode mode);

/// Enumeration order of the truncated space: (1,1), (2,1), (2,2), (3,2),
/// ..., (M,M); 2M-1 states.
std::vector<StairState> truncated_states(long M);

/// Normalized target on the truncated space.
std::vector<double> truncated_target(long M);

/// Exact distribution of X_n by forward iteration of the time-varying
/// rows (Hold truncation), starting from a point mass at x0.
std::vector<double> truncated_exact_distribution(long M, long n,
                                                 const StairState& x0,
                                                 const AdaptSpeed& schedule);

/// TV(pi_n, pi-tilde) sampled at the given step indices (ascending),
/// sharing one forward iteration across the whole grid.
std::vector<std::pair<long, double>> truncated_tv_curve(
    long M, const StairState& x0, const AdaptSpeed& schedule,
    const std::vector<long>& grid);

/// The comparison walk increment law nu_n = (1/4 - 1/a_n, 1/2, 1/4 + 1/a_n).
struct AuxWalkLaw {
  long n = 0;
  std::array<double, 3> pmf{};  // over {-1, 0, +1}

  double mean() const { return pmf[2] - pmf[0]; }
};

AuxWalkLaw aux_walk_pmf(long n, const AdaptSpeed& schedule);

/// The dominating measure mu_n^i with
///   mu_1 = (1/4 - 2/a_n)(1 + 2/i),
///   mu_3 = (1/4 + 2/a_n)(1 - 2/max(4,i)),
///   mu_2 the remainder.
std::array<double, 3> dominated_measure(long n, long i,
                                        const AdaptSpeed& schedule);

/// p >=_st q for laws on {-1,0,+1}: CDF of p pointwise at most CDF of q.
bool stoch_dominates(const std::array<double, 3>& p,
                     const std::array<double, 3>& q);

/// Whether the {-1,0,+1} increment law of i+j-2 under stair_kernel_row
/// stochastically dominates the walk law nu_n.
bool stair_row_dominates_walk(const StairState& state, long n,
                              const AdaptSpeed& schedule);

/// Hoeffding bound exp(-n t^2 / 2) for walk increments in [-1, 1].
double hoeffding_tail(long n, double t);

/// p_n = exp(-b_n / (2 (10 + log n)^2)) for n = 2..n_max, with the
/// smallest n0 from which log(p_{n-1}/p_n) > log(n^2/(n-1)^2) holds
/// through n_max. Partial sums accumulate in long double.
struct PnSeries {
  std::vector<double> p;       // p[k] = p_{k+2}
  long double partial_sum = 0; // sum of p_2..p_{n_max}
  long n0 = -1;                // -1 when the criterion never stabilizes
};

PnSeries pn_series(long n_max, const StairSchedule& schedule);

}  // namespace adgibbs
