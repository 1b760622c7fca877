#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "adgibbs/errors.hpp"
#include "adgibbs/rng.hpp"
#include "adgibbs/selection.hpp"
#include "adgibbs/state.hpp"

namespace adgibbs {

/// Target distribution known up to a normalising constant. Log densities
/// are natural-log and unnormalized throughout.
class TargetModel {
 public:
  virtual ~TargetModel() = default;

  virtual int dimension() const = 0;
  virtual const SpaceDescriptor& space() const = 0;

  virtual double log_density(const ProductState& state) const = 0;

  /// log pi(value | state_{-i}), up to an additive constant in `value`'s
  /// conditioning variables. Differences in `value` must agree with
  /// differences of log_density.
  virtual double conditional_log_density(int i, const ProductState& state,
                                         double value) const = 0;

  virtual bool has_conditional_sampler() const { return false; }

  /// Exact draw from pi(.|state_{-i}). Implementations must consume a
  /// fixed, documented number of variates per call.
  virtual double sample_conditional(int /*i*/, const ProductState& /*state*/,
                                    CounterRng& /*rng*/) const {
    throw Error(ErrorKind::MissingConditionalSampler,
                "model has no exact conditional sampler");
  }

  virtual bool is_enumerable() const { return false; }
  virtual std::vector<ProductState> enumerate_support() const {
    throw Error(ErrorKind::BadArgument, "model support is not enumerable");
  }
};

/// Family of coordinate-wise Metropolis proposals Q_{x_{-i},gamma_i}.
class ProposalFamily {
 public:
  virtual ~ProposalFamily() = default;

  virtual bool symmetric() const = 0;

  virtual double log_density(int i, double gamma_i, const ProductState& state,
                             double from, double to) const = 0;

  /// Draws a candidate; fixed documented variate count per call.
  virtual double sample(int i, double gamma_i, const ProductState& state,
                        double from, CounterRng& rng) const = 0;

  /// Discrete proposals may expose their support for exact enumeration.
  virtual bool is_discrete() const { return false; }
  virtual std::vector<std::pair<double, double>> enumerate(
      int /*i*/, double /*gamma_i*/, const ProductState& /*state*/,
      double /*from*/) const {
    throw Error(ErrorKind::BadArgument, "proposal support is not enumerable");
  }
};

/// Append-only record of a chain run, exposed read-only to adaptation
/// rules. A retention window may discard old rows to bound memory on
/// long runs; indexing below the window throws.
class History {
 public:
  explicit History(std::size_t window = SIZE_MAX) : window_(window) {}

  /// Number of completed steps (row n covers the transition to X_n).
  long size() const { return static_cast<long>(next_) - 1; }

  void start(const ProductState& x0) {
    states_.push_back(x0);
    next_ = 1;
  }

  void append(const ProductState& state, const SelectionProbs& alpha,
              const std::vector<double>& gamma, int coord, bool accepted) {
    states_.push_back(state);
    alphas_.push_back(alpha);
    gammas_.push_back(gamma);
    coords_.push_back(coord);
    accepted_.push_back(accepted);
    ++next_;
    while (states_.size() - 1 > window_) {
      states_.pop_front();
      alphas_.pop_front();
      gammas_.pop_front();
      coords_.pop_front();
      accepted_.pop_front();
      ++base_;
    }
  }

  /// X_n for n = 0..size().
  const ProductState& state(long n) const {
    return states_.at(idx(n));
  }
  /// alpha_n for n = 1..size().
  const SelectionProbs& alpha(long n) const { return alphas_.at(idx(n) - 1); }
  const std::vector<double>& gamma(long n) const {
    return gammas_.at(idx(n) - 1);
  }
  int coord(long n) const { return coords_.at(idx(n) - 1); }
  bool accepted(long n) const { return accepted_.at(idx(n) - 1); }

 private:
  std::size_t idx(long n) const {
    if (n < base_) {
      throw Error(ErrorKind::BadArgument, "history row outside retention window");
    }
    return static_cast<std::size_t>(n - base_);
  }

  std::size_t window_;
  long base_ = 0;  // absolute index of states_[0]
  long next_ = 0;  // next row index to be written
  std::deque<ProductState> states_;
  std::deque<SelectionProbs> alphas_;
  std::deque<std::vector<double>> gammas_;
  std::deque<int> coords_;
  std::deque<bool> accepted_;
};

/// The update maps R_n (selection probabilities) and optionally R'_n
/// (proposal parameters). Implementations may cache derived statistics
/// but must be deterministic functions of the history.
class AdaptationRule {
 public:
  virtual ~AdaptationRule() = default;

  /// alpha_n as a function of the history through step n-1.
  virtual SelectionProbs update_alpha(const History& history) = 0;

  virtual bool adapts_gamma() const { return false; }
  virtual std::vector<double> update_gamma(const History& history);
};

/// Rule holding alpha (and gamma, when given) constant.
class ConstantRule : public AdaptationRule {
 public:
  explicit ConstantRule(SelectionProbs alpha) : alpha_(std::move(alpha)) {}
  SelectionProbs update_alpha(const History&) override { return alpha_; }

 private:
  SelectionProbs alpha_;
};

}  // namespace adgibbs
