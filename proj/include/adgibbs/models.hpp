#pragma once

#include <functional>
#include <vector>

#include "adgibbs/model.hpp"

namespace adgibbs {

/// Finite product-space target given by per-axis value lists and a joint
/// log-weight. Ships the small exactly-enumerable models used to
/// validate samplers and bounds against dense matrices.
class TabularModel : public TargetModel {
 public:
  TabularModel(std::vector<std::vector<double>> axis_values,
               std::function<double(const ProductState&)> log_weight);

  int dimension() const override { return space_.dimension(); }
  const SpaceDescriptor& space() const override { return space_; }
  double log_density(const ProductState& state) const override;
  double conditional_log_density(int i, const ProductState& state,
                                 double value) const override;
  bool has_conditional_sampler() const override { return true; }
  /// Inverse-CDF draw over the axis values in order; exactly one uniform.
  double sample_conditional(int i, const ProductState& state,
                            CounterRng& rng) const override;
  bool is_enumerable() const override { return true; }
  std::vector<ProductState> enumerate_support() const override;

  const std::vector<double>& axis_values(int i) const { return axes_[i]; }

  /// Conditional pmf of coordinate i given the rest, over axis_values(i).
  std::vector<double> conditional_pmf(int i, const ProductState& state) const;

 private:
  std::vector<std::vector<double>> axes_;
  std::function<double(const ProductState&)> log_weight_;
  SpaceDescriptor space_;
};

/// 3-coordinate model with pairwise couplings; supports 3 x 4 x 3.
TabularModel make_product3_model();

/// Two independent two-point coordinates (for coordinate-choice laws).
TabularModel make_two_point_independent();

}  // namespace adgibbs
