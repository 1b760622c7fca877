#include "adgibbs/models.hpp"

#include <cmath>

namespace adgibbs {

TabularModel::TabularModel(std::vector<std::vector<double>> axis_values,
                           std::function<double(const ProductState&)> log_weight)
    : axes_(std::move(axis_values)), log_weight_(std::move(log_weight)) {
  space_.axes.resize(axes_.size());
  for (Axis& ax : space_.axes) ax.kind = AxisKind::RealLine;
}

double TabularModel::log_density(const ProductState& state) const {
  return log_weight_(state);
}

double TabularModel::conditional_log_density(int i, const ProductState& state,
                                             double value) const {
  return log_weight_(state.with_coord(i, value));
}

std::vector<double> TabularModel::conditional_pmf(int i,
                                                  const ProductState& state) const {
  const std::vector<double>& values = axes_[i];
  std::vector<double> w(values.size());
  double maxlog = -1e300;
  for (std::size_t k = 0; k < values.size(); ++k) {
    w[k] = log_weight_(state.with_coord(i, values[k]));
    maxlog = std::max(maxlog, w[k]);
  }
  double total = 0.0;
  for (double& x : w) {
    x = std::exp(x - maxlog);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

double TabularModel::sample_conditional(int i, const ProductState& state,
                                        CounterRng& rng) const {
  const std::vector<double> pmf = conditional_pmf(i, state);
  const double u = rng.next_uniform();
  double cum = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    cum += pmf[k];
    if (u <= cum) return axes_[i][k];
  }
  return axes_[i].back();
}

std::vector<ProductState> TabularModel::enumerate_support() const {
  std::vector<ProductState> out;
  std::vector<std::size_t> idx(axes_.size(), 0);
  for (;;) {
    ProductState s;
    s.coords.resize(axes_.size());
    for (std::size_t k = 0; k < axes_.size(); ++k) s.coords[k] = axes_[k][idx[k]];
    out.push_back(std::move(s));
    std::size_t k = axes_.size();
    while (k > 0) {
      --k;
      if (++idx[k] < axes_[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

TabularModel make_product3_model() {
  std::vector<std::vector<double>> axes = {
      {0.0, 1.0, 2.0}, {0.0, 1.0, 2.0, 3.0}, {-1.0, 0.0, 1.0}};
  auto log_weight = [](const ProductState& s) {
    const double a = s.coords[0], b = s.coords[1], c = s.coords[2];
    return 0.3 * a - 0.2 * b + 0.4 * c + 0.25 * a * b - 0.35 * b * c +
           0.15 * a * c - 0.1 * b * b;
  };
  return TabularModel(std::move(axes), log_weight);
}

TabularModel make_two_point_independent() {
  std::vector<std::vector<double>> axes = {{0.0, 1.0}, {0.0, 1.0}};
  auto log_weight = [](const ProductState& s) {
    return 0.7 * s.coords[0] - 0.4 * s.coords[1];
  };
  return TabularModel(std::move(axes), log_weight);
}

}  // namespace adgibbs
