#pragma once

#include <map>
#include <vector>

#include "adgibbs/model.hpp"
#include "adgibbs/selection.hpp"
#include "adgibbs/state.hpp"

namespace adgibbs {

using Matrix = std::vector<std::vector<double>>;

/// Dense enumeration of a finite target model: states, normalized
/// stationary vector, and exact transition matrices for the Gibbs and
/// Metropolis-within-Gibbs kernels. Used as the exact oracle against
/// which the closed-form bounds are checked.
class FiniteModel {
 public:
  explicit FiniteModel(const TargetModel& model);

  const TargetModel& model() const { return *model_; }
  int size() const { return static_cast<int>(states_.size()); }
  int dimension() const { return model_->dimension(); }
  const std::vector<ProductState>& states() const { return states_; }
  const std::vector<double>& pi() const { return pi_; }
  int index_of(const ProductState& state) const;

  /// Exact single-coordinate Gibbs update matrix P_i (0-based i).
  /// Conditionals are pi restricted to the enumerated support.
  Matrix gibbs_update_matrix(int i) const;

  /// P_alpha = sum_i alpha_i P_i.
  Matrix rsg_matrix(const SelectionProbs& alpha) const;

  /// Exact random scan Metropolis-within-Gibbs matrix for a discrete
  /// enumerable proposal family.
  Matrix mwg_matrix(const ProposalFamily& proposals, const SelectionProbs& alpha,
                    const std::vector<double>& gamma) const;

 private:
  const TargetModel* model_;
  std::vector<ProductState> states_;
  std::vector<double> pi_;
  std::map<std::vector<double>, int> index_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix mat_power(Matrix base, long exponent);
std::vector<double> left_apply(const std::vector<double>& v, const Matrix& m);

/// max_x TV(A(x,.), B(x,.)).
double max_row_tv(const Matrix& a, const Matrix& b);

/// max_{x,y} |A(x,y) - B(x,y)|.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace adgibbs
