#pragma once

#include <vector>

namespace adgibbs {

/// Coordinate selection probabilities constrained to the set
/// Y = [epsilon, 1]^d intersected with the probability simplex.
///
/// All distances |alpha - alpha'| in this library are sup-norm over
/// coordinates; the closed-form kernel bounds are stated (and tight)
/// for that norm.
struct SelectionProbs {
  std::vector<double> probs;
  double epsilon = 0.0;

  int dimension() const { return static_cast<int>(probs.size()); }
};

/// Validates that `probs` lies in Y for the given epsilon. Throws
/// SumNotOne / EntryBelowEpsilon / BadEpsilon; never renormalizes.
SelectionProbs validate_selection_probs(const std::vector<double>& probs,
                                        double epsilon);

/// Euclidean projection of an arbitrary finite weight vector onto Y.
SelectionProbs project_to_simplex(const std::vector<double>& probs,
                                  double epsilon);

/// Sup-norm distance between two selection probability vectors.
double sup_distance(const SelectionProbs& a, const SelectionProbs& b);

}  // namespace adgibbs
