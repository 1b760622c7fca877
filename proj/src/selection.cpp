#include "adgibbs/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adgibbs/errors.hpp"

namespace adgibbs {

namespace {
constexpr double kSumTol = 1e-12;

void check_epsilon(std::size_t d, double epsilon) {
  if (d < 2) {
    throw Error(ErrorKind::DimensionMismatch, "selection probabilities need d >= 2");
  }
  if (!(epsilon > 0.0) || epsilon > 1.0 / static_cast<double>(d)) {
    throw Error(ErrorKind::BadEpsilon, "epsilon must lie in (0, 1/d]");
  }
}
}  // namespace

SelectionProbs validate_selection_probs(const std::vector<double>& probs,
                                        double epsilon) {
  check_epsilon(probs.size(), epsilon);
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p)) {
      throw Error(ErrorKind::SumNotOne, "non-finite selection probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw Error(ErrorKind::SumNotOne, "selection probabilities do not sum to 1");
  }
  for (double p : probs) {
    if (p < epsilon - kSumTol) {
      throw Error(ErrorKind::EntryBelowEpsilon,
                  "selection probability below epsilon");
    }
  }
  return SelectionProbs{probs, epsilon};
}

SelectionProbs project_to_simplex(const std::vector<double>& probs,
                                  double epsilon) {
  const std::size_t d = probs.size();
  check_epsilon(d, epsilon);
  for (double p : probs) {
    if (!std::isfinite(p)) {
      throw Error(ErrorKind::BadEpsilon, "cannot project non-finite weights");
    }
  }
  // Shift by epsilon: project v - eps onto the simplex of total mass
  // 1 - d*eps with nonnegative entries, then shift back. The upper box
  // bound 1-(d-1)*eps is implied by the sum and the lower bounds.
  const double mass = 1.0 - static_cast<double>(d) * epsilon;
  std::vector<double> v(d);
  for (std::size_t k = 0; k < d; ++k) v[k] = probs[k] - epsilon;

  // Sort-based simplex projection (Held/Wolfe/Crowder; see also
  // Duchi et al. 2008): rho is the largest k with u_k above the
  // running threshold, theta the final threshold.
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0.0;
  double theta = 0.0;
  std::size_t rho = 0;
  double cum_rho = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - mass) / static_cast<double>(k + 1);
    if (u[k] >= candidate) {  // >= so the mass-0 case (epsilon = 1/d) lands on rho = d
      rho = k + 1;
      cum_rho = cumulative;
    }
  }
  theta = (cum_rho - mass) / static_cast<double>(rho);

  std::vector<double> out(d);
  double sum = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    out[k] = std::max(0.0, v[k] - theta) + epsilon;
    sum += out[k];
  }
  // Absorb the rounding residual into the largest entry.
  const double residual = 1.0 - sum;
  auto it = std::max_element(out.begin(), out.end());
  *it += residual;
  return SelectionProbs{out, epsilon};
}

double sup_distance(const SelectionProbs& a, const SelectionProbs& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "dimension mismatch");
  }
  double m = 0.0;
  for (int k = 0; k < a.dimension(); ++k) {
    m = std::max(m, std::abs(a.probs[k] - b.probs[k]));
  }
  return m;
}

}  // namespace adgibbs
