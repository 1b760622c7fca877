#include "adgibbs/finite.hpp"

#include <cmath>

#include "adgibbs/errors.hpp"

namespace adgibbs {

FiniteModel::FiniteModel(const TargetModel& model) : model_(&model) {
  states_ = model.enumerate_support();
  if (states_.empty()) {
    throw Error(ErrorKind::BadArgument, "finite model has empty support");
  }
  pi_.resize(states_.size());
  double total = 0.0;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    pi_[k] = std::exp(model.log_density(states_[k]));
    total += pi_[k];
    index_[states_[k].coords] = static_cast<int>(k);
  }
  for (double& w : pi_) w /= total;
}

int FiniteModel::index_of(const ProductState& state) const {
  auto it = index_.find(state.coords);
  if (it == index_.end()) {
    throw Error(ErrorKind::BadArgument, "state not in enumerated support");
  }
  return it->second;
}

Matrix FiniteModel::gibbs_update_matrix(int i) const {
  const int n = size();
  Matrix p(n, std::vector<double>(n, 0.0));
  for (int x = 0; x < n; ++x) {
    // block of states agreeing with x off coordinate i
    double norm = 0.0;
    std::vector<int> block;
    for (int y = 0; y < n; ++y) {
      bool same = true;
      for (int k = 0; k < dimension(); ++k) {
        if (k == i) continue;
        if (states_[y].coords[k] != states_[x].coords[k]) {
          same = false;
          break;
        }
      }
      if (same) {
        block.push_back(y);
        norm += pi_[y];
      }
    }
    for (int y : block) p[x][y] = pi_[y] / norm;
  }
  return p;
}

Matrix FiniteModel::rsg_matrix(const SelectionProbs& alpha) const {
  const int n = size();
  Matrix out(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < dimension(); ++i) {
    const Matrix p = gibbs_update_matrix(i);
    const double w = alpha.probs[i];
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) out[x][y] += w * p[x][y];
    }
  }
  return out;
}

Matrix FiniteModel::mwg_matrix(const ProposalFamily& proposals,
                               const SelectionProbs& alpha,
                               const std::vector<double>& gamma) const {
  if (!proposals.is_discrete()) {
    throw Error(ErrorKind::BadArgument, "mwg_matrix needs a discrete proposal");
  }
  const int n = size();
  Matrix out(n, std::vector<double>(n, 0.0));
  for (int x = 0; x < n; ++x) {
    const ProductState& from = states_[x];
    for (int i = 0; i < dimension(); ++i) {
      const double wi = alpha.probs[i];
      const double lp_cur =
          model_->conditional_log_density(i, from, from.coords[i]);
      for (auto [value, qprob] :
           proposals.enumerate(i, gamma[i], from, from.coords[i])) {
        ProductState to = from.with_coord(i, value);
        double accept = 0.0;
        auto it = index_.find(to.coords);
        if (it != index_.end()) {
          double log_ratio =
              model_->conditional_log_density(i, from, value) - lp_cur;
          if (!proposals.symmetric()) {
            log_ratio +=
                proposals.log_density(i, gamma[i], from, value, from.coords[i]) -
                proposals.log_density(i, gamma[i], from, from.coords[i], value);
          }
          accept = std::min(1.0, std::exp(log_ratio));
          out[x][it->second] += wi * qprob * accept;
        }
        out[x][x] += wi * qprob * (1.0 - accept);
      }
    }
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b[0].size();
  const std::size_t k = b.size();
  Matrix out(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const double v = a[i][l];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += v * b[l][j];
    }
  }
  return out;
}

Matrix mat_power(Matrix base, long exponent) {
  const std::size_t n = base.size();
  Matrix result(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result = matmul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = matmul(base, base);
  }
  return result;
}

std::vector<double> left_apply(const std::vector<double>& v, const Matrix& m) {
  std::vector<double> out(m[0].size(), 0.0);
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x] == 0.0) continue;
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += v[x] * m[x][y];
  }
  return out;
}

double max_row_tv(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    double acc = 0.0;
    for (std::size_t y = 0; y < a[x].size(); ++y) {
      acc += std::abs(a[x][y] - b[x][y]);
    }
    worst = std::max(worst, 0.5 * acc);
  }
  return worst;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a[x].size(); ++y) {
      worst = std::max(worst, std::abs(a[x][y] - b[x][y]));
    }
  }
  return worst;
}

}  // namespace adgibbs
