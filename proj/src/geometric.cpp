#include "adgibbs/geometric.hpp"

#include <algorithm>
#include <cmath>

#include "adgibbs/errors.hpp"

namespace adgibbs {

namespace {
constexpr double kTailTol = 1e-12;

void check_p(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw Error(ErrorKind::BadArgument, "p must lie in (0,1)");
  }
}
}  // namespace

long geometric_truncation(double p, long n_max) {
  check_p(p);
  long K = std::max<long>(n_max + 2, 1);
  while (std::pow(p, static_cast<double>(K + 1)) >= kTailTol) ++K;
  return K;
}

void check_geometric_truncation(double p, long K, long n_min) {
  check_p(p);
  if (K < n_min + 2 || std::pow(p, static_cast<double>(K + 1)) >= kTailTol) {
    throw Error(ErrorKind::TruncationTooSmall,
                "truncation K leaves too much tail mass");
  }
}

std::vector<double> geometric_pi(double p, long K) {
  check_geometric_truncation(p, K, 0);
  std::vector<double> pi(static_cast<std::size_t>(K) + 1);
  double total = 0.0;
  for (long k = 0; k <= K; ++k) {
    pi[static_cast<std::size_t>(k)] = std::pow(p, static_cast<double>(k));
    total += pi[static_cast<std::size_t>(k)];
  }
  for (double& w : pi) w /= total;
  return pi;
}

std::vector<double> geometric_qn_pmf(long n, double p, long K) {
  if (n < 1) throw Error(ErrorKind::BadArgument, "n must be >= 1");
  check_geometric_truncation(p, K, n);
  std::vector<double> q(static_cast<std::size_t>(K) + 1);
  double total = 0.0;
  for (long k = 0; k <= K; ++k) {
    const double w = (k == n) ? std::pow(p, 2.0 * static_cast<double>(n))
                              : std::pow(p, static_cast<double>(k));
    q[static_cast<std::size_t>(k)] = w;
    total += w;
  }
  for (double& w : q) w /= total;
  return q;
}

std::vector<double> geometric_metropolis_row(long n, double p, long K, long j) {
  if (j < 0 || j > K) {
    throw Error(ErrorKind::BadArgument, "from-state j outside {0..K}");
  }
  const std::vector<double> q = geometric_qn_pmf(n, p, K);
  const std::vector<double> pi = geometric_pi(p, K);
  const std::size_t js = static_cast<std::size_t>(j);
  std::vector<double> row(q.size(), 0.0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (k == js) continue;
    const double accept =
        std::min(1.0, (pi[k] * q[js]) / (pi[js] * q[k]));
    row[k] = q[k] * accept;
    row[js] += q[k] * (1.0 - accept);
  }
  row[js] += q[js];
  return row;
}

double geometric_q_gap(long n, double p, long K) {
  const std::vector<double> a = geometric_qn_pmf(n + 1, p, K);
  const std::vector<double> b = geometric_qn_pmf(n, p, K);
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::abs(a[k] - b[k]);
  return 0.5 * acc;
}

double geometric_p_gap_lower(long n, double p, long K) {
  const std::vector<double> next = geometric_metropolis_row(n + 1, p, K, n);
  const std::vector<double> cur = geometric_metropolis_row(n, p, K, n);
  return next[0] - cur[0];
}

}  // namespace adgibbs
