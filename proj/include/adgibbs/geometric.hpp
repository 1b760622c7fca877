#pragma once

#include <vector>

namespace adgibbs {

/// Geometric target pi(k) = p^k (1-p) on {0,1,...}, truncated to {0..K}
/// for exact row computations. The truncation must leave tail mass
/// p^{K+1} below 1e-12.
struct GeometricModel {
  double p = 0.5;
  long K = 0;
};

/// Smallest K with p^{K+1} < 1e-12 and K >= n_max + 2.
long geometric_truncation(double p, long n_max);

void check_geometric_truncation(double p, long K, long n_min);

/// Normalized target over {0..K}.
std::vector<double> geometric_pi(double p, long K);

/// The step-n independence proposal
///   q_n(k) = p^k / Z for k != n, q_n(n) = p^{2n} / Z,
///   Z = 1/(1-p) - p^n + p^{2n},
/// renormalized over {0..K}.
std::vector<double> geometric_qn_pmf(long n, double p, long K);

/// Exact Metropolis row from j using proposal q_n: move j -> k with
/// probability q_n(k) min(1, pi(k) q_n(j) / (pi(j) q_n(k))), the
/// rejected mass staying at j.
std::vector<double> geometric_metropolis_row(long n, double p, long K, long j);

/// sup_j TV(Q_{n+1}(j,.), Q_n(j,.)); the proposal ignores j, so this is
/// the TV distance of the two pmfs.
double geometric_q_gap(long n, double p, long K);

/// Lower bound on sup_j TV(P_{n+1}(j,.), P_n(j,.)) read off at the pair
/// (from = n, to = 0): P_{n+1}(n,0) - P_n(n,0).
double geometric_p_gap_lower(long n, double p, long K);

}  // namespace adgibbs
