#pragma once

#include <vector>

#include "adgibbs/selection.hpp"

namespace adgibbs {

enum class MeasureKind {
  StationaryPi,    // minorization measure is the stationary distribution
  ExplicitVector,  // arbitrary explicit probability measure
};

/// An (m, s) minorization certificate: P^m(x, .) >= s * mu(.) for all x.
struct MinorizationCertificate {
  int m = 1;
  double s = 0.0;
  MeasureKind measure_kind = MeasureKind::ExplicitVector;
};

/// Total variation distance (1/2) sum |p_k - q_k| between probability
/// vectors of equal length.
double tv_finite(const std::vector<double>& p, const std::vector<double>& q);

/// r = min_i alpha_i / beta_i, the coefficient writing P_alpha as the
/// mixture r P_beta + (1-r) P_q. Lies in [eps/(1-(d-1)eps), 1].
double mixture_coefficient(const SelectionProbs& alpha,
                           const SelectionProbs& beta);

/// Closed-form bound delta/(eps+delta) on sup_x TV(P_alpha(x,.),
/// P_alpha'(x,.)), with delta the sup-norm distance of the selection
/// probabilities. Valid for any shared target model.
double kernel_lipschitz_bound(const SelectionProbs& alpha,
                              const SelectionProbs& alpha_prime);

/// TV convergence bound (1 - (eps/(1-(d-1)eps))^m s)^{floor(n/m)} valid
/// for the random scan kernel with any selection probabilities in Y,
/// given an (m,s) minorization of some member of the family.
double uniform_bound(const MinorizationCertificate& cert, double epsilon,
                     int d, long n);

/// Upgrades an (m,s) minorization by an arbitrary measure, for a
/// reversible kernel, to a minorization by the stationary distribution:
/// m* = (floor(log(s/4)/log(1-s)) + 2) m, s* = s^2/8.
MinorizationCertificate strong_unif_upgrade(int m, double s);

/// Converts a minorization of the systematic scan kernel P_1 P_2 ... P_d
/// into one for the uniform random scan: (m d, (1/d)^{m d} s).
MinorizationCertificate systematic_minorization(
    const MinorizationCertificate& cert_systematic, int d);

/// One-step growth bound r(s) = 1 + s (1-s)^{1/s - 1} for the drift
/// function V_s = pi^{-s} under a coordinate-wise Metropolis kernel.
double drift_rate_r(double s);

/// Largest s on the dyadic grid {2^-1, ..., 2^-40} with
/// r(s) < 1 + eps*xi / (1 - 2 eps*xi).
double drift_exponent_select(double epsilon, double xi);

/// floor() with a 1e-12 guard band: values that close to an integer
/// floor to that integer.
double guarded_floor(double x);

}  // namespace adgibbs
