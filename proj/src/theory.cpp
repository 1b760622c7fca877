#include "adgibbs/theory.hpp"

#include <cmath>

#include "adgibbs/errors.hpp"

namespace adgibbs {

double tv_finite(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::LengthMismatch, "tv_finite: length mismatch");
  }
  double sp = 0.0, sq = 0.0, acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    sp += p[k];
    sq += q[k];
    acc += std::abs(p[k] - q[k]);
  }
  if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9) {
    throw Error(ErrorKind::NotNormalized, "tv_finite: inputs must sum to 1");
  }
  return 0.5 * acc;
}

double mixture_coefficient(const SelectionProbs& alpha,
                           const SelectionProbs& beta) {
  if (alpha.dimension() != beta.dimension() || alpha.epsilon != beta.epsilon) {
    throw Error(ErrorKind::DimensionMismatch,
                "mixture_coefficient: mismatched selection probabilities");
  }
  double r = 1.0;
  for (int i = 0; i < alpha.dimension(); ++i) {
    r = std::min(r, alpha.probs[i] / beta.probs[i]);
  }
  return r;
}

double kernel_lipschitz_bound(const SelectionProbs& alpha,
                              const SelectionProbs& alpha_prime) {
  if (alpha.dimension() != alpha_prime.dimension() ||
      alpha.epsilon != alpha_prime.epsilon) {
    throw Error(ErrorKind::DimensionMismatch,
                "kernel_lipschitz_bound: mismatched selection probabilities");
  }
  const double delta = sup_distance(alpha, alpha_prime);
  if (delta == 0.0) return 0.0;
  return delta / (alpha.epsilon + delta);
}

double uniform_bound(const MinorizationCertificate& cert, double epsilon,
                     int d, long n) {
  if (n < 0 || cert.m < 1 || !(cert.s > 0.0) || cert.s > 1.0) {
    throw Error(ErrorKind::BadArgument, "uniform_bound: invalid certificate");
  }
  if (!(epsilon > 0.0) || epsilon > 1.0 / static_cast<double>(d)) {
    throw Error(ErrorKind::BadEpsilon, "uniform_bound: epsilon outside (0, 1/d]");
  }
  const double ratio = epsilon / (1.0 - (d - 1) * epsilon);
  const double contraction = 1.0 - std::pow(ratio, cert.m) * cert.s;
  return std::pow(contraction, static_cast<double>(n / cert.m));
}

double guarded_floor(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-12) return nearest;
  return std::floor(x);
}

MinorizationCertificate strong_unif_upgrade(int m, double s) {
  if (!(s > 0.0) || s >= 1.0) {
    throw Error(ErrorKind::BadMass, "strong_unif_upgrade: s must be in (0,1)");
  }
  if (m < 1) {
    throw Error(ErrorKind::BadArgument, "strong_unif_upgrade: m must be >= 1");
  }
  const double k = guarded_floor(std::log(s / 4.0) / std::log(1.0 - s));
  MinorizationCertificate out;
  out.m = static_cast<int>(k + 2.0) * m;
  out.s = s * s / 8.0;
  out.measure_kind = MeasureKind::StationaryPi;
  return out;
}

MinorizationCertificate systematic_minorization(
    const MinorizationCertificate& cert_systematic, int d) {
  if (d < 2) {
    throw Error(ErrorKind::BadArgument, "systematic_minorization: d must be >= 2");
  }
  MinorizationCertificate out;
  out.m = cert_systematic.m * d;
  out.s = std::pow(1.0 / static_cast<double>(d), out.m) * cert_systematic.s;
  out.measure_kind = cert_systematic.measure_kind;
  return out;
}

double drift_rate_r(double s) {
  if (!(s > 0.0) || !(s < 1.0)) {
    throw Error(ErrorKind::BadExponent, "drift_rate_r: s must be in (0,1)");
  }
  // exp-log form stays accurate down to s ~ 1e-300
  return 1.0 + s * std::exp((1.0 / s - 1.0) * std::log1p(-s));
}

double drift_exponent_select(double epsilon, double xi) {
  if (!(epsilon > 0.0) || !(xi > 0.0) || xi > 1.0 || epsilon * xi >= 0.5) {
    throw Error(ErrorKind::BadArgument,
                "drift_exponent_select: need 0<eps, 0<xi<=1, eps*xi<1/2");
  }
  const double threshold = 1.0 + epsilon * xi / (1.0 - 2.0 * epsilon * xi);
  double s = 0.5;
  for (int k = 1; k <= 40; ++k, s *= 0.5) {
    if (drift_rate_r(s) < threshold) return s;
  }
  throw Error(ErrorKind::NoFeasibleExponent,
              "no dyadic exponent satisfies the drift threshold");
}

}  // namespace adgibbs
