#include "adgibbs/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "adgibbs/errors.hpp"

namespace adgibbs {

namespace {
constexpr double kNegInf = -1e300;
}

// ---------------------------------------------------------------------------
// schedule

StairSchedule::StairSchedule(double b1) {
  if (!(b1 >= 1.0)) {
    throw Error(ErrorKind::BadArgument, "schedule needs b1 >= 1");
  }
  b_ = {0.0, b1};
  c_ = {0.0, b1};
}

void StairSchedule::extend_index(int n) const {
  while (static_cast<int>(b_.size()) <= n) {
    const int k = static_cast<int>(b_.size());
    const double next = b_.back() * (1.0 + 1.0 / (10.0 + std::log(k)));
    b_.push_back(next);
    c_.push_back(c_.back() + next);
  }
}

void StairSchedule::extend_to(double n) const {
  while (c_.back() < n) extend_index(static_cast<int>(b_.size()));
}

double StairSchedule::b(int n) const {
  if (n < 0) throw Error(ErrorKind::BadArgument, "b(n) needs n >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  extend_index(n);
  return b_[n];
}

double StairSchedule::c(int n) const {
  if (n < 0) throw Error(ErrorKind::BadArgument, "c(n) needs n >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  extend_index(n);
  return c_[n];
}

int StairSchedule::regime(long n) const {
  if (n < 1) throw Error(ErrorKind::BadArgument, "regime(n) needs n >= 1");
  std::lock_guard<std::mutex> lock(mu_);
  const double x = static_cast<double>(n);
  extend_to(x);
  // smallest k with c_k >= n; c_ is strictly increasing from index 1
  const auto it = std::lower_bound(c_.begin() + 1, c_.end(), x);
  return static_cast<int>(it - c_.begin());
}

double StairSchedule::a(long n) const {
  return 10.0 + std::log(static_cast<double>(regime(n)));
}

LinearSpeed::LinearSpeed(double a0, double rate) : a0_(a0), rate_(rate) {
  if (!(a0 > 8.0) || !(rate > 0.0)) {
    throw Error(ErrorKind::BadArgument, "linear speed needs a0 > 8, rate > 0");
  }
}

double LinearSpeed::a(long n) const {
  if (n < 1) throw Error(ErrorKind::BadArgument, "a(n) needs n >= 1");
  return a0_ + rate_ * static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// target, rule, conditionals

double stair_pi_weight(const StairState& state) {
  if (!state.valid()) {
    throw Error(ErrorKind::BadArgument, "invalid staircase state");
  }
  const double j = static_cast<double>(state.j);
  return 1.0 / (j * j);
}

SelectionProbs stair_alpha(const StairState& state, long n,
                           const AdaptSpeed& schedule) {
  if (!state.valid()) {
    throw Error(ErrorKind::BadArgument, "invalid staircase state");
  }
  const double an = schedule.a(n);
  const double eps = 0.5 - 4.0 / schedule.a(1);
  SelectionProbs alpha;
  alpha.epsilon = eps;
  if (state.i == state.j) {
    alpha.probs = {0.5 + 4.0 / an, 0.5 - 4.0 / an};
  } else {
    alpha.probs = {0.5 - 4.0 / an, 0.5 + 4.0 / an};
  }
  return alpha;
}

std::vector<std::pair<StairState, double>> stair_conditional(
    const StairState& state, int coord) {
  if (!state.valid()) {
    throw Error(ErrorKind::BadArgument, "invalid staircase state");
  }
  if (coord == 1) {
    // i | j: the two states sharing j have equal target mass
    return {{{state.j, state.j}, 0.5}, {{state.j + 1, state.j}, 0.5}};
  }
  if (coord == 2) {
    const long i = state.i;
    if (i == 1) {
      return {{{1, 1}, 1.0}};
    }
    // j | i: weights j^-2 over j in {i-1, i}
    const double wi = static_cast<double>(i) * static_cast<double>(i);
    const double wim = static_cast<double>(i - 1) * static_cast<double>(i - 1);
    return {{{i, i - 1}, wi / (wi + wim)}, {{i, i}, wim / (wi + wim)}};
  }
  throw Error(ErrorKind::BadCoord, "coordinate must be 1 or 2");
}

std::vector<std::pair<StairState, double>> stair_kernel_row(
    const StairState& state, long n, const AdaptSpeed& schedule) {
  const SelectionProbs alpha = stair_alpha(state, n, schedule);
  std::vector<std::pair<StairState, double>> row;
  auto add = [&row](const StairState& s, double p) {
    for (auto& [t, q] : row) {
      if (t == s) {
        q += p;
        return;
      }
    }
    row.emplace_back(s, p);
  };
  for (int coord = 1; coord <= 2; ++coord) {
    for (auto& [s, p] : stair_conditional(state, coord)) {
      add(s, alpha.probs[coord - 1] * p);
    }
  }
  // canonical order: ascending i+j, then i
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
    const long sa = a.first.i + a.first.j, sb = b.first.i + b.first.j;
    return sa != sb ? sa < sb : a.first.i < b.first.i;
  });
  return row;
}

// ---------------------------------------------------------------------------
// model view

StairModel::StairModel(long M) : M_(M) {
  if (M != 0 && M < 2) {
    throw Error(ErrorKind::BadArgument, "truncation needs M >= 2 (or 0)");
  }
  space_.axes.resize(2);
  for (Axis& ax : space_.axes) {
    ax.kind = AxisKind::IntegerLattice;
    if (M > 0) {
      ax.kind = AxisKind::FiniteRangeInt;
      ax.lo = 1;
      ax.hi = M;
    }
  }
}

bool StairModel::in_support(double i, double j) const {
  if (i != std::floor(i) || j != std::floor(j) || j < 1) return false;
  if (i != j && i != j + 1) return false;
  if (M_ > 0 && (i > static_cast<double>(M_) || j > static_cast<double>(M_))) {
    return false;
  }
  return true;
}

double StairModel::log_density(const ProductState& state) const {
  const double i = state.coords[0], j = state.coords[1];
  if (!in_support(i, j)) return kNegInf;
  return -2.0 * std::log(j);
}

double StairModel::conditional_log_density(int i, const ProductState& state,
                                           double value) const {
  return log_density(state.with_coord(i, value));
}

double StairModel::sample_conditional(int i, const ProductState& state,
                                      CounterRng& rng) const {
  // One uniform per draw, inverse CDF over ascending candidate values.
  const double u = rng.next_uniform();
  if (i == 0) {
    const double j = state.coords[1];
    if (M_ > 0 && j >= static_cast<double>(M_)) return j;  // only (M,M) in range
    return (u <= 0.5) ? j : j + 1.0;
  }
  const double iv = state.coords[0];
  if (iv <= 1.0) return 1.0;
  const double wi = iv * iv;
  const double wim = (iv - 1.0) * (iv - 1.0);
  return (u <= wi / (wi + wim)) ? iv - 1.0 : iv;
}

std::vector<ProductState> StairModel::enumerate_support() const {
  if (M_ == 0) {
    throw Error(ErrorKind::BadArgument, "untruncated staircase is infinite");
  }
  std::vector<ProductState> out;
  for (long j = 1; j <= M_; ++j) {
    out.push_back(ProductState{{static_cast<double>(j), static_cast<double>(j)}});
    if (j + 1 <= M_) {
      out.push_back(
          ProductState{{static_cast<double>(j + 1), static_cast<double>(j)}});
    }
  }
  return out;
}

SelectionProbs StairAlphaRule::update_alpha(const History& history) {
  const long n = history.size() + 1;
  const ProductState& x = history.state(history.size());
  StairState s{static_cast<long>(x.coords[0]), static_cast<long>(x.coords[1])};
  return stair_alpha(s, n, *schedule_);
}

void simulate_stair_stream(const StairState& x0, long steps,
                           const AdaptSpeed& schedule, CounterRng& rng,
                           const RowObserver& observe) {
  StairModel model(0);
  StairAlphaRule rule(schedule);
  ProductState start{{static_cast<double>(x0.i), static_cast<double>(x0.j)}};
  const SelectionProbs alpha0 = stair_alpha(x0, 1, schedule);
  ChainOptions options;
  options.history_window = 1;
  run_adaptive_chain_stream(model, nullptr, rule, start, alpha0, std::nullopt,
                            steps, rng, observe, options);
}

ChainTrace simulate_stair(const StairState& x0, long steps,
                          const AdaptSpeed& schedule, CounterRng& rng) {
  ChainTrace trace;
  trace.rows.reserve(static_cast<std::size_t>(steps));
  simulate_stair_stream(x0, steps, schedule, rng,
                        [&](const TraceRow& row) { trace.rows.push_back(row); });
  return trace;
}

// ---------------------------------------------------------------------------
// truncated exact oracle

std::vector<StairState> truncated_states(long M) {
  if (M < 2 || M > 1000) {
    throw Error(ErrorKind::BadArgument, "truncation needs 2 <= M <= 1000");
  }
  std::vector<StairState> out;
  for (long j = 1; j <= M; ++j) {
    out.push_back({j, j});
    if (j + 1 <= M) out.push_back({j + 1, j});
  }
  return out;
}

namespace {
// position of a truncated state in the truncated_states(M) ordering
long truncated_index(const StairState& s, long M) {
  if (!s.valid() || s.i > M) {
    throw Error(ErrorKind::StateOutsideTruncation,
                "state outside the truncated space");
  }
  return s.i == s.j ? 2 * (s.j - 1) : 2 * s.j - 1;
}
}  // namespace

std::vector<double> truncated_target(long M) {
  const auto states = truncated_states(M);
  std::vector<double> pi(states.size());
  double total = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    pi[k] = stair_pi_weight(states[k]);
    total += pi[k];
  }
  for (double& w : pi) w /= total;
  return pi;
}

std::vector<double> truncated_kernel_row(const StairState& state, long n,
                                         long M, const AdaptSpeed& schedule,
                                         TruncationMode mode) {
  const long self = truncated_index(state, M);
  std::vector<double> row(2 * M - 1, 0.0);
  if (mode == TruncationMode::Hold) {
    for (auto& [s, p] : stair_kernel_row(state, n, schedule)) {
      if (s.i <= M) {
        row[truncated_index(s, M)] += p;
      } else {
        row[self] += p;  // move leaves the truncation: hold
      }
    }
    return row;
  }
  // Renormalize: restrict each conditional to in-range states first.
  const SelectionProbs alpha = stair_alpha(state, n, schedule);
  for (int coord = 1; coord <= 2; ++coord) {
    auto cond = stair_conditional(state, coord);
    double mass = 0.0;
    for (auto& [s, p] : cond) {
      if (s.i <= M) mass += p;
    }
    for (auto& [s, p] : cond) {
      if (s.i <= M) {
        row[truncated_index(s, M)] += alpha.probs[coord - 1] * p / mass;
      }
    }
  }
  return row;
}

namespace {

// at most four reachable targets per state
struct SparseRow {
  int cnt = 0;
  int idx[4];
  double p[4];

  void add(long target, double mass) {
    const int t = static_cast<int>(target);
    for (int k = 0; k < cnt; ++k) {
      if (idx[k] == t) {
        p[k] += mass;
        return;
      }
    }
    idx[cnt] = t;
    p[cnt] = mass;
    ++cnt;
  }
};

// Hold-truncated rows for speed value an, allocation-free per step.
// Must agree with truncated_kernel_row; asserted in tests.
void fill_truncated_rows(const std::vector<StairState>& states, long M,
                         double an, std::vector<SparseRow>& rows) {
  rows.assign(states.size(), SparseRow{});
  for (std::size_t x = 0; x < states.size(); ++x) {
    const StairState& s = states[x];
    SparseRow& row = rows[x];
    const double alpha1 = (s.i == s.j) ? 0.5 + 4.0 / an : 0.5 - 4.0 / an;
    const double alpha2 = 1.0 - alpha1;
    // coordinate 1 given j: uniform over {(j,j), (j+1,j)}
    row.add(truncated_index({s.j, s.j}, M), alpha1 * 0.5);
    if (s.j + 1 <= M) {
      row.add(truncated_index({s.j + 1, s.j}, M), alpha1 * 0.5);
    } else {
      row.add(static_cast<long>(x), alpha1 * 0.5);  // leaves truncation: hold
    }
    // coordinate 2 given i
    if (s.i == 1) {
      row.add(truncated_index({1, 1}, M), alpha2);
    } else {
      const double wi = static_cast<double>(s.i) * static_cast<double>(s.i);
      const double wim =
          static_cast<double>(s.i - 1) * static_cast<double>(s.i - 1);
      row.add(truncated_index({s.i, s.i - 1}, M), alpha2 * wi / (wi + wim));
      row.add(truncated_index({s.i, s.i}, M), alpha2 * wim / (wi + wim));
    }
  }
}

// shared forward iteration; calls visit(step, dist) after every step
template <typename Visit>
void iterate_truncated(long M, long n_max, const StairState& x0,
                       const AdaptSpeed& schedule, std::vector<double>& dist,
                       const Visit& visit) {
  const auto states = truncated_states(M);
  dist.assign(states.size(), 0.0);
  dist[static_cast<std::size_t>(truncated_index(x0, M))] = 1.0;
  double cached_a = -1.0;
  std::vector<SparseRow> rows;
  std::vector<double> next(states.size());
  for (long step = 1; step <= n_max; ++step) {
    const double an = schedule.a(step);
    if (an != cached_a) {
      cached_a = an;
      fill_truncated_rows(states, M, an, rows);
    }
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t x = 0; x < states.size(); ++x) {
      const double w = dist[x];
      if (w == 0.0) continue;
      const SparseRow& row = rows[x];
      for (int k = 0; k < row.cnt; ++k) {
        next[static_cast<std::size_t>(row.idx[k])] += w * row.p[k];
      }
    }
    dist.swap(next);
    visit(step, dist);
  }
}

}  // namespace

std::vector<double> truncated_exact_distribution(long M, long n,
                                                 const StairState& x0,
                                                 const AdaptSpeed& schedule) {
  if (n < 0) throw Error(ErrorKind::BadArgument, "n must be >= 0");
  std::vector<double> dist;
  iterate_truncated(M, n, x0, schedule, dist,
                    [](long, const std::vector<double>&) {});
  return dist;
}

std::vector<std::pair<long, double>> truncated_tv_curve(
    long M, const StairState& x0, const AdaptSpeed& schedule,
    const std::vector<long>& grid) {
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (grid[k] <= grid[k - 1]) {
      throw Error(ErrorKind::BadArgument, "grid must be strictly increasing");
    }
  }
  const std::vector<double> target = truncated_target(M);
  auto tv = [&target](const std::vector<double>& dist) {
    double acc = 0.0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
      acc += std::abs(dist[k] - target[k]);
    }
    return 0.5 * acc;
  };

  std::vector<std::pair<long, double>> curve;
  std::size_t g = 0;
  std::vector<double> dist;
  if (!grid.empty() && grid.front() == 0) {
    dist.assign(target.size(), 0.0);
    dist[static_cast<std::size_t>(
        truncated_index(x0, M))] = 1.0;
    curve.emplace_back(0, tv(dist));
    ++g;
  }
  if (g == grid.size()) return curve;
  iterate_truncated(M, grid.back(), x0, schedule, dist,
                    [&](long step, const std::vector<double>& d) {
                      while (g < grid.size() && grid[g] == step) {
                        curve.emplace_back(step, tv(d));
                        ++g;
                      }
                    });
  return curve;
}

// ---------------------------------------------------------------------------
// coupling machinery

AuxWalkLaw aux_walk_pmf(long n, const AdaptSpeed& schedule) {
  const double an = schedule.a(n);
  AuxWalkLaw law;
  law.n = n;
  law.pmf = {0.25 - 1.0 / an, 0.5, 0.25 + 1.0 / an};
  return law;
}

std::array<double, 3> dominated_measure(long n, long i,
                                        const AdaptSpeed& schedule) {
  if (i < 1) throw Error(ErrorKind::BadArgument, "i must be >= 1");
  const double an = schedule.a(n);
  const double di = static_cast<double>(i);
  const double mu1 = (0.25 - 2.0 / an) * (1.0 + 2.0 / di);
  const double mu3 =
      (0.25 + 2.0 / an) * (1.0 - 2.0 / std::max(4.0, di));
  const double mu2 = 1.0 - mu1 - mu3;
  if (mu1 < 0.0 || mu2 < 0.0 || mu3 < 0.0) {
    throw Error(ErrorKind::NotAMeasure,
                "parameters outside the dominating-measure regime");
  }
  return {mu1, mu2, mu3};
}

bool stoch_dominates(const std::array<double, 3>& p,
                     const std::array<double, 3>& q) {
  // tolerate rounding at boundary-equal CDFs
  const double tol = 1e-12;
  return p[0] <= q[0] + tol && p[0] + p[1] <= q[0] + q[1] + tol;
}

bool stair_row_dominates_walk(const StairState& state, long n,
                              const AdaptSpeed& schedule) {
  std::array<double, 3> inc{0.0, 0.0, 0.0};
  const long base = state.i + state.j;
  for (auto& [s, p] : stair_kernel_row(state, n, schedule)) {
    inc[static_cast<std::size_t>((s.i + s.j) - base + 1)] += p;
  }
  return stoch_dominates(inc, aux_walk_pmf(n, schedule).pmf);
}

double hoeffding_tail(long n, double t) {
  if (n < 1 || !(t > 0.0)) {
    throw Error(ErrorKind::BadArgument, "hoeffding_tail needs n >= 1, t > 0");
  }
  return std::exp(-0.5 * static_cast<double>(n) * t * t);
}

PnSeries pn_series(long n_max, const StairSchedule& schedule) {
  if (n_max < 2) throw Error(ErrorKind::BadArgument, "n_max must be >= 2");
  PnSeries out;
  out.p.reserve(static_cast<std::size_t>(n_max - 1));
  auto exponent = [&](long n) -> long double {
    const long double denom = 10.0L + std::log(static_cast<long double>(n));
    return 0.5L * static_cast<long double>(schedule.b(static_cast<int>(n))) /
           (denom * denom);
  };
  long last_failure = 2;
  long double prev_exp = exponent(2);
  out.p.push_back(static_cast<double>(std::exp(-prev_exp)));
  out.partial_sum = std::exp(-prev_exp);
  for (long n = 3; n <= n_max; ++n) {
    const long double cur_exp = exponent(n);
    out.p.push_back(static_cast<double>(std::exp(-cur_exp)));
    out.partial_sum += std::exp(-cur_exp);
    // log(p_{n-1}/p_n) = cur_exp - prev_exp
    const long double lhs = cur_exp - prev_exp;
    const long double rhs =
        2.0L * (std::log(static_cast<long double>(n)) -
                std::log(static_cast<long double>(n - 1)));
    if (!(lhs > rhs)) last_failure = n;
    prev_exp = cur_exp;
  }
  out.n0 = last_failure + 1;
  if (out.n0 > n_max) out.n0 = -1;
  return out;
}

}  // namespace adgibbs
