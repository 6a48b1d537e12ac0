#include "hopforce/de_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hopforce {

namespace {

// Degree-1 vertex hops: expose its point to reach u, then probe u's
// remaining points one at a time.
constexpr std::array<DriftRow, 5> kDegreeOneRows{{
    {1, 2, 0, {1, 0, 1, -2}, true},
    {1, 2, 1, {2, 0, 0, -2}, true},
    {1, 1, 2, {2, 1, -2, -1}, false},
    {1, 1, 1, {2, -1, 0, -1}, true},
    {1, 0, 2, {2, 0, -2, 0}, false},
}};

// Degree-2 vertex hops: both points exposed, then the neighbour with fewer
// unmatched points is probed first. Row 1 is the case where both neighbours
// had three points and the first probe finds a white vertex, so a^3.
constexpr std::array<DriftRow, 12> kDegreeTwoRows{{
    {1, 3, 0, {1, 1, 1, -3}, true},
    {1, 3, 1, {2, 1, 0, -3}, true},
    {1, 3, 2, {2, 3, -2, -3}, true},
    {1, 3, 3, {3, 3, -3, -3}, true},
    {1, 2, 4, {3, 4, -5, -2}, false},
    {2, 2, 1, {2, 0, 0, -2}, true},
    {2, 2, 2, {2, 2, -2, -2}, true},
    {2, 2, 3, {3, 2, -3, -2}, true},
    {2, 1, 4, {3, 3, -5, -1}, false},
    {1, 1, 2, {2, 1, -2, -1}, true},
    {1, 1, 3, {3, 1, -3, -1}, true},
    {1, 0, 4, {3, 2, -5, 0}, false},
}};

double ipow(double base, int e) {
  double out = 1.0;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

struct Weights {
  double a;
  double b;
};

Weights weights(const ClassState& y) {
  const double s = y[1] + 2.0 * y[2] + 3.0 * y[3];
  if (!(s > 0.0)) throw std::domain_error("drift: no unmatched points left (s <= 0)");
  return {3.0 * y[3] / s, 2.0 * y[2] / s};
}

struct Summary {
  std::array<double, 4> f{};
  double hop = 0.0;
};

Summary summarize(int r, const Weights& w) {
  Summary out;
  for (const DriftRow& row : drift_table(r)) {
    const double p = row.coefficient * ipow(w.a, row.a_power) * ipow(w.b, row.b_power);
    for (int i = 0; i < 4; ++i) out.f[i] += p * row.delta[i];
    if (row.hops) out.hop += p;
  }
  return out;
}

OdeState axpy(const OdeState& y, double h, const OdeState& k) {
  OdeState out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = y[i] + h * k[i];
  return out;
}

ClassState classes(const OdeState& s) { return {s[0], s[1], s[2], s[3]}; }

}  // namespace

std::span<const DriftRow> drift_table(int r) {
  if (r == 1) return kDegreeOneRows;
  if (r == 2) return kDegreeTwoRows;
  throw std::invalid_argument("drift tables exist for r = 1 and r = 2 only");
}

double row_probability(const DriftRow& row, const ClassState& y) {
  const Weights w = weights(y);
  return row.coefficient * ipow(w.a, row.a_power) * ipow(w.b, row.b_power);
}

double drift(int i, int r, const ClassState& y) {
  if (i < 0 || i > 3) throw std::invalid_argument("degree class must be 0..3");
  return summarize(r, weights(y)).f[i];
}

double hop_probability(int r, const ClassState& y) { return summarize(r, weights(y)).hop; }

double total_probability(int r, const ClassState& y) {
  double total = 0.0;
  for (const DriftRow& row : drift_table(r)) total += row_probability(row, y);
  return total;
}

BetaTau beta_tau(const ClassState& y) {
  const Weights w = weights(y);
  return {summarize(2, w).f[1], -summarize(1, w).f[1]};
}

OdeState mixture_rhs(double /*x*/, const OdeState& state) {
  const Weights w = weights(classes(state));
  const Summary one = summarize(1, w);
  const Summary two = summarize(2, w);
  const double beta = two.f[1];
  const double tau = -one.f[1];
  if (!(beta + tau > 0.0)) throw std::domain_error("mixture: beta + tau <= 0");
  const double w2 = tau / (beta + tau);
  const double w1 = beta / (beta + tau);
  OdeState out;
  for (int i = 0; i < 4; ++i) out[i] = w2 * two.f[i] + w1 * one.f[i];
  out[4] = w2 * two.hop + w1 * one.hop;
  return out;
}

OdeSolution solve_degree_greedy_ode(const OdeOptions& options) {
  const double h = options.step;
  const double tol = options.tolerance;
  if (!(h > 0.0)) throw std::invalid_argument("ode: step must be positive");
  const double x0 = options.seed_x;
  OdeState y{x0, 0.0, x0, 1.0 - 2.0 * x0, x0};
  double x = x0;

  OdeSolution sol;
  const auto record = [&](double at, const OdeState& s) { sol.trajectory.push_back({at, classes(s), s[4]}); };
  record(x, y);

  // Signed distances to the three stopping conditions; stop when any is <= tol.
  const auto margins = [&](const OdeState& s) -> std::array<double, 3> {
    const BetaTau bt = beta_tau(classes(s));
    return {bt.tau, bt.beta + bt.tau, s[2]};
  };
  static constexpr const char* kNames[3] = {"tau <= 0", "beta + tau = 0", "y2 <= 0"};

  // The step shrinks only when an RK4 stage leaves the domain, which happens
  // just before the phase ends.
  double step = h;
  double next_record = x0 + options.record_every;
  for (;;) {
    OdeState next;
    try {
      const OdeState k1 = mixture_rhs(x, y);
      const OdeState k2 = mixture_rhs(x + step / 2, axpy(y, step / 2, k1));
      const OdeState k3 = mixture_rhs(x + step / 2, axpy(y, step / 2, k2));
      const OdeState k4 = mixture_rhs(x + step, axpy(y, step, k3));
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = y[i] + step / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    } catch (const std::domain_error&) {
      if (step < h * 1e-9) {
        sol.termination = "beta + tau = 0";
        break;
      }
      step /= 2;
      continue;
    }

    const auto before = margins(y);
    std::array<double, 3> after{};
    bool after_valid = true;
    try {
      after = margins(next);
    } catch (const std::domain_error&) {
      after_valid = false;
    }

    int hit = -1;
    double fraction = 1.0;
    for (int c = 0; c < 3; ++c) {
      const double m1 = after_valid ? after[c] : (c == 2 ? next[2] : -1.0);
      if (m1 <= tol) {
        const double m0 = before[c];
        const double f = m0 > m1 ? std::clamp((m0 - tol) / (m0 - m1), 0.0, 1.0) : 1.0;
        if (hit < 0 || f < fraction) {
          hit = c;
          fraction = f;
        }
      }
    }
    if (hit >= 0) {
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += fraction * (next[i] - y[i]);
      x += fraction * step;
      sol.termination = kNames[hit];
      break;
    }

    for (double v : {next[0], next[1], next[2], next[3]})
      if (!std::isfinite(v) || v < -1e-6) throw std::runtime_error("ode: step failure (population left [0, 1])");
    y = next;
    x += step;
    if (x >= next_record - 0.5 * h) {
      record(x, y);
      next_record += options.record_every;
    }
  }

  if (sol.trajectory.back().x != x) record(x, y);
  sol.x_hat = x;
  sol.hop_fraction = y[4];
  sol.implied_bound = 1.0 - y[4];
  return sol;
}

double step_halving_gap(const OdeOptions& options) {
  OdeOptions half = options;
  half.step = options.step / 2.0;
  return std::abs(solve_degree_greedy_ode(options).x_hat - solve_degree_greedy_ode(half).x_hat);
}

OdePoint sample_at(const OdeSolution& sol, double x) {
  const auto& tr = sol.trajectory;
  if (tr.empty()) throw std::invalid_argument("empty trajectory");
  if (x <= tr.front().x) return tr.front();
  if (x >= tr.back().x) return tr.back();
  const auto it = std::upper_bound(tr.begin(), tr.end(), x, [](double v, const OdePoint& p) { return v < p.x; });
  const OdePoint& hi = *it;
  const OdePoint& lo = *(it - 1);
  const double t = (x - lo.x) / (hi.x - lo.x);
  OdePoint out{x, {}, lo.hopped + t * (hi.hopped - lo.hopped)};
  for (int i = 0; i < 4; ++i) out.y[i] = lo.y[i] + t * (hi.y[i] - lo.y[i]);
  return out;
}

}  // namespace hopforce
