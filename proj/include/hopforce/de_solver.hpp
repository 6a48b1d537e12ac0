#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hopforce {

// Population fractions y_0..y_3 of vertices with i unmatched points.
using ClassState = std::array<double, 4>;

// One case of a degree-r vertex trying to hop. Its probability is
// coefficient * a^a_power * b^b_power with a = 3y_3/s, b = 2y_2/s and
// s = y_1 + 2y_2 + 3y_3.
struct DriftRow {
  double coefficient;
  int a_power;
  int b_power;
  std::array<int, 4> delta;
  bool hops;
};

std::span<const DriftRow> drift_table(int r);

double row_probability(const DriftRow& row, const ClassState& y);

// f_{i,r}(y) = sum_j p_r^(j) dY_i^(j). Throws std::domain_error if s <= 0.
double drift(int i, int r, const ClassState& y);

// Sum of row probabilities over rows that end in a hop.
double hop_probability(int r, const ClassState& y);
double total_probability(int r, const ClassState& y);

struct BetaTau {
  double beta;  // degree-1 vertices created by a degree-2 step
  double tau;   // degree-1 vertices consumed by a degree-1 step
};

BetaTau beta_tau(const ClassState& y);

// State (y_0, y_1, y_2, y_3, hopped).
using OdeState = std::array<double, 5>;

// Mixture of the two step types with weights tau/(beta+tau) for degree-2
// steps and beta/(beta+tau) for degree-1 steps. Throws std::domain_error
// when beta + tau <= 0.
OdeState mixture_rhs(double x, const OdeState& state);

struct OdeOptions {
  double step = 1e-6;
  // Integration starts at seed_x from (seed_x, 0, seed_x, 1 - 2 seed_x) with
  // seed_x hopped: the early regime in which every step is a degree-1 hop
  // through a fresh vertex.
  double seed_x = 1e-3;
  double record_every = 1e-3;
  double tolerance = 1e-12;
};

struct OdePoint {
  double x;
  ClassState y;
  double hopped;
};

struct OdeSolution {
  std::vector<OdePoint> trajectory;
  double x_hat = 0.0;
  double hop_fraction = 0.0;
  double implied_bound = 0.0;
  std::string termination;  // which condition stopped the phase
};

// Fixed-step RK4 until tau <= 0, beta + tau <= 0 or y_2 <= 0; the crossing is
// located by linear interpolation inside the final step.
OdeSolution solve_degree_greedy_ode(const OdeOptions& options = {});

// |x_hat(h) - x_hat(h/2)|
double step_halving_gap(const OdeOptions& options = {});

// Linear interpolation of the recorded trajectory; clamps outside its range.
OdePoint sample_at(const OdeSolution& sol, double x);

}  // namespace hopforce
