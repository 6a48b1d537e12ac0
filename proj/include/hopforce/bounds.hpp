#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopforce {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Upper-bound constant of the Hamilton-hop strategy,
//   (d-1)! (d-2)^(d-1) / prod_{i=1}^{d-1} (i(d-2)+1),
// exact. d = 3 gives 1/3.
Rational upper_fraction(unsigned d);

// Same constant as a double, from prod_{i=1}^{d-1} i(d-2)/(i(d-2)+1).
double upper_fraction_value(unsigned d);

// Adaptive Simpson quadrature of (1 - (1-x)^(d-2))^(d-1) over [0, 1].
double upper_fraction_integral(unsigned d, double tolerance = 1e-10);

// 2 sqrt(d-1): the almost-sure limit of lambda for random d-regular graphs.
double friedman_lambda(unsigned d);

// max(1 - 2 lambda/d, (d - lambda)/(d + 3 lambda), 0)
double eml_fraction(unsigned d, double lambda);

// Stationary point in z of g_d(x, .), independent of d; lies in (0, 1/2).
double z0(double x);

// Exponential growth rate of the expected number of (S, T, U) partitions with
// no S-T edge, with the U-S and U-T edge densities tied (y = z).
double g_d(unsigned d, double x, double z);

// Rate with independent U-S (y) and U-T (z) edge densities. 0 log 0 = 0.
double f_d(unsigned d, double x, double y, double z);

double h_d(unsigned d, double x);

// Partial derivative of g_d in z, closed form.
double g_d_dz(unsigned d, double x, double z);

struct RootScan {
  double root = 0.0;
  // Negative-to-positive crossings found on the 1e-3 grid.
  std::size_t upward_crossings = 0;
  std::size_t sign_changes = 0;
};

// Scans h_d on a 1e-3 grid, then bisects the first upward crossing to 1e-10.
// Throws std::runtime_error if no crossing exists.
RootScan scan_config_root(unsigned d);

// The unique zero x_d of h_d on (0, 1).
double config_fraction(unsigned d);

// Number of perfect matchings on i points, i!/((i/2)! 2^(i/2)).
BigInt matchings_count(unsigned i);

// log M(i) for real i >= 0 via log-gamma.
double log_matchings_count(double i);

// log of the expected number of partitions with |U| = xn, |S| = |T| =
// (1-x)n/2, |E(U,S)| = ydxn, |E(U,T)| = zdxn and no S-T edge.
double log_partition_count(unsigned d, double x, double y, double z, double n);

struct BoundReport {
  unsigned d = 0;
  double eml = 0.0;
  double config = 0.0;
  Rational upper;
  double upper_value = 0.0;
};

// Table row with lambda = 2 sqrt(d-1).
BoundReport bound_report(unsigned d);

std::string to_string(const Rational& r);

}  // namespace hopforce
