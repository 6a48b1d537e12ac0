#include "hopforce/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace hopforce {

namespace {

double xlogx(double v) { return v <= 0.0 ? 0.0 : v * std::log(v); }

void require_degree(unsigned d) {
  if (d < 3) throw std::domain_error("bound needs d >= 3, got " + std::to_string(d));
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

Rational upper_fraction(unsigned d) {
  require_degree(d);
  BigInt numerator = 1;
  for (unsigned i = 2; i <= d - 1; ++i) numerator *= i;
  numerator *= boost::multiprecision::pow(BigInt(d - 2), d - 1);
  BigInt denominator = 1;
  for (unsigned i = 1; i <= d - 1; ++i) denominator *= BigInt(i) * (d - 2) + 1;
  return Rational(numerator, denominator);
}

double upper_fraction_value(unsigned d) {
  require_degree(d);
  double product = 1.0;
  for (unsigned i = 1; i <= d - 1; ++i) {
    const double k = static_cast<double>(i) * (d - 2);
    product *= k / (k + 1.0);
  }
  return product;
}

double upper_fraction_integral(unsigned d, double tolerance) {
  require_degree(d);
  const auto f = [d](double x) {
    return std::pow(1.0 - std::pow(1.0 - x, static_cast<double>(d - 2)), static_cast<double>(d - 1));
  };
  // Split at a few points so the initial Simpson estimate cannot miss the
  // steep rise near x = 0 for large d.
  double total = 0.0;
  const int pieces = 16;
  for (int k = 0; k < pieces; ++k) {
    const double a = static_cast<double>(k) / pieces;
    const double b = static_cast<double>(k + 1) / pieces;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += adaptive_simpson(f, a, b, fa, fm, fb, whole, tolerance / pieces, 50);
  }
  return total;
}

double friedman_lambda(unsigned d) { return 2.0 * std::sqrt(static_cast<double>(d) - 1.0); }

double eml_fraction(unsigned d, double lambda) {
  const double dd = static_cast<double>(d);
  // Eigensolver round-off can put lambda just outside [0, d].
  constexpr double slack = 1e-9;
  if (lambda < -slack || lambda > dd + slack) throw std::domain_error("eml_fraction: lambda outside [0, d]");
  lambda = std::clamp(lambda, 0.0, dd);
  const double spectral = 1.0 - 2.0 * lambda / dd;
  const double bisection = (dd - lambda) / (dd + 3.0 * lambda);
  return std::max({spectral, bisection, 0.0});
}

double z0(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("z0: x must lie in (0, 1)");
  // (1 - sqrt(1 - 2(1-x)x)) / (2x), rationalised to avoid cancellation.
  const double q = 2.0 * (1.0 - x) * x;
  return q / (2.0 * x * (1.0 + std::sqrt(1.0 - q)));
}

double f_d(unsigned d, double x, double y, double z) {
  const double dd = static_cast<double>(d);
  const double half_rest = (1.0 - x) / 2.0;
  if (!(x > 0.0 && x < 1.0) || y < 0.0 || z < 0.0 || y + z > 1.0 || y * x > half_rest || z * x > half_rest)
    throw std::domain_error("f_d: arguments outside the feasible region");
  return (dd - 1.0 - dd * (y + z) - (1.0 - y - z) * dd / 2.0) * x * std::log(x) +
         (dd - 1.0) * (1.0 - x) * std::log(half_rest) - dd * x * xlogx(y) - dd * x * xlogx(z) -
         dd * x / 2.0 * xlogx(1.0 - y - z) - dd / 2.0 * xlogx(half_rest - y * x) -
         dd / 2.0 * xlogx(half_rest - z * x);
}

double g_d(unsigned d, double x, double z) {
  const double dd = static_cast<double>(d);
  const double half_rest = (1.0 - x) / 2.0;
  if (!(x > 0.0 && x < 1.0) || z < 0.0 || z > 0.5 || z * x > half_rest)
    throw std::domain_error("g_d: arguments outside the feasible region");
  return (dd / 2.0 - 1.0 - dd * z) * x * std::log(x) + (dd - 1.0) * (1.0 - x) * std::log(half_rest) -
         2.0 * dd * x * xlogx(z) - dd * x / 2.0 * xlogx(1.0 - 2.0 * z) - dd * xlogx(half_rest - z * x);
}

double g_d_dz(unsigned d, double x, double z) {
  return static_cast<double>(d) * x * std::log((1.0 - x - 2.0 * z * x) * (1.0 - 2.0 * z) / (2.0 * x * z * z));
}

double h_d(unsigned d, double x) { return g_d(d, x, z0(x)); }

RootScan scan_config_root(unsigned d) {
  require_degree(d);
  RootScan scan;
  bool found = false;
  double lo = 0.0;
  double hi = 0.0;
  double prev_x = 1e-3;
  double prev = h_d(d, prev_x);
  for (int k = 2; k < 1000; ++k) {
    const double x = k * 1e-3;
    const double v = h_d(d, x);
    if ((prev < 0.0) != (v < 0.0)) ++scan.sign_changes;
    if (prev < 0.0 && v >= 0.0) {
      ++scan.upward_crossings;
      if (!found) {
        found = true;
        lo = prev_x;
        hi = x;
      }
    }
    prev = v;
    prev_x = x;
  }
  if (!found) throw std::runtime_error("config_fraction: no sign change of h_d for d=" + std::to_string(d));
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (h_d(d, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  scan.root = 0.5 * (lo + hi);
  return scan;
}

double config_fraction(unsigned d) { return scan_config_root(d).root; }

BigInt matchings_count(unsigned i) {
  if (i % 2 != 0) throw std::domain_error("matchings_count: odd number of points");
  // (i-1)!! = i! / ((i/2)! 2^(i/2))
  BigInt out = 1;
  for (unsigned k = i; k >= 2; k -= 2) out *= k - 1;
  return out;
}

double log_matchings_count(double i) {
  if (i < 0.0) throw std::domain_error("log_matchings_count: negative size");
  return std::lgamma(i + 1.0) - std::lgamma(i / 2.0 + 1.0) - i / 2.0 * std::log(2.0);
}

double log_partition_count(unsigned d, double x, double y, double z, double n) {
  const double dd = static_cast<double>(d);
  const auto lf = [](double v) { return std::lgamma(v + 1.0); };
  const auto lchoose = [&](double a, double b) {
    if (b < 0.0 || b > a) throw std::domain_error("log_partition_count: infeasible block sizes");
    return lf(a) - lf(b) - lf(a - b);
  };
  const double u_points = dd * x * n;
  const double side_points = dd * (1.0 - x) * n / 2.0;
  const double us = y * dd * x * n;
  const double ut = z * dd * x * n;
  const double u_rest = (1.0 - y - z) * dd * x * n;
  const double s_rest = dd * ((1.0 - x) / 2.0 - y * x) * n;
  const double t_rest = dd * ((1.0 - x) / 2.0 - z * x) * n;
  if (x <= 0.0 || x >= 1.0 || u_rest < 0.0 || s_rest < 0.0 || t_rest < 0.0)
    throw std::domain_error("log_partition_count: infeasible block sizes");
  return lchoose(n, x * n) + lchoose((1.0 - x) * n, (1.0 - x) * n / 2.0) + lchoose(u_points, us) +
         lchoose(side_points, us) + lf(us) + lchoose((1.0 - y) * u_points, ut) + lchoose(side_points, ut) + lf(ut) +
         log_matchings_count(u_rest) + log_matchings_count(s_rest) + log_matchings_count(t_rest) -
         log_matchings_count(dd * n);
}

BoundReport bound_report(unsigned d) {
  BoundReport r;
  r.d = d;
  r.eml = eml_fraction(d, friedman_lambda(d));
  r.config = config_fraction(d);
  r.upper = upper_fraction(d);
  r.upper_value = upper_fraction_value(d);
  return r;
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace hopforce
