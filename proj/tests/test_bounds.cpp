#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hopforce/bounds.hpp"

using namespace hopforce;

namespace {

// Golden-section search for the maximiser of a unimodal function on [a, b].
template <class F>
double argmax(F f, double a, double b) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  while (b - a > 1e-12) {
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - r * (b - a);
    d = a + r * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("upper fraction exact rationals") {
  CHECK(to_string(upper_fraction(3)) == "1/3");
  CHECK(to_string(upper_fraction(4)) == "16/35");
  CHECK(to_string(upper_fraction(5)) == "243/455");
  CHECK(to_string(upper_fraction(6)) == "8192/13923");
  CHECK(to_string(upper_fraction(7)) == "78125/124124");
  CHECK(to_string(upper_fraction(8)) == "40310784/60911435");
  CHECK(to_string(upper_fraction(9)) == "40353607/58640175");
  CHECK(to_string(upper_fraction(10)) == "17179869184/24192643475");
  CHECK_THROWS_AS(upper_fraction(2), std::domain_error);
}

TEST_CASE("upper fraction equals the telescoped product and the integral") {
  for (unsigned d = 3; d <= 40; ++d) {
    Rational product = 1;
    for (unsigned i = 1; i <= d - 1; ++i) product *= Rational(i * (d - 2), i * (d - 2) + 1);
    CHECK(upper_fraction(d) == product);
    const double exact = static_cast<double>(upper_fraction(d));
    CHECK(upper_fraction_value(d) == doctest::Approx(exact).epsilon(1e-14));
    CHECK(std::abs(upper_fraction_integral(d) - exact) <= 1e-9);
  }
}

TEST_CASE("upper fraction approaches 1 like log d / d") {
  for (unsigned d : {80u, 160u, 320u, 640u, 1280u}) {
    const double gap = 1.0 - upper_fraction_value(d);
    const double ratio = gap * d / std::log(static_cast<double>(d));
    CHECK(ratio > 0.5);
    CHECK(ratio < 3.0);
  }
}

TEST_CASE("spectral fraction") {
  CHECK(friedman_lambda(3) == doctest::Approx(2.0 * std::sqrt(2.0)));
  for (unsigned d = 3; d <= 1280; d += 7) {
    const double lambda = friedman_lambda(d);
    const double dd = d;
    const double a = 1.0 - 2.0 * lambda / dd;
    const double b = (dd - lambda) / (dd + 3.0 * lambda);
    const double e = eml_fraction(d, lambda);
    CHECK(e >= a);
    CHECK(e >= b);
    CHECK(e >= 0.0);
    CHECK((e == a || e == b || e == 0.0));
  }
  // Ramanujan-sized lambda of the Petersen graph: (3 - 2)/(3 + 6) = 1/9.
  CHECK(eml_fraction(3, 2.0) == doctest::Approx(1.0 / 9.0));
  CHECK(eml_fraction(4, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(eml_fraction(3, 3.5), std::domain_error);
  CHECK_THROWS_AS(eml_fraction(3, -0.1), std::domain_error);
  CHECK(eml_fraction(3, 3.0 + 1e-12) == 0.0);
}

TEST_CASE("z0 is the maximiser of g_d in z") {
  for (unsigned d : {3u, 5u, 10u}) {
    for (double x : {0.05, 0.2, 0.5, 0.8, 0.95}) {
      const double z = z0(x);
      CHECK(z > 0.0);
      CHECK(z < 0.5);
      const double hi = std::min(0.5, (1.0 - x) / (2.0 * x));
      const double best = argmax([&](double t) { return g_d(d, x, t); }, 1e-12, hi - 1e-12);
      CHECK(best == doctest::Approx(z).epsilon(1e-5));
      // Closed-form derivative against a central difference.
      const double h = 1e-6;
      const double probe = 0.5 * (z + hi);
      const double fd = (g_d(d, x, probe + h) - g_d(d, x, probe - h)) / (2 * h);
      CHECK(g_d_dz(d, x, probe) == doctest::Approx(fd).epsilon(1e-5));
      CHECK(std::abs(g_d_dz(d, x, z)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(z0(0.0), std::domain_error);
  CHECK_THROWS_AS(z0(1.0), std::domain_error);
}

TEST_CASE("f_d reduces to g_d on the diagonal") {
  for (double x : {0.1, 0.3, 0.6})
    for (double z : {0.01, 0.1, 0.3})
      if (z * x <= (1 - x) / 2) CHECK(f_d(4, x, z, z) == doctest::Approx(g_d(4, x, z)).epsilon(1e-12));
  CHECK(f_d(3, 0.5, 0.0, 0.0) == doctest::Approx(g_d(3, 0.5, 0.0)));
  CHECK_THROWS_AS(f_d(3, 0.5, 0.7, 0.7), std::domain_error);
}

TEST_CASE("h_d has one upward crossing and matches the table") {
  const double table[] = {0.0699, 0.1451, 0.2114, 0.2678, 0.3158, 0.3569, 0.3924, 0.4235};
  for (unsigned d = 3; d <= 10; ++d) {
    const RootScan scan = scan_config_root(d);
    CHECK(scan.upward_crossings == 1);
    CHECK(scan.sign_changes == 1);
    CHECK(std::abs(scan.root - table[d - 3]) <= 5e-5);
    CHECK(std::abs(h_d(d, scan.root)) < 1e-8);
    CHECK(h_d(d, 0.001) < 0.0);
  }
}

TEST_CASE("bound ordering eml <= config <= upper") {
  for (unsigned d : {3u, 4u, 7u, 10u, 20u, 80u, 640u}) {
    const BoundReport r = bound_report(d);
    CHECK(r.eml <= r.config);
    CHECK(r.config <= r.upper_value);
  }
}

TEST_CASE("perfect matching counts") {
  CHECK(matchings_count(0) == 1);
  CHECK(matchings_count(2) == 1);
  CHECK(matchings_count(4) == 3);
  CHECK(matchings_count(6) == 15);
  CHECK(matchings_count(10) == 945);
  CHECK_THROWS_AS(matchings_count(5), std::domain_error);
  for (unsigned i = 0; i <= 30; i += 2)
    CHECK(log_matchings_count(i) == doctest::Approx(std::log(static_cast<double>(matchings_count(i)))).epsilon(1e-12));
}

TEST_CASE("partition count log-rate converges to f_d") {
  struct Point {
    unsigned d;
    double x, y, z;
  };
  for (const Point p : {Point{3, 0.1, 0.02, 0.02}, Point{5, 0.3, 0.1, 0.15}, Point{10, 0.5, 0.2, 0.2}}) {
    double previous = INFINITY;
    for (double n : {1e3, 1e4, 1e5, 1e6}) {
      const double err = std::abs(log_partition_count(p.d, p.x, p.y, p.z, n) / n - f_d(p.d, p.x, p.y, p.z));
      CHECK(err <= 3.0 * std::log(n) / n);
      CHECK(err < previous);
      previous = err;
    }
  }
}

TEST_CASE("z0 values and range") {
  CHECK(z0(0.5) == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
  for (unsigned d : {3u, 6u, 12u})
    CHECK(argmax([&](double t) { return g_d(d, 0.5, t); }, 1e-12, 0.5 - 1e-12) ==
          doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-5));
  for (int k = 1; k < 1000; ++k) {
    const double z = z0(k / 1000.0);
    CHECK(z > 0.0);
    CHECK(z < 0.5);
  }
  CHECK(z0(1.0 - 1e-9) < 1e-8);
}

TEST_CASE("f_d increases along (0, 1, -1) while y < z") {
  for (unsigned d : {3u, 5u, 10u})
    for (double x : {0.1, 0.3, 0.6})
      for (double y : {0.01, 0.05})
        for (double z : {0.1, 0.2}) {
          const double e = 1e-6;
          CHECK(f_d(d, x, y + e, z - e) > f_d(d, x, y - e, z + e));
          const double m = (y + z) / 2.0;
          CHECK(f_d(d, x, y, z) <= f_d(d, x, m, m));
          CHECK(f_d(d, x, y, z) <= f_d(d, x, z, z));
        }
}

TEST_CASE("h_d limits at both ends") {
  for (unsigned d : {3u, 5u, 10u, 80u}) {
    const double limit = -(static_cast<double>(d) - 2.0) * std::log(2.0) / 2.0;
    CHECK(h_d(d, 1e-9) == doctest::Approx(limit).epsilon(1e-6));
    CHECK(std::abs(h_d(d, 1.0 - 1e-7)) < 1e-4);
  }
  // The limit is approached slowly: x log x terms remain at x = 10^-3.
  CHECK(std::abs(h_d(3, 0.001) + std::log(2.0) / 2.0) < 0.01);
}

TEST_CASE("configuration root increases with d") {
  double previous = 0.0;
  for (unsigned d : {3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 20u, 40u, 80u, 160u, 320u, 640u, 1280u}) {
    const double root = scan_config_root(d).root;
    CHECK(root > previous);
    previous = root;
  }
  CHECK(std::abs(scan_config_root(80).root - 0.8409) <= 5e-5);
  CHECK(std::abs(scan_config_root(1280).root - 0.9823) <= 5e-5);
}

TEST_CASE("eml fraction algebraic rewrite") {
  for (unsigned d : {3u, 4u, 10u, 100u, 1280u})
    for (double t : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
      const double dd = d;
      const double lambda = t * dd;
      const double rewrite = std::max(0.0, 1.0 - std::min(2.0 * lambda / dd, 4.0 * lambda / (dd + 3.0 * lambda)));
      CHECK(std::abs(eml_fraction(d, lambda) - rewrite) <= 1e-12);
    }
  CHECK(std::abs(eml_fraction(3, 2.0 * std::sqrt(2.0)) - 0.0149) <= 5e-5);
  CHECK(std::abs(eml_fraction(10, 6.0) - 0.1429) <= 5e-5);
  CHECK(std::abs(eml_fraction(1280, 2.0 * std::sqrt(1279.0)) - 0.8882) <= 5e-5);
}

TEST_CASE("upper fraction gap ratio over a wide degree range") {
  for (unsigned d = 10; d <= 2000; d += 10) {
    const double ratio = (1.0 - upper_fraction_value(d)) * d / std::log(static_cast<double>(d));
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 3.0);
  }
}
