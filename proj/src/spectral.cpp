#include "hopforce/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "hopforce/errors.hpp"

namespace hopforce {

SpectrumSummary lambda_of(const Graph& g, bool keep_spectrum, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit)
    throw InstanceTooLarge("dense eigensolver: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  if (n == 0) return {};

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.adjacency(v)) a(v, u) += 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");

  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), std::greater<>());

  SpectrumSummary out;
  out.lambda1 = values.front();
  if (n >= 2) out.lambda = std::max(std::abs(values[1]), std::abs(values.back()));
  if (keep_spectrum) out.eigenvalues = std::move(values);
  return out;
}

long long edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  long long count = 0;
  for (VertexId v : s.members())
    for (VertexId u : g.adjacency(v))
      if (t.contains(u)) ++count;
  return count;
}

double mixing_residual(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const double n = static_cast<double>(g.order());
  const double expected = static_cast<double>(g.degree()) * static_cast<double>(s.size()) *
                          static_cast<double>(t.size()) / n;
  return static_cast<double>(edges_between(g, s, t)) - expected;
}

double mixing_bound(double lambda, const VertexSet& s, const VertexSet& t) {
  return lambda * std::sqrt(static_cast<double>(s.size()) * static_cast<double>(t.size()));
}

double bisection_bound(double lambda, const VertexSet& s) {
  const double n = static_cast<double>(s.universe());
  const double k = static_cast<double>(s.size());
  return lambda * k * (n - k) / n;
}

}  // namespace hopforce
