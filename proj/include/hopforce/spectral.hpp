#pragma once

#include <cstddef>
#include <vector>

#include "hopforce/graph.hpp"

namespace hopforce {

inline constexpr std::size_t kDenseEigenLimit = 4096;

struct SpectrumSummary {
  double lambda1 = 0.0;
  // max(|lambda_2|, |lambda_n|)
  double lambda = 0.0;
  // Descending; empty unless requested.
  std::vector<double> eigenvalues;
};

// Adjacency spectrum via a dense symmetric eigensolver. Loops contribute 2 to
// the diagonal so rows of a d-regular multigraph still sum to d.
SpectrumSummary lambda_of(const Graph& g, bool keep_spectrum = false, std::size_t limit = kDenseEigenLimit);

// 1_S^T A 1_T: each edge from S to T counts once per orientation, so an edge
// inside S and T is counted twice.
long long edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

// |E(S,T)| - d|S||T|/n
double mixing_residual(const Graph& g, const VertexSet& s, const VertexSet& t);

// lambda * sqrt(|S||T|)
double mixing_bound(double lambda, const VertexSet& s, const VertexSet& t);

// lambda |S| |V \ S| / n, the bound on |E(S, V\S)| - d|S||V\S|/n.
double bisection_bound(double lambda, const VertexSet& s);

}  // namespace hopforce
