#ifndef GTRANS_SPECTRAL_HPP
#define GTRANS_SPECTRAL_HPP

#include <vector>

#include "graph.hpp"

namespace gtrans {

struct RealMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // row-major

  RealMatrix() = default;
  RealMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

// Orthonormal eigenbasis of a symmetric matrix: eigenvectors are the columns
// of u, lambdas ascending. Each column's first entry with magnitude above
// 1e-12 is positive, which makes the basis deterministic.
struct SpectralBasis {
  RealMatrix u;
  std::vector<double> lambdas;

  int size() const { return static_cast<int>(lambdas.size()); }
};

// L = D - W for the unweighted adjacency.
RealMatrix laplacian(const Graph& g);

// Cyclic Jacobi: sweeps rotations over all (p, q) pairs until the largest
// off-diagonal magnitude drops below tol, then sorts eigenpairs ascending.
SpectralBasis eig_sym(const RealMatrix& m, double tol = 1e-10, int max_sweeps = 100);

// Graph Fourier transform and its inverse.
std::vector<double> gft(const SpectralBasis& basis, const std::vector<double>& x);
std::vector<double> igft(const SpectralBasis& basis, const std::vector<double>& xhat);

// U (U^T x1 . U^T x2): multiplication in the spectral domain.
std::vector<double> graph_convolution(const SpectralBasis& basis, const std::vector<double>& x1,
                                      const std::vector<double>& x2);

// Convolution of x with the delta at v; scaled multiplies by sqrt(n), a
// normalization some toolboxes apply.
std::vector<double> spectral_translate(const SpectralBasis& basis, const std::vector<double>& x,
                                       int v, bool scaled = false);

int support_size(const std::vector<double>& x, double threshold = 1e-6);

struct ComparisonReport {
  double l2_distance = 0.0;
  double cosine = 0.0;
  double energy_ratio_first = 0.0;   // |first|^2 / |reference|^2, NaN without a reference
  double energy_ratio_second = 0.0;  // same for second
  int support_first = 0;
  int support_second = 0;
  double support_threshold = 1e-6;
};

ComparisonReport compare_translations(const std::vector<double>& first,
                                      const std::vector<double>& second,
                                      const std::vector<double>* reference = nullptr,
                                      double support_threshold = 1e-6);

}  // namespace gtrans

#endif
