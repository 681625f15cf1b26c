#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "error.hpp"

namespace gtrans {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kSignTolerance = 1e-12;

void check_signal_size(const SpectralBasis& basis, const std::vector<double>& x,
                       const char* what) {
  if (static_cast<int>(x.size()) != basis.size()) {
    fail(Status::InvalidArgument, std::string(what) + " has " + std::to_string(x.size()) +
                                      " entries but the basis has " +
                                      std::to_string(basis.size()));
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

RealMatrix laplacian(const Graph& g) {
  const int n = g.vertex_count();
  RealMatrix l(n, n);
  for (int v = 0; v < n; ++v) l.at(v, v) = static_cast<double>(g.degree(v));
  for (const auto& [u, v] : g.edges()) {
    l.at(u, v) = -1.0;
    l.at(v, u) = -1.0;
  }
  return l;
}

SpectralBasis eig_sym(const RealMatrix& m, double tol, int max_sweeps) {
  if (m.rows != m.cols) fail(Status::InvalidArgument, "eigendecomposition needs a square matrix");
  if (m.rows < 1) fail(Status::InvalidArgument, "eigendecomposition needs a non-empty matrix");
  if (!(tol > 0.0)) fail(Status::InvalidArgument, "eigendecomposition tolerance must be positive");
  if (max_sweeps < 1) fail(Status::InvalidArgument, "sweep limit must be >= 1");
  const int n = m.rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::fabs(m.at(i, j) - m.at(j, i)) > kSymmetryTolerance) {
        fail(Status::InvalidArgument, "matrix is not symmetric at (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ")");
      }
    }
  }

  std::vector<double> a(m.data);
  // Accumulated rotations, stored transposed: row j of vt is the j-th
  // eigenvector candidate. Row storage keeps every update contiguous.
  std::vector<double> vt(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vt[static_cast<size_t>(i) * n + i] = 1.0;

  auto off_diagonal_max = [&]() {
    double mx = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        mx = std::max(mx, std::fabs(a[static_cast<size_t>(i) * n + j]));
    return mx;
  };

  // Cyclic sweeps with the small-element skip from the classical algorithm:
  // in early sweeps only rotations above a shrinking threshold are applied,
  // and entries that can no longer affect the diagonal are zeroed outright.
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double sum = 0.0;
    double mx = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double entry = std::fabs(a[static_cast<size_t>(i) * n + j]);
        sum += entry;
        mx = std::max(mx, entry);
      }
    }
    if (mx <= tol) break;
    const double thresh = sweep < 3 ? 0.2 * sum / (static_cast<double>(n) * n) : 0.0;

    // A <- J^T A J per rotation, working on the two affected rows. Row p of
    // the symmetric matrix always equals column p, so during the pass over a
    // fixed p the column in memory is allowed to go stale: each inner step
    // refreshes the single entry it reads from it, the rotated row q is
    // mirrored into column q directly, and column p is written back once
    // after the pass.
    for (int p = 0; p < n - 1; ++p) {
      double* rowp = a.data() + static_cast<size_t>(p) * n;
      for (int q = p + 1; q < n; ++q) {
        double* rowq = a.data() + static_cast<size_t>(q) * n;
        rowq[p] = rowp[q];
        const double apq = rowp[q];
        const double small = 100.0 * std::fabs(apq);
        const double app = rowp[p];
        const double aqq = rowq[q];
        if (sweep > 3 && std::fabs(app) + small == std::fabs(app) &&
            std::fabs(aqq) + small == std::fabs(aqq)) {
          rowp[q] = 0.0;
          rowq[p] = 0.0;
          continue;
        }
        if (std::fabs(apq) <= thresh) continue;

        const double h = aqq - app;
        double t;
        if (std::fabs(h) + small == std::fabs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = rowp[k];
          const double akq = rowq[k];
          rowp[k] = c * akp - s * akq;
          rowq[k] = s * akp + c * akq;
        }
        rowp[p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        rowq[q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        rowp[q] = 0.0;
        rowq[p] = 0.0;
        for (int k = 0; k < n; ++k) a[static_cast<size_t>(k) * n + q] = rowq[k];
        double* vp = vt.data() + static_cast<size_t>(p) * n;
        double* vq = vt.data() + static_cast<size_t>(q) * n;
        for (int k = 0; k < n; ++k) {
          const double vkp = vp[k];
          const double vkq = vq[k];
          vp[k] = c * vkp - s * vkq;
          vq[k] = s * vkp + c * vkq;
        }
      }
      for (int k = 0; k < n; ++k) a[static_cast<size_t>(k) * n + p] = rowp[k];
    }
  }

  const double residual = off_diagonal_max();
  if (residual > tol) {
    fail(Status::NoConvergence, "eigendecomposition did not converge after " +
                                    std::to_string(max_sweeps) +
                                    " sweeps, largest off-diagonal entry is " +
                                    std::to_string(residual));
  }

  // Ascending eigenvalue order; ties keep the lower Jacobi column first so
  // the result does not depend on the sort implementation.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a[static_cast<size_t>(i) * n + i] < a[static_cast<size_t>(j) * n + j];
  });

  SpectralBasis basis;
  basis.lambdas.resize(n);
  basis.u = RealMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    basis.lambdas[j] = a[static_cast<size_t>(src) * n + src];
    const double* column = vt.data() + static_cast<size_t>(src) * n;
    double flip = 1.0;
    for (int k = 0; k < n; ++k) {
      if (std::fabs(column[k]) > kSignTolerance) {
        flip = column[k] < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (int i = 0; i < n; ++i) basis.u.at(i, j) = flip * column[i];
  }
  return basis;
}

std::vector<double> gft(const SpectralBasis& basis, const std::vector<double>& x) {
  check_signal_size(basis, x, "signal");
  const int n = basis.size();
  std::vector<double> xhat(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += basis.u.at(i, j) * x[i];
    xhat[j] = s;
  }
  return xhat;
}

std::vector<double> igft(const SpectralBasis& basis, const std::vector<double>& xhat) {
  check_signal_size(basis, xhat, "spectrum");
  const int n = basis.size();
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += basis.u.at(i, j) * xhat[j];
    x[i] = s;
  }
  return x;
}

std::vector<double> graph_convolution(const SpectralBasis& basis, const std::vector<double>& x1,
                                      const std::vector<double>& x2) {
  check_signal_size(basis, x1, "first signal");
  check_signal_size(basis, x2, "second signal");
  std::vector<double> product = gft(basis, x1);
  const std::vector<double> rhs = gft(basis, x2);
  for (size_t i = 0; i < product.size(); ++i) product[i] *= rhs[i];
  return igft(basis, product);
}

std::vector<double> spectral_translate(const SpectralBasis& basis, const std::vector<double>& x,
                                       int v, bool scaled) {
  check_signal_size(basis, x, "signal");
  if (v < 0 || v >= basis.size()) {
    fail(Status::InvalidArgument, "translation target vertex out of range");
  }
  std::vector<double> delta(basis.size(), 0.0);
  delta[v] = 1.0;
  std::vector<double> y = graph_convolution(basis, x, delta);
  if (scaled) {
    const double factor = std::sqrt(static_cast<double>(basis.size()));
    for (double& entry : y) entry *= factor;
  }
  return y;
}

int support_size(const std::vector<double>& x, double threshold) {
  int count = 0;
  for (double entry : x)
    if (std::fabs(entry) > threshold) ++count;
  return count;
}

ComparisonReport compare_translations(const std::vector<double>& first,
                                      const std::vector<double>& second,
                                      const std::vector<double>* reference,
                                      double support_threshold) {
  if (first.size() != second.size()) {
    fail(Status::InvalidArgument, "compared signals have different lengths");
  }
  if (reference && reference->size() != first.size()) {
    fail(Status::InvalidArgument, "reference signal length does not match");
  }

  ComparisonReport report;
  report.support_threshold = support_threshold;

  double dist2 = 0.0;
  for (size_t i = 0; i < first.size(); ++i) {
    const double d = first[i] - second[i];
    dist2 += d * d;
  }
  report.l2_distance = std::sqrt(dist2);

  const double e1 = dot(first, first);
  const double e2 = dot(second, second);
  if (e1 == 0.0 && e2 == 0.0) {
    report.cosine = 1.0;
  } else if (e1 == 0.0 || e2 == 0.0) {
    report.cosine = 0.0;
  } else {
    report.cosine = dot(first, second) / (std::sqrt(e1) * std::sqrt(e2));
  }

  if (reference) {
    const double er = dot(*reference, *reference);
    if (er == 0.0) fail(Status::InvalidArgument, "reference signal has zero energy");
    report.energy_ratio_first = e1 / er;
    report.energy_ratio_second = e2 / er;
  } else {
    report.energy_ratio_first = std::numeric_limits<double>::quiet_NaN();
    report.energy_ratio_second = std::numeric_limits<double>::quiet_NaN();
  }

  report.support_first = support_size(first, support_threshold);
  report.support_second = support_size(second, support_threshold);
  return report;
}

}  // namespace gtrans
