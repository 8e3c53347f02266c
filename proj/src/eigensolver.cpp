// Copyright 2026 The wdwvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wdwvqe/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wdwvqe/errors.hpp"

namespace wdwvqe {

namespace {

constexpr int kMaxSweeps = 60;

// Reduces `a` (Hermitian, modified in place) to tridiagonal form T = Q^dagger A Q
// and returns Q.
ComplexMatrix householder_tridiagonalize(ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v;
  std::vector<Complex> w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double tail = 0.0;
    for (std::size_t i = 1; i < m; ++i) tail += std::norm(a(k + 1 + i, k));
    if (tail == 0.0) continue;

    const Complex x0 = a(k + 1, k);
    const double sigma = std::sqrt(tail + std::norm(x0));
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0, 0.0};
    v.assign(m, Complex{});
    for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
    v[0] += phase * sigma;
    double vnorm = 0.0;
    for (const auto& z : v) vnorm += std::norm(z);
    vnorm = std::sqrt(vnorm);
    for (auto& z : v) z /= vnorm;

    // A <- (I - 2 v v^dagger) A on rows k+1.., all columns.
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += std::conj(v[i]) * a(k + 1 + i, j);
      w[j] = s;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(k + 1 + i, j) -= 2.0 * v[i] * w[j];
    // A <- A (I - 2 v v^dagger) and Q <- Q (I - 2 v v^dagger) on columns k+1..
    for (ComplexMatrix* target : {&a, &q}) {
      ComplexMatrix& t = *target;
      for (std::size_t r = 0; r < n; ++r) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m; ++j) s += t(r, k + 1 + j) * v[j];
        for (std::size_t j = 0; j < m; ++j) t(r, k + 1 + j) -= 2.0 * s * std::conj(v[j]);
      }
    }
  }
  return q;
}

// Implicit-shift QL on a real symmetric tridiagonal (diag d, sub-diagonal e
// with e[i] coupling i and i+1). Eigenvector rotations accumulate into z,
// stored row-major n x n.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  e.resize(static_cast<std::size_t>(n), 0.0);
  e[static_cast<std::size_t>(n - 1)] = 0.0;
  auto Z = [&](int r, int c) -> double& { return z[static_cast<std::size_t>(r * n + c)]; };

  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweeps)
        throw NoConvergence("QL iteration did not converge for eigenvalue " + std::to_string(l));

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool deflated = false;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (int k = 0; k < n; ++k) {
          f = Z(k, i + 1);
          Z(k, i + 1) = s * Z(k, i) + c * f;
          Z(k, i) = c * Z(k, i) - s * f;
        }
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

std::size_t dominant_index(const ComplexMatrix& v, std::size_t col) {
  std::size_t best = 0;
  double mag = -1.0;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    // Small relative slack so near-ties resolve to the lower index.
    const double a = std::abs(v(r, col));
    if (a > mag * (1.0 + 1e-12) + 1e-14) {
      mag = a;
      best = r;
    }
  }
  return best;
}

}  // namespace

EigResult eigh(const ComplexMatrix& op) {
  const std::size_t n = op.dim();
  if (n == 0) throw InvalidArgument("eigh of an empty matrix");
  const double scale = std::max(1.0, op.max_abs());
  const double herr = op.hermiticity_error();
  if (!(herr <= 1e-10 * scale))
    throw NotHermitian("matrix deviates from Hermitian by " + std::to_string(herr));

  ComplexMatrix a = op;
  a.make_hermitian();
  const ComplexMatrix q = householder_tridiagonalize(a);

  std::vector<double> d(n);
  std::vector<double> e(n, 0.0);
  std::vector<Complex> phase(n, Complex{1.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Complex off = a(i + 1, i);
    const double mag = std::abs(off);
    e[i] = mag;
    phase[i + 1] = mag > 0.0 ? phase[i] * off / mag : phase[i];
  }

  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  tridiagonal_ql(d, e, z);

  // V = Q * diag(phase) * Z
  ComplexMatrix vecs(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q(r, k) * phase[k] * z[k * n + c];
      vecs(r, c) = s;
    }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

  EigResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    result.eigenvalues[c] = d[order[c]];
    for (std::size_t r = 0; r < n; ++r) result.eigenvectors(r, c) = vecs(r, order[c]);
  }

  ComplexMatrix& v = result.eigenvectors;
  const double cluster_tol = 1e-10 * scale;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && result.eigenvalues[end] - result.eigenvalues[end - 1] <= cluster_tol) ++end;
    if (end - start > 1) {
      // Modified Gram-Schmidt inside the cluster.
      for (std::size_t c = start; c < end; ++c) {
        for (std::size_t p = start; p < c; ++p) {
          Complex dot = 0.0;
          for (std::size_t r = 0; r < n; ++r) dot += std::conj(v(r, p)) * v(r, c);
          for (std::size_t r = 0; r < n; ++r) v(r, c) -= dot * v(r, p);
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm += std::norm(v(r, c));
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < n; ++r) v(r, c) /= nrm;
      }
      std::vector<std::size_t> cols(end - start);
      std::iota(cols.begin(), cols.end(), start);
      std::stable_sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
        return dominant_index(v, x) < dominant_index(v, y);
      });
      const ComplexMatrix copy = v;
      for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t r = 0; r < n; ++r) v(r, start + i) = copy(r, cols[i]);
    }
    start = end;
  }

  for (std::size_t c = 0; c < n; ++c) {
    const Complex pivot = v(dominant_index(v, c), c);
    const Complex rot = std::conj(pivot) / std::abs(pivot);
    for (std::size_t r = 0; r < n; ++r) v(r, c) *= rot;
  }
  return result;
}

double min_eigenvalue(const ComplexMatrix& op) { return eigh(op).eigenvalues.front(); }

double nearest_zero(const std::vector<double>& ascending_eigenvalues) {
  if (ascending_eigenvalues.empty()) throw InvalidArgument("empty spectrum");
  double best = ascending_eigenvalues.front();
  for (double lam : ascending_eigenvalues)
    if (std::abs(lam) < std::abs(best)) best = lam;
  return best;
}

double nearest_zero_eigenvalue(const ComplexMatrix& op) { return nearest_zero(eigh(op).eigenvalues); }

}  // namespace wdwvqe
