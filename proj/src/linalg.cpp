// Copyright 2026 The Authors.
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

#include "attacklab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace attacklab {
namespace {

void check_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

bool all_finite(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!std::isfinite(a(i, j))) return false;
  return true;
}

// Padé numerator coefficients per degree (Higham 2005).
const double kPade3[] = {120., 60., 12., 1.};
const double kPade5[] = {30240., 15120., 3360., 420., 30., 1.};
const double kPade7[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
const double kPade9[] = {17643225600., 8821612800., 2075673600., 302702400.,
                         30270240.,    2162160.,    110880.,     3960.,
                         90.,          1.};
const double kPade13[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                          1187353796428800.,  129060195264000.,   10559470521600.,
                          670442572800.,      33522128640.,       1323241920.,
                          40840800.,          960960.,            16380.,
                          182.,               1.};

// 1-norm thresholds below which each Padé degree is accurate to eps.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068;
constexpr double kTheta13 = 5.371920351148152;

// r = (V-U)^{-1} (V+U) with U = A * (odd powers), V = even powers.
Matrix pade_eval(const Matrix& a, const double* b, int degree) {
  const std::size_t n = a.rows();
  Matrix a2 = a * a;
  Matrix u_poly(n, n), v_poly(n, n);
  if (degree <= 9) {
    // Horner in A^2 over the odd/even coefficient halves.
    Matrix odd = Matrix::identity(n) * b[degree];
    Matrix even = Matrix::identity(n) * b[degree - 1];
    for (int k = degree - 2; k >= 1; k -= 2) {
      odd = odd * a2;
      odd += Matrix::identity(n) * b[k];
      even = even * a2;
      even += Matrix::identity(n) * b[k - 1];
    }
    u_poly = a * odd;
    v_poly = even;
  } else {
    Matrix a4 = a2 * a2;
    Matrix a6 = a2 * a4;
    Matrix w = a6 * (a6 * b[13] + a4 * b[11] + a2 * b[9]);
    w += a6 * b[7] + a4 * b[5] + a2 * b[3] + Matrix::identity(n) * b[1];
    u_poly = a * w;
    Matrix z = a6 * (a6 * b[12] + a4 * b[10] + a2 * b[8]);
    z += a6 * b[6] + a4 * b[4] + a2 * b[2] + Matrix::identity(n) * b[0];
    v_poly = z;
  }
  Matrix denom = v_poly - u_poly;
  Matrix numer = v_poly + u_poly;
  return lu_solve(std::move(denom), std::move(numer));
}

}  // namespace

Matrix lu_solve(Matrix a, Matrix b) {
  check_square(a, "lu_solve");
  const std::size_t n = a.rows();
  if (b.rows() != n) throw std::invalid_argument("lu_solve: rhs shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::fabs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > best) {
        best = std::fabs(a(i, k));
        p = i;
      }
    }
    if (best == 0.0) throw std::runtime_error("lu_solve: singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(p, j));
    }
    double inv = 1.0 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double m = a(i, k) * inv;
      if (m == 0.0) continue;
      a(i, k) = m;
      kernels::axpy(-m, a.row(k) + k + 1, a.row(i) + k + 1, n - k - 1);
      kernels::axpy(-m, b.row(k), b.row(i), b.cols());
    }
  }
  // back substitution
  for (std::size_t kk = n; kk-- > 0;) {
    double inv = 1.0 / a(kk, kk);
    kernels::scal(inv, b.row(kk), b.cols());
    for (std::size_t i = 0; i < kk; ++i) {
      kernels::axpy(-a(i, kk), b.row(kk), b.row(i), b.cols());
    }
  }
  return b;
}

Matrix matrix_exponential(const Matrix& s, double t) {
  check_square(s, "matrix_exponential");
  if (!all_finite(s) || !std::isfinite(t))
    throw std::invalid_argument("matrix_exponential: non-finite input");
  Matrix a = s;
  a *= t;
  const double nrm = a.norm1();
  if (nrm <= kTheta3) return pade_eval(a, kPade3, 3);
  if (nrm <= kTheta5) return pade_eval(a, kPade5, 5);
  if (nrm <= kTheta7) return pade_eval(a, kPade7, 7);
  if (nrm <= kTheta9) return pade_eval(a, kPade9, 9);
  int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / kTheta13))));
  a *= std::ldexp(1.0, -squarings);
  Matrix r = pade_eval(a, kPade13, 13);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

Matrix exp_integral(const Matrix& s, double t_c) {
  check_square(s, "exp_integral");
  if (!(t_c > 0.0)) throw std::invalid_argument("exp_integral: t_c must be positive");
  const std::size_t k = s.rows();
  Matrix aug(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = s(i, j);
    aug(i, k + i) = 1.0;
  }
  Matrix e = matrix_exponential(aug, t_c);
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = e(i, k + j);
  return out;
}

SymEig sym_eig(const Matrix& a_in) {
  check_square(a_in, "sym_eig");
  const std::size_t n = a_in.rows();
  Matrix a = a_in;
  Matrix v = Matrix::identity(n);
  const double scale = std::max(a.max_abs(), 1e-300);
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a(p, q)));
    if (off <= 1e-15 * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::fabs(apq) <= 1e-18 * scale) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double sign = theta >= 0.0 ? 1.0 : -1.0;
        double tau = sign / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(tau * tau + 1.0);
        double sn = tau * c;
        for (std::size_t i = 0; i < n; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - sn * aiq;
          a(i, q) = sn * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          double apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - sn * aqj;
          a(q, j) = sn * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - sn * viq;
          v(i, q) = sn * vip + c * viq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymEig out;
  out.eigenvalues.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

Svd jacobi_svd(const Matrix& a_in) {
  const std::size_t rows = a_in.rows(), cols = a_in.cols();
  Matrix a = a_in;                      // columns get orthogonalized in place
  Matrix v = Matrix::identity(cols);
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          app += a(i, p) * a(i, p);
          aqq += a(i, q) * a(i, q);
          apq += a(i, p) * a(i, q);
        }
        if (std::fabs(apq) <= 1e-15 * std::sqrt(app * aqq) || apq == 0.0) continue;
        rotated = true;
        double zeta = (aqq - app) / (2.0 * apq);
        double sign = zeta >= 0.0 ? 1.0 : -1.0;
        double tau = sign / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        double c = 1.0 / std::sqrt(1.0 + tau * tau);
        double sn = c * tau;
        for (std::size_t i = 0; i < rows; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - sn * aiq;
          a(i, q) = sn * aip + c * aiq;
        }
        for (std::size_t i = 0; i < cols; ++i) {
          double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - sn * viq;
          v(i, q) = sn * vip + c * viq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += a(i, j) * a(i, j);
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });
  Svd out;
  out.singular_values.resize(cols);
  out.right_vectors = Matrix(cols, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    out.singular_values[j] = sigma[order[j]];
    for (std::size_t i = 0; i < cols; ++i) out.right_vectors(i, j) = v(i, order[j]);
  }
  return out;
}

int matrix_rank(const Matrix& a, double rel_tol) {
  Svd s = jacobi_svd(a);
  if (s.singular_values.empty() || s.singular_values[0] == 0.0) return 0;
  const double thresh = rel_tol * s.singular_values[0];
  int r = 0;
  for (double v : s.singular_values)
    if (v > thresh) ++r;
  return r;
}

std::vector<std::complex<double>> eig_general(const Matrix& a_in) {
  check_square(a_in, "eig_general");
  using cplx = std::complex<double>;
  const std::size_t n = a_in.rows();
  if (n == 0) return {};
  if (n == 1) return {cplx(a_in(0, 0), 0.0)};

  // Householder reduction to upper Hessenberg.
  Matrix h = a_in;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += h(i, k) * h(i, k);
    norm = std::sqrt(norm);
    if (norm <= 1e-300) continue;
    double alpha = h(k + 1, k) >= 0.0 ? -norm : norm;
    std::vector<double> u(n, 0.0);
    u[k + 1] = h(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) u[i] = h(i, k);
    double unorm_sq = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) unorm_sq += u[i] * u[i];
    if (unorm_sq <= 1e-300) continue;
    // H <- P H P with P = I - 2 u u^T / (u^T u)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += u[i] * h(i, j);
      s = 2.0 * s / unorm_sq;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= s * u[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * u[j];
      s = 2.0 * s / unorm_sq;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * u[j];
    }
  }

  // Complex shifted QR with Givens rotations on the Hessenberg matrix.
  std::vector<std::vector<cplx>> hc(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hc[i][j] = cplx(h(i, j), 0.0);

  auto small_subdiag = [&](std::size_t i) {
    double tol = 1e-15 * (std::abs(hc[i - 1][i - 1]) + std::abs(hc[i][i]));
    if (tol == 0.0) tol = 1e-300;
    return std::abs(hc[i][i - 1]) <= tol;
  };

  std::vector<cplx> eig(n);
  std::size_t hi = n - 1;
  int guard = 0;
  const int max_iter = 100 * static_cast<int>(n);
  while (true) {
    if (++guard > max_iter) throw std::runtime_error("eig_general: QR did not converge");
    while (hi > 0 && small_subdiag(hi)) {
      eig[hi] = hc[hi][hi];
      --hi;
    }
    if (hi == 0) {
      eig[0] = hc[0][0];
      break;
    }
    std::size_t lo = hi;
    while (lo > 0 && !small_subdiag(lo)) --lo;

    // Wilkinson shift from the trailing 2x2 of the active block.
    cplx a = hc[hi - 1][hi - 1], b = hc[hi - 1][hi], c = hc[hi][hi - 1], d = hc[hi][hi];
    cplx tr = a + d;
    cplx disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    cplx shift = std::abs(l1 - d) <= std::abs(l2 - d) ? l1 : l2;

    for (std::size_t i = lo; i <= hi; ++i) hc[i][i] -= shift;
    // QR: rows k,k+1 get G_k = [[conj(c), conj(s)], [-s, c]].
    std::vector<cplx> gc(hi + 1), gs(hi + 1);
    for (std::size_t k = lo; k < hi; ++k) {
      cplx x = hc[k][k], y = hc[k + 1][k];
      double r = std::hypot(std::abs(x), std::abs(y));
      if (r <= 1e-300) {
        gc[k] = 1.0;
        gs[k] = 0.0;
        continue;
      }
      gc[k] = x / r;
      gs[k] = y / r;
      for (std::size_t j = k; j <= hi; ++j) {
        cplx t1 = hc[k][j], t2 = hc[k + 1][j];
        hc[k][j] = std::conj(gc[k]) * t1 + std::conj(gs[k]) * t2;
        hc[k + 1][j] = -gs[k] * t1 + gc[k] * t2;
      }
    }
    // RQ: columns k,k+1 get G_k^H on the right.
    for (std::size_t k = lo; k < hi; ++k) {
      for (std::size_t i = lo; i <= k + 1; ++i) {
        cplx t1 = hc[i][k], t2 = hc[i][k + 1];
        hc[i][k] = gc[k] * t1 + gs[k] * t2;
        hc[i][k + 1] = -std::conj(gs[k]) * t1 + std::conj(gc[k]) * t2;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) hc[i][i] += shift;
  }
  return eig;
}

}  // namespace attacklab
