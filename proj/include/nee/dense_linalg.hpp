#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nee {

// Raised when an iterative solver exhausts its sweep budget. Distinct from
// std::invalid_argument so callers can separate numerical failure from bad input.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense real symmetric matrix, row-major. Symmetry is maintained by the
// setter, so entries (i,j) and (j,i) are always bit-identical.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order) : n_(order), a_(order * order, 0.0) {}

  std::size_t order() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("matrix entries must be finite");
    a_[i * n_ + j] = value;
    a_[j * n_ + i] = value;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
    return t;
  }

  // M + alpha * I
  SymmetricMatrix shifted(double alpha) const {
    SymmetricMatrix out = *this;
    for (std::size_t i = 0; i < n_; ++i) out.a_[i * n_ + i] += alpha;
    return out;
  }

  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct JacobiOptions {
  double tol = 1e-12;
  std::size_t max_sweeps = 64;
};

// All eigenvalues of a symmetric matrix, descending, by Jacobi rotations.
//
// A sweep visits every (p, q) pair with p < q once and annihilates the
// off-diagonal entry with a two-sided plane rotation. Pairs are scheduled in
// round-robin (tournament) order: each round holds up to N/2 disjoint pairs,
// whose rotations commute, so a round is applied as one pass over the rows
// followed by one pass over the columns. That keeps memory access contiguous;
// the arithmetic is the same as cyclic Jacobi, O(N^3) per sweep, with
// typically 6-12 sweeps.
//
// Iteration stops once the off-diagonal Frobenius norm drops below
// tol * ||M||_F; the eigenvalue error is then bounded by that residual.
// Throws ConvergenceError if this does not happen within max_sweeps.
inline std::vector<double> sym_eigenvalues(const SymmetricMatrix& m, JacobiOptions opts = {}) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = m.order();
  std::vector<double> a = m.data();

  const double threshold = opts.tol * m.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
  };

  struct Rotation {
    std::size_t p, q;
    double c, s;
  };
  // Round-robin schedule over an even number of slots; slot n is a bye when n is odd.
  const std::size_t slots = n + (n % 2);
  std::vector<std::size_t> ring(slots);
  std::vector<Rotation> round;
  round.reserve(slots / 2);

  bool converged = n < 2 || off_norm() <= threshold;
  for (std::size_t sweep = 0; !converged && sweep < opts.max_sweeps; ++sweep) {
    for (std::size_t r = 0; r + 1 < slots; ++r) {
      ring[0] = 0;
      for (std::size_t j = 1; j < slots; ++j) ring[j] = (j - 1 + r) % (slots - 1) + 1;

      round.clear();
      for (std::size_t i = 0; i < slots / 2; ++i) {
        std::size_t p = ring[i];
        std::size_t q = ring[slots - 1 - i];
        if (p >= n || q >= n) continue;
        if (p > q) std::swap(p, q);
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        // Stable tangent of the rotation angle, |t| <= 1.
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        round.push_back({p, q, c, t * c});
      }
      if (round.empty()) continue;

      // Rows: A <- R A, with row p' = c p - s q and row q' = s p + c q.
      for (const auto& rot : round) {
        double* rp = &a[rot.p * n];
        double* rq = &a[rot.q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k];
          const double y = rq[k];
          rp[k] = rot.c * x - rot.s * y;
          rq[k] = rot.s * x + rot.c * y;
        }
      }
      // Columns: A <- A R^T, same combination applied within each row.
      for (std::size_t k = 0; k < n; ++k) {
        double* row = &a[k * n];
        for (const auto& rot : round) {
          const double x = row[rot.p];
          const double y = row[rot.q];
          row[rot.p] = rot.c * x - rot.s * y;
          row[rot.q] = rot.s * x + rot.c * y;
        }
      }
      for (const auto& rot : round) {
        a[rot.p * n + rot.q] = 0.0;
        a[rot.q * n + rot.p] = 0.0;
      }
    }
    converged = off_norm() <= threshold;
  }
  if (!converged) {
    throw ConvergenceError("Jacobi eigensolver did not converge within " +
                           std::to_string(opts.max_sweeps) + " sweeps");
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

// Rank by Gaussian elimination with partial pivoting. A pivot counts as zero
// when its magnitude is below tol * (largest |entry| of the input).
inline std::size_t numerical_rank(const SymmetricMatrix& m, double tol = 1e-8) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = m.order();
  std::vector<double> a = m.data();
  double max_entry = 0.0;
  for (double x : a) max_entry = std::max(max_entry, std::abs(x));
  if (max_entry == 0.0) return 0;
  const double cutoff = tol * max_entry;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    double best = std::abs(a[rank * n + col]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      const double v = std::abs(a[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < cutoff) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * n, a.begin() + (pivot + 1) * n, a.begin() + rank * n);
    }
    const double* prow = &a[rank * n];
    for (std::size_t r = rank + 1; r < n; ++r) {
      double* row = &a[r * n];
      const double f = row[col] / prow[col];
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) row[k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace nee
