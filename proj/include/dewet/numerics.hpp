#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dewet {

// Finite-difference weights on equispaced offsets (Fornberg's algorithm).
// offsets are integer node positions relative to the evaluation point,
// spacing 1; scale by dx^-order for a physical grid.
std::vector<double> fd_weights(int order, std::span<const int> offsets);

// Second derivative on three non-equispaced points (s0,s1,s2), evaluated at s1.
// Returns the three weights.
void nonuniform_second_derivative(double s0, double s1, double s2,
                                  double w[3]);

// Composite trapezoid of nodal values on a uniform grid with spacing dx.
double trapezoid(std::span<const double> f, double dx);

// Trapezoid on an arbitrary sorted grid.
double trapezoid(std::span<const double> x, std::span<const double> f);

// 3-point Gauss-Legendre nodes/weights on (a,b); exact through degree 5.
struct Gauss3 {
  double x[3];
  double w[3];
};
Gauss3 gauss3(double a, double b);

// Symmetric positive definite banded matrix, lower storage:
// band[k][i] = A(i+k, i) for 0 <= k <= bw. Factor in place, then solve.
class BandedSpd {
 public:
  BandedSpd(std::size_t n, std::size_t bandwidth);

  std::size_t size() const { return n_; }
  std::size_t bandwidth() const { return bw_; }

  double& at(std::size_t row, std::size_t col);
  double at(std::size_t row, std::size_t col) const;
  void add(std::size_t row, std::size_t col, double v);
  void clear();

  // Cholesky factorization; throws Error(SingularSystem) if a pivot is
  // not strictly positive.
  void factor();
  // Solve A x = b using the factorization (overwrites x).
  void solve(std::span<double> x) const;

 private:
  std::size_t n_;
  std::size_t bw_;
  bool factored_ = false;
  std::vector<double> data_;  // (bw+1) * n, diagonal-major
};

// Monotone cubic interpolant (Fritsch-Carlson) through (x_i, y_i);
// evaluates with zero extension outside [x_front, x_back].
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;

 private:
  std::vector<double> x_, y_, d_;  // nodes, values, tangents
};

// Deterministic xorshift generator for property tests and sweeps.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next_u64();
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

// Least-squares slope of log|y| vs log|x|.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace dewet
