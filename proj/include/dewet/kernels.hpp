#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dewet {

// Compressed sparse row matrix (square, symmetric content but full storage).
struct CsrMatrix {
  std::size_t n = 0;
  std::vector<int> row_ptr;
  std::vector<int> col;
  std::vector<double> val;
};

// Hot data-parallel kernels. Each has an OpenMP path and a serial reference
// with identical floating-point behaviour: parallel loops write disjoint
// outputs and reductions run in fixed index order, so results are bitwise
// equal for any thread count.
namespace kernels {

void csr_matvec(const CsrMatrix& A, std::span<const double> x,
                std::span<double> y);
void csr_matvec_serial(const CsrMatrix& A, std::span<const double> x,
                       std::span<double> y);

// Ordered sum of per-element contributions.
double ordered_sum(std::span<const double> terms);

// y[i] = a[i] * b[i] for diagonal preconditioning.
void hadamard(std::span<const double> a, std::span<const double> b,
              std::span<double> y);

// Fills out[e] = f(e) for e in [0, count) in parallel; deterministic because
// outputs are disjoint.
template <class F>
void parallel_fill(std::size_t count, std::vector<double>& out, F&& f) {
  out.resize(count);
#pragma omp parallel for schedule(static)
  for (long long e = 0; e < (long long)count; ++e) {
    out[(std::size_t)e] = f((std::size_t)e);
  }
}

template <class F>
void serial_fill(std::size_t count, std::vector<double>& out, F&& f) {
  out.resize(count);
  for (std::size_t e = 0; e < count; ++e) out[e] = f(e);
}

}  // namespace kernels

// Diagonally preconditioned conjugate gradients for SPD systems.
struct CgOptions {
  double rtol = 1e-10;
  std::size_t max_iter = 0;  // 0: use 50*sqrt(n)+1000
};

struct CgResult {
  std::size_t iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

// Solves A x = b starting from x (warm start). Throws Error(SolverDiverged)
// on iteration-cap hit and Error(SingularSystem) on a nonpositive diagonal
// or a breakdown in the inner products.
CgResult cg_solve(const CsrMatrix& A, std::span<const double> b,
                  std::span<double> x, const CgOptions& opts);

}  // namespace dewet
