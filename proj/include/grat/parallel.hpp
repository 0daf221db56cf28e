#pragma once

#include <vector>

#include "grat/hilbert.hpp"
#include "grat/measure.hpp"

namespace grat::parallel {

// Batch kernels used by projection and the check suites.  Each has a serial
// reference implementation; the unsuffixed entry points parallelize with
// OpenMP when available and must agree with the reference to rounding.

// g_n over a z-grid.
std::vector<double> eval_curve_serial(int n, const std::vector<double>& zs);
std::vector<double> eval_curve(int n, const std::vector<double>& zs);

// Symmetric matrix of inner products (g_{2m}, g_{2n}), 0 <= m, n <= K,
// stored row-major (K+1) x (K+1).
std::vector<double> gram_matrix_serial(int K, const measure::QuadratureRule& rule);
std::vector<double> gram_matrix(int K, const measure::QuadratureRule& rule);

// Fourier coefficients of a function given by its values at the rule nodes.
std::vector<double> fourier_batch_serial(const std::vector<double>& f_at_nodes,
                                         int N, const measure::QuadratureRule& rule);
std::vector<double> fourier_batch(const std::vector<double>& f_at_nodes,
                                  int N, const measure::QuadratureRule& rule);

// Partial-sum curve: expansion evaluated over a z-grid.
std::vector<double> expansion_curve_serial(const hilbert::FourierExpansion& e,
                                           const std::vector<double>& zs);
std::vector<double> expansion_curve(const hilbert::FourierExpansion& e,
                                    const std::vector<double>& zs);

}  // namespace grat::parallel
