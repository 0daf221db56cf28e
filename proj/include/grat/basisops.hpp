#pragma once

#include <utility>
#include <vector>

#include "grat/measure.hpp"
#include "grat/rational.hpp"

namespace grat::basisops {

// Lower-triangular integer change-of-basis matrix between {z^{-k}} and
// {g_{2k}}.  Entries follow the 1-based (i, j) indexing of the defining
// formulas; at(i, j) is 0-based with at(i, j) = entry_{i+1, j+1}.
struct TransitionMatrix {
    int order = 0;
    std::vector<std::vector<ExactInteger>> rows;  // row i has i+1 entries

    const ExactInteger& at(int i, int j) const;
};

struct InterpolationProblem {
    std::vector<ExactRational> nodes;   // pairwise distinct, nonzero
    std::vector<ExactRational> values;
};

// Coefficients of z^{-n} = sum_l coeffs[l] g_{2l}: coeffs[l] =
// C(2n, n-l) - C(2n, n-l-1) for l < n, coeffs[n] = 1.
std::vector<ExactInteger> power_to_g(int n);

// A_n with a_ij = (-1)^{i-j} C(i+j-2, i-j) and B_n with
// b_ij = C(2i-2, i-j) - C(2i-2, i-j-1); A_n B_n = I_n.
std::pair<TransitionMatrix, TransitionMatrix> transition_matrices(int n);

// C(n,m) + C(n,m-1) - C(n,m-2) - C(n,m-3) = C(n+2,m) - C(n+2,m-1), exactly.
bool pascal_identity_check(int n, int m);

// Exact value of g_{2l} at rational z != 0 (integer powers of z^{-1} only).
ExactRational g_even_exact(int l, const ExactRational& z);

// Numerical Gram-Schmidt on {z^{-k}}, k = 0..n, under the rule's inner
// product; returns per-k max deviation from g_{2k} over a fixed z-grid.
std::vector<double> gram_schmidt_verify(int n, const measure::QuadratureRule& rule);

// Solves V c = y exactly for c in span{g_0, ..., g_{2k}}, V_{jl} =
// g_{2l}(node_j); residual is exactly zero.
std::vector<ExactRational> interpolate(const InterpolationProblem& p);

}  // namespace grat::basisops
