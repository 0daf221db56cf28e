#include "grat/basisops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "grat/gseq.hpp"
#include "grat/hilbert.hpp"

namespace grat::basisops {

const ExactInteger& TransitionMatrix::at(int i, int j) const {
    static const ExactInteger kZero = 0;
    if (i < 0 || j < 0 || i >= order || j >= order)
        throw std::invalid_argument("TransitionMatrix::at: index out of range");
    if (j > i) return kZero;
    return rows[i][j];
}

std::vector<ExactInteger> power_to_g(int n) {
    if (n < 0) throw std::domain_error("power_to_g: n must be >= 0");
    std::vector<ExactInteger> out(n + 1);
    for (int l = 0; l <= n; ++l)
        out[l] = binomial(2 * n, n - l) - binomial(2 * n, n - l - 1);
    return out;
}

std::pair<TransitionMatrix, TransitionMatrix> transition_matrices(int n) {
    if (n < 1) throw std::invalid_argument("transition_matrices: n must be >= 1");
    TransitionMatrix A, B;
    A.order = B.order = n;
    A.rows.resize(n);
    B.rows.resize(n);
    for (int i = 1; i <= n; ++i) {
        A.rows[i - 1].resize(i);
        B.rows[i - 1].resize(i);
        for (int j = 1; j <= i; ++j) {
            ExactInteger a = binomial(i + j - 2, i - j);
            if ((i - j) % 2) a = -a;
            A.rows[i - 1][j - 1] = a;
            B.rows[i - 1][j - 1] =
                binomial(2 * i - 2, i - j) - binomial(2 * i - 2, i - j - 1);
        }
    }
    return {A, B};
}

bool pascal_identity_check(int n, int m) {
    if (m < 3 || n < m)
        throw std::invalid_argument("pascal_identity_check: requires n >= m >= 3");
    ExactInteger lhs = binomial(n, m) + binomial(n, m - 1) - binomial(n, m - 2) -
                       binomial(n, m - 3);
    ExactInteger rhs = binomial(n + 2, m) - binomial(n + 2, m - 1);
    return lhs == rhs;
}

ExactRational g_even_exact(int l, const ExactRational& z) {
    if (l < 0) throw std::domain_error("g_even_exact: index must be >= 0");
    if (z == 0) throw std::domain_error("g_even_exact: z must be nonzero");
    ExactRational acc = 0;
    for (int k = 0; k <= l; ++k) {
        ExactRational c(binomial(2 * l - k, k));
        if (k % 2) c = -c;
        acc += c * rational_pow(z, k - l);
    }
    return acc;
}

std::vector<double> gram_schmidt_verify(int n, const measure::QuadratureRule& rule) {
    if (n < 0) throw std::invalid_argument("gram_schmidt_verify: n must be >= 0");

    std::size_t M = rule.nodes.size();
    // P[j][k] = nodes[k]^{-j}
    std::vector<std::vector<double>> P(n + 1, std::vector<double>(M));
    for (std::size_t k = 0; k < M; ++k) {
        double inv = 1 / rule.nodes[k];
        double p = 1;
        for (int j = 0; j <= n; ++j) {
            P[j][k] = p;
            p *= inv;
        }
    }

    auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t k = 0; k < M; ++k) s += rule.weights[k] * a[k] * b[k];
        return s;
    };

    // Modified Gram-Schmidt in function space; carry the coefficient vector
    // over {z^{-j}} alongside the node values.
    std::vector<std::vector<double>> vals;     // orthonormal vectors at nodes
    std::vector<std::vector<double>> coef;     // same vectors in the power basis
    for (int k = 0; k <= n; ++k) {
        std::vector<double> v = P[k];
        std::vector<double> c(n + 1, 0.0);
        c[k] = 1;
        for (int i = 0; i < k; ++i) {
            double proj = dot(v, vals[i]);
            for (std::size_t t = 0; t < M; ++t) v[t] -= proj * vals[i][t];
            for (int j = 0; j <= n; ++j) c[j] -= proj * coef[i][j];
        }
        double nrm = std::sqrt(dot(v, v));
        for (std::size_t t = 0; t < M; ++t) v[t] /= nrm;
        for (int j = 0; j <= n; ++j) c[j] /= nrm;
        if (c[k] < 0) {
            // align sign with g_{2k}, whose z^{-k} coefficient is +1
            for (std::size_t t = 0; t < M; ++t) v[t] = -v[t];
            for (int j = 0; j <= n; ++j) c[j] = -c[j];
        }
        vals.push_back(std::move(v));
        coef.push_back(std::move(c));
    }

    // Fixed comparison grid: 100 log-spaced points across [0.26, 50].
    constexpr int kGridSize = 100;
    std::vector<double> grid(kGridSize);
    double lo = 0.26, hi = 50.0;
    for (int i = 0; i < kGridSize; ++i)
        grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (kGridSize - 1));

    std::vector<double> dev(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        for (double z : grid) {
            double approx = 0, p = 1, inv = 1 / z;
            for (int j = 0; j <= n; ++j) {
                approx += coef[k][j] * p;
                p *= inv;
            }
            double exact = gseq::g_fun_eval(2 * k, z);
            dev[k] = std::max(dev[k], std::fabs(approx - exact));
        }
    }
    return dev;
}

std::vector<ExactRational> interpolate(const InterpolationProblem& p) {
    std::size_t m = p.nodes.size();
    if (m == 0 || p.values.size() != m)
        throw std::invalid_argument("interpolate: need equally many nodes and values");
    // mpq comparisons assume canonical form; callers may pass raw fractions.
    std::vector<ExactRational> nodes = p.nodes;
    std::vector<ExactRational> y = p.values;
    for (auto& v : nodes) v.canonicalize();
    for (auto& v : y) v.canonicalize();
    for (std::size_t i = 0; i < m; ++i) {
        if (nodes[i] == 0)
            throw std::invalid_argument("interpolate: nodes must be nonzero");
        for (std::size_t j = i + 1; j < m; ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("interpolate: nodes must be pairwise distinct");
    }

    // V_{jl} = g_{2l}(node_j); solve V c = y by exact elimination.
    std::vector<std::vector<ExactRational>> V(m, std::vector<ExactRational>(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
            V[j][l] = g_even_exact(static_cast<int>(l), nodes[j]);

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && V[piv][col] == 0) ++piv;
        if (piv == m)
            throw std::runtime_error("interpolate: singular collocation matrix at pivot " +
                                     std::to_string(col));
        std::swap(V[piv], V[col]);
        std::swap(y[piv], y[col]);
        for (std::size_t row = col + 1; row < m; ++row) {
            if (V[row][col] == 0) continue;
            ExactRational f = V[row][col] / V[col][col];
            for (std::size_t l = col; l < m; ++l) V[row][l] -= f * V[col][l];
            y[row] -= f * y[col];
        }
    }
    std::vector<ExactRational> c(m);
    for (std::size_t i = m; i-- > 0;) {
        ExactRational s = y[i];
        for (std::size_t l = i + 1; l < m; ++l) s -= V[i][l] * c[l];
        c[i] = s / V[i][i];
    }
    return c;
}

}  // namespace grat::basisops
