#include "grat/parallel.hpp"

#include <cmath>
#include <stdexcept>

#include "grat/gseq.hpp"

namespace grat::parallel {

namespace {

// All entry points validate inputs before any parallel region so no exception
// can cross an OpenMP boundary.
void require_grid(const std::vector<double>& zs) {
    for (double z : zs)
        if (!(z >= 0.25)) throw std::domain_error("grid value below 1/4");
}

double u_cheb(int n, double x) {
    if (n == 0) return 1;
    double prev = 1, cur = 2 * x;
    for (int k = 2; k <= n; ++k) {
        double next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// col[m] = g_{2m}(z) for m = 0..K
void even_column(int K, double z, double* col) {
    double x = (z == 0.25) ? 1.0 : 1 / (2 * std::sqrt(z));
    double u_prev = 1, u_cur = 2 * x;
    col[0] = 1;
    for (int k = 2; k <= 2 * K; ++k) {
        double u_next = 2 * x * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
        if (k % 2 == 0) col[k / 2] = u_cur;
    }
}

std::vector<double> even_value_table(int K, const measure::QuadratureRule& rule) {
    std::size_t M = rule.nodes.size();
    std::vector<double> table((K + 1) * M);
#pragma omp parallel for schedule(static)
    for (long k = 0; k < static_cast<long>(M); ++k) {
        std::vector<double> col(K + 1);
        even_column(K, rule.nodes[k], col.data());
        for (int m = 0; m <= K; ++m) table[static_cast<std::size_t>(m) * M + k] = col[m];
    }
    return table;
}

std::vector<double> even_value_table_serial(int K, const measure::QuadratureRule& rule) {
    std::size_t M = rule.nodes.size();
    std::vector<double> table((K + 1) * M);
    std::vector<double> col(K + 1);
    for (std::size_t k = 0; k < M; ++k) {
        even_column(K, rule.nodes[k], col.data());
        for (int m = 0; m <= K; ++m) table[static_cast<std::size_t>(m) * M + k] = col[m];
    }
    return table;
}

}  // namespace

std::vector<double> eval_curve_serial(int n, const std::vector<double>& zs) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    require_grid(zs);
    std::vector<double> out(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        double z = zs[i];
        out[i] = (z == 0.25) ? n + 1 : u_cheb(n, 1 / (2 * std::sqrt(z)));
    }
    return out;
}

std::vector<double> eval_curve(int n, const std::vector<double>& zs) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    require_grid(zs);
    std::vector<double> out(zs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(zs.size()); ++i) {
        double z = zs[i];
        out[i] = (z == 0.25) ? n + 1 : u_cheb(n, 1 / (2 * std::sqrt(z)));
    }
    return out;
}

std::vector<double> gram_matrix_serial(int K, const measure::QuadratureRule& rule) {
    if (K < 0) throw std::invalid_argument("gram_matrix: K must be >= 0");
    std::size_t M = rule.nodes.size();
    std::vector<double> table = even_value_table_serial(K, rule);
    std::vector<double> G((K + 1) * (K + 1));
    for (int m = 0; m <= K; ++m) {
        for (int n = m; n <= K; ++n) {
            const double* a = table.data() + static_cast<std::size_t>(m) * M;
            const double* b = table.data() + static_cast<std::size_t>(n) * M;
            double s = 0;
            for (std::size_t k = 0; k < M; ++k) s += rule.weights[k] * a[k] * b[k];
            G[static_cast<std::size_t>(m) * (K + 1) + n] = s;
            G[static_cast<std::size_t>(n) * (K + 1) + m] = s;
        }
    }
    return G;
}

std::vector<double> gram_matrix(int K, const measure::QuadratureRule& rule) {
    if (K < 0) throw std::invalid_argument("gram_matrix: K must be >= 0");
    std::size_t M = rule.nodes.size();
    std::vector<double> table = even_value_table(K, rule);
    std::vector<double> G((K + 1) * (K + 1));
    long pairs = static_cast<long>(K + 1) * (K + 2) / 2;
#pragma omp parallel for schedule(static)
    for (long p = 0; p < pairs; ++p) {
        // unrank the upper-triangle pair (m, n), m <= n
        long m = 0, rem = p;
        while (rem >= K + 1 - m) {
            rem -= K + 1 - m;
            ++m;
        }
        long n = m + rem;
        const double* a = table.data() + static_cast<std::size_t>(m) * M;
        const double* b = table.data() + static_cast<std::size_t>(n) * M;
        double s = 0;
        for (std::size_t k = 0; k < M; ++k) s += rule.weights[k] * a[k] * b[k];
        G[static_cast<std::size_t>(m) * (K + 1) + n] = s;
        G[static_cast<std::size_t>(n) * (K + 1) + m] = s;
    }
    return G;
}

std::vector<double> fourier_batch_serial(const std::vector<double>& f_at_nodes,
                                         int N, const measure::QuadratureRule& rule) {
    if (N < 0) throw std::invalid_argument("fourier_batch: order must be >= 0");
    if (f_at_nodes.size() != rule.nodes.size())
        throw std::invalid_argument("fourier_batch: need one value per rule node");
    std::size_t M = rule.nodes.size();
    std::vector<double> table = even_value_table_serial(N, rule);
    std::vector<double> out(N + 1);
    for (int n = 0; n <= N; ++n) {
        const double* a = table.data() + static_cast<std::size_t>(n) * M;
        double s = 0;
        for (std::size_t k = 0; k < M; ++k) s += rule.weights[k] * f_at_nodes[k] * a[k];
        out[n] = s;
    }
    return out;
}

std::vector<double> fourier_batch(const std::vector<double>& f_at_nodes,
                                  int N, const measure::QuadratureRule& rule) {
    if (N < 0) throw std::invalid_argument("fourier_batch: order must be >= 0");
    if (f_at_nodes.size() != rule.nodes.size())
        throw std::invalid_argument("fourier_batch: need one value per rule node");
    std::size_t M = rule.nodes.size();
    std::vector<double> table = even_value_table(N, rule);
    std::vector<double> out(N + 1);
#pragma omp parallel for schedule(static)
    for (long n = 0; n <= N; ++n) {
        const double* a = table.data() + static_cast<std::size_t>(n) * M;
        double s = 0;
        for (std::size_t k = 0; k < M; ++k) s += rule.weights[k] * f_at_nodes[k] * a[k];
        out[n] = s;
    }
    return out;
}

std::vector<double> expansion_curve_serial(const hilbert::FourierExpansion& e,
                                           const std::vector<double>& zs) {
    require_grid(zs);
    std::vector<double> out(zs.size());
    if (e.coeffs.empty()) return out;
    int K = e.order();
    std::vector<double> col(K + 1);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        even_column(K, zs[i], col.data());
        double s = 0;
        for (int n = 0; n <= K; ++n) s += e.coeffs[n] * col[n];
        out[i] = s;
    }
    return out;
}

std::vector<double> expansion_curve(const hilbert::FourierExpansion& e,
                                    const std::vector<double>& zs) {
    require_grid(zs);
    std::vector<double> out(zs.size());
    if (e.coeffs.empty()) return out;
    int K = e.order();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(zs.size()); ++i) {
        std::vector<double> col(K + 1);
        even_column(K, zs[i], col.data());
        double s = 0;
        for (int n = 0; n <= K; ++n) s += e.coeffs[n] * col[n];
        out[i] = s;
    }
    return out;
}

}  // namespace grat::parallel
