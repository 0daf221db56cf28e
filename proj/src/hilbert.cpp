#include "grat/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "grat/gseq.hpp"

namespace grat::hilbert {

namespace {

constexpr double kPi = std::numbers::pi;

// Values of g_0, g_2, ..., g_{2N} at one z, by the U-recurrence.
void even_g_column(int N, double z, std::vector<double>& out) {
    out.resize(N + 1);
    double x = (z == 0.25) ? 1.0 : 1 / (2 * std::sqrt(z));
    double u_prev = 1, u_cur = 2 * x;
    out[0] = 1;
    for (int k = 2; k <= 2 * N; ++k) {
        double u_next = 2 * x * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
        if (k % 2 == 0) out[k / 2] = u_cur;
    }
}

}  // namespace

double inner_product(const RealFunction& f, const RealFunction& g,
                     const measure::QuadratureRule& rule) {
    return measure::integrate([&](double z) { return f(z) * g(z); }, rule);
}

FourierExpansion fourier_coefficients(const RealFunction& f, int N,
                                      const measure::QuadratureRule& rule) {
    if (N < 0) throw std::invalid_argument("fourier_coefficients: order must be >= 0");
    FourierExpansion e;
    e.coeffs.assign(N + 1, 0.0);
    std::vector<double> col;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        double z = rule.nodes[k];
        double fv = f(z);
        if (!std::isfinite(fv))
            throw std::domain_error(
                "fourier_coefficients: non-finite value at node z = " + std::to_string(z));
        even_g_column(N, z, col);
        double wf = rule.weights[k] * fv;
        for (int n = 0; n <= N; ++n) e.coeffs[n] += wf * col[n];
    }
    return e;
}

double odd_even_coeff(int m, int n) {
    if (m < 0 || n < 0) throw std::domain_error("odd_even_coeff: indices must be >= 0");
    double sign = ((n + m + 1) % 2 == 0) ? 1.0 : -1.0;
    double d1 = 2 * n - 2 * m - 1;
    double d2 = 2 * n + 2 * m + 3;
    return 8 * (m + 1) * sign / (kPi * d1 * d2);
}

double expansion_eval(const FourierExpansion& e, double z) {
    if (!(z >= 0.25)) throw std::domain_error("expansion_eval: z must be >= 1/4");
    if (e.coeffs.empty()) return 0;
    std::vector<double> col;
    even_g_column(e.order(), z, col);
    double acc = 0;
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) acc += e.coeffs[n] * col[n];
    return acc;
}

double truncation_error(const RealFunction& f, const FourierExpansion& e,
                        const measure::QuadratureRule& rule) {
    double acc = 0;
    std::vector<double> col;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        double z = rule.nodes[k];
        double fv = f(z);
        if (!std::isfinite(fv))
            throw std::domain_error(
                "truncation_error: non-finite value at node z = " + std::to_string(z));
        even_g_column(e.order(), z, col);
        double pv = 0;
        for (std::size_t n = 0; n < e.coeffs.size(); ++n) pv += e.coeffs[n] * col[n];
        double r = fv - pv;
        acc += rule.weights[k] * r * r;
    }
    return std::sqrt(acc);
}

double truncation_error_parseval(double f_norm_sq, const FourierExpansion& e) {
    double s = f_norm_sq;
    for (double c : e.coeffs) s -= c * c;
    if (s < 0) s = 0;  // roundoff guard; the true value is nonnegative
    return std::sqrt(s);
}

double parseval_partial(int m, int N) {
    if (m == 0) throw std::invalid_argument("parseval_partial: m must be nonzero");
    if (N < 0) throw std::invalid_argument("parseval_partial: N must be >= 0");
    double m2 = static_cast<double>(m) * m;
    double acc = 0;
    for (int n = 0; n <= N; ++n) {
        double d1 = 2.0 * n - 2.0 * m + 1;
        double d2 = 2.0 * n + 2.0 * m + 1;
        acc += m2 / (d1 * d1 * d2 * d2);
    }
    return acc;
}

bool power_membership(const MembershipCase& c) {
    switch (c.kind) {
        case MembershipKind::shifted_pole:
            if (!(c.z0 > 0.25))
                throw std::domain_error("power_membership: shifted pole requires z0 > 1/4");
            return c.gamma > -0.5 && c.gamma < 0.25;
        case MembershipKind::left_endpoint:
            return c.gamma > -0.75 && c.gamma < 0.25;
    }
    throw std::invalid_argument("power_membership: unknown case");
}

}  // namespace grat::hilbert
