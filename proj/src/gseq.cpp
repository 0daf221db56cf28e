#include "grat/gseq.hpp"

#include <cmath>
#include <stdexcept>

#include "grat/exactseq.hpp"

namespace grat::gseq {

namespace {

constexpr double kDirichletSmallAngle = 1e-8;

void require_domain(double z) {
    if (!(z >= 0.25)) throw std::domain_error("z must lie in [1/4, inf)");
}

void require_order(int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("derivative order must be 1 or 2");
}

// U_n, U_n', U_n'' at x by differentiated three-term recurrences.
struct UDerivs {
    double u, du, ddu;
};

UDerivs u_with_derivs(int n, double x) {
    if (n == 0) return {1, 0, 0};
    double u0 = 1, u1 = 2 * x;
    double d0 = 0, d1 = 2;
    double e0 = 0, e1 = 0;
    for (int k = 2; k <= n; ++k) {
        double u2 = 2 * x * u1 - u0;
        double d2 = 2 * u1 + 2 * x * d1 - d0;
        double e2 = 4 * d1 + 2 * x * e1 - e0;
        u0 = u1; u1 = u2;
        d0 = d1; d1 = d2;
        e0 = e1; e1 = e2;
    }
    return {u1, d1, e1};
}

}  // namespace

double SLProblem::p(double z) const { return std::pow(4 * z - 1, 1.5); }
double SLProblem::q(double) const { return 0; }
double SLProblem::r(double z) const { return std::sqrt(4 * z - 1) / (4 * z * z); }
double SLProblem::lambda() const { return static_cast<double>(n) * (n + 2); }

double g_fun_eval(int n, double z) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    require_domain(z);
    if (z == 0.25) return n + 1;
    return exactseq::chebyshev_u_eval(n, 1 / (2 * std::sqrt(z)));
}

double g_fun_limit_inf(int n) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    if (n % 2) return 0;
    return (n / 2) % 2 ? -1 : 1;
}

double g_fun_derivative(int n, double z, int order) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    require_domain(z);
    require_order(order);
    if (z == 0.25) {
        // Both values are integers; keep the division last so doubles stay exact.
        double a = static_cast<double>(n) * (n + 1) * (n + 2);
        if (order == 1) return -(2.0 * a) / 3.0;
        return (4.0 * (n - 1) * a * (n + 3)) / 15.0 + 4.0 * a;
    }
    double x = 1 / (2 * std::sqrt(z));
    UDerivs u = u_with_derivs(n, x);
    double xp = -0.25 * std::pow(z, -1.5);
    if (order == 1) return u.du * xp;
    double xpp = 0.375 * std::pow(z, -2.5);
    return u.ddu * xp * xp + u.du * xpp;
}

ExactRational g_fun_derivative(int n, const ExactRational& z, int order) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    require_order(order);
    if (z == ExactRational(1, 4)) {
        ExactRational a(static_cast<long>(n));
        a *= n + 1;
        a *= n + 2;
        if (order == 1) return ExactRational(-2, 3) * a;
        return ExactRational(4, 15) * (n - 1) * a * (n + 3) + 4 * a;
    }
    if (n % 2 != 0)
        throw std::domain_error(
            "exact derivatives away from z = 1/4 exist only for even indices");
    if (z <= 0) throw std::domain_error("z must be a positive rational");
    // Termwise: g_n = sum_k (-1)^k C(n-k, k) z^{k - n/2}, integer exponents.
    ExactRational acc = 0;
    for (int k = 0; k <= n / 2; ++k) {
        long e = k - n / 2;
        ExactRational c(binomial(n - k, k));
        if (k % 2) c = -c;
        if (order == 1) {
            acc += c * e * rational_pow(z, e - 1);
        } else {
            acc += c * e * (e - 1) * rational_pow(z, e - 2);
        }
    }
    return acc;
}

double dirichlet_kernel(int n, double theta) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    if (std::fabs(theta) < kDirichletSmallAngle) return 2 * n + 1;
    return std::sin((n + 0.5) * theta) / std::sin(0.5 * theta);
}

double generating_function(GenFunKind kind, double z, double t) {
    require_domain(z);
    switch (kind) {
        case GenFunKind::ordinary: {
            if (!(std::fabs(t) < 1))
                throw std::domain_error("ordinary kind requires |t| < 1");
            return 1 / (1 - t / std::sqrt(z) + t * t);
        }
        case GenFunKind::exponential: {
            if (z == 0.25) return (t + 1) * std::exp(t);
            double s = std::sqrt(4 * z - 1);
            double a = t / (2 * std::sqrt(z));
            return std::exp(a) * (std::cos(a * s) + std::sin(a * s) / s);
        }
        case GenFunKind::logarithmic: {
            if (!(std::fabs(t) < 1))
                throw std::domain_error("logarithmic kind requires |t| < 1");
            if (z == 0.25) return t / (1 - t) - std::log1p(-t);
            double s = std::sqrt(4 * z - 1);
            double r2 = 2 * std::sqrt(z);
            // arctan difference folded into one stable arctan (2 sqrt z > |t|,
            // so no branch correction); the constant makes the value 0 at t=0.
            return std::atan(t * s / (r2 - t)) / s -
                   0.5 * std::log(1 - t / std::sqrt(z) + t * t);
        }
    }
    throw std::invalid_argument("unknown generating-function kind");
}

double generating_function_partial(GenFunKind kind, double z, double t, int terms) {
    require_domain(z);
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    if (kind != GenFunKind::exponential && !(std::fabs(t) < 1))
        throw std::domain_error("this kind requires |t| < 1");
    double x = (z == 0.25) ? 1.0 : 1 / (2 * std::sqrt(z));
    double g_prev = 1, g_cur = 2 * x;  // g_0, g_1
    double acc = 0, tn = 1, fact = 1;
    for (int n = 0; n < terms; ++n) {
        double g = (n == 0) ? g_prev : g_cur;
        if (n >= 2) {
            double g_next = 2 * x * g_cur - g_prev;
            g_prev = g_cur;
            g_cur = g_next;
            g = g_cur;
        }
        switch (kind) {
            case GenFunKind::ordinary: acc += g * tn; break;
            case GenFunKind::exponential: acc += g * tn / fact; break;
            case GenFunKind::logarithmic:
                if (n >= 1) acc += g * tn / n;
                break;
        }
        tn *= t;
        fact *= n + 1;
    }
    return acc;
}

double sl_residual(int n, double z) {
    if (n < 0) throw std::domain_error("index must be nonnegative");
    if (!(z > 0.25)) throw std::domain_error("z must lie in (1/4, inf)");
    double v = g_fun_eval(n, z);
    double vp = g_fun_derivative(n, z, 1);
    double vpp = g_fun_derivative(n, z, 2);
    return (16 * z * z * z - 4 * z * z) * vpp + 24 * z * z * vp +
           static_cast<double>(n) * (n + 2) * v;
}

}  // namespace grat::gseq
