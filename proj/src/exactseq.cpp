#include "grat/exactseq.hpp"

#include <cmath>
#include <stdexcept>

namespace grat::exactseq {

namespace {

void require_nonneg(int n) {
    if (n < 0) throw std::domain_error("degree index must be nonnegative");
}

// s2^k = alpha + beta*sqrt(D) with D = 1-4z; both components stay rational
// for either sign of D, and G_n(z) = 2*beta_{n+1}.
ExactRational char_roots_exact(int n, const ExactRational& z) {
    ExactRational D = 1 - 4 * z;
    if (D == 0)
        throw std::domain_error("char_roots method requires z != 1/4 (equal roots)");
    ExactRational alpha = 1, beta = 0;
    for (int k = 0; k <= n; ++k) {
        ExactRational na = (alpha + D * beta) / 2;
        ExactRational nb = (alpha + beta) / 2;
        alpha = na;
        beta = nb;
    }
    return 2 * beta;
}

double char_roots_float(int n, double z) {
    if (z == 0.25)
        throw std::domain_error("char_roots method requires z != 1/4 (equal roots)");
    if (z < 0.25) {
        double d = std::sqrt(1 - 4 * z);
        double s2 = (1 + d) / 2, s1 = (1 - d) / 2;
        return (std::pow(s2, n + 1) - std::pow(s1, n + 1)) / d;
    }
    // Complex pair; its Binet combination collapses to the real trig form.
    double theta = std::acos(1 / (2 * std::sqrt(z)));
    return std::pow(z, 0.5 * n) * std::sin((n + 1) * theta) * 2 * std::sqrt(z) /
           std::sqrt(4 * z - 1);
}

}  // namespace

GPolyCoeffs g_poly_coeffs(int n) {
    require_nonneg(n);
    GPolyCoeffs out;
    out.n = n;
    out.coeffs.reserve(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) {
        ExactInteger c = binomial(n - k, k);
        if (k % 2) c = -c;
        out.coeffs.push_back(c);
    }
    return out;
}

ExactRational g_poly_eval(int n, const ExactRational& z, EvalMethod method) {
    require_nonneg(n);
    switch (method) {
        case EvalMethod::recurrence: {
            ExactRational prev = 1, cur = 1;  // G_0, G_1
            if (n <= 1) return 1;
            for (int k = 2; k <= n; ++k) {
                ExactRational next = cur - z * prev;
                prev = cur;
                cur = next;
            }
            return cur;
        }
        case EvalMethod::closed_form: {
            ExactRational acc = 0, zp = 1;
            GPolyCoeffs c = g_poly_coeffs(n);
            for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
                acc += ExactRational(c.coeffs[k]) * zp;
                zp *= z;
            }
            return acc;
        }
        case EvalMethod::char_roots:
            return char_roots_exact(n, z);
        case EvalMethod::trig:
            throw std::domain_error("trig method requires float input with z > 1/4");
    }
    throw std::invalid_argument("unknown evaluation method");
}

double g_poly_eval(int n, double z, EvalMethod method) {
    require_nonneg(n);
    switch (method) {
        case EvalMethod::recurrence: {
            double prev = 1, cur = 1;
            if (n <= 1) return 1;
            for (int k = 2; k <= n; ++k) {
                double next = cur - z * prev;
                prev = cur;
                cur = next;
            }
            return cur;
        }
        case EvalMethod::closed_form: {
            double acc = 0, zp = 1;
            GPolyCoeffs c = g_poly_coeffs(n);
            for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
                acc += c.coeffs[k].get_d() * zp;
                zp *= z;
            }
            return acc;
        }
        case EvalMethod::char_roots:
            return char_roots_float(n, z);
        case EvalMethod::trig: {
            if (!(z > 0.25))
                throw std::domain_error("trig method requires z > 1/4");
            double theta = std::acos(1 / (2 * std::sqrt(z)));
            return std::pow(z, 0.5 * n) * std::sin((n + 1) * theta) * 2 *
                   std::sqrt(z) / std::sqrt(4 * z - 1);
        }
    }
    throw std::invalid_argument("unknown evaluation method");
}

ExactRational g_poly_special(int n, SpecialPoint point) {
    require_nonneg(n);
    switch (point) {
        case SpecialPoint::zero:
            return 1;
        case SpecialPoint::quarter: {
            ExactInteger den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n));
            ExactRational r(ExactInteger(n + 1), den);
            r.canonicalize();
            return r;
        }
        case SpecialPoint::minus_one:
            return ExactRational(fibonacci(n));
    }
    throw std::invalid_argument("unknown special point");
}

CharRoots char_roots(double z) {
    if (!(z < 0.25))
        throw std::domain_error(
            "real root pair requires z < 1/4 (above, the pair is complex and is "
            "folded into the trig evaluation)");
    double d = std::sqrt(1 - 4 * z);
    return CharRoots{z, (1 - d) / 2, (1 + d) / 2};
}

ExactPolynomial::ExactPolynomial(std::vector<ExactRational> c) : coeffs_(std::move(c)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational ExactPolynomial::eval(const ExactRational& z) const {
    ExactRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return ExactPolynomial{};
    std::vector<ExactRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * ExactRational(static_cast<long>(k));
    return ExactPolynomial(std::move(d));
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<ExactRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return ExactPolynomial(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<ExactRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
    return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ExactPolynomial{};
    std::vector<ExactRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ExactPolynomial(std::move(c));
}

ExactPolynomial g_ode_residual(int n) {
    require_nonneg(n);
    GPolyCoeffs gc = g_poly_coeffs(n);
    std::vector<ExactRational> raw(gc.coeffs.begin(), gc.coeffs.end());
    ExactPolynomial G(std::move(raw));
    ExactPolynomial G1 = G.derivative();
    ExactPolynomial G2 = G1.derivative();
    ExactPolynomial lead({0, -1, 4});                              // 4z^2 - z
    ExactPolynomial mid({ExactRational(n), ExactRational(-(4 * n - 6))});  // n - (4n-6)z
    ExactPolynomial tail({ExactRational(static_cast<long>(n) * (n - 1))});
    return lead * G2 + mid * G1 + tail * G;
}

double chebyshev_u_eval(int n, double x) {
    require_nonneg(n);
    if (!(x >= -1.0 && x <= 1.0))
        throw std::domain_error("chebyshev_u_eval: |x| must be <= 1");
    double prev = 1, cur = 2 * x;
    if (n == 0) return 1;
    for (int k = 2; k <= n; ++k) {
        double next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace grat::exactseq
