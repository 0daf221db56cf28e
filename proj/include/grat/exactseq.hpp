#pragma once

#include <vector>

#include "grat/rational.hpp"

namespace grat::exactseq {

// Coefficients of G_n, ascending powers of z; coeffs[k] = (-1)^k C(n-k, k),
// length floor(n/2)+1.
struct GPolyCoeffs {
    int n = 0;
    std::vector<ExactInteger> coeffs;
};

// Real root pair of s^2 - s + z = 0 (requires z < 1/4 for a real pair).
struct CharRoots {
    double z = 0;
    double s1 = 0;
    double s2 = 0;
};

enum class EvalMethod { recurrence, closed_form, char_roots, trig };

enum class SpecialPoint { zero, quarter, minus_one };

// Rational-coefficient polynomial, ascending powers; trailing coefficient
// nonzero unless identically zero.
class ExactPolynomial {
  public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<ExactRational> c);

    const std::vector<ExactRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    ExactRational eval(const ExactRational& z) const;
    ExactPolynomial derivative() const;

    friend ExactPolynomial operator+(const ExactPolynomial&, const ExactPolynomial&);
    friend ExactPolynomial operator-(const ExactPolynomial&, const ExactPolynomial&);
    friend ExactPolynomial operator*(const ExactPolynomial&, const ExactPolynomial&);
    bool operator==(const ExactPolynomial&) const = default;

  private:
    std::vector<ExactRational> coeffs_;
};

GPolyCoeffs g_poly_coeffs(int n);

// Exact evaluation at rational z.  All methods agree exactly; trig has no
// exact form and is rejected, char_roots requires z != 1/4.
ExactRational g_poly_eval(int n, const ExactRational& z, EvalMethod method);

// Float evaluation; char_roots requires z != 1/4 (real pair below, trig
// fold-down above), trig requires z > 1/4.
double g_poly_eval(int n, double z, EvalMethod method);

ExactRational g_poly_special(int n, SpecialPoint point);

CharRoots char_roots(double z);

// Residual of (4z^2 - z) G_n'' + [n - (4n-6) z] G_n' + n(n-1) G_n, which is
// identically zero.
ExactPolynomial g_ode_residual(int n);

double chebyshev_u_eval(int n, double x);

}  // namespace grat::exactseq
