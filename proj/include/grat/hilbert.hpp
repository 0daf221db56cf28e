#pragma once

#include <functional>
#include <vector>

#include "grat/measure.hpp"

namespace grat::hilbert {

using RealFunction = std::function<double(double)>;

// Coefficients c_0..c_N with respect to the orthonormal family {g_{2n}}.
struct FourierExpansion {
    std::vector<double> coeffs;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

enum class MembershipKind { shifted_pole, left_endpoint };

// Power-function membership case: (z - z0)^gamma with z0 > 1/4, or
// (z - 1/4)^gamma at the left endpoint.
struct MembershipCase {
    MembershipKind kind = MembershipKind::shifted_pole;
    double gamma = 0;
    double z0 = 0;  // used by shifted_pole only
};

double inner_product(const RealFunction& f, const RealFunction& g,
                     const measure::QuadratureRule& rule);

FourierExpansion fourier_coefficients(const RealFunction& f, int N,
                                      const measure::QuadratureRule& rule);

// Closed form of (g_{2m+1}, g_{2n}): 8(m+1)(-1)^{n+m+1} /
// (pi (2n-2m-1)(2n+2m+3)).
double odd_even_coeff(int m, int n);

double expansion_eval(const FourierExpansion& e, double z);

// ||f - sum c_n g_{2n}||_2 by quadrature.
double truncation_error(const RealFunction& f, const FourierExpansion& e,
                        const measure::QuadratureRule& rule);

// Parseval form sqrt(||f||^2 - sum c_n^2), for use when ||f||^2 is known
// analytically.
double truncation_error_parseval(double f_norm_sq, const FourierExpansion& e);

// Partial sum of m^2 / ((2n-2m+1)^2 (2n+2m+1)^2) for n = 0..N; converges to
// pi^2/64 for every nonzero integer m.
double parseval_partial(int m, int N);

// Analytic decision: shifted_pole iff gamma in (-1/2, 1/4); left_endpoint iff
// gamma in (-3/4, 1/4).  Open intervals.
bool power_membership(const MembershipCase& c);

}  // namespace grat::hilbert
