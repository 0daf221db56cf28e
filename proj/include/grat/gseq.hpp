#pragma once

#include "grat/rational.hpp"

namespace grat::gseq {

struct SLProblem {
    int n = 0;
    double p(double z) const;       // (4z-1)^{3/2}
    double q(double) const;         // 0
    double r(double z) const;       // sqrt(4z-1) / (4 z^2)
    double lambda() const;          // n (n+2)
};

enum class GenFunKind { ordinary, exponential, logarithmic };

// g_n(z) = G_n(z) / z^{n/2}; equals U_n(1/(2 sqrt z)); g_n(1/4) = n+1.
double g_fun_eval(int n, double z);

// Limit at z -> +inf: (-1)^{n/2} for even n, 0 for odd n.
double g_fun_limit_inf(int n);

// Analytic derivative of order 1 or 2 at z >= 1/4.
double g_fun_derivative(int n, double z, int order);

// Exact termwise derivative from the binomial form.  Valid for even n at any
// positive rational z, and for every n at z = 1/4 (closed-form values).
ExactRational g_fun_derivative(int n, const ExactRational& z, int order);

// sin((n + 1/2) theta) / sin(theta / 2); returns the limit 2n+1 for
// |theta| < 1e-8.
double dirichlet_kernel(int n, double theta);

// Closed forms of sum g_n t^n, sum g_n t^n / n!, sum_{n>=1} g_n t^n / n.
double generating_function(GenFunKind kind, double z, double t);

// Partial sum of the defining series (the oracle for the closed forms).
double generating_function_partial(GenFunKind kind, double z, double t, int terms);

// (16z^3 - 4z^2) g_n'' + 24 z^2 g_n' + n(n+2) g_n, evaluated analytically.
double sl_residual(int n, double z);

}  // namespace grat::gseq
