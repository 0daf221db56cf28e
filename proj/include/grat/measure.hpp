#pragma once

#include <functional>
#include <vector>

namespace grat::measure {

// Node/weight table realizing integration against the probability measure
// d(mu) = sqrt(4z-1)/(2 pi z^2) dz on [1/4, inf).  Nodes are strictly inside
// the open domain and increasing; weights are positive and sum to 1.
struct QuadratureRule {
    std::vector<double> nodes;    // z-values
    std::vector<double> weights;
    int order = 0;
};

// theta = arctan(sqrt(4z-1)), a bijection [1/4, inf) -> [0, pi/2).
double theta_of_z(double z);
double z_of_theta(double theta);

// Density sqrt(4z-1) / (2 pi z^2); defined on the open interval z > 1/4.
double weight_density(double z);

// Gauss rule for the half-range weight sqrt(1-x^2) on x in (0,1) under the
// substitution z = 1/(4x^2): exact for every integrand whose pullback
// f(1/(4x^2)) is a polynomial in x of degree <= 2N-1 (any parity).
QuadratureRule build_quadrature(int N);

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

}  // namespace grat::measure
