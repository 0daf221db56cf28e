#include "grat/measure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace grat::measure {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre rule on [-1, 1] by Newton iteration on the recurrence.
void gauss_legendre(int L, std::vector<double>& x, std::vector<double>& w) {
    x.resize(L);
    w.resize(L);
    int half = (L + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double xi = std::cos(kPi * (i + 0.75) / (L + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = xi;
            for (int k = 2; k <= L; ++k) {
                double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = L * (xi * p1 - p0) / (xi * xi - 1);
            double step = p1 / dp;
            xi -= step;
            if (std::fabs(step) < 1e-15) break;
        }
        x[i] = -xi;
        x[L - 1 - i] = xi;
        double wi = 2 / ((1 - xi * xi) * dp * dp);
        w[i] = wi;
        w[L - 1 - i] = wi;
    }
}

}  // namespace

double theta_of_z(double z) {
    if (!(z >= 0.25)) throw std::domain_error("theta_of_z: z must be >= 1/4");
    if (z == 0.25) return 0;
    return std::atan(std::sqrt(4 * z - 1));
}

double z_of_theta(double theta) {
    if (!(theta >= 0 && theta < kPi / 2))
        throw std::domain_error("z_of_theta: theta must lie in [0, pi/2)");
    double c = std::cos(theta);
    return 0.25 / (c * c);
}

double weight_density(double z) {
    if (!(z > 0.25)) throw std::domain_error("weight_density: z must be > 1/4");
    return std::sqrt(4 * z - 1) / (2 * kPi * z * z);
}

QuadratureRule build_quadrature(int N) {
    if (N < 1) throw std::invalid_argument("build_quadrature: N must be >= 1");

    // Discrete stand-in for the half-range measure sqrt(1-x^2) dx on (0, 1):
    // an auxiliary Gauss-Legendre grid in phi with x = cos(phi) integrates
    // every needed polynomial moment to machine accuracy.
    int L = 2 * N + 40;
    std::vector<double> gx, gw;
    gauss_legendre(L, gx, gw);
    std::vector<double> xs(L), ms(L);
    for (int i = 0; i < L; ++i) {
        double phi = (gx[i] + 1) * (kPi / 4);
        double s = std::sin(phi);
        xs[i] = std::cos(phi);
        ms[i] = gw[i] * (kPi / 4) * s * s;
    }

    // Jacobi recurrence coefficients of the discrete measure {(x_i, m_i)} by
    // the Gragg-Harrod rotation update.  (The textbook Stieltjes loop tracks
    // monic-polynomial norms, which underflow once N grows past a few
    // hundred; this form stays O(1) throughout.)
    std::vector<double> p0(xs), p1(L, 0.0);
    p1[0] = ms[0];
    for (int n = 0; n + 1 < L; ++n) {
        double pn = ms[n + 1];
        double gam = 1, sig = 0, t = 0;
        double xlam = xs[n + 1];
        for (int k = 0; k <= n + 1; ++k) {
            double rho = p1[k] + pn;
            double tmp = gam * rho;
            double tsig = sig;
            if (rho <= 0) {
                gam = 1;
                sig = 0;
            } else {
                gam = p1[k] / rho;
                sig = pn / rho;
            }
            double tk = sig * (p0[k] - xlam) - gam * t;
            p0[k] -= tk - t;
            t = tk;
            pn = (sig <= 0) ? tsig * p1[k] : t * t / sig;
            p1[k] = tmp;
        }
    }
    Eigen::VectorXd diag(N);
    Eigen::VectorXd sub(N > 1 ? N - 1 : 0);
    double mass = p1[0];
    for (int k = 0; k < N; ++k) {
        diag[k] = p0[k];
        if (k > 0) sub[k - 1] = std::sqrt(p1[k]);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("build_quadrature: eigensolve failed");

    QuadratureRule rule;
    rule.order = N;
    rule.nodes.resize(N);
    rule.weights.resize(N);
    // Eigenvalues ascend in x; z = 1/(4x^2) reverses the order.
    for (int j = 0; j < N; ++j) {
        double x = es.eigenvalues()[j];
        double q = es.eigenvectors()(0, j);
        rule.nodes[N - 1 - j] = 1 / (4 * x * x);
        rule.weights[N - 1 - j] = (4 / kPi) * mass * q * q;
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
    double acc = 0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        double v = f(rule.nodes[k]);
        if (!std::isfinite(v))
            throw std::domain_error("integrate: non-finite integrand value at node z = " +
                                    std::to_string(rule.nodes[k]));
        acc += rule.weights[k] * v;
    }
    return acc;
}

}  // namespace grat::measure
