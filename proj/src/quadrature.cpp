#include "dtlab/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <mutex>
#include <map>

namespace dtlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Jacobi matrix of the generalized Laguerre polynomials, diagonalized with
// Eigen (Golub-Welsch). beta = alpha - 1 is the weight exponent.
GaussLaguerre build_gauss_laguerre(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
    if (!(alpha > 0)) throw std::invalid_argument("gauss_laguerre: alpha must be positive");
    const double beta = alpha - 1.0;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        jacobi(k, k) = 2.0 * k + beta + 1.0;
        if (k > 0) {
            const double off = std::sqrt(k * (k + beta));
            jacobi(k, k - 1) = off;
            jacobi(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussLaguerre rule;
    rule.nodes = solver.eigenvalues().array();
    const Eigen::ArrayXd first_row = solver.eigenvectors().row(0).array();
    rule.weights = std::tgamma(alpha) * first_row.square();
    return rule;
}

}  // namespace

GaussLaguerre gauss_laguerre(int n, double alpha) {
    static std::mutex mtx;
    static std::map<std::pair<int, double>, GaussLaguerre> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({n, alpha});
    if (it != cache.end()) return it->second;
    GaussLaguerre rule = build_gauss_laguerre(n, alpha);
    cache.emplace(std::make_pair(n, alpha), rule);
    return rule;
}

double subordinate_heat(const std::function<double(double)>& heat_value, double tau, double alpha,
                        const QuadratureRule& rule) {
    if (!(tau > 0)) throw std::domain_error("subordinate_heat: tau must be positive");
    if (!(alpha > 0 && alpha < 1)) throw std::domain_error("subordinate_heat: alpha must be in (0,1)");
    const double log_pref = 2.0 * alpha * std::log(tau) - alpha * std::log(4.0) - std::lgamma(alpha);
    const double quarter_tau_sq = 0.25 * tau * tau;
    const auto integrand = [&](double s) -> double {
        const double log_weight = -quarter_tau_sq / s - (1.0 + alpha) * std::log(s);
        const double w = std::exp(log_pref + log_weight);
        return w == 0.0 ? 0.0 : w * heat_value(s);
    };
    return integrate_semi_infinite<double>(integrand, rule).value;
}

double subordinate_heat_rform(const std::function<double(double)>& heat_value, double tau,
                              double alpha, const QuadratureRule& rule) {
    if (!(tau > 0)) throw std::domain_error("subordinate_heat_rform: tau must be positive");
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("subordinate_heat_rform: alpha must be in (0,1)");
    const double quarter_tau_sq = 0.25 * tau * tau;

    if (rule.kind == QuadratureRule::Kind::gauss_laguerre_with_substitution) {
        rule.validate();
        const auto eval = [&](int n) {
            const GaussLaguerre gl = gauss_laguerre(n, alpha);
            double acc = 0;
            for (int i = 0; i < gl.nodes.size(); ++i)
                acc += gl.weights[i] * heat_value(quarter_tau_sq / gl.nodes[i]);
            return acc / std::tgamma(alpha);
        };
        return eval(80);
    }

    const double inv_gamma = std::exp(-std::lgamma(alpha));
    const auto integrand = [&](double r) -> double {
        const double w = std::exp(-r + (alpha - 1.0) * std::log(r));
        return w == 0.0 ? 0.0 : w * heat_value(quarter_tau_sq / r);
    };
    return inv_gamma * integrate_semi_infinite<double>(integrand, rule).value;
}

ContourCheck contour_identity_check(std::complex<double> z0, double alpha,
                                    const QuadratureRule& rule) {
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("contour_identity_check: alpha must be in (0,1)");
    if (!(z0.real() > 0) || std::abs(std::arg(z0)) > kPi / 4.0 + 1e-15)
        throw std::domain_error(
            "contour_identity_check: z0 must satisfy Re z0 > 0 and |arg z0| <= pi/4");

    using C = std::complex<double>;
    const auto lhs_integrand = [&](double u) -> C {
        const C expo = -z0 * u - z0 / u - alpha * std::log(u);
        if (expo.real() < -700.0) return C(0, 0);
        return std::exp(expo);
    };
    const auto rhs_integrand = [&](double r) -> C {
        const C expo = -r - z0 * z0 / r + (alpha - 2.0) * std::log(r);
        if (expo.real() < -700.0) return C(0, 0);
        return std::exp(expo);
    };

    ContourCheck out;
    out.lhs = integrate_semi_infinite<C>(lhs_integrand, rule).value;
    const C scale = std::exp((1.0 - alpha) * std::log(z0));
    out.rhs = scale * integrate_semi_infinite<C>(rhs_integrand, rule).value;
    out.gap = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace dtlab
