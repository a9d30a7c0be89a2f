#include "dtlab/kernels.hpp"

namespace dtlab {

double fractional_poisson_kernel(const KernelPoint& p, double alpha) {
    p.validate();
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("fractional_poisson_kernel: alpha must be in (0,1)");
    if (!(p.tau > 0)) throw std::domain_error("fractional_poisson_kernel: tau must be positive");
    if (p.s <= 0) return 0.0;

    const int n = p.dim();
    const double expo = 2.0 * alpha * std::log(p.tau) - alpha * std::log(4.0) - std::lgamma(alpha) -
                        (p.tau * p.tau + p.y_squared()) / (4.0 * p.s) -
                        0.5 * n * std::log(4.0 * kPi * p.s) - (1.0 + alpha) * std::log(p.s);
    return std::exp(expo);
}

double diff_transform_radial(double s, const TransformSpec& spec) {
    if (s <= 0) return 0.0;
    const double alpha = spec.alpha;
    const auto scale_term = [&](double u) {
        return std::exp(2.0 * alpha * std::log(u) - u * u / (4.0 * s));
    };
    double sum = 0;
    for (int j = spec.N1; j <= spec.N2; ++j)
        sum += spec.v.v(j) * (scale_term(spec.a.a(j + 1)) - scale_term(spec.a.a(j)));
    const double log_common =
        -alpha * std::log(4.0) - std::lgamma(alpha) - (1.0 + alpha) * std::log(s);
    return sum * std::exp(log_common);
}

double diff_transform_kernel(const KernelPoint& p, const TransformSpec& spec) {
    p.validate();
    spec.validate();
    if (p.s <= 0) return 0.0;
    return diff_transform_radial(p.s, spec) * gauss_weierstrass_sq(p.y_squared(), p.s, p.dim());
}

}  // namespace dtlab
