#pragma once

// Closed-form kernels: the Gauss-Weierstrass kernel, the single-scale
// fractional Poisson kernel, the differential-transform kernel K_N^alpha,
// and the parabolic distance. All exponentials are assembled in log space
// and exponentiated once, so deep tails underflow to exact zero.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "dtlab/sequences.hpp"

namespace dtlab {

inline constexpr double kPi = 3.14159265358979323846;

// A space-time evaluation point (y, s) plus the scale tau where one applies.
struct KernelPoint {
    Eigen::VectorXd y;
    double s = 0;
    double tau = 1;

    int dim() const { return static_cast<int>(y.size()); }
    double y_squared() const { return y.squaredNorm(); }
    void validate() const {
        const int n = dim();
        if (n != 1 && n != 2) throw std::domain_error("KernelPoint: dimension must be 1 or 2");
        if (!y.allFinite() || !std::isfinite(s) || !std::isfinite(tau))
            throw std::domain_error("KernelPoint: coordinates must be finite");
    }
};

// B(x0, r) x [t0 - r^2, t0 + r^2].
struct ParabolicCylinder {
    Eigen::VectorXd center_x;
    double center_t = 0;
    double radius = 1;

    int dim() const { return static_cast<int>(center_x.size()); }
    void validate() const {
        if (!(radius > 0)) throw std::domain_error("ParabolicCylinder: radius must be positive");
        const int n = dim();
        if (n != 1 && n != 2) throw std::domain_error("ParabolicCylinder: dimension must be 1 or 2");
    }
    bool contains(const Eigen::VectorXd& x, double t) const {
        return (x - center_x).norm() <= radius && std::abs(t - center_t) <= radius * radius;
    }
};

// (4 pi tau)^(-n/2) exp(-|y|^2 / (4 tau)).
inline double gauss_weierstrass_sq(double y_squared, double tau, int n) {
    if (!(tau > 0)) throw std::domain_error("gauss_weierstrass: tau must be positive");
    const double expo = -y_squared / (4.0 * tau) - 0.5 * n * std::log(4.0 * kPi * tau);
    return std::exp(expo);
}

template <class Derived>
double gauss_weierstrass(const Eigen::MatrixBase<Derived>& y, double tau) {
    return gauss_weierstrass_sq(y.squaredNorm(), tau, static_cast<int>(y.size()));
}

// Single-scale kernel of P_tau^alpha at (y, s); zero for s <= 0 (continuous
// extension, the kernel vanishes to all orders at s = 0+).
double fractional_poisson_kernel(const KernelPoint& p, double alpha);

// K_N^alpha(y, s): the signed sum of consecutive scale differences, with the
// same s <= 0 extension. Scale terms are accumulated left to right.
double diff_transform_kernel(const KernelPoint& p, const TransformSpec& spec);

// Radial-in-s factor of the same kernel: for s > 0,
// K_N^alpha(y, s) = diff_transform_radial(s, spec) * gauss_weierstrass(y, s).
double diff_transform_radial(double s, const TransformSpec& spec);

// max(|x1 - x2|, |t1 - t2|^(1/2)).
template <class D1, class D2>
double parabolic_distance(const Eigen::MatrixBase<D1>& x1, double t1,
                          const Eigen::MatrixBase<D2>& x2, double t2) {
    if (x1.size() != x2.size())
        throw std::invalid_argument("parabolic_distance: dimension mismatch");
    return std::max((x1 - x2).norm(), std::sqrt(std::abs(t1 - t2)));
}

inline double parabolic_distance(double x1, double t1, double x2, double t2) {
    return std::max(std::abs(x1 - x2), std::sqrt(std::abs(t1 - t2)));
}

}  // namespace dtlab
