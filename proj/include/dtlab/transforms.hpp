#pragma once

// Operator applications on space-time grids: the heat semigroup of the
// parabolic generator, fractional Poisson operators by Gauss-Laguerre
// subordination, differential transforms (scale-sum and kernel-convolution
// routes), the truncated maximal transform, and the Hardy-Littlewood type
// maximal operators.
//
// Boundary policy: inputs are extended by zero outside the box and every
// output carries a captured-mass array; points that kept less than 99% of
// the kernel mass are flagged invalid. Grids may opt into periodic
// extension, clamped below-T0 lookups (constant_in_past), or declare their
// support compact, in which case zero extension is exact and outputs stay
// fully valid.

#include "dtlab/grid.hpp"
#include "dtlab/kernels.hpp"
#include "dtlab/quadrature.hpp"
#include "dtlab/sequences.hpp"

namespace dtlab {

// alpha plus the sequence pair behind a whole family of windows T_N^alpha.
struct TransformFamily {
    double alpha = 0.5;
    LacunarySequence a;
    MultiplierSequence v;

    TransformSpec window(int N1, int N2) const {
        TransformSpec spec{alpha, N1, N2, a, v};
        spec.validate();
        return spec;
    }
    void require_window(int M) const {
        if (!a.covers(-M, M + 1) || !v.covers(-M, M))
            throw std::invalid_argument("TransformFamily: sequences must cover [-M, M+1]");
    }
};

struct PoissonOptions {
    int laguerre_nodes = 48;
};

struct KernelPathOptions {
    int nodes_per_decade = 48;
    double tail_eps = 1e-7;
};

SpaceTimeGrid apply_heat(const SpaceTimeGrid& f, double tau);

SpaceTimeGrid apply_fractional_poisson(const SpaceTimeGrid& f, double tau, double alpha,
                                       const PoissonOptions& opts = {});

// Scale-sum route: sum_j v_j (P_{a_{j+1}} - P_{a_j}) f.
SpaceTimeGrid apply_diff_transform(const SpaceTimeGrid& f, const TransformSpec& spec,
                                   const PoissonOptions& opts = {});

// Kernel route: one space-time convolution against K_N^alpha, with the
// s-integral on a log-spaced Simpson grid. Cross-checks the scale-sum route.
SpaceTimeGrid apply_diff_transform_kernel_path(const SpaceTimeGrid& f, const TransformSpec& spec,
                                               const KernelPathOptions& opts = {});

// T_M^* f = sup over -M <= N1 < N2 <= M of |T_N^alpha f|, assembled from the
// partial sums S_m = T_{(m,M)}^alpha f so each window costs one difference.
SpaceTimeGrid maximal_transform(const SpaceTimeGrid& f, const TransformFamily& family, int M,
                                const PoissonOptions& opts = {});

// M_q f(x,t): sup over grid-anchored spatial windows containing x of the
// L^q average in y at fixed t.
SpaceTimeGrid hl_maximal(const SpaceTimeGrid& f, double q);

// M_q^- f(x,t): sup over backward time windows ending at t.
SpaceTimeGrid backward_maximal(const SpaceTimeGrid& f, double q);

// Probe-level evaluation (multilinear interpolation; extension policy of f).
double grid_value_at(const SpaceTimeGrid& f, const Eigen::VectorXd& x, double t);

// e^{s(dt-Lap)} f at (x, t), i.e. the spatially smoothed sample at t - s.
// Riemann sum against the Gauss-Weierstrass kernel for resolved s, second
// order Taylor fallback when the Gaussian would be narrower than the grid.
double heat_point_value(const SpaceTimeGrid& f, const Eigen::VectorXd& x, double t, double s);

// P_tau^alpha f at a probe point by adaptive quadrature in s against
// heat_point_value. Slower but grid-free in time step; used by scans.
double fractional_poisson_point(const SpaceTimeGrid& f, const Eigen::VectorXd& x, double t,
                                double tau, double alpha, const QuadratureRule& rule = {});

}  // namespace dtlab
