#include "dtlab/transforms.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <vector>

namespace dtlab {

namespace {

int next_pow2(int n) {
    int p = 1;
    while (p < n) p *= 2;
    return p;
}

// Circular FFT convolution of one spatial axis against a sampled
// Gauss-Weierstrass kernel. The sampled kernel is rescaled so its discrete
// mass matches the analytic mass held by the sampled support; sampling error
// is removed without hiding truncation.
class AxisConvolver {
  public:
    AxisConvolver(int nx, double dx, double s, bool periodic) : nx_(nx) {
        if (periodic) {
            len_ = nx;
        } else {
            const double reach = 8.5 * std::sqrt(s);
            const int pad = std::min(static_cast<int>(std::ceil(reach / dx)) + 1, 4 * nx);
            len_ = next_pow2(nx + 2 * pad);
        }
        std::vector<double> kernel(len_, 0.0);
        double discrete_mass = 0;
        for (int k = 0; k < len_; ++k) {
            const int offset = k <= len_ / 2 ? k : k - len_;
            const double w = gauss_weierstrass_sq(offset * dx * offset * dx, s, 1) * dx;
            kernel[k] = w;
            discrete_mass += w;
        }
        double analytic_mass = 1.0;
        if (!periodic) {
            const double half_reach = (len_ / 2 + 0.5) * dx;
            analytic_mass = std::erf(half_reach / (2.0 * std::sqrt(s)));
        }
        if (discrete_mass > 0) {
            const double scale = analytic_mass / discrete_mass;
            for (double& w : kernel) w *= scale;
        }
        fft_.fwd(kernel_hat_, kernel);
        buffer_.resize(len_);
    }

    Eigen::ArrayXd apply(const Eigen::ArrayXd& slice) {
        std::fill(buffer_.begin(), buffer_.end(), 0.0);
        for (int i = 0; i < nx_; ++i) buffer_[i] = slice[i];
        std::vector<std::complex<double>> hat;
        fft_.fwd(hat, buffer_);
        for (int k = 0; k < len_; ++k) hat[k] *= kernel_hat_[k];
        std::vector<double> out;
        fft_.inv(out, hat);
        Eigen::ArrayXd result(nx_);
        for (int i = 0; i < nx_; ++i) result[i] = out[i];
        return result;
    }

  private:
    int nx_;
    int len_;
    Eigen::FFT<double> fft_;
    std::vector<std::complex<double>> kernel_hat_;
    std::vector<double> buffer_;
};

// Spatial convolution with W(., s), separable in n = 2.
class SpatialConvolver {
  public:
    SpatialConvolver(const SpaceTimeGrid& geom, double s)
        : n_(geom.n),
          nx_(geom.nx),
          axis_(geom.nx, geom.dx(), s, geom.extension == SpaceTimeGrid::Extension::periodic) {}

    Eigen::ArrayXd apply(const Eigen::ArrayXd& slice) {
        if (n_ == 1) return axis_.apply(slice);
        Eigen::ArrayXd out(nx_ * nx_);
        Eigen::ArrayXd line(nx_);
        // iy axis: contiguous runs of length nx_ at fixed ix.
        for (int ix = 0; ix < nx_; ++ix)
            out.segment(ix * nx_, nx_) = axis_.apply(slice.segment(ix * nx_, nx_));
        // ix axis.
        for (int iy = 0; iy < nx_; ++iy) {
            for (int ix = 0; ix < nx_; ++ix) line[ix] = out[ix * nx_ + iy];
            const Eigen::ArrayXd conv = axis_.apply(line);
            for (int ix = 0; ix < nx_; ++ix) out[ix * nx_ + iy] = conv[ix];
        }
        return out;
    }

  private:
    int n_;
    int nx_;
    AxisConvolver axis_;
};

// Linear interpolation of grid columns at time tt, honoring the grid's
// extension policy. Writes both value and mass slices.
void time_slice(const SpaceTimeGrid& f, double tt, Eigen::ArrayXd& vals, Eigen::ArrayXd& ms) {
    const int rows = f.spatial_points();
    vals.resize(rows);
    ms.resize(rows);

    double pos = (tt - f.t0) / f.dt();
    if (f.extension == SpaceTimeGrid::Extension::periodic) {
        const double period = static_cast<double>(f.nt);
        pos = pos - std::floor(pos / period) * period;
        const int k0 = static_cast<int>(std::floor(pos)) % f.nt;
        const int k1 = (k0 + 1) % f.nt;
        const double frac = pos - std::floor(pos);
        vals = (1.0 - frac) * f.values.col(k0) + frac * f.values.col(k1);
        ms = (1.0 - frac) * f.mass.col(k0) + frac * f.mass.col(k1);
        return;
    }
    if (pos < 0) {
        if (f.constant_in_past) {
            vals = f.values.col(0);
            ms = f.mass.col(0);
        } else {
            vals.setZero();
            ms.setZero();
        }
        return;
    }
    if (pos >= f.nt - 1) {
        if (pos <= f.nt - 1 + 1e-12) {
            vals = f.values.col(f.nt - 1);
            ms = f.mass.col(f.nt - 1);
        } else {
            vals.setZero();
            ms.setZero();
        }
        return;
    }
    const int k0 = static_cast<int>(std::floor(pos));
    const double frac = pos - k0;
    vals = (1.0 - frac) * f.values.col(k0) + frac * f.values.col(k0 + 1);
    ms = (1.0 - frac) * f.mass.col(k0) + frac * f.mass.col(k0 + 1);
}

bool mass_is_trivial(const SpaceTimeGrid& f) {
    return f.compact_support || f.extension == SpaceTimeGrid::Extension::periodic;
}

SpaceTimeGrid like(const SpaceTimeGrid& f) {
    SpaceTimeGrid out = SpaceTimeGrid::zeros(f.n, f.x_extent, f.nx, f.t0, f.t1, f.nt);
    out.extension = f.extension;
    out.constant_in_past = f.constant_in_past;
    return out;
}

}  // namespace

SpaceTimeGrid apply_heat(const SpaceTimeGrid& f, double tau) {
    f.validate();
    if (!(tau > 0)) throw std::domain_error("apply_heat: tau must be positive");
    SpaceTimeGrid out = like(f);
    SpatialConvolver conv(f, tau);
    const bool trivial = mass_is_trivial(f);
    Eigen::ArrayXd vals, ms;
    for (int it = 0; it < f.nt; ++it) {
        time_slice(f, f.t(it) - tau, vals, ms);
        out.values.col(it) = conv.apply(vals);
        if (!trivial) out.mass.col(it) = conv.apply(ms).min(1.0).max(0.0);
    }
    return out;
}

SpaceTimeGrid apply_fractional_poisson(const SpaceTimeGrid& f, double tau, double alpha,
                                       const PoissonOptions& opts) {
    f.validate();
    if (!(tau > 0)) throw std::domain_error("apply_fractional_poisson: tau must be positive");
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("apply_fractional_poisson: alpha must be in (0,1)");

    const GaussLaguerre gl = gauss_laguerre(opts.laguerre_nodes, alpha);
    const double weight_total = gl.weights.sum();
    SpaceTimeGrid out = like(f);
    out.values.setZero();
    const bool trivial = mass_is_trivial(f);
    if (!trivial) out.mass.setZero();

    for (int i = 0; i < gl.nodes.size(); ++i) {
        const double s = tau * tau / (4.0 * gl.nodes[i]);
        const double w = gl.weights[i] / weight_total;
        const SpaceTimeGrid heated = apply_heat(f, s);
        out.values += w * heated.values;
        if (!trivial) out.mass += w * heated.mass;
    }
    return out;
}

SpaceTimeGrid apply_diff_transform(const SpaceTimeGrid& f, const TransformSpec& spec,
                                   const PoissonOptions& opts) {
    spec.validate();
    SpaceTimeGrid out = like(f);
    out.values.setZero();
    const bool trivial = mass_is_trivial(f);

    SpaceTimeGrid prev = apply_fractional_poisson(f, spec.a.a(spec.N1), spec.alpha, opts);
    if (!trivial) out.mass = prev.mass;
    for (int j = spec.N1; j <= spec.N2; ++j) {
        SpaceTimeGrid next = apply_fractional_poisson(f, spec.a.a(j + 1), spec.alpha, opts);
        out.values += spec.v.v(j) * (next.values - prev.values);
        if (!trivial) out.mass = out.mass.min(next.mass);
        prev = std::move(next);
    }
    return out;
}

SpaceTimeGrid apply_diff_transform_kernel_path(const SpaceTimeGrid& f, const TransformSpec& spec,
                                               const KernelPathOptions& opts) {
    spec.validate();
    f.validate();
    const double alpha = spec.alpha;
    const double a_min = spec.a.a(spec.N1);
    const double a_max = spec.a.a(spec.N2 + 1);

    // s-range: below s_lo every scale term is e^{-40} deep; above s_hi the
    // remaining radial tail integrates below tail_eps.
    double coeff = 0;
    for (int j = spec.N1; j <= spec.N2; ++j)
        coeff += std::abs(spec.v.v(j)) * std::abs(std::pow(spec.a.a(j + 1), 2 * alpha) -
                                                  std::pow(spec.a.a(j), 2 * alpha));
    coeff *= std::exp(-alpha * std::log(4.0) - std::lgamma(alpha));
    const double s_lo = a_min * a_min / 160.0;
    const double tail_hi = std::pow(coeff / (alpha * opts.tail_eps), 1.0 / alpha);
    const double s_hi = std::max(25.0 * a_max * a_max, tail_hi);

    const double u_lo = std::log(s_lo), u_hi = std::log(s_hi);
    int segments = static_cast<int>(std::ceil((u_hi - u_lo) / std::log(10.0) *
                                              opts.nodes_per_decade));
    segments += segments % 2;  // composite Simpson needs an even count
    const double h = (u_hi - u_lo) / segments;

    SpaceTimeGrid out = like(f);
    out.values.setZero();
    const bool trivial = mass_is_trivial(f);
    if (!trivial) out.mass.setZero();
    double weight_sum_abs = 0;

    Eigen::ArrayXd vals, ms;
    for (int k = 0; k <= segments; ++k) {
        const double u = u_lo + k * h;
        const double s = std::exp(u);
        const double simpson = (k == 0 || k == segments) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        const double w = simpson * h / 3.0 * diff_transform_radial(s, spec) * s;
        if (w == 0.0) continue;
        SpatialConvolver conv(f, s);
        for (int it = 0; it < f.nt; ++it) {
            time_slice(f, f.t(it) - s, vals, ms);
            out.values.col(it) += w * conv.apply(vals);
            if (!trivial) out.mass.col(it) += std::abs(w) * conv.apply(ms);
        }
        weight_sum_abs += std::abs(w);
    }
    if (!trivial && weight_sum_abs > 0)
        out.mass = (out.mass / weight_sum_abs).min(1.0).max(0.0);
    return out;
}

SpaceTimeGrid maximal_transform(const SpaceTimeGrid& f, const TransformFamily& family, int M,
                                const PoissonOptions& opts) {
    if (M < 1) throw std::invalid_argument("maximal_transform: M must be positive");
    family.require_window(M);
    f.validate();

    // Suffix partial sums S_m = T_{(m,M)}^alpha f, with S_{M+1} = 0; every
    // window is then T_N = S_{N1} - S_{N2+1}.
    std::vector<Eigen::ArrayXXd> partial(2 * M + 2);
    SpaceTimeGrid out = like(f);
    const bool trivial = mass_is_trivial(f);

    SpaceTimeGrid upper = apply_fractional_poisson(f, family.a.a(M + 1), family.alpha, opts);
    partial[2 * M + 1] = Eigen::ArrayXXd::Zero(f.spatial_points(), f.nt);
    if (!trivial) out.mass = upper.mass;
    Eigen::ArrayXXd running = Eigen::ArrayXXd::Zero(f.spatial_points(), f.nt);
    for (int m = M; m >= -M; --m) {
        SpaceTimeGrid lower = apply_fractional_poisson(f, family.a.a(m), family.alpha, opts);
        running += family.v.v(m) * (upper.values - lower.values);
        partial[m + M] = running;
        if (!trivial) out.mass = out.mass.min(lower.mass);
        upper = std::move(lower);
    }

    out.values.setZero();
    for (int m1 = -M; m1 <= M - 1; ++m1)
        for (int m2 = m1 + 2; m2 <= M + 1; ++m2)
            out.values = out.values.max((partial[m1 + M] - partial[m2 + M]).abs());
    return out;
}

SpaceTimeGrid hl_maximal(const SpaceTimeGrid& f, double q) {
    f.validate();
    if (!(q >= 1) || std::isinf(q)) throw std::domain_error("hl_maximal: q must be finite and >= 1");
    SpaceTimeGrid out = like(f);
    out.mass = f.mass;

    if (f.n == 1) {
        const int nx = f.nx;
        Eigen::ArrayXd w(nx), prefix(nx + 1), best_from(nx);
        for (int it = 0; it < f.nt; ++it) {
            w = f.values.col(it).abs().pow(q);
            prefix[0] = 0;
            for (int i = 0; i < nx; ++i) prefix[i + 1] = prefix[i] + w[i];
            Eigen::ArrayXd res = Eigen::ArrayXd::Zero(nx);
            for (int l = 0; l < nx; ++l) {
                double best = -1;
                for (int r = nx - 1; r >= l; --r) {
                    best = std::max(best, (prefix[r + 1] - prefix[l]) / (r - l + 1));
                    best_from[r] = best;
                }
                for (int i = l; i < nx; ++i) res[i] = std::max(res[i], best_from[i]);
            }
            out.values.col(it) = res.pow(1.0 / q);
        }
        return out;
    }

    // n = 2: grid-anchored centers, dyadic radii, Euclidean balls.
    const int nx = f.nx;
    std::vector<std::vector<std::pair<int, int>>> disks;
    for (int r = 1; r < 2 * nx; r *= 2) {
        std::vector<std::pair<int, int>> offs;
        for (int di = -r; di <= r; ++di)
            for (int dj = -r; dj <= r; ++dj)
                if (di * di + dj * dj <= r * r) offs.emplace_back(di, dj);
        disks.push_back(std::move(offs));
        if (r >= nx) break;
    }
    for (int it = 0; it < f.nt; ++it) {
        Eigen::ArrayXd w = f.values.col(it).abs().pow(q);
        Eigen::ArrayXd res = Eigen::ArrayXd::Zero(nx * nx);
        for (const auto& disk : disks) {
            for (int ci = 0; ci < nx; ++ci)
                for (int cj = 0; cj < nx; ++cj) {
                    double sum = 0;
                    int count = 0;
                    for (const auto& [di, dj] : disk) {
                        const int i = ci + di, j = cj + dj;
                        if (i < 0 || i >= nx || j < 0 || j >= nx) continue;
                        sum += w[i * nx + j];
                        ++count;
                    }
                    if (count == 0) continue;
                    const double avg = sum / count;
                    for (const auto& [di, dj] : disk) {
                        const int i = ci + di, j = cj + dj;
                        if (i < 0 || i >= nx || j < 0 || j >= nx) continue;
                        double& cell = res[i * nx + j];
                        cell = std::max(cell, avg);
                    }
                }
        }
        out.values.col(it) = res.pow(1.0 / q);
    }
    return out;
}

SpaceTimeGrid backward_maximal(const SpaceTimeGrid& f, double q) {
    f.validate();
    if (!(q >= 1) || std::isinf(q))
        throw std::domain_error("backward_maximal: q must be finite and >= 1");
    SpaceTimeGrid out = like(f);
    out.mass = f.mass;
    const int rows = f.spatial_points();
    Eigen::ArrayXd prefix(f.nt + 1);
    for (int row = 0; row < rows; ++row) {
        prefix[0] = 0;
        for (int it = 0; it < f.nt; ++it)
            prefix[it + 1] = prefix[it] + std::pow(std::abs(f.values(row, it)), q);
        for (int it = 0; it < f.nt; ++it) {
            double best = 0;
            for (int k = 1; k <= it + 1; ++k)
                best = std::max(best, (prefix[it + 1] - prefix[it + 1 - k]) / k);
            out.values(row, it) = std::pow(best, 1.0 / q);
        }
    }
    return out;
}

double grid_value_at(const SpaceTimeGrid& f, const Eigen::VectorXd& x, double t) {
    if (x.size() != f.n) throw std::invalid_argument("grid_value_at: dimension mismatch");
    Eigen::ArrayXd vals, ms;
    time_slice(f, t, vals, ms);

    const auto axis_weights = [&](double coord, int& i0, double& frac) -> bool {
        const double pos = (coord + f.x_extent) / f.dx();
        if (pos < 0 || pos > f.nx - 1) return false;
        i0 = std::min(static_cast<int>(std::floor(pos)), f.nx - 2);
        frac = pos - i0;
        return true;
    };

    int i0;
    double fx;
    if (!axis_weights(x[0], i0, fx)) return 0.0;
    if (f.n == 1) return (1.0 - fx) * vals[i0] + fx * vals[i0 + 1];

    int j0;
    double fy;
    if (!axis_weights(x[1], j0, fy)) return 0.0;
    const auto at = [&](int i, int j) { return vals[i * f.nx + j]; };
    return (1.0 - fx) * ((1.0 - fy) * at(i0, j0) + fy * at(i0, j0 + 1)) +
           fx * ((1.0 - fy) * at(i0 + 1, j0) + fy * at(i0 + 1, j0 + 1));
}

double heat_point_value(const SpaceTimeGrid& f, const Eigen::VectorXd& x, double t, double s) {
    if (!(s > 0)) throw std::domain_error("heat_point_value: s must be positive");
    if (x.size() != f.n) throw std::invalid_argument("heat_point_value: dimension mismatch");
    const double dx = f.dx();
    const double tt = t - s;

    if (s < 2.0 * dx * dx) {
        // Gaussian narrower than the lattice: second order expansion
        // e^{s Lap} f = f + s Lap f + O(s^2) at the nearest node.
        Eigen::ArrayXd vals, ms;
        time_slice(f, tt, vals, ms);
        const int ix = std::clamp(
            static_cast<int>(std::lround((x[0] + f.x_extent) / dx)), 1, f.nx - 2);
        if (f.n == 1) {
            const double lap = (vals[ix - 1] - 2.0 * vals[ix] + vals[ix + 1]) / (dx * dx);
            return vals[ix] + s * lap;
        }
        const int iy = std::clamp(
            static_cast<int>(std::lround((x[1] + f.x_extent) / dx)), 1, f.nx - 2);
        const auto at = [&](int i, int j) { return vals[i * f.nx + j]; };
        const double lap = (at(ix - 1, iy) + at(ix + 1, iy) + at(ix, iy - 1) + at(ix, iy + 1) -
                            4.0 * at(ix, iy)) /
                           (dx * dx);
        return at(ix, iy) + s * lap;
    }

    Eigen::ArrayXd vals, ms;
    time_slice(f, tt, vals, ms);
    const double reach = 9.0 * std::sqrt(s);
    double acc = 0;
    if (f.n == 1) {
        for (int k = 0; k < f.nx; ++k) {
            const double dy = x[0] - f.x(k);
            if (std::abs(dy) > reach) continue;
            acc += gauss_weierstrass_sq(dy * dy, s, 1) * vals[k];
        }
        return acc * dx;
    }
    for (int i = 0; i < f.nx; ++i) {
        const double dy0 = x[0] - f.x(i);
        if (std::abs(dy0) > reach) continue;
        for (int j = 0; j < f.nx; ++j) {
            const double dy1 = x[1] - f.x(j);
            if (std::abs(dy1) > reach) continue;
            acc += gauss_weierstrass_sq(dy0 * dy0 + dy1 * dy1, s, 2) * vals[i * f.nx + j];
        }
    }
    return acc * dx * dx;
}

double fractional_poisson_point(const SpaceTimeGrid& f, const Eigen::VectorXd& x, double t,
                                double tau, double alpha, const QuadratureRule& rule) {
    return subordinate_heat([&](double s) { return heat_point_value(f, x, t, s); }, tau, alpha,
                            rule);
}

}  // namespace dtlab
