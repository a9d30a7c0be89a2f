#pragma once

// Sampled real-valued function on a rectangular (x, t) box, the carrier of
// every operator application. Grids also carry a captured-mass companion
// array: operators record, per output point, how much kernel mass the box
// retained, and the validity mask is mass >= 0.99.

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>

namespace dtlab {

struct SpaceTimeGrid {
    enum class Extension { zero, periodic };

    int n = 1;             // spatial dimension, 1 or 2
    double x_extent = 1;   // half-width X; x in [-X, X]
    int nx = 4;            // points per spatial axis
    double t0 = 0, t1 = 1; // time range [T0, T1]
    int nt = 4;

    Eigen::ArrayXXd values;  // (nx^n) x nt
    Eigen::ArrayXXd mass;    // captured kernel mass per point, 1 on input grids

    Extension extension = Extension::zero;
    bool constant_in_past = false;  // below-T0 lookups clamp to the T0 slice
    bool compact_support = false;   // zero extension is exact; operators keep mass 1

    double dx() const { return 2.0 * x_extent / (nx - 1); }
    double dt() const { return (t1 - t0) / (nt - 1); }
    double x(int i) const { return -x_extent + i * dx(); }
    double t(int k) const { return t0 + k * dt(); }
    int spatial_points() const { return n == 1 ? nx : nx * nx; }
    int sidx(int ix, int iy = 0) const { return n == 1 ? ix : ix * nx + iy; }

    double& at(int ix, int it) { return values(ix, it); }
    double at(int ix, int it) const { return values(ix, it); }

    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> valid(double threshold = 0.99) const {
        return mass >= threshold;
    }

    void validate() const;

    static SpaceTimeGrid zeros(int n, double x_extent, int nx, double t0, double t1, int nt);
    static SpaceTimeGrid from_function(int n, double x_extent, int nx, double t0, double t1, int nt,
                                       const std::function<double(const Eigen::VectorXd&, double)>& f);
    static SpaceTimeGrid from_function1d(double x_extent, int nx, double t0, double t1, int nt,
                                         const std::function<double(double, double)>& f);
};

// Flat binary format: magic "DTLG", u32 version, u32 n, u32 nx, u32 nt,
// f64 X, T0, T1, then row-major f64 values (spatial row, time column).
void write_grid_binary(const std::string& path, const SpaceTimeGrid& grid);
SpaceTimeGrid read_grid_binary(const std::string& path);

// CSV export (x..., t, value) for plotting.
void write_grid_csv(const std::string& path, const SpaceTimeGrid& grid);

}  // namespace dtlab
