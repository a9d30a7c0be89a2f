#include "dtlab/grid.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace dtlab {

void SpaceTimeGrid::validate() const {
    if (n != 1 && n != 2) throw std::invalid_argument("SpaceTimeGrid: n must be 1 or 2");
    if (nx < 4 || nt < 4) throw std::invalid_argument("SpaceTimeGrid: need nx, nt >= 4");
    if (!(x_extent > 0)) throw std::invalid_argument("SpaceTimeGrid: x_extent must be positive");
    if (!(t1 > t0)) throw std::invalid_argument("SpaceTimeGrid: need t1 > t0");
    if (values.rows() != spatial_points() || values.cols() != nt)
        throw std::invalid_argument("SpaceTimeGrid: value array shape mismatch");
    if (!values.allFinite()) throw std::invalid_argument("SpaceTimeGrid: values must be finite");
}

SpaceTimeGrid SpaceTimeGrid::zeros(int n, double x_extent, int nx, double t0, double t1, int nt) {
    SpaceTimeGrid g;
    g.n = n;
    g.x_extent = x_extent;
    g.nx = nx;
    g.t0 = t0;
    g.t1 = t1;
    g.nt = nt;
    g.values = Eigen::ArrayXXd::Zero(g.spatial_points(), nt);
    g.mass = Eigen::ArrayXXd::Ones(g.spatial_points(), nt);
    g.validate();
    return g;
}

SpaceTimeGrid SpaceTimeGrid::from_function(
    int n, double x_extent, int nx, double t0, double t1, int nt,
    const std::function<double(const Eigen::VectorXd&, double)>& f) {
    SpaceTimeGrid g = zeros(n, x_extent, nx, t0, t1, nt);
    Eigen::VectorXd x(n);
    for (int ix = 0; ix < nx; ++ix) {
        x[0] = g.x(ix);
        const int jy_count = n == 1 ? 1 : nx;
        for (int iy = 0; iy < jy_count; ++iy) {
            if (n == 2) x[1] = g.x(iy);
            const int row = g.sidx(ix, iy);
            for (int it = 0; it < nt; ++it) g.values(row, it) = f(x, g.t(it));
        }
    }
    g.validate();
    return g;
}

SpaceTimeGrid SpaceTimeGrid::from_function1d(double x_extent, int nx, double t0, double t1, int nt,
                                             const std::function<double(double, double)>& f) {
    return from_function(1, x_extent, nx, t0, t1, nt,
                         [&f](const Eigen::VectorXd& x, double t) { return f(x[0], t); });
}

namespace {

template <class T>
void write_raw(std::ofstream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T read_raw(std::ifstream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    return value;
}

constexpr char kMagic[4] = {'D', 'T', 'L', 'G'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

void write_grid_binary(const std::string& path, const SpaceTimeGrid& grid) {
    grid.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_grid_binary: cannot open " + path);
    out.write(kMagic, 4);
    write_raw(out, kVersion);
    write_raw(out, static_cast<std::uint32_t>(grid.n));
    write_raw(out, static_cast<std::uint32_t>(grid.nx));
    write_raw(out, static_cast<std::uint32_t>(grid.nt));
    write_raw(out, grid.x_extent);
    write_raw(out, grid.t0);
    write_raw(out, grid.t1);
    for (int row = 0; row < grid.values.rows(); ++row)
        for (int it = 0; it < grid.nt; ++it) write_raw(out, grid.values(row, it));
    if (!out) throw std::runtime_error("write_grid_binary: write failed for " + path);
}

SpaceTimeGrid read_grid_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_grid_binary: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("read_grid_binary: bad magic in " + path);
    const auto version = read_raw<std::uint32_t>(in);
    if (version != kVersion)
        throw std::runtime_error("read_grid_binary: unsupported version in " + path);
    const auto n = read_raw<std::uint32_t>(in);
    const auto nx = read_raw<std::uint32_t>(in);
    const auto nt = read_raw<std::uint32_t>(in);
    const auto x_extent = read_raw<double>(in);
    const auto t0 = read_raw<double>(in);
    const auto t1 = read_raw<double>(in);
    SpaceTimeGrid g = SpaceTimeGrid::zeros(static_cast<int>(n), x_extent, static_cast<int>(nx), t0,
                                           t1, static_cast<int>(nt));
    for (int row = 0; row < g.values.rows(); ++row)
        for (int it = 0; it < g.nt; ++it) g.values(row, it) = read_raw<double>(in);
    if (!in) throw std::runtime_error("read_grid_binary: truncated file " + path);
    g.validate();
    return g;
}

void write_grid_csv(const std::string& path, const SpaceTimeGrid& grid) {
    grid.validate();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_grid_csv: cannot open " + path);
    out.precision(17);
    out << (grid.n == 1 ? "x,t,value\n" : "x1,x2,t,value\n");
    for (int ix = 0; ix < grid.nx; ++ix) {
        const int jy_count = grid.n == 1 ? 1 : grid.nx;
        for (int iy = 0; iy < jy_count; ++iy) {
            const int row = grid.sidx(ix, iy);
            for (int it = 0; it < grid.nt; ++it) {
                out << grid.x(ix) << ",";
                if (grid.n == 2) out << grid.x(iy) << ",";
                out << grid.t(it) << "," << grid.values(row, it) << "\n";
            }
        }
    }
}

}  // namespace dtlab
