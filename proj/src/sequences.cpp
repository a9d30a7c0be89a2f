#include "dtlab/sequences.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace dtlab {

void LacunarySequence::validate() const {
    if (size() != j_max - j_min + 1)
        throw std::invalid_argument("LacunarySequence: window does not match value count");
    if (!(rho > 1)) throw std::invalid_argument("LacunarySequence: rho must exceed 1");
    for (int i = 0; i < size(); ++i) {
        if (!(values[i] > 0) || !std::isfinite(values[i]))
            throw std::invalid_argument("LacunarySequence: a_" + std::to_string(j_min + i) +
                                        " must be positive and finite");
        if (i > 0 && values[i] / values[i - 1] < rho * (1.0 - 1e-12))
            throw std::invalid_argument("LacunarySequence: ratio check fails at index " +
                                        std::to_string(j_min + i - 1) + " (ratio " +
                                        std::to_string(values[i] / values[i - 1]) + " < rho)");
    }
}

double MultiplierSequence::lp_norm(double p) const {
    if (!(p >= 1)) throw std::invalid_argument("MultiplierSequence: p must be >= 1");
    if (std::isinf(p)) return sup_norm();
    return std::pow(values.abs().pow(p).sum(), 1.0 / p);
}

void MultiplierSequence::validate() const {
    if (size() != j_max - j_min + 1)
        throw std::invalid_argument("MultiplierSequence: window does not match value count");
    for (int i = 0; i < size(); ++i)
        if (!std::isfinite(values[i]))
            throw std::invalid_argument("MultiplierSequence: v_" + std::to_string(j_min + i) +
                                        " must be finite");
    if (declared_p && !(*declared_p >= 1))
        throw std::invalid_argument("MultiplierSequence: declared_p must be >= 1");
}

LacunarySequence make_lacunary_geometric(double base, double rho, int j_min, int j_max) {
    if (!(base >= rho))
        throw std::invalid_argument("make_lacunary_geometric: base must be at least rho");
    if (j_min > j_max) throw std::invalid_argument("make_lacunary_geometric: empty window");
    LacunarySequence a;
    a.j_min = j_min;
    a.j_max = j_max;
    a.rho = rho;
    a.values.resize(j_max - j_min + 1);
    for (int j = j_min; j <= j_max; ++j) a.values[j - j_min] = std::pow(base, j);
    a.validate();
    return a;
}

LacunarySequence make_lacunary_custom(const std::vector<double>& values, double rho, int j_min) {
    LacunarySequence a;
    a.j_min = j_min;
    a.j_max = j_min + static_cast<int>(values.size()) - 1;
    a.rho = rho;
    a.values = Eigen::Map<const Eigen::ArrayXd>(values.data(), values.size());
    a.validate();
    return a;
}

MultiplierSequence make_multiplier(const std::vector<double>& values, int j_min,
                                   std::optional<double> declared_p) {
    MultiplierSequence v;
    v.j_min = j_min;
    v.j_max = j_min + static_cast<int>(values.size()) - 1;
    v.values = Eigen::Map<const Eigen::ArrayXd>(values.data(), values.size());
    v.declared_p = declared_p;
    v.validate();
    return v;
}

void TransformSpec::validate() const {
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("TransformSpec: alpha not in (0,1)");
    if (N1 >= N2) throw std::invalid_argument("TransformSpec: need N1 < N2");
    if (!a.covers(N1, N2 + 1))
        throw std::invalid_argument("TransformSpec: scale sequence must cover [N1, N2+1]");
    if (!v.covers(N1, N2))
        throw std::invalid_argument("TransformSpec: multiplier sequence must cover [N1, N2]");
    a.validate();
    v.validate();
}

NormalizedSystem normalize_lacunary(const LacunarySequence& a, const MultiplierSequence& v) {
    a.validate();
    if (!v.covers(a.j_min, a.j_max - 1))
        throw std::invalid_argument("normalize_lacunary: v must cover the gaps of a");

    const double rho = a.rho;
    const double log_rho_sq = 2.0 * std::log(rho);

    NormalizedSystem out;
    out.orig_j_min = a.j_min;
    std::vector<double> eta_values;
    std::vector<double> theta_values;
    eta_values.push_back(a.a(a.j_min));
    out.index_map.push_back(0);

    for (int j = a.j_min; j < a.j_max; ++j) {
        const double lo = a.a(j), hi = a.a(j + 1);
        const double ratio = hi / lo;
        // Gaps wider than rho^2 split geometrically into pieces whose common
        // ratio lands in [rho, rho^2]; theta repeats v_j across the pieces so
        // the inserted differences telescope back to the original one.
        int pieces = static_cast<int>(std::ceil(std::log(ratio) / log_rho_sq - 1e-12));
        pieces = std::max(pieces, 1);
        const double step = std::log(ratio) / pieces;
        for (int k = 1; k < pieces; ++k) {
            eta_values.push_back(lo * std::exp(k * step));
            theta_values.push_back(v.v(j));
        }
        eta_values.push_back(hi);
        theta_values.push_back(v.v(j));
        out.index_map.push_back(static_cast<int>(eta_values.size()) - 1);
    }

    out.eta.j_min = 0;
    out.eta.j_max = static_cast<int>(eta_values.size()) - 1;
    out.eta.rho = rho;
    out.eta.values = Eigen::Map<const Eigen::ArrayXd>(eta_values.data(), eta_values.size());
    out.eta.validate();

    out.theta.j_min = 0;
    out.theta.j_max = static_cast<int>(theta_values.size()) - 1;
    out.theta.values = Eigen::Map<const Eigen::ArrayXd>(theta_values.data(), theta_values.size());
    out.theta.declared_p = v.declared_p;
    return out;
}

double telescope_sum(const LacunarySequence& a, const MultiplierSequence& v, int m, int M,
                     double alpha, double s) {
    if (m > M) throw std::invalid_argument("telescope_sum: need m <= M");
    if (!a.covers(m, M + 1)) throw std::invalid_argument("telescope_sum: a must cover [m, M+1]");
    if (!v.covers(m, M)) throw std::invalid_argument("telescope_sum: v must cover [m, M]");
    if (!(s > 0)) throw std::invalid_argument("telescope_sum: s must be positive");

    const double log_s = std::log(s);
    const auto scale_term = [&](double u) {
        const double expo = 2.0 * alpha * std::log(u) - u * u / (4.0 * s);
        return std::exp(expo);
    };
    const double tail_factor = std::exp(-(1.0 + alpha) * log_s);
    double acc = 0;
    for (int j = m; j <= M; ++j)
        acc += v.v(j) * (scale_term(a.a(j + 1)) - scale_term(a.a(j))) * tail_factor;
    return acc;
}

void write_sequence_csv(const std::string& path, const LacunarySequence& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_sequence_csv: cannot open " + path);
    out << "j,a_j\n";
    out.precision(17);
    for (int j = a.j_min; j <= a.j_max; ++j) out << j << "," << a.a(j) << "\n";
}

void write_sequence_csv(const std::string& path, const MultiplierSequence& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_sequence_csv: cannot open " + path);
    out << "j,v_j\n";
    out.precision(17);
    for (int j = v.j_min; j <= v.j_max; ++j) out << j << "," << v.v(j) << "\n";
}

namespace {

std::vector<std::pair<int, double>> read_indexed_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("sequence csv: cannot open " + path);
    std::vector<std::pair<int, double>> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string jtext, vtext;
        std::getline(ss, jtext, ',');
        std::getline(ss, vtext, ',');
        rows.emplace_back(std::stoi(jtext), std::stod(vtext));
    }
    if (rows.empty()) throw std::runtime_error("sequence csv: no rows in " + path);
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first != rows[i - 1].first + 1)
            throw std::runtime_error("sequence csv: indices must be contiguous in " + path);
    return rows;
}

}  // namespace

LacunarySequence read_lacunary_csv(const std::string& path, double rho) {
    const auto rows = read_indexed_rows(path);
    std::vector<double> values;
    values.reserve(rows.size());
    for (const auto& [j, val] : rows) values.push_back(val);
    return make_lacunary_custom(values, rho, rows.front().first);
}

MultiplierSequence read_multiplier_csv(const std::string& path) {
    const auto rows = read_indexed_rows(path);
    std::vector<double> values;
    values.reserve(rows.size());
    for (const auto& [j, val] : rows) values.push_back(val);
    return make_multiplier(values, rows.front().first);
}

}  // namespace dtlab
