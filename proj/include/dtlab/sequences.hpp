#pragma once

// Lacunary scale sequences a_j, bounded multiplier sequences v_j, and the
// ratio-normalization that rewrites any transform window over (a, v) as an
// equal one over a sequence with ratios pinned inside [rho, rho^2].

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtlab {

// Finite window of an increasing positive sequence with a_{j+1}/a_j >= rho.
struct LacunarySequence {
    int j_min = 0;
    int j_max = -1;
    double rho = 2.0;
    Eigen::ArrayXd values;  // values[i] = a_{j_min + i}

    int size() const { return static_cast<int>(values.size()); }
    bool covers(int lo, int hi) const { return lo >= j_min && hi <= j_max; }
    double a(int j) const {
        if (!covers(j, j)) throw std::out_of_range("LacunarySequence: index " + std::to_string(j));
        return values[j - j_min];
    }
    void validate() const;
};

struct MultiplierSequence {
    int j_min = 0;
    int j_max = -1;
    Eigen::ArrayXd values;  // values[i] = v_{j_min + i}
    std::optional<double> declared_p;

    int size() const { return static_cast<int>(values.size()); }
    bool covers(int lo, int hi) const { return lo >= j_min && hi <= j_max; }
    double v(int j) const {
        if (!covers(j, j)) throw std::out_of_range("MultiplierSequence: index " + std::to_string(j));
        return values[j - j_min];
    }
    double sup_norm() const { return size() == 0 ? 0.0 : values.abs().maxCoeff(); }
    // lp norm over the finite window; p = inf collapses to the sup norm.
    double lp_norm(double p) const;
    void validate() const;
};

LacunarySequence make_lacunary_geometric(double base, double rho, int j_min, int j_max);
LacunarySequence make_lacunary_custom(const std::vector<double>& values, double rho, int j_min);

MultiplierSequence make_multiplier(const std::vector<double>& values, int j_min,
                                   std::optional<double> declared_p = std::nullopt);
template <class Fn>
MultiplierSequence make_multiplier_from(int j_min, int j_max, Fn fn,
                                        std::optional<double> declared_p = std::nullopt) {
    MultiplierSequence v;
    v.j_min = j_min;
    v.j_max = j_max;
    v.values.resize(j_max - j_min + 1);
    for (int j = j_min; j <= j_max; ++j) v.values[j - j_min] = fn(j);
    v.validate();
    return v;
}

// alpha, the index window N = (N1, N2), and the sequences behind T_N^alpha.
struct TransformSpec {
    double alpha = 0.5;
    int N1 = 0;
    int N2 = 1;
    LacunarySequence a;
    MultiplierSequence v;

    void validate() const;
};

// Result of pinning the scale ratios into [rho, rho^2]. Every original index
// j maps to the position of a_j inside eta; a window (N1, N2) maps to
// (map(N1), map(N2+1) - 1) with exact operator equality by telescoping.
struct NormalizedSystem {
    LacunarySequence eta;
    MultiplierSequence theta;
    std::vector<int> index_map;  // index_map[j - orig_j_min] = eta-index of a_j
    int orig_j_min = 0;

    int mapped(int j) const {
        const int i = j - orig_j_min;
        if (i < 0 || i >= static_cast<int>(index_map.size()))
            throw std::out_of_range("NormalizedSystem: index " + std::to_string(j));
        return index_map[i];
    }
    std::pair<int, int> map_window(int N1, int N2) const {
        return {mapped(N1), mapped(N2 + 1) - 1};
    }
};

NormalizedSystem normalize_lacunary(const LacunarySequence& a, const MultiplierSequence& v);

// Sum_{j=m}^{M} v_j (a_{j+1}^{2a} e^{-a_{j+1}^2/(4s)} - a_j^{2a} e^{-a_j^2/(4s)}) / s^{1+a},
// accumulated left to right.
double telescope_sum(const LacunarySequence& a, const MultiplierSequence& v, int m, int M,
                     double alpha, double s);

// CSV rows (j, value).
void write_sequence_csv(const std::string& path, const LacunarySequence& a);
void write_sequence_csv(const std::string& path, const MultiplierSequence& v);
LacunarySequence read_lacunary_csv(const std::string& path, double rho);
MultiplierSequence read_multiplier_csv(const std::string& path);

}  // namespace dtlab
