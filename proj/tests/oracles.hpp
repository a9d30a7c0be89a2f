#pragma once

// Test-only high-precision oracles, written straight from the defining
// formulas in 50-digit decimal arithmetic. Deliberately independent of the
// library code paths (no log-space assembly, no shared helpers).

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace oracle {

using mpreal = boost::multiprecision::cpp_dec_float_50;

inline mpreal mp_pi() { return 4 * atan(mpreal(1)); }

// Gamma(1/2) is the only Gamma value the frozen probes need.
inline mpreal gamma_half() { return sqrt(mp_pi()); }

// Single-scale fractional Poisson kernel at alpha = 1/2, direct evaluation.
inline mpreal fractional_poisson_kernel_half(mpreal y_sq, mpreal s, mpreal tau, int n) {
    if (s <= 0) return 0;
    const mpreal alpha = mpreal(1) / 2;
    const mpreal pref = pow(tau, 2 * alpha) / (pow(mpreal(4), alpha) * gamma_half());
    return pref * exp(-(tau * tau + y_sq) / (4 * s)) /
           (pow(4 * mp_pi() * s, mpreal(n) / 2) * pow(s, 1 + alpha));
}

// Sum_{j=m}^{M} v_j (a_{j+1}^{2a} e^{-a_{j+1}^2/(4s)} - a_j^{2a} e^{-a_j^2/(4s)}) / s^{1+a}
// for geometric scales a_j = base^j and alternating v_j = (-1)^j, alpha = 1/2.
inline mpreal telescope_sum_alternating_half(mpreal base, int m, int M, mpreal s) {
    const mpreal alpha = mpreal(1) / 2;
    const auto term = [&](int j) {
        const mpreal aj = pow(base, j);
        return pow(aj, 2 * alpha) * exp(-aj * aj / (4 * s));
    };
    mpreal acc = 0;
    for (int j = m; j <= M; ++j) {
        const int sign = (j % 2 == 0) ? 1 : -1;
        acc += sign * (term(j + 1) - term(j)) / pow(s, 1 + alpha);
    }
    return acc;
}

// K_N^alpha(0, s) for v = 1, a_j = 2^j, alpha = 1/2, n = 1, N = (N1, N2).
inline mpreal kernel_at_origin_half(int N1, int N2, mpreal s) {
    const mpreal alpha = mpreal(1) / 2;
    const auto term = [&](int j) {
        const mpreal aj = pow(mpreal(2), j);
        return pow(aj, 2 * alpha) * exp(-aj * aj / (4 * s));
    };
    mpreal acc = 0;
    for (int j = N1; j <= N2; ++j) acc += term(j + 1) - term(j);
    return acc / (pow(mpreal(4), alpha) * gamma_half()) / pow(s, 1 + alpha) /
           pow(4 * mp_pi() * s, mpreal(1) / 2);
}

}  // namespace oracle
