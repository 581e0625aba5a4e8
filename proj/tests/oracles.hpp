#pragma once

// Independent test oracles. Everything here recomputes expected values from
// first principles (brute force enumeration, finite differences, raw
// quadrature) without touching the implementation paths it checks.

#include "fock/bell.hpp"
#include "fock/weights.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using fock::cplx;

// --- Brute-force partial Bell polynomial -----------------------------------

inline double fact(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Enumerate nonnegative (m_1..m_{n-k+1}) with sum m = k, sum i*m_i = n, and
// add up the multinomial-weighted monomials directly.
inline cplx partial_bell_bruteforce(int n, int k, const std::vector<cplx>& x)
{
    if (n == 0 && k == 0) return 1.0;
    if (k == 0) return 0.0;
    const int parts = n - k + 1;
    std::vector<int> m(static_cast<std::size_t>(parts), 0);
    cplx total = 0.0;

    std::function<void(int, int, int)> rec = [&](int i, int count_left, int weight_left) {
        if (i == parts) {
            if (count_left != 0 || weight_left != 0) return;
            double coeff = fact(n);
            cplx mono = 1.0;
            for (int p = 1; p <= parts; ++p) {
                coeff /= fact(m[p - 1]);
                for (int c = 0; c < m[p - 1]; ++c) {
                    coeff /= fact(p);
                    mono *= x[p - 1];
                }
            }
            total += coeff * mono;
            return;
        }
        const int part = i + 1;
        for (int v = 0; v <= count_left && v * part <= weight_left; ++v) {
            m[static_cast<std::size_t>(i)] = v;
            rec(i + 1, count_left - v, weight_left - v * part);
        }
        m[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, k, n);
    return total;
}

inline cplx complete_bell_bruteforce(int n, const std::vector<cplx>& x)
{
    if (n == 0) return 1.0;
    cplx s = 0.0;
    for (int k = 1; k <= n; ++k) s += partial_bell_bruteforce(n, k, x);
    return s;
}

// --- Finite differences (Wirtinger convention) -----------------------------

// d f = (d_x f - i d_y f) / 2 by central differences.
inline cplx wirtinger_fd(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-5)
{
    const cplx dx = (f(z + h) - f(z - h)) / (2.0 * h);
    const cplx dy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2.0 * h);
    return 0.5 * (dx - cplx(0, 1) * dy);
}

// Delta f = (f_xx + f_yy)/4 by the 5-point stencil.
inline double laplacian_fd(const std::function<double(cplx)>& f, cplx z, double h = 1e-4)
{
    const double c = f(z);
    const double sum = f(z + h) + f(z - h) + f(z + cplx(0, h)) + f(z - cplx(0, h));
    return (sum - 4.0 * c) / (4.0 * h * h);
}

// --- Closed forms for the classical weight ---------------------------------

// Integral of log|w - z| over B(center, R), unit density.
inline double uniform_disk_log(cplx z, cplx center, double R)
{
    const double d = std::abs(z - center);
    if (d >= R) return std::numbers::pi * R * R * std::log(d);
    return std::numbers::pi * (R * R * std::log(R) - 0.5 * R * R + 0.5 * d * d);
}

// Integral of |log|w|| over B(0, s): 2 pi int_0^s t |log t| dt.
inline double abs_log_disk_integral(double s)
{
    const double pi = std::numbers::pi;
    if (s <= 1.0) return pi * s * s * (0.5 - std::log(s));
    // split at t = 1
    return pi * 0.5 + 2.0 * pi * (0.5 * s * s * std::log(s) - 0.25 * s * s + 0.25);
}

// --- Random helpers ---------------------------------------------------------

inline std::vector<cplx> random_jet(std::mt19937_64& rng, int n, double scale = 1.0)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = cplx(u(rng), u(rng));
    return x;
}

inline cplx random_point(std::mt19937_64& rng, double radius)
{
    std::uniform_real_distribution<double> u(-radius, radius);
    while (true) {
        const cplx z(u(rng), u(rng));
        if (std::abs(z) <= radius) return z;
    }
}

} // namespace oracle
