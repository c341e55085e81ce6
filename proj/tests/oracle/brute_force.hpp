#pragma once

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// sum_{n>=1} n^k exp(-a n^2) term by term in long double, until terms stop mattering.
inline long double gauss_sum(long double a, int k) {
    long double s = 0;
    for (long n = 1;; ++n) {
        const long double dn = n;
        const long double t = std::pow(dn, k) * std::exp(-a * dn * dn);
        s += t;
        if (dn * dn * a > 50 && t < 1e-22L * s) break;
    }
    return s;
}

// Boltzmann averages of per-level values over levels k = step*j, j >= 1, gap-weighted
// against the lowest level: returns sum w f(k) / sum w.
inline long double level_average(long double ab, int step, const std::function<long double(long)>& f) {
    long double w0 = 0, wf = 0;
    const long double k1 = step;
    for (long j = 1;; ++j) {
        const long double k = static_cast<long double>(step) * j;
        const long double w = std::exp(-ab * (k * k - k1 * k1));
        w0 += w;
        wf += w * f(static_cast<long>(k));
        if (ab * (k * k - k1 * k1) > 60 && w < 1e-24L * w0) break;
    }
    return wf / w0;
}

// Composite Gauss-Legendre on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b, int panels = 2000) {
    static const double x[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                0.9061798459386640};
    static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                0.2369268850561891, 0.2369268850561891};
    const double h = (b - a) / panels;
    long double s = 0;
    for (int i = 0; i < panels; ++i) {
        const double mid = a + (i + 0.5) * h;
        for (int j = 0; j < 5; ++j) s += w[j] * f(mid + 0.5 * h * x[j]);
    }
    return static_cast<double>(s * 0.5 * h);
}

// Box eigenfunction on [0, 2L] (unit L here: ell is L in whatever units the caller uses).
inline double box_psi(double ell, long n, double x) {
    return std::sqrt(1.0 / ell) * std::sin(n * std::numbers::pi * x / (2.0 * ell));
}

inline double box_dpsi(double ell, long n, double x) {
    const double kk = n * std::numbers::pi / (2.0 * ell);
    return std::sqrt(1.0 / ell) * kk * std::cos(kk * x);
}

}  // namespace oracle
