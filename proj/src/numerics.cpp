#include "relqhe/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "relqhe/errors.hpp"

namespace relqhe::numerics {

namespace {

constexpr double two_over_sqrt_pi = 2.0 * std::numbers::inv_sqrtpi;

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (2n+1)!!   (all terms positive)
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 500; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return two_over_sqrt_pi * std::exp(-x2) * sum;
}

// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz
double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double C = x;
    double D = 0.0;
    for (int k = 1; k < 5000; ++k) {
        const double a = 0.5 * k;
        D = x + a * D;
        if (D == 0.0) D = tiny;
        C = x + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

double erfc_nonneg(double x) {
    if (x <= 2.0) return 1.0 - erf_series(x);
    return erfc_continued_fraction(x);
}

// zeta(-2j-1) for j = 0..12
constexpr std::array<double, 13> zeta_negative_odd = {
    -1.0 / 12.0,          1.0 / 120.0,          -1.0 / 252.0,       1.0 / 240.0,
    -1.0 / 132.0,         691.0 / 32760.0,      -1.0 / 12.0,        3617.0 / 8160.0,
    -43867.0 / 14364.0,   174611.0 / 6600.0,    -854513.0 / 3036.0, 236364091.0 / 65520.0,
    -8553103.0 / 156.0};

void check_args(double a, int k) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw Error(ErrorKind::NonPositiveParameter, "gauss_sum requires a > 0");
    if (k < 0 || k > 2) throw Error(ErrorKind::BadParameter, "gauss_sum supports k in {0,1,2}");
}

double power_k(double n, int k) { return k == 0 ? 1.0 : (k == 1 ? n : n * n); }

// Terms are scaled by exp(a) so the first one is exactly 1.
SeriesResult direct_scaled(double a, int k, const Tolerances& tol) {
    const double mode = 1.0 / std::sqrt(a);
    auto term_at = [&](double n) { return power_k(n, k) * std::exp(-a * (n * n - 1.0)); };
    SeriesResult r;
    double sum = 0.0;
    for (std::size_t n = 1;; ++n) {
        if (n > tol.series_max_terms)
            throw Error(ErrorKind::SeriesNotConverged,
                        "gauss_sum needs more than " + std::to_string(tol.series_max_terms) + " terms");
        const double dn = static_cast<double>(n);
        const double term = term_at(dn);
        sum += term;
        if (!(term < tol.series_rel_tol * sum && dn > mode)) continue;
        // Past the mode the term ratio keeps shrinking, so a geometric series
        // with the current ratio bounds the tail.
        const double ratio = term_at(dn + 2.0) / term_at(dn + 1.0);
        const double next = term_at(dn + 1.0);
        const double tail = ratio < 1.0 ? next / (1.0 - ratio) : next;
        if (tail <= tol.series_rel_tol * sum || next == 0.0) {
            r.value = sum;
            r.terms_used = n;
            r.truncation_estimate = tail;
            return r;
        }
    }
}

SeriesResult accelerated_unscaled(double a, int k, const Tolerances& tol) {
    SeriesResult r;
    r.accelerated = true;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    if (k == 0 || k == 2) {
        // Jacobi theta dual: sum_{n in Z} exp(-a n^2) = sqrt(pi/a) sum_m exp(-pi^2 m^2 / a)
        double dual = 0.0;
        std::size_t m = 1;
        for (; m < 64; ++m) {
            const double q = pi2 * m * m / a;
            const double e = std::exp(-q);
            const double t = k == 0 ? e : (1.0 - 2.0 * q) * e;
            dual += t;
            if (e < 1e-18) break;
        }
        if (k == 0) {
            r.value = 0.5 * (std::sqrt(std::numbers::pi / a) * (1.0 + 2.0 * dual) - 1.0);
        } else {
            r.value = 0.25 * std::sqrt(std::numbers::pi) * std::pow(a, -1.5) * (1.0 + 2.0 * dual);
        }
        r.terms_used = m;
        r.truncation_estimate = std::abs(r.value) * std::exp(-pi2 * (m + 1.0) * (m + 1.0) / a);
        return r;
    }
    // k = 1: asymptotic expansion 1/(2a) + sum_j (-a)^j zeta(-2j-1) / j!
    double sum = 0.5 / a;
    double pw = 1.0;  // (-a)^j / j!
    double last = 0.0;
    std::size_t used = 1;
    for (std::size_t j = 0; j < zeta_negative_odd.size(); ++j) {
        if (j > 0) pw *= -a / static_cast<double>(j);
        last = pw * zeta_negative_odd[j];
        sum += last;
        ++used;
        if (std::abs(last) < 0.1 * tol.series_rel_tol * std::abs(sum)) break;
    }
    r.value = sum;
    r.terms_used = used;
    r.truncation_estimate = std::abs(last);
    return r;
}

}  // namespace

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc_nonneg(-x);
    return erfc_nonneg(x);
}

double erf(double x) {
    if (std::abs(x) <= 2.0) return x < 0.0 ? -erf_series(-x) : erf_series(x);
    return x < 0.0 ? erfc(-x) - 1.0 : 1.0 - erfc(x);
}

SeriesResult gauss_sum_direct(double a, int k, const Tolerances& tol) {
    check_args(a, k);
    SeriesResult r = direct_scaled(a, k, tol);
    const double g = std::exp(-a);
    r.value *= g;
    r.truncation_estimate *= g;
    return r;
}

SeriesResult gauss_sum_accelerated(double a, int k, const Tolerances& tol) {
    check_args(a, k);
    return accelerated_unscaled(a, k, tol);
}

SeriesResult gauss_sum(double a, int k, const Tolerances& tol) {
    check_args(a, k);
    if (a < 1e-2) return accelerated_unscaled(a, k, tol);
    return gauss_sum_direct(a, k, tol);
}

SeriesResult gauss_sum_ground_scaled(double a, int k, const Tolerances& tol) {
    check_args(a, k);
    if (a < 1e-2) {
        SeriesResult r = accelerated_unscaled(a, k, tol);
        const double g = std::exp(a);
        r.value *= g;
        r.truncation_estimate *= g;
        return r;
    }
    return direct_scaled(a, k, tol);
}

double fd_step(double x, double scale) {
    const double h = scale * std::max(std::abs(x), 1.0) * std::cbrt(std::numeric_limits<double>::epsilon());
    volatile double xp = x + h;
    return xp - x;
}

double central_diff(const std::function<double(double)>& f, double x, double scale) {
    const double h = fd_step(x, scale);
    const double fp = f(x + h);
    const double fm = f(x - h);
    if (!std::isfinite(fp) || !std::isfinite(fm))
        throw Error(ErrorKind::EvaluationFailure, "non-finite function value at difference stencil");
    return (fp - fm) / (2.0 * h);
}

}  // namespace relqhe::numerics
