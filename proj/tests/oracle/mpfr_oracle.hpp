#pragma once

#include <mpfr.h>

namespace oracle {

// erfc evaluated in 256-bit arithmetic, rounded once to double.
inline double erfc_mp(double x) {
    mpfr_t v;
    mpfr_init2(v, 256);
    mpfr_set_d(v, x, MPFR_RNDN);
    mpfr_erfc(v, v, MPFR_RNDN);
    const double r = mpfr_get_d(v, MPFR_RNDN);
    mpfr_clear(v);
    return r;
}

// The same through the defining integral (2/sqrt(pi)) int_x^inf exp(-t^2) dt,
// by composite Gauss-Legendre on [x, x + 12] in 256 bits. x >= 0.
inline double erfc_integral_mp(double x) {
    static const double nodes[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                    0.9061798459386640};
    static const double weights[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                      0.2369268850561891, 0.2369268850561891};
    mpfr_t sum, t, f, h;
    mpfr_inits2(256, sum, t, f, h, nullptr);
    mpfr_set_zero(sum, 1);
    const int panels = 4000;
    const double width = 12.0 / panels;
    for (int i = 0; i < panels; ++i) {
        const double mid = x + (i + 0.5) * width;
        for (int j = 0; j < 5; ++j) {
            mpfr_set_d(t, mid + 0.5 * width * nodes[j], MPFR_RNDN);
            mpfr_sqr(f, t, MPFR_RNDN);
            mpfr_neg(f, f, MPFR_RNDN);
            mpfr_exp(f, f, MPFR_RNDN);
            mpfr_mul_d(f, f, 0.5 * width * weights[j], MPFR_RNDN);
            mpfr_add(sum, sum, f, MPFR_RNDN);
        }
    }
    mpfr_const_pi(h, MPFR_RNDN);
    mpfr_sqrt(h, h, MPFR_RNDN);
    mpfr_div(sum, sum, h, MPFR_RNDN);
    mpfr_mul_ui(sum, sum, 2, MPFR_RNDN);
    const double r = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, t, f, h, nullptr);
    return r;
}

}  // namespace oracle
