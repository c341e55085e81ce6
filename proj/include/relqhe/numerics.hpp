#pragma once

#include <cstddef>
#include <functional>

#include "relqhe/constants.hpp"

namespace relqhe::numerics {

struct SeriesResult {
    double value = 0;
    std::size_t terms_used = 0;
    double truncation_estimate = 0;
    bool accelerated = false;
};

double erf(double x);
double erfc(double x);

// sum_{n>=1} n^k exp(-a n^2), k in {0,1,2}
SeriesResult gauss_sum(double a, int k, const Tolerances& tol = {});
SeriesResult gauss_sum_direct(double a, int k, const Tolerances& tol = {});
SeriesResult gauss_sum_accelerated(double a, int k, const Tolerances& tol = {});

// exp(a) * sum_{n>=1} n^k exp(-a n^2); finite for any a > 0.
SeriesResult gauss_sum_ground_scaled(double a, int k, const Tolerances& tol = {});

double fd_step(double x, double scale);
double central_diff(const std::function<double(double)>& f, double x, double scale = 1.0);

}  // namespace relqhe::numerics
