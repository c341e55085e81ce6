#include "relqhe/level_kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "relqhe/errors.hpp"

namespace relqhe {

double LevelSeries::ground_excitation() const { return excitation(level_index(1), *cfg, mode); }

double LevelSeries::gap(std::size_t j) const {
    const long k = level_index(j);
    const long k0 = level_index(1);
    if (mode == SpectrumMode::Expanded) {
        return cfg->alpha() * static_cast<double>(k - k0) * static_cast<double>(k + k0);
    }
    return excitation_exact(k, *cfg) - excitation_exact(k0, *cfg);
}

void LevelMoments::accumulate(const LevelMoments& o) {
    weight += o.weight;
    excited += o.excited;
    k1 += o.k1;
    k2 += o.k2;
    gap += o.gap;
    gap2 += o.gap2;
    phi2 += o.phi2;
    x2_shape += o.x2_shape;
    p2_kin += o.p2_kin;
    terms += o.terms;
}

namespace {

constexpr double tail_margin = 8.0;

inline void add_term(const LevelSeries& s, std::size_t j, LevelMoments& m) {
    const long k = s.level_index(j);
    const double dk = static_cast<double>(k);
    const double g = s.gap(j);
    const double w = std::exp(-s.beta * g);
    const double phi = fv_plus(k, *s.cfg);
    const double phi2 = phi * phi;
    const double kpi = dk * std::numbers::pi;
    const double p = level_momentum(k, *s.cfg);
    m.weight += w;
    if (j >= 2) m.excited += w;
    m.k1 += w * dk;
    m.k2 += w * dk * dk;
    m.gap += w * g;
    m.gap2 += w * g * g;
    m.phi2 += w * phi2;
    m.x2_shape += w * phi2 * (1.0 / 3.0 - 1.0 / (2.0 * kpi * kpi));
    m.p2_kin += w * p * p;
    m.terms += 1;
}

// log of the k^2-weighted term, relative to the ground term
inline double log_weighted_term(const LevelSeries& s, std::size_t j) {
    const double dk = static_cast<double>(s.level_index(j));
    return -s.beta * s.gap(j) + 2.0 * std::log(dk);
}

double tail_bound(const LevelSeries& s, std::size_t J, double k2_sum) {
    const double t1 = std::exp(log_weighted_term(s, J + 1));
    const double t2 = std::exp(log_weighted_term(s, J + 2));
    if (t1 == 0.0) return 0.0;
    const double r = t2 / t1;
    const double tail = r < 1.0 ? t1 / (1.0 - r) : t1;
    return tail / k2_sum;
}

void check_converged(const LevelSeries& s, std::size_t J, const Tolerances& tol, LevelMoments& m) {
    m.truncation_estimate = tail_bound(s, J, m.k2);
    if (!(m.truncation_estimate <= tol.series_rel_tol))
        throw Error(ErrorKind::SeriesNotConverged, "level sum tail above tolerance after " +
                                                       std::to_string(J) + " terms");
}

}  // namespace

std::size_t required_terms(const LevelSeries& s, const Tolerances& tol) {
    if (!(s.beta > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "beta must be > 0");
    const double target = std::log(1.0 / tol.series_rel_tol) + tail_margin;
    // Past the mode of k^2 exp(-beta alpha k^2) the log term is decreasing.
    const double ab = s.cfg->alpha() * s.beta;
    const double step = s.well == Well::Single ? 1.0 : 2.0;
    std::size_t lo = static_cast<std::size_t>(std::ceil(1.0 / (std::sqrt(ab) * step))) + 1;
    auto ok = [&](std::size_t j) { return -log_weighted_term(s, j) >= target; };
    if (lo > tol.series_max_terms)
        throw Error(ErrorKind::SeriesNotConverged,
                    "level sum needs more than series_max_terms = " + std::to_string(tol.series_max_terms) + " terms");
    if (ok(lo)) return lo;
    std::size_t hi = lo;
    while (!ok(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 2 * tol.series_max_terms) break;
    }
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (ok(mid)) hi = mid; else lo = mid;
    }
    if (hi > tol.series_max_terms)
        throw Error(ErrorKind::SeriesNotConverged,
                    "level sum needs " + std::to_string(hi) + " terms, above series_max_terms = " +
                        std::to_string(tol.series_max_terms));
    return hi;
}

LevelMoments level_moments_serial(const LevelSeries& s, const Tolerances& tol) {
    const std::size_t J = required_terms(s, tol);
    LevelMoments m;
    for (std::size_t j = 1; j <= J; ++j) add_term(s, j, m);
    check_converged(s, J, tol, m);
    return m;
}

LevelMoments level_moments_parallel(const LevelSeries& s, const Tolerances& tol) {
    const std::size_t J = required_terms(s, tol);
    const std::size_t blocks = (J + level_block_size - 1) / level_block_size;
    std::vector<LevelMoments> part(blocks);
    const long nb = static_cast<long>(blocks);
#pragma omp parallel for schedule(static) if (nb > 1)
    for (long b = 0; b < nb; ++b) {
        const std::size_t first = static_cast<std::size_t>(b) * level_block_size + 1;
        const std::size_t last = std::min(J, first + level_block_size - 1);
        LevelMoments& m = part[static_cast<std::size_t>(b)];
        for (std::size_t j = first; j <= last; ++j) add_term(s, j, m);
    }
    LevelMoments total;
    for (const auto& m : part) total.accumulate(m);
    check_converged(s, J, tol, total);
    return total;
}

}  // namespace relqhe
