#pragma once

#include <cstddef>

#include "relqhe/constants.hpp"
#include "relqhe/spectrum.hpp"

namespace relqhe {

// Boltzmann sums over the levels of one well, weighted relative to the
// well's ground level, w_j = exp(-beta (e_k - e_ground)) with k = j (single)
// or k = 2j (partitioned). Degeneracy factors are applied by the caller.
struct LevelSeries {
    const EngineConfig* cfg = nullptr;
    Well well = Well::Single;
    SpectrumMode mode = SpectrumMode::Expanded;
    double beta = 0;

    long level_index(std::size_t j) const {
        return well == Well::Single ? static_cast<long>(j) : 2 * static_cast<long>(j);
    }
    double ground_excitation() const;
    double gap(std::size_t j) const;  // e_k - e_ground >= 0
};

struct LevelMoments {
    double weight = 0;   // sum w
    double excited = 0;  // sum w over j >= 2
    double k1 = 0;       // sum w k
    double k2 = 0;       // sum w k^2
    double gap = 0;      // sum w (e_k - e_ground)
    double gap2 = 0;     // sum w (e_k - e_ground)^2
    double phi2 = 0;     // sum w phi_k^2
    double x2_shape = 0; // sum w phi_k^2 (1/3 - 1/(2 (k pi)^2))
    double p2_kin = 0;   // sum w p_k^2
    std::size_t terms = 0;
    double truncation_estimate = 0;  // relative bound on the omitted k^2-weighted tail

    void accumulate(const LevelMoments& o);
};

std::size_t required_terms(const LevelSeries& s, const Tolerances& tol);

// Reference: one running sum over all terms.
LevelMoments level_moments_serial(const LevelSeries& s, const Tolerances& tol);
// Fixed-size blocks, evaluated in parallel and folded in block order, so the
// result does not depend on the thread count.
LevelMoments level_moments_parallel(const LevelSeries& s, const Tolerances& tol);

inline constexpr std::size_t level_block_size = 4096;

}  // namespace relqhe
