#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "relqhe/constants.hpp"
#include "relqhe/errors.hpp"

namespace support {

constexpr double pi = std::numbers::pi;

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline relqhe::EngineConfig electron(double L_angstrom) {
    return relqhe::make_engine_config(relqhe::electron_mass_kg, L_angstrom * relqhe::angstrom);
}

// Half-width giving the requested alpha*beta for an electron at T.
inline relqhe::EngineConfig electron_at_alpha_beta(double ab, double T) {
    const relqhe::PhysicalConstants k{};
    const double alpha = ab * k.k_B * T;
    return relqhe::make_engine_config(relqhe::electron_mass_kg,
                                      pi * k.hbar / std::sqrt(8.0 * relqhe::electron_mass_kg * alpha));
}

template <typename F>
relqhe::ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const relqhe::Error& e) {
        return e.kind();
    }
    FAIL("expected relqhe::Error");
    return relqhe::ErrorKind::BadParameter;
}

}  // namespace support
