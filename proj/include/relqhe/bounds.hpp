#pragma once

#include <cstddef>

#include "relqhe/constants.hpp"

namespace relqhe {

// All quantities in natural units: x in hbar/(mc), p in mc.

// <psi_n|x|psi_m> for the box [shift, shift + 2L], including the phi+ factors of both states
double box_x_element(const EngineConfig& cfg, long n, long m, double shift = 0.0);
// |<psi_n|p|psi_m>|
double box_p_element_abs(const EngineConfig& cfg, long n, long m);

double sum_variance_lower_bound(const EngineConfig& cfg, long k, long basis_size, double shift = 0.0);

// dx^2 + dp^2 of level n (rest term 2 m^2 c^2 included)
double state_variance_sum(const EngineConfig& cfg, long n);
bool state_variance_valid(const EngineConfig& cfg, long n);

double reverse_bound_state(const EngineConfig& cfg, long n);
// <X^2> + <P^2> with the box origin moved by `shift`
double raw_second_moment_sum(const EngineConfig& cfg, long n, double shift = 0.0);

long default_basis_size(long k);

double thermal_variance_sum(const EngineConfig& cfg, double T);
double thermal_lower_bound(const EngineConfig& cfg, double T, double shift = 0.0);
double reverse_bound_thermal(const EngineConfig& cfg, double T);

enum class BoundSubject { PerState, Thermal };

struct BoundPair {
    double lower = 0;
    double upper = 0;
    double measured = 0;
    BoundSubject subject = BoundSubject::PerState;
    long n = 0;
    double temperature = 0;
    bool valid = true;

    bool ordered() const { return lower <= measured && measured <= upper; }
};

BoundPair state_bounds(const EngineConfig& cfg, long n, long basis_size = 0);
BoundPair thermal_bounds(const EngineConfig& cfg, double T);

struct DunklWilliamsRecord {
    double var_a = 0;
    double var_b = 0;
    double cov = 0;
    double var_diff = 0;  // Delta(A - B)^2
    double lhs = 0;       // var_a + var_b
    double rhs = 0;
    double slack = 0;     // rhs - lhs
};

DunklWilliamsRecord dunkl_williams(double var_a, double var_b, double cov, double var_diff);
DunklWilliamsRecord dunkl_williams_check(const EngineConfig& cfg, long n, double shift = 0.0);
DunklWilliamsRecord dunkl_williams_check_thermal(const EngineConfig& cfg, double T);

}  // namespace relqhe
