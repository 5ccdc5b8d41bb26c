#pragma once

#include "mqc/chain.hpp"
#include "mqc/schedule.hpp"

#include <vector>

namespace mqc {

struct CompileOptions {
    PulseModel model = PulseModel::ideal;
    // Finite model: drive strength ceiling. 0 picks min spectator spacing / 50.
    double rabi_rad_s = 0.0;
};

// Single resonant pi pulse whose duration matches the addressing design
// (1 / min neighbour splitting); needs rabi_rad_s for a one-site chain.
PulseSchedule compile_not(const SpinChainModel& m, int site, const CompileOptions& opts = {});

// CNOT as local rotations around a ZZ free-evolution window. Spectator and
// control/target pi pulses on a Walsh sign pattern cancel every coupling
// except g_ct; pulse azimuths absorb all single-site phase drift, so the
// realized unitary matches CNOT up to a global phase.
PulseSchedule compile_cnot(const SpinChainModel& m, int control, int target,
                           const CompileOptions& opts = {});

// pi - wait - pi - wait over total_time_s on the given sites. Cancels the
// accumulated phase from each echoed site's omega and from every coupling
// with exactly one echoed endpoint.
PulseSchedule invert_population_echo(const SpinChainModel& m, const std::vector<int>& sites,
                                     double total_time_s, const CompileOptions& opts = {});

} // namespace mqc
