#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orbavg/elements.hpp"
#include "orbavg/integrals.hpp"
#include "orbavg/vec.hpp"

namespace orbavg {

using State = std::vector<double>;

/// Hamiltonian vector field plus the separable split used by the symmetric
/// composition integrator. States are (momenta..., positions...).
struct FlowSystem {
    int dim;  // full state size
    std::function<void(const State&, State&)> rhs;
    // x' = dT/dy (function of momenta only), y' = -dV/dx (positions only)
    std::function<void(const State&, State&)> velocity;  // fills dx/dt
    std::function<void(const State&, State&)> force;     // fills dy/dt
    std::function<double(const State&)> collision_gauge; // < 1 means too close
    std::string name;
};

FlowSystem two_centre_system(double m_plus, double m_minus, const Vec3& x0);
FlowSystem aux_system(const MassParams& m, const Vec3& x1);
FlowSystem three_body_system(const MassParams& m);

State pack_two_centre(const TwoCentreState& s);
TwoCentreState unpack_two_centre(const State& v, double m_plus, double m_minus,
                                 const Vec3& x0);
State pack_aux(const AuxState& s);
AuxState unpack_aux(const State& v, const MassParams& m, const Vec3& x1);
State pack_pair(const CartesianPair& c);
CartesianPair unpack_pair(const State& v);

enum class Integrator {
    AdaptiveRK78,          // adaptive 8th-order explicit (Fehlberg 7(8) pair)
    SymmetricComposition4  // fixed-step 4th-order Yoshida composition
};

struct FlowSpec {
    FlowSystem system;
    State initial;
    double t0 = 0.0;
    double t1 = 100.0;
    int samples = 201;
    Integrator integrator = Integrator::AdaptiveRK78;
    double tolerance = 1e-12;  // adaptive: local error; fixed-step: step = tolerance^(1/4)-ish
    double fixed_step = 1e-3;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
};

/// Integrate and sample at the requested times. Throws CollisionApproachError
/// (carrying the last good time) if the collision gauge trips.
Trajectory flow(const FlowSpec& spec);

struct ConservationReport {
    std::string name;
    double initial;
    double max_abs_drift;
    double rel_drift;  // max drift / max(|initial|, 1e-30)
};

using NamedIntegral = std::pair<std::string, std::function<double(const State&)>>;

std::vector<ConservationReport> conservation_report(const Trajectory& traj,
                                                    const std::vector<NamedIntegral>& integrals);

}  // namespace orbavg
