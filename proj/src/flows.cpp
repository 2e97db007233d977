#include "orbavg/flows.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "orbavg/errors.hpp"

namespace orbavg {

namespace {

Vec3 at(const State& s, int i) { return {s[i], s[i + 1], s[i + 2]}; }
void put(State& s, int i, const Vec3& v) { s[i] = v.x; s[i + 1] = v.y; s[i + 2] = v.z; }

}  // namespace

State pack_two_centre(const TwoCentreState& s) {
    State v(6);
    put(v, 0, s.y);
    put(v, 3, s.x);
    return v;
}

TwoCentreState unpack_two_centre(const State& v, double m_plus, double m_minus,
                                 const Vec3& x0) {
    return {at(v, 0), at(v, 3), m_plus, m_minus, x0};
}

State pack_aux(const AuxState& s) {
    State v(6);
    put(v, 0, s.y2);
    put(v, 3, s.x2);
    return v;
}

AuxState unpack_aux(const State& v, const MassParams& m, const Vec3& x1) {
    return {at(v, 0), at(v, 3), x1, m};
}

State pack_pair(const CartesianPair& c) {
    State v(12);
    put(v, 0, c.y1);
    put(v, 3, c.y2);
    put(v, 6, c.x1);
    put(v, 9, c.x2);
    return v;
}

CartesianPair unpack_pair(const State& v) {
    return {at(v, 0), at(v, 3), at(v, 6), at(v, 9)};
}

FlowSystem two_centre_system(double m_plus, double m_minus, const Vec3& x0) {
    FlowSystem sys;
    sys.dim = 6;
    sys.name = "two_centre";
    auto force_at = [m_plus, m_minus, x0](const Vec3& x) {
        Vec3 dp = x + x0, dm = x - x0;
        return -m_plus * dp / std::pow(norm(dp), 3) - m_minus * dm / std::pow(norm(dm), 3);
    };
    sys.rhs = [force_at](const State& s, State& ds) {
        ds.assign(6, 0.0);
        put(ds, 3, at(s, 0));            // x' = y
        put(ds, 0, force_at(at(s, 3)));  // y' = -dV/dx
    };
    sys.velocity = [](const State& s, State& ds) {
        ds.assign(6, 0.0);
        put(ds, 3, at(s, 0));
    };
    sys.force = [force_at](const State& s, State& ds) {
        ds.assign(6, 0.0);
        put(ds, 0, force_at(at(s, 3)));
    };
    sys.collision_gauge = [x0](const State& s) {
        Vec3 x = at(s, 3);
        double floor = 1e-6 * norm(x0);
        return std::min(norm(x + x0), norm(x - x0)) / floor;
    };
    return sys;
}

FlowSystem aux_system(const MassParams& m, const Vec3& x1) {
    FlowSystem sys;
    sys.dim = 6;
    sys.name = "aux";
    double fm2 = m.frak_m(2), fM2 = m.frak_M(2);
    double coupling = m.mu * m.m1 * m.m2;
    auto force_at = [fm2, fM2, coupling, x1](const Vec3& x2) {
        Vec3 d = x2 - x1;
        return -fm2 * fM2 * x2 / std::pow(norm(x2), 3) - coupling * d / std::pow(norm(d), 3);
    };
    sys.rhs = [fm2, force_at](const State& s, State& ds) {
        ds.assign(6, 0.0);
        put(ds, 3, at(s, 0) / fm2);
        put(ds, 0, force_at(at(s, 3)));
    };
    sys.velocity = [fm2](const State& s, State& ds) {
        ds.assign(6, 0.0);
        put(ds, 3, at(s, 0) / fm2);
    };
    sys.force = [force_at](const State& s, State& ds) {
        ds.assign(6, 0.0);
        put(ds, 0, force_at(at(s, 3)));
    };
    sys.collision_gauge = [x1](const State& s) {
        Vec3 x2 = at(s, 3);
        double scale = std::max(norm(x1), norm(x2));
        return std::min(norm(x2), norm(x2 - x1)) / (1e-6 * scale);
    };
    return sys;
}

FlowSystem three_body_system(const MassParams& m) {
    FlowSystem sys;
    sys.dim = 12;
    sys.name = "three_body";
    double fm1 = m.frak_m(1), fM1 = m.frak_M(1);
    double fm2 = m.frak_m(2), fM2 = m.frak_M(2);
    double coupling = m.mu * m.m1 * m.m2;
    double indirect = m.mu / m.m0;  // mu m1 m2 / (m0 m1 m2)
    auto forces = [=](const Vec3& x1, const Vec3& x2, Vec3& f1, Vec3& f2) {
        Vec3 d = x1 - x2;
        double d3 = std::pow(norm(d), 3);
        f1 = -fm1 * fM1 * x1 / std::pow(norm(x1), 3) - coupling * d / d3;
        f2 = -fm2 * fM2 * x2 / std::pow(norm(x2), 3) + coupling * d / d3;
    };
    sys.rhs = [=](const State& s, State& ds) {
        ds.assign(12, 0.0);
        Vec3 y1 = at(s, 0), y2 = at(s, 3), x1 = at(s, 6), x2 = at(s, 9);
        put(ds, 6, y1 / fm1 + indirect * y2);
        put(ds, 9, y2 / fm2 + indirect * y1);
        Vec3 f1, f2;
        forces(x1, x2, f1, f2);
        put(ds, 0, f1);
        put(ds, 3, f2);
    };
    sys.velocity = [=](const State& s, State& ds) {
        ds.assign(12, 0.0);
        Vec3 y1 = at(s, 0), y2 = at(s, 3);
        put(ds, 6, y1 / fm1 + indirect * y2);
        put(ds, 9, y2 / fm2 + indirect * y1);
    };
    sys.force = [=](const State& s, State& ds) {
        ds.assign(12, 0.0);
        Vec3 f1, f2;
        forces(at(s, 6), at(s, 9), f1, f2);
        put(ds, 0, f1);
        put(ds, 3, f2);
    };
    sys.collision_gauge = [](const State& s) {
        Vec3 x1 = at(s, 6), x2 = at(s, 9);
        double scale = std::max(norm(x1), norm(x2));
        return std::min({norm(x1), norm(x2), norm(x1 - x2)}) / (1e-6 * scale);
    };
    return sys;
}

namespace {

std::vector<double> sample_times(double t0, double t1, int n) {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = t0 + (t1 - t0) * i / (n - 1);
    return t;
}

Trajectory flow_adaptive(const FlowSpec& spec) {
    namespace ode = boost::numeric::odeint;
    using stepper_t = ode::runge_kutta_fehlberg78<State>;

    auto rhs = [&spec](const State& s, State& ds, double) { spec.system.rhs(s, ds); };
    Trajectory traj;
    traj.times = sample_times(spec.t0, spec.t1, spec.samples);

    auto observer = [&](const State& s, double t) {
        if (spec.system.collision_gauge && spec.system.collision_gauge(s) < 1.0)
            throw CollisionApproachError("flow: collision approach", t);
        traj.states.push_back(s);
    };

    State s = spec.initial;
    double dt0 = (spec.t1 >= spec.t0 ? 1.0 : -1.0) * 1e-3;
    auto controlled = ode::make_controlled<stepper_t>(spec.tolerance, spec.tolerance);
    ode::integrate_times(controlled, rhs, s, traj.times.begin(), traj.times.end(), dt0,
                         observer);
    return traj;
}

// Yoshida triple-jump composition of the leapfrog (kick-drift-kick) scheme.
Trajectory flow_symmetric(const FlowSpec& spec) {
    const double cbrt2 = std::cbrt(2.0);
    const double w1 = 1.0 / (2.0 - cbrt2);
    const double w0 = -cbrt2 * w1;
    const double ws[3] = {w1, w0, w1};

    Trajectory traj;
    traj.times = sample_times(spec.t0, spec.t1, spec.samples);
    State s = spec.initial;
    State buf(spec.system.dim, 0.0);

    auto kick = [&](State& st, double dt) {
        spec.system.force(st, buf);
        for (int i = 0; i < spec.system.dim; ++i) st[i] += dt * buf[i];
    };
    auto drift = [&](State& st, double dt) {
        spec.system.velocity(st, buf);
        for (int i = 0; i < spec.system.dim; ++i) st[i] += dt * buf[i];
    };
    auto leapfrog = [&](State& st, double dt) {
        kick(st, 0.5 * dt);
        drift(st, dt);
        kick(st, 0.5 * dt);
    };

    double t = spec.t0;
    traj.states.push_back(s);
    for (int i = 1; i < spec.samples; ++i) {
        double target = traj.times[i];
        double span = target - t;
        int nsteps = std::max(1, static_cast<int>(std::ceil(std::fabs(span) / spec.fixed_step)));
        double dt = span / nsteps;
        for (int k = 0; k < nsteps; ++k) {
            for (double w : ws) leapfrog(s, w * dt);
            if (spec.system.collision_gauge && spec.system.collision_gauge(s) < 1.0)
                throw CollisionApproachError("flow: collision approach", t + (k + 1) * dt);
        }
        t = target;
        traj.states.push_back(s);
    }
    return traj;
}

}  // namespace

Trajectory flow(const FlowSpec& spec) {
    if (spec.samples < 2) throw DomainError("flow: need at least 2 sample times");
    if (spec.tolerance < 1e-14 || spec.tolerance > 1e-6)
        throw DomainError("flow: tolerance outside [1e-14, 1e-6]");
    if (!std::isfinite(spec.t0) || !std::isfinite(spec.t1))
        throw DomainError("flow: time span not finite");
    if (spec.integrator == Integrator::AdaptiveRK78) return flow_adaptive(spec);
    return flow_symmetric(spec);
}

std::vector<ConservationReport> conservation_report(
    const Trajectory& traj, const std::vector<NamedIntegral>& integrals) {
    if (traj.states.empty()) throw DomainError("conservation_report: empty trajectory");
    std::vector<ConservationReport> out;
    out.reserve(integrals.size());
    for (const auto& [name, f] : integrals) {
        double v0 = f(traj.states.front());
        double drift = 0.0;
        for (const auto& s : traj.states) drift = std::max(drift, std::fabs(f(s) - v0));
        out.push_back({name, v0, drift, drift / std::max(std::fabs(v0), 1e-30)});
    }
    return out;
}

}  // namespace orbavg
