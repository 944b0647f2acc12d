#pragma once

#include <array>
#include <functional>

#include "analysis.hpp"
#include "model.hpp"

namespace lohe {

struct IntegratorConfig {
    double dt = 1e-3;
    double t_end = 0.0;
    int sample_every = 100;     // steps between diagnostic samples
    bool renormalize = false;   // rescale agents to initial norms after each step
};

using RhsFn = std::function<std::vector<CMat>(const EnsembleState&)>;
using DiagFn = std::function<DiagnosticsRecord(double, const EnsembleState&)>;

// Sampled solution: times, state snapshots and diagnostics stay aligned.
struct Trajectory {
    std::vector<double> times;
    std::vector<EnsembleState> states;
    std::vector<DiagnosticsRecord> records;
    IntegratorConfig config;
};

namespace detail {

inline EnsembleState state_add_scaled(const EnsembleState& base, const std::vector<CMat>& dir,
                                      double coef) {
    EnsembleState out;
    out.agents.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CMat a = base.agents[i];
        for (std::size_t k = 0; k < a.entries.size(); ++k)
            a.entries[k] += coef * dir[i].entries[k];
        out.agents.push_back(std::move(a));
    }
    out.refresh_centroid();
    return out;
}

}  // namespace detail

// One classical fourth-order Runge-Kutta update; the coupled right-hand side
// is re-evaluated (centroid included) at each internal stage.
inline EnsembleState rk4_step(const EnsembleState& state, const RhsFn& rhs, double dt) {
    if (!(dt > 0.0)) throw validation_error("rk4_step: dt must be positive");
    const std::vector<CMat> k1 = rhs(state);
    const std::vector<CMat> k2 = rhs(detail::state_add_scaled(state, k1, 0.5 * dt));
    const std::vector<CMat> k3 = rhs(detail::state_add_scaled(state, k2, 0.5 * dt));
    const std::vector<CMat> k4 = rhs(detail::state_add_scaled(state, k3, dt));
    EnsembleState out;
    out.agents.reserve(state.size());
    const double c = dt / 6.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        CMat a = state.agents[i];
        for (std::size_t k = 0; k < a.entries.size(); ++k)
            a.entries[k] += c * (k1[i].entries[k] + 2.0 * k2[i].entries[k] +
                                 2.0 * k3[i].entries[k] + k4[i].entries[k]);
        out.agents.push_back(std::move(a));
    }
    out.refresh_centroid();
    return out;
}

// Fixed-step RK4 loop with sampling every cfg.sample_every steps (first and
// final states always sampled). Throws divergence_error with the offending
// time if any entry turns non-finite.
inline Trajectory integrate(const EnsembleState& initial, const RhsFn& rhs,
                            const IntegratorConfig& cfg, const DiagFn& diag = {}) {
    if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0) || cfg.dt > cfg.t_end)
        throw validation_error("integrate: need 0 < dt <= t_end");
    if (cfg.sample_every < 1) throw validation_error("integrate: sample_every must be >= 1");

    const long n_steps = std::lround(cfg.t_end / cfg.dt);
    std::vector<double> init_norms;
    if (cfg.renormalize) {
        init_norms.reserve(initial.size());
        for (const CMat& a : initial.agents) init_norms.push_back(frob_norm(a));
    }

    Trajectory traj;
    traj.config = cfg;
    auto sample = [&](double t, const EnsembleState& s) {
        traj.times.push_back(t);
        traj.states.push_back(s);
        DiagnosticsRecord rec;
        rec.t = t;
        if (diag) rec = diag(t, s);
        traj.records.push_back(rec);
    };

    EnsembleState state = initial;
    sample(0.0, state);
    for (long step = 1; step <= n_steps; ++step) {
        state = rk4_step(state, rhs, cfg.dt);
        const double t = static_cast<double>(step) * cfg.dt;
        for (const CMat& a : state.agents)
            if (!is_finite(a))
                throw divergence_error("integrate: non-finite state at t=" + std::to_string(t), t);
        if (cfg.renormalize) {
            for (std::size_t i = 0; i < state.agents.size(); ++i) {
                const double nrm = frob_norm(state.agents[i]);
                if (nrm > 0.0) {
                    const double f = init_norms[i] / nrm;
                    for (cplx& z : state.agents[i].entries) z *= f;
                }
            }
            state.refresh_centroid();
        }
        if (step % cfg.sample_every == 0 || step == n_steps) sample(t, state);
    }
    return traj;
}

// Fills the running dissipation integrals of the records by trapezoid rule
// at the sampling cadence.
inline std::pair<double, double> accumulate_dissipation(Trajectory& traj, double k1, double k2) {
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t k = 0; k < traj.records.size(); ++k) {
        if (k > 0) {
            const double h = traj.times[k] - traj.times[k - 1];
            d1 += 0.5 * h * k1 *
                  (traj.records[k - 1].comm1_sq_mean + traj.records[k].comm1_sq_mean);
            d2 += 0.5 * h * k2 *
                  (traj.records[k - 1].comm2_sq_mean + traj.records[k].comm2_sq_mean);
        }
        traj.records[k].dissipation1 = d1;
        traj.records[k].dissipation2 = d2;
    }
    return {d1, d2};
}

inline std::pair<double, double> dissipation_integrals(const Trajectory& traj, double k1,
                                                       double k2) {
    return dissipation_integrals(std::span<const double>(traj.times),
                                 std::span<const DiagnosticsRecord>(traj.records), k1, k2);
}

// Applies the linear flow exp(A t) to every agent of the nonlinear trajectory
// at the requested times; each time must be a sample point of the trajectory.
inline std::vector<EnsembleState> splitting_compose(const R4Tensor& a,
                                                    const Trajectory& nonlinear,
                                                    std::span<const double> times) {
    std::vector<EnsembleState> out;
    out.reserve(times.size());
    for (double t : times) {
        std::size_t idx = nonlinear.times.size();
        for (std::size_t k = 0; k < nonlinear.times.size(); ++k)
            if (std::abs(nonlinear.times[k] - t) <= 1e-12) {
                idx = k;
                break;
            }
        if (idx == nonlinear.times.size())
            throw validation_error("splitting_compose: time not sampled by the trajectory");
        const R4Tensor flow = r4_exp_scaled(a, t);
        std::vector<CMat> agents;
        agents.reserve(nonlinear.states[idx].size());
        for (const CMat& n : nonlinear.states[idx].agents)
            agents.push_back(contract4(flow, n));
        out.push_back(EnsembleState::make(std::move(agents)));
    }
    return out;
}

// Residual of the splitting criterion: the four-exponential contraction
//   [e^{-At}]_{ab g d}[e^{At}]_{g e a1 b1}[e^{-At}]_{a2 b2 p e}[e^{At}]_{p d a3 b3}
// must equal delta_{a1 a} delta_{b3 b} delta_{b1 b2} delta_{a2 a3} at every
// sampled t. Evaluated by explicit loops.
inline std::pair<bool, double> splitting_condition_check(const R4Tensor& a,
                                                         std::span<const double> t_samples,
                                                         double tol) {
    const int d1 = a.d1, d2 = a.d2;
    double worst = 0.0;
    for (double t : t_samples) {
        const R4Tensor ep = r4_exp_scaled(a, t);
        const R4Tensor em = r4_exp_scaled(a, -t);
        for (int al = 0; al < d1; ++al)
            for (int be = 0; be < d2; ++be)
                for (int a1 = 0; a1 < d1; ++a1)
                    for (int b1 = 0; b1 < d2; ++b1)
                        for (int a2 = 0; a2 < d1; ++a2)
                            for (int b2 = 0; b2 < d2; ++b2)
                                for (int a3 = 0; a3 < d1; ++a3)
                                    for (int b3 = 0; b3 < d2; ++b3) {
                                        cplx lhs = 0.0;
                                        for (int g = 0; g < d1; ++g)
                                            for (int de = 0; de < d2; ++de)
                                                for (int e = 0; e < d2; ++e)
                                                    for (int p = 0; p < d1; ++p)
                                                        lhs += em.at(al, be, g, de) *
                                                               ep.at(g, e, a1, b1) *
                                                               em.at(a2, b2, p, e) *
                                                               ep.at(p, de, a3, b3);
                                        const double rhs = (a1 == al && b3 == be &&
                                                            b1 == b2 && a2 == a3)
                                                               ? 1.0
                                                               : 0.0;
                                        worst = std::max(worst, std::abs(lhs - rhs));
                                    }
    }
    return {worst <= tol, worst};
}

inline std::pair<bool, double> splitting_condition_check(const R4Tensor& a, double tol = 1e-8) {
    const std::array<double, 5> grid{0.1, 0.3, 1.0, 2.0, 3.7};
    return splitting_condition_check(a, std::span<const double>(grid), tol);
}

}  // namespace lohe
