#pragma once

#include <chrono>
#include <cstdlib>
#include <json.hpp>

#include "config.hpp"
#include "sampling.hpp"
#include "sim.hpp"

namespace lohe {

struct CheckResult {
    std::string name;   // law or property exercised
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct ScenarioReport {
    std::string scenario;
    bool pass = true;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;  // console-only; omitted from emitted files
    std::vector<std::pair<std::string, std::string>> config_echo;

    void add(const std::string& name, double residual, double tolerance,
             const std::string& note = {}) {
        const bool ok = residual <= tolerance;
        checks.push_back({name, residual, tolerance, ok, note});
        pass = pass && ok;
    }
    void add_flag(const std::string& name, bool ok, double residual, double tolerance,
                  const std::string& note = {}) {
        checks.push_back({name, residual, tolerance, ok, note});
        pass = pass && ok;
    }
};

// CSV columns are fixed; floats are %.12g; the file ends with a newline.
inline void emit_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("emit_csv: cannot open " + path);
    out << "t,variance,variance_rate,rho,diam_T,diam_U,comm1_max,comm2_max,"
           "dissipation1,dissipation2\n";
    char buf[64];
    auto put = [&](double v, bool last) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        out << buf << (last ? '\n' : ',');
    };
    for (const DiagnosticsRecord& r : traj.records) {
        put(r.t, false);
        put(r.variance, false);
        put(r.variance_rate, false);
        put(r.rho, false);
        put(r.diam_t, false);
        put(r.diam_u, false);
        put(r.comm1_max, false);
        put(r.comm2_max, false);
        put(r.dissipation1, false);
        put(r.dissipation2, true);
    }
    if (!out) throw io_error("emit_csv: write failure on " + path);
}

inline void emit_json(const ScenarioReport& report, const std::string& path) {
    nlohmann::json j;
    j["scenario"] = report.scenario;
    j["pass"] = report.pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : report.config_echo) cfg[k] = v;
    j["config"] = cfg;
    std::ofstream out(path);
    if (!out) throw io_error("emit_json: cannot open " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("emit_json: write failure on " + path);
}

// output.path resolved against $LOHE_OUTPUT_DIR when relative or absent.
inline std::string resolve_output_path(const RunConfig& cfg, const std::string& fallback) {
    std::string base = cfg.out_path.empty() ? fallback : cfg.out_path;
    if (!base.empty() && base.front() == '/') return base;
    if (const char* dir = std::getenv("LOHE_OUTPUT_DIR"); dir && *dir)
        return std::string(dir) + "/" + base;
    return base;
}

// ---- ensemble text format (init.kind = file) --------------------------------
// Header "ens N d1 d2", then N * d1 * d2 lines "re im", agents in order,
// entries row-major, %.17g.

inline void write_ensemble(const EnsembleState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("write_ensemble: cannot open " + path);
    out << "ens " << state.size() << ' ' << state.d1() << ' ' << state.d2() << '\n';
    char buf[96];
    for (const CMat& a : state.agents)
        for (const cplx& z : a.entries) {
            std::snprintf(buf, sizeof(buf), "%.17g %.17g", z.real(), z.imag());
            out << buf << '\n';
        }
    if (!out) throw io_error("write_ensemble: write failure on " + path);
}

inline EnsembleState read_ensemble(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("read_ensemble: cannot open " + path);
    std::string tag;
    int n = 0, d1 = 0, d2 = 0;
    if (!(in >> tag >> n >> d1 >> d2) || tag != "ens" || n < 1 || d1 < 1 || d2 < 1)
        throw parse_error("read_ensemble: bad header in " + path);
    std::vector<CMat> agents;
    agents.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        CMat m(d1, d2);
        for (cplx& z : m.entries) {
            double re, im;
            if (!(in >> re >> im)) throw parse_error("read_ensemble: truncated " + path);
            z = cplx(re, im);
        }
        agents.push_back(std::move(m));
    }
    return EnsembleState::make(std::move(agents));
}

// ---- builders ----------------------------------------------------------------

namespace detail {

inline CMat inline_matrix(const std::string& key, const std::vector<cplx>& raw, int r, int c) {
    if (raw.size() != static_cast<std::size_t>(r) * c)
        throw validation_error("config: " + key + " must list " + std::to_string(r * c) +
                               " complex entries");
    return CMat(r, c, raw);
}

}  // namespace detail

inline FreeFlowSpec build_flow(const RunConfig& cfg) {
    if (cfg.flow_kind == "zero") return ZeroFlow{};
    if (cfg.flow_kind == "left") {
        CMat h = cfg.has_flow_h ? detail::inline_matrix("free_flow.h", cfg.flow_h, cfg.d1, cfg.d1)
                                : random_hermitian(cfg.d1, cfg.flow_scale, cfg.flow_seed);
        return LeftFlow{{std::move(h)}};
    }
    if (cfg.flow_kind == "bilateral") {
        if (cfg.has_flow_b && cfg.has_flow_c)
            return BilateralFlow{detail::inline_matrix("free_flow.b", cfg.flow_b, cfg.d1, cfg.d1),
                                 detail::inline_matrix("free_flow.c", cfg.flow_c, cfg.d2, cfg.d2)};
        Rng rng(cfg.flow_seed);
        CMat b = random_skew_hermitian(cfg.d1, cfg.flow_scale, rng);
        CMat c = random_skew_hermitian(cfg.d2, cfg.flow_scale, rng);
        return BilateralFlow{std::move(b), std::move(c)};
    }
    if (cfg.flow_kind == "general") {
        if (!cfg.flow_tensor_path.empty()) {
            R4Tensor a = read_r4(cfg.flow_tensor_path);
            return GeneralFlow{{std::move(a)}};
        }
        return GeneralFlow{{random_skew_r4(cfg.d1, cfg.d2, cfg.flow_scale, cfg.flow_seed)}};
    }
    // unitary_left
    if (cfg.has_flow_b)
        return UnitaryLeftFlow{
            {detail::inline_matrix("free_flow.b", cfg.flow_b, cfg.d1, cfg.d1)}};
    Rng rng(cfg.flow_seed);
    UnitaryLeftFlow f;
    f.b.reserve(static_cast<std::size_t>(cfg.n_agents));
    for (int i = 0; i < cfg.n_agents; ++i)
        f.b.push_back(random_skew_hermitian(cfg.d1, cfg.flow_scale, rng));
    return f;
}

// Unitaries clustered around a Haar anchor: U_i = U0 expm(spread K_i).
inline std::vector<CMat> clustered_unitaries(int d, int n, double spread, Rng& rng) {
    const CMat anchor = haar_unitary(d, rng);
    std::vector<CMat> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const CMat k = random_skew_hermitian(d, 1.0, rng);
        out.push_back(matmul(anchor, matrix_exp(k, spread)));
    }
    return out;
}

// SVD-structured initial data: T_i = U_i Sigma V* with shared Haar V and the
// lambda^2 list renormalized so every agent has unit Frobenius norm.
struct SvdInitialData {
    std::vector<CMat> u0;
    CMat sigma;            // d1 x d2
    CMat v;                // d2 x d2
    std::vector<double> lambda;      // normalized singular values, length min(d1,d2)
    std::vector<double> lambda_sq;   // normalized lambda^2
    EnsembleState t0;
};

inline SvdInitialData build_svd_initial(const RunConfig& cfg) {
    SvdInitialData out;
    Rng rng(cfg.seed);
    if (cfg.init_spread >= 0.0)
        out.u0 = clustered_unitaries(cfg.d1, cfg.n_agents, cfg.init_spread, rng);
    else
        for (int i = 0; i < cfg.n_agents; ++i) out.u0.push_back(haar_unitary(cfg.d1, rng));
    out.v = haar_unitary(cfg.d2, rng);

    const int nsv = std::min(cfg.d1, cfg.d2);
    if (static_cast<int>(cfg.lambda2.size()) < nsv)
        throw validation_error("config: frustration.lambda2 must list at least min(d1,d2) values");
    double sum = 0.0;
    for (int k = 0; k < nsv; ++k) sum += cfg.lambda2[k];
    if (!(sum > 0.0)) throw validation_error("config: lambda2 must have positive sum");
    out.sigma = CMat(cfg.d1, cfg.d2);
    for (int k = 0; k < nsv; ++k) {
        out.lambda_sq.push_back(cfg.lambda2[k] / sum);
        out.lambda.push_back(std::sqrt(out.lambda_sq.back()));
        out.sigma(k, k) = out.lambda.back();
    }
    const CMat v_star = hconj(out.v);
    std::vector<CMat> agents;
    agents.reserve(out.u0.size());
    for (const CMat& u : out.u0) agents.push_back(matmul(matmul(u, out.sigma), v_star));
    out.t0 = EnsembleState::make(std::move(agents));
    return out;
}

inline EnsembleState build_initial(const RunConfig& cfg) {
    if (cfg.init_kind == "file") return read_ensemble(cfg.init_path);
    Rng rng(cfg.seed);
    if (cfg.variant == "frustrated_unitary") {
        std::vector<CMat> agents =
            cfg.init_spread >= 0.0
                ? clustered_unitaries(cfg.d1, cfg.n_agents, cfg.init_spread, rng)
                : [&] {
                      std::vector<CMat> u;
                      for (int i = 0; i < cfg.n_agents; ++i)
                          u.push_back(haar_unitary(cfg.d1, rng));
                      return u;
                  }();
        return EnsembleState::make(std::move(agents));
    }
    if (cfg.init_kind == "haar_svd") return build_svd_initial(cfg).t0;
    std::vector<CMat> agents;
    agents.reserve(static_cast<std::size_t>(cfg.n_agents));
    for (int i = 0; i < cfg.n_agents; ++i)
        agents.push_back(random_normalized_matrix(cfg.d1, cfg.d2, rng));
    return EnsembleState::make(std::move(agents));
}

inline CMat diag_matrix(std::span<const double> values) {
    CMat d(static_cast<int>(values.size()), static_cast<int>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k) d(static_cast<int>(k), static_cast<int>(k)) = values[k];
    return d;
}

inline CMat sqrt_diag_matrix(std::span<const double> values) {
    CMat d(static_cast<int>(values.size()), static_cast<int>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k)
        d(static_cast<int>(k), static_cast<int>(k)) = std::sqrt(std::max(values[k], 0.0));
    return d;
}

// ---- scenarios ----------------------------------------------------------------

namespace detail {

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::vector<double> agent_norms(const EnsembleState& s) {
    std::vector<double> out;
    out.reserve(s.size());
    for (const CMat& a : s.agents) out.push_back(frob_norm(a));
    return out;
}

}  // namespace detail

// Integrates the configured variant, emits the time series, and evaluates the
// conservation-law battery.
inline ScenarioReport run_simulate(const RunConfig& cfg) {
    detail::StopWatch watch;
    ScenarioReport report;
    report.scenario = "simulate";
    report.config_echo = cfg.echo();

    const FreeFlowSpec flow = build_flow(cfg);
    const EnsembleState initial = build_initial(cfg);
    IntegratorConfig icfg{cfg.dt, cfg.t_end, cfg.sample_every, cfg.renormalize};

    RhsFn rhs;
    DiagFn diag;
    CMat frustration, sqrt_frustration;
    const CouplingParams params{cfg.k01, cfg.k10, cfg.k00, cfg.k11};
    if (cfg.variant == "generalized") {
        validate_flow(flow, cfg.d1, cfg.d2, initial.size());
        rhs = [&](const EnsembleState& s) { return rhs_generalized(s, params, flow); };
        diag = [&](double t, const EnsembleState& s) {
            return standard_diagnostics(t, s, cfg.k01, cfg.k10);
        };
    } else if (cfg.variant == "full_rank2") {
        validate_flow(flow, cfg.d1, cfg.d2, initial.size());
        rhs = [&](const EnsembleState& s) { return rhs_full_rank2(s, params, flow); };
        diag = [&](double t, const EnsembleState& s) {
            return standard_diagnostics(t, s, cfg.k01, cfg.k10);
        };
    } else if (cfg.variant == "frustrated_unitary") {
        validate_flow(flow, cfg.d1, cfg.d1, initial.size());
        validate_unitary_ensemble(initial);
        frustration = diag_matrix(cfg.lambda2);
        sqrt_frustration = sqrt_diag_matrix(cfg.lambda2);
        rhs = [&](const EnsembleState& s) {
            return rhs_frustrated_unitary(s, frustration, cfg.k01, flow);
        };
        diag = [&](double t, const EnsembleState& s) {
            return frustrated_diagnostics(t, s, sqrt_frustration, cfg.k01);
        };
    } else {  // sphere
        std::vector<CMat> omega;
        if (const auto* ul = std::get_if<UnitaryLeftFlow>(&flow)) omega = ul->b;
        rhs = [&, omega](const EnsembleState& s) { return rhs_sphere(s, cfg.k01, cfg.k10, omega); };
        diag = [&](double t, const EnsembleState& s) {
            return standard_diagnostics(t, s, cfg.k01, cfg.k10);
        };
    }

    Trajectory traj = integrate(initial, rhs, icfg, diag);
    accumulate_dissipation(traj, cfg.k01, cfg.variant == "frustrated_unitary" ? 0.0 : cfg.k10);

    // Battery: norm conservation.
    const std::vector<double> norms0 = detail::agent_norms(traj.states.front());
    double norm_drift = 0.0;
    for (const EnsembleState& s : traj.states) {
        const std::vector<double> n = detail::agent_norms(s);
        for (std::size_t j = 0; j < n.size(); ++j)
            norm_drift = std::max(norm_drift, std::abs(n[j] - norms0[j]));
    }
    report.add("frobenius-norm-conservation", norm_drift, cfg.renormalize ? 1e-12 : 1e-7);

    // Variance is nonincreasing when every agent sees the same free flow
    // (per-agent flows inject energy differences and the law does not apply).
    const bool shared_flow = cfg.flow_kind == "zero" || cfg.flow_kind == "left" ||
                             cfg.flow_kind == "bilateral" || cfg.flow_kind == "general" ||
                             (cfg.flow_kind == "unitary_left" && cfg.has_flow_b);
    if (shared_flow) {
        double max_increase = 0.0;
        for (std::size_t k = 1; k < traj.records.size(); ++k)
            max_increase =
                std::max(max_increase, traj.records[k].variance - traj.records[k - 1].variance);
        report.add("variance-monotone", max_increase, 1e-10);
    }

    // V = 1 - rho^2 is pure algebra for unit-norm ensembles (all matrix
    // variants conserve unit norms; the frustrated states carry trace(D)).
    if (cfg.variant != "frustrated_unitary") {
        double id_resid = 0.0;
        for (const DiagnosticsRecord& r : traj.records)
            id_resid = std::max(id_resid, std::abs(r.variance - (1.0 - r.rho * r.rho)));
        report.add("variance-identity", id_resid, 1e-10);
    }

    // Singular values of every agent are constant for flows that conserve or
    // commute with the Gram matrix; a generic rank-4 flow only preserves norms.
    if (cfg.variant == "generalized" &&
        (cfg.flow_kind == "zero" || cfg.flow_kind == "left" || cfg.flow_kind == "bilateral")) {
        const std::size_t stride = std::max<std::size_t>(1, traj.states.size() / 200);
        std::vector<std::vector<double>> sv0;
        for (const CMat& a : traj.states.front().agents) sv0.push_back(singular_values(a));
        double sv_drift = 0.0;
        for (std::size_t k = 0; k < traj.states.size(); k += stride) {
            for (std::size_t j = 0; j < traj.states[k].agents.size(); ++j) {
                const std::vector<double> sv = singular_values(traj.states[k].agents[j]);
                for (std::size_t m = 0; m < sv.size(); ++m)
                    sv_drift = std::max(sv_drift, std::abs(sv[m] - sv0[j][m]));
            }
        }
        report.add("isospectrality", sv_drift, 1e-6);
    }
    if (cfg.variant == "frustrated_unitary") {
        double udrift = 0.0;
        for (const EnsembleState& s : traj.states)
            for (const CMat& u : s.agents) udrift = std::max(udrift, unitary_defect(u));
        report.add("unitarity-drift", udrift, 1e-6);
    }

    if (cfg.out_format == "csv")
        emit_csv(traj, resolve_output_path(cfg, "simulate.csv"));
    else
        emit_json(report, resolve_output_path(cfg, "simulate.json"));
    report.wall_seconds = watch.seconds();
    return report;
}

// Splitting check: condition residual on the sample grid, then direct
// integration against the composed linear-after-nonlinear solution.
inline ScenarioReport run_split_check(const RunConfig& cfg, double condition_tol = 1e-8,
                                      double compose_tol = 1e-6) {
    detail::StopWatch watch;
    ScenarioReport report;
    report.scenario = "split-check";
    report.config_echo = cfg.echo();

    const FreeFlowSpec flow = build_flow(cfg);
    R4Tensor a;
    if (const auto* lf = std::get_if<LeftFlow>(&flow)) {
        if (lf->h.size() != 1)
            throw validation_error("split-check: free flow must be shared across agents");
        a = build_left_free_flow(lf->h.front(), cfg.d2);
    } else if (const auto* bf = std::get_if<BilateralFlow>(&flow)) {
        a = build_bilateral_free_flow(bf->b, bf->c);
    } else if (const auto* gf = std::get_if<GeneralFlow>(&flow)) {
        if (gf->a.size() != 1)
            throw validation_error("split-check: free flow must be shared across agents");
        a = gf->a.front();
    } else {
        throw validation_error("split-check: free_flow.kind must be left, bilateral or general");
    }

    const auto [holds, residual] = splitting_condition_check(a, condition_tol);
    report.add_flag("splitting-condition", holds, residual, condition_tol,
                    holds ? "" : "flow does not satisfy the splitting criterion");
    if (holds) {
        const EnsembleState initial = build_initial(cfg);
        const CouplingParams params{cfg.k01, cfg.k10, 0.0, 0.0};
        const FreeFlowSpec direct_flow = GeneralFlow{{a}};
        IntegratorConfig icfg{cfg.dt, cfg.t_end, cfg.sample_every, false};
        Trajectory direct = integrate(
            initial,
            [&](const EnsembleState& s) { return rhs_generalized(s, params, direct_flow); },
            icfg);
        Trajectory nonlinear = integrate(
            initial,
            [&](const EnsembleState& s) { return rhs_generalized(s, params, ZeroFlow{}); },
            icfg);
        const std::vector<EnsembleState> composed =
            splitting_compose(a, nonlinear, nonlinear.times);
        double disc = 0.0;
        for (std::size_t k = 0; k < composed.size(); ++k)
            for (std::size_t j = 0; j < composed[k].size(); ++j)
                disc = std::max(disc, frob_norm(sub(direct.states[k].agents[j],
                                                    composed[k].agents[j])));
        report.add("splitting-compose", disc, compose_tol);
    }

    if (cfg.out_format == "json") emit_json(report, resolve_output_path(cfg, "split_check.json"));
    report.wall_seconds = watch.seconds();
    return report;
}

// Integrates the reduced matrix model and the frustrated unitary model from
// matched SVD initial data, then compares the reconstruction U_i Sigma V*.
inline ScenarioReport run_svd_check(const RunConfig& cfg, double recon_tol = 1e-6) {
    detail::StopWatch watch;
    ScenarioReport report;
    report.scenario = "svd-check";
    report.config_echo = cfg.echo();

    if (cfg.k10 != 0.0)
        throw validation_error("svd-check: requires coupling.k10 = 0 (single-coupling model)");
    if (!cfg.has_lambda2) throw validation_error("svd-check: requires frustration.lambda2");

    const SvdInitialData init = build_svd_initial(cfg);
    // Shared-Gram requirement on the initial data.
    {
        const CMat g0 = matmul(hconj(init.t0.agents.front()), init.t0.agents.front());
        for (const CMat& t : init.t0.agents)
            if (frob_norm(sub(matmul(hconj(t), t), g0)) > 1e-10)
                throw validation_error(
                    "svd-check: initial Gram matrices T_i(0)* T_i(0) must coincide");
    }

    std::vector<double> lambda_sq_d1(static_cast<std::size_t>(cfg.d1), 0.0);
    for (std::size_t k = 0; k < init.lambda_sq.size(); ++k) lambda_sq_d1[k] = init.lambda_sq[k];
    const CMat frustration = diag_matrix(lambda_sq_d1);

    const CouplingParams params{cfg.k01, 0.0, 0.0, 0.0};
    IntegratorConfig icfg{cfg.dt, cfg.t_end, cfg.sample_every, false};
    Trajectory t_traj = integrate(
        init.t0, [&](const EnsembleState& s) { return rhs_generalized(s, params, ZeroFlow{}); },
        icfg, [&](double t, const EnsembleState& s) {
            return standard_diagnostics(t, s, cfg.k01, 0.0);
        });
    Trajectory u_traj = integrate(
        EnsembleState::make(init.u0),
        [&](const EnsembleState& s) {
            return rhs_frustrated_unitary(s, frustration, cfg.k01, ZeroFlow{});
        },
        icfg);

    const CMat v_star = hconj(init.v);
    std::vector<double> lambda_ext(static_cast<std::size_t>(cfg.d1), 0.0);
    for (std::size_t k = 0; k < init.lambda.size(); ++k) lambda_ext[k] = init.lambda[k];
    double disc = 0.0, lower_v = 0.0, upper_v = 0.0;
    for (std::size_t k = 0; k < t_traj.states.size(); ++k) {
        for (std::size_t j = 0; j < t_traj.states[k].size(); ++j) {
            const CMat recon = matmul(matmul(u_traj.states[k].agents[j], init.sigma), v_star);
            disc = std::max(disc, frob_norm(sub(t_traj.states[k].agents[j], recon)));
        }
        const SandwichResidual sr = sandwich_residual(u_traj.states[k].agents,
                                                     t_traj.states[k].agents, lambda_ext);
        lower_v = std::max(lower_v, sr.lower_violation);
        upper_v = std::max(upper_v, sr.upper_violation);
    }
    report.add("svd-reconstruction", disc, recon_tol);
    report.add("singular-sandwich-lower", lower_v, 1e-9);
    report.add("singular-sandwich-upper", upper_v, 1e-9);

    if (cfg.out_format == "json") emit_json(report, resolve_output_path(cfg, "svd_check.json"));
    report.wall_seconds = watch.seconds();
    return report;
}

// Coupling-strength sweep of the frustrated model against the asymptotic
// trapping bound beta(k1) = 3 D(B) / (4 B k1).
inline ScenarioReport run_kappa_sweep(const RunConfig& cfg, std::vector<double> kappas,
                                      double bound_slack = 0.05) {
    detail::StopWatch watch;
    ScenarioReport report;
    report.scenario = "kappa-sweep";
    report.config_echo = cfg.echo();

    if (cfg.variant != "frustrated_unitary")
        throw validation_error("kappa-sweep: requires model.variant frustrated_unitary");
    if (kappas.empty()) throw validation_error("kappa-sweep: empty kappa list");
    std::sort(kappas.begin(), kappas.end());

    const FreeFlowSpec flow = build_flow(cfg);
    const auto* ul = std::get_if<UnitaryLeftFlow>(&flow);
    if (!ul) throw validation_error("kappa-sweep: requires free_flow.kind unitary_left");
    const EnsembleState initial = build_initial(cfg);
    validate_unitary_ensemble(initial);
    const CMat frustration = diag_matrix(cfg.lambda2);
    const CMat sqrt_frustration = sqrt_diag_matrix(cfg.lambda2);
    const double d_u0 = diameter(initial.agents);

    std::vector<double> tails;
    double max_increase = 0.0;
    for (double kappa : kappas) {
        const AggregationConstants c =
            aggregation_constants(cfg.lambda2, ul->b, kappa);
        const std::string tag = "@k1=" + detail::fmt_double(kappa);
        if (c.script_b <= 0.0 || !c.kappa_threshold || !(kappa > *c.kappa_threshold) ||
            !c.alpha2 || !(d_u0 < *c.alpha2)) {
            report.add_flag("tail-bound" + tag, true, 0.0, 0.0,
                            "hypotheses unmet; point skipped");
            continue;
        }
        IntegratorConfig icfg{cfg.dt, cfg.t_end, cfg.sample_every, false};
        Trajectory traj = integrate(
            initial,
            [&](const EnsembleState& s) {
                return rhs_frustrated_unitary(s, frustration, kappa, flow);
            },
            icfg, [&](double t, const EnsembleState& s) {
                return frustrated_diagnostics(t, s, sqrt_frustration, kappa);
            });
        double tail = 0.0;
        for (std::size_t k = 0; k < traj.times.size(); ++k)
            if (traj.times[k] >= 0.8 * cfg.t_end) tail = std::max(tail, traj.records[k].diam_u);
        // 1e-12 floor: a fully aggregated ensemble never measures exactly zero
        const double bound = practical_bound(c) * (1.0 + bound_slack) + 1e-12;
        report.add("tail-bound" + tag, tail, bound);
        if (!tails.empty()) max_increase = std::max(max_increase, tail - tails.back());
        tails.push_back(tail);
    }
    if (tails.size() >= 2) report.add("tail-monotone-in-k1", max_increase, 1e-12);

    if (cfg.out_format == "json") emit_json(report, resolve_output_path(cfg, "kappa_sweep.json"));
    report.wall_seconds = watch.seconds();
    return report;
}

}  // namespace lohe
