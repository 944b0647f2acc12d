#pragma once

#include <optional>
#include <span>

#include "eig.hpp"
#include "model.hpp"

namespace lohe {

// Per-sample scalar diagnostics.
struct DiagnosticsRecord {
    double t = 0.0;
    double variance = 0.0;       // mean squared Frobenius deviation from the centroid
    double variance_rate = 0.0;  // analytic d(variance)/dt, always <= 0
    double rho = 0.0;            // Frobenius norm of the centroid
    double diam_t = 0.0;         // ensemble diameter of the states
    double diam_u = 0.0;         // diameter of the unitary factors, when tracked
    double comm1_max = 0.0;      // max_j ||Tj Tc* - Tc Tj*||_F
    double comm2_max = 0.0;      // max_j ||Tj* Tc - Tc* Tj||_F
    double dissipation1 = 0.0;   // running integral of k1/N sum_j comm1_j^2
    double dissipation2 = 0.0;   // running integral of k2/N sum_j comm2_j^2
    // integrands kept per sample so the running integrals can be accumulated
    double comm1_sq_mean = 0.0;  // (1/N) sum_j comm1_j^2
    double comm2_sq_mean = 0.0;  // (1/N) sum_j comm2_j^2
};

// Deviation mass and centroid norm without the unit-norm requirement.
inline std::pair<double, double> deviation_mass(const EnsembleState& state) {
    const CMat& tc = state.centroid;
    double sum = 0.0;
    for (const CMat& a : state.agents) {
        const double d = frob_norm(sub(a, tc));
        sum += d * d;
    }
    return {sum / static_cast<double>(state.size()), frob_norm(tc)};
}

// Variance functional for unit-norm ensembles; returns (variance, rho) and
// cross-checks the direct sum against 1 - rho^2.
inline std::pair<double, double> variance(const EnsembleState& state) {
    if (state.agents.empty()) throw validation_error("variance: empty ensemble");
    for (const CMat& a : state.agents)
        if (std::abs(frob_norm(a) - 1.0) > 1e-6)
            throw validation_error("variance: agents must have unit Frobenius norm");
    const auto [var, rho] = deviation_mass(state);
    if (std::abs(var - (1.0 - rho * rho)) > 1e-10)
        throw validation_error("variance: direct sum and 1 - rho^2 disagree beyond 1e-10");
    return {var, rho};
}

// Per-agent commutator norms (comm1_j, comm2_j).
inline std::pair<std::vector<double>, std::vector<double>> commutator_norms(
    const EnsembleState& state) {
    const CMat& tc = state.centroid;
    const CMat tc_star = hconj(tc);
    std::vector<double> c1, c2;
    c1.reserve(state.size());
    c2.reserve(state.size());
    for (const CMat& ti : state.agents) {
        const CMat ti_star = hconj(ti);
        c1.push_back(frob_norm(sub(matmul(ti, tc_star), matmul(tc, ti_star))));
        c2.push_back(frob_norm(sub(matmul(ti_star, tc), matmul(tc_star, ti))));
    }
    return {std::move(c1), std::move(c2)};
}

// Analytic variance decay rate:
// -(k1/N) sum ||Tj Tc* - Tc Tj*||^2 - (k2/N) sum ||Tj* Tc - Tc* Tj||^2.
inline double variance_rate(const EnsembleState& state, double k1, double k2) {
    const auto [c1, c2] = commutator_norms(state);
    double s1 = 0.0, s2 = 0.0;
    for (double v : c1) s1 += v * v;
    for (double v : c2) s2 += v * v;
    const double n = static_cast<double>(state.size());
    return -(k1 / n) * s1 - (k2 / n) * s2;
}

// Maximum pairwise Frobenius distance, exact O(N^2) scan.
inline double diameter(std::span<const CMat> mats) {
    if (mats.empty()) throw validation_error("diameter: empty collection");
    double best = 0.0;
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            best = std::max(best, frob_norm(sub(mats[i], mats[j])));
    return best;
}

inline std::pair<std::size_t, std::size_t> diameter_argmax(std::span<const CMat> mats) {
    if (mats.empty()) throw validation_error("diameter: empty collection");
    double best = -1.0;
    std::pair<std::size_t, std::size_t> arg{0, 0};
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            const double d = frob_norm(sub(mats[i], mats[j]));
            if (d > best) {
                best = d;
                arg = {i, j};
            }
        }
    return arg;
}

// Trapezoid-rule accumulation of the kappa-weighted commutator integrals over
// the sampled records. Returns the two totals.
inline std::pair<double, double> dissipation_integrals(std::span<const double> times,
                                                       std::span<const DiagnosticsRecord> records,
                                                       double k1, double k2) {
    if (times.size() != records.size() || times.empty())
        throw validation_error("dissipation_integrals: missing diagnostics");
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double h = times[k + 1] - times[k];
        d1 += 0.5 * h * (k1 * records[k].comm1_sq_mean + k1 * records[k + 1].comm1_sq_mean);
        d2 += 0.5 * h * (k2 * records[k].comm2_sq_mean + k2 * records[k + 1].comm2_sq_mean);
    }
    return {d1, d2};
}

// Derived constants of the diameter differential inequality. Optional fields
// are left empty when the hypotheses that define them fail (script_b <= 0, or
// k1 at or below the root threshold).
struct AggregationConstants {
    double mean_l2 = 0.0;   // <lambda^2>
    double delta_l2 = 0.0;  // max_k |lambda_k^2 - <lambda^2>|
    double script_a = 0.0;  // <lambda^2> + delta
    double script_b = 0.0;  // <lambda^2> - delta
    double d_of_b = 0.0;    // ensemble diameter of the B_i
    double k1 = 0.0;
    std::optional<double> kappa_threshold;  // D(B) sqrt(27 A / (32 B^3))
    std::optional<double> x_m;              // sqrt(2B / 3A), argmin of g
    std::optional<double> beta;             // 3 D(B) / (4 B k1)
    std::optional<double> alpha1;           // roots of g(x) = A x^3 - 2 B x + D(B)/k1
    std::optional<double> alpha2;
};

namespace detail {

// Bisection for a sign change of g on [lo, hi]; endpoints that are exact
// roots are returned as-is.
template <class G>
inline std::optional<double> bisect_root(G&& g, double lo, double hi, double tol) {
    double flo = g(lo), fhi = g(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) return std::nullopt;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

inline AggregationConstants aggregation_constants(std::span<const double> lambda_sq,
                                                  std::span<const CMat> b_list, double k1) {
    if (lambda_sq.empty()) throw validation_error("aggregation_constants: empty lambda^2 list");
    for (double v : lambda_sq)
        if (!(v >= 0.0)) throw validation_error("aggregation_constants: lambda^2 must be >= 0");
    AggregationConstants c;
    c.k1 = k1;
    double sum = 0.0;
    for (double v : lambda_sq) sum += v;
    c.mean_l2 = sum / static_cast<double>(lambda_sq.size());
    for (double v : lambda_sq) c.delta_l2 = std::max(c.delta_l2, std::abs(v - c.mean_l2));
    c.script_a = c.mean_l2 + c.delta_l2;
    c.script_b = c.mean_l2 - c.delta_l2;
    c.d_of_b = b_list.empty() ? 0.0 : diameter(b_list);
    if (c.script_b <= 0.0) return c;  // envelope machinery unavailable

    c.x_m = std::sqrt(2.0 * c.script_b / (3.0 * c.script_a));
    c.kappa_threshold =
        c.d_of_b * std::sqrt(27.0 * c.script_a / (32.0 * c.script_b * c.script_b * c.script_b));
    if (k1 > 0.0) c.beta = 3.0 * c.d_of_b / (4.0 * c.script_b * k1);
    if (k1 > *c.kappa_threshold) {
        auto g = [&](double x) { return c.script_a * x * x * x - 2.0 * c.script_b * x + c.d_of_b / k1; };
        const double x_max = std::max(2.0, 2.0 * std::sqrt(2.0 * c.script_b / c.script_a));
        c.alpha1 = detail::bisect_root(g, 0.0, *c.x_m, 1e-12);
        c.alpha2 = detail::bisect_root(g, *c.x_m, x_max, 1e-12);
    }
    return c;
}

// Two-sided envelopes for the diameter of a homogeneous frustrated ensemble,
// with X0 = d_u0^2:
//   lower = sqrt(2 X0 / (X0 + (2 - X0) e^{4 k1 A t}))
//   upper = sqrt((2B/A) X0 / (X0 + (2B/A - X0) e^{4 k1 B t})).
inline std::pair<double, double> aggregation_envelope(double d_u0, const AggregationConstants& c,
                                                    double k1, double t) {
    if (c.script_b <= 0.0)
        throw validation_error("aggregation_envelope: requires script_b > 0");
    const double cap = 2.0 * c.script_b / c.script_a;
    const double x0 = d_u0 * d_u0;
    if (!(x0 < cap))
        throw validation_error("aggregation_envelope: requires d_u0^2 < 2B/A strictly");
    if (x0 == 0.0) return {0.0, 0.0};
    const double lower =
        std::sqrt(2.0 * x0 / (x0 + (2.0 - x0) * std::exp(4.0 * k1 * c.script_a * t)));
    const double upper =
        std::sqrt(cap * x0 / (x0 + (cap - x0) * std::exp(4.0 * k1 * c.script_b * t)));
    return {lower, upper};
}

// Asymptotic trapping bound beta = 3 D(B) / (4 B k1); valid above the root
// threshold, where alpha1 < beta is guaranteed.
inline double practical_bound(const AggregationConstants& c) {
    if (c.script_b <= 0.0) throw validation_error("practical_bound: requires script_b > 0");
    if (!c.kappa_threshold || !(c.k1 > *c.kappa_threshold))
        throw validation_error("practical_bound: requires k1 above the kappa threshold");
    return 3.0 * c.d_of_b / (4.0 * c.script_b * c.k1);
}

// Violations of (min_k lambda_k) ||Ui - Uj|| <= ||Ti - Tj|| <= (max_k lambda_k) ||Ui - Uj||
// over all pairs. The lambda vector is extended by zeros to length d1 (the
// diagonal-frustration convention), so rank-deficient or tall shapes keep a
// trivially valid lower bound.
struct SandwichResidual {
    double lower_violation = 0.0;  // max over pairs of (min lam * dU - dT)+
    double upper_violation = 0.0;  // max over pairs of (dT - max lam * dU)+
};

inline SandwichResidual sandwich_residual(std::span<const CMat> u, std::span<const CMat> t,
                                         std::span<const double> lambda) {
    if (u.size() != t.size() || u.empty())
        throw validation_error("sandwich_residual: mismatched ensembles");
    const int d1 = u.front().rows;
    double lam_min = std::numeric_limits<double>::infinity(), lam_max = 0.0;
    for (int k = 0; k < d1; ++k) {
        const double v = k < static_cast<int>(lambda.size()) ? lambda[k] : 0.0;
        lam_min = std::min(lam_min, v);
        lam_max = std::max(lam_max, v);
    }
    SandwichResidual r;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const double du = frob_norm(sub(u[i], u[j]));
            const double dt = frob_norm(sub(t[i], t[j]));
            r.lower_violation = std::max(r.lower_violation, lam_min * du - dt);
            r.upper_violation = std::max(r.upper_violation, dt - lam_max * du);
        }
    return r;
}

// Discrete check of the diameter differential inequality along a frustrated
// trajectory: centered differences of D(U) must lie within
//   [-2 k1 A D + k1 A D^3 - c_b D(B) - eps, -2 k1 B D + k1 A D^3 + c_b D(B) + eps]
// with eps = 10 dt^2 + 1e-6. Samples where the argmax pair switches between
// the two neighbours are skipped (D is nonsmooth there).
struct DiameterInequalityReport {
    int checked = 0;
    int skipped = 0;
    int violations = 0;
    double max_excess = 0.0;
};

inline DiameterInequalityReport check_diameter_inequality(
    std::span<const double> times, std::span<const EnsembleState> u_states, double k1,
    double script_a, double script_b, double d_of_b, double dt, double c_b = 1.0) {
    if (times.size() != u_states.size() || times.size() < 3)
        throw validation_error("check_diameter_inequality: need at least three samples");
    const double eps = 10.0 * dt * dt + 1e-6;
    DiameterInequalityReport rep;
    std::vector<double> diam(times.size());
    std::vector<std::pair<std::size_t, std::size_t>> arg(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        diam[k] = diameter(u_states[k].agents);
        arg[k] = diameter_argmax(u_states[k].agents);
    }
    for (std::size_t k = 1; k + 1 < times.size(); ++k) {
        if (arg[k - 1] != arg[k + 1] || arg[k - 1] != arg[k]) {
            ++rep.skipped;
            continue;
        }
        const double h = times[k + 1] - times[k - 1];
        const double rate = (diam[k + 1] - diam[k - 1]) / h;
        const double d = diam[k];
        const double cubic = k1 * script_a * d * d * d;
        const double lo = -2.0 * k1 * script_a * d + cubic - c_b * d_of_b - eps;
        const double hi = -2.0 * k1 * script_b * d + cubic + c_b * d_of_b + eps;
        ++rep.checked;
        if (rate < lo || rate > hi) {
            ++rep.violations;
            rep.max_excess = std::max(rep.max_excess, std::max(lo - rate, rate - hi));
        }
    }
    return rep;
}

// Diagnostics for a unit-norm matrix ensemble.
inline DiagnosticsRecord standard_diagnostics(double t, const EnsembleState& state, double k1,
                                              double k2) {
    DiagnosticsRecord rec;
    rec.t = t;
    const auto [var, rho] = deviation_mass(state);
    rec.variance = var;
    rec.rho = rho;
    const auto [c1, c2] = commutator_norms(state);
    double s1 = 0.0, s2 = 0.0;
    for (double v : c1) {
        rec.comm1_max = std::max(rec.comm1_max, v);
        s1 += v * v;
    }
    for (double v : c2) {
        rec.comm2_max = std::max(rec.comm2_max, v);
        s2 += v * v;
    }
    const double n = static_cast<double>(state.size());
    rec.comm1_sq_mean = s1 / n;
    rec.comm2_sq_mean = s2 / n;
    rec.variance_rate = -k1 * rec.comm1_sq_mean - k2 * rec.comm2_sq_mean;
    rec.diam_t = diameter(state.agents);
    return rec;
}

// Diagnostics for a frustrated unitary ensemble: the matrix diagnostics are
// taken on X_i = U_i sqrt(D) (so variance, rho and the commutators match the
// equivalent matrix ensemble), diam_u on the raw unitaries.
inline DiagnosticsRecord frustrated_diagnostics(double t, const EnsembleState& u_state,
                                                const CMat& sqrt_d, double k1) {
    std::vector<CMat> x;
    x.reserve(u_state.size());
    for (const CMat& u : u_state.agents) x.push_back(matmul(u, sqrt_d));
    EnsembleState xs = EnsembleState::make(std::move(x));
    DiagnosticsRecord rec = standard_diagnostics(t, xs, k1, 0.0);
    rec.diam_u = diameter(u_state.agents);
    return rec;
}

}  // namespace lohe
