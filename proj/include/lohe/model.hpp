#pragma once

#include <span>
#include <variant>

#include "cmat.hpp"
#include "r4tensor.hpp"

namespace lohe {

// Coupling strengths of the rank-2 aggregation model. k01 and k10 are the
// cubic matrix couplings (kappa_1, kappa_2); k00 and k11 are the trace-type
// couplings of the full rank-2 system.
struct CouplingParams {
    double k01 = 0.0;
    double k10 = 0.0;
    double k00 = 0.0;
    double k11 = 0.0;

    bool finite_nonnegative() const {
        for (double v : {k01, k10, k00, k11})
            if (!(v >= 0.0) || !std::isfinite(v)) return false;
        return true;
    }
};

// Free-flow term variants. Per-agent lists hold either one shared matrix or
// one per agent.
struct ZeroFlow {};
struct LeftFlow {
    std::vector<CMat> h;  // hermitian; flow acts as T -> -i H T
};
struct BilateralFlow {
    CMat b;  // skew-hermitian d1 x d1
    CMat c;  // skew-hermitian d2 x d2; flow acts as T -> B T + T C^T
};
struct GeneralFlow {
    std::vector<R4Tensor> a;  // skew-hermitian rank-4 tensors
};
struct UnitaryLeftFlow {
    std::vector<CMat> b;  // skew-hermitian; flow acts as U -> B U
};
using FreeFlowSpec = std::variant<ZeroFlow, LeftFlow, BilateralFlow, GeneralFlow, UnitaryLeftFlow>;

// Ordered collection of same-shape agents with the cached ensemble mean.
struct EnsembleState {
    std::vector<CMat> agents;
    CMat centroid;

    static EnsembleState make(std::vector<CMat> agents_in);
    void refresh_centroid();
    std::size_t size() const { return agents.size(); }
    int d1() const { return agents.empty() ? 0 : agents.front().rows; }
    int d2() const { return agents.empty() ? 0 : agents.front().cols; }
};

inline CMat centroid_of(std::span<const CMat> agents) {
    if (agents.empty()) throw validation_error("centroid: empty ensemble");
    CMat sum(agents.front().rows, agents.front().cols);
    for (const CMat& a : agents) {
        if (!a.same_shape(sum)) throw dimension_error("centroid: agents differ in shape");
        for (std::size_t i = 0; i < sum.entries.size(); ++i) sum.entries[i] += a.entries[i];
    }
    const double inv = 1.0 / static_cast<double>(agents.size());
    for (cplx& z : sum.entries) z *= inv;
    return sum;
}

inline EnsembleState EnsembleState::make(std::vector<CMat> agents_in) {
    EnsembleState s;
    s.agents = std::move(agents_in);
    s.refresh_centroid();
    return s;
}

inline void EnsembleState::refresh_centroid() {
    centroid = centroid_of(agents);
}

namespace detail {

template <class T>
inline const T& per_agent(const std::vector<T>& list, std::size_t i) {
    return list.size() == 1 ? list.front() : list[i];
}

}  // namespace detail

// Validates dimensions and the hermitian/skew structure of a flow spec.
inline void validate_flow(const FreeFlowSpec& flow, int d1, int d2, std::size_t n) {
    std::visit(
        [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, ZeroFlow>) {
                (void)f;
            } else if constexpr (std::is_same_v<F, LeftFlow>) {
                if (f.h.empty() || (f.h.size() != 1 && f.h.size() != n))
                    throw validation_error("flow: need one shared H or one per agent");
                for (const CMat& h : f.h) {
                    if (h.rows != d1 || h.cols != d1)
                        throw dimension_error("flow: H must be d1 x d1");
                    if (hermitian_defect(h) > 1e-12)
                        throw validation_error("flow: H not hermitian within 1e-12");
                }
            } else if constexpr (std::is_same_v<F, BilateralFlow>) {
                if (f.b.rows != d1 || f.b.cols != d1 || f.c.rows != d2 || f.c.cols != d2)
                    throw dimension_error("flow: B must be d1 x d1 and C d2 x d2");
                if (skew_hermitian_defect(f.b) > 1e-12 || skew_hermitian_defect(f.c) > 1e-12)
                    throw validation_error("flow: B, C not skew-hermitian within 1e-12");
            } else if constexpr (std::is_same_v<F, GeneralFlow>) {
                if (f.a.empty() || (f.a.size() != 1 && f.a.size() != n))
                    throw validation_error("flow: need one shared tensor or one per agent");
                for (const R4Tensor& a : f.a) {
                    if (a.d1 != d1 || a.d2 != d2)
                        throw dimension_error("flow: tensor dims must match agent shape");
                    if (skew_hermitian_defect(a) > 1e-12)
                        throw validation_error("flow: tensor not skew-hermitian within 1e-12");
                }
            } else if constexpr (std::is_same_v<F, UnitaryLeftFlow>) {
                if (f.b.empty() || (f.b.size() != 1 && f.b.size() != n))
                    throw validation_error("flow: need one shared B or one per agent");
                for (const CMat& b : f.b) {
                    if (b.rows != d1 || b.cols != d1)
                        throw dimension_error("flow: B must be d1 x d1");
                    if (skew_hermitian_defect(b) > 1e-12)
                        throw validation_error("flow: B not skew-hermitian within 1e-12");
                }
            }
        },
        flow);
}

inline CMat apply_flow(const FreeFlowSpec& flow, std::size_t agent, const CMat& t) {
    return std::visit(
        [&](const auto& f) -> CMat {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, ZeroFlow>) {
                return CMat(t.rows, t.cols);
            } else if constexpr (std::is_same_v<F, LeftFlow>) {
                return scale(cplx(0.0, -1.0), matmul(detail::per_agent(f.h, agent), t));
            } else if constexpr (std::is_same_v<F, BilateralFlow>) {
                return add(matmul(f.b, t), matmul(t, transpose(f.c)));
            } else if constexpr (std::is_same_v<F, GeneralFlow>) {
                return contract4(detail::per_agent(f.a, agent), t);
            } else {
                return matmul(detail::per_agent(f.b, agent), t);
            }
        },
        flow);
}

// kappa1 (Tc Ti* Ti - Ti Tc* Ti) + kappa2 (Ti Ti* Tc - Ti Tc* Ti), products
// grouped left to right. rhs_sphere reuses this path so the d2 = 1 reduction
// agrees bit-for-bit.
inline CMat cubic_coupling(const CMat& tc, const CMat& ti, double k1, double k2) {
    const CMat ti_star = hconj(ti);
    const CMat tc_star = hconj(tc);
    const CMat mid = matmul(matmul(ti, tc_star), ti);  // Ti Tc* Ti
    CMat out(ti.rows, ti.cols);
    if (k1 != 0.0) out = add(out, scale(k1, sub(matmul(matmul(tc, ti_star), ti), mid)));
    if (k2 != 0.0) out = add(out, scale(k2, sub(matmul(matmul(ti, ti_star), tc), mid)));
    return out;
}

// dT_i/dt = A_i T_i + kappa1 (Tc Ti* Ti - Ti Tc* Ti) + kappa2 (Ti Ti* Tc - Ti Tc* Ti)
inline std::vector<CMat> rhs_generalized(const EnsembleState& state,
                                         const CouplingParams& params,
                                         const FreeFlowSpec& flow) {
    if (params.k00 != 0.0 || params.k11 != 0.0)
        throw validation_error("rhs_generalized: k00 and k11 must be zero");
    const CMat& tc = state.centroid;
    std::vector<CMat> out;
    out.reserve(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const CMat& ti = state.agents[i];
        out.push_back(add(apply_flow(flow, i, ti), cubic_coupling(tc, ti, params.k01, params.k10)));
    }
    return out;
}

// Full rank-2 system: adds the trace couplings
//   k00 (tr(Ti* Ti) Tc - tr(Tc* Ti) Ti) + k11 tr(Ti* Tc - Tc* Ti) Ti.
inline std::vector<CMat> rhs_full_rank2(const EnsembleState& state,
                                        const CouplingParams& params,
                                        const FreeFlowSpec& flow) {
    const CMat& tc = state.centroid;
    std::vector<CMat> out;
    out.reserve(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const CMat& ti = state.agents[i];
        CMat r = add(apply_flow(flow, i, ti), cubic_coupling(tc, ti, params.k01, params.k10));
        if (params.k00 != 0.0) {
            const cplx tr_ii = frob(ti, ti);  // tr(Ti* Ti)
            const cplx tr_ci = frob(tc, ti);  // tr(Tc* Ti)
            r = add(r, scale(params.k00, sub(scale(tr_ii, tc), scale(tr_ci, ti))));
        }
        if (params.k11 != 0.0) {
            const cplx coeff = frob(ti, tc) - frob(tc, ti);  // tr(Ti* Tc - Tc* Ti)
            r = add(r, scale(params.k11 * coeff, ti));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline void validate_frustration(const CMat& d) {
    if (d.rows != d.cols) throw validation_error("frustration: D must be square");
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j) {
            if (i != j && std::abs(d(i, j)) > 1e-14)
                throw validation_error("frustration: D must be diagonal");
            if (i == j && (std::abs(d(i, j).imag()) > 1e-14 || d(i, j).real() < -1e-14))
                throw validation_error("frustration: D diagonal must be real nonnegative");
        }
}

// Checked once at ingestion; integration never re-projects onto the unitary
// group, drift is a measured diagnostic.
inline void validate_unitary_ensemble(const EnsembleState& state, double tol = 1e-8) {
    for (const CMat& u : state.agents)
        if (u.rows != u.cols || unitary_defect(u) > tol)
            throw validation_error("ensemble: agents must be unitary within 1e-8");
}

// dU_i/dt = B_i U_i + kappa1 (Uc D - Ui D Uc* Ui) with diagonal nonnegative D.
inline std::vector<CMat> rhs_frustrated_unitary(const EnsembleState& state, const CMat& d,
                                                double k1, const FreeFlowSpec& flow) {
    validate_frustration(d);
    if (d.rows != state.d1() || state.d1() != state.d2())
        throw dimension_error("rhs_frustrated_unitary: D and agents must all be d1 x d1");
    const CMat& uc = state.centroid;
    const CMat uc_star = hconj(uc);
    const CMat ucd = matmul(uc, d);
    std::vector<CMat> out;
    out.reserve(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const CMat& ui = state.agents[i];
        const CMat pull = matmul(matmul(matmul(ui, d), uc_star), ui);
        out.push_back(add(apply_flow(flow, i, ui), scale(k1, sub(ucd, pull))));
    }
    return out;
}

// Column-vector reduction:
// dz_i/dt = Omega_i z_i + kappa1 (zc <zi,zi> - zi <zc,zi>) + kappa2 (<zi,zc> - <zc,zi>) zi.
// Implemented through the same cubic path as the matrix model, which these
// inner-product terms equal entrywise for d2 = 1.
inline std::vector<CMat> rhs_sphere(const EnsembleState& state, double k1, double k2,
                                    const std::vector<CMat>& omega) {
    if (state.d2() != 1) throw dimension_error("rhs_sphere: agents must be d x 1 columns");
    for (const CMat& o : omega) {
        if (o.rows != state.d1() || o.cols != state.d1())
            throw dimension_error("rhs_sphere: Omega must be d x d");
        if (skew_hermitian_defect(o) > 1e-12)
            throw validation_error("rhs_sphere: Omega not skew-hermitian within 1e-12");
    }
    const CMat& zc = state.centroid;
    std::vector<CMat> out;
    out.reserve(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const CMat& zi = state.agents[i];
        CMat r = cubic_coupling(zc, zi, k1, k2);
        if (!omega.empty()) r = add(matmul(detail::per_agent(omega, i), zi), r);
        out.push_back(std::move(r));
    }
    return out;
}

// Parameters of the hermitian-conjugate system: kappas swapped, each rank-4
// tensor dualized. Integrating the result from hconj of the initial data
// tracks hconj of the primal solution.
inline std::pair<CouplingParams, FreeFlowSpec> dual_system_params(const CouplingParams& params,
                                                                  const FreeFlowSpec& flow) {
    CouplingParams dual = params;
    std::swap(dual.k01, dual.k10);
    if (std::holds_alternative<ZeroFlow>(flow)) return {dual, ZeroFlow{}};
    if (const auto* gen = std::get_if<GeneralFlow>(&flow)) {
        GeneralFlow out;
        out.a.reserve(gen->a.size());
        for (const R4Tensor& a : gen->a) out.a.push_back(r4_dual(a));
        return {dual, FreeFlowSpec(std::move(out))};
    }
    throw validation_error("dual_system_params: flow must be general or zero");
}

}  // namespace lohe
