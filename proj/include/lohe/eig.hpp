#pragma once

#include <numeric>

#include "cmat.hpp"

namespace lohe {

// SVD factors T = U Sigma V* with U (d1 x d1) and V (d2 x d2) unitary and
// Sigma (d1 x d2) real nonnegative diagonal, sorted nonincreasing.
struct SvdTriple {
    CMat u;
    CMat sigma;
    CMat v;
};

namespace detail {

inline double offdiag_mass(const CMat& m) {
    double sum = 0.0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j) sum += std::norm(m(i, j));
    return std::sqrt(sum);
}

}  // namespace detail

// Eigendecomposition of a hermitian matrix by cyclic Jacobi rotations.
// Returns eigenvalues sorted nonincreasing (index tie-break) and the matching
// unitary Q with M = Q diag(values) Q*. Sweeps run until the off-diagonal
// Frobenius mass drops below 1e-14 (relative to max(1, ||M||_F)).
inline std::pair<std::vector<double>, CMat> hermitian_eig(const CMat& m_in) {
    if (m_in.rows != m_in.cols) throw validation_error("hermitian_eig: matrix not square");
    if (hermitian_defect(m_in) > 1e-10)
        throw validation_error("hermitian_eig: matrix not hermitian within 1e-10");
    const int n = m_in.rows;
    CMat m = m_in;
    CMat q = CMat::identity(n);
    const double stop = 1e-14 * std::max(1.0, frob_norm(m_in));

    for (int sweep = 0; sweep < 60 && detail::offdiag_mass(m) >= stop; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int qq = p + 1; qq < n; ++qq) {
                const cplx apq = m(p, qq);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                const cplx phase = apq / r;  // apq = r * phase
                const double app = m(p, p).real();
                const double aqq = m(qq, qq).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? -1.0 : 1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sigma = t * c;
                const cplx s = sigma * std::conj(phase);

                // M <- G* M G with G the plane rotation on (p, qq).
                for (int k = 0; k < n; ++k) {
                    const cplx mpk = m(p, k);
                    const cplx mqk = m(qq, k);
                    m(p, k) = c * mpk + std::conj(s) * mqk;
                    m(qq, k) = -s * mpk + c * mqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx mkp = m(k, p);
                    const cplx mkq = m(k, qq);
                    m(k, p) = c * mkp + s * mkq;
                    m(k, qq) = -std::conj(s) * mkp + c * mkq;
                    const cplx qkp = q(k, p);
                    const cplx qkq = q(k, qq);
                    q(k, p) = c * qkp + s * qkq;
                    q(k, qq) = -std::conj(s) * qkp + c * qkq;
                }
                m(p, qq) = 0.0;
                m(qq, p) = 0.0;
                m(p, p) = cplx(m(p, p).real(), 0.0);
                m(qq, qq) = cplx(m(qq, qq).real(), 0.0);
            }
    }
    if (detail::offdiag_mass(m) >= stop)
        throw convergence_error("hermitian_eig: Jacobi sweeps failed to converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m(a, a).real() > m(b, b).real(); });
    std::vector<double> values(n);
    CMat qs(n, n);
    for (int j = 0; j < n; ++j) {
        values[j] = m(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) qs(i, j) = q(i, order[j]);
    }
    return {values, qs};
}

// SVD built from the Gram matrix: diagonalize T*T = V diag(mu) V*, set
// lambda_j = sqrt(max(mu_j, 0)); columns of U are T v_j / lambda_j for
// lambda_j above rank_tol, the rest completed to a unitary by Gram-Schmidt
// against canonical basis vectors in index order.
inline SvdTriple svd_from_gram(const CMat& t, double rank_tol) {
    if (rank_tol <= 0) throw validation_error("svd_from_gram: rank_tol must be > 0");
    const int d1 = t.rows, d2 = t.cols;
    auto [mu, v] = hermitian_eig(matmul(hconj(t), t));

    CMat sigma(d1, d2);
    const int nsv = std::min(d1, d2);
    std::vector<double> lam(static_cast<std::size_t>(nsv), 0.0);
    for (int j = 0; j < nsv; ++j) {
        lam[j] = std::sqrt(std::max(mu[j], 0.0));
        sigma(j, j) = lam[j];
    }

    CMat u(d1, d1);
    int filled = 0;
    for (int j = 0; j < nsv; ++j) {
        if (lam[j] <= rank_tol) break;  // mu sorted nonincreasing
        for (int i = 0; i < d1; ++i) {
            cplx acc = 0.0;
            for (int k = 0; k < d2; ++k) acc += t(i, k) * v(k, j);
            u(i, j) = acc / lam[j];
        }
        ++filled;
    }
    // Orthonormal completion, deterministic tie order by basis index.
    for (int cand = 0; cand < d1 && filled < d1; ++cand) {
        std::vector<cplx> w(static_cast<std::size_t>(d1), 0.0);
        w[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < filled; ++k) {
                cplx proj = 0.0;
                for (int i = 0; i < d1; ++i) proj += std::conj(u(i, k)) * w[i];
                for (int i = 0; i < d1; ++i) w[i] -= proj * u(i, k);
            }
        double nrm = 0.0;
        for (int i = 0; i < d1; ++i) nrm += std::norm(w[i]);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-6) continue;  // candidate already spanned
        for (int i = 0; i < d1; ++i) u(i, filled) = w[i] / nrm;
        ++filled;
    }
    if (filled < d1) throw convergence_error("svd_from_gram: unitary completion failed");
    return {u, sigma, v};
}

inline SvdTriple svd_from_gram(const CMat& t) {
    auto mu = hermitian_eig(matmul(hconj(t), t)).first;
    const double lam_max = std::sqrt(std::max(mu.empty() ? 0.0 : mu.front(), 0.0));
    return svd_from_gram(t, std::max(1e-9 * lam_max, 1e-300));
}

inline std::vector<double> singular_values(const CMat& t) {
    auto mu = hermitian_eig(matmul(hconj(t), t)).first;
    const int nsv = std::min(t.rows, t.cols);
    std::vector<double> out(static_cast<std::size_t>(nsv));
    for (int j = 0; j < nsv; ++j) out[j] = std::sqrt(std::max(mu[j], 0.0));
    return out;
}

}  // namespace lohe
