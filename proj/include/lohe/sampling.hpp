#pragma once

#include <cstdint>
#include <random>

#include "cmat.hpp"
#include "r4tensor.hpp"

namespace lohe {

// Deterministic random stream: mt19937_64 (sequence pinned by the standard)
// with a hand-rolled Box-Muller transform, so identical seeds reproduce
// identical draws bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx cnormal() {
        const double re = normal();
        const double im = normal();
        return cplx(re, im);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline CMat random_gaussian_matrix(int d1, int d2, Rng& rng) {
    CMat out(d1, d2);
    for (cplx& z : out.entries) z = rng.cnormal();
    return out;
}

// Haar unitary by modified Gram-Schmidt on a complex Ginibre matrix. MGS
// produces the unique QR factor with positive real diagonal, which fixes the
// column phases.
inline CMat haar_unitary(int d, Rng& rng) {
    if (d < 1) throw validation_error("haar_unitary: d must be >= 1");
    CMat g = random_gaussian_matrix(d, d, rng);
    CMat q(d, d);
    for (int j = 0; j < d; ++j) {
        std::vector<cplx> v(d);
        for (int i = 0; i < d; ++i) v[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < j; ++k) {
                cplx proj = 0.0;
                for (int i = 0; i < d; ++i) proj += std::conj(q(i, k)) * v[i];
                for (int i = 0; i < d; ++i) v[i] -= proj * q(i, k);
            }
        double nrm = 0.0;
        for (int i = 0; i < d; ++i) nrm += std::norm(v[i]);
        nrm = std::sqrt(nrm);
        for (int i = 0; i < d; ++i) q(i, j) = v[i] / nrm;
    }
    return q;
}

inline CMat haar_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(d, rng);
}

inline CMat random_skew_hermitian(int d, double scale, Rng& rng) {
    if (d < 1) throw validation_error("random_skew_hermitian: d must be >= 1");
    if (scale < 0) throw validation_error("random_skew_hermitian: scale must be >= 0");
    CMat g = random_gaussian_matrix(d, d, rng);
    CMat out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out(i, j) = 0.5 * scale * (g(i, j) - std::conj(g(j, i)));
    return out;
}

inline CMat random_skew_hermitian(int d, double scale, std::uint64_t seed) {
    Rng rng(seed);
    return random_skew_hermitian(d, scale, rng);
}

inline CMat random_hermitian(int d, double scale, Rng& rng) {
    CMat g = random_gaussian_matrix(d, d, rng);
    CMat out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out(i, j) = 0.5 * scale * (g(i, j) + std::conj(g(j, i)));
    return out;
}

inline CMat random_hermitian(int d, double scale, std::uint64_t seed) {
    Rng rng(seed);
    return random_hermitian(d, scale, rng);
}

// Gaussian matrix divided by its Frobenius norm: ||result||_F = 1 up to the
// rounding of the final division.
inline CMat random_normalized_matrix(int d1, int d2, Rng& rng) {
    if (d1 < 1 || d2 < 1)
        throw validation_error("random_normalized_matrix: dimensions must be >= 1");
    CMat g = random_gaussian_matrix(d1, d2, rng);
    const double nrm = frob_norm(g);
    for (cplx& z : g.entries) z /= nrm;
    return g;
}

inline CMat random_normalized_matrix(int d1, int d2, std::uint64_t seed) {
    Rng rng(seed);
    return random_normalized_matrix(d1, d2, rng);
}

// scale * (G - swap-conj(G)) / 2 where swap-conj(G)[a,b,g,d] = conj(G[g,d,a,b]);
// the result satisfies the rank-4 skew-hermitian identity exactly.
inline R4Tensor random_skew_r4(int d1, int d2, double scale, Rng& rng) {
    if (d1 < 1 || d2 < 1) throw validation_error("random_skew_r4: dimensions must be >= 1");
    if (scale < 0) throw validation_error("random_skew_r4: scale must be >= 0");
    R4Tensor g(d1, d2);
    for (cplx& z : g.entries) z = rng.cnormal();
    R4Tensor out(d1, d2);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b)
            for (int gg = 0; gg < d1; ++gg)
                for (int d = 0; d < d2; ++d)
                    out.at(a, b, gg, d) =
                        0.5 * scale * (g.at(a, b, gg, d) - std::conj(g.at(gg, d, a, b)));
    return out;
}

inline R4Tensor random_skew_r4(int d1, int d2, double scale, std::uint64_t seed) {
    Rng rng(seed);
    return random_skew_r4(d1, d2, scale, rng);
}

}  // namespace lohe
