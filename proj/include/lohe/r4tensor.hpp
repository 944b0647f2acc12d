#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cmat.hpp"

namespace lohe {

// Rank-4 complex tensor of shape d1 x d2 x d1 x d2, indexed [a,b,g,d] with
// a,g row indices and b,d column indices, flat row-major over (a,b,g,d).
// Under the contraction product it is exactly a (d1*d2) x (d1*d2) matrix
// with row index (a,b) and column index (g,d).
struct R4Tensor {
    int d1 = 0;
    int d2 = 0;
    std::vector<cplx> entries;  // length (d1*d2)^2

    R4Tensor() = default;
    R4Tensor(int dim1, int dim2)
        : d1(dim1),
          d2(dim2),
          entries(static_cast<std::size_t>(dim1) * dim2 * dim1 * dim2) {}

    int flat_dim() const { return d1 * d2; }

    std::size_t flat(int a, int b, int g, int d) const {
        return ((static_cast<std::size_t>(a) * d2 + b) * d1 + g) * d2 + d;
    }

    cplx& at(int a, int b, int g, int d) { return entries[flat(a, b, g, d)]; }
    const cplx& at(int a, int b, int g, int d) const { return entries[flat(a, b, g, d)]; }

    bool same_dims(const R4Tensor& other) const {
        return d1 == other.d1 && d2 == other.d2;
    }
};

inline R4Tensor r4_identity(int d1, int d2) {
    R4Tensor out(d1, d2);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) out.at(a, b, a, b) = 1.0;
    return out;
}

inline R4Tensor r4_add(const R4Tensor& x, const R4Tensor& y) {
    if (!x.same_dims(y)) throw dimension_error("r4_add: dimension mismatch");
    R4Tensor out = x;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += y.entries[i];
    return out;
}

inline R4Tensor r4_scale(cplx c, const R4Tensor& x) {
    R4Tensor out = x;
    for (cplx& z : out.entries) z *= c;
    return out;
}

inline double max_abs(const R4Tensor& x) {
    double m = 0.0;
    for (const cplx& z : x.entries) m = std::max(m, std::abs(z));
    return m;
}

// Skew-hermitian defect: max |conj(A[a,b,g,d]) + A[g,d,a,b]|.
inline double skew_hermitian_defect(const R4Tensor& x) {
    double m = 0.0;
    for (int a = 0; a < x.d1; ++a)
        for (int b = 0; b < x.d2; ++b)
            for (int g = 0; g < x.d1; ++g)
                for (int d = 0; d < x.d2; ++d)
                    m = std::max(m, std::abs(std::conj(x.at(a, b, g, d)) + x.at(g, d, a, b)));
    return m;
}

inline bool is_skew_hermitian_r4(const R4Tensor& x, double tol = 1e-12) {
    return skew_hermitian_defect(x) <= tol;
}

// result[a,b] = sum_{g,d} A[a,b,g,d] T[g,d]
inline CMat contract4(const R4Tensor& a, const CMat& t) {
    if (a.d1 != t.rows || a.d2 != t.cols)
        throw dimension_error("contract4: tensor dims do not match matrix shape");
    CMat out(t.rows, t.cols);
    const int m = a.flat_dim();
    for (int row = 0; row < m; ++row) {
        cplx sum = 0.0;
        const std::size_t base = static_cast<std::size_t>(row) * m;
        for (int col = 0; col < m; ++col) sum += a.entries[base + col] * t.entries[col];
        out.entries[row] = sum;
    }
    return out;
}

// result[a,b,g,d] = sum_{e,p} X[a,b,e,p] Y[e,p,g,d]
inline R4Tensor r4_product(const R4Tensor& x, const R4Tensor& y) {
    if (!x.same_dims(y)) throw dimension_error("r4_product: dimension mismatch");
    const int m = x.flat_dim();
    R4Tensor out(x.d1, x.d2);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const cplx xik = x.entries[static_cast<std::size_t>(i) * m + k];
            const std::size_t ybase = static_cast<std::size_t>(k) * m;
            const std::size_t obase = static_cast<std::size_t>(i) * m;
            for (int j = 0; j < m; ++j) out.entries[obase + j] += xik * y.entries[ybase + j];
        }
    return out;
}

// Power series of exp(A t) under the contraction product. Terminates when the
// added term's max-abs drops below 1e-16; gives up after 200 terms, which
// signals ||A t|| too large -- the caller must scale and square.
inline R4Tensor r4_exp(const R4Tensor& a, double t) {
    R4Tensor term = r4_identity(a.d1, a.d2);
    R4Tensor sum = term;
    const R4Tensor at = r4_scale(cplx(t, 0.0), a);
    for (int n = 1; n <= 200; ++n) {
        term = r4_scale(cplx(1.0 / n, 0.0), r4_product(term, at));
        sum = r4_add(sum, term);
        if (max_abs(term) < 1e-16) return sum;
    }
    throw convergence_error("r4_exp: series did not converge within 200 terms");
}

// exp(A t) for arbitrary ||A t||: power-of-two splitting, series on the
// scaled tensor, then repeated squaring under the contraction product.
inline R4Tensor r4_exp_scaled(const R4Tensor& a, double t) {
    int k = 0;
    double norm = max_abs(a) * std::abs(t) * a.flat_dim();
    while (norm > 0.5 && k < 48) {
        norm *= 0.5;
        ++k;
    }
    R4Tensor out = r4_exp(a, t / std::ldexp(1.0, k));
    for (int s = 0; s < k; ++s) out = r4_product(out, out);
    return out;
}

// [A]_{abgd} = -i [H]_{ag} delta_{db} with hermitian H: contraction acts as
// T -> -i H T.
inline R4Tensor build_left_free_flow(const CMat& h, int d2) {
    if (h.rows != h.cols) throw validation_error("build_left_free_flow: H not square");
    if (hermitian_defect(h) > 1e-12)
        throw validation_error("build_left_free_flow: H not hermitian within 1e-12");
    R4Tensor out(h.rows, d2);
    const cplx minus_i(0.0, -1.0);
    for (int a = 0; a < out.d1; ++a)
        for (int g = 0; g < out.d1; ++g) {
            const cplx v = minus_i * h(a, g);
            for (int b = 0; b < d2; ++b) out.at(a, b, g, b) = v;
        }
    return out;
}

// [A]_{abgd} = [B]_{ag} delta_{bd} + [C]_{bd} delta_{ag} with skew-hermitian
// B, C: contraction acts as T -> B T + T C^T.
inline R4Tensor build_bilateral_free_flow(const CMat& b, const CMat& c) {
    if (b.rows != b.cols || c.rows != c.cols)
        throw validation_error("build_bilateral_free_flow: B and C must be square");
    if (skew_hermitian_defect(b) > 1e-12)
        throw validation_error("build_bilateral_free_flow: B not skew-hermitian within 1e-12");
    if (skew_hermitian_defect(c) > 1e-12)
        throw validation_error("build_bilateral_free_flow: C not skew-hermitian within 1e-12");
    R4Tensor out(b.rows, c.rows);
    for (int a = 0; a < out.d1; ++a)
        for (int g = 0; g < out.d1; ++g)
            for (int bb = 0; bb < out.d2; ++bb) out.at(a, bb, g, bb) += b(a, g);
    for (int bb = 0; bb < out.d2; ++bb)
        for (int d = 0; d < out.d2; ++d)
            for (int a = 0; a < out.d1; ++a) out.at(a, bb, a, d) += c(bb, d);
    return out;
}

// Dual tensor acting on hermitian conjugates: result[a,b,g,d] = conj(A[b,a,d,g]),
// so contract4(dual(A), T*) = (contract4(A, T))* for every T.
inline R4Tensor r4_dual(const R4Tensor& a) {
    R4Tensor out(a.d2, a.d1);
    for (int al = 0; al < out.d1; ++al)
        for (int be = 0; be < out.d2; ++be)
            for (int ga = 0; ga < out.d1; ++ga)
                for (int de = 0; de < out.d2; ++de)
                    out.at(al, be, ga, de) = std::conj(a.at(be, al, de, ga));
    return out;
}

// Text format: header "r4 d1 d2", then (d1*d2)^2 lines
// "alpha beta gamma delta re im" with 1-based indices in lexicographic order.
inline void write_r4(const R4Tensor& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("write_r4: cannot open " + path);
    out << "r4 " << x.d1 << ' ' << x.d2 << '\n';
    char buf[128];
    for (int a = 0; a < x.d1; ++a)
        for (int b = 0; b < x.d2; ++b)
            for (int g = 0; g < x.d1; ++g)
                for (int d = 0; d < x.d2; ++d) {
                    const cplx z = x.at(a, b, g, d);
                    std::snprintf(buf, sizeof(buf), "%d %d %d %d %.17g %.17g", a + 1, b + 1,
                                  g + 1, d + 1, z.real(), z.imag());
                    out << buf << '\n';
                }
    if (!out) throw io_error("write_r4: write failure on " + path);
}

inline R4Tensor read_r4(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("read_r4: cannot open " + path);
    std::string tag;
    int d1 = 0, d2 = 0;
    if (!(in >> tag >> d1 >> d2) || tag != "r4" || d1 <= 0 || d2 <= 0)
        throw parse_error("read_r4: bad header in " + path);
    R4Tensor out(d1, d2);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b)
            for (int g = 0; g < d1; ++g)
                for (int d = 0; d < d2; ++d) {
                    int ia, ib, ig, id;
                    double re, im;
                    if (!(in >> ia >> ib >> ig >> id >> re >> im))
                        throw parse_error("read_r4: truncated entry list in " + path);
                    if (ia != a + 1 || ib != b + 1 || ig != g + 1 || id != d + 1)
                        throw parse_error("read_r4: entries out of lexicographic order in " +
                                          path);
                    out.at(a, b, g, d) = cplx(re, im);
                }
    return out;
}

}  // namespace lohe
