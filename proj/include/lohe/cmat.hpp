#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lohe {

using cplx = std::complex<double>;

// Dense rectangular complex matrix, row-major storage.
struct CMat {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> entries;  // length rows*cols

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}
    CMat(int r, int c, std::vector<cplx> data)
        : rows(r), cols(c), entries(std::move(data)) {
        if (entries.size() != static_cast<std::size_t>(rows) * cols)
            throw dimension_error("CMat: entry count does not match rows*cols");
    }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const cplx& operator()(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }

    bool same_shape(const CMat& other) const {
        return rows == other.rows && cols == other.cols;
    }
};

inline CMat hconj(const CMat& t) {
    CMat out(t.cols, t.rows);
    for (int a = 0; a < t.cols; ++a)
        for (int b = 0; b < t.rows; ++b) out(a, b) = std::conj(t(b, a));
    return out;
}

inline CMat transpose(const CMat& t) {
    CMat out(t.cols, t.rows);
    for (int a = 0; a < t.cols; ++a)
        for (int b = 0; b < t.rows; ++b) out(a, b) = t(b, a);
    return out;
}

// Frobenius inner product, first argument conjugated.
inline cplx frob(const CMat& t1, const CMat& t2) {
    if (!t1.same_shape(t2)) throw dimension_error("frob: shape mismatch");
    cplx sum = 0.0;
    for (std::size_t i = 0; i < t1.entries.size(); ++i)
        sum += std::conj(t1.entries[i]) * t2.entries[i];
    return sum;
}

inline double frob_norm(const CMat& t) {
    double sum = 0.0;
    for (const cplx& z : t.entries) sum += std::norm(z);
    return std::sqrt(sum);
}

inline CMat add(const CMat& a, const CMat& b) {
    if (!a.same_shape(b)) throw dimension_error("add: shape mismatch");
    CMat out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

inline CMat sub(const CMat& a, const CMat& b) {
    if (!a.same_shape(b)) throw dimension_error("sub: shape mismatch");
    CMat out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] -= b.entries[i];
    return out;
}

inline CMat scale(cplx c, const CMat& a) {
    CMat out = a;
    for (cplx& z : out.entries) z *= c;
    return out;
}

inline CMat matmul(const CMat& a, const CMat& b) {
    if (a.cols != b.rows) throw dimension_error("matmul: inner dimensions disagree");
    CMat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            for (int j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline cplx trace(const CMat& a) {
    if (a.rows != a.cols) throw dimension_error("trace: matrix not square");
    cplx sum = 0.0;
    for (int i = 0; i < a.rows; ++i) sum += a(i, i);
    return sum;
}

inline CMat operator+(const CMat& a, const CMat& b) { return add(a, b); }
inline CMat operator-(const CMat& a, const CMat& b) { return sub(a, b); }
inline CMat operator*(const CMat& a, const CMat& b) { return matmul(a, b); }
inline CMat operator*(cplx c, const CMat& a) { return scale(c, a); }
inline CMat operator*(double c, const CMat& a) { return scale(cplx(c, 0.0), a); }

inline double max_abs(const CMat& a) {
    double m = 0.0;
    for (const cplx& z : a.entries) m = std::max(m, std::abs(z));
    return m;
}

inline bool is_finite(const CMat& a) {
    for (const cplx& z : a.entries)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

inline double hermitian_defect(const CMat& a) {
    if (a.rows != a.cols) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

inline double skew_hermitian_defect(const CMat& a) {
    if (a.rows != a.cols) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            m = std::max(m, std::abs(a(i, j) + std::conj(a(j, i))));
    return m;
}

inline bool is_hermitian(const CMat& a, double tol = 1e-12) {
    return a.rows == a.cols && hermitian_defect(a) <= tol;
}

inline bool is_skew_hermitian(const CMat& a, double tol = 1e-12) {
    return a.rows == a.cols && skew_hermitian_defect(a) <= tol;
}

inline double unitary_defect(const CMat& u) {
    if (u.rows != u.cols) return std::numeric_limits<double>::infinity();
    return frob_norm(sub(matmul(hconj(u), u), CMat::identity(u.cols)));
}

inline bool is_unitary(const CMat& u, double tol = 1e-10) {
    return u.rows == u.cols && unitary_defect(u) <= tol;
}

// Matrix exponential by power series with power-of-two scaling and squaring.
inline CMat matrix_exp(const CMat& a, double t = 1.0) {
    if (a.rows != a.cols) throw dimension_error("matrix_exp: matrix not square");
    int k = 0;
    double norm = max_abs(a) * std::abs(t) * a.rows;
    while (norm > 0.5 && k < 48) {
        norm *= 0.5;
        ++k;
    }
    const double h = t / std::ldexp(1.0, k);
    CMat term = CMat::identity(a.rows);
    CMat sum = term;
    for (int n = 1; n <= 60; ++n) {
        term = scale(cplx(h / n, 0.0), matmul(term, a));
        sum = add(sum, term);
        if (max_abs(term) < 1e-18) break;
    }
    for (int s = 0; s < k; ++s) sum = matmul(sum, sum);
    return sum;
}

}  // namespace lohe
