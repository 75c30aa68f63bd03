#pragma once

#include <cmath>
#include <complex>

#include "ernstlax/errors.hpp"

namespace ernstlax {

using cdouble = std::complex<double>;

// 2x2 complex matrix, the value type of every matrix-valued form coefficient.
struct Matrix2 {
    cdouble m11{0.0}, m12{0.0}, m21{0.0}, m22{0.0};

    static Matrix2 zero() { return {}; }
    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 diag(cdouble a, cdouble b) { return {a, 0.0, 0.0, b}; }
    // matrix units E11, E12, E21, E22
    static Matrix2 unit(int r, int c)
    {
        Matrix2 m;
        (r == 1 ? (c == 1 ? m.m11 : m.m12) : (c == 1 ? m.m21 : m.m22)) = 1.0;
        return m;
    }

    cdouble trace() const { return m11 + m22; }
    cdouble det() const { return m11 * m22 - m12 * m21; }

    Matrix2 transpose() const { return {m11, m21, m12, m22}; }
    Matrix2 conj() const
    {
        return {std::conj(m11), std::conj(m12), std::conj(m21), std::conj(m22)};
    }
    Matrix2 real_part() const
    {
        return {m11.real(), m12.real(), m21.real(), m22.real()};
    }
    Matrix2 imag_part() const
    {
        return {m11.imag(), m12.imag(), m21.imag(), m22.imag()};
    }

    double frobenius() const
    {
        return std::sqrt(std::norm(m11) + std::norm(m12) + std::norm(m21) +
                         std::norm(m22));
    }

    Matrix2 operator-() const { return {-m11, -m12, -m21, -m22}; }

    Matrix2& operator+=(const Matrix2& o)
    {
        m11 += o.m11;
        m12 += o.m12;
        m21 += o.m21;
        m22 += o.m22;
        return *this;
    }
    Matrix2& operator-=(const Matrix2& o)
    {
        m11 -= o.m11;
        m12 -= o.m12;
        m21 -= o.m21;
        m22 -= o.m22;
        return *this;
    }
    Matrix2& operator*=(cdouble s)
    {
        m11 *= s;
        m12 *= s;
        m21 *= s;
        m22 *= s;
        return *this;
    }
};

inline Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
inline Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
inline Matrix2 operator*(Matrix2 a, cdouble s) { return a *= s; }
inline Matrix2 operator*(cdouble s, Matrix2 a) { return a *= s; }
inline Matrix2 operator*(Matrix2 a, double s) { return a *= cdouble(s); }
inline Matrix2 operator*(double s, Matrix2 a) { return a *= cdouble(s); }

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b)
{
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

inline Matrix2 commutator(const Matrix2& a, const Matrix2& b)
{
    return a * b - b * a;
}

inline Matrix2 anticommutator(const Matrix2& a, const Matrix2& b)
{
    return a * b + b * a;
}

// Closed-form adjugate inverse; |det| below `tol` is treated as singular.
inline Matrix2 inverse(const Matrix2& m, double tol = 1e-10)
{
    const cdouble d = m.det();
    if (std::abs(d) < tol)
        throw SingularMatrix("2x2 inverse: |det| = " +
                             std::to_string(std::abs(d)) + " below threshold");
    const cdouble inv = 1.0 / d;
    return {m.m22 * inv, -m.m12 * inv, -m.m21 * inv, m.m11 * inv};
}

// exp(M) = e^{t/2} [cosh(q) I + sinh(q)/q (M - (t/2) I)],  q^2 = (t/2)^2 - det M.
// sinh(q)/q and cosh(q) are even in q, so the sqrt branch does not matter.
inline Matrix2 exp2(const Matrix2& m)
{
    const cdouble half_tr = 0.5 * m.trace();
    const cdouble q2 = half_tr * half_tr - m.det();
    const cdouble q = std::sqrt(q2);
    cdouble ch, shq; // cosh(q), sinh(q)/q
    if (std::abs(q) < 1e-4) {
        ch = 1.0 + q2 / 2.0 + q2 * q2 / 24.0;
        shq = 1.0 + q2 / 6.0 + q2 * q2 / 120.0;
    } else {
        ch = std::cosh(q);
        shq = std::sinh(q) / q;
    }
    const cdouble scale = std::exp(half_tr);
    Matrix2 dev = m;
    dev.m11 -= half_tr;
    dev.m22 -= half_tr;
    Matrix2 r = dev * shq;
    r.m11 += ch;
    r.m22 += ch;
    return r * scale;
}

} // namespace ernstlax
