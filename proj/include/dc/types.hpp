#pragma once

#include <complex>
#include <array>
#include <vector>

namespace dc {

using Cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr Cplx iu{0.0, 1.0};

// C^2-valued sample of a solution or kernel column.
struct Spinor {
    Cplx up{0.0, 0.0};
    Cplx down{0.0, 0.0};

    Spinor() = default;
    Spinor(Cplx u, Cplx d) : up(u), down(d) {}

    Spinor operator+(const Spinor& o) const { return {up + o.up, down + o.down}; }
    Spinor operator-(const Spinor& o) const { return {up - o.up, down - o.down}; }
    Spinor operator*(Cplx s) const { return {up * s, down * s}; }
    Spinor operator/(Cplx s) const { return {up / s, down / s}; }
    Spinor& operator+=(const Spinor& o) { up += o.up; down += o.down; return *this; }
};

inline Spinor operator*(Cplx s, const Spinor& v) { return v * s; }

inline double norm2(const Spinor& v) { return std::norm(v.up) + std::norm(v.down); }
inline double abs(const Spinor& v) { return std::sqrt(norm2(v)); }

// bilinear pairing f^T g (no conjugation)
inline Cplx dotT(const Spinor& f, const Spinor& g) { return f.up * g.up + f.down * g.down; }

// 2x2 complex matrix, row-major
struct Mat2 {
    std::array<Cplx, 4> a{};  // a[0]=m11 a[1]=m12 a[2]=m21 a[3]=m22

    Cplx& operator()(int r, int c) { return a[2 * r + c]; }
    const Cplx& operator()(int r, int c) const { return a[2 * r + c]; }

    Mat2 operator+(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 4; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    Mat2 operator-(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 4; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    Mat2 operator*(Cplx s) const {
        Mat2 r;
        for (int i = 0; i < 4; ++i) r.a[i] = a[i] * s;
        return r;
    }
    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        r(0, 0) = (*this)(0, 0) * o(0, 0) + (*this)(0, 1) * o(1, 0);
        r(0, 1) = (*this)(0, 0) * o(0, 1) + (*this)(0, 1) * o(1, 1);
        r(1, 0) = (*this)(1, 0) * o(0, 0) + (*this)(1, 1) * o(1, 0);
        r(1, 1) = (*this)(1, 0) * o(0, 1) + (*this)(1, 1) * o(1, 1);
        return r;
    }
    Spinor operator*(const Spinor& v) const {
        return {(*this)(0, 0) * v.up + (*this)(0, 1) * v.down,
                (*this)(1, 0) * v.up + (*this)(1, 1) * v.down};
    }
    Mat2 transpose() const {
        Mat2 r = *this;
        std::swap(r.a[1], r.a[2]);
        return r;
    }
};

inline Mat2 operator*(Cplx s, const Mat2& m) { return m * s; }

// outer product f g^T
inline Mat2 outerT(const Spinor& f, const Spinor& g) {
    Mat2 r;
    r(0, 0) = f.up * g.up;
    r(0, 1) = f.up * g.down;
    r(1, 0) = f.down * g.up;
    r(1, 1) = f.down * g.down;
    return r;
}

inline double frob(const Mat2& m) {
    double s = 0;
    for (auto& c : m.a) s += std::norm(c);
    return std::sqrt(s);
}

inline Mat2 pauli(int j) {
    Mat2 s;
    switch (j) {
        case 1: s(0, 1) = 1; s(1, 0) = 1; break;
        case 2: s(0, 1) = Cplx(0, -1); s(1, 0) = Cplx(0, 1); break;
        default: s(0, 0) = 1; s(1, 1) = -1; break;
    }
    return s;
}

enum class Sign : int { Plus = +1, Minus = -1 };

inline int sgn_of(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

}  // namespace dc
