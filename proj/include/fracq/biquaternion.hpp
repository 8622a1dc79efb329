#pragma once

#include <array>
#include <complex>

namespace fracq {

using Complex = std::complex<double>;

/// Complex quaternion q0 + q1 e1 + q2 e2 + q3 e3 with e_m e_n + e_n e_m = -2 delta_mn
/// and e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
///
/// Plain value type; there is no inverse since nothing in the library needs one
/// (H(C) has zero divisors anyway).
struct Biquaternion {
    std::array<Complex, 4> c{};

    constexpr Biquaternion() = default;
    constexpr Biquaternion(Complex q0, Complex q1, Complex q2, Complex q3) : c{q0, q1, q2, q3} {}
    constexpr explicit Biquaternion(Complex scalar) : c{scalar, 0.0, 0.0, 0.0} {}

    /// Basis element e_n, n in {0,1,2,3} (e_0 = 1).
    static Biquaternion unit(int n);

    Complex& operator[](int n) { return c[static_cast<std::size_t>(n)]; }
    const Complex& operator[](int n) const { return c[static_cast<std::size_t>(n)]; }

    bool is_finite() const;

    friend bool operator==(const Biquaternion&, const Biquaternion&) = default;
};

Biquaternion operator+(const Biquaternion& p, const Biquaternion& q);
Biquaternion operator-(const Biquaternion& p, const Biquaternion& q);
Biquaternion operator-(const Biquaternion& q);
Biquaternion operator*(Complex s, const Biquaternion& q);
Biquaternion operator*(const Biquaternion& q, Complex s);

/// pq = p0 q0 - p.q + p0 q + q0 p + p x q
Biquaternion mul(const Biquaternion& p, const Biquaternion& q);
inline Biquaternion operator*(const Biquaternion& p, const Biquaternion& q) { return mul(p, q); }

Biquaternion conj(const Biquaternion& q);
Complex sc(const Biquaternion& q);
Biquaternion vec(const Biquaternion& q);

/// Product of basis units e_m e_n as (sign, index): e_m e_n = sign * e_index.
struct UnitProduct {
    int sign;
    int index;
};
UnitProduct unit_product(int m, int n);

}  // namespace fracq
