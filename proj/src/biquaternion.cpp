#include "fracq/biquaternion.hpp"

#include <cmath>

#include "fracq/errors.hpp"

namespace fracq {

Biquaternion Biquaternion::unit(int n) {
    if (n < 0 || n > 3) throw DomainError("quaternion unit index must be 0..3");
    Biquaternion q;
    q[n] = 1.0;
    return q;
}

bool Biquaternion::is_finite() const {
    for (const auto& z : c)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Biquaternion operator+(const Biquaternion& p, const Biquaternion& q) {
    return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
}

Biquaternion operator-(const Biquaternion& p, const Biquaternion& q) {
    return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]};
}

Biquaternion operator-(const Biquaternion& q) { return {-q[0], -q[1], -q[2], -q[3]}; }

Biquaternion operator*(Complex s, const Biquaternion& q) {
    return {s * q[0], s * q[1], s * q[2], s * q[3]};
}

Biquaternion operator*(const Biquaternion& q, Complex s) { return s * q; }

Biquaternion mul(const Biquaternion& p, const Biquaternion& q) {
    const Complex dot = p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
    return {p[0] * q[0] - dot,
            p[0] * q[1] + q[0] * p[1] + (p[2] * q[3] - p[3] * q[2]),
            p[0] * q[2] + q[0] * p[2] + (p[3] * q[1] - p[1] * q[3]),
            p[0] * q[3] + q[0] * p[3] + (p[1] * q[2] - p[2] * q[1])};
}

Biquaternion conj(const Biquaternion& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Complex sc(const Biquaternion& q) { return q[0]; }

Biquaternion vec(const Biquaternion& q) { return {0.0, q[1], q[2], q[3]}; }

UnitProduct unit_product(int m, int n) {
    if (m < 0 || m > 3 || n < 0 || n > 3) throw DomainError("quaternion unit index must be 0..3");
    if (m == 0) return {1, n};
    if (n == 0) return {1, m};
    if (m == n) return {-1, 0};
    // Cyclic (1,2,3) order gives +, anticyclic gives -.
    const int k = 6 - m - n;
    const bool cyclic = (n - m + 3) % 3 == 1;
    return {cyclic ? 1 : -1, k};
}

}  // namespace fracq
