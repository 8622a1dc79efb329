#include "fracq/fracvec.hpp"

#include <algorithm>

#include "fracq/errors.hpp"

namespace fracq {

VectorField::VectorField(Cube cube) : c_{FracField(cube), FracField(cube), FracField(cube)} {}

VectorField::VectorField(FracField u1, FracField u2, FracField u3)
    : c_{std::move(u1), std::move(u2), std::move(u3)} {
    require_same_cube(c_[0].cube(), c_[1].cube());
    require_same_cube(c_[0].cube(), c_[2].cube());
}

bool VectorField::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const FracField& f) { return f.is_zero(); });
}

double VectorField::coeff_norm() const {
    double m = 0.0;
    for (const auto& f : c_) m = std::max(m, f.coeff_norm());
    return m;
}

VectorField VectorField::operator-() const { return {-c_[0], -c_[1], -c_[2]}; }

VectorField operator+(const VectorField& u, const VectorField& v) {
    return {u.c_[0] + v.c_[0], u.c_[1] + v.c_[1], u.c_[2] + v.c_[2]};
}

VectorField operator-(const VectorField& u, const VectorField& v) {
    return {u.c_[0] - v.c_[0], u.c_[1] - v.c_[1], u.c_[2] - v.c_[2]};
}

VectorField operator*(Complex s, const VectorField& u) { return {s * u.c_[0], s * u.c_[1], s * u.c_[2]}; }

BiqField::BiqField(Cube cube) : c_{FracField(cube), FracField(cube), FracField(cube), FracField(cube)} {}

BiqField::BiqField(FracField u0, VectorField u) : c_{std::move(u0), u(1), u(2), u(3)} {
    require_same_cube(c_[0].cube(), c_[1].cube());
}

BiqField BiqField::scalar(FracField u0) {
    const Cube cube = u0.cube();
    return {std::move(u0), VectorField(cube)};
}

BiqField BiqField::vector(VectorField u) {
    const Cube cube = u.cube();
    return {FracField(cube), std::move(u)};
}

const FracField& BiqField::operator[](int n) const {
    if (n < 0 || n > 3) throw DomainError("biquaternion component must be 0..3");
    return c_[static_cast<std::size_t>(n)];
}

FracField& BiqField::operator[](int n) {
    if (n < 0 || n > 3) throw DomainError("biquaternion component must be 0..3");
    return c_[static_cast<std::size_t>(n)];
}

bool BiqField::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const FracField& f) { return f.is_zero(); });
}

double BiqField::coeff_norm() const {
    double m = 0.0;
    for (const auto& f : c_) m = std::max(m, f.coeff_norm());
    return m;
}

BiqField BiqField::operator-() const { return {-c_[0], {-c_[1], -c_[2], -c_[3]}}; }

BiqField operator+(const BiqField& u, const BiqField& v) {
    return {u.c_[0] + v.c_[0], {u.c_[1] + v.c_[1], u.c_[2] + v.c_[2], u.c_[3] + v.c_[3]}};
}

BiqField operator-(const BiqField& u, const BiqField& v) {
    return {u.c_[0] - v.c_[0], {u.c_[1] - v.c_[1], u.c_[2] - v.c_[2], u.c_[3] - v.c_[3]}};
}

BiqField operator*(Complex s, const BiqField& u) {
    return {s * u.c_[0], {s * u.c_[1], s * u.c_[2], s * u.c_[3]}};
}

BiqField left_mul(const Biquaternion& q, const BiqField& u) {
    BiqField r(u.cube());
    for (int m = 0; m < 4; ++m) {
        if (q[m] == Complex{}) continue;
        for (int n = 0; n < 4; ++n) {
            const auto [sign, k] = unit_product(m, n);
            r[k] += (static_cast<double>(sign) * q[m]) * u[n];
        }
    }
    return r;
}

BiqField right_mul(const BiqField& u, const Biquaternion& q) {
    BiqField r(u.cube());
    for (int n = 0; n < 4; ++n) {
        if (q[n] == Complex{}) continue;
        for (int m = 0; m < 4; ++m) {
            const auto [sign, k] = unit_product(m, n);
            r[k] += (static_cast<double>(sign) * q[n]) * u[m];
        }
    }
    return r;
}

double coeff_rel_diff(const VectorField& u, const VectorField& v) {
    double num = 0.0;
    for (int n = 1; n <= 3; ++n) num = std::max(num, coeff_abs_diff(u(n), v(n)));
    const double den = std::max(u.coeff_norm(), v.coeff_norm());
    return den == 0.0 ? 0.0 : num / den;
}

double coeff_rel_diff(const BiqField& u, const BiqField& v) {
    double num = 0.0;
    for (int n = 0; n <= 3; ++n) num = std::max(num, coeff_abs_diff(u[n], v[n]));
    const double den = std::max(u.coeff_norm(), v.coeff_norm());
    return den == 0.0 ? 0.0 : num / den;
}

double norm_max(const VectorField& u, int grid) {
    double m = 0.0;
    for (int n = 1; n <= 3; ++n) m = std::max(m, norm_max(u(n), grid));
    return m;
}

double norm_max(const BiqField& u, int grid) {
    double m = 0.0;
    for (int n = 0; n <= 3; ++n) m = std::max(m, norm_max(u[n], grid));
    return m;
}

bool semigroup_admissible(const VectorField& u) {
    return semigroup_admissible(u(1)) && semigroup_admissible(u(2)) && semigroup_admissible(u(3));
}

bool semigroup_admissible(const BiqField& u) {
    for (int n = 0; n <= 3; ++n)
        if (!semigroup_admissible(u[n])) return false;
    return true;
}

DerivedOrders::DerivedOrders(const OrderVector& ord) {
    for (int n = 1; n <= 3; ++n) mu[axis_index(n)] = (Rational(1) + ord(n)) / Rational(2);
}

FracField partial(const FracField& f, int axis, const OrderVector& ord) {
    return caputo_deriv(f, axis, DerivedOrders(ord)(axis));
}

BiqField partial(const BiqField& u, int axis, const OrderVector& ord) {
    return {partial(u[0], axis, ord),
            {partial(u[1], axis, ord), partial(u[2], axis, ord), partial(u[3], axis, ord)}};
}

VectorField grad(const FracField& u0, const OrderVector& ord) {
    return {partial(u0, 1, ord), partial(u0, 2, ord), partial(u0, 3, ord)};
}

FracField div(const VectorField& u, const OrderVector& ord) {
    return partial(u(1), 1, ord) + partial(u(2), 2, ord) + partial(u(3), 3, ord);
}

VectorField curl(const VectorField& u, const OrderVector& ord) {
    return {partial(u(3), 2, ord) - partial(u(2), 3, ord),
            partial(u(1), 3, ord) - partial(u(3), 1, ord),
            partial(u(2), 1, ord) - partial(u(1), 2, ord)};
}

BiqField dirac_left(const BiqField& u, const OrderVector& ord) {
    BiqField r(u.cube());
    for (int n = 1; n <= 3; ++n) r = r + left_mul(Biquaternion::unit(n), partial(u, n, ord));
    return r;
}

BiqField dirac_left_via_vector_ops(const BiqField& u, const OrderVector& ord) {
    const VectorField v = u.vec();
    return {-div(v, ord), grad(u.sc(), ord) + curl(v, ord)};
}

BiqField dirac_right(const BiqField& u, const OrderVector& ord) {
    BiqField r(u.cube());
    for (int n = 1; n <= 3; ++n) r = r + right_mul(partial(u, n, ord), Biquaternion::unit(n));
    return r;
}

namespace {

FracField laplace_component(const FracField& f, const OrderVector& ord, Precondition pre) {
    if (pre == Precondition::enforce && !semigroup_admissible(f))
        throw DomainError("fractional Laplacian needs exponents in {0} U [2, inf) on every axis");
    FracField r(f.cube());
    for (int n = 1; n <= 3; ++n) r += caputo_deriv(f, n, Rational(1) + ord(n));
    return r;
}

}  // namespace

BiqField laplace(const BiqField& u, const OrderVector& ord, Precondition pre) {
    return {laplace_component(u[0], ord, pre),
            {laplace_component(u[1], ord, pre), laplace_component(u[2], ord, pre),
             laplace_component(u[3], ord, pre)}};
}

VectorField laplace(const VectorField& u, const OrderVector& ord, Precondition pre) {
    return {laplace_component(u(1), ord, pre), laplace_component(u(2), ord, pre),
            laplace_component(u(3), ord, pre)};
}

BiqField dirac_displaced(const BiqField& u, const OrderVector& ord, Complex kappa, Shift sign) {
    const Complex k = sign == Shift::plus ? kappa : -kappa;
    return dirac_left(u, ord) + k * u;
}

BiqField helmholtz(const BiqField& u, const OrderVector& ord, Complex kappa, Precondition pre) {
    return laplace(u, ord, pre) + (kappa * kappa) * u;
}

}  // namespace fracq
