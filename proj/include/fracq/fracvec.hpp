#pragma once

#include <array>

#include "fracq/fracfield.hpp"

namespace fracq {

/// Three FracField components on one cube.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(Cube cube);
    VectorField(FracField u1, FracField u2, FracField u3);

    const Cube& cube() const { return c_[0].cube(); }
    /// Component n in {1, 2, 3}.
    const FracField& operator()(int n) const { return c_[axis_index(n)]; }
    FracField& operator()(int n) { return c_[axis_index(n)]; }
    const std::array<FracField, 3>& components() const { return c_; }

    bool is_zero() const;
    double coeff_norm() const;

    VectorField operator-() const;
    friend VectorField operator+(const VectorField& u, const VectorField& v);
    friend VectorField operator-(const VectorField& u, const VectorField& v);
    friend VectorField operator*(Complex s, const VectorField& u);

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    std::array<FracField, 3> c_;
};

/// H(C)-valued field U = u0 + u1 e1 + u2 e2 + u3 e3.
class BiqField {
public:
    BiqField() = default;
    explicit BiqField(Cube cube);
    BiqField(FracField u0, VectorField u);
    static BiqField scalar(FracField u0);
    static BiqField vector(VectorField u);

    const Cube& cube() const { return c_[0].cube(); }
    /// Component n in {0, 1, 2, 3}.
    const FracField& operator[](int n) const;
    FracField& operator[](int n);

    const FracField& sc() const { return c_[0]; }
    VectorField vec() const { return {c_[1], c_[2], c_[3]}; }

    bool is_zero() const;
    double coeff_norm() const;

    BiqField operator-() const;
    friend BiqField operator+(const BiqField& u, const BiqField& v);
    friend BiqField operator-(const BiqField& u, const BiqField& v);
    friend BiqField operator*(Complex s, const BiqField& u);

    friend bool operator==(const BiqField&, const BiqField&) = default;

private:
    std::array<FracField, 4> c_;
};

/// q U (constant biquaternion on the left).
BiqField left_mul(const Biquaternion& q, const BiqField& u);
/// U q (constant biquaternion on the right).
BiqField right_mul(const BiqField& u, const Biquaternion& q);

double coeff_rel_diff(const VectorField& u, const VectorField& v);
double coeff_rel_diff(const BiqField& u, const BiqField& v);
double norm_max(const VectorField& u, int grid = 33);
double norm_max(const BiqField& u, int grid = 33);
bool semigroup_admissible(const VectorField& u);
bool semigroup_admissible(const BiqField& u);

/// Orders (1 + alpha_n)/2 of the first-order operators, each in (1/2, 1].
struct DerivedOrders {
    std::array<Rational, 3> mu;

    explicit DerivedOrders(const OrderVector& ord);
    const Rational& operator()(int axis) const { return mu[axis_index(axis)]; }
};

/// Component-wise Caputo derivative of order (1 + alpha_n)/2 along axis n.
FracField partial(const FracField& f, int axis, const OrderVector& ord);
BiqField partial(const BiqField& u, int axis, const OrderVector& ord);

VectorField grad(const FracField& u0, const OrderVector& ord);
FracField div(const VectorField& u, const OrderVector& ord);
VectorField curl(const VectorField& u, const OrderVector& ord);

/// sum_n e_n D_n U (quaternionic left action).
BiqField dirac_left(const BiqField& u, const OrderVector& ord);
/// -Div u + Grad u0 + Curl u, assembled from the vector operators.
BiqField dirac_left_via_vector_ops(const BiqField& u, const OrderVector& ord);
/// sum_n (D_n U) e_n (quaternionic right action).
BiqField dirac_right(const BiqField& u, const OrderVector& ord);

enum class Precondition { enforce, waive };

/// sum_n D^{1+alpha_n} along axis n, component-wise. With `enforce`, every
/// component must be semigroup-admissible on every axis.
BiqField laplace(const BiqField& u, const OrderVector& ord, Precondition pre = Precondition::enforce);
VectorField laplace(const VectorField& u, const OrderVector& ord,
                    Precondition pre = Precondition::enforce);

enum class Shift { plus, minus };

/// (D +- kappa) U.
BiqField dirac_displaced(const BiqField& u, const OrderVector& ord, Complex kappa, Shift sign);

/// (Laplace + kappa^2) U.
BiqField helmholtz(const BiqField& u, const OrderVector& ord, Complex kappa,
                   Precondition pre = Precondition::enforce);

}  // namespace fracq
