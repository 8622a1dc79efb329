#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fracq/errors.hpp"
#include "fracq/fracvec.hpp"
#include "fracq/random_fields.hpp"
#include "fracq/classical.hpp"

using namespace fracq;

namespace {

const Cube kUnit{0.0, 1.0};
const Cube kShifted{1.0, 2.0};
const OrderVector kHalf = OrderVector::uniform(Rational(1, 2));
const OrderVector kMixed(Rational(1, 4), Rational(3, 4), Rational(1));
const OrderVector kClassical = OrderVector::uniform(Rational(1));

constexpr double kG3OverG94 = 1.7652202421133396119;
constexpr double kFourOverSqrtPi = 2.2567583341910251478;

FracField mono(Cube c, Complex k, Rational p1, Rational p2 = 0, Rational p3 = 0) {
    return FracField::monomial(c, k, {p1, p2, p3});
}

}  // namespace

TEST_CASE("gradient") {
    CHECK(grad(FracField::constant(kUnit, 2.0), kHalf).is_zero());
    const auto g = grad(mono(kUnit, 1.0, 2), kHalf);
    CHECK(g(2).is_zero());
    CHECK(g(3).is_zero());
    CHECK(std::abs(g(1).coeff({Rational(5, 4), 0, 0}) - kG3OverG94) <= 1e-13);
}

TEST_CASE("divergence and curl") {
    const FracField zero(kUnit);
    CHECK(div(VectorField(FracField::constant(kUnit, 1.0), FracField::constant(kUnit, 2.0), FracField::constant(kUnit, 3.0)), kHalf).is_zero());
    const auto d = div(VectorField(mono(kUnit, 1.0, 2), zero, zero), kHalf);
    CHECK(std::abs(d.coeff({Rational(5, 4), 0, 0}) - kG3OverG94) <= 1e-13);

    const auto c = curl(VectorField(zero, zero, mono(kUnit, 1.0, 0, 2)), kHalf);
    CHECK(std::abs(c(1).coeff({0, Rational(5, 4), 0}) - kG3OverG94) <= 1e-13);
    CHECK(c(2).is_zero());
    CHECK(c(3).is_zero());

    FieldRng rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto u = rng.general_vector(i % 2 ? kUnit : kShifted, 4);
        CHECK(div(curl(u, kMixed), kMixed).is_zero());
        CHECK(curl(grad(rng.general(kUnit, 4), kHalf), kHalf).is_zero());
    }
}

TEST_CASE("left Dirac operator") {
    CHECK(dirac_left(BiqField::scalar(FracField::constant(kUnit, 3.0)), kHalf).is_zero());

    FieldRng rng(13);
    const auto u0 = rng.admissible(kUnit);
    const auto scalar_case = dirac_left(BiqField::scalar(u0), kHalf);
    CHECK(scalar_case.sc().is_zero());
    CHECK(scalar_case.vec() == grad(u0, kHalf));

    for (int i = 0; i < 50; ++i) {
        const auto u = BiqField(rng.general(kUnit), rng.general_vector(kUnit));
        const auto direct = dirac_left(u, kMixed);
        const auto split = dirac_left_via_vector_ops(u, kMixed);
        CHECK(coeff_rel_diff(direct, split) <= 1e-12);
        CHECK((direct - split).is_zero());
        // scalar part -Div, vector part Grad + Curl
        CHECK((direct.sc() + div(u.vec(), kMixed)).is_zero());
        CHECK((direct.vec() - grad(u.sc(), kMixed) - curl(u.vec(), kMixed)).is_zero());
    }
}

TEST_CASE("right Dirac operator") {
    FieldRng rng(21);
    const auto u0 = rng.admissible(kShifted);
    CHECK(dirac_right(BiqField::scalar(u0), kHalf) == dirac_left(BiqField::scalar(u0), kHalf));
    CHECK(dirac_right(BiqField::scalar(FracField::constant(kUnit, 1.0)), kHalf).is_zero());

    // U = e1 (x2 - a)^2: left gives e2 e1 = -e3, right gives e1 e2 = e3
    const FracField zero(kUnit);
    const auto u = BiqField::vector(VectorField(mono(kUnit, 1.0, 0, 2), zero, zero));
    const auto left = dirac_left(u, kHalf), right = dirac_right(u, kHalf);
    CHECK(left[3] == -right[3]);
    CHECK_FALSE(left[3].is_zero());
    CHECK(left[0] == right[0]);
}

TEST_CASE("fractional Laplacian") {
    CHECK(laplace(BiqField::scalar(FracField::constant(kUnit, 4.0)), kHalf).is_zero());
    const auto t2 = mono(kUnit, 1.0, 2);
    const auto l = laplace(BiqField::scalar(t2), kHalf);
    CHECK(std::abs(l.sc().coeff({Rational(1, 2), 0, 0}) - kFourOverSqrtPi) <= 1e-12);
    const auto via_semigroup = caputo_deriv(caputo_deriv(t2, 1, Rational(3, 4)), 1, Rational(3, 4));
    CHECK(coeff_rel_diff(l.sc(), via_semigroup) <= 1e-12);
    CHECK_THROWS_AS(laplace(BiqField::scalar(mono(kUnit, 1.0, 1)), kHalf), DomainError);
    CHECK_NOTHROW(laplace(BiqField::scalar(mono(kUnit, 1.0, 1)), kHalf, Precondition::waive));
}

TEST_CASE("Dirac operator factorizes the Laplacian on admissible fields") {
    FieldRng rng(31);
    for (const auto& ord : {kHalf, kMixed, kClassical}) {
        for (int i = 0; i < 15; ++i) {
            const auto u = rng.admissible_biq(i % 2 ? kUnit : kShifted);
            const auto lhs = -dirac_left(dirac_left(u, ord), ord);
            CHECK(coeff_rel_diff(lhs, laplace(u, ord)) <= 1e-10);
        }
    }
    // exponent 1 breaks f'(a) = 0: the factorization no longer holds
    const auto bad = BiqField::scalar(mono(kUnit, 1.0, 1) + mono(kUnit, 0.5, 2, 2));
    const auto lhs = -dirac_left(dirac_left(bad, kHalf), kHalf);
    const auto rhs = laplace(bad, kHalf, Precondition::waive);
    CHECK((lhs - rhs).coeff_norm() >= 1e-3 * bad.coeff_norm());
}

TEST_CASE("displaced Dirac and Helmholtz operators") {
    FieldRng rng(41);
    const auto u = rng.admissible_biq(kUnit);
    CHECK(dirac_displaced(u, kHalf, 0.0, Shift::plus) == dirac_left(u, kHalf));
    const auto c = BiqField(FracField::constant(kUnit, 1.0), VectorField(FracField::constant(kUnit, 2.0), FracField(kUnit), FracField(kUnit)));
    const Complex i{0.0, 1.0};
    CHECK(dirac_displaced(c, kHalf, i, Shift::plus) == i * c);
    CHECK(helmholtz(u, kHalf, 0.0) == laplace(u, kHalf));
    const auto linear = BiqField::scalar(mono(kUnit, 1.0, 1));
    CHECK_THROWS_AS(helmholtz(linear, kHalf, 1.0), DomainError);
    CHECK(helmholtz(linear, kHalf, 1.0, Precondition::waive) == laplace(linear, kHalf, Precondition::waive) + linear);
    CHECK(coeff_rel_diff(helmholtz(c, kHalf, {2.0, 3.0}), Complex(2.0, 3.0) * Complex(2.0, 3.0) * c) <= 1e-15);

    for (const Complex kappa : {Complex(1.0), i, Complex(2.0, 3.0)}) {
        for (int k = 0; k < 10; ++k) {
            const auto v = rng.admissible_biq(k % 2 ? kUnit : kShifted);
            const auto factored = -dirac_displaced(dirac_displaced(v, kMixed, kappa, Shift::plus), kMixed, kappa, Shift::minus);
            CHECK(coeff_rel_diff(factored, helmholtz(v, kMixed, kappa)) <= 1e-10);
        }
    }
}

TEST_CASE("integer order reproduces classical vector calculus") {
    FieldRng rng(55);
    for (int i = 0; i < 20; ++i) {
        const auto p = classical::random_polynomial(rng, i % 2 ? kUnit : kShifted);
        const VectorField u(classical::random_polynomial(rng, p.cube()), classical::random_polynomial(rng, p.cube()),
                            classical::random_polynomial(rng, p.cube()));
        CHECK(coeff_rel_diff(grad(p, kClassical), classical::grad(p)) <= 1e-12);
        CHECK(coeff_rel_diff(div(u, kClassical), classical::div(u)) <= 1e-12);
        CHECK(coeff_rel_diff(curl(u, kClassical), classical::curl(u)) <= 1e-12);
        CHECK(coeff_rel_diff(laplace(BiqField::scalar(p), kClassical, Precondition::waive).sc(), classical::laplace(p)) <= 1e-12);
    }
}
