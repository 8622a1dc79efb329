#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "fracq/biquaternion.hpp"
#include "fracq/rational.hpp"

namespace fracq {

/// The domain W = [a, b]^3. Caputo operators are based at `a` on every axis.
struct Cube {
    double a = 0.0;
    double b = 1.0;

    Cube() = default;
    Cube(double lo, double hi);

    double length() const { return b - a; }
    friend bool operator==(const Cube&, const Cube&) = default;
};

using Exponents = std::array<Rational, 3>;
using Point = std::array<double, 3>;

/// coeff * prod_n (x_n - a)^{exp[n]}
struct FracTerm {
    Complex coeff;
    Exponents exp;
};

/// Fractional orders (alpha_1, alpha_2, alpha_3), each in (0, 1].
class OrderVector {
public:
    OrderVector(Rational a1, Rational a2, Rational a3);
    static OrderVector uniform(Rational a) { return {a, a, a}; }

    /// alpha_n for axis n in {1, 2, 3}.
    const Rational& operator()(int axis) const;
    const std::array<Rational, 3>& values() const { return alpha_; }
    bool is_classical() const;

    friend bool operator==(const OrderVector&, const OrderVector&) = default;

private:
    std::array<Rational, 3> alpha_;
};

/// Validates an axis index in {1, 2, 3} and returns it zero-based.
std::size_t axis_index(int axis);

/// Finite sum of shifted power terms over a cube, in canonical form: one
/// coefficient per exponent triple, no zero coefficients.
///
/// Exponents are exact rationals greater than -1. Negative exponents only arise
/// from differentiating below the class (e.g. D^{3/4} t^{1/4}) and are kept so
/// that failing identities can be measured; such terms are "singular" at the
/// base face and cannot be differentiated further.
class FracField {
public:
    using TermMap = std::map<Exponents, Complex>;

    FracField() = default;
    explicit FracField(Cube cube) : cube_(cube) {}
    FracField(Cube cube, const std::vector<FracTerm>& terms);

    static FracField constant(Cube cube, Complex c);
    static FracField monomial(Cube cube, Complex c, Exponents exp);

    const Cube& cube() const { return cube_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_singular() const;
    /// Coefficient of an exponent triple, zero if absent.
    Complex coeff(const Exponents& exp) const;
    /// Largest |coeff|.
    double coeff_norm() const;

    FracField operator-() const;
    FracField& operator+=(const FracField& o);
    FracField& operator-=(const FracField& o);
    friend FracField operator+(FracField f, const FracField& g) { return f += g; }
    friend FracField operator-(FracField f, const FracField& g) { return f -= g; }
    friend FracField operator*(Complex s, const FracField& f);
    friend FracField operator*(const FracField& f, Complex s) { return s * f; }

    /// Raw insertion used by the operators; merges and re-normalizes.
    void add_term(const FracTerm& t);

    friend bool operator==(const FracField&, const FracField&) = default;

private:
    void prune(double scale);

    Cube cube_;
    TermMap terms_;

    friend FracField normalize(FracField f);
};

/// Relative pruning threshold: terms with |c| <= kPruneRel * scale are dropped.
inline constexpr double kPruneRel = 1e-14;

/// Drops terms with |c| <= 1e-14 * (largest |c|).
FracField normalize(FracField f);

/// Left Caputo derivative of order mu in (0, 2] along `axis`, term-wise:
/// c t^p -> c Gamma(p+1)/Gamma(p+1-mu) t^{p-mu}, with t^0 -> 0 and, for mu > 1,
/// t^1 -> 0. Throws DomainError for terms outside the closed form: singular
/// exponents (p < 0), and for mu > 1 exponents in (0,1) or (1, mu).
FracField caputo_deriv(const FracField& f, int axis, const Rational& mu);

/// Left Riemann-Liouville integral of order alpha > 0 along `axis`:
/// c t^p -> c Gamma(p+1)/Gamma(p+1+alpha) t^{p+alpha}.
FracField rl_integral(const FracField& f, int axis, const Rational& alpha);

/// Pointwise value with 0^0 = 1. DomainError outside the cube, or on the base
/// face of a singular term.
Complex eval(const FracField& f, const Point& x);

/// max |f| over the uniform grid^3 tensor grid on the cube (+inf if singular).
double norm_max(const FracField& f, int grid = 33);

/// Every exponent along `axis` lies in {0} U [2, inf): constants and C^2
/// functions with vanishing first derivative at the base point.
bool semigroup_admissible(const FracField& f, int axis);
bool semigroup_admissible(const FracField& f);

/// max_k |f_k - g_k| / max_k max(|f_k|, |g_k|) over the union of exponent
/// triples; 0 when both are empty.
double coeff_rel_diff(const FracField& f, const FracField& g);

/// max_k |f_k - g_k| over the union of exponent triples.
double coeff_abs_diff(const FracField& f, const FracField& g);

/// Error if cubes differ.
void require_same_cube(const Cube& a, const Cube& b);

}  // namespace fracq
