#include "fracq/fracfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fracq/errors.hpp"
#include "fracq/gamma.hpp"

namespace fracq {
namespace {

constexpr Rational kZero{0};
constexpr Rational kOne{1};
constexpr Rational kTwo{2};
constexpr Rational kMinusOne{-1};

void check_finite(Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw DomainError("non-finite coefficient");
}

void check_exponents(const Exponents& e) {
    for (const auto& p : e)
        if (p <= kMinusOne) throw DomainError("exponent " + p.str() + " must exceed -1");
}

double max_abs(const FracField::TermMap& terms) {
    double m = 0.0;
    for (const auto& [e, c] : terms) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace

Cube::Cube(double lo, double hi) : a(lo), b(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw DomainError("cube needs finite a < b");
}

OrderVector::OrderVector(Rational a1, Rational a2, Rational a3) : alpha_{a1, a2, a3} {
    for (const auto& a : alpha_)
        if (a <= kZero || a > kOne) throw DomainError("order " + a.str() + " outside (0, 1]");
}

const Rational& OrderVector::operator()(int axis) const { return alpha_[axis_index(axis)]; }

bool OrderVector::is_classical() const {
    return std::all_of(alpha_.begin(), alpha_.end(), [](const Rational& a) { return a == kOne; });
}

std::size_t axis_index(int axis) {
    if (axis < 1 || axis > 3) throw DomainError("axis must be 1, 2 or 3, got " + std::to_string(axis));
    return static_cast<std::size_t>(axis - 1);
}

void require_same_cube(const Cube& a, const Cube& b) {
    if (!(a == b)) throw CubeMismatch("fields live on different cubes");
}

FracField::FracField(Cube cube, const std::vector<FracTerm>& terms) : cube_(cube) {
    for (const auto& t : terms) add_term(t);
    prune(max_abs(terms_));
}

FracField FracField::constant(Cube cube, Complex c) { return monomial(cube, c, {0, 0, 0}); }

FracField FracField::monomial(Cube cube, Complex c, Exponents exp) {
    FracField f(cube);
    f.add_term({c, exp});
    f.prune(max_abs(f.terms_));
    return f;
}

void FracField::add_term(const FracTerm& t) {
    check_finite(t.coeff);
    check_exponents(t.exp);
    if (t.coeff == Complex{}) return;
    terms_[t.exp] += t.coeff;
}

void FracField::prune(double scale) {
    const double threshold = kPruneRel * scale;
    std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) <= threshold; });
}

bool FracField::is_singular() const {
    for (const auto& [e, c] : terms_)
        for (const auto& p : e)
            if (p < kZero) return true;
    return false;
}

Complex FracField::coeff(const Exponents& exp) const {
    const auto it = terms_.find(exp);
    return it == terms_.end() ? Complex{} : it->second;
}

double FracField::coeff_norm() const { return max_abs(terms_); }

FracField FracField::operator-() const {
    FracField r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

FracField& FracField::operator+=(const FracField& o) {
    require_same_cube(cube_, o.cube_);
    // Cancellation is judged against the operands, so rounding residue of
    // mathematically equal terms does not survive as a spurious tiny term.
    const double scale = std::max(max_abs(terms_), max_abs(o.terms_));
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
    prune(std::max(scale, max_abs(terms_)));
    return *this;
}

FracField& FracField::operator-=(const FracField& o) { return *this += -o; }

FracField operator*(Complex s, const FracField& f) {
    check_finite(s);
    FracField r(f.cube_);
    if (s == Complex{}) return r;
    for (const auto& [e, c] : f.terms_) r.terms_.emplace(e, s * c);
    r.prune(max_abs(r.terms_));
    return r;
}

FracField normalize(FracField f) {
    f.prune(max_abs(f.terms_));
    return f;
}

FracField caputo_deriv(const FracField& f, int axis, const Rational& mu) {
    const std::size_t k = axis_index(axis);
    if (mu <= kZero || mu > kTwo) throw DomainError("Caputo order " + mu.str() + " outside (0, 2]");
    const bool second_order = mu > kOne;
    std::vector<FracTerm> out;
    out.reserve(f.size());
    for (const auto& [e, c] : f.terms()) {
        const Rational& p = e[k];
        if (p < kZero)
            throw DomainError("Caputo derivative of singular term t^" + p.str() +
                              " (derivative not integrable)");
        if (p == kZero || (second_order && p == kOne)) continue;
        if (second_order && p < mu)
            throw DomainError("Caputo order " + mu.str() + " needs exponents 0, 1 or >= order; got " +
                              p.str());
        Exponents shifted = e;
        shifted[k] = p - mu;
        const double pd = p.to_double();
        out.push_back({c * gamma_ratio(pd + 1.0, pd + 1.0 - mu.to_double()), shifted});
    }
    return FracField(f.cube(), out);
}

FracField rl_integral(const FracField& f, int axis, const Rational& alpha) {
    const std::size_t k = axis_index(axis);
    if (alpha <= kZero) throw DomainError("RL integral order must be positive");
    std::vector<FracTerm> out;
    out.reserve(f.size());
    for (const auto& [e, c] : f.terms()) {
        Exponents shifted = e;
        shifted[k] = e[k] + alpha;
        const double pd = e[k].to_double();
        out.push_back({c * gamma_ratio(pd + 1.0, pd + 1.0 + alpha.to_double()), shifted});
    }
    return FracField(f.cube(), out);
}

Complex eval(const FracField& f, const Point& x) {
    const Cube& cube = f.cube();
    for (double xi : x)
        if (!(xi >= cube.a && xi <= cube.b)) throw DomainError("point outside the cube");
    Complex sum{};
    for (const auto& [e, c] : f.terms()) {
        double v = 1.0;
        for (std::size_t n = 0; n < 3; ++n) {
            if (e[n] == kZero) continue;
            const double t = x[n] - cube.a;
            if (t == 0.0) {
                if (e[n] < kZero) throw DomainError("singular term evaluated on the base face");
                v = 0.0;
                break;
            }
            v *= std::pow(t, e[n].to_double());
        }
        sum += c * v;
    }
    return sum;
}

double norm_max(const FracField& f, int grid) {
    if (grid < 2) throw DomainError("norm grid needs at least 2 nodes per axis");
    if (f.is_zero()) return 0.0;
    if (f.is_singular()) return std::numeric_limits<double>::infinity();

    const Cube& cube = f.cube();
    const auto g = static_cast<std::size_t>(grid);
    const double h = cube.length() / (grid - 1);
    // pow tables: powers[term][axis][node]
    std::vector<std::array<std::vector<double>, 3>> powers;
    std::vector<Complex> coeffs;
    for (const auto& [e, c] : f.terms()) {
        std::array<std::vector<double>, 3> tab;
        for (std::size_t n = 0; n < 3; ++n) {
            tab[n].resize(g);
            const double p = e[n].to_double();
            for (std::size_t i = 0; i < g; ++i)
                tab[n][i] = e[n] == kZero ? 1.0 : std::pow(static_cast<double>(i) * h, p);
        }
        powers.push_back(std::move(tab));
        coeffs.push_back(c);
    }
    double best = 0.0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t l = 0; l < g; ++l) {
                Complex s{};
                for (std::size_t t = 0; t < coeffs.size(); ++t)
                    s += coeffs[t] * (powers[t][0][i] * powers[t][1][j] * powers[t][2][l]);
                best = std::max(best, std::abs(s));
            }
    return best;
}

bool semigroup_admissible(const FracField& f, int axis) {
    const std::size_t k = axis_index(axis);
    for (const auto& [e, c] : f.terms())
        if (!(e[k] == kZero || e[k] >= kTwo)) return false;
    return true;
}

bool semigroup_admissible(const FracField& f) {
    return semigroup_admissible(f, 1) && semigroup_admissible(f, 2) && semigroup_admissible(f, 3);
}

double coeff_abs_diff(const FracField& f, const FracField& g) {
    require_same_cube(f.cube(), g.cube());
    double num = 0.0;
    for (const auto& [e, c] : f.terms()) num = std::max(num, std::abs(c - g.coeff(e)));
    for (const auto& [e, c] : g.terms())
        if (!f.terms().contains(e)) num = std::max(num, std::abs(c));
    return num;
}

double coeff_rel_diff(const FracField& f, const FracField& g) {
    const double num = coeff_abs_diff(f, g);
    const double den = std::max(f.coeff_norm(), g.coeff_norm());
    return den == 0.0 ? 0.0 : num / den;
}

}  // namespace fracq
