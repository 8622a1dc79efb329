#include "fracq/classical.hpp"

#include "fracq/errors.hpp"

namespace fracq::classical {

FracField partial(const FracField& f, int axis) {
    const std::size_t k = axis_index(axis);
    std::vector<FracTerm> out;
    for (const auto& [e, c] : f.terms()) {
        if (!e[k].is_integer()) throw DomainError("classical derivative needs integer exponents, got " + e[k].str());
        const std::int64_t p = e[k].num();
        if (p == 0) continue;
        Exponents shifted = e;
        shifted[k] = Rational(p - 1);
        out.push_back({c * static_cast<double>(p), shifted});
    }
    return FracField(f.cube(), out);
}

VectorField grad(const FracField& f) { return {partial(f, 1), partial(f, 2), partial(f, 3)}; }

FracField div(const VectorField& u) { return partial(u(1), 1) + partial(u(2), 2) + partial(u(3), 3); }

VectorField curl(const VectorField& u) {
    return {partial(u(3), 2) - partial(u(2), 3), partial(u(1), 3) - partial(u(3), 1),
            partial(u(2), 1) - partial(u(1), 2)};
}

FracField laplace(const FracField& f) {
    FracField r(f.cube());
    for (int n = 1; n <= 3; ++n) r += partial(partial(f, n), n);
    return r;
}

FracField random_polynomial(FieldRng& rng, Cube cube, std::size_t max_terms) {
    static const Rational pool[] = {0, 0, 1, 2, 3, 4};
    return rng.field(cube, pool, max_terms);
}

VectorField random_polynomial_vector(FieldRng& rng, Cube cube, std::size_t max_terms) {
    auto u1 = random_polynomial(rng, cube, max_terms);
    auto u2 = random_polynomial(rng, cube, max_terms);
    auto u3 = random_polynomial(rng, cube, max_terms);
    return {std::move(u1), std::move(u2), std::move(u3)};
}

}  // namespace fracq::classical
