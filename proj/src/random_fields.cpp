#include "fracq/random_fields.hpp"

#include <array>

namespace fracq {
namespace {

const std::array<Rational, 8> kAdmissiblePool = {0, 0, 0, 2, Rational(5, 2), 3, Rational(7, 2), 4};
const std::array<Rational, 9> kGeneralPool = {
    0, 0, Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 2), 3, Rational(7, 3)};

}  // namespace

double FieldRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t FieldRng::pick(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

Complex FieldRng::coeff() {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    return {re, im};
}

FracField FieldRng::field(Cube cube, std::span<const Rational> pool, std::size_t max_terms) {
    const std::size_t count = 1 + pick(max_terms);
    std::vector<FracTerm> terms;
    for (std::size_t i = 0; i < count; ++i) {
        Exponents e{pool[pick(pool.size())], pool[pick(pool.size())], pool[pick(pool.size())]};
        terms.push_back({coeff(), e});
    }
    return FracField(cube, terms);
}

FracField FieldRng::admissible(Cube cube, std::size_t max_terms) {
    return field(cube, kAdmissiblePool, max_terms);
}

FracField FieldRng::admissible_1d(Cube cube, int axis, std::size_t max_terms) {
    const std::size_t k = axis_index(axis);
    const std::size_t count = 1 + pick(max_terms);
    std::vector<FracTerm> terms;
    for (std::size_t i = 0; i < count; ++i) {
        Exponents e{0, 0, 0};
        e[k] = kAdmissiblePool[pick(kAdmissiblePool.size())];
        terms.push_back({coeff(), e});
    }
    return FracField(cube, terms);
}

FracField FieldRng::general(Cube cube, std::size_t max_terms) { return field(cube, kGeneralPool, max_terms); }

VectorField FieldRng::admissible_vector(Cube cube, std::size_t max_terms) {
    auto u1 = admissible(cube, max_terms);
    auto u2 = admissible(cube, max_terms);
    auto u3 = admissible(cube, max_terms);
    return {std::move(u1), std::move(u2), std::move(u3)};
}

VectorField FieldRng::general_vector(Cube cube, std::size_t max_terms) {
    auto u1 = general(cube, max_terms);
    auto u2 = general(cube, max_terms);
    auto u3 = general(cube, max_terms);
    return {std::move(u1), std::move(u2), std::move(u3)};
}

BiqField FieldRng::admissible_biq(Cube cube, std::size_t max_terms) {
    auto u0 = admissible(cube, max_terms);
    auto u = admissible_vector(cube, max_terms);
    return {std::move(u0), std::move(u)};
}

}  // namespace fracq
