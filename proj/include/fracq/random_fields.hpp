#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "fracq/fracvec.hpp"

namespace fracq {

/// Seeded generator for test and verification fields. Draws are built from raw
/// mt19937_64 output so a seed gives the same fields on every platform.
class FieldRng {
public:
    explicit FieldRng(std::uint64_t seed) : engine_(seed) {}

    double uniform();  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t pick(std::size_t n);
    Complex coeff();  // re, im uniform in [-1, 1)

    /// Up to `max_terms` terms with exponents drawn from `pool` on every axis.
    FracField field(Cube cube, std::span<const Rational> pool, std::size_t max_terms);
    /// Exponents in {0} U [2, inf) on every axis (semigroup-admissible).
    FracField admissible(Cube cube, std::size_t max_terms = 4);
    /// Admissible and depending on `axis` only.
    FracField admissible_1d(Cube cube, int axis, std::size_t max_terms = 4);
    /// Arbitrary exponents from {0, 1/2, 1, 3/2, 2, 5/2, 3}.
    FracField general(Cube cube, std::size_t max_terms = 4);

    VectorField admissible_vector(Cube cube, std::size_t max_terms = 3);
    VectorField general_vector(Cube cube, std::size_t max_terms = 3);
    BiqField admissible_biq(Cube cube, std::size_t max_terms = 3);

private:
    std::mt19937_64 engine_;
};

}  // namespace fracq
