#include "fracq/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fracq/errors.hpp"

namespace fracq {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(x) for x >= 1/2.
double lanczos_log_gamma(double x) {
    x -= 1.0;
    double series = kLanczosCoeff[0];
    for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) series += kLanczosCoeff[i] / (x + i);
    const double t = x + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double lanczos_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma of non-finite argument");
    if (x <= 0.0 && x == std::floor(x)) throw DomainError("gamma pole at nonpositive integer");
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));

    const double z = x - 1.0;
    double series = kLanczosCoeff[0];
    for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) series += kLanczosCoeff[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    // Split the power so t^(z+1/2) e^-t does not overflow before the product.
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * series;
}

double gamma_ratio(double x, double y) {
    if (x <= 0.0 || y <= 0.0) throw DomainError("gamma_ratio needs positive arguments");
    if (x < 150.0 && y < 150.0) return lanczos_gamma(x) / lanczos_gamma(y);
    return std::exp(lanczos_log_gamma(x) - lanczos_log_gamma(y));
}

}  // namespace fracq
