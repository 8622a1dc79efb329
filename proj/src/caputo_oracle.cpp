#include "fracq/caputo_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracq/errors.hpp"
#include "fracq/gamma.hpp"

namespace fracq::oracle {

SampledFn::SampledFn(double lo, double hi, std::vector<Complex> v) : a(lo), b(hi), values(std::move(v)) {
    if (!(lo < hi)) throw DomainError("sampled interval needs a < b");
    if (values.size() < 9) throw DomainError("sampled function needs N >= 8 intervals");
    for (const auto& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("non-finite sample");
}

SampledFn l1_caputo(const SampledFn& f, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("L1 scheme needs alpha in (0, 1)");
    const std::size_t n = f.intervals();
    // b_l = (l+1)^{1-alpha} - l^{1-alpha}
    std::vector<double> w(n);
    for (std::size_t l = 0; l < n; ++l)
        w[l] = std::pow(static_cast<double>(l + 1), 1.0 - alpha) - std::pow(static_cast<double>(l), 1.0 - alpha);
    std::vector<Complex> diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = f.values[j + 1] - f.values[j];

    const double scale = std::pow(f.step(), -alpha) / lanczos_gamma(2.0 - alpha);
    std::vector<Complex> out(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Complex s{};
        for (std::size_t j = 0; j < k; ++j) s += w[k - 1 - j] * diff[j];
        out[k] = scale * s;
    }
    return {f.a, f.b, std::move(out)};
}

SampledFn rl_integral_quad(const SampledFn& f, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("RL quadrature needs alpha > 0");
    const std::size_t n = f.intervals();
    const double ap1 = alpha + 1.0;
    auto pw = [ap1](double m) { return std::pow(m, ap1); };
    // Interior weight for distance m = k - j >= 1.
    std::vector<double> inner(n + 1, 0.0);
    for (std::size_t m = 1; m <= n; ++m) {
        const double md = static_cast<double>(m);
        inner[m] = pw(md + 1.0) - 2.0 * pw(md) + pw(md - 1.0);
    }
    const double scale = std::pow(f.step(), alpha) / lanczos_gamma(alpha + 2.0);
    std::vector<Complex> out(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double first = pw(kd - 1.0) - (kd - 1.0 - alpha) * std::pow(kd, alpha);
        Complex s = first * f.values[0] + f.values[k];
        for (std::size_t j = 1; j < k; ++j) s += inner[k - j] * f.values[j];
        out[k] = scale * s;
    }
    return {f.a, f.b, std::move(out)};
}

SampledFn sample_axis(const FracField& f, int axis, const Point& fixed, std::size_t n) {
    const std::size_t k = axis_index(axis);
    const Cube& cube = f.cube();
    std::vector<Complex> v(n + 1);
    Point x = fixed;
    for (std::size_t i = 0; i <= n; ++i) {
        x[k] = i == n ? cube.b : cube.a + static_cast<double>(i) * cube.length() / static_cast<double>(n);
        v[i] = eval(f, x);
    }
    return {cube.a, cube.b, std::move(v)};
}

double compare_axis(const FracField& f, int axis, const Point& fixed, const OracleOp& op, std::size_t n) {
    const std::size_t k = axis_index(axis);
    const SampledFn samples = sample_axis(f, axis, fixed, n);
    FracField exact;
    SampledFn approx = samples;
    if (op.kind == OracleOp::Kind::caputo) {
        if (!(op.order > Rational(0) && op.order < Rational(1)))
            throw DomainError("oracle Caputo order must lie in (0, 1)");
        exact = caputo_deriv(f, axis, op.order);
        approx = l1_caputo(samples, op.order.to_double());
    } else {
        exact = rl_integral(f, axis, op.order);
        approx = rl_integral_quad(samples, op.order.to_double());
    }

    const auto first = static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(n) - 1e-9));
    double err = 0.0;
    double ref = 0.0;
    Point x = fixed;
    for (std::size_t i = first; i <= n; ++i) {
        x[k] = i == n ? samples.b : samples.node(i);
        const Complex e = eval(exact, x);
        err = std::max(err, std::abs(approx.values[i] - e));
        ref = std::max(ref, std::abs(e));
    }
    return ref == 0.0 ? err : err / ref;
}

ConvergenceProbe probe_convergence(const FracField& f, int axis, const Point& fixed, const OracleOp& op,
                                   std::size_t n) {
    const double e1 = compare_axis(f, axis, fixed, op, n);
    const double e2 = compare_axis(f, axis, fixed, op, 2 * n);
    const double ratio = e2 == 0.0 ? std::numeric_limits<double>::infinity() : e1 / e2;
    return {e1, e2, ratio};
}

}  // namespace fracq::oracle
