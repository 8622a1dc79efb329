#pragma once

#include <vector>

#include "fracq/fracfield.hpp"

namespace fracq::oracle {

/// Samples of a function on N+1 uniform nodes x_k = a + k (b - a) / N.
struct SampledFn {
    double a = 0.0;
    double b = 1.0;
    std::vector<Complex> values;

    SampledFn(double lo, double hi, std::vector<Complex> v);

    std::size_t intervals() const { return values.size() - 1; }
    double step() const { return (b - a) / static_cast<double>(intervals()); }
    double node(std::size_t k) const { return a + static_cast<double>(k) * step(); }
};

/// Caputo derivative of order alpha in (0,1) by the L1 scheme: f is replaced by
/// its piecewise-linear interpolant inside the defining integral. Node 0 is 0.
SampledFn l1_caputo(const SampledFn& f, double alpha);

/// Riemann-Liouville integral of order alpha > 0 by product-trapezoidal
/// quadrature (linear interpolant, kernel integrated exactly).
SampledFn rl_integral_quad(const SampledFn& f, double alpha);

struct OracleOp {
    enum class Kind { caputo, rl };
    Kind kind;
    Rational order;

    static OracleOp caputo(Rational mu) { return {Kind::caputo, mu}; }
    static OracleOp rl(Rational alpha) { return {Kind::rl, alpha}; }
};

/// Restriction of f to `axis` through `fixed` (the axis coordinate of `fixed`
/// is ignored), sampled on N+1 nodes.
SampledFn sample_axis(const FracField& f, int axis, const Point& fixed, std::size_t n);

/// Normwise relative error between the closed form (fracfield) and the
/// quadrature oracle on nodes with x - a >= 0.1 (b - a):
/// max |oracle - exact| / max |exact|, or the absolute error if exact vanishes
/// there.
double compare_axis(const FracField& f, int axis, const Point& fixed, const OracleOp& op,
                    std::size_t n);

struct ConvergenceProbe {
    double error_n;
    double error_2n;
    double ratio;  // error_n / error_2n
};

ConvergenceProbe probe_convergence(const FracField& f, int axis, const Point& fixed,
                                   const OracleOp& op, std::size_t n);

}  // namespace fracq::oracle
