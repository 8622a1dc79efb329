#include "fracq/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <limits>

#include "fracq/caputo_oracle.hpp"
#include "fracq/classical.hpp"
#include "fracq/errors.hpp"
#include "fracq/random_fields.hpp"

namespace fracq {
namespace {

using io::Bound;
using io::make_row;
using io::ReportRow;
using io::RunConfig;

constexpr int kFields = 12;
constexpr Complex kI{0.0, 1.0};

struct SuiteResult {
    std::vector<ReportRow> rows;
    std::string error;
};

// Each suite gets its own stream so results do not depend on run order.
FieldRng suite_rng(const RunConfig& cfg, std::uint64_t salt) { return FieldRng(cfg.seed * 0x9E3779B97F4A7C15ULL + salt); }

std::vector<ReportRow> semigroup_suite(const RunConfig& cfg) {
    const std::string suite = "caputo-semigroup";
    FieldRng rng = suite_rng(cfg, 1);
    const Rational mus[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    double worst = 0.0;
    for (int i = 0; i < kFields; ++i) {
        const int axis = 1 + i % 3;
        const FracField f = rng.admissible_1d(cfg.cube, axis);
        for (const auto& m1 : mus)
            for (const auto& m2 : mus) {
                if (m1 + m2 <= Rational(1)) continue;
                const auto composed = caputo_deriv(caputo_deriv(f, axis, m2), axis, m1);
                worst = std::max(worst, coeff_rel_diff(composed, caputo_deriv(f, axis, m1 + m2)));
            }
    }
    // f = x - a violates f'(a) = 0
    const FracField t = FracField::monomial(cfg.cube, 1.0, {1, 0, 0});
    const Rational q(3, 4);
    const double guard = coeff_rel_diff(caputo_deriv(caputo_deriv(t, 1, q), 1, q), caputo_deriv(t, 1, q + q));
    return {make_row(suite, "composition-law", worst, cfg.tolerance),
            make_row(suite, "composition-law-counterexample", guard, kGuardMin, Bound::at_least)};
}

std::vector<ReportRow> oracle_suite(const RunConfig& cfg) {
    const std::string suite = "caputo-oracle";
    FieldRng rng = suite_rng(cfg, 2);
    std::vector<std::pair<FracField, int>> fields{{FracField::monomial(cfg.cube, 1.0, {2, 0, 0}), 1}};
    for (int i = 0; i < 4; ++i) fields.emplace_back(rng.admissible(cfg.cube), 1 + i % 3);
    const double a = cfg.cube.a, len = cfg.cube.length();
    const Point fixed{a + 0.6 * len, a + 0.3 * len, a + 0.8 * len};
    double worst = 0.0;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& [f, axis] : fields)
        for (const Rational mu : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            const auto p = oracle::probe_convergence(f, axis, fixed, oracle::OracleOp::caputo(mu), cfg.oracle_n);
            worst = std::max(worst, p.error_n);
            if (p.error_n > kOracleRatioFloor) min_ratio = std::min(min_ratio, p.ratio);
        }
    return {make_row(suite, "l1-agreement", worst, kOracleAgreementTol),
            make_row(suite, "l1-convergence-ratio", min_ratio, kOracleRatioMin, Bound::at_least)};
}

std::vector<ReportRow> vector_calculus_suite(const RunConfig& cfg) {
    const std::string suite = "vector-calculus";
    FieldRng rng = suite_rng(cfg, 3);
    double div_curl = 0.0, curl_grad = 0.0;
    for (int i = 0; i < kFields; ++i) {
        const auto u = rng.general_vector(cfg.cube, 4);
        div_curl = std::max(div_curl, div(curl(u, cfg.orders), cfg.orders).coeff_norm() / std::max(1.0, u.coeff_norm()));
        const auto p = rng.general(cfg.cube, 4);
        curl_grad = std::max(curl_grad, curl(grad(p, cfg.orders), cfg.orders).coeff_norm() / std::max(1.0, p.coeff_norm()));
    }
    return {make_row(suite, "div-curl", div_curl, cfg.tolerance), make_row(suite, "curl-grad", curl_grad, cfg.tolerance)};
}

std::vector<ReportRow> dirac_suite(const RunConfig& cfg) {
    const std::string suite = "dirac";
    const auto& ord = cfg.orders;
    FieldRng rng = suite_rng(cfg, 4);
    double factor = 0.0, decomposition = 0.0, helm = 0.0;
    const Complex kappas[] = {1.0, kI, {2.0, 3.0}, cfg.medium.kappa()};
    for (int i = 0; i < kFields; ++i) {
        const auto u = rng.admissible_biq(cfg.cube);
        factor = std::max(factor, coeff_rel_diff(-dirac_left(dirac_left(u, ord), ord), laplace(u, ord)));
        for (const Complex k : kappas) {
            const auto lhs = -dirac_displaced(dirac_displaced(u, ord, k, Shift::plus), ord, k, Shift::minus);
            helm = std::max(helm, coeff_rel_diff(lhs, helmholtz(u, ord, k)));
        }
        const BiqField g(rng.general(cfg.cube), rng.general_vector(cfg.cube));
        decomposition = std::max(decomposition, coeff_rel_diff(dirac_left(g, ord), dirac_left_via_vector_ops(g, ord)));
    }
    std::vector<ReportRow> rows{make_row(suite, "laplace-factorization", factor, cfg.tolerance),
                                make_row(suite, "div-grad-curl-decomposition", decomposition, cfg.tolerance),
                                make_row(suite, "helmholtz-factorization", helm, cfg.tolerance)};
    // An exponent-1 term on an axis of order below 1 breaks f'(a) = 0. At
    // integer order the factorization holds for every field, so no guard.
    for (int axis = 1; axis <= 3; ++axis) {
        if (ord(axis) == Rational(1)) continue;
        Exponents one{0, 0, 0}, two{2, 2, 2};
        one[axis_index(axis)] = 1;
        const auto bad = BiqField::scalar(FracField::monomial(cfg.cube, 1.0, one) + FracField::monomial(cfg.cube, 0.5, two));
        const auto gap = -dirac_left(dirac_left(bad, ord), ord) - laplace(bad, ord, Precondition::waive);
        rows.push_back(make_row(suite, "laplace-factorization-guard", gap.coeff_norm() / bad.coeff_norm(), kGuardMin,
                                Bound::at_least));
        break;
    }
    return rows;
}

std::vector<ReportRow> lame_suite(const RunConfig& cfg) {
    const std::string suite = "lame";
    const auto& ord = cfg.orders;
    FieldRng rng = suite_rng(cfg, 5);
    double two_path = 0.0, readings = 0.0, decomposition = 0.0;
    for (const auto& [lambda, mu] : {std::pair{1.0, 1.0}, std::pair{-0.5, 1.0}, std::pair{0.0, 2.0}}) {
        for (int i = 0; i < kFields / 2; ++i) {
            const auto u = rng.admissible_vector(cfg.cube);
            const auto full = lame_sandwich(u, lambda, mu, ord);
            const double scalar_leak = full.sc().coeff_norm() / std::max(1.0, full.coeff_norm());
            two_path = std::max({two_path, scalar_leak, coeff_rel_diff(lame_navier_residual(u, lambda, mu, ord), -full.vec())});
            const auto other = lame_sandwich(u, lambda, mu, ord, Precondition::enforce, SandwichOrder::right_then_left);
            readings = std::max(readings, coeff_rel_diff(full, other));
            decomposition = std::max(decomposition, grad_div_decomposition_check(u, ord));
        }
    }
    return {make_row(suite, "lame-two-path", two_path, cfg.tolerance),
            make_row(suite, "sandwich-readings", readings, cfg.tolerance),
            make_row(suite, "grad-div-decomposition", decomposition, cfg.tolerance)};
}

double field_scale(const EMField& f, const SourceSet& s) {
    return std::max({1.0, f.E.coeff_norm(), f.B.coeff_norm(), s.rho.coeff_norm(), s.j.coeff_norm()});
}

double max_norm(const MaxwellResiduals& r) {
    return std::max({r.div_e.coeff_norm(), r.curl_e.coeff_norm(), r.div_b.coeff_norm(), r.curl_b.coeff_norm()});
}

std::vector<ReportRow> maxwell_suite(const RunConfig& cfg) {
    const std::string suite = "maxwell";
    const auto& ord = cfg.orders;
    const auto& m = cfg.medium;
    FieldRng rng = suite_rng(cfg, 6);
    double forward = 0.0, reverse = 0.0, continuity = 0.0, algebraic = 0.0, round_trip = 0.0;
    for (int i = 0; i < kFields; ++i) {
        if (m.g1() != Complex{}) {
            const auto [f, s] = manufacture_maxwell(rng.admissible_vector(cfg.cube), m, ord);
            const double scale = field_scale(f, s);
            const auto pp = to_phi_psi(f, m);
            const auto q = quaternionic_residuals(pp, s, m, ord);
            forward = std::max(forward, std::max(q.phi.coeff_norm(), q.psi.coeff_norm()) / scale);
            reverse = std::max(reverse, max_norm(maxwell_residuals(from_phi_psi(pp, m), s, m, ord)) / scale);
            continuity = std::max(continuity, continuity_residual(s, m, ord).coeff_norm() / scale);
        }
        const EMField g{rng.admissible_vector(cfg.cube), rng.admissible_vector(cfg.cube)};
        const SourceSet src{rng.admissible(cfg.cube), rng.admissible_vector(cfg.cube)};
        const auto direct = quaternionic_residuals(to_phi_psi(g, m), src, m, ord);
        const auto via = quaternionic_from_maxwell(maxwell_residuals(g, src, m, ord), continuity_residual(src, m, ord), m);
        algebraic = std::max({algebraic, coeff_rel_diff(direct.phi, via.phi), coeff_rel_diff(direct.psi, via.psi)});
        const auto back = from_phi_psi(to_phi_psi(g, m), m);
        round_trip = std::max({round_trip, coeff_rel_diff(back.E, g.E), coeff_rel_diff(back.B, g.B)});
    }
    std::vector<ReportRow> rows;
    if (m.g1() != Complex{}) {
        rows.push_back(make_row(suite, "equivalence-forward", forward, cfg.tolerance));
        rows.push_back(make_row(suite, "equivalence-reverse", reverse, cfg.tolerance));
        rows.push_back(make_row(suite, "continuity", continuity, cfg.tolerance));
    }
    rows.push_back(make_row(suite, "residual-identity", algebraic, cfg.tolerance));
    rows.push_back(make_row(suite, "phi-psi-round-trip", round_trip, cfg.tolerance));
    return rows;
}

double catalog_gap(const std::vector<EquationResidual>& a, const std::vector<EquationResidual>& b, Complex scalar_factor) {
    return std::max(coeff_rel_diff(a[0].value, b[0].value), coeff_rel_diff(a[1].value, scalar_factor * b[1].value));
}

std::vector<ReportRow> catalog_suite(const RunConfig& cfg) {
    const std::string suite = "catalog";
    const auto& ord = cfg.orders;
    FieldRng rng = suite_rng(cfg, 7);
    CatalogParams params;
    params.A = {0.5, -1.0, 2.0};
    params.B = {1.0, 0.0, -0.5};
    params.V = {0.3, 0.2, -0.7};
    params.mu0 = 1.7;
    params.rho0 = 0.9;
    double reduction = 0.0, stokes = 0.0, oseen1 = 0.0, oseen2 = 0.0, ideal = 0.0;
    for (int i = 0; i < kFields; ++i) {
        CatalogFields f{rng.general(cfg.cube), rng.general_vector(cfg.cube), rng.admissible_vector(cfg.cube),
                        rng.general(cfg.cube)};
        // A = B = 0 in the general system gives Moisil-Teodorescu
        const auto gen = catalog_residuals(SystemKind::generalized_mt, f, CatalogParams{}, ord);
        reduction = std::max(reduction, catalog_gap(gen, catalog_residuals(SystemKind::moisil_teodorescu, f, CatalogParams{}, ord), 1.0));

        // flow systems rewritten as the general system
        const auto vorticity = curl(*f.theta, ord);
        CatalogParams vf_params;
        CatalogFields vf;
        vf.psi0 = *f.p0;
        vf.phi = Complex(params.mu0) * vorticity;
        stokes = std::max(stokes, catalog_gap(catalog_residuals(SystemKind::generalized_mt, vf, vf_params, ord),
                                              catalog_residuals(SystemKind::stokes, f, params, ord), params.mu0));

        vf.phi = Complex(params.mu0) * vorticity + Complex(params.rho0) * cross(params.V, *f.theta);
        oseen1 = std::max(oseen1, catalog_gap(catalog_residuals(SystemKind::generalized_mt, vf, vf_params, ord),
                                              catalog_residuals(SystemKind::oseen_form1, f, params, ord), 1.0));

        vf.psi0 = *f.p0 - Complex(params.rho0) * dot(params.V, *f.theta);
        vf.phi = Complex(params.mu0) * vorticity;
        for (std::size_t n = 0; n < 3; ++n) vf_params.B[n] = params.rho0 * params.V[n] / params.mu0;
        oseen2 = std::max(oseen2, catalog_gap(catalog_residuals(SystemKind::generalized_mt, vf, vf_params, ord),
                                              catalog_residuals(SystemKind::oseen_form2, f, params, ord), params.mu0));

        CatalogFields fluid;
        fluid.theta = f.theta;
        const CatalogFields as_mt{FracField(cfg.cube), *f.theta, std::nullopt, std::nullopt};
        ideal = std::max(ideal, catalog_gap(catalog_residuals(SystemKind::ideal_fluid, fluid, params, ord),
                                            catalog_residuals(SystemKind::moisil_teodorescu, as_mt, params, ord), 1.0));
    }
    return {make_row(suite, "generalized-mt-reduction", reduction, cfg.tolerance),
            make_row(suite, "stokes-as-general-system", stokes, cfg.tolerance),
            make_row(suite, "oseen-first-form-as-general-system", oseen1, cfg.tolerance),
            make_row(suite, "oseen-second-form-as-general-system", oseen2, cfg.tolerance),
            make_row(suite, "ideal-fluid-as-mt", ideal, cfg.tolerance)};
}

std::vector<ReportRow> classical_suite(const RunConfig& cfg) {
    const std::string suite = "classical-reduction";
    const auto& ord = cfg.orders;
    const auto& m = cfg.medium;
    FieldRng rng = suite_rng(cfg, 8);
    double g = 0.0, d = 0.0, c = 0.0, l = 0.0, dirac = 0.0, mx = 0.0;
    for (int i = 0; i < kFields; ++i) {
        const auto p = classical::random_polynomial(rng, cfg.cube);
        const auto u = classical::random_polynomial_vector(rng, cfg.cube);
        g = std::max(g, coeff_rel_diff(grad(p, ord), classical::grad(p)));
        d = std::max(d, coeff_rel_diff(div(u, ord), classical::div(u)));
        c = std::max(c, coeff_rel_diff(curl(u, ord), classical::curl(u)));
        l = std::max(l, coeff_rel_diff(laplace(BiqField::scalar(p), ord, Precondition::waive).sc(), classical::laplace(p)));
        const BiqField q(p, u);
        const BiqField expected(-classical::div(u), classical::grad(p) + classical::curl(u));
        dirac = std::max(dirac, coeff_rel_diff(dirac_left(q, ord), expected));

        const EMField f{u, classical::random_polynomial_vector(rng, cfg.cube)};
        const SourceSet s{classical::random_polynomial(rng, cfg.cube), classical::random_polynomial_vector(rng, cfg.cube)};
        const auto r = maxwell_residuals(f, s, m, ord);
        const Complex iw = kI * m.omega();
        mx = std::max({mx, coeff_rel_diff(r.div_e, classical::div(f.E) - m.g1() * s.rho),
                       coeff_rel_diff(r.curl_e, classical::curl(f.E) - iw * f.B),
                       coeff_rel_diff(r.div_b, classical::div(f.B)),
                       coeff_rel_diff(r.curl_b, classical::curl(f.B) + (iw * m.inv_g2g3()) * f.E - (1.0 / m.g2()) * s.j)});
    }
    return {make_row(suite, "grad", g, cfg.tolerance),          make_row(suite, "div", d, cfg.tolerance),
            make_row(suite, "curl", c, cfg.tolerance),          make_row(suite, "laplace", l, cfg.tolerance),
            make_row(suite, "dirac", dirac, cfg.tolerance),     make_row(suite, "maxwell", mx, cfg.tolerance)};
}

}  // namespace

io::Report run_verify(const RunConfig& cfg) {
    using Suite = std::pair<std::string, std::function<std::vector<ReportRow>(const RunConfig&)>>;
    std::vector<Suite> suites{{"caputo-semigroup", semigroup_suite}, {"caputo-oracle", oracle_suite},
                              {"vector-calculus", vector_calculus_suite}, {"dirac", dirac_suite},
                              {"lame", lame_suite}, {"maxwell", maxwell_suite}, {"catalog", catalog_suite}};
    if (cfg.orders.is_classical()) suites.emplace_back("classical-reduction", classical_suite);

    std::vector<std::future<SuiteResult>> jobs;
    for (const auto& [name, fn] : suites)
        jobs.push_back(std::async(std::launch::async, [&cfg, fn = fn]() {
            try {
                return SuiteResult{fn(cfg), ""};
            } catch (const std::exception& e) {
                return SuiteResult{{}, e.what()};
            }
        }));

    io::Report report{"verify", {}, {}};
    report.metadata = {{"orders", io::to_json(cfg.orders).dump()},
                       {"medium", io::to_json(cfg.medium).dump()},
                       {"cube", "[" + io::json(cfg.cube.a).dump() + ", " + io::json(cfg.cube.b).dump() + "]"},
                       {"seed", std::to_string(cfg.seed)},
                       {"tolerance", io::json(cfg.tolerance).dump()},
                       {"oracle_n", std::to_string(cfg.oracle_n)}};
    for (std::size_t k = 0; k < suites.size(); ++k) {
        SuiteResult r = jobs[k].get();
        if (!r.error.empty()) {
            r.rows.push_back(make_row(suites[k].first, "suite-error", std::numeric_limits<double>::quiet_NaN(), cfg.tolerance));
            report.metadata.emplace_back("error." + suites[k].first, r.error);
        }
        for (auto& row : r.rows) report.rows.push_back(std::move(row));
    }
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) { return a.suite < b.suite; });
    std::sort(report.metadata.begin(), report.metadata.end());
    return report;
}

}  // namespace fracq
