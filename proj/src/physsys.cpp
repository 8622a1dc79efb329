#include "fracq/physsys.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "fracq/errors.hpp"

namespace fracq {
namespace {

constexpr Complex kI{0.0, 1.0};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double max_norm(std::initializer_list<double> norms) {
    double m = 0.0;
    for (double n : norms) m = std::max(m, n);
    return m;
}

void check_lame(double lambda, double mu, Precondition cone) {
    if (!std::isfinite(lambda) || !std::isfinite(mu)) throw ParameterError("Lame coefficients must be finite");
    if (cone == Precondition::enforce && !(mu > 0.0 && lambda > -2.0 / 3.0 * mu))
        throw ParameterError("Lame coefficients need mu > 0 and lambda > -2/3 mu");
}

void require_admissible(const VectorField& u, const char* what) {
    if (!semigroup_admissible(u))
        throw DomainError(std::string(what) + " needs exponents in {0} U [2, inf) on every axis");
}

const FracField& need(const std::optional<FracField>& f, const char* slot) {
    if (!f) throw ShapeError(std::string("missing scalar field slot '") + slot + "'");
    return *f;
}

const VectorField& need(const std::optional<VectorField>& f, const char* slot) {
    if (!f) throw ShapeError(std::string("missing vector field slot '") + slot + "'");
    return *f;
}

}  // namespace

Medium::Medium(Complex g1, Complex g2, Complex g3, Complex omega) : g1_(g1), g2_(g2), g3_(g3), omega_(omega) {
    if (!finite(g1) || !finite(g2) || !finite(g3) || !finite(omega))
        throw ParameterError("medium constants must be finite");
    if (g2 == Complex{} || g3 == Complex{}) throw SingularMedium("g2 and g3 must be nonzero");
    if (omega == Complex{}) throw SingularMedium("omega must be nonzero");
    kappa_ = omega * std::sqrt(1.0 / (g2 * g3));
    if (kappa_.imag() < 0.0 || (kappa_.imag() == 0.0 && kappa_.real() < 0.0)) kappa_ = -kappa_;
    if (kappa_ == Complex{}) throw SingularMedium("wave number vanishes");
}

MaxwellResiduals maxwell_residuals(const EMField& f, const SourceSet& s, const Medium& m,
                                   const OrderVector& ord) {
    const Complex iw = kI * m.omega();
    return {div(f.E, ord) - m.g1() * s.rho, curl(f.E, ord) - iw * f.B, div(f.B, ord),
            curl(f.B, ord) + (iw * m.inv_g2g3()) * f.E - (1.0 / m.g2()) * s.j};
}

FracField continuity_residual(const SourceSet& s, const Medium& m, const OrderVector& ord) {
    return div(s.j, ord) - (kI * m.omega() * m.g1() / m.g3()) * s.rho;
}

std::pair<EMField, SourceSet> manufacture_maxwell(const VectorField& e_seed, const Medium& m,
                                                  const OrderVector& ord) {
    if (m.g1() == Complex{}) throw ParameterError("manufactured charge density needs g1 != 0");
    require_admissible(e_seed, "manufactured field");
    const Complex iw = kI * m.omega();
    VectorField b = (1.0 / iw) * curl(e_seed, ord);
    FracField rho = (1.0 / m.g1()) * div(e_seed, ord);
    VectorField j = m.g2() * curl(b, ord) + (iw / m.g3()) * e_seed;
    return {EMField{e_seed, std::move(b)}, SourceSet{std::move(rho), std::move(j)}};
}

PhiPsi to_phi_psi(const EMField& f, const Medium& m) {
    const Complex a = kI * m.omega() * m.inv_g2g3();
    const VectorField kb = m.kappa() * f.B;
    return {kb - a * f.E, kb + a * f.E};
}

EMField from_phi_psi(const PhiPsi& p, const Medium& m) {
    const Complex iw = kI * m.omega();
    return {((m.g2() * m.g3()) / (2.0 * iw)) * (p.psi - p.phi), (1.0 / (2.0 * m.kappa())) * (p.phi + p.psi)};
}

QuaternionicResiduals quaternionic_residuals(const PhiPsi& p, const SourceSet& s, const Medium& m,
                                             const OrderVector& ord) {
    const Complex k = m.kappa();
    const Complex inv_g2 = 1.0 / m.g2();
    const FracField div_j = div(s.j, ord);
    const BiqField rhs_phi(inv_g2 * div_j, (inv_g2 * k) * s.j);
    const BiqField rhs_psi(-(inv_g2 * div_j), (inv_g2 * k) * s.j);
    return {dirac_displaced(BiqField::vector(p.phi), ord, k, Shift::minus) - rhs_phi,
            dirac_displaced(BiqField::vector(p.psi), ord, k, Shift::plus) - rhs_psi};
}

QuaternionicResiduals quaternionic_from_maxwell(const MaxwellResiduals& r, const FracField& continuity,
                                                const Medium& m) {
    const Complex a = kI * m.omega() * m.inv_g2g3();
    const Complex k = m.kappa();
    const Complex inv_g2 = 1.0 / m.g2();
    BiqField phi(a * r.div_e - k * r.div_b - inv_g2 * continuity, k * r.curl_b - a * r.curl_e);
    BiqField psi(-(a * r.div_e) - k * r.div_b + inv_g2 * continuity, k * r.curl_b + a * r.curl_e);
    return {std::move(phi), std::move(psi)};
}

HelmholtzResiduals helmholtz_em_residuals(const EMField& f, const Medium& m, const OrderVector& ord) {
    const Complex k2 = m.omega() * m.omega() * m.inv_g2g3();
    return {k2 * f.B - laplace(f.B, ord), k2 * f.E - laplace(f.E, ord)};
}

VectorField lame_navier_residual(const VectorField& u, double lambda, double mu, const OrderVector& ord,
                                 Precondition cone) {
    check_lame(lambda, mu, cone);
    require_admissible(u, "Lame-Navier operator");
    return Complex(mu) * laplace(u, ord) + Complex(mu + lambda) * grad(div(u, ord), ord);
}

BiqField sandwich(const BiqField& u, const OrderVector& ord, SandwichOrder order) {
    return order == SandwichOrder::left_then_right ? dirac_right(dirac_left(u, ord), ord)
                                                   : dirac_left(dirac_right(u, ord), ord);
}

BiqField lame_sandwich(const VectorField& u, double lambda, double mu, const OrderVector& ord,
                       Precondition cone, SandwichOrder order) {
    check_lame(lambda, mu, cone);
    require_admissible(u, "Lame sandwich operator");
    const BiqField U = BiqField::vector(u);
    const double gamma = 0.5 * (mu + lambda);
    const double beta = 0.5 * (3.0 * mu + lambda);
    return Complex(gamma) * sandwich(U, ord, order) + Complex(beta) * dirac_left(dirac_left(U, ord), ord);
}

VectorField lame_sandwich_residual(const VectorField& u, double lambda, double mu, const OrderVector& ord,
                                   Precondition cone, SandwichOrder order) {
    return lame_sandwich(u, lambda, mu, ord, cone, order).vec();
}

double grad_div_decomposition_check(const VectorField& u, const OrderVector& ord) {
    require_admissible(u, "grad-div decomposition");
    const BiqField U = BiqField::vector(u);
    const BiqField d2 = dirac_left(dirac_left(U, ord), ord);
    const BiqField dud = sandwich(U, ord, SandwichOrder::left_then_right);
    const VectorField gd = grad(div(u, ord), ord);
    const VectorField cc = curl(curl(u, ord), ord);
    const FracField zero(u.cube());
    const double r1 = coeff_rel_diff(d2, BiqField(zero, cc - gd));
    const double r2 = coeff_rel_diff(dud, BiqField(zero, -gd - cc));
    const BiqField half_sum = Complex(-0.5) * (d2 + dud);
    const double r3 = coeff_rel_diff(BiqField(zero, gd), half_sum);
    return max_norm({r1, r2, r3});
}

VectorField cross(const Vec3& c, const VectorField& u) {
    return {c[1] * u(3) - c[2] * u(2), c[2] * u(1) - c[0] * u(3), c[0] * u(2) - c[1] * u(1)};
}

VectorField cross(const VectorField& u, const Vec3& c) { return -cross(c, u); }

FracField dot(const Vec3& c, const VectorField& u) {
    return Complex(c[0]) * u(1) + Complex(c[1]) * u(2) + Complex(c[2]) * u(3);
}

std::string to_string(SystemKind k) {
    switch (k) {
        case SystemKind::moisil_teodorescu: return "moisil_teodorescu";
        case SystemKind::generalized_mt: return "generalized_mt";
        case SystemKind::ideal_fluid: return "ideal_fluid";
        case SystemKind::stokes: return "stokes";
        case SystemKind::oseen_form1: return "oseen_form1";
        case SystemKind::oseen_form2: return "oseen_form2";
    }
    return "unknown";
}

std::optional<SystemKind> parse_system(const std::string& name) {
    for (auto k : {SystemKind::moisil_teodorescu, SystemKind::generalized_mt, SystemKind::ideal_fluid,
                   SystemKind::stokes, SystemKind::oseen_form1, SystemKind::oseen_form2})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

std::vector<EquationResidual> catalog_residuals(SystemKind system, const CatalogFields& fields,
                                                const CatalogParams& params, const OrderVector& ord, int grid) {
    auto vec_eq = [&](std::string id, std::initializer_list<const VectorField*> parts) {
        VectorField sum(parts.begin()[0]->cube());
        double scale = 0.0;
        for (const auto* p : parts) {
            sum = sum + *p;
            scale = std::max(scale, norm_max(*p, grid));
        }
        return EquationResidual{std::move(id), BiqField::vector(std::move(sum)), scale};
    };
    auto scal_eq = [&](std::string id, std::initializer_list<const FracField*> parts) {
        FracField sum(parts.begin()[0]->cube());
        double scale = 0.0;
        for (const auto* p : parts) {
            sum += *p;
            scale = std::max(scale, norm_max(*p, grid));
        }
        return EquationResidual{std::move(id), BiqField::scalar(std::move(sum)), scale};
    };

    switch (system) {
        case SystemKind::moisil_teodorescu: {
            const auto& phi = need(fields.phi, "phi");
            const auto& psi0 = need(fields.psi0, "psi0");
            const VectorField c = curl(phi, ord);
            const VectorField g = grad(psi0, ord);
            const FracField d = div(phi, ord);
            return {vec_eq("vector", {&c, &g}), scal_eq("scalar", {&d})};
        }
        case SystemKind::generalized_mt: {
            const auto& phi = need(fields.phi, "phi");
            const auto& psi0 = need(fields.psi0, "psi0");
            const VectorField g = grad(psi0, ord);
            const VectorField c = curl(phi, ord);
            const VectorField bxphi = cross(params.B, phi);
            const VectorField psi_a = VectorField(Complex(params.A[0]) * psi0, Complex(params.A[1]) * psi0,
                                                  Complex(params.A[2]) * psi0);
            const FracField d = div(phi, ord);
            const FracField adotphi = dot(params.A, phi);
            return {vec_eq("vector", {&g, &c, &bxphi, &psi_a}), scal_eq("scalar", {&d, &adotphi})};
        }
        case SystemKind::ideal_fluid: {
            const auto& theta = need(fields.theta, "theta");
            const VectorField c = curl(theta, ord);
            const FracField d = div(theta, ord);
            return {vec_eq("vector", {&c}), scal_eq("scalar", {&d})};
        }
        case SystemKind::stokes: {
            const auto& theta = need(fields.theta, "theta");
            const auto& p0 = need(fields.p0, "p0");
            const VectorField vorticity = curl(theta, ord);
            const VectorField c = Complex(params.mu0) * curl(vorticity, ord);
            const VectorField g = grad(p0, ord);
            const FracField d = div(vorticity, ord);
            return {vec_eq("vector", {&c, &g}), scal_eq("scalar", {&d})};
        }
        case SystemKind::oseen_form1: {
            const auto& theta = need(fields.theta, "theta");
            const auto& p0 = need(fields.p0, "p0");
            const VectorField vorticity = curl(theta, ord);
            const VectorField flux = Complex(params.mu0) * vorticity + Complex(params.rho0) * cross(params.V, theta);
            const VectorField c = curl(flux, ord);
            const VectorField g = grad(p0, ord);
            const FracField d = div(flux, ord);
            return {vec_eq("vector", {&c, &g}), scal_eq("scalar", {&d})};
        }
        case SystemKind::oseen_form2: {
            const auto& theta = need(fields.theta, "theta");
            const auto& p0 = need(fields.p0, "p0");
            const VectorField vorticity = curl(theta, ord);
            const VectorField c = Complex(params.mu0) * curl(vorticity, ord);
            const VectorField vxl = Complex(params.rho0) * cross(params.V, vorticity);
            const FracField head = p0 - Complex(params.rho0) * dot(params.V, theta);
            const VectorField g = grad(head, ord);
            const FracField d = div(vorticity, ord);
            return {vec_eq("vector", {&c, &vxl, &g}), scal_eq("scalar", {&d})};
        }
    }
    throw ShapeError("unknown system");
}

std::vector<EquationResidual> maxwell_equation_residuals(const EMField& f, const SourceSet& s, const Medium& m,
                                                         const OrderVector& ord, int grid) {
    const Complex iw = kI * m.omega();
    const FracField div_e = div(f.E, ord);
    const VectorField curl_e = curl(f.E, ord);
    const FracField div_b = div(f.B, ord);
    const VectorField curl_b = curl(f.B, ord);
    const FracField g1rho = m.g1() * s.rho;
    const VectorField iwb = iw * f.B;
    const VectorField iwe = (iw * m.inv_g2g3()) * f.E;
    const VectorField jg2 = (1.0 / m.g2()) * s.j;
    const FracField div_j = div(s.j, ord);
    const FracField rho_term = (iw * m.g1() / m.g3()) * s.rho;

    std::vector<EquationResidual> out;
    out.push_back({"div-e", BiqField::scalar(div_e - g1rho), max_norm({norm_max(div_e, grid), norm_max(g1rho, grid)})});
    out.push_back({"curl-e", BiqField::vector(curl_e - iwb), max_norm({norm_max(curl_e, grid), norm_max(iwb, grid)})});
    out.push_back({"div-b", BiqField::scalar(div_b), norm_max(div_b, grid)});
    out.push_back({"curl-b", BiqField::vector(curl_b + iwe - jg2),
                   max_norm({norm_max(curl_b, grid), norm_max(iwe, grid), norm_max(jg2, grid)})});
    out.push_back({"continuity", BiqField::scalar(div_j - rho_term),
                   max_norm({norm_max(div_j, grid), norm_max(rho_term, grid)})});
    return out;
}

ResidualReport make_report(std::string system, const std::vector<EquationResidual>& eqs, double tolerance,
                           int grid) {
    ResidualReport r;
    r.system = std::move(system);
    r.tolerance = tolerance;
    r.pass = true;
    for (const auto& eq : eqs) {
        ResidualRow row{eq.id, norm_max(eq.value, grid), eq.scale, false};
        row.pass = row.residual <= tolerance * std::max(1.0, row.scale);
        r.pass = r.pass && row.pass;
        r.rows.push_back(std::move(row));
    }
    return r;
}

}  // namespace fracq
