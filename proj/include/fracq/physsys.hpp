#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracq/fracvec.hpp"

namespace fracq {

/// Homogeneous medium of the monochromatic system. kappa = omega sqrt(1/(g2 g3))
/// on the branch Im kappa >= 0 (Re kappa >= 0 when real).
class Medium {
public:
    Medium(Complex g1, Complex g2, Complex g3, Complex omega);

    Complex g1() const { return g1_; }
    Complex g2() const { return g2_; }
    Complex g3() const { return g3_; }
    Complex omega() const { return omega_; }
    Complex kappa() const { return kappa_; }
    /// 1 / (g2 g3)
    Complex inv_g2g3() const { return 1.0 / (g2_ * g3_); }

private:
    Complex g1_, g2_, g3_, omega_, kappa_;
};

struct EMField {
    VectorField E;
    VectorField B;
};

struct SourceSet {
    FracField rho;
    VectorField j;
};

/// Purely vector biquaternionic pair built from (E, B).
struct PhiPsi {
    VectorField phi;
    VectorField psi;
};

/// r1 = Div E - g1 rho, r2 = Curl E - i omega B, r3 = Div B,
/// r4 = Curl B + i omega E/(g2 g3) - j/g2.
struct MaxwellResiduals {
    FracField div_e;
    VectorField curl_e;
    FracField div_b;
    VectorField curl_b;
};

MaxwellResiduals maxwell_residuals(const EMField& f, const SourceSet& s, const Medium& m,
                                   const OrderVector& ord);

/// Div j - i omega rho g1 / g3.
FracField continuity_residual(const SourceSet& s, const Medium& m, const OrderVector& ord);

/// Manufactured solution: B = Curl E/(i omega), rho = Div E/g1,
/// j = g2 Curl B + i omega E/g3. E_seed must be semigroup-admissible.
std::pair<EMField, SourceSet> manufacture_maxwell(const VectorField& e_seed, const Medium& m,
                                                  const OrderVector& ord);

PhiPsi to_phi_psi(const EMField& f, const Medium& m);
EMField from_phi_psi(const PhiPsi& p, const Medium& m);

struct QuaternionicResiduals {
    BiqField phi;  // (D - kappa) phi - (Div j + kappa j)/g2
    BiqField psi;  // (D + kappa) psi - (-Div j + kappa j)/g2
};

QuaternionicResiduals quaternionic_residuals(const PhiPsi& p, const SourceSet& s, const Medium& m,
                                             const OrderVector& ord);

/// The same two residuals expressed through the Maxwell and continuity
/// residuals by the substitutions of the equivalence proof. Agrees with
/// quaternionic_residuals(to_phi_psi(f), ...) for arbitrary fields.
QuaternionicResiduals quaternionic_from_maxwell(const MaxwellResiduals& r, const FracField& continuity,
                                                const Medium& m);

struct HelmholtzResiduals {
    VectorField b;  // kappa^2 B - Laplace B
    VectorField e;  // kappa^2 E - Laplace E
};

HelmholtzResiduals helmholtz_em_residuals(const EMField& f, const Medium& m, const OrderVector& ord);

/// mu Laplace U + (mu + lambda) Grad Div U. `waive` skips the Lame cone check
/// (mu > 0, lambda > -2/3 mu), not the admissibility of U.
VectorField lame_navier_residual(const VectorField& u, double lambda, double mu, const OrderVector& ord,
                                 Precondition cone = Precondition::enforce);

enum class SandwichOrder { left_then_right, right_then_left };

/// gamma D U D + beta D^2 U with gamma = (mu + lambda)/2, beta = (3 mu + lambda)/2.
BiqField lame_sandwich(const VectorField& u, double lambda, double mu, const OrderVector& ord,
                       Precondition cone = Precondition::enforce,
                       SandwichOrder order = SandwichOrder::left_then_right);
/// Vector part of lame_sandwich (its scalar part vanishes).
VectorField lame_sandwich_residual(const VectorField& u, double lambda, double mu, const OrderVector& ord,
                                   Precondition cone = Precondition::enforce,
                                   SandwichOrder order = SandwichOrder::left_then_right);

/// D U D for a field, applied in the given order.
BiqField sandwich(const BiqField& u, const OrderVector& ord, SandwichOrder order);

/// Largest coefficient-relative residual of
///   D^2 U = -Grad Div U + Curl Curl U,
///   D U D = -Grad Div U - Curl Curl U,
///   Grad Div U = -(D^2 U + D U D)/2.
double grad_div_decomposition_check(const VectorField& u, const OrderVector& ord);

using Vec3 = std::array<double, 3>;

VectorField cross(const Vec3& c, const VectorField& u);
VectorField cross(const VectorField& u, const Vec3& c);
FracField dot(const Vec3& c, const VectorField& u);

enum class SystemKind { moisil_teodorescu, generalized_mt, ideal_fluid, stokes, oseen_form1, oseen_form2 };

std::string to_string(SystemKind k);
std::optional<SystemKind> parse_system(const std::string& name);

/// Constants of the catalog systems. A and B enter the first-order system
/// with lower-order terms; mu0, rho0, V are the viscosity, density and body
/// velocity of the flow examples.
struct CatalogParams {
    Vec3 A{0.0, 0.0, 0.0};
    Vec3 B{0.0, 0.0, 0.0};
    Vec3 V{0.0, 0.0, 0.0};
    double mu0 = 1.0;
    double rho0 = 1.0;
};

/// Field slots; each system reads the ones it needs (ShapeError if missing).
struct CatalogFields {
    std::optional<FracField> psi0;
    std::optional<VectorField> phi;
    std::optional<VectorField> theta;
    std::optional<FracField> p0;
};

/// One displayed equation: residual field plus the max-norm scale of the terms
/// that make it up.
struct EquationResidual {
    std::string id;
    BiqField value;
    double scale = 0.0;
};

std::vector<EquationResidual> catalog_residuals(SystemKind system, const CatalogFields& fields,
                                                const CatalogParams& params, const OrderVector& ord,
                                                int grid = 33);

std::vector<EquationResidual> maxwell_equation_residuals(const EMField& f, const SourceSet& s,
                                                         const Medium& m, const OrderVector& ord,
                                                         int grid = 33);

struct ResidualRow {
    std::string equation;
    double residual = 0.0;
    double scale = 0.0;
    bool pass = false;
};

/// pass <=> every row has residual <= tolerance * max(1, scale).
struct ResidualReport {
    std::string system;
    std::vector<ResidualRow> rows;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> metadata;
};

ResidualReport make_report(std::string system, const std::vector<EquationResidual>& eqs, double tolerance,
                           int grid = 33);

}  // namespace fracq
