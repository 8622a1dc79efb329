// Command-line front end: identity suites, residuals of user fields,
// manufactured solutions and the quadrature cross-check.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fracq/caputo_oracle.hpp"
#include "fracq/errors.hpp"
#include "fracq/io.hpp"
#include "fracq/random_fields.hpp"
#include "fracq/verify.hpp"

namespace {

using namespace fracq;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string config_path;
    std::optional<std::string> format;
    std::optional<double> tolerance;
    bool no_timestamp = false;
};

io::RunConfig resolve_config(const Globals& g) {
    io::RunConfig cfg = g.config_path.empty() ? io::RunConfig{} : io::load_config(g.config_path);
    if (g.format) cfg.format = *g.format == "csv" ? io::Format::csv : io::Format::json;
    if (g.tolerance) cfg.tolerance = *g.tolerance;
    return cfg;
}

int emit(const io::Report& r, const io::RunConfig& cfg, const Globals& g) {
    if (cfg.format == io::Format::csv)
        std::cout << io::to_csv_text(r);
    else
        std::cout << io::to_json_text(r, g.no_timestamp ? std::nullopt : std::optional(io::utc_timestamp()));
    return r.pass() ? kPass : kFail;
}

int run_residual(const Globals& g, const std::string& system, const std::string& path) {
    const io::RunConfig cfg = resolve_config(g);
    const io::JsonDoc doc = io::JsonDoc::load(path);
    if (system == "maxwell") {
        const io::MaxwellFile f = io::read_maxwell(doc, cfg.cube);
        const OrderVector ord = f.orders.value_or(cfg.orders);
        const Medium m = f.medium.value_or(cfg.medium);
        std::vector<EquationResidual> eqs;
        try {
            eqs = maxwell_equation_residuals(f.fields, f.sources, m, ord, cfg.grid);
        } catch (const DomainError& e) {
            doc.fail("", e.what());
        }
        io::Report r = io::from_residual_report(make_report("maxwell", eqs, cfg.tolerance, cfg.grid));
        r.metadata.emplace_back("orders", io::to_json(ord).dump());
        r.metadata.emplace_back("medium", io::to_json(m).dump());
        return emit(r, cfg, g);
    }
    const auto kind = parse_system(system);
    if (!kind)
        throw UsageError("unknown system '" + system +
                         "'; expected maxwell, moisil_teodorescu, generalized_mt, ideal_fluid, stokes, "
                         "oseen_form1 or oseen_form2");
    const io::CatalogFile f = io::read_catalog(doc, cfg.cube);
    const OrderVector ord = f.orders.value_or(cfg.orders);
    std::vector<EquationResidual> eqs;
    try {
        eqs = catalog_residuals(*kind, f.fields, f.params, ord, cfg.grid);
    } catch (const ShapeError& e) {
        doc.fail("", std::string(e.what()) + " for system " + system);
    } catch (const DomainError& e) {
        doc.fail("", e.what());
    }
    io::Report r = io::from_residual_report(make_report(system, eqs, cfg.tolerance, cfg.grid));
    r.metadata.emplace_back("orders", io::to_json(ord).dump());
    return emit(r, cfg, g);
}

int run_manufacture(const Globals& g, std::optional<std::uint64_t> seed, const std::string& out) {
    const io::RunConfig cfg = resolve_config(g);
    if (cfg.medium.g1() == Complex{}) throw UsageError("degenerate medium: g1 = 0 leaves rho undefined");
    io::MaxwellFile f{cfg.cube, cfg.orders, cfg.medium, seed.value_or(cfg.seed), {}, {}};
    FieldRng rng(*f.seed);
    std::tie(f.fields, f.sources) = manufacture_maxwell(rng.admissible_vector(cfg.cube), cfg.medium, cfg.orders);
    std::ofstream file(out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out + "'");
    file << io::dump(io::to_json(f));
    if (!file) throw UsageError("cannot write '" + out + "'");
    return kPass;
}

int run_oracle(const Globals& g, const std::string& mu_text, int axis, const std::string& path) {
    const io::RunConfig cfg = resolve_config(g);
    Rational mu;
    try {
        mu = io::parse_rational(mu_text);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--mu: ") + e.what());
    }
    if (mu <= Rational(0) || mu >= Rational(1)) throw UsageError("--mu must lie strictly between 0 and 1, got " + mu.str());
    const io::JsonDoc doc = io::JsonDoc::load(path);
    const io::OracleFile f = io::read_oracle_field(doc, cfg.cube);
    oracle::ConvergenceProbe p{};
    try {
        p = oracle::probe_convergence(f.field, axis, f.point, oracle::OracleOp::caputo(mu), cfg.oracle_n);
    } catch (const DomainError& e) {
        doc.fail("/field", e.what());
    }
    io::Report r{"oracle", {}, {}};
    r.rows.push_back(io::make_row("caputo-oracle", "l1-agreement", p.error_n, kOracleAgreementTol));
    r.metadata = {{"mu", mu.str()},
                  {"axis", std::to_string(axis)},
                  {"n", std::to_string(cfg.oracle_n)},
                  {"error_2n", io::json(p.error_2n).dump()}};
    if (p.error_n > kOracleRatioFloor)
        r.rows.push_back(io::make_row("caputo-oracle", "l1-convergence-ratio", p.ratio, kOracleRatioMin, io::Bound::at_least));
    else
        r.metadata.emplace_back("ratio", "not assessed: error at rounding floor");
    return emit(r, cfg, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional quaternionic operators: identity checks and residual reports", "fracq"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--config", g.config_path, "JSON run configuration");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tolerance", g.tolerance, "Relative tolerance for identity rows")->check(CLI::PositiveNumber);
    app.add_flag("--no-timestamp", g.no_timestamp, "Leave the timestamp out of JSON reports");

    auto* verify = app.add_subcommand("verify", "Run every identity suite");

    std::string system, fields;
    auto* residual = app.add_subcommand("residual", "Residuals of a fields file under one system");
    residual->add_option("--system", system, "maxwell or a catalog system name")->required();
    residual->add_option("--fields", fields, "Fields file (JSON)")->required();

    std::optional<std::uint64_t> seed;
    std::string out;
    auto* manufacture = app.add_subcommand("manufacture", "Write a manufactured Maxwell solution");
    manufacture->add_option("--seed", seed, "Generator seed (config seed when absent)");
    manufacture->add_option("--out", out, "Output path")->required();

    std::string mu;
    int axis = 1;
    std::string oracle_fields;
    auto* oracle_cmd = app.add_subcommand("oracle", "Compare the closed-form Caputo derivative with the L1 scheme");
    oracle_cmd->add_option("--mu", mu, "Order in (0, 1), e.g. 1/2")->required();
    oracle_cmd->add_option("--axis", axis, "Axis 1, 2 or 3")->required()->check(CLI::Range(1, 3));
    oracle_cmd->add_option("--fields", oracle_fields, "Field file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) {
            const io::RunConfig cfg = resolve_config(g);
            return emit(run_verify(cfg), cfg, g);
        }
        if (*residual) return run_residual(g, system, fields);
        if (*manufacture) return run_manufacture(g, seed, out);
        if (*oracle_cmd) return run_oracle(g, mu, axis, oracle_fields);
    } catch (const UsageError& e) {
        std::cerr << "fracq: error: " << e.what() << "\n";
        return kUsage;
    } catch (const fracq::Error& e) {
        std::cerr << "fracq: error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
