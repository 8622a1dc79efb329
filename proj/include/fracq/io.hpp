#pragma once

// JSON field files, run configuration and report serialization for the
// command-line front end.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracq/physsys.hpp"

namespace fracq::io {

using nlohmann::json;

/// Parsed JSON text that remembers the line of every value, so semantic
/// errors can point into the file as precisely as syntax errors.
class JsonDoc {
public:
    /// InputError "origin:line:column: ..." on a syntax error.
    static JsonDoc parse(const std::string& text, std::string origin);
    static JsonDoc load(const std::string& path);

    const json& root() const { return root_; }
    const std::string& origin() const { return origin_; }
    /// Line of the value at a JSON pointer, or of its nearest recorded ancestor.
    int line(const std::string& pointer) const;
    [[noreturn]] void fail(const std::string& pointer, const std::string& message) const;

private:
    json root_;
    std::string origin_;
    std::map<std::string, int> lines_;
};

/// "p/q", "p" or a terminating decimal such as "0.25". DomainError otherwise.
Rational parse_rational(const std::string& text);

enum class Format { json, csv };

struct RunConfig {
    OrderVector orders = OrderVector::uniform(Rational(1, 2));
    Medium medium{1.5, {2.0, 0.5}, {0.8, -0.1}, 3.0};
    Cube cube{0.0, 1.0};
    double tolerance = 1e-9;
    std::uint64_t seed = 42;
    int grid = 33;
    std::size_t oracle_n = 4096;
    Format format = Format::json;
};

/// Keys absent from the document keep their defaults; unknown keys and
/// out-of-range values raise InputError.
RunConfig parse_config(const JsonDoc& doc);
RunConfig load_config(const std::string& path);

json to_json(const FracField& f);
json to_json(const VectorField& u);
json to_json(const Medium& m);
json to_json(const OrderVector& ord);

/// Fields, sources and (optionally) the medium and orders they were made with.
struct MaxwellFile {
    Cube cube;
    std::optional<OrderVector> orders;
    std::optional<Medium> medium;
    std::optional<std::uint64_t> seed;
    EMField fields;
    SourceSet sources;
};

/// Slots E, B, rho, j are all required. `fallback` is used when the file has
/// no "cube".
MaxwellFile read_maxwell(const JsonDoc& doc, Cube fallback);
json to_json(const MaxwellFile& f);

struct CatalogFile {
    Cube cube;
    std::optional<OrderVector> orders;
    CatalogParams params;
    CatalogFields fields;
};

CatalogFile read_catalog(const JsonDoc& doc, Cube fallback);

/// A single scalar field plus the point fixing the two transverse coordinates
/// (the cube midpoint when absent).
struct OracleFile {
    FracField field;
    Point point;
};

OracleFile read_oracle_field(const JsonDoc& doc, Cube fallback);

/// Two-space indented text with a trailing newline; object keys sorted.
std::string dump(const json& j);

enum class Bound { at_most, at_least };

struct ReportRow {
    std::string suite;
    std::string anchor;
    double residual = 0.0;
    double tolerance = 0.0;
    Bound bound = Bound::at_most;
    bool pass = false;
    std::optional<double> scale;
};

/// pass <=> residual <= tolerance (at_most) or residual >= tolerance
/// (at_least). NaN never passes.
ReportRow make_row(std::string suite, std::string anchor, double residual, double tolerance,
                   Bound bound = Bound::at_most);

struct Report {
    std::string command;
    std::vector<ReportRow> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    bool pass() const;
};

/// One row per equation; tolerance is the effective threshold tol * max(1, scale).
Report from_residual_report(const ResidualReport& r);

std::string to_json_text(const Report& r, const std::optional<std::string>& timestamp);
/// Header suite,anchor,residual,tolerance,pass.
std::string to_csv_text(const Report& r);
std::string utc_timestamp();

}  // namespace fracq::io
