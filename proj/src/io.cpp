#include "fracq/io.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "fracq/errors.hpp"

namespace fracq::io {
namespace {

std::string escape_token(const std::string& key) {
    std::string out;
    for (char ch : key) {
        if (ch == '~') out += "~0";
        else if (ch == '/') out += "~1";
        else out += ch;
    }
    return out;
}

// Walks text that nlohmann has already accepted and records the line on which
// each value starts, keyed by JSON pointer.
class LineScanner {
public:
    LineScanner(const std::string& text, std::map<std::string, int>& out) : s_(text), out_(out) {}

    void run() { value(""); }

private:
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            if (s_[i_] == '\n') ++line_;
            ++i_;
        }
    }

    std::string string_token() {
        const std::size_t start = i_++;
        while (s_[i_] != '"') i_ += s_[i_] == '\\' ? 2 : 1;
        ++i_;
        return json::parse(s_.substr(start, i_ - start)).get<std::string>();
    }

    void value(const std::string& ptr) {
        skip_ws();
        out_[ptr] = line_;
        const char ch = s_[i_];
        if (ch == '{') {
            ++i_;
            skip_ws();
            while (s_[i_] != '}') {
                const std::string key = string_token();
                skip_ws();
                ++i_;  // ':'
                value(ptr + "/" + escape_token(key));
                skip_ws();
                if (s_[i_] == ',') {
                    ++i_;
                    skip_ws();
                }
            }
            ++i_;
        } else if (ch == '[') {
            ++i_;
            skip_ws();
            for (std::size_t k = 0; s_[i_] != ']'; ++k) {
                value(ptr + "/" + std::to_string(k));
                skip_ws();
                if (s_[i_] == ',') {
                    ++i_;
                    skip_ws();
                }
            }
            ++i_;
        } else if (ch == '"') {
            string_token();
        } else {
            while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ',' &&
                   s_[i_] != ']' && s_[i_] != '}')
                ++i_;
        }
    }

    const std::string& s_;
    std::map<std::string, int>& out_;
    std::size_t i_ = 0;
    int line_ = 1;
};

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + escape_token(key); }
std::string child(const std::string& ptr, std::size_t k) { return ptr + "/" + std::to_string(k); }

const json& at(const JsonDoc& doc, const std::string& ptr) { return doc.root().at(json::json_pointer(ptr)); }

void check_keys(const JsonDoc& doc, const std::string& ptr, std::initializer_list<const char*> allowed) {
    const json& obj = at(doc, ptr);
    if (!obj.is_object()) doc.fail(ptr, "expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, v] : obj.items())
        if (!ok.count(key)) doc.fail(child(ptr, key), "unknown key '" + key + "'");
}

bool has(const JsonDoc& doc, const std::string& ptr, const char* key) { return at(doc, ptr).contains(key); }

double read_number(const JsonDoc& doc, const std::string& ptr) {
    const json& v = at(doc, ptr);
    if (!v.is_number()) doc.fail(ptr, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) doc.fail(ptr, "number must be finite");
    return x;
}

Complex read_complex(const JsonDoc& doc, const std::string& ptr) {
    const json& v = at(doc, ptr);
    if (v.is_number()) return read_number(doc, ptr);
    if (v.is_array() && v.size() == 2) return {read_number(doc, child(ptr, 0)), read_number(doc, child(ptr, 1))};
    if (v.is_object()) {
        check_keys(doc, ptr, {"re", "im"});
        const double re = has(doc, ptr, "re") ? read_number(doc, child(ptr, "re")) : 0.0;
        const double im = has(doc, ptr, "im") ? read_number(doc, child(ptr, "im")) : 0.0;
        return {re, im};
    }
    doc.fail(ptr, "expected a complex number: number, [re, im] or {\"re\", \"im\"}");
}

Rational read_rational(const JsonDoc& doc, const std::string& ptr) {
    const json& v = at(doc, ptr);
    try {
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
            return Rational(v[0].get<std::int64_t>(), v[1].get<std::int64_t>());
    } catch (const Error& e) {
        doc.fail(ptr, e.what());
    }
    doc.fail(ptr, "expected a rational: integer, \"p/q\" or [p, q]");
}

Cube read_cube(const JsonDoc& doc, const std::string& ptr) {
    check_keys(doc, ptr, {"a", "b"});
    if (!has(doc, ptr, "a") || !has(doc, ptr, "b")) doc.fail(ptr, "cube needs both \"a\" and \"b\"");
    try {
        return Cube(read_number(doc, child(ptr, "a")), read_number(doc, child(ptr, "b")));
    } catch (const DomainError& e) {
        doc.fail(ptr, e.what());
    }
}

OrderVector read_orders(const JsonDoc& doc, const std::string& ptr) {
    const json& v = at(doc, ptr);
    if (!v.is_array() || v.size() != 3) doc.fail(ptr, "orders must be an array of three rationals");
    const Rational a1 = read_rational(doc, child(ptr, 0));
    const Rational a2 = read_rational(doc, child(ptr, 1));
    const Rational a3 = read_rational(doc, child(ptr, 2));
    try {
        return OrderVector(a1, a2, a3);
    } catch (const DomainError& e) {
        doc.fail(ptr, e.what());
    }
}

Medium read_medium(const JsonDoc& doc, const std::string& ptr) {
    check_keys(doc, ptr, {"g1", "g2", "g3", "omega"});
    for (const char* k : {"g1", "g2", "g3", "omega"})
        if (!has(doc, ptr, k)) doc.fail(ptr, std::string("medium needs \"") + k + "\"");
    try {
        return Medium(read_complex(doc, child(ptr, "g1")), read_complex(doc, child(ptr, "g2")),
                      read_complex(doc, child(ptr, "g3")), read_complex(doc, child(ptr, "omega")));
    } catch (const Error& e) {
        doc.fail(ptr, e.what());
    }
}

Vec3 read_vec3(const JsonDoc& doc, const std::string& ptr) {
    const json& v = at(doc, ptr);
    if (!v.is_array() || v.size() != 3) doc.fail(ptr, "expected an array of three numbers");
    return {read_number(doc, child(ptr, 0)), read_number(doc, child(ptr, 1)), read_number(doc, child(ptr, 2))};
}

std::uint64_t read_seed(const JsonDoc& doc, const std::string& ptr) {
    const json& v = at(doc, ptr);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        doc.fail(ptr, "seed must be a non-negative integer");
    return v.get<std::uint64_t>();
}

FracField read_field(const JsonDoc& doc, const std::string& ptr, Cube cube) {
    const json& v = at(doc, ptr);
    if (!v.is_array()) doc.fail(ptr, "a scalar field is an array of terms");
    std::vector<FracTerm> terms;
    std::set<Exponents> seen;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const std::string tp = child(ptr, k);
        check_keys(doc, tp, {"re", "im", "exp"});
        if (!has(doc, tp, "exp")) doc.fail(tp, "term needs \"exp\"");
        const std::string ep = child(tp, "exp");
        if (!at(doc, ep).is_array() || at(doc, ep).size() != 3) doc.fail(ep, "\"exp\" must hold three rationals");
        Exponents e{read_rational(doc, child(ep, 0)), read_rational(doc, child(ep, 1)),
                    read_rational(doc, child(ep, 2))};
        for (std::size_t n = 0; n < 3; ++n)
            if (e[n] <= Rational(-1)) doc.fail(child(ep, n), "exponents must exceed -1");
        if (!seen.insert(e).second) doc.fail(tp, "duplicate exponent triple in one field");
        const double re = has(doc, tp, "re") ? read_number(doc, child(tp, "re")) : 0.0;
        const double im = has(doc, tp, "im") ? read_number(doc, child(tp, "im")) : 0.0;
        terms.push_back({{re, im}, e});
    }
    return FracField(cube, terms);
}

VectorField read_vector(const JsonDoc& doc, const std::string& ptr, Cube cube) {
    const json& v = at(doc, ptr);
    if (!v.is_array() || v.size() != 3) doc.fail(ptr, "a vector field is an array of three scalar fields");
    return {read_field(doc, child(ptr, 0), cube), read_field(doc, child(ptr, 1), cube),
            read_field(doc, child(ptr, 2), cube)};
}

void require(const JsonDoc& doc, const std::string& ptr, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (!has(doc, ptr, k)) doc.fail(ptr, std::string("missing slot \"") + k + "\"");
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

std::string number_text(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return json(x).dump();
}

}  // namespace

JsonDoc JsonDoc::parse(const std::string& text, std::string origin) {
    JsonDoc d;
    d.origin_ = std::move(origin);
    try {
        d.root_ = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        const auto cut = what.find(": ", what.find("column"));
        if (cut != std::string::npos) what = what.substr(cut + 2);
        throw InputError(d.origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": syntax error: " + what);
    }
    LineScanner(text, d.lines_).run();
    return d;
}

JsonDoc JsonDoc::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ":0: cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

int JsonDoc::line(const std::string& pointer) const {
    std::string p = pointer;
    for (;;) {
        if (const auto it = lines_.find(p); it != lines_.end()) return it->second;
        const auto cut = p.rfind('/');
        if (cut == std::string::npos) return 1;
        p.resize(cut);
    }
}

void JsonDoc::fail(const std::string& pointer, const std::string& message) const {
    throw InputError(origin_ + ":" + std::to_string(line(pointer)) + ": " + message +
                     (pointer.empty() ? "" : " (at " + pointer + ")"));
}

Rational parse_rational(const std::string& text) {
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (s.empty() || used != s.size() || std::isspace(static_cast<unsigned char>(s[0])))
            throw DomainError("not a rational: '" + text + "'");
        return v;
    };
    if (const auto slash = text.find('/'); slash != std::string::npos)
        return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
    if (const auto dot = text.find('.'); dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("not a rational: '" + text + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::int64_t w = whole.empty() || whole == "-" || whole == "+" ? 0 : to_int(whole);
        const Rational f(to_int(frac), den);
        return negative ? Rational(w) - f : Rational(w) + f;
    }
    return Rational(to_int(text));
}

RunConfig parse_config(const JsonDoc& doc) {
    RunConfig c;
    if (!doc.root().is_object()) doc.fail("", "config must be a JSON object");
    check_keys(doc, "", {"orders", "medium", "cube", "tolerance", "seed", "grid", "oracle_n", "format"});
    if (has(doc, "", "orders")) c.orders = read_orders(doc, "/orders");
    if (has(doc, "", "medium")) c.medium = read_medium(doc, "/medium");
    if (has(doc, "", "cube")) c.cube = read_cube(doc, "/cube");
    if (has(doc, "", "tolerance")) {
        c.tolerance = read_number(doc, "/tolerance");
        if (!(c.tolerance > 0.0)) doc.fail("/tolerance", "tolerance must be positive");
    }
    if (has(doc, "", "seed")) c.seed = read_seed(doc, "/seed");
    if (has(doc, "", "grid")) {
        const json& g = at(doc, "/grid");
        if (!g.is_number_integer() || g.get<std::int64_t>() < 2 || g.get<std::int64_t>() > 1025)
            doc.fail("/grid", "grid must be an integer in [2, 1025]");
        c.grid = g.get<int>();
    }
    if (has(doc, "", "oracle_n")) {
        const json& n = at(doc, "/oracle_n");
        if (!n.is_number_integer() || n.get<std::int64_t>() < 8 || n.get<std::int64_t>() > (1 << 20))
            doc.fail("/oracle_n", "oracle_n must be an integer in [8, 1048576]");
        c.oracle_n = n.get<std::size_t>();
    }
    if (has(doc, "", "format")) {
        const json& f = at(doc, "/format");
        if (f == "json") c.format = Format::json;
        else if (f == "csv") c.format = Format::csv;
        else doc.fail("/format", "format must be \"json\" or \"csv\"");
    }
    return c;
}

RunConfig load_config(const std::string& path) { return parse_config(JsonDoc::load(path)); }

json to_json(const FracField& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"re", c.real()}, {"im", c.imag()}, {"exp", {e[0].str(), e[1].str(), e[2].str()}}});
    return terms;
}

json to_json(const VectorField& u) { return json::array({to_json(u(1)), to_json(u(2)), to_json(u(3))}); }

json to_json(const Medium& m) {
    return {{"g1", complex_json(m.g1())}, {"g2", complex_json(m.g2())}, {"g3", complex_json(m.g3())},
            {"omega", complex_json(m.omega())}};
}

json to_json(const OrderVector& ord) {
    json out = json::array();
    for (const auto& a : ord.values()) out.push_back(a.str());
    return out;
}

MaxwellFile read_maxwell(const JsonDoc& doc, Cube fallback) {
    if (!doc.root().is_object()) doc.fail("", "fields file must be a JSON object");
    check_keys(doc, "", {"cube", "orders", "medium", "seed", "E", "B", "rho", "j"});
    require(doc, "", {"E", "B", "rho", "j"});
    const Cube cube = has(doc, "", "cube") ? read_cube(doc, "/cube") : fallback;
    MaxwellFile f{cube, std::nullopt, std::nullopt, std::nullopt,
                  {read_vector(doc, "/E", cube), read_vector(doc, "/B", cube)},
                  {read_field(doc, "/rho", cube), read_vector(doc, "/j", cube)}};
    if (has(doc, "", "orders")) f.orders = read_orders(doc, "/orders");
    if (has(doc, "", "medium")) f.medium = read_medium(doc, "/medium");
    if (has(doc, "", "seed")) f.seed = read_seed(doc, "/seed");
    return f;
}

json to_json(const MaxwellFile& f) {
    json out{{"cube", {{"a", f.cube.a}, {"b", f.cube.b}}},
             {"E", to_json(f.fields.E)},
             {"B", to_json(f.fields.B)},
             {"rho", to_json(f.sources.rho)},
             {"j", to_json(f.sources.j)}};
    if (f.orders) out["orders"] = to_json(*f.orders);
    if (f.medium) out["medium"] = to_json(*f.medium);
    if (f.seed) out["seed"] = *f.seed;
    return out;
}

CatalogFile read_catalog(const JsonDoc& doc, Cube fallback) {
    if (!doc.root().is_object()) doc.fail("", "fields file must be a JSON object");
    check_keys(doc, "", {"cube", "orders", "params", "psi0", "phi", "theta", "p0"});
    CatalogFile f{has(doc, "", "cube") ? read_cube(doc, "/cube") : fallback, std::nullopt, {}, {}};
    if (has(doc, "", "orders")) f.orders = read_orders(doc, "/orders");
    if (has(doc, "", "params")) {
        check_keys(doc, "/params", {"A", "B", "V", "mu0", "rho0"});
        if (has(doc, "/params", "A")) f.params.A = read_vec3(doc, "/params/A");
        if (has(doc, "/params", "B")) f.params.B = read_vec3(doc, "/params/B");
        if (has(doc, "/params", "V")) f.params.V = read_vec3(doc, "/params/V");
        if (has(doc, "/params", "mu0")) f.params.mu0 = read_number(doc, "/params/mu0");
        if (has(doc, "/params", "rho0")) f.params.rho0 = read_number(doc, "/params/rho0");
    }
    if (has(doc, "", "psi0")) f.fields.psi0 = read_field(doc, "/psi0", f.cube);
    if (has(doc, "", "phi")) f.fields.phi = read_vector(doc, "/phi", f.cube);
    if (has(doc, "", "theta")) f.fields.theta = read_vector(doc, "/theta", f.cube);
    if (has(doc, "", "p0")) f.fields.p0 = read_field(doc, "/p0", f.cube);
    return f;
}

OracleFile read_oracle_field(const JsonDoc& doc, Cube fallback) {
    if (!doc.root().is_object()) doc.fail("", "field file must be a JSON object");
    check_keys(doc, "", {"cube", "field", "point"});
    require(doc, "", {"field"});
    const Cube cube = has(doc, "", "cube") ? read_cube(doc, "/cube") : fallback;
    const double mid = cube.a + 0.5 * cube.length();
    OracleFile f{read_field(doc, "/field", cube), {mid, mid, mid}};
    if (has(doc, "", "point")) {
        const Vec3 p = read_vec3(doc, "/point");
        for (std::size_t n = 0; n < 3; ++n)
            if (p[n] < cube.a || p[n] > cube.b) doc.fail(child("/point", n), "point lies outside the cube");
        f.point = {p[0], p[1], p[2]};
    }
    return f;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ReportRow make_row(std::string suite, std::string anchor, double residual, double tolerance, Bound bound) {
    ReportRow r{std::move(suite), std::move(anchor), residual, tolerance, bound, false, std::nullopt};
    r.pass = bound == Bound::at_most ? residual <= tolerance : residual >= tolerance;
    return r;
}

bool Report::pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return !rows.empty();
}

Report from_residual_report(const ResidualReport& rr) {
    Report out{"residual", {}, {{"system", rr.system}}};
    for (const auto& m : rr.metadata) out.metadata.push_back(m);
    for (const auto& row : rr.rows) {
        ReportRow r = make_row(rr.system, row.equation, row.residual, rr.tolerance * std::max(1.0, row.scale));
        r.pass = row.pass;
        r.scale = row.scale;
        out.rows.push_back(std::move(r));
    }
    return out;
}

std::string to_json_text(const Report& r, const std::optional<std::string>& timestamp) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json j{{"suite", row.suite},
               {"anchor", row.anchor},
               {"residual", std::isfinite(row.residual) ? json(row.residual) : json(number_text(row.residual))},
               {"tolerance", row.tolerance},
               {"bound", row.bound == Bound::at_most ? "max" : "min"},
               {"pass", row.pass}};
        if (row.scale) j["scale"] = *row.scale;
        rows.push_back(std::move(j));
    }
    json meta = json::object();
    for (const auto& [k, v] : r.metadata) meta[k] = v;
    json out{{"command", r.command}, {"pass", r.pass()}, {"rows", rows}, {"metadata", meta}};
    if (timestamp) out["timestamp"] = *timestamp;
    return dump(out);
}

std::string to_csv_text(const Report& r) {
    std::string out = "suite,anchor,residual,tolerance,pass\n";
    for (const auto& row : r.rows)
        out += row.suite + "," + row.anchor + "," + number_text(row.residual) + "," + number_text(row.tolerance) + "," +
               (row.pass ? "true" : "false") + "\n";
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace fracq::io
