// Command-line driver: loads fibration data (built-in catalog or user
// files), runs the curvature / compatibility / series / continuation
// pipeline, and emits deterministic reports as text, JSON, or CSV.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 geometric or
// algebraic obstruction (inconsistent compatibility system, obstructed
// solve order, failed certification, loss of metric positivity).

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cohom1/catalog.hpp"
#include "cohom1/integrate.hpp"
#include "cohom1/ivp.hpp"
#include "cohom1/oracle.hpp"

namespace {

using namespace cohom1;
using nlohmann::json;

// ---------------------------------------------------------------------------
// display formatting

// COHOM1_PRECISION caps the denominators shown in text / CSV reports;
// beyond the cap a 12-digit decimal is displayed instead.  JSON output is
// always exact so solution files round-trip.
long display_cap() {
    static long cap = [] {
        const char* e = std::getenv("COHOM1_PRECISION");
        return e ? std::atol(e) : 0;
    }();
    return cap;
}

std::string fmt_rat(const Rational& q) {
    long cap = display_cap();
    if (cap > 0 && q.get_den() > cap) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
        return buf;
    }
    return to_string(q);
}

std::string fmt_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

// ---------------------------------------------------------------------------
// shared option plumbing

struct Common {
    std::string example, input, emit = "text";
};

void add_source_opts(CLI::App* cmd, Common& c) {
    cmd->add_option("--example", c.example, "built-in catalog entry name");
    cmd->add_option("--input", c.input, "path to a fibration JSON file");
}

void add_emit_opt(CLI::App* cmd, Common& c, const std::string& def = "text") {
    c.emit = def;
    cmd->add_option("--emit", c.emit, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

FibrationData load_source(const Common& c) {
    if (!c.example.empty()) return catalog_load(c.example);
    if (!c.input.empty()) return load_fibration(c.input);
    throw InvalidInput("provide --example <name> or --input <file>; "
                       "built-in names: " + [] {
                           std::string s;
                           for (const auto& n : catalog_names()) s += (s.empty() ? "" : ", ") + n;
                           return s;
                       }());
}

// ---------------------------------------------------------------------------
// small parsers

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

// "2" -> constant, "0:2,2:-1/3" -> coefficient list
TruncatedSeries parse_series_arg(const std::string& s) {
    TruncatedSeries r;
    if (s.empty()) return r;
    for (const std::string& tok : split(s, ',')) {
        auto colon = tok.find(':');
        int e = colon == std::string::npos ? 0 : std::stoi(tok.substr(0, colon));
        Rational c = parse_rational(colon == std::string::npos ? tok : tok.substr(colon + 1));
        r.set_coeff(e, r.coeff(e) + AffineScalar(c));
    }
    return r;
}

json series_to_json(const TruncatedSeries& s) {
    json a = json::array();
    if (s.identically_zero()) return a;
    for (int e = s.ord(); e <= s.max_deg(); ++e) {
        const AffineScalar& c = s.coeff(e);
        if (!c.is_constant())
            throw InvalidInput("series carries undetermined coefficients; cannot serialize");
        if (c.constant() != 0) a.push_back({e, to_string(c.constant())});
    }
    return a;
}

TruncatedSeries series_from_json(const json& a) {
    TruncatedSeries s;
    for (const auto& t : a)
        s.set_coeff(t.at(0).get<int>(), AffineScalar(parse_rational(t.at(1).get<std::string>())));
    return s;
}

// metric file: {"diag": ["1", ...]} or {"matrix": [["1","0"], ...]}
RationalMatrix load_metric_file(const std::string& path, int n) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open metric file '" + path + "'");
    json j = json::parse(f, nullptr, true, true);
    RationalMatrix P(n, n);
    if (j.contains("diag")) {
        if (static_cast<int>(j["diag"].size()) != n)
            throw InvalidInput("metric diag length must equal dim n = " + std::to_string(n));
        for (int i = 0; i < n; ++i) P(i, i) = parse_rational(j["diag"][i].get<std::string>());
        return P;
    }
    if (j.contains("matrix")) {
        const json& m = j["matrix"];
        if (static_cast<int>(m.size()) != n)
            throw InvalidInput("metric matrix must be " + std::to_string(n) + " x " +
                               std::to_string(n));
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(m[i].size()) != n)
                throw InvalidInput("metric matrix row " + std::to_string(i) + " has wrong length");
            for (int k = 0; k < n; ++k) P(i, k) = parse_rational(m[i][k].get<std::string>());
        }
        return P;
    }
    throw InvalidInput("metric file needs a \"diag\" or \"matrix\" field");
}

RationalMatrix metric_from_opts(const std::string& file, const std::string& diag, int n) {
    if (!file.empty()) return load_metric_file(file, n);
    if (!diag.empty()) {
        std::vector<std::string> parts = split(diag, ',');
        if (static_cast<int>(parts.size()) != n)
            throw InvalidInput("--diag needs " + std::to_string(n) + " comma-separated values");
        RationalMatrix P(n, n);
        for (int i = 0; i < n; ++i) P(i, i) = parse_rational(parts[i]);
        return P;
    }
    return RationalMatrix::identity(n);
}

// "einstein:<l>", "soliton:<l>,<1/m>", "ricci:<file>" (or "ricci:zero")
CompatTarget parse_target(const std::string& spec, const FibrationData& data) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "einstein") return CompatTarget::einstein(parse_rational(rest));
    if (kind == "soliton") {
        std::vector<std::string> parts = split(rest, ',');
        if (parts.empty() || parts.size() > 2)
            throw InvalidInput("soliton target syntax: soliton:<lambda>[,<1/m>]");
        Rational im = parts.size() == 2 ? parse_rational(parts[1]) : Rational(0);
        return CompatTarget::soliton(parse_rational(parts[0]), im);
    }
    if (kind == "ricci") {
        int n = data.dim_n();
        SeriesMatrix T(n, n);
        if (rest == "zero" || rest == "0") return CompatTarget::tensor(T);
        std::ifstream f(rest);
        if (!f) throw InvalidInput("cannot open tensor file '" + rest + "'");
        json j = json::parse(f, nullptr, true, true);
        const json& m = j.contains("matrix") ? j["matrix"] : j;
        if (static_cast<int>(m.size()) != n)
            throw InvalidInput("prescribed tensor must be " + std::to_string(n) + " x " +
                               std::to_string(n));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const json& e = m[i][k];
                if (e.is_string())
                    T(i, k) = TruncatedSeries(parse_rational(e.get<std::string>()));
                else
                    T(i, k) = series_from_json(e);
            }
        return CompatTarget::tensor(T);
    }
    throw InvalidInput("unknown target '" + spec +
                       "'; use einstein:<l>, soliton:<l>,<1/m>, or ricci:<file>");
}

std::string target_label(const CompatTarget& t) {
    switch (t.kind) {
        case CompatTarget::Kind::Einstein: return "einstein:" + to_string(t.lambda);
        case CompatTarget::Kind::Soliton:
            return "soliton:" + to_string(t.lambda) + "," + to_string(t.inv_m);
        default: return "prescribed tensor";
    }
}

std::string entry_label(const FibrationData& d, int i, int j) {
    int r = d.pos_in_n[i] + 1, c = d.pos_in_n[j] + 1;
    std::string sep = (r > 9 || c > 9) ? "_" : "";
    return "g_" + std::to_string(r) + sep + std::to_string(c);
}

// ---------------------------------------------------------------------------
// matrix emission

void emit_rational_matrix(const RationalMatrix& m, const std::string& emit,
                          const std::string& key) {
    if (emit == "json") {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
            rows.push_back(row);
        }
        std::cout << json{{key, rows}}.dump(2) << "\n";
        return;
    }
    const char* sep = emit == "csv" ? "," : "  ";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) std::cout << (j ? sep : "") << fmt_rat(m(i, j));
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------------------
// solution (de)serialization for the integrate handoff

json target_to_json(const CompatTarget& t) {
    json j{{"lambda", to_string(t.lambda)}, {"inv_m", to_string(t.inv_m)}};
    switch (t.kind) {
        case CompatTarget::Kind::Einstein: j["kind"] = "einstein"; break;
        case CompatTarget::Kind::Soliton: j["kind"] = "soliton"; break;
        case CompatTarget::Kind::Tensor: {
            j["kind"] = "tensor";
            json rows = json::array();
            for (int i = 0; i < t.prescribed.rows(); ++i) {
                json row = json::array();
                for (int k = 0; k < t.prescribed.cols(); ++k)
                    row.push_back(series_to_json(t.prescribed(i, k)));
                rows.push_back(row);
            }
            j["prescribed"] = rows;
            break;
        }
    }
    return j;
}

CompatTarget target_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "einstein")
        return CompatTarget::einstein(parse_rational(j.at("lambda").get<std::string>()));
    if (kind == "soliton")
        return CompatTarget::soliton(parse_rational(j.at("lambda").get<std::string>()),
                                     parse_rational(j.at("inv_m").get<std::string>()));
    const json& rows = j.at("prescribed");
    int n = static_cast<int>(rows.size());
    SeriesMatrix T(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) T(i, k) = series_from_json(rows[i][k]);
    return CompatTarget::tensor(T);
}

json solution_to_json(const IVPSolution& sol, const CertificateReport* cert) {
    json doc;
    doc["fibration"] = json::parse(serialize_fibration(sol.data));
    doc["target"] = target_to_json(sol.target);
    doc["gauge"] = sol.gauge == Gauge::Arclength ? "arclength" : "reparametrized";
    doc["h0"] = to_string(sol.h0);
    doc["beta"] = series_to_json(sol.beta);
    doc["order"] = sol.order;
    json phi = json::array();
    for (const auto& s : sol.phi) phi.push_back(series_to_json(s));
    doc["phi"] = phi;
    doc["potential"] = sol.potential ? series_to_json(*sol.potential) : json();
    doc["lapse"] = sol.lapse ? series_to_json(*sol.lapse) : json();
    doc["free_parameters"] = sol.compat.free_names;
    doc["warnings"] = sol.warnings;
    json table = json::array();
    for (const auto& r : sol.table)
        table.push_back({{"name", r.name},
                         {"power", r.power},
                         {"value", to_string(r.value)},
                         {"provenance", r.provenance}});
    doc["table"] = table;
    if (cert) {
        json rows = json::array();
        for (const auto& r : cert->rows)
            rows.push_back({{"label", r.label},
                            {"slope", r.slope},
                            {"skipped", r.skipped},
                            {"passed", r.passed}});
        json c{{"threshold", cert->threshold}, {"passed", cert->passed}, {"rows", rows}};
        if (cert->normal_exact_through) c["normal_exact_through"] = *cert->normal_exact_through;
        doc["certificate"] = c;
    }
    return doc;
}

IVPSolution solution_from_json(const json& doc) {
    IVPSolution sol;
    sol.data = parse_fibration(doc.at("fibration").dump());
    sol.target = target_from_json(doc.at("target"));
    sol.gauge = doc.at("gauge").get<std::string>() == "reparametrized" ? Gauge::Reparametrized
                                                                       : Gauge::Arclength;
    sol.h0 = parse_rational(doc.at("h0").get<std::string>());
    sol.beta = series_from_json(doc.at("beta"));
    sol.order = doc.at("order").get<int>();
    for (const auto& s : doc.at("phi")) sol.phi.push_back(series_from_json(s));
    if (!doc.at("potential").is_null()) sol.potential = series_from_json(doc["potential"]);
    if (!doc.at("lapse").is_null()) sol.lapse = series_from_json(doc["lapse"]);
    return sol;
}

// ---------------------------------------------------------------------------
// subcommand bodies

int run_validate(const Common& c) {
    FibrationData data = load_source(c);
    ValidationReport rep = validate(data);
    if (c.emit == "json") {
        json issues = json::array();
        for (const auto& i : rep.issues) issues.push_back({{"check", i.check}, {"detail", i.detail}});
        std::cout << json{{"name", data.name},
                          {"passed", rep.passed()},
                          {"issues", issues},
                          {"warnings", rep.warnings}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "validate " << data.name << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& i : rep.issues)
            std::cout << "  issue [" << i.check << "]: " << i.detail << "\n";
        for (const auto& w : rep.warnings) std::cout << "  warning: " << w << "\n";
    }
    return rep.passed() ? 0 : 1;
}

int run_ricci(const Common& c, const std::string& metric_file, const std::string& diag) {
    FibrationData data = load_source(c);
    RationalMatrix P = metric_from_opts(metric_file, diag, data.dim_n());
    RationalMatrix R = ricci_gh(data, P);
    if (c.emit == "text") std::cout << "ricci of (" << data.name << ", P) in the n-basis:\n";
    emit_rational_matrix(R, c.emit, "ricci");
    return 0;
}

int run_compat(const Common& c, const std::string& target_spec) {
    FibrationData data = load_source(c);
    CompatTarget target = parse_target(target_spec, data);
    CompatReport rep = build_system(data, target);
    if (c.emit == "json") {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"label", r.label},
                            {"equation", r.equation.str(&rep.tab) + " = 0"},
                            {"status", r.status}});
        std::cout << json{{"name", data.name},
                          {"target", target_label(target)},
                          {"rows", rows},
                          {"free_parameters", rep.free_names},
                          {"consistent", rep.consistent()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "compatibility system for " << data.name << ", target "
                  << target_label(target) << ":\n";
        for (const auto& r : rep.rows)
            std::cout << "  " << r.label << ": " << r.equation.str(&rep.tab) << " = 0  ["
                      << r.status << "]\n";
        std::cout << "free parameters (" << rep.free_names.size() << "):";
        for (const auto& n : rep.free_names) std::cout << " " << n;
        std::cout << "\n";
        if (!rep.consistent()) std::cout << "OBSTRUCTED: the system is inconsistent\n";
    }
    return rep.consistent() ? 0 : 2;
}

struct SolveOpts {
    std::string target_spec;
    int order = 20;
    std::vector<std::string> free;
    std::string gauge = "arclength";
    std::string beta;
};

IVPSolution run_solve_pipeline(const Common& c, const SolveOpts& o, FibrationData* out_data) {
    IVPProblem p;
    p.data = load_source(c);
    p.target = parse_target(o.target_spec, p.data);
    p.order = o.order;
    for (const std::string& kv : o.free) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw InvalidInput("--free expects name=value, got '" + kv + "'");
        p.free_values[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    if (out_data) *out_data = p.data;
    if (o.gauge == "arclength") {
        if (!o.beta.empty())
            throw InvalidInput("--beta is only meaningful with --gauge reparam:<h0>");
        return p.target.kind == CompatTarget::Kind::Soliton ? solve_soliton(p) : solve_series(p);
    }
    if (o.gauge.rfind("reparam", 0) == 0) {
        auto colon = o.gauge.find(':');
        p.h0 = colon == std::string::npos ? Rational(1) : parse_rational(o.gauge.substr(colon + 1));
        p.gauge = Gauge::Reparametrized;
        return solve_reparametrized(p, parse_series_arg(o.beta));
    }
    throw InvalidInput("unknown gauge '" + o.gauge + "'; use arclength or reparam:<h0>");
}

void print_solution_text(const IVPSolution& sol, const CertificateReport& cert) {
    std::cout << "solution for " << sol.data.name << ", target " << target_label(sol.target)
              << ", order " << sol.order << " ("
              << (sol.gauge == Gauge::Arclength ? "arc-length" : "reparametrized") << ")\n";
    std::cout << "coefficient table:\n";
    for (const auto& r : sol.table)
        std::cout << "  " << r.name << "  t^" << r.power << "  " << fmt_rat(r.value) << "  ["
                  << r.provenance << "]\n";
    std::cout << "free parameters (" << sol.compat.free_names.size() << "):";
    for (const auto& n : sol.compat.free_names) std::cout << " " << n;
    std::cout << "\n";
    for (const auto& w : sol.warnings) std::cout << "warning: " << w << "\n";
    std::cout << "certificate: " << (cert.passed ? "PASS" : "FAIL") << " (required slope "
              << cert.threshold << ")\n";
    for (const auto& r : cert.rows) {
        std::cout << "  " << r.label << ": ";
        if (r.skipped)
            std::cout << "residual identically zero\n";
        else
            std::cout << "slope " << r.slope << (r.passed ? "" : "  [FAIL]") << "\n";
    }
    if (cert.normal_exact_through)
        std::cout << "normal equation exact through t^" << *cert.normal_exact_through << "\n";
}

int run_solve(const Common& c, const SolveOpts& o) {
    IVPSolution sol = run_solve_pipeline(c, o, nullptr);
    CertificateReport cert = residual_certificate(sol, /*throw_on_failure=*/false);
    if (c.emit == "json") {
        std::cout << solution_to_json(sol, &cert).dump(2) << "\n";
    } else if (c.emit == "csv") {
        std::cout << "name,power,value,provenance\n";
        for (const auto& r : sol.table)
            std::cout << r.name << "," << r.power << "," << fmt_rat(r.value) << ","
                      << r.provenance << "\n";
    } else {
        print_solution_text(sol, cert);
    }
    return cert.passed ? 0 : 2;
}

int run_certify(const Common& c, const SolveOpts& o) {
    IVPSolution sol = run_solve_pipeline(c, o, nullptr);
    CertificateReport cert = residual_certificate(sol, /*throw_on_failure=*/false);
    if (c.emit == "json") {
        json doc = solution_to_json(sol, &cert);
        std::cout << doc["certificate"].dump(2) << "\n";
    } else {
        std::cout << "certificate for " << sol.data.name << ", target "
                  << target_label(sol.target) << ", order " << sol.order << ": "
                  << (cert.passed ? "PASS" : "FAIL") << "\n";
        for (const auto& r : cert.rows) {
            std::cout << "  " << r.label << ": ";
            if (r.skipped)
                std::cout << "residual identically zero\n";
            else
                std::cout << "slope " << r.slope << " (required " << cert.threshold << ")"
                          << (r.passed ? "" : "  [FAIL]") << "\n";
        }
        if (cert.normal_exact_through)
            std::cout << "normal equation exact through t^" << *cert.normal_exact_through << "\n";
    }
    return cert.passed ? 0 : 2;
}

int run_integrate(const Common& c, const std::string& from, double t0, double tmax,
                  double reltol, int samples) {
    std::ifstream f(from);
    if (!f) throw InvalidInput("cannot open solution file '" + from + "'");
    IVPSolution sol = solution_from_json(json::parse(f, nullptr, true, true));
    Trajectory tr = continue_solution(sol, t0, tmax, reltol, samples);
    if (c.emit == "json") {
        json cols = json::array();
        for (auto [i, j] : tr.entries) cols.push_back(entry_label(sol.data, i, j));
        json rows = json::array();
        for (const auto& s : tr.samples) {
            json r{{"t", s.t}, {"g", s.g}, {"gdot", s.gdot}};
            if (tr.has_potential) r["v"] = s.v;
            if (tr.has_lapse) r["h"] = s.h;
            rows.push_back(r);
        }
        std::cout << json{{"entries", cols}, {"samples", rows}}.dump(2) << "\n";
        return 0;
    }
    // text and csv both emit the sample table
    std::cout << "t";
    for (auto [i, j] : tr.entries) std::cout << "," << entry_label(sol.data, i, j);
    if (tr.has_potential) std::cout << ",v";
    if (tr.has_lapse) std::cout << ",h";
    std::cout << "\n";
    for (const auto& s : tr.samples) {
        std::cout << fmt_double(s.t);
        for (double g : s.g) std::cout << "," << fmt_double(g);
        if (tr.has_potential) std::cout << "," << fmt_double(s.v);
        if (tr.has_lapse) std::cout << "," << fmt_double(s.h);
        std::cout << "\n";
    }
    return 0;
}

int run_oracle_ricci(const Common& c, const std::string& metric_file, const std::string& diag) {
    FibrationData data = load_source(c);
    RationalMatrix P = metric_from_opts(metric_file, diag, data.dim_n());
    RationalMatrix K = koszul_ricci(data, P);
    std::vector<std::vector<double>> O = orthonormal_basis_ricci(data, P);
    RationalMatrix R = ricci_gh(data, P);
    double dev = 0;
    for (int i = 0; i < R.rows(); ++i)
        for (int j = 0; j < R.cols(); ++j)
            dev = std::max(dev, std::abs(O[i][j] - R(i, j).get_d()));
    bool exact_match = true;
    for (int i = 0; i < R.rows(); ++i)
        for (int j = 0; j < R.cols(); ++j)
            if (K(i, j) != R(i, j)) exact_match = false;
    if (c.emit == "json") {
        json k = json::array(), o = json::array();
        for (int i = 0; i < R.rows(); ++i) {
            json kr = json::array(), orow = json::array();
            for (int j = 0; j < R.cols(); ++j) {
                kr.push_back(to_string(K(i, j)));
                orow.push_back(O[i][j]);
            }
            k.push_back(kr);
            o.push_back(orow);
        }
        std::cout << json{{"koszul", k},
                          {"orthonormal_frame", o},
                          {"koszul_matches_production", exact_match},
                          {"orthonormal_max_deviation", dev}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "koszul ricci (exact):\n";
        emit_rational_matrix(K, "text", "");
        std::cout << "koszul vs production: " << (exact_match ? "equal" : "DIFFER") << "\n";
        std::cout << "orthonormal-frame ricci max deviation: " << fmt_double(dev) << "\n";
    }
    return exact_match && dev < 1e-9 ? 0 : 2;
}

int run_oracle_killing(const Common& c) {
    FibrationData data = load_source(c);
    RationalMatrix A = killing_via_ad(data);
    RationalMatrix B = killing_form(data);
    bool equal = true;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (A(i, j) != B(i, j)) equal = false;
    if (c.emit == "json") {
        json rows = json::array();
        for (int i = 0; i < A.rows(); ++i) {
            json r = json::array();
            for (int j = 0; j < A.cols(); ++j) r.push_back(to_string(A(i, j)));
            rows.push_back(r);
        }
        std::cout << json{{"killing", rows}, {"matches_production", equal}}.dump(2) << "\n";
    } else {
        std::cout << "killing form via ad matrices:\n";
        emit_rational_matrix(A, "text", "");
        std::cout << "matches production contraction: " << (equal ? "yes" : "NO") << "\n";
    }
    return equal ? 0 : 2;
}

int run_oracle_closed_forms(const Common& c) {
    std::vector<ClosedForm> table = closed_form_catalog();
    if (c.emit == "json") {
        json rows = json::array();
        for (const auto& f : table) {
            json cs = json::array();
            for (const auto& v : f.coefficients) cs.push_back(to_string(v));
            rows.push_back({{"name", f.name},
                            {"description", f.description},
                            {"lambda", to_string(f.lambda)},
                            {"coefficients", cs}});
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& f : table) {
            std::cout << f.name << ": " << f.description << " (lambda = " << to_string(f.lambda)
                      << ")\n  coefficients:";
            for (const auto& v : f.coefficients) std::cout << " " << fmt_rat(v);
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature and initial-value-problem toolkit for cohomogeneity one metrics"};
    app.require_subcommand(1);

    Common c_validate, c_ricci, c_compat, c_solve, c_certify, c_integrate;
    Common c_oricci, c_okilling, c_oclosed;
    SolveOpts solve_opts, certify_opts;
    std::string ricci_metric, ricci_diag, oricci_metric, oricci_diag;
    std::string compat_target, from_solution;
    double t0 = 0.1, tmax = 1.0, reltol = 1e-10;
    int samples = 101;

    CLI::App* v = app.add_subcommand("validate", "check algebra and ansatz invariants");
    add_source_opts(v, c_validate);
    add_emit_opt(v, c_validate);

    CLI::App* r = app.add_subcommand("ricci", "ricci tensor of a homogeneous metric");
    add_source_opts(r, c_ricci);
    add_emit_opt(r, c_ricci);
    r->add_option("--metric", ricci_metric, "metric JSON file (diag or matrix)");
    r->add_option("--diag", ricci_diag, "inline diagonal metric, comma-separated rationals");

    CLI::App* cp = app.add_subcommand("compat", "order-0 compatibility system");
    add_source_opts(cp, c_compat);
    add_emit_opt(cp, c_compat);
    cp->add_option("--target", compat_target, "einstein:<l> | soliton:<l>,<1/m> | ricci:<file>")
        ->required();

    auto add_solve_opts = [](CLI::App* cmd, Common& c, SolveOpts& o) {
        add_source_opts(cmd, c);
        add_emit_opt(cmd, c);
        cmd->add_option("--target", o.target_spec,
                        "einstein:<l> | soliton:<l>,<1/m> | ricci:<file>")
            ->required();
        cmd->add_option("--order", o.order, "truncation order N (even)");
        cmd->add_option("--free", o.free, "free parameter assignment name=value");
        cmd->add_option("--gauge", o.gauge, "arclength (default) or reparam:<h0>");
        cmd->add_option("--beta", o.beta,
                        "prescribed normal Ricci component, e.g. \"2\" or \"0:2,2:-1/3\"");
    };
    CLI::App* s = app.add_subcommand("solve", "series solution with residual certificate");
    add_solve_opts(s, c_solve, solve_opts);
    CLI::App* ce = app.add_subcommand("certify", "solve and report only the certificate");
    add_solve_opts(ce, c_certify, certify_opts);

    CLI::App* in = app.add_subcommand("integrate", "numerical continuation of a solved series");
    add_emit_opt(in, c_integrate, "csv");
    in->add_option("--from-solution", from_solution, "solution JSON produced by solve --emit json")
        ->required();
    in->add_option("--t0", t0, "handoff time (series initial data)");
    in->add_option("--tmax", tmax, "final time")->required();
    in->add_option("--reltol", reltol, "relative tolerance of the step control");
    in->add_option("--samples", samples, "uniform sample count including both ends");

    CLI::App* oc = app.add_subcommand("oracle", "independent cross-check implementations");
    oc->require_subcommand(1);
    CLI::App* ocr = oc->add_subcommand("ricci", "koszul and orthonormal-frame ricci");
    add_source_opts(ocr, c_oricci);
    ocr->add_option("--algebra", c_oricci.input, "path to a fibration JSON file");
    add_emit_opt(ocr, c_oricci);
    ocr->add_option("--metric", oricci_metric, "metric JSON file (diag or matrix)");
    ocr->add_option("--diag", oricci_diag, "inline diagonal metric");
    CLI::App* ock = oc->add_subcommand("killing", "killing form via explicit ad matrices");
    add_source_opts(ock, c_okilling);
    ock->add_option("--algebra", c_okilling.input, "path to a fibration JSON file");
    add_emit_opt(ock, c_okilling);
    CLI::App* occ = oc->add_subcommand("closed-forms", "exact germs known in closed form");
    add_emit_opt(occ, c_oclosed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*v) return run_validate(c_validate);
        if (*r) return run_ricci(c_ricci, ricci_metric, ricci_diag);
        if (*cp) return run_compat(c_compat, compat_target);
        if (*s) return run_solve(c_solve, solve_opts);
        if (*ce) return run_certify(c_certify, certify_opts);
        if (*in) return run_integrate(c_integrate, from_solution, t0, tmax, reltol, samples);
        if (*ocr) return run_oracle_ricci(c_oricci, oricci_metric, oricci_diag);
        if (*ock) return run_oracle_killing(c_okilling);
        if (*occ) return run_oracle_closed_forms(c_oclosed);
    } catch (const ObstructionAtOrder& e) {
        std::cerr << "obstruction: " << e.what() << "\n";
        return 2;
    } catch (const ConditionStarViolated& e) {
        std::cerr << "obstruction: " << e.what() << "\n";
        return 2;
    } catch (const PositivityLost& e) {
        std::cerr << "obstruction: " << e.what() << "\n";
        return 2;
    } catch (const CertificationFailed& e) {
        std::cerr << "obstruction: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
