#include "cohom1/liealg.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace cohom1 {

using nlohmann::json;

void FibrationData::finalize() {
    int d = dim();
    dense_.clear();
    for (const auto& g : gamma) {
        if (g.i < 0 || g.i >= d || g.j < 0 || g.j >= d || g.u < 0 || g.u >= d)
            throw InvalidInput("gamma index out of range in " + name);
        if (g.v == 0) continue;
        auto [it, fresh] = dense_.try_emplace(key(g.i, g.j, g.u), g.v);
        if (!fresh) throw InvalidInput("duplicate gamma entry in " + name);
    }
    trace_ad.assign(d, Rational(0));
    for (const auto& g : gamma)
        if (g.j == g.u) trace_ad[g.i] += g.v;
    unimodular = true;
    for (const auto& t : trace_ad)
        if (t != 0) unimodular = false;
    if (!q_norms.empty()) {
        if (static_cast<int>(q_norms.size()) != d)
            throw InvalidInput("q_norms must list one value per basis vector in " + name);
        for (const auto& w : q_norms)
            if (w <= 0) throw InvalidInput("q_norms entries must be positive in " + name);
    }
    n_basis = index_I;
    n_basis.insert(n_basis.end(), index_J.begin(), index_J.end());
    pos_in_n.assign(d, -1);
    for (size_t p = 0; p < n_basis.size(); ++p) {
        int u = n_basis[p];
        if (u < 0 || u >= d || pos_in_n[u] != -1)
            throw InvalidInput("index_I/index_J must be disjoint and in range");
        pos_in_n[u] = static_cast<int>(p);
    }
}

ValidationReport validate(const FibrationData& data) {
    ValidationReport rep;
    int d = data.dim();
    auto idx = [&](int u) { return data.basis.size() > static_cast<size_t>(u) ? data.basis[u] : std::to_string(u); };

    // antisymmetry over the full basis
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int u = 0; u < d; ++u)
                if (data.gamma_at(i, j, u) != -data.gamma_at(j, i, u)) {
                    rep.issues.push_back({"antisymmetry",
                                          "Gamma(" + idx(i) + "," + idx(j) + ")^" + idx(u) +
                                              " != -Gamma(" + idx(j) + "," + idx(i) + ")^" + idx(u)});
                }

    // Ad_K symmetry properties on n, taken against the background form:
    // <[e_r,e_s],e_k> = -<e_s,[e_r,e_k]> reads w_k Gamma(r,s)^k = -w_s Gamma(r,k)^s
    for (int r : data.index_I) {
        for (int s : data.index_I)
            for (int k : data.index_I)
                if (data.q_norm(k) * data.gamma_at(r, s, k) !=
                    -data.q_norm(s) * data.gamma_at(r, k, s))
                    rep.issues.push_back({"skew-ppp", "at (" + idx(r) + "," + idx(s) + "," + idx(k) + ")"});
        for (int s : data.index_J)
            for (int k : data.index_J)
                if (data.q_norm(k) * data.gamma_at(r, s, k) !=
                    -data.q_norm(s) * data.gamma_at(r, k, s))
                    rep.issues.push_back({"skew-pmm", "at (" + idx(r) + "," + idx(s) + "," + idx(k) + ")"});
        for (int s : data.index_I) {
            for (int k : data.index_J) {
                if (data.gamma_at(r, s, k) != 0)
                    rep.issues.push_back({"skew-ppm", "Gamma(" + idx(r) + "," + idx(s) + ")^" + idx(k) + " != 0"});
                if (data.gamma_at(r, k, s) != 0)
                    rep.issues.push_back({"skew-pmp", "Gamma(" + idx(r) + "," + idx(k) + ")^" + idx(s) + " != 0"});
                if (data.gamma_at(k, r, s) != 0)
                    rep.issues.push_back({"skew-mpp", "Gamma(" + idx(k) + "," + idx(r) + ")^" + idx(s) + " != 0"});
            }
        }
    }

    // Jacobi identity, exact
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k)
                for (int u = 0; u < d; ++u) {
                    Rational s = 0;
                    for (int t = 0; t < d; ++t)
                        s += data.gamma_at(i, j, t) * data.gamma_at(t, k, u) +
                             data.gamma_at(j, k, t) * data.gamma_at(t, i, u) +
                             data.gamma_at(k, i, t) * data.gamma_at(t, j, u);
                    if (s != 0)
                        rep.issues.push_back({"jacobi", "cyclic sum nonzero at (" + idx(i) + "," +
                                                            idx(j) + "," + idx(k) + ")^" + idx(u)});
                }

    // K-equivalences must intertwine the bracket data restricted to p
    for (const auto& eq : data.equivalences) {
        if (eq.group != Equivalence::Group::K) continue;
        std::map<int, std::pair<int, Rational>> f;
        for (const auto& [a, b, c] : eq.map) f[a] = {b, c};
        for (int r : data.index_I)
            for (int i : eq.space_a)
                for (int k : eq.space_a) {
                    auto [fi, ci] = f.at(i);
                    auto [fk, ck] = f.at(k);
                    if (data.gamma_at(r, i, k) * ck != data.gamma_at(r, fi, fk) * ci)
                        rep.issues.push_back(
                            {"equivalence", "K-intertwiner breaks brackets at (" + idx(r) + "," +
                                                idx(i) + "," + idx(k) + ")"});
                }
    }

    if (!data.unimodular)
        rep.warnings.push_back("algebra is non-unimodular; mean-curvature term engaged");
    if (!check_condition_star(data))
        rep.warnings.push_back(
            "an Ad_H module of p is equivalent to one of m; "
            "mixed p-m metric entries are restricted to zero");
    return rep;
}

RationalMatrix killing_form(const FibrationData& data) {
    int d = data.dim();
    RationalMatrix B(d, d);
    for (int u = 0; u < d; ++u)
        for (int v = u; v < d; ++v) {
            Rational s = 0;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) s += data.gamma_at(u, a, b) * data.gamma_at(v, b, a);
            B(u, v) = s;
            B(v, u) = s;
        }
    return B;
}

bool check_condition_star(const FibrationData& data) {
    for (const auto& eq : data.equivalences) {
        if (eq.group != Equivalence::Group::H) continue;
        auto side = [&](const std::vector<int>& space) {
            bool p = false, m = false;
            for (int u : space) {
                if (data.in_I(u)) p = true;
                if (data.in_J(u)) m = true;
            }
            return std::pair(p, m);
        };
        auto [ap, am] = side(eq.space_a);
        auto [bp, bm] = side(eq.space_b);
        if ((ap && bm) || (am && bp)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// serialization

static std::vector<int> ints(const json& j) { return j.get<std::vector<int>>(); }

static std::vector<std::tuple<int, int, Rational>> pairs_with_coeff(const json& j) {
    std::vector<std::tuple<int, int, Rational>> out;
    for (const auto& e : j)
        out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(),
                         parse_rational(e.at(2).get<std::string>()));
    return out;
}

FibrationData parse_fibration(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    FibrationData d;
    try {
        d.name = j.value("name", "");
        d.description = j.value("description", "");
        d.basis = j.at("basis").get<std::vector<std::string>>();
        d.dim_h = j.value("dim_h", 0);
        for (const auto& g : j.at("gamma"))
            d.gamma.push_back({g.at(0).get<int>(), g.at(1).get<int>(), g.at(2).get<int>(),
                               parse_rational(g.at(3).get<std::string>())});
        d.index_I = ints(j.at("index_I"));
        d.index_J = ints(j.at("index_J"));
        if (j.contains("p_modules")) {
            d.p0 = ints(j["p_modules"].value("p0", json::array()));
            d.p1 = ints(j["p_modules"].value("p1", json::array()));
            d.p2 = ints(j["p_modules"].value("p2", json::array()));
        }
        if (j.contains("m_modules")) {
            d.m0 = ints(j["m_modules"].value("m0", json::array()));
            for (const auto& m : j["m_modules"].value("irreducible", json::array()))
                d.m_irr.push_back(ints(m));
        }
        for (const auto& m : j.value("ad_h_modules", json::array())) d.adh_modules.push_back(ints(m));
        for (const auto& e : j.value("equivalences", json::array())) {
            Equivalence eq;
            std::string grp = e.value("group", "H");
            eq.group = grp == "K" ? Equivalence::Group::K : Equivalence::Group::H;
            std::string ty = e.value("type", "real");
            eq.type = ty == "complex"    ? Equivalence::Type::Complex
                      : ty == "symplectic" ? Equivalence::Type::Symplectic
                                           : Equivalence::Type::Real;
            eq.space_a = ints(e.at("space_a"));
            eq.space_b = ints(e.at("space_b"));
            eq.map = pairs_with_coeff(e.at("map"));
            for (const auto& cs : e.value("complex_structures", json::array()))
                eq.complex_structures.push_back(pairs_with_coeff(cs));
            d.equivalences.push_back(std::move(eq));
        }
        for (const auto& v : j.value("q_norms", json::array()))
            d.q_norms.push_back(parse_rational(v.get<std::string>()));
        const json params = j.value("parameters", json::object());
        for (const auto& [k, v] : params.items())
            d.parameters[k] = parse_rational(v.get<std::string>());
        if (j.contains("smoothness")) {
            SmoothnessData sd;
            const auto& s = j["smoothness"];
            sd.functions = s.at("functions").get<std::vector<std::string>>();
            for (const auto& c : s.at("constraints")) {
                SmoothnessConstraint sc;
                sc.a = pairs_with_coeff(c.at("a"));
                sc.d = c.at("d").get<int>();
                sd.constraints.push_back(std::move(sc));
            }
            for (const auto& a : s.at("ansatz")) {
                int i = a.at("entry").at(0).get<int>();
                int jj = a.at("entry").at(1).get<int>();
                std::vector<SmoothnessTerm> terms;
                for (const auto& t : a.at("terms")) {
                    SmoothnessTerm st;
                    st.c = parse_rational(t.at("c").get<std::string>());
                    st.d = t.value("d", 0);
                    st.phi = t.value("phi", -1);
                    st.param = t.value("param", "");
                    terms.push_back(std::move(st));
                }
                sd.ansatz[{i, jj}] = std::move(terms);
            }
            d.smoothness = std::move(sd);
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("schema error: ") + e.what());
    }
    d.finalize();
    return d;
}

FibrationData load_fibration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fibration(ss.str());
}

std::string serialize_fibration(const FibrationData& d) {
    json j;
    j["name"] = d.name;
    j["description"] = d.description;
    j["basis"] = d.basis;
    j["dim_h"] = d.dim_h;
    json g = json::array();
    for (const auto& e : d.gamma) g.push_back({e.i, e.j, e.u, to_string(e.v)});
    j["gamma"] = g;
    j["index_I"] = d.index_I;
    j["index_J"] = d.index_J;
    j["p_modules"] = {{"p0", d.p0}, {"p1", d.p1}, {"p2", d.p2}};
    j["m_modules"] = {{"m0", d.m0}, {"irreducible", d.m_irr}};
    j["ad_h_modules"] = d.adh_modules;
    json eqs = json::array();
    for (const auto& eq : d.equivalences) {
        json e;
        e["group"] = eq.group == Equivalence::Group::K ? "K" : "H";
        e["type"] = eq.type == Equivalence::Type::Complex      ? "complex"
                    : eq.type == Equivalence::Type::Symplectic ? "symplectic"
                                                               : "real";
        e["space_a"] = eq.space_a;
        e["space_b"] = eq.space_b;
        json m = json::array();
        for (const auto& [a, b, c] : eq.map) m.push_back({a, b, to_string(c)});
        e["map"] = m;
        json css = json::array();
        for (const auto& cs : eq.complex_structures) {
            json one = json::array();
            for (const auto& [a, b, c] : cs) one.push_back({a, b, to_string(c)});
            css.push_back(one);
        }
        e["complex_structures"] = css;
        eqs.push_back(e);
    }
    j["equivalences"] = eqs;
    json params = json::object();
    for (const auto& [k, v] : d.parameters) params[k] = to_string(v);
    j["parameters"] = params;
    if (!d.q_norms.empty()) {
        json w = json::array();
        for (const auto& v : d.q_norms) w.push_back(to_string(v));
        j["q_norms"] = w;
    }
    if (d.smoothness) {
        const auto& sd = *d.smoothness;
        json s;
        s["functions"] = sd.functions;
        json cons = json::array();
        for (const auto& c : sd.constraints) {
            json a = json::array();
            for (const auto& [i, jj, v] : c.a) a.push_back({i, jj, to_string(v)});
            cons.push_back({{"a", a}, {"d", c.d}});
        }
        s["constraints"] = cons;
        json ans = json::array();
        for (const auto& [entry, terms] : sd.ansatz) {
            json ts = json::array();
            for (const auto& t : terms) {
                json tj = {{"c", to_string(t.c)}, {"d", t.d}};
                if (t.phi >= 0) tj["phi"] = t.phi;
                if (!t.param.empty()) tj["param"] = t.param;
                ts.push_back(tj);
            }
            ans.push_back({{"entry", {entry.first, entry.second}}, {"terms", ts}});
        }
        s["ansatz"] = ans;
        j["smoothness"] = s;
    }
    return j.dump(1);
}

}  // namespace cohom1
