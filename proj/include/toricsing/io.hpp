#pragma once

// JSON round-trips for the data the CLI consumes and produces, a plain text
// format for point configurations, and DOT export for the two graph shapes
// worth looking at (fibers and the flip graph of the fan).

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "binomial.hpp"
#include "catalog.hpp"
#include "dynkin.hpp"
#include "fan.hpp"
#include "ints.hpp"
#include "monomial.hpp"

namespace toricsing {

using Json = nlohmann::json;

// Values that fit a double-exact integer stay plain numbers; anything bigger
// becomes a decimal string so nothing is rounded on the way through JSON.
inline Json int_to_json(const Int& v) {
    static const Int cap = Int(1) << 53;
    if (v >= -cap && v <= cap) return static_cast<int64_t>(v);
    return v.str();
}

inline Int int_from_json(const Json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

inline Json monomial_to_json(const Monomial& m) { return Json(m.exponents()); }

inline Monomial monomial_from_json(const Json& j) {
    return Monomial(j.get<std::vector<int32_t>>());
}

inline Json binomial_to_json(const Binomial& b) {
    return Json{{"lead", monomial_to_json(b.lead())},
                {"trail", monomial_to_json(b.trail())},
                {"marked", b.is_marked()}};
}

inline Binomial binomial_from_json(const Json& j) {
    Monomial lead = monomial_from_json(j.at("lead"));
    Monomial trail = monomial_from_json(j.at("trail"));
    if (j.value("marked", true)) return Binomial::marked(std::move(lead), std::move(trail));
    return Binomial::unmarked(std::move(lead), std::move(trail));
}

inline Json config_to_json(const Configuration& c) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(p);
    return Json{{"name", c.name}, {"ambient", c.ambient}, {"vars", c.vars}, {"points", pts}};
}

inline Configuration config_from_json(const Json& j) {
    Configuration c;
    c.name = j.value("name", "");
    c.ambient = j.at("ambient").get<int>();
    c.vars = j.at("vars").get<std::vector<std::string>>();
    for (const auto& p : j.at("points")) c.points.push_back(p.get<std::vector<int64_t>>());
    if (c.vars.size() != c.points.size())
        throw std::invalid_argument("configuration has " + std::to_string(c.points.size()) +
                                    " points but " + std::to_string(c.vars.size()) + " names");
    for (const auto& p : c.points)
        if (static_cast<int>(p.size()) != c.ambient)
            throw std::invalid_argument("point width does not match the ambient dimension");
    return c;
}

inline Json basis_to_json(const MarkedBasis& mb) {
    Json elems = Json::array();
    for (const auto& g : mb.elems) elems.push_back(binomial_to_json(g));
    return Json{{"vars", mb.vars}, {"reduced", mb.reduced}, {"elems", elems}};
}

inline MarkedBasis basis_from_json(const Json& j) {
    MarkedBasis mb;
    mb.vars = j.at("vars").get<std::vector<std::string>>();
    mb.reduced = j.value("reduced", false);
    for (const auto& e : j.at("elems")) mb.elems.push_back(binomial_from_json(e));
    for (const auto& g : mb.elems)
        if (g.nvars() != mb.nvars()) throw std::invalid_argument("basis element width mismatch");
    return mb;
}

inline Json fiber_graph_to_json(const FiberGraph& g) {
    Json verts = Json::array();
    for (const auto& v : g.verts) verts.push_back(monomial_to_json(v));
    return Json{{"degree", g.degree}, {"verts", verts}, {"comp", g.comp}};
}

inline FiberGraph fiber_graph_from_json(const Json& j) {
    FiberGraph g;
    g.degree = j.at("degree").get<std::vector<int64_t>>();
    for (const auto& v : j.at("verts")) g.verts.push_back(monomial_from_json(v));
    g.comp = j.at("comp").get<std::vector<int>>();
    if (g.comp.size() != g.verts.size())
        throw std::invalid_argument("fiber graph component labels do not match vertices");
    for (int c : g.comp) g.ncomp = std::max(g.ncomp, c + 1);
    g.components.assign(g.ncomp, {});
    for (size_t i = 0; i < g.comp.size(); ++i)
        g.components[g.comp[i]].push_back(static_cast<int>(i));
    return g;
}

inline Json betti_to_json(const BettiReport& r) {
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back(Json{{"graph", fiber_graph_to_json(d.graph)},
                               {"choices", int_to_json(d.choices)},
                               {"indispensable", d.indispensable}});
    Json ind = Json::array();
    for (const auto& b : r.indispensables) ind.push_back(binomial_to_json(b));
    return Json{{"degrees", degrees},
                {"minimal_generators", r.minimal_generators},
                {"generating_sets", int_to_json(r.generating_sets)},
                {"indispensables", ind}};
}

inline BettiReport betti_from_json(const Json& j) {
    BettiReport r;
    for (const auto& d : j.at("degrees")) {
        BettiDegree bd;
        bd.graph = fiber_graph_from_json(d.at("graph"));
        bd.choices = int_from_json(d.at("choices"));
        bd.indispensable = d.at("indispensable").get<bool>();
        r.degrees.push_back(std::move(bd));
    }
    r.minimal_generators = j.at("minimal_generators").get<int>();
    r.generating_sets = int_from_json(j.at("generating_sets"));
    for (const auto& b : j.at("indispensables")) r.indispensables.push_back(binomial_from_json(b));
    return r;
}

inline Json verification_to_json(const VerificationReport& r) {
    Json fixes = Json::array();
    for (const auto& f : r.fixes)
        fixes.push_back(Json{{"row", f.row},
                             {"printed", binomial_to_json(f.printed)},
                             {"corrected", binomial_to_json(f.corrected)}});
    Json j{{"family", r.family},
           {"nvars", r.nvars},
           {"expected_size", r.expected_size},
           {"table_size", r.table_size},
           {"size_ok", r.size_ok},
           {"inhomogeneous_rows", r.inhomogeneous_rows},
           {"fixes", fixes},
           {"fixes_match", r.fixes_match},
           {"marking_coherent", r.marking_coherent},
           {"groebner", r.groebner},
           {"squarefree", r.squarefree},
           {"generates", r.generates},
           {"ok", r.ok()}};
    j["marking_matches_order"] =
        r.marking_matches_order ? Json(*r.marking_matches_order) : Json(nullptr);
    return j;
}

inline VerificationReport verification_from_json(const Json& j) {
    VerificationReport r;
    r.family = j.at("family").get<std::string>();
    r.nvars = j.at("nvars").get<int>();
    r.expected_size = j.at("expected_size").get<long long>();
    r.table_size = j.at("table_size").get<int>();
    r.size_ok = j.at("size_ok").get<bool>();
    r.inhomogeneous_rows = j.at("inhomogeneous_rows").get<std::vector<int>>();
    for (const auto& f : j.at("fixes"))
        r.fixes.push_back({f.at("row").get<int>(), binomial_from_json(f.at("printed")),
                           binomial_from_json(f.at("corrected"))});
    r.fixes_match = j.at("fixes_match").get<bool>();
    r.marking_coherent = j.at("marking_coherent").get<bool>();
    if (!j.at("marking_matches_order").is_null())
        r.marking_matches_order = j.at("marking_matches_order").get<bool>();
    r.groebner = j.at("groebner").get<bool>();
    r.squarefree = j.at("squarefree").get<bool>();
    r.generates = j.at("generates").get<bool>();
    return r;
}

inline Json fan_to_json(const FanResult& f) {
    Json cones = Json::array();
    for (const auto& c : f.cones) {
        Json initials = Json::array();
        for (const auto& m : c.initials) initials.push_back(monomial_to_json(m));
        cones.push_back(Json{{"gb", basis_to_json(c.gb)},
                             {"initials", initials},
                             {"neighbors", c.neighbors}});
    }
    return Json{{"complete", f.complete}, {"cones", cones}};
}

inline FanResult fan_from_json(const Json& j) {
    FanResult f;
    f.complete = j.at("complete").get<bool>();
    for (const auto& c : j.at("cones")) {
        FanCone cone;
        cone.gb = basis_from_json(c.at("gb"));
        for (const auto& m : c.at("initials")) cone.initials.push_back(monomial_from_json(m));
        cone.neighbors = c.at("neighbors").get<std::vector<int>>();
        f.cones.push_back(std::move(cone));
    }
    return f;
}

// Text form of a configuration: one point per line, whitespace separated
// coordinates, '#' comments. "# name:" and "# vars:" headers survive a
// round-trip; variables default to x1..xN when no header names them.
inline std::string config_to_text(const Configuration& c) {
    std::ostringstream os;
    if (!c.name.empty()) os << "# name: " << c.name << "\n";
    os << "# vars:";
    for (const auto& v : c.vars) os << ' ' << v;
    os << "\n";
    for (const auto& p : c.points) {
        for (size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
        os << "\n";
    }
    return os.str();
}

inline Configuration config_from_text(const std::string& text) {
    Configuration c;
    std::vector<std::string> vars;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (!ls || tok.empty()) continue;
        if (tok[0] == '#') {
            std::string key;
            ls >> key;
            if (key == "name:") {
                std::string rest;
                std::getline(ls, rest);
                size_t at = rest.find_first_not_of(' ');
                c.name = at == std::string::npos ? "" : rest.substr(at);
            } else if (key == "vars:") {
                std::string v;
                while (ls >> v) vars.push_back(v);
            }
            continue;
        }
        std::vector<int64_t> p;
        std::istringstream ps(line);
        int64_t x;
        while (ps >> x) p.push_back(x);
        if (!ps.eof()) throw std::invalid_argument("bad coordinate line: " + line);
        if (c.points.empty())
            c.ambient = static_cast<int>(p.size());
        else if (static_cast<int>(p.size()) != c.ambient)
            throw std::invalid_argument("point width changed mid file");
        c.points.push_back(std::move(p));
    }
    if (c.points.empty()) throw std::invalid_argument("configuration file has no points");
    c.vars = vars.empty() ? default_var_names(c.size()) : std::move(vars);
    if (c.vars.size() != c.points.size())
        throw std::invalid_argument("vars header names " + std::to_string(c.vars.size()) +
                                    " variables for " + std::to_string(c.points.size()) +
                                    " points");
    return c;
}

// Fiber vertices grouped into one cluster per connected component.
inline std::string fiber_graph_dot(const FiberGraph& g, const std::vector<std::string>& vars) {
    std::ostringstream os;
    os << "graph fiber {\n  node [shape=box];\n";
    for (int c = 0; c < g.ncomp; ++c) {
        os << "  subgraph cluster_" << c << " {\n    label=\"component " << c << "\";\n";
        for (int v : g.components[c])
            os << "    v" << v << " [label=\"" << g.verts[v].str(vars) << "\"];\n";
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

// Flip graph of the fan: one node per cone, one edge per shared facet.
inline std::string fan_dot(const FanResult& f) {
    std::ostringstream os;
    os << "graph fan {\n";
    for (size_t i = 0; i < f.cones.size(); ++i)
        os << "  c" << i << " [label=\"cone " << i << " (" << f.cones[i].initials.size()
           << " gens)\"];\n";
    for (size_t i = 0; i < f.cones.size(); ++i)
        for (int nb : f.cones[i].neighbors)
            if (nb >= 0 && static_cast<size_t>(nb) > i) os << "  c" << i << " -- c" << nb << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace toricsing
