#pragma once

// Document formats: fan documents and class files in, result documents out.
// All serialization is deterministic: object keys are sorted, term lists are
// lexicographically ordered, and indices are 1-based on the wire to match the
// usual labelling of examples.

#include <tkring/basis.hpp>
#include <tkring/plp.hpp>

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace tkring::io {

using nlohmann::json;

inline constexpr const char* tool_version = "0.1.0";

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long long to_wire(const Int& x) {
    if (x > std::numeric_limits<long long>::max() ||
        x < std::numeric_limits<long long>::min())
        throw std::runtime_error("integer too large for serialization");
    return x.convert_to<long long>();
}

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_wire(x));
    return a;
}

inline Vec vec_from_json(const json& a, const std::string& where) {
    if (!a.is_array()) throw ParseError(where + ": expected an array of integers");
    Vec v;
    for (const json& x : a) {
        if (!x.is_number_integer()) throw ParseError(where + ": expected an integer");
        v.emplace_back(x.get<long long>());
    }
    return v;
}

inline json poly_to_json(const LaurentPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms)
        a.push_back(json{{"c", to_wire(c)}, {"e", vec_to_json(e)}});
    return a;
}

inline LaurentPoly poly_from_json(std::size_t rank, const json& a, const std::string& where) {
    if (!a.is_array()) throw ParseError(where + ": expected an array of terms");
    LaurentPoly p{rank, {}};
    for (const json& t : a) {
        if (!t.is_object() || !t.contains("c") || !t.contains("e"))
            throw ParseError(where + ": term must be an object with 'c' and 'e'");
        if (!t["c"].is_number_integer())
            throw ParseError(where + ": coefficient must be an integer");
        Vec e = vec_from_json(t["e"], where + ".e");
        if (e.size() != rank) throw ParseError(where + ": exponent length != rank");
        add_term(p, e, Int(t["c"].get<long long>()));
    }
    return p;
}

inline json cone_to_json(const Cone& c) {
    json rays = json::array();
    for (const Vec& r : c.rays) rays.push_back(vec_to_json(r));
    return json{{"dim", c.dim}, {"rays", rays}};
}

// ---------------------------------------------------------------------------
// Fan documents.
// ---------------------------------------------------------------------------

struct FanDocument {
    std::size_t rank = 0;
    std::vector<Vec> rays;
    std::vector<std::vector<std::size_t>> max_cones;  // 0-based ray indices
    std::optional<Vec> v;
};

struct LoadedFan {
    FanDocument doc;
    std::vector<std::string> warnings;
};

inline LoadedFan fan_document_from_json(const json& j) {
    LoadedFan out;
    if (!j.is_object()) throw ParseError("fan document: expected an object");
    if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<long long>() < 1)
        throw ParseError("fan document: 'rank' must be a positive integer");
    out.doc.rank = j["rank"].get<std::size_t>();
    if (!j.contains("rays") || !j["rays"].is_array())
        throw ParseError("fan document: 'rays' must be an array");
    std::size_t ri = 0;
    for (const json& r : j["rays"]) {
        Vec v = vec_from_json(r, "rays[" + std::to_string(ri) + "]");
        if (v.size() != out.doc.rank)
            throw ParseError("rays[" + std::to_string(ri) + "]: length != rank");
        if (is_zero(v)) throw ParseError("rays[" + std::to_string(ri) + "]: zero ray");
        Vec p = primitive(v);
        if (p != v)
            out.warnings.push_back("ray " + std::to_string(ri) +
                                   " was not primitive; normalized");
        out.doc.rays.push_back(std::move(p));
        ++ri;
    }
    if (!j.contains("max_cones") || !j["max_cones"].is_array())
        throw ParseError("fan document: 'max_cones' must be an array");
    std::size_t ci = 0;
    for (const json& c : j["max_cones"]) {
        if (!c.is_array())
            throw ParseError("max_cones[" + std::to_string(ci) + "]: expected an array");
        std::vector<std::size_t> idx;
        for (const json& x : c) {
            if (!x.is_number_integer() || x.get<long long>() < 0 ||
                x.get<std::size_t>() >= out.doc.rays.size())
                throw ParseError("max_cones[" + std::to_string(ci) +
                                 "]: ray index out of range");
            idx.push_back(x.get<std::size_t>());
        }
        out.doc.max_cones.push_back(std::move(idx));
        ++ci;
    }
    if (j.contains("v")) out.doc.v = vec_from_json(j["v"], "v");
    return out;
}

inline json fan_document_to_json(const FanDocument& doc) {
    json rays = json::array();
    for (const Vec& r : doc.rays) rays.push_back(vec_to_json(r));
    json cones = json::array();
    for (const auto& c : doc.max_cones) cones.push_back(c);
    json j{{"rank", doc.rank}, {"rays", rays}, {"max_cones", cones}};
    if (doc.v) j["v"] = vec_to_json(*doc.v);
    return j;
}

inline LoadedFan load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fan document: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("fan document " + path + ": " + e.what());
    }
    return fan_document_from_json(j);
}

inline Fan fan_from_document(const FanDocument& doc) {
    return make_fan(doc.rank, doc.rays, doc.max_cones);
}

// ---------------------------------------------------------------------------
// Class files: fixed-point restriction tuples.
// ---------------------------------------------------------------------------

struct ClassDocument {
    std::size_t rank = 0;
    std::vector<LaurentPoly> components;
};

inline ClassDocument class_document_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("class file: expected an object");
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw ParseError("class file: 'rank' must be an integer");
    ClassDocument doc;
    doc.rank = j["rank"].get<std::size_t>();
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("class file: 'components' must be an array");
    std::size_t i = 0;
    for (const json& c : j["components"]) {
        doc.components.push_back(
            poly_from_json(doc.rank, c, "components[" + std::to_string(i) + "]"));
        ++i;
    }
    return doc;
}

inline json class_document_to_json(const ClassDocument& doc) {
    json comps = json::array();
    for (const LaurentPoly& p : doc.components) comps.push_back(poly_to_json(p));
    return json{{"components", comps}, {"rank", doc.rank}};
}

inline ClassDocument load_class_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open class file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("class file " + path + ": " + e.what());
    }
    return class_document_from_json(j);
}

// ---------------------------------------------------------------------------
// Result documents.
// ---------------------------------------------------------------------------

inline json result_document(const std::string& kind, json payload) {
    return json{{"kind", kind}, {"payload", std::move(payload)},
                {"tool_version", tool_version}};
}

inline json validation_payload(const std::vector<std::string>& violations) {
    return json{{"valid", violations.empty()}, {"violations", violations}};
}

inline json completeness_payload(bool complete, bool pure, bool connected) {
    return json{{"complete", complete},
                {"pure", pure},
                {"stars_strongly_connected", connected}};
}

inline json certificate_payload(const CellularCertificate& cert) {
    json order = json::array();
    for (std::size_t i : cert.order) order.push_back(i + 1);
    json tau = json::array(), dims = json::array(), chars = json::array();
    for (std::size_t i = 0; i < cert.tau.size(); ++i) {
        tau.push_back(cone_to_json(cert.tau[i]));
        dims.push_back(cert.cell_dims[i]);
        json us = json::array();
        for (const Vec& u : cert.cell_characters[i]) us.push_back(vec_to_json(u));
        chars.push_back(us);
    }
    return json{{"cell_characters", chars},
                {"cell_dims", dims},
                {"order", order},
                {"tau", tau},
                {"v", vec_to_json(cert.v)}};
}

inline json rejection_payload(const RejectionReport& rej) {
    json j{{"reason", rej.reason}};
    switch (rej.kind) {
        case RejectionKind::invalid_fan: j["condition"] = "fan invalid"; break;
        case RejectionKind::not_pure: j["condition"] = "not pure"; break;
        case RejectionKind::not_generic: j["condition"] = "v not generic"; break;
        case RejectionKind::ordering_cycle: j["condition"] = "ordering cycle"; break;
        case RejectionKind::non_smooth_quotient:
            j["condition"] = "non-smooth quotient cone";
            break;
    }
    if (!rej.fan_violations.empty()) j["violations"] = rej.fan_violations;
    if (rej.cone_index) j["cone_index"] = *rej.cone_index + 1;
    if (rej.tau) j["tau"] = cone_to_json(*rej.tau);
    if (!rej.cycle.empty()) {
        json cyc = json::array();
        for (std::size_t i : rej.cycle) cyc.push_back(i + 1);
        j["cycle"] = cyc;
    }
    return j;
}

inline json gkm_payload(const GkmGraph& g) {
    json edges = json::array();
    for (const GkmEdge& e : g.edges)
        edges.push_back(
            json{{"chi", vec_to_json(e.chi)}, {"i", e.i + 1}, {"j", e.j + 1}});
    json order = json::array();
    for (std::size_t i : g.order) order.push_back(i + 1);
    return json{{"edges", edges}, {"m", g.m}, {"order", order}};
}

inline json kclass_payload(const KClass& a) {
    json comps = json::array();
    for (const LaurentPoly& p : a.components) comps.push_back(poly_to_json(p));
    return json{{"components", comps}};
}

inline json plp_payload(const Fan& f, const PlpContext& ctx, const PlpFunction& p) {
    json cones = json::array();
    for (std::size_t idx = 0; idx < f.all_cones.size(); ++idx) {
        const Cone& c = f.all_cones[idx];
        json perp = json::array();
        for (const Vec& u : c.span_perp) perp.push_back(vec_to_json(u));
        json proj = json::array();
        const Mat& pr = ctx.cone_quotients[idx].projection;
        for (std::size_t r = 0; r < pr.rows; ++r) proj.push_back(vec_to_json(pr.row(r)));
        json terms = json::array();
        for (const auto& [e, coef] : p.components[idx].terms)
            terms.push_back(json{{"c", to_wire(coef)}, {"e", vec_to_json(e)}});
        cones.push_back(json{{"cone", idx + 1},
                             {"dim", c.dim},
                             {"perp_basis", perp},
                             {"projection", proj},
                             {"rays", cone_to_json(c)["rays"]},
                             {"terms", terms}});
    }
    return json{{"cones", cones}};
}

inline json basis_payload(const GkmGraph& g, const KBasis& basis) {
    json classes = json::array(), diags = json::array();
    for (std::size_t p = 0; p < basis.classes.size(); ++p) {
        classes.push_back(kclass_payload(basis.classes[p])["components"]);
        diags.push_back(poly_to_json(basis.euler_diagonals[p]));
    }
    json order = json::array();
    for (std::size_t i : g.order) order.push_back(i + 1);
    return json{{"classes", classes}, {"diagonals", diags}, {"m", g.m}, {"order", order}};
}

inline json coordinates_payload(const GkmGraph& g, const std::vector<LaurentPoly>& coords) {
    json cs = json::array();
    for (const LaurentPoly& c : coords) cs.push_back(poly_to_json(c));
    json order = json::array();
    for (std::size_t i : g.order) order.push_back(i + 1);
    return json{{"coordinates", cs}, {"order", order}};
}

inline json structure_constants_payload(const StructureConstants& sc) {
    json entries = json::array();
    for (const auto& [key, a] : sc.entries) {
        const auto& [i, j, p] = key;
        entries.push_back(
            json{{"a", poly_to_json(a)}, {"i", i + 1}, {"j", j + 1}, {"p", p + 1}});
    }
    return json{{"entries", entries}, {"m", sc.m}};
}

inline std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tkring::io
