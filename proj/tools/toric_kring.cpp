// Command-line front end: reads fan documents and class files, runs the
// certifier and the K-ring computations, and emits deterministic result
// documents.
//
// Exit codes: 0 success, 1 parse/usage error, 2 fan invalid,
// 3 not cellular / not complete, 4 class not a member.

#include <tkring/tkring.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace tkring;
using tkring::io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidFan = 2;
constexpr int kExitNotCellular = 3;
constexpr int kExitNotMember = 4;

struct Options {
    std::string fan_path;
    std::string class_path;
    std::string out_path;
    std::string v_text;
};

void emit(const Options& opt, const json& doc) {
    std::string text = io::render(doc);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw io::ParseError("cannot open output file: " + opt.out_path);
        out << text;
    }
}

Vec parse_v_text(const std::string& text) {
    Vec v;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            v.emplace_back(Int(item));
        } catch (const std::exception&) {
            throw io::ParseError("--v: expected comma-separated integers");
        }
    }
    if (v.empty()) throw io::ParseError("--v: expected comma-separated integers");
    return v;
}

struct LoadedInput {
    io::LoadedFan loaded;
    Fan fan;
    std::optional<Vec> v;
};

LoadedInput load_input(const Options& opt, bool need_v) {
    LoadedInput in{io::load_fan_file(opt.fan_path), {}, {}};
    for (const std::string& w : in.loaded.warnings)
        std::cerr << "warning: " << w << "\n";
    in.fan = io::fan_from_document(in.loaded.doc);
    if (!opt.v_text.empty())
        in.v = parse_v_text(opt.v_text);
    else
        in.v = in.loaded.doc.v;
    if (need_v) {
        if (!in.v) throw io::ParseError("no v given: pass --v or put \"v\" in the document");
        if (in.v->size() != in.fan.rank)
            throw io::ParseError("v length does not match the fan rank");
    }
    return in;
}

// Shared front half of the K-ring commands: valid + complete + cellular.
struct Prepared {
    Fan fan;
    CellularCertificate cert;
    GkmGraph graph;
};

int prepare(const Options& opt, Prepared& out, json& error_doc) {
    LoadedInput in = load_input(opt, true);
    std::vector<std::string> violations = validate(in.fan);
    if (!violations.empty()) {
        error_doc = io::result_document("validation", io::validation_payload(violations));
        return kExitInvalidFan;
    }
    CellularResult res = certify_cellular(in.fan, *in.v);
    if (std::holds_alternative<RejectionReport>(res)) {
        error_doc = io::result_document(
            "rejection", io::rejection_payload(std::get<RejectionReport>(res)));
        return kExitNotCellular;
    }
    if (!is_complete(in.fan)) {
        error_doc = io::result_document(
            "rejection",
            json{{"condition", "not complete"},
                 {"reason",
                  "fan is not complete; the K-ring computations require a "
                  "complete fan"}});
        return kExitNotCellular;
    }
    out.fan = std::move(in.fan);
    out.cert = std::get<CellularCertificate>(std::move(res));
    out.graph = build_gkm(out.fan, out.cert);
    return kExitOk;
}

int with_class_file(const Options& opt, const Prepared& p, KClass& out, json& error_doc) {
    io::ClassDocument doc = io::load_class_file(opt.class_path);
    if (doc.rank != p.fan.rank) throw io::ParseError("class file rank != fan rank");
    if (doc.components.size() != p.graph.m)
        throw io::ParseError("class file component count != number of maximal cones");
    MembershipCheck check = is_member(p.graph, doc.components);
    if (!check.member) {
        json edges = json::array();
        for (std::size_t k : check.violated_edges)
            edges.push_back(json{{"chi", io::vec_to_json(p.graph.edges[k].chi)},
                                 {"i", p.graph.edges[k].i + 1},
                                 {"j", p.graph.edges[k].j + 1}});
        error_doc = io::result_document(
            "rejection",
            json{{"reason", "class is not a member of the GKM ring"},
                 {"violated_edges", edges}});
        return kExitNotMember;
    }
    out = KClass{std::move(doc.components)};
    return kExitOk;
}

int cmd_validate(const Options& opt) {
    LoadedInput in = load_input(opt, false);
    std::vector<std::string> violations = validate(in.fan);
    emit(opt, io::result_document("validation", io::validation_payload(violations)));
    return violations.empty() ? kExitOk : kExitInvalidFan;
}

int cmd_complete(const Options& opt) {
    LoadedInput in = load_input(opt, false);
    std::vector<std::string> violations = validate(in.fan);
    if (!violations.empty()) {
        emit(opt, io::result_document("validation", io::validation_payload(violations)));
        return kExitInvalidFan;
    }
    bool complete = is_complete(in.fan);
    bool pure = is_pure(in.fan);
    bool connected = pure && stars_strongly_connected(in.fan);
    emit(opt, io::result_document("completeness",
                                  io::completeness_payload(complete, pure, connected)));
    return complete ? kExitOk : kExitNotCellular;
}

int cmd_cellular(const Options& opt) {
    LoadedInput in = load_input(opt, true);
    std::vector<std::string> violations = validate(in.fan);
    if (!violations.empty()) {
        emit(opt, io::result_document("validation", io::validation_payload(violations)));
        return kExitInvalidFan;
    }
    CellularResult res = certify_cellular(in.fan, *in.v);
    if (std::holds_alternative<CellularCertificate>(res)) {
        emit(opt, io::result_document(
                      "cellular-certificate",
                      io::certificate_payload(std::get<CellularCertificate>(res))));
        return kExitOk;
    }
    emit(opt, io::result_document("rejection",
                                  io::rejection_payload(std::get<RejectionReport>(res))));
    return kExitNotCellular;
}

int cmd_gkm(const Options& opt) {
    Prepared p;
    json err;
    if (int code = prepare(opt, p, err); code != kExitOk) {
        emit(opt, err);
        return code;
    }
    emit(opt, io::result_document("gkm-graph", io::gkm_payload(p.graph)));
    return kExitOk;
}

int cmd_basis(const Options& opt) {
    Prepared p;
    json err;
    if (int code = prepare(opt, p, err); code != kExitOk) {
        emit(opt, err);
        return code;
    }
    KBasis basis = construct_basis(p.graph, p.cert);
    emit(opt, io::result_document("basis", io::basis_payload(p.graph, basis)));
    return kExitOk;
}

int cmd_structconst(const Options& opt) {
    Prepared p;
    json err;
    if (int code = prepare(opt, p, err); code != kExitOk) {
        emit(opt, err);
        return code;
    }
    KBasis basis = construct_basis(p.graph, p.cert);
    StructureConstants sc = structure_constants(p.graph, p.cert, basis);
    emit(opt, io::result_document("structure-constants",
                                  io::structure_constants_payload(sc)));
    return kExitOk;
}

int cmd_plp(const Options& opt) {
    Prepared p;
    json err;
    if (int code = prepare(opt, p, err); code != kExitOk) {
        emit(opt, err);
        return code;
    }
    KClass a;
    if (int code = with_class_file(opt, p, a, err); code != kExitOk) {
        emit(opt, err);
        return code;
    }
    PlpContext ctx = make_plp_context(p.fan);
    PlpFunction image = from_kclass(p.graph, p.fan, ctx, a);
    emit(opt, io::result_document("plp", io::plp_payload(p.fan, ctx, image)));
    return kExitOk;
}

int cmd_coords(const Options& opt) {
    Prepared p;
    json err;
    if (int code = prepare(opt, p, err); code != kExitOk) {
        emit(opt, err);
        return code;
    }
    KClass a;
    if (int code = with_class_file(opt, p, a, err); code != kExitOk) {
        emit(opt, err);
        return code;
    }
    KBasis basis = construct_basis(p.graph, p.cert);
    std::vector<LaurentPoly> coords = coordinates(p.graph, p.cert, basis, a);
    emit(opt, io::result_document("coordinates",
                                  io::coordinates_payload(p.graph, coords)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "toric-kring: cellularity certificates and equivariant K-rings of "
        "rational polyhedral fans"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_v, bool with_class) {
        sub->add_option("--fan", opt.fan_path, "fan document (JSON)")->required();
        if (with_v)
            sub->add_option("--v", opt.v_text,
                            "lattice vector a,b,... (overrides the document)");
        if (with_class)
            sub->add_option("--class", opt.class_path, "class file (JSON)")->required();
        sub->add_option("--out", opt.out_path, "write the result document here");
    };

    add_common(app.add_subcommand("validate", "check the fan axioms"), false, false);
    add_common(app.add_subcommand("complete", "check completeness and star connectivity"),
               false, false);
    add_common(app.add_subcommand("cellular", "certify cellularity for v"), true, false);
    add_common(app.add_subcommand("gkm", "emit the GKM graph"), true, false);
    add_common(app.add_subcommand("plp", "piecewise image of a class"), true, true);
    add_common(app.add_subcommand("basis", "construct the triangular module basis"),
               true, false);
    add_common(app.add_subcommand("coords", "coordinates of a class in the basis"),
               true, true);
    add_common(app.add_subcommand("structconst", "multiplicative structure constants"),
               true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("validate")) return cmd_validate(opt);
        if (app.got_subcommand("complete")) return cmd_complete(opt);
        if (app.got_subcommand("cellular")) return cmd_cellular(opt);
        if (app.got_subcommand("gkm")) return cmd_gkm(opt);
        if (app.got_subcommand("plp")) return cmd_plp(opt);
        if (app.got_subcommand("basis")) return cmd_basis(opt);
        if (app.got_subcommand("coords")) return cmd_coords(opt);
        if (app.got_subcommand("structconst")) return cmd_structconst(opt);
    } catch (const tkring::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
