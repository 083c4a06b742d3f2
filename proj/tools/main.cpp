// Command-line frontend. Exit codes: 0 property holds or construction
// succeeded, 1 property fails, 2 input or usage error.
#include <bolalg/algebra.hpp>
#include <bolalg/cohomology.hpp>
#include <bolalg/deformation.hpp>
#include <bolalg/errors.hpp>
#include <bolalg/extension.hpp>
#include <bolalg/io.hpp>
#include <bolalg/representation.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace bolalg;
using io::Json;

namespace {

enum Exit { holds = 0, fails = 1, input_error = 2 };

struct Args {
    std::string algebra;
    std::string rep;
    bool adjoint = false;
    std::string rho;
    std::string cochain;
    std::string cochain2;
    std::string ext1;
    std::string ext2;
    std::string out;
    bool json = false;
    bool serial = false;
};

// What a command produced: exit code, text lines, JSON fields and an
// optional object for -o.
struct Outcome {
    int code = holds;
    std::ostringstream text;
    Json fields = Json::object();
    std::optional<Json> written;
};

Exec exec_of(const Args& a) { return a.serial ? Exec::serial : Exec::parallel; }

BolAlgebra load_bol(const std::string& path) {
    const Json j = io::read_file(path);
    try {
        return io::parse_bol(j);
    } catch (const InputError& e) {
        throw InputError(path, e.what());
    }
}

MaltsevAlgebra load_maltsev(const std::string& path) {
    const Json j = io::read_file(path);
    try {
        return io::parse_maltsev(j);
    } catch (const InputError& e) {
        throw InputError(path, e.what());
    }
}

Representation load_rep(const Args& a, const BolAlgebra& b) {
    if (a.adjoint == !a.rep.empty()) throw InputError("", "give exactly one of --rep <file> and --adjoint");
    if (a.adjoint) return adjoint_representation(b);
    const Json j = io::read_file(a.rep);
    try {
        return io::parse_representation(j, b);
    } catch (const InputError& e) {
        throw InputError(a.rep, e.what());
    } catch (const DimensionError& e) {
        throw InputError(a.rep, e.what());
    }
}

CochainPair load_cochain(const std::string& path, std::size_t n, std::size_t m) {
    const Json j = io::read_file(path);
    try {
        return io::parse_cochain(j, n, m);
    } catch (const InputError& e) {
        throw InputError(path, e.what());
    }
}

AbelianExtension load_extension(const std::string& path) {
    const Json j = io::read_file(path);
    try {
        return io::parse_extension(j);
    } catch (const InputError& e) {
        throw InputError(path, e.what());
    } catch (const DimensionError& e) {
        throw InputError(path, e.what());
    }
}

void put_report(Outcome& o, const char* key, const IdentityReport& r) {
    o.fields[key] = io::to_json(r);
    o.text << render_text(r);
}

void put_rejected(Outcome& o, const RejectedInput& e) {
    o.code = fails;
    o.fields["rejected"] = e.what();
    o.fields["report"] = io::to_json(e.report());
    o.text << "rejected: " << e.what() << "\n" << render_text(e.report());
}

std::string render_vec(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + render_scalar(v[i]);
    return s + "]";
}

std::string render_mat(const Mat& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += r ? "; " : "";
        for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + render_scalar(m(r, c));
    }
    return s + "]";
}

// Nonzero nu and omega entries, one per line.
std::string render_cochain(const CochainPair& c, const char* indent) {
    std::ostringstream os;
    const std::size_t n = c.base_dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto v = c.nu().basis(i, j);
            if (!is_zero(v)) os << indent << "nu(" << i << "," << j << ") = " << render_vec({v.begin(), v.end()}) << "\n";
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto v = c.omega().basis(i, j, k);
                if (!is_zero(v))
                    os << indent << "omega(" << i << "," << j << "," << k << ") = " << render_vec({v.begin(), v.end()})
                       << "\n";
            }
    if (c.is_zero()) os << indent << "0\n";
    return os.str();
}

void put_pseudo(Outcome& o, const char* key, const PseudoderivationData& p) {
    o.fields[key] = io::to_json(p);
    o.text << key << ": f = " << render_mat(p.f) << ", chi = " << render_vec(p.chi) << "\n";
}

// ---- commands --------------------------------------------------------------

Outcome cmd_verify(const Args& a) {
    Outcome o;
    const io::AnyAlgebra alg = io::parse_algebra(io::read_file(a.algebra));
    IdentityReport r;
    if (const auto* b = std::get_if<BolAlgebra>(&alg)) {
        o.fields["kind"] = "bol";
        r = verify_bol(*b, exec_of(a));
    } else {
        o.fields["kind"] = "maltsev";
        r = verify_maltsev(std::get<MaltsevAlgebra>(alg), exec_of(a));
    }
    put_report(o, "report", r);
    o.code = r.pass() ? holds : fails;
    return o;
}

Outcome cmd_maltsev_to_bol(const Args& a) {
    Outcome o;
    try {
        const BolAlgebra b = maltsev_to_bol(load_maltsev(a.algebra));
        o.fields["algebra"] = io::to_json(b);
        o.written = io::to_json(b);
        o.text << io::dump(io::to_json(b));
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_adjoint(const Args& a) {
    Outcome o;
    try {
        const Representation r = adjoint_representation(load_bol(a.algebra));
        o.fields["representation"] = io::to_json(r);
        o.written = io::to_json(r);
        o.text << io::dump(io::to_json(r));
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_induce_rep(const Args& a) {
    Outcome o;
    const MaltsevAlgebra m = load_maltsev(a.algebra);
    std::vector<Mat> rho;
    try {
        rho = io::parse_maltsev_representation(io::read_file(a.rho), m.dim());
    } catch (const InputError& e) {
        throw InputError(a.rho, e.what());
    }
    try {
        const Representation r = induce_from_maltsev(m, rho);
        o.fields["algebra"] = io::to_json(r.base());
        o.fields["representation"] = io::to_json(r);
        o.written = io::to_json(r);
        o.text << io::dump(io::to_json(r));
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_verify_rep(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    const IdentityReport base = verify_bol(b, exec_of(a));
    if (!base.pass()) {
        put_rejected(o, RejectedInput("the algebra fails the Bol axioms", base));
        return o;
    }
    try {
        const auto r = verify_representation(load_rep(a, b), exec_of(a));
        put_report(o, "report", r);
        o.code = r.pass() ? holds : fails;
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_delta_check(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    try {
        const auto r = check_delta_identity(load_rep(a, b), exec_of(a));
        put_report(o, "report", r);
        o.code = r.pass() ? holds : fails;
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_pseudoderivations(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    try {
        const auto basis = pseudoderivation_space(load_rep(a, b), exec_of(a));
        Json list = Json::array();
        o.text << "dim: " << basis.size() << "\n";
        for (std::size_t k = 0; k < basis.size(); ++k) {
            list.push_back(io::to_json(basis[k]));
            o.text << "[" << k << "] f = " << render_mat(basis[k].f) << ", chi = " << render_vec(basis[k].chi) << "\n";
        }
        o.fields["dim"] = basis.size();
        o.fields["basis"] = std::move(list);
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_cohomology(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    try {
        const CohomologyReport r = cohomology(load_rep(a, b), exec_of(a));
        o.fields["cohomology"] = io::to_json(r);
        o.text << "dim_C: " << r.dim_C << " (nu " << r.dim_C_nu << ", omega " << r.dim_C - r.dim_C_nu << ")\n"
               << "dim_Z: " << r.dim_Z << "\n"
               << "dim_B: " << r.dim_B << "\n"
               << "dim_H: " << r.dim_H << "\n"
               << "dim_pseudoderivations: " << r.dim_pseudoderivations << "\n";
        for (std::size_t k = 0; k < r.h_representatives.size(); ++k)
            o.text << "h[" << k << "]:\n" << render_cochain(r.h_representatives[k], "  ");
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_is_cocycle(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    try {
        const Representation r = load_rep(a, b);
        const auto rep = is_cocycle(r, load_cochain(a.cochain, b.dim(), r.module_dim()), exec_of(a));
        put_report(o, "report", rep);
        o.code = rep.pass() ? holds : fails;
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_is_coboundary(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    try {
        const Representation r = load_rep(a, b);
        const auto t = is_coboundary(r, load_cochain(a.cochain, b.dim(), r.module_dim()), exec_of(a));
        o.fields["holds"] = t.holds;
        o.text << "coboundary: " << (t.holds ? "yes" : "no") << "\n";
        if (t.witness)
            put_pseudo(o, "witness", *t.witness);
        else
            o.fields["witness"] = nullptr;
        o.code = t.holds ? holds : fails;
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_deform_check(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    const DeformationDatum d(b, load_cochain(a.cochain, b.dim(), b.dim()));
    try {
        const InfinitesimalReport r = generates_infinitesimal_deformation(d, exec_of(a));
        o.fields["infinitesimal"] = io::to_json(r);
        o.text << "generates: " << (r.generates() ? "yes" : "no") << "\n"
               << "predicate: " << (r.predicate ? "yes" : "no") << "\n"
               << "sampling: " << (r.sampling ? "yes" : "no") << "\n"
               << "routes agree: " << (r.routes_agree ? "yes" : "no") << "\n"
               << "deformation type:\n"
               << render_text(r.deformation_type) << "cocycle:\n"
               << render_text(r.cocycle) << "cubic term:\n"
               << render_text(IdentityReport{{r.cubic_term}});
        for (const auto& [t, rep] : r.samples) {
            o.text << "t = " << render_scalar(t) << ": " << (rep.pass() ? "pass" : "FAIL");
            if (const auto* f = rep.first_failure()) o.text << " (" << f->id << ")";
            o.text << "\n";
        }
        o.code = r.generates() ? holds : fails;
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_deform_formal(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    const auto r = check_first_order_formal(DeformationDatum(b, load_cochain(a.cochain, b.dim(), b.dim())), exec_of(a));
    put_report(o, "report", r);
    o.code = r.pass() ? holds : fails;
    return o;
}

Outcome cmd_deform_equiv(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    const std::size_t n = b.dim();
    const DeformationDatum d1(b, load_cochain(a.cochain, n, n));
    const DeformationDatum d2(b, load_cochain(a.cochain2, n, n));
    const auto r = first_order_equivalent(b, d1, d2, exec_of(a));
    o.fields["equivalence"] = io::to_json(r);
    o.text << "equivalent: " << (r.equivalent() ? "yes" : "no") << "\n"
           << "direct: " << (r.direct ? "yes" : "no") << "\n"
           << "companion: " << (r.companion ? "yes" : "no") << "\n"
           << "routes agree: " << (r.routes_agree ? "yes" : "no") << "\n";
    if (r.phi) o.text << "phi: " << render_mat(*r.phi) << "\n";
    o.code = r.equivalent() ? holds : fails;
    return o;
}

Outcome cmd_extend_build(const Args& a) {
    Outcome o;
    const BolAlgebra b = load_bol(a.algebra);
    try {
        const Representation r = load_rep(a, b);
        const AbelianExtension e = twisted_product(r, load_cochain(a.cochain, b.dim(), r.module_dim()));
        o.fields["extension"] = io::to_json(e);
        o.written = io::to_json(e);
        o.text << io::dump(io::to_json(e));
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

Outcome cmd_extend_analyze(const Args& a) {
    Outcome o;
    const AbelianExtension e = load_extension(a.ext1);
    const IdentityReport v = validate_extension(e, exec_of(a));
    put_report(o, "report", v);
    if (!v.pass()) {
        o.code = fails;
        return o;
    }
    const InducedData data = induced_data(e, exec_of(a));
    const Representation& r = data.rep;
    const CochainPair& c = data.cocycle;
    o.fields["representation"] = io::to_json(r);
    o.fields["cocycle"] = io::to_json(c);
    o.written = io::to_json(r);
    o.text << "induced representation:\n" << io::dump(io::to_json(r)) << "induced cocycle:\n" << render_cochain(c, "  ");
    return o;
}

Outcome cmd_extend_equiv(const Args& a) {
    Outcome o;
    try {
        const auto r = extensions_equivalent(load_extension(a.ext1), load_extension(a.ext2), exec_of(a));
        o.fields["equivalence"] = io::to_json(r);
        o.text << "status: " << to_string(r.status) << "\n";
        if (r.coboundary_witness)
            o.text << "coboundary_witness: f = " << render_mat(r.coboundary_witness->f)
                   << ", chi = " << render_vec(r.coboundary_witness->chi) << "\n";
        if (r.f_tilde) o.text << "f_tilde: " << render_mat(*r.f_tilde) << "\n";
        if (r.phi) o.text << "phi: " << render_mat(*r.phi) << "\n";
        o.text << render_text(r.checks);
        o.code = r.equivalent() ? holds : fails;
    } catch (const RejectedInput& e) {
        put_rejected(o, e);
    }
    return o;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError(path, "cannot write file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite-dimensional Bol algebras"};
    app.require_subcommand(1);
    Args args;

    struct Command {
        const char* name;
        const char* help;
        std::function<Outcome(const Args&)> run;
        std::vector<std::string> positionals; // field names, in order
        bool rep = false;
        bool rho = false;
    };
    const std::vector<Command> commands{
        {"verify", "check the Bol or Maltsev axioms", cmd_verify, {"algebra"}},
        {"maltsev-to-bol", "associated Bol algebra of a Maltsev algebra", cmd_maltsev_to_bol, {"algebra"}},
        {"adjoint", "adjoint representation", cmd_adjoint, {"algebra"}},
        {"induce-rep", "representation induced from a Maltsev module", cmd_induce_rep, {"algebra"}, false, true},
        {"verify-rep", "check R1-R33", cmd_verify_rep, {"algebra"}, true},
        {"delta-check", "identity for Delta = D - rho(uv)", cmd_delta_check, {"algebra"}, true},
        {"pseudoderivations", "basis of pseudoderivations with companion", cmd_pseudoderivations, {"algebra"}, true},
        {"cohomology", "dimensions and bases of Z, B and H", cmd_cohomology, {"algebra"}, true},
        {"is-cocycle", "check CC1-CC3", cmd_is_cocycle, {"algebra", "cochain"}, true},
        {"is-coboundary", "solve for (f, chi)", cmd_is_coboundary, {"algebra", "cochain"}, true},
        {"deform-check", "infinitesimal deformation test", cmd_deform_check, {"algebra", "cochain"}},
        {"deform-formal", "order-1 formal deformation equations", cmd_deform_formal, {"algebra", "cochain"}},
        {"deform-equiv", "first-order equivalence of two deformations", cmd_deform_equiv,
         {"algebra", "cochain", "cochain2"}},
        {"extend-build", "twisted product extension", cmd_extend_build, {"algebra", "cochain"}, true},
        {"extend-analyze", "validate an extension and read off (R, c)", cmd_extend_analyze, {"extension"}},
        {"extend-equiv", "equivalence of two extensions", cmd_extend_equiv, {"extension", "extension2"}},
    };

    const std::map<std::string, std::string*> slots{
        {"algebra", &args.algebra}, {"cochain", &args.cochain},  {"cochain2", &args.cochain2},
        {"extension", &args.ext1},  {"extension2", &args.ext2},
    };

    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        for (const auto& p : c.positionals) sub->add_option(p, *slots.at(p), p + " file")->required();
        if (c.rep) {
            auto* r = sub->add_option("--rep", args.rep, "representation file");
            auto* adj = sub->add_flag("--adjoint", args.adjoint, "use the adjoint representation");
            r->excludes(adj);
        }
        if (c.rho) sub->add_option("--rho", args.rho, "Maltsev module file")->required();
        sub->add_flag("--json", args.json, "machine-readable report");
        sub->add_flag("--serial", args.serial, "use the serial kernels");
        if (c.name == std::string("maltsev-to-bol") || c.name == std::string("adjoint") ||
            c.name == std::string("induce-rep") || c.name == std::string("extend-build") ||
            c.name == std::string("extend-analyze"))
            sub->add_option("-o,--output", args.out, "write the constructed object here");
        subs.emplace_back(sub, &c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return holds;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return input_error;
    }

    const Command* chosen = nullptr;
    for (const auto& [sub, c] : subs)
        if (sub->parsed()) chosen = c;

    try {
        Outcome o = chosen->run(args);
        if (o.written && !args.out.empty()) write_file(args.out, io::dump(*o.written));
        if (args.json) {
            Json j{{"command", chosen->name}, {"exit_code", o.code}};
            for (auto& [k, v] : o.fields.items()) j[k] = v;
            std::cout << io::dump(j);
        } else {
            std::cout << o.text.str();
        }
        return o.code;
    } catch (const RejectedInput& e) {
        Outcome o;
        put_rejected(o, e);
        if (args.json) {
            Json j{{"command", chosen->name}, {"exit_code", o.code}};
            for (auto& [k, v] : o.fields.items()) j[k] = v;
            std::cout << io::dump(j);
        } else {
            std::cout << o.text.str();
        }
        return o.code;
    } catch (const InputError& e) {
        if (args.json)
            std::cout << io::dump(Json{{"command", chosen->name}, {"exit_code", input_error}, {"error", e.what()}});
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const DimensionError& e) {
        if (args.json)
            std::cout << io::dump(Json{{"command", chosen->name}, {"exit_code", input_error}, {"error", e.what()}});
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    }
}
