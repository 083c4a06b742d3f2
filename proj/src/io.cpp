#include <bolalg/errors.hpp>
#include <bolalg/io.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace bolalg::io {
namespace {

std::string at_key(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string at_index(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

const Json& require(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw InputError(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(at_key(where, key), "missing field");
    return *it;
}

std::size_t get_index(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned()) throw InputError(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Scalar get_scalar(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where, "rationals must be written as strings");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(where, e.what());
    }
}

void expect_kind(const Json& j, const std::string& kind) {
    const Json& k = require(j, "kind", "");
    if (!k.is_string() || k.get<std::string>() != kind)
        throw InputError("kind", "expected \"" + kind + "\", got " + k.dump());
}

const Json& require_array(const Json& j, const std::string& key, const std::string& where) {
    const Json& a = require(j, key, where);
    if (!a.is_array()) throw InputError(at_key(where, key), "expected an array");
    return a;
}

std::size_t require_dim(const Json& j, const std::string& key) { return get_index(require(j, key, ""), key); }

// {"3": "1/2", ...} -> dense vector of length dim.
Vec parse_value_map(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_object()) throw InputError(where, "expected an object mapping basis index to rational");
    Vec v(dim);
    for (const auto& [key, val] : j.items()) {
        std::size_t idx = 0;
        const auto bad = key.empty() || key.find_first_not_of("0123456789") != std::string::npos;
        if (!bad) idx = std::stoul(key);
        if (bad || idx >= dim) throw InputError(at_key(where, key), "basis index out of range");
        v[idx] = get_scalar(val, at_key(where, key));
    }
    return v;
}

Json value_map(std::span<const Scalar> v) {
    Json out = Json::object();
    for (std::size_t a = 0; a < v.size(); ++a)
        if (!is_zero(v[a])) out[std::to_string(a)] = render_scalar(v[a]);
    return out;
}

std::vector<std::size_t> parse_args(const Json& entry, std::size_t arity, const std::string& where) {
    const Json& args = require(entry, "args", where);
    if (!args.is_array() || args.size() != arity)
        throw InputError(at_key(where, "args"), "expected " + std::to_string(arity) + " indices");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < arity; ++k) out.push_back(get_index(args[k], at_index(at_key(where, "args"), k)));
    return out;
}

std::vector<BinaryEntry> parse_binary(const Json& j, std::size_t n, std::size_t out_dim, const char* key) {
    std::vector<BinaryEntry> out;
    if (!j.contains(key)) return out;
    const Json& list = require_array(j, key, "");
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = at_index(key, k);
        const auto args = parse_args(list[k], 2, where);
        (void)n;
        out.push_back({args[0], args[1], parse_value_map(require(list[k], "value", where), out_dim, at_key(where, "value"))});
    }
    return out;
}

std::vector<TernaryEntry> parse_ternary(const Json& j, std::size_t out_dim, const char* key) {
    std::vector<TernaryEntry> out;
    if (!j.contains(key)) return out;
    const Json& list = require_array(j, key, "");
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = at_index(key, k);
        const auto args = parse_args(list[k], 3, where);
        out.push_back({args[0], args[1], args[2],
                       parse_value_map(require(list[k], "value", where), out_dim, at_key(where, "value"))});
    }
    return out;
}

std::vector<std::string> parse_names(const Json& j, std::size_t n) {
    std::vector<std::string> names;
    if (!j.contains("basis_names")) return names;
    const Json& list = require_array(j, "basis_names", "");
    if (list.size() != n) throw InputError("basis_names", "expected one name per basis element");
    for (std::size_t k = 0; k < list.size(); ++k) {
        if (!list[k].is_string()) throw InputError(at_index("basis_names", k), "expected a string");
        names.push_back(list[k].get<std::string>());
    }
    return names;
}

Json binary_entries(const Bilinear& t, const char* what) {
    const std::size_t n = t.in_dim();
    Json list = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = t.basis(i, j);
            for (std::size_t a = 0; a < v.size(); ++a)
                if (v[a] != -t.at(j, i, a)) throw DimensionError(std::string(what) + " is not antisymmetric");
            if (j <= i || is_zero(v)) continue;
            list.push_back(Json{{"args", {i, j}}, {"value", value_map(v)}});
        }
    return list;
}

Json ternary_entries(const Trilinear& t, const char* what) {
    const std::size_t n = t.in_dim();
    Json list = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto v = t.basis(i, j, k);
                for (std::size_t a = 0; a < v.size(); ++a)
                    if (v[a] != -t.at(j, i, k, a))
                        throw DimensionError(std::string(what) + " is not antisymmetric in its first two slots");
                if (j <= i || is_zero(v)) continue;
                list.push_back(Json{{"args", {i, j, k}}, {"value", value_map(v)}});
            }
    return list;
}

Json header(const char* kind, std::size_t n, const std::vector<std::string>& names) {
    Json j{{"kind", kind}, {"dimension", n}};
    if (!names.empty()) j["basis_names"] = names;
    return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

} // namespace

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("", std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_text(ss.str());
    } catch (const InputError& e) {
        throw InputError(path, e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

AnyAlgebra parse_algebra(const Json& j) {
    const Json& k = require(j, "kind", "");
    if (k == "bol") return parse_bol(j);
    if (k == "maltsev") return parse_maltsev(j);
    throw InputError("kind", "expected \"bol\" or \"maltsev\", got " + k.dump());
}

BolAlgebra parse_bol(const Json& j) {
    expect_kind(j, "bol");
    const std::size_t n = require_dim(j, "dimension");
    BolAlgebra b = BolAlgebra::from_entries(n, parse_binary(j, n, n, "binary"), parse_ternary(j, n, "ternary"));
    b.set_basis_names(parse_names(j, n));
    return b;
}

MaltsevAlgebra parse_maltsev(const Json& j) {
    expect_kind(j, "maltsev");
    if (j.contains("ternary")) throw InputError("ternary", "a Maltsev algebra has no ternary product");
    const std::size_t n = require_dim(j, "dimension");
    MaltsevAlgebra m = MaltsevAlgebra::from_entries(n, parse_binary(j, n, n, "binary"));
    m.set_basis_names(parse_names(j, n));
    return m;
}

Json to_json(const BolAlgebra& b) {
    Json j = header("bol", b.dim(), b.basis_names());
    j["binary"] = binary_entries(b.mul(), "binary product");
    j["ternary"] = ternary_entries(b.tri(), "ternary product");
    return j;
}

Json to_json(const MaltsevAlgebra& m) {
    Json j = header("maltsev", m.dim(), m.basis_names());
    j["binary"] = binary_entries(m.mul(), "binary product");
    return j;
}

Mat parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw InputError(where, "expected " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rw = at_index(where, r);
        if (!j[r].is_array() || j[r].size() != cols)
            throw InputError(rw, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = get_scalar(j[r][c], at_index(rw, c));
    }
    return m;
}

Json to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(render_scalar(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(render_scalar(s));
    return out;
}

namespace {

void check_base_dim(const Json& j, std::size_t n) {
    const std::size_t got = require_dim(j, "base_dimension");
    if (got != n)
        throw InputError("base_dimension", "file is for dimension " + std::to_string(got) + " but the algebra has " +
                                               std::to_string(n));
}

std::vector<Mat> parse_rho(const Json& j, std::size_t n, std::size_t m) {
    const Json& list = require_array(j, "rho", "");
    if (list.size() != n) throw InputError("rho", "expected one matrix per basis element");
    std::vector<Mat> rho;
    for (std::size_t i = 0; i < n; ++i) rho.push_back(parse_matrix(list[i], m, m, at_index("rho", i)));
    return rho;
}

std::vector<Mat> parse_grid(const Json& j, const char* key, std::size_t n, std::size_t m) {
    const Json& grid = require_array(j, key, "");
    if (grid.size() != n) throw InputError(key, "expected " + std::to_string(n) + " rows of matrices");
    std::vector<Mat> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string w = at_index(key, i);
        if (!grid[i].is_array() || grid[i].size() != n)
            throw InputError(w, "expected " + std::to_string(n) + " matrices");
        for (std::size_t k = 0; k < n; ++k) out.push_back(parse_matrix(grid[i][k], m, m, at_index(w, k)));
    }
    return out;
}

} // namespace

Representation parse_representation(const Json& j, const BolAlgebra& base) {
    expect_kind(j, "representation");
    const std::size_t n = base.dim();
    check_base_dim(j, n);
    const std::size_t m = require_dim(j, "module_dimension");
    return Representation(base, m, parse_rho(j, n, m), parse_grid(j, "D", n, m), parse_grid(j, "theta", n, m));
}

Json to_json(const Representation& r) {
    const std::size_t n = r.base_dim();
    Json j{{"kind", "representation"}, {"base_dimension", n}, {"module_dimension", r.module_dim()}};
    Json rho = Json::array(), d = Json::array(), th = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        rho.push_back(to_json(r.rho(i)));
        Json drow = Json::array(), trow = Json::array();
        for (std::size_t k = 0; k < n; ++k) {
            drow.push_back(to_json(r.D(i, k)));
            trow.push_back(to_json(r.theta(i, k)));
        }
        d.push_back(std::move(drow));
        th.push_back(std::move(trow));
    }
    j["rho"] = std::move(rho);
    j["D"] = std::move(d);
    j["theta"] = std::move(th);
    return j;
}

std::vector<Mat> parse_maltsev_representation(const Json& j, std::size_t base_dim) {
    expect_kind(j, "maltsev-representation");
    check_base_dim(j, base_dim);
    return parse_rho(j, base_dim, require_dim(j, "module_dimension"));
}

CochainPair parse_cochain(const Json& j, std::size_t n, std::size_t m) {
    expect_kind(j, "cochain");
    check_base_dim(j, n);
    const std::size_t got_m = require_dim(j, "module_dimension");
    if (got_m != m)
        throw InputError("module_dimension",
                         "file is for module dimension " + std::to_string(got_m) + " but expected " + std::to_string(m));
    CochainPair c(n, m);
    std::set<std::pair<std::size_t, std::size_t>> seen2;
    const auto nu = parse_binary(j, n, m, "nu");
    for (std::size_t k = 0; k < nu.size(); ++k) {
        const auto& e = nu[k];
        const std::string w = at_index("nu", k) + ".args";
        if (e.i >= n || e.j >= n) throw InputError(w, "index out of range");
        if (e.i == e.j) throw InputError(w, "diagonal nu entry");
        if (e.i > e.j) throw InputError(w, "nu args must satisfy i < j");
        if (!seen2.emplace(e.i, e.j).second) throw InputError(w, "duplicate nu entry");
        c.set_nu(e.i, e.j, e.value);
    }
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen3;
    const auto omega = parse_ternary(j, m, "omega");
    for (std::size_t k = 0; k < omega.size(); ++k) {
        const auto& e = omega[k];
        const std::string w = at_index("omega", k) + ".args";
        if (e.i >= n || e.j >= n || e.k >= n) throw InputError(w, "index out of range");
        if (e.i == e.j) throw InputError(w, "diagonal omega entry");
        if (e.i > e.j) throw InputError(w, "omega args must satisfy i < j");
        if (!seen3.emplace(e.i, e.j, e.k).second) throw InputError(w, "duplicate omega entry");
        c.set_omega(e.i, e.j, e.k, e.value);
    }
    return c;
}

Json to_json(const CochainPair& c) {
    Json j{{"kind", "cochain"}, {"base_dimension", c.base_dim()}, {"module_dimension", c.module_dim()}};
    j["nu"] = binary_entries(c.nu(), "nu");
    j["omega"] = ternary_entries(c.omega(), "omega");
    return j;
}

AbelianExtension parse_extension(const Json& j) {
    expect_kind(j, "extension");
    BolAlgebra hat, base;
    try {
        hat = parse_bol(require(j, "hat", ""));
    } catch (const InputError& e) {
        throw InputError("hat", e.what());
    }
    try {
        base = parse_bol(require(j, "base", ""));
    } catch (const InputError& e) {
        throw InputError("base", e.what());
    }
    const std::size_t m = require_dim(j, "module_dimension");
    const std::size_t n = base.dim();
    if (hat.dim() != n + m) throw InputError("hat.dimension", "must equal base dimension plus module_dimension");
    return AbelianExtension(hat, base, parse_matrix(require(j, "i", ""), n + m, m, "i"),
                            parse_matrix(require(j, "p", ""), n, n + m, "p"),
                            parse_matrix(require(j, "sigma", ""), n + m, n, "sigma"));
}

Json to_json(const AbelianExtension& e) {
    return Json{{"kind", "extension"},    {"module_dimension", e.fiber_dim()},
                {"hat", to_json(e.hat())}, {"base", to_json(e.base())},
                {"i", to_json(e.i())},     {"p", to_json(e.p())},
                {"sigma", to_json(e.sigma())}};
}

Json to_json(const PseudoderivationData& p) {
    return Json{{"kind", "pseudoderivation"},
                {"base_dimension", p.f.cols()},
                {"module_dimension", p.f.rows()},
                {"f", to_json(p.f)},
                {"chi", to_json(p.chi)}};
}

Json to_json(const IdentityCheck& c) {
    Json j{{"id", c.id}, {"pass", c.pass}};
    j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    j["residual"] = to_json(c.residual);
    return j;
}

Json to_json(const IdentityReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"pass", r.pass()}, {"checks", std::move(checks)}};
}

Json to_json(const CohomologyReport& r) {
    const auto list = [](const std::vector<CochainPair>& cs) {
        Json a = Json::array();
        for (const auto& c : cs) a.push_back(to_json(c));
        return a;
    };
    return Json{{"dim_C", r.dim_C},
                {"dim_C_nu", r.dim_C_nu},
                {"dim_C_omega", r.dim_C - r.dim_C_nu},
                {"dim_Z", r.dim_Z},
                {"dim_B", r.dim_B},
                {"dim_H", r.dim_H},
                {"dim_pseudoderivations", r.dim_pseudoderivations},
                {"z_basis", list(r.z_basis)},
                {"b_basis", list(r.b_basis)},
                {"h_representatives", list(r.h_representatives)}};
}

Json to_json(const InfinitesimalReport& r) {
    Json samples = Json::array();
    for (const auto& [t, rep] : r.samples) samples.push_back(Json{{"t", render_scalar(t)}, {"report", to_json(rep)}});
    return Json{{"generates", r.generates()},
                {"predicate", r.predicate},
                {"sampling", r.sampling},
                {"routes_agree", r.routes_agree},
                {"deformation_type", to_json(r.deformation_type)},
                {"cocycle", to_json(r.cocycle)},
                {"cubic_term", to_json(r.cubic_term)},
                {"samples", std::move(samples)}};
}

Json to_json(const FirstOrderEquivalence& r) {
    return Json{{"equivalent", r.equivalent()},
                {"direct", r.direct},
                {"companion", r.companion},
                {"routes_agree", r.routes_agree},
                {"phi", optional_json(r.phi)},
                {"companion_witness", optional_json(r.companion_witness)}};
}

Json to_json(const ExtensionEquivalence& r) {
    return Json{{"equivalent", r.equivalent()},
                {"status", to_string(r.status)},
                {"coboundary_witness", optional_json(r.coboundary_witness)},
                {"correction", optional_json(r.correction)},
                {"f_tilde", optional_json(r.f_tilde)},
                {"phi_normal", optional_json(r.phi_normal)},
                {"phi", optional_json(r.phi)},
                {"checks", to_json(r.checks)}};
}

} // namespace bolalg::io
