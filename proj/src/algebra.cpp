#include <bolalg/algebra.hpp>
#include <bolalg/errors.hpp>

#include <set>
#include <tuple>
#include <utility>

namespace bolalg {
namespace {

std::string field(const char* block, std::size_t k) { return std::string(block) + "[" + std::to_string(k) + "]"; }

void fill_binary(Bilinear& mul, const std::vector<BinaryEntry>& entries) {
    const std::size_t n = mul.in_dim();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        if (e.i >= n || e.j >= n) throw InputError(field("binary", k) + ".args", "index out of range");
        if (e.i == e.j) throw InputError(field("binary", k) + ".args", "diagonal binary entry");
        if (e.i > e.j) throw InputError(field("binary", k) + ".args", "binary args must satisfy i < j");
        if (!seen.emplace(e.i, e.j).second) throw InputError(field("binary", k) + ".args", "duplicate binary entry");
        if (e.value.size() != n) throw InputError(field("binary", k) + ".value", "value length mismatch");
        for (std::size_t a = 0; a < n; ++a) {
            mul.at(e.i, e.j, a) = e.value[a];
            mul.at(e.j, e.i, a) = -e.value[a];
        }
    }
}

void check_names(std::size_t n, const std::vector<std::string>& names) {
    if (!names.empty() && names.size() != n) throw InputError("basis_names", "expected one name per basis element");
}

} // namespace

MaltsevAlgebra MaltsevAlgebra::from_entries(std::size_t n, const std::vector<BinaryEntry>& entries) {
    MaltsevAlgebra m(n);
    fill_binary(m.mul_, entries);
    return m;
}

MaltsevAlgebra MaltsevAlgebra::from_tensor(Bilinear mul) {
    if (mul.in_dim() != mul.out_dim()) throw DimensionError("algebra tensor must map B x B -> B");
    MaltsevAlgebra m;
    m.mul_ = std::move(mul);
    return m;
}

void MaltsevAlgebra::set_basis_names(std::vector<std::string> names) {
    check_names(dim(), names);
    names_ = std::move(names);
}

BolAlgebra BolAlgebra::from_entries(std::size_t n, const std::vector<BinaryEntry>& binary,
                                    const std::vector<TernaryEntry>& ternary) {
    BolAlgebra b(n);
    fill_binary(b.mul_, binary);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < ternary.size(); ++k) {
        const auto& e = ternary[k];
        if (e.i >= n || e.j >= n || e.k >= n) throw InputError(field("ternary", k) + ".args", "index out of range");
        if (e.i == e.j) throw InputError(field("ternary", k) + ".args", "diagonal ternary entry");
        if (e.i > e.j) throw InputError(field("ternary", k) + ".args", "ternary args must satisfy i < j");
        if (!seen.emplace(e.i, e.j, e.k).second)
            throw InputError(field("ternary", k) + ".args", "duplicate ternary entry");
        if (e.value.size() != n) throw InputError(field("ternary", k) + ".value", "value length mismatch");
        for (std::size_t a = 0; a < n; ++a) {
            b.tri_.at(e.i, e.j, e.k, a) = e.value[a];
            b.tri_.at(e.j, e.i, e.k, a) = -e.value[a];
        }
    }
    return b;
}

BolAlgebra BolAlgebra::from_tensors(Bilinear mul, Trilinear tri) {
    if (mul.in_dim() != mul.out_dim() || tri.in_dim() != tri.out_dim() || mul.in_dim() != tri.in_dim())
        throw DimensionError("algebra tensors must act on one space");
    BolAlgebra b;
    b.mul_ = std::move(mul);
    b.tri_ = std::move(tri);
    return b;
}

void BolAlgebra::set_basis_names(std::vector<std::string> names) {
    check_names(dim(), names);
    names_ = std::move(names);
}

BolAlgebra two_dim_bol(const Scalar& lambda) {
    return BolAlgebra::from_entries(2, {{0, 1, {0, -1}}}, {{0, 1, 0, {0, lambda}}});
}

Vec bilinear_eval(const MaltsevAlgebra& a, const Vec& x, const Vec& y) { return a.mul()(x, y); }
Vec bilinear_eval(const BolAlgebra& a, const Vec& x, const Vec& y) { return a.mul()(x, y); }
Vec trilinear_eval(const BolAlgebra& a, const Vec& x, const Vec& y, const Vec& z) { return a.tri()(x, y, z); }

IdentityReport verify_bol(const BolAlgebra& b, Exec exec) {
    const std::size_t n = b.dim();
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
    const auto P = [&](const Vec& x, const Vec& y) { return b.product(x, y); };
    const auto T = [&](const Vec& x, const Vec& y, const Vec& z) { return b.triple(x, y, z); };

    IdentityReport r;
    r.checks.push_back(check_identity("B01", n, 2, [&](std::span<const std::size_t> s) {
        return P(e[s[0]], e[s[1]]) + P(e[s[1]], e[s[0]]);
    }, exec));
    r.checks.push_back(check_identity("B02", n, 3, [&](std::span<const std::size_t> s) {
        return T(e[s[0]], e[s[1]], e[s[2]]) + T(e[s[1]], e[s[0]], e[s[2]]);
    }, exec));
    r.checks.push_back(check_identity("B1", n, 3, [&](std::span<const std::size_t> s) {
        const Vec &x = e[s[0]], &y = e[s[1]], &z = e[s[2]];
        return T(x, y, z) + T(y, z, x) + T(z, x, y);
    }, exec));
    r.checks.push_back(check_identity("B2", n, 4, [&](std::span<const std::size_t> s) {
        const Vec &x = e[s[0]], &y = e[s[1]], &u = e[s[2]], &v = e[s[3]];
        const Vec uv = P(u, v), xy = P(x, y);
        return T(x, y, uv) - (P(T(x, y, u), v) + P(u, T(x, y, v)) + T(u, v, xy) - P(uv, xy));
    }, exec));
    r.checks.push_back(check_identity("B3", n, 5, [&](std::span<const std::size_t> s) {
        const Vec &x = e[s[0]], &y = e[s[1]], &u = e[s[2]], &v = e[s[3]], &w = e[s[4]];
        return T(x, y, T(u, v, w)) - (T(T(x, y, u), v, w) + T(u, T(x, y, v), w) + T(u, v, T(x, y, w)));
    }, exec));
    return r;
}

IdentityReport verify_maltsev(const MaltsevAlgebra& m, Exec exec) {
    const std::size_t n = m.dim();
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
    const auto P = [&](const Vec& x, const Vec& y) { return m.mul()(x, y); };

    IdentityReport r;
    r.checks.push_back(check_identity("anticommutativity", n, 2, [&](std::span<const std::size_t> s) {
        return P(e[s[0]], e[s[1]]) + P(e[s[1]], e[s[0]]);
    }, exec));
    r.checks.push_back(check_identity("maltsev-identity", n, 4, [&](std::span<const std::size_t> s) {
        if (s[0] > s[1]) return Vec{};
        const Vec x = s[0] == s[1] ? e[s[0]] : e[s[0]] + e[s[1]];
        const Vec &y = e[s[2]], &z = e[s[3]];
        const Vec xy = P(x, y);
        return P(xy, P(x, z)) - (P(P(xy, z), x) + P(P(P(y, z), x), x) + P(P(P(z, x), x), y));
    }, exec));
    return r;
}

BolAlgebra maltsev_to_bol(const MaltsevAlgebra& m) {
    IdentityReport check = verify_maltsev(m);
    if (!check.pass()) throw RejectedInput("input is not a Maltsev algebra", std::move(check));
    const std::size_t n = m.dim();
    const Bilinear& mul = m.mul();
    Trilinear tri(n, n);
    const Scalar third(1, 3);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = unit_vec(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec y = unit_vec(n, j);
            const Vec xy = mul(x, y);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec z = unit_vec(n, k);
                const Vec v = third * (mul(x, mul(y, z)) - mul(y, mul(x, z)) + Scalar(2) * mul(xy, z));
                for (std::size_t a = 0; a < n; ++a) tri.at(i, j, k, a) = v[a];
            }
        }
    }
    BolAlgebra b = BolAlgebra::from_tensors(mul, std::move(tri));
    if (!m.basis_names().empty()) b.set_basis_names(m.basis_names());
    return b;
}

} // namespace bolalg
