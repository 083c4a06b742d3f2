#include <bolalg/cohomology.hpp>
#include <bolalg/errors.hpp>
#include <bolalg/representation.hpp>

namespace bolalg {
namespace {

std::vector<Vec> basis_vectors(std::size_t n) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
    return e;
}

void check_shapes(const std::vector<Mat>& ms, std::size_t count, std::size_t m, const char* what) {
    if (ms.size() != count) throw DimensionError(std::string(what) + ": wrong number of matrices");
    for (const auto& a : ms)
        if (a.rows() != m || a.cols() != m) throw DimensionError(std::string(what) + ": matrix is not m x m");
}

// Linear combination sum_i x_i mats[i].
Mat combine(const std::vector<Mat>& mats, const Vec& x, std::size_t m) {
    Mat out(m, m);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i])) out += x[i] * mats[i];
    return out;
}

} // namespace

Representation::Representation(BolAlgebra base, std::size_t module_dim)
    : base_(std::move(base)), m_(module_dim) {
    const std::size_t n = base_.dim();
    rho_.assign(n, Mat(m_, m_));
    d_.assign(n * n, Mat(m_, m_));
    theta_.assign(n * n, Mat(m_, m_));
}

Representation::Representation(BolAlgebra base, std::size_t module_dim, std::vector<Mat> rho, std::vector<Mat> d,
                               std::vector<Mat> theta)
    : base_(std::move(base)), m_(module_dim), rho_(std::move(rho)), d_(std::move(d)), theta_(std::move(theta)) {
    const std::size_t n = base_.dim();
    check_shapes(rho_, n, m_, "rho");
    check_shapes(d_, n * n, m_, "D");
    check_shapes(theta_, n * n, m_, "theta");
}

Mat Representation::rho_of(const Vec& x) const {
    if (x.size() != base_dim()) throw DimensionError("rho: argument length mismatch");
    return combine(rho_, x, m_);
}

Mat Representation::D_of(const Vec& x, const Vec& y) const {
    const std::size_t n = base_dim();
    if (x.size() != n || y.size() != n) throw DimensionError("D: argument length mismatch");
    Mat out(m_, m_);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(y[j])) out += (x[i] * y[j]) * D(i, j);
    }
    return out;
}

Mat Representation::theta_of(const Vec& x, const Vec& y) const {
    const std::size_t n = base_dim();
    if (x.size() != n || y.size() != n) throw DimensionError("theta: argument length mismatch");
    Mat out(m_, m_);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(y[j])) out += (x[i] * y[j]) * theta(i, j);
    }
    return out;
}

IdentityReport verify_representation(const Representation& r, Exec exec) {
    const std::size_t n = r.base_dim();
    const BolAlgebra& b = r.base();
    const auto e = basis_vectors(n);
    const auto rho = [&](std::size_t i) -> const Mat& { return r.rho(i); };
    const auto D = [&](std::size_t i, std::size_t j) -> const Mat& { return r.D(i, j); };
    const auto th = [&](std::size_t i, std::size_t j) -> const Mat& { return r.theta(i, j); };
    const auto tri = [&](std::size_t i, std::size_t j, std::size_t k) { return b.triple(e[i], e[j], e[k]); };
    const auto mul = [&](std::size_t i, std::size_t j) { return b.product(e[i], e[j]); };

    IdentityReport out;
    out.checks.push_back(check_identity("R1", n, 2, [&](std::span<const std::size_t> s) {
        return flatten(D(s[0], s[1]) + th(s[0], s[1]) - th(s[1], s[0]));
    }, exec));
    out.checks.push_back(check_identity("R21", n, 3, [&](std::span<const std::size_t> s) {
        const std::size_t x1 = s[0], x2 = s[1], y1 = s[2];
        const Vec x12 = mul(x1, x2);
        const Mat lhs = commutator(D(x1, x2), rho(y1));
        const Mat rhs = r.rho_of(tri(x1, x2, y1)) - r.theta_of(e[y1], x12) + r.rho_of(x12) * rho(y1);
        return flatten(lhs - rhs);
    }, exec));
    out.checks.push_back(check_identity("R22", n, 3, [&](std::span<const std::size_t> s) {
        const std::size_t x1 = s[0], y1 = s[1], y2 = s[2];
        const Vec y12 = mul(y1, y2);
        const Mat lhs = r.theta_of(e[x1], y12);
        const Mat rhs = rho(y1) * th(x1, y2) - rho(y2) * th(x1, y1) - (D(y1, y2) - r.rho_of(y12)) * rho(x1);
        return flatten(lhs - rhs);
    }, exec));
    out.checks.push_back(check_identity("R31", n, 4, [&](std::span<const std::size_t> s) {
        const std::size_t x1 = s[0], x2 = s[1], y1 = s[2], y2 = s[3];
        const Mat lhs = commutator(D(x1, x2), D(y1, y2));
        const Mat rhs = r.D_of(tri(x1, x2, y1), e[y2]) + r.D_of(e[y1], tri(x1, x2, y2));
        return flatten(lhs - rhs);
    }, exec));
    out.checks.push_back(check_identity("R32", n, 4, [&](std::span<const std::size_t> s) {
        const std::size_t x1 = s[0], x2 = s[1], y1 = s[2], y2 = s[3];
        const Mat lhs = commutator(D(x1, x2), th(y1, y2));
        const Mat rhs = r.theta_of(tri(x1, x2, y1), e[y2]) + r.theta_of(e[y1], tri(x1, x2, y2));
        return flatten(lhs - rhs);
    }, exec));
    out.checks.push_back(check_identity("R33", n, 4, [&](std::span<const std::size_t> s) {
        const std::size_t x1 = s[0], y1 = s[1], y2 = s[2], y3 = s[3];
        const Mat lhs = r.theta_of(e[x1], tri(y1, y2, y3));
        const Mat rhs = th(y2, y3) * th(x1, y1) - th(y1, y3) * th(x1, y2) + D(y1, y2) * th(x1, y3);
        return flatten(lhs - rhs);
    }, exec));
    return out;
}

Representation adjoint_representation(const BolAlgebra& b) {
    IdentityReport check = verify_bol(b);
    if (!check.pass()) throw RejectedInput("algebra is not a Bol algebra", std::move(check));
    const std::size_t n = b.dim();
    Representation r(b, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a) {
                r.rho(i)(a, k) = b.mul().at(i, k, a);
                for (std::size_t j = 0; j < n; ++j) {
                    r.D(i, j)(a, k) = b.tri().at(i, j, k, a);
                    r.theta(i, j)(a, k) = b.tri().at(k, i, j, a);
                }
            }
    return r;
}

namespace {

void check_module_shapes(const MaltsevAlgebra& m, const std::vector<Mat>& rho) {
    if (rho.size() != m.dim()) throw DimensionError("rho: need one matrix per basis element");
    if (!rho.empty()) check_shapes(rho, m.dim(), rho.front().rows(), "rho");
}

std::size_t module_size(const std::vector<Mat>& rho) { return rho.empty() ? 0 : rho.front().rows(); }

} // namespace

IdentityReport check_maltsev_module(const MaltsevAlgebra& m, const std::vector<Mat>& rho, Exec exec) {
    check_module_shapes(m, rho);
    const std::size_t n = m.dim(), dim_v = module_size(rho);
    const auto e = basis_vectors(n);
    const Bilinear& P = m.mul();
    IdentityReport out;
    out.checks.push_back(check_identity("maltsev-module", n, 3, [&](std::span<const std::size_t> s) {
        const Vec &x = e[s[0]], &y = e[s[1]], &z = e[s[2]];
        const Mat d1 = commutator(rho[s[0]], rho[s[1]]) + combine(rho, P(x, y), dim_v);
        const Vec t1 = P(x, P(y, z)) - P(y, P(x, z)) + P(P(x, y), z);
        return flatten(commutator(d1, rho[s[2]]) - combine(rho, t1, dim_v));
    }, exec));
    return out;
}

IdentityReport check_maltsev_module_jordan(const MaltsevAlgebra& m, const std::vector<Mat>& rho, Exec exec) {
    check_module_shapes(m, rho);
    const std::size_t n = m.dim(), dim_v = module_size(rho);
    const auto e = basis_vectors(n);
    const Bilinear& P = m.mul();
    const auto jordan = [](const Mat& a, const Mat& b) { return a * b + b * a; };
    IdentityReport out;
    out.checks.push_back(check_identity("maltsev-module-jordan", n, 3, [&](std::span<const std::size_t> s) {
        const Vec &x = e[s[0]], &y = e[s[1]], &z = e[s[2]];
        const Mat &rx = rho[s[0]], &ry = rho[s[1]], &rz = rho[s[2]];
        const Mat lhs = combine(rho, P(x, P(y, z)), dim_v) - rz * jordan(rx, ry) + ry * jordan(rx, rz);
        const Mat rhs = jordan(rx, combine(rho, P(y, z), dim_v)) - rz * combine(rho, P(x, y), dim_v) +
                        ry * combine(rho, P(x, z), dim_v);
        return flatten(lhs - rhs);
    }, exec));
    return out;
}

Representation induce_from_maltsev(const MaltsevAlgebra& m, const std::vector<Mat>& rho) {
    BolAlgebra b = maltsev_to_bol(m);
    IdentityReport check = check_maltsev_module(m, rho);
    if (!check.pass()) throw RejectedInput("rho is not a representation of the Maltsev algebra", std::move(check));
    const std::size_t n = m.dim(), dim_v = module_size(rho);
    const Scalar third(1, 3);
    std::vector<Mat> d(n * n), theta(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Mat rxy = combine(rho, m.mul()(unit_vec(n, i), unit_vec(n, j)), dim_v);
            theta[i * n + j] = third * (rho[i] * rho[j] + Scalar(2) * (rho[j] * rho[i]) - rxy);
            d[i * n + j] = third * (commutator(rho[i], rho[j]) + Scalar(2) * rxy);
        }
    return Representation(std::move(b), dim_v, rho, std::move(d), std::move(theta));
}

Mat delta(const Representation& r, std::size_t i, std::size_t j) {
    const std::size_t n = r.base_dim();
    if (i >= n || j >= n) throw DimensionError("delta: basis index out of range");
    return r.D(i, j) - r.rho_of(r.base().product(unit_vec(n, i), unit_vec(n, j)));
}

Mat delta_of(const Representation& r, const Vec& x, const Vec& y) {
    return r.D_of(x, y) - r.rho_of(r.base().product(x, y));
}

IdentityReport check_delta_identity(const Representation& r, Exec exec) {
    const std::size_t n = r.base_dim();
    const auto e = basis_vectors(n);
    const BolAlgebra& b = r.base();
    IdentityReport out;
    out.checks.push_back(check_identity("Delta", n, 4, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &y1 = e[s[2]], &y2 = e[s[3]];
        const Mat lhs = commutator(delta(r, s[0], s[1]), delta(r, s[2], s[3]));
        const Mat rhs = delta_of(r, b.triple(x1, x2, y1), y2) + delta_of(r, y1, b.triple(x1, x2, y2)) -
                        delta_of(r, b.product(y1, y2), b.product(x1, x2));
        return flatten(lhs - rhs);
    }, exec));
    return out;
}

IdentityReport check_pseudoderivation(const Representation& r, const PseudoderivationData& p, Exec exec) {
    const CochainPair c = coboundary_of(r, p);
    const std::size_t n = r.base_dim();
    IdentityReport out;
    out.checks.push_back(check_identity("BB1", n, 2, [&](std::span<const std::size_t> s) {
        const auto v = c.nu().basis(s[0], s[1]);
        return Vec(v.begin(), v.end());
    }, exec));
    out.checks.push_back(check_identity("BB2", n, 3, [&](std::span<const std::size_t> s) {
        const auto v = c.omega().basis(s[0], s[1], s[2]);
        return Vec(v.begin(), v.end());
    }, exec));
    return out;
}

bool is_pseudoderivation(const Representation& r, const PseudoderivationData& p) {
    return check_pseudoderivation(r, p).pass();
}

Vec to_params(const PseudoderivationData& p) {
    const std::size_t m = p.f.rows(), n = p.f.cols();
    Vec out(n * m + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a) out[i * m + a] = p.f(a, i);
    for (std::size_t a = 0; a < m; ++a) out[n * m + a] = p.chi[a];
    return out;
}

PseudoderivationData from_params(std::size_t n, std::size_t m, const Vec& params) {
    if (params.size() != n * m + m) throw DimensionError("pseudoderivation parameters: length mismatch");
    PseudoderivationData p = PseudoderivationData::zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a) p.f(a, i) = params[i * m + a];
    for (std::size_t a = 0; a < m; ++a) p.chi[a] = params[n * m + a];
    return p;
}

std::vector<PseudoderivationData> pseudoderivation_space(const Representation& r, Exec exec) {
    const std::size_t n = r.base_dim(), m = r.module_dim();
    const std::size_t params = n * m + m;
    // Full tensors rather than antisymmetric coordinates, so the kernel is
    // exact even when D is not antisymmetric.
    const std::size_t rows = n * n * m + n * n * n * m;
    const Mat map = assemble_columns(rows, params, [&](std::size_t col) {
        const CochainPair c = coboundary_of(r, from_params(n, m, unit_vec(params, col)));
        Vec v(c.nu().data());
        v.insert(v.end(), c.omega().data().begin(), c.omega().data().end());
        return v;
    }, exec);
    std::vector<PseudoderivationData> out;
    for (const Vec& k : kernel_basis(map, exec)) out.push_back(from_params(n, m, k));
    return out;
}

} // namespace bolalg
