#include <bolalg/cohomology.hpp>
#include <bolalg/errors.hpp>

#include <algorithm>

namespace bolalg {
namespace {

std::vector<Vec> basis_vectors(std::size_t n) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
    return e;
}

// The three cocycle conditions as residual functions of a cochain.
class CocycleEquations {
public:
    explicit CocycleEquations(const Representation& r) : r_(r), e_(basis_vectors(r.base_dim())) {}

    Vec cc1(const CochainPair& c, std::span<const std::size_t> s) const {
        const Trilinear& w = c.omega();
        const Vec &x1 = e_[s[0]], &x2 = e_[s[1]], &x3 = e_[s[2]];
        return w(x1, x2, x3) + w(x2, x3, x1) + w(x3, x1, x2);
    }

    Vec cc2(const CochainPair& c, std::span<const std::size_t> s) const {
        const Bilinear& nu = c.nu();
        const Trilinear& w = c.omega();
        const BolAlgebra& b = r_.base();
        const Vec &x1 = e_[s[0]], &x2 = e_[s[1]], &y1 = e_[s[2]], &y2 = e_[s[3]];
        const Vec x12 = b.product(x1, x2), y12 = b.product(y1, y2);
        const Vec nu_x = nu(x1, x2), nu_y = nu(y1, y2);
        const Vec lhs = w(x1, x2, y12) + r_.D(s[0], s[1]) * nu_y;
        Vec rhs = w(y1, y2, x12) + r_.D(s[2], s[3]) * nu_x;
        rhs += nu(b.triple(x1, x2, y1), y2) + nu(y1, b.triple(x1, x2, y2));
        rhs += r_.rho(s[2]) * w(x1, x2, y2) - r_.rho(s[3]) * w(x1, x2, y1);
        rhs += r_.rho_of(x12) * nu_y - r_.rho_of(y12) * nu_x;
        rhs -= nu(y12, x12);
        return lhs - rhs;
    }

    Vec cc3(const CochainPair& c, std::span<const std::size_t> s) const {
        const Trilinear& w = c.omega();
        const BolAlgebra& b = r_.base();
        const Vec &x1 = e_[s[0]], &x2 = e_[s[1]], &y1 = e_[s[2]], &y2 = e_[s[3]], &y3 = e_[s[4]];
        const Vec lhs = w(x1, x2, b.triple(y1, y2, y3)) + r_.D(s[0], s[1]) * w(y1, y2, y3);
        Vec rhs = w(b.triple(x1, x2, y1), y2, y3) + w(y1, b.triple(x1, x2, y2), y3) + w(y1, y2, b.triple(x1, x2, y3));
        rhs += r_.D(s[2], s[3]) * w(x1, x2, y3);
        rhs += r_.theta(s[3], s[4]) * w(x1, x2, y1) - r_.theta(s[2], s[4]) * w(x1, x2, y2);
        return lhs - rhs;
    }

private:
    const Representation& r_;
    std::vector<Vec> e_;
};

void check_cochain_shape(const Representation& r, const CochainPair& c) {
    if (c.base_dim() != r.base_dim() || c.module_dim() != r.module_dim())
        throw DimensionError("cochain shape does not match the representation");
}

Mat leading_rows(const RrefResult& r) {
    const std::size_t cols = r.reduced.cols();
    std::vector<Scalar> data(r.reduced.data().begin(), r.reduced.data().begin() + r.rank * cols);
    return Mat(r.rank, cols, std::move(data));
}

} // namespace

IdentityReport is_cocycle(const Representation& r, const CochainPair& c, Exec exec) {
    check_cochain_shape(r, c);
    const std::size_t n = r.base_dim();
    const CocycleEquations eq(r);
    IdentityReport out;
    out.checks.push_back(check_identity("CC1", n, 3, [&](std::span<const std::size_t> s) { return eq.cc1(c, s); }, exec));
    out.checks.push_back(check_identity("CC2", n, 4, [&](std::span<const std::size_t> s) { return eq.cc2(c, s); }, exec));
    out.checks.push_back(check_identity("CC3", n, 5, [&](std::span<const std::size_t> s) { return eq.cc3(c, s); }, exec));
    return out;
}

CochainPair coboundary_of(const Representation& r, const PseudoderivationData& p) {
    const std::size_t n = r.base_dim(), m = r.module_dim();
    if (p.f.rows() != m || p.f.cols() != n || p.chi.size() != m)
        throw DimensionError("pseudoderivation data shape does not match the representation");
    const BolAlgebra& b = r.base();
    std::vector<Vec> fe(n);
    for (std::size_t i = 0; i < n; ++i) fe[i] = p.f.column(i);
    const auto f = [&](const Vec& x) { return p.f * x; };

    CochainPair c(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec xy = b.product(unit_vec(n, i), unit_vec(n, j));
            const Vec v = r.rho(i) * fe[j] - r.rho(j) * fe[i] + delta(r, i, j) * p.chi - f(xy);
            std::copy(v.begin(), v.end(), c.nu().basis(i, j).begin());
            for (std::size_t k = 0; k < n; ++k) {
                const Vec t = b.triple(unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                const Vec w = r.theta(j, k) * fe[i] - r.theta(i, k) * fe[j] + r.D(i, j) * fe[k] - f(t);
                std::copy(w.begin(), w.end(), c.omega().basis(i, j, k).begin());
            }
        }
    return c;
}

namespace {

Mat coboundary_columns(const Representation& r, std::size_t cols, Exec exec) {
    const std::size_t n = r.base_dim(), m = r.module_dim();
    const std::size_t params = n * m + m;
    return assemble_columns(CochainPair::coord_count(n, m), cols, [&](std::size_t col) {
        return coboundary_of(r, from_params(n, m, unit_vec(params, col))).to_coords();
    }, exec);
}

} // namespace

Mat coboundary_matrix(const Representation& r, Exec exec) {
    return coboundary_columns(r, r.base_dim() * r.module_dim() + r.module_dim(), exec);
}

Mat coboundary_matrix_without_companion(const Representation& r, Exec exec) {
    return coboundary_columns(r, r.base_dim() * r.module_dim(), exec);
}

RrefResult cocycle_constraints(const Representation& r, Exec exec) {
    const std::size_t n = r.base_dim(), m = r.module_dim();
    const std::size_t cols = CochainPair::coord_count(n, m);
    std::vector<CochainPair> units;
    units.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) units.push_back(CochainPair::from_coords(n, m, unit_vec(cols, j)));

    const CocycleEquations eq(r);
    using Residual = Vec (CocycleEquations::*)(const CochainPair&, std::span<const std::size_t>) const;
    const std::pair<std::size_t, Residual> blocks[] = {
        {3, &CocycleEquations::cc1}, {4, &CocycleEquations::cc2}, {5, &CocycleEquations::cc3}};

    Mat basis(0, cols);
    if (m == 0 || cols == 0) return rref(basis, exec);
    const std::size_t chunk = std::max<std::size_t>(1, (4 * cols + m - 1) / m);
    for (const auto& [arity, fn] : blocks) {
        const std::size_t total = tuple_count(n, arity);
        for (std::size_t lo = 0; lo < total; lo += chunk) {
            const std::size_t hi = std::min(total, lo + chunk);
            std::vector<Tuple> tuples;
            for (std::size_t t = lo; t < hi; ++t) tuples.push_back(decode_tuple(t, n, arity));
            const Mat part = assemble_columns((hi - lo) * m, cols, [&](std::size_t col) {
                Vec v;
                v.reserve((hi - lo) * m);
                for (const Tuple& t : tuples) {
                    Vec res = (eq.*fn)(units[col], t);
                    v.insert(v.end(), res.begin(), res.end());
                }
                return v;
            }, exec);
            basis = leading_rows(rref(vstack({basis, part}), exec));
        }
    }
    return rref(basis, exec);
}

CoboundaryTest is_coboundary(const Representation& r, const CochainPair& c, Exec exec) {
    check_cochain_shape(r, c);
    if (!c.is_antisymmetric()) return {};
    const auto x = solve(coboundary_matrix(r, exec), c.to_coords(), exec);
    if (!x) return {};
    return {true, from_params(r.base_dim(), r.module_dim(), *x)};
}

CohomologyReport cohomology(const Representation& r, Exec exec) {
    IdentityReport base = verify_bol(r.base(), exec);
    if (!base.pass()) throw RejectedInput("base algebra is not a Bol algebra", std::move(base));
    IdentityReport rep = verify_representation(r, exec);
    if (!rep.pass()) throw RejectedInput("maps do not form a representation", std::move(rep));

    const std::size_t n = r.base_dim(), m = r.module_dim();
    CohomologyReport out;
    out.dim_C = CochainPair::coord_count(n, m);
    out.dim_C_nu = CochainPair::nu_coord_count(n, m);

    const RrefResult cons = cocycle_constraints(r, exec);
    for (const Vec& z : kernel_basis(cons, out.dim_C)) out.z_basis.push_back(CochainPair::from_coords(n, m, z));
    out.dim_Z = out.z_basis.size();

    const Mat cob = coboundary_matrix(r, exec);
    const RrefResult cob_r = rref(cob, exec);
    for (std::size_t p : cob_r.pivots) out.b_basis.push_back(CochainPair::from_coords(n, m, cob.column(p)));
    out.dim_B = out.b_basis.size();
    out.dim_pseudoderivations = pseudoderivation_space(r, exec).size();

    // Extend a basis of B to one of Z, scanning z_basis in order.
    Mat span(0, out.dim_C);
    std::vector<Mat> rows;
    for (const auto& bc : out.b_basis) rows.push_back(Mat(1, out.dim_C, bc.to_coords()));
    if (!rows.empty()) span = leading_rows(rref(vstack(rows), exec));
    std::size_t rank = span.rows();
    for (const auto& z : out.z_basis) {
        const RrefResult next = rref(vstack({span, Mat(1, out.dim_C, z.to_coords())}), exec);
        if (next.rank > rank) {
            out.h_representatives.push_back(z);
            span = leading_rows(next);
            rank = next.rank;
        }
    }
    out.dim_H = out.dim_Z - out.dim_B;
    return out;
}

} // namespace bolalg
