#include <bolalg/deformation.hpp>
#include <bolalg/errors.hpp>
#include <bolalg/representation.hpp>

namespace bolalg {
namespace {

std::vector<Vec> basis_vectors(std::size_t n) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
    return e;
}

} // namespace

DeformationDatum::DeformationDatum(BolAlgebra b, CochainPair c) : base(std::move(b)), pair(std::move(c)) {
    if (pair.base_dim() != base.dim() || pair.module_dim() != base.dim())
        throw DimensionError("deformation data must map the algebra to itself");
}

IdentityReport is_deformation_type(const DeformationTypeCandidate& d, Exec exec) {
    const std::size_t n = d.mu.in_dim();
    for (std::size_t dim : {d.mu.out_dim(), d.nu.in_dim(), d.nu.out_dim(), d.omega.in_dim(), d.omega.out_dim()})
        if (dim != n) throw DimensionError("deformation candidate: maps act on different spaces");
    const auto e = basis_vectors(n);
    const Bilinear &mu = d.mu, &nu = d.nu;
    const Trilinear& w = d.omega;

    IdentityReport r;
    r.checks.push_back(check_identity("B01'", n, 2, [&](std::span<const std::size_t> s) {
        return nu(e[s[0]], e[s[1]]) + nu(e[s[1]], e[s[0]]);
    }, exec));
    r.checks.push_back(check_identity("B02'", n, 2, [&](std::span<const std::size_t> s) {
        return mu(e[s[0]], e[s[1]]) + mu(e[s[1]], e[s[0]]);
    }, exec));
    r.checks.push_back(check_identity("B03'", n, 3, [&](std::span<const std::size_t> s) {
        return w(e[s[0]], e[s[1]], e[s[2]]) + w(e[s[1]], e[s[0]], e[s[2]]);
    }, exec));
    r.checks.push_back(check_identity("B1'", n, 3, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &x3 = e[s[2]];
        return w(x1, x2, x3) + w(x2, x3, x1) + w(x3, x1, x2);
    }, exec));
    r.checks.push_back(check_identity("B2'", n, 4, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &y1 = e[s[2]], &y2 = e[s[3]];
        const Vec nx = nu(x1, x2), ny = nu(y1, y2);
        const Vec lhs = w(x1, x2, ny);
        Vec rhs = nu(w(x1, x2, y1), y2) + nu(y1, w(x1, x2, y2)) + w(y1, y2, nx);
        rhs -= nu(ny, mu(x1, x2)) + nu(mu(y1, y2), nx) + mu(ny, nx);
        return lhs - rhs;
    }, exec));
    r.checks.push_back(check_identity("B3'", n, 5, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &y1 = e[s[2]], &y2 = e[s[3]], &y3 = e[s[4]];
        return w(x1, x2, w(y1, y2, y3)) -
               (w(w(x1, x2, y1), y2, y3) + w(y1, w(x1, x2, y2), y3) + w(y1, y2, w(x1, x2, y3)));
    }, exec));
    return r;
}

BolAlgebra deformed_algebra(const DeformationDatum& d, const Scalar& t) {
    Bilinear mul = d.base.mul();
    Trilinear tri = d.base.tri();
    mul += t * d.pair.nu();
    tri += t * d.pair.omega();
    return BolAlgebra::from_tensors(std::move(mul), std::move(tri));
}

const std::vector<Scalar>& deformation_sample_points() {
    static const std::vector<Scalar> points{1, 2, 3, 5};
    return points;
}

InfinitesimalReport generates_infinitesimal_deformation(const DeformationDatum& d, Exec exec) {
    const std::size_t n = d.base.dim();
    InfinitesimalReport out;
    out.deformation_type = is_deformation_type({d.base.mul(), d.pair.nu(), d.pair.omega()}, exec);
    out.cocycle = is_cocycle(adjoint_representation(d.base), d.pair, exec);
    out.predicate = out.deformation_type.pass() && out.cocycle.pass();

    const auto e = basis_vectors(n);
    const Bilinear& nu = d.pair.nu();
    out.cubic_term = check_identity("cubic-term", n, 4, [&](std::span<const std::size_t> s) {
        return nu(nu(e[s[2]], e[s[3]]), nu(e[s[0]], e[s[1]]));
    }, exec);

    out.sampling = true;
    for (const Scalar& t : deformation_sample_points()) {
        IdentityReport rep = verify_bol(deformed_algebra(d, t), exec);
        out.sampling = out.sampling && rep.pass();
        out.samples.emplace_back(t, std::move(rep));
    }
    out.routes_agree = out.predicate == out.sampling;
    return out;
}

IdentityReport check_first_order_formal(const DeformationDatum& d, Exec exec) {
    const std::size_t n = d.base.dim();
    const auto e = basis_vectors(n);
    const Bilinear& F = d.pair.nu();
    const Trilinear& G = d.pair.omega();
    const auto P = [&](const Vec& x, const Vec& y) { return d.base.product(x, y); };
    const auto T = [&](const Vec& x, const Vec& y, const Vec& z) { return d.base.triple(x, y, z); };

    IdentityReport r;
    r.checks.push_back(check_identity("F1-antisymmetry", n, 2, [&](std::span<const std::size_t> s) {
        return F(e[s[0]], e[s[1]]) + F(e[s[1]], e[s[0]]);
    }, exec));
    r.checks.push_back(check_identity("G1-antisymmetry", n, 3, [&](std::span<const std::size_t> s) {
        return G(e[s[0]], e[s[1]], e[s[2]]) + G(e[s[1]], e[s[0]], e[s[2]]);
    }, exec));
    r.checks.push_back(check_identity("order1-cyclic", n, 3, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &x3 = e[s[2]];
        return G(x1, x2, x3) + G(x2, x3, x1) + G(x3, x1, x2);
    }, exec));
    r.checks.push_back(check_identity("order1-binary", n, 4, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &y1 = e[s[2]], &y2 = e[s[3]];
        const Vec x12 = P(x1, x2), y12 = P(y1, y2), Fx = F(x1, x2), Fy = F(y1, y2);
        const Vec lhs = T(x1, x2, Fy) + G(x1, x2, y12);
        Vec rhs = P(G(x1, x2, y1), y2) + P(y1, G(x1, x2, y2)) + T(y1, y2, Fx) - P(y12, Fx) - P(Fy, x12);
        rhs += F(T(x1, x2, y1), y2) + F(y1, T(x1, x2, y2)) + G(y1, y2, x12) - F(y12, x12);
        return lhs - rhs;
    }, exec));
    r.checks.push_back(check_identity("order1-ternary", n, 5, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &y1 = e[s[2]], &y2 = e[s[3]], &y3 = e[s[4]];
        const Vec lhs = T(x1, x2, G(y1, y2, y3)) + G(x1, x2, T(y1, y2, y3));
        Vec rhs = T(G(x1, x2, y1), y2, y3) + T(y1, G(x1, x2, y2), y3) + T(y1, y2, G(x1, x2, y3));
        rhs += G(T(x1, x2, y1), y2, y3) + G(y1, T(x1, x2, y2), y3) + G(y1, y2, T(x1, x2, y3));
        return lhs - rhs;
    }, exec));
    r.checks.push_back(check_identity("order2-binary", n, 4, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &y1 = e[s[2]], &y2 = e[s[3]];
        const Vec Fx = F(x1, x2), Fy = F(y1, y2);
        const Vec lhs = G(x1, x2, Fy);
        Vec rhs = F(G(x1, x2, y1), y2) + F(y1, G(x1, x2, y2)) + G(y1, y2, Fx);
        rhs -= P(Fy, Fx) + F(P(y1, y2), Fx) + F(Fy, P(x1, x2));
        return lhs - rhs;
    }, exec));
    r.checks.push_back(check_identity("order2-ternary", n, 5, [&](std::span<const std::size_t> s) {
        const Vec &x1 = e[s[0]], &x2 = e[s[1]], &y1 = e[s[2]], &y2 = e[s[3]], &y3 = e[s[4]];
        return G(x1, x2, G(y1, y2, y3)) -
               (G(G(x1, x2, y1), y2, y3) + G(y1, G(x1, x2, y2), y3) + G(y1, y2, G(x1, x2, y3)));
    }, exec));
    r.checks.push_back(check_identity("order3-binary", n, 4, [&](std::span<const std::size_t> s) {
        return F(F(e[s[2]], e[s[3]]), F(e[s[0]], e[s[1]]));
    }, exec));
    return r;
}

FirstOrderEquivalence first_order_equivalent(const BolAlgebra& base, const DeformationDatum& d1,
                                             const DeformationDatum& d2, Exec exec) {
    if (!(d1.base == base) || !(d2.base == base)) throw DimensionError("deformation data over different algebras");
    const std::size_t n = base.dim();
    const Representation adj = adjoint_representation(base);
    const Vec diff = (d2.pair - d1.pair).to_coords();
    const bool antisymmetric = d1.pair.is_antisymmetric() && d2.pair.is_antisymmetric();

    FirstOrderEquivalence out;
    if (antisymmetric) {
        if (auto x = solve(coboundary_matrix_without_companion(adj, exec), diff, exec)) {
            out.direct = true;
            Mat phi(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t a = 0; a < n; ++a) phi(a, i) = (*x)[i * n + a];
            out.phi = std::move(phi);
        }

        // Unknowns (f, eta); rows: coboundary = diff, then Delta(e_i, e_j) eta = 0.
        const Mat cob = coboundary_matrix(adj, exec);
        const std::size_t params = cob.cols();
        Mat sys(cob.rows() + n * n * n, params);
        Vec rhs(sys.rows());
        for (std::size_t row = 0; row < cob.rows(); ++row) {
            for (std::size_t c = 0; c < params; ++c) sys(row, c) = cob(row, c);
            rhs[row] = diff[row];
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Mat dl = delta(adj, i, j);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) sys(cob.rows() + (i * n + j) * n + a, n * n + b) = dl(a, b);
            }
        if (auto x = solve(sys, rhs, exec)) {
            out.companion = true;
            out.companion_witness = from_params(n, n, *x);
        }
    }
    out.routes_agree = out.direct == out.companion;
    return out;
}

} // namespace bolalg
