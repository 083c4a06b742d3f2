#include <bolalg/cohomology.hpp>
#include <bolalg/errors.hpp>
#include <bolalg/extension.hpp>

namespace bolalg {
namespace {

std::vector<Vec> basis_vectors(std::size_t n) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
    return e;
}

// phi(a*b) = phi(a)*phi(b) and phi[a,b,c] = [phi a, phi b, phi c] on basis tuples of `from`.
void check_homomorphism(IdentityReport& out, const char* bin_id, const char* tri_id, const BolAlgebra& from,
                        const BolAlgebra& to, const Mat& phi, Exec exec) {
    const std::size_t n = from.dim();
    std::vector<Vec> img(n);
    for (std::size_t k = 0; k < n; ++k) img[k] = phi.column(k);
    const auto e = basis_vectors(n);
    out.checks.push_back(check_identity(bin_id, n, 2, [&](std::span<const std::size_t> s) {
        return phi * from.product(e[s[0]], e[s[1]]) - to.product(img[s[0]], img[s[1]]);
    }, exec));
    out.checks.push_back(check_identity(tri_id, n, 3, [&](std::span<const std::size_t> s) {
        return phi * from.triple(e[s[0]], e[s[1]], e[s[2]]) - to.triple(img[s[0]], img[s[1]], img[s[2]]);
    }, exec));
}

IdentityCheck matrix_equal(std::string id, const Mat& a, const Mat& b) {
    IdentityCheck c;
    c.id = std::move(id);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t col = 0; col < a.cols(); ++col)
            if (a(r, col) != b(r, col)) {
                c.pass = false;
                c.witness = Tuple{r, col};
                c.residual = Vec{a(r, col) - b(r, col)};
                return c;
            }
    return c;
}

IdentityCheck rank_equals(std::string id, const Mat& m, std::size_t expected) {
    IdentityCheck c;
    c.id = std::move(id);
    const std::size_t rank = image_rank(m, Exec::serial);
    if (rank != expected) {
        c.pass = false;
        c.witness = Tuple{rank};
        c.residual = Vec{Scalar(static_cast<long>(expected)) - Scalar(static_cast<long>(rank))};
    }
    return c;
}

// [sigma | i]^{-1}; columns of the result give (B part; V part).
Mat splitting_inverse(const AbelianExtension& e) {
    const auto inv = inverse(hconcat(e.sigma(), e.i()));
    if (!inv) throw InputError("sigma", "section and injection do not span the extension");
    return *inv;
}

Vec fiber_part(const Mat& split_inv, const Vec& h, std::size_t n) {
    const Vec full = split_inv * h;
    return Vec(full.begin() + static_cast<std::ptrdiff_t>(n), full.end());
}

void require_valid(const AbelianExtension& e, Exec exec = Exec::parallel) {
    IdentityReport rep = validate_extension(e, exec);
    if (!rep.pass()) throw RejectedInput("invalid abelian extension", std::move(rep));
}

} // namespace

AbelianExtension::AbelianExtension(BolAlgebra hat, BolAlgebra base, Mat i, Mat p, Mat sigma)
    : hat_(std::move(hat)), base_(std::move(base)), i_(std::move(i)), p_(std::move(p)), sigma_(std::move(sigma)) {
    const std::size_t n = base_.dim(), total = hat_.dim();
    if (total < n) throw DimensionError("extension is smaller than its base");
    const std::size_t m = total - n;
    if (i_.rows() != total || i_.cols() != m) throw DimensionError("i must be (n+m) x m");
    if (p_.rows() != n || p_.cols() != total) throw DimensionError("p must be n x (n+m)");
    if (sigma_.rows() != total || sigma_.cols() != n) throw DimensionError("sigma must be (n+m) x n");
}

AbelianExtension AbelianExtension::with_section(Mat sigma) const { return {hat_, base_, i_, p_, std::move(sigma)}; }

IdentityReport validate_extension(const AbelianExtension& e, Exec exec) {
    const std::size_t n = e.base_dim(), m = e.fiber_dim(), total = n + m;
    const BolAlgebra& hat = e.hat();
    IdentityReport out;
    out.checks.push_back(matrix_equal("p-after-i", e.p() * e.i(), Mat(n, m)));
    out.checks.push_back(rank_equals("i-injective", e.i(), m));
    out.checks.push_back(rank_equals("p-surjective", e.p(), n));
    out.checks.push_back(matrix_equal("section", e.p() * e.sigma(), Mat::identity(n)));
    check_homomorphism(out, "p-binary", "p-ternary", hat, e.base(), e.p(), exec);

    std::vector<Vec> iv(m);
    for (std::size_t k = 0; k < m; ++k) iv[k] = e.i().column(k);
    const auto eh = basis_vectors(total);
    out.checks.push_back(check_identity("abelian-binary", m, 2, [&](std::span<const std::size_t> s) {
        return hat.product(iv[s[0]], iv[s[1]]);
    }, exec));
    // (u, v, x): u, v < m index i(V), x < n + m indexes hat.
    out.checks.push_back(check_identity("abelian-ternary", total, 3, [&](std::span<const std::size_t> s) {
        if (s[0] >= m || s[1] >= m) return Vec{};
        const Vec &u = iv[s[0]], &v = iv[s[1]], &x = eh[s[2]];
        Vec r = hat.triple(u, v, x);
        const Vec r2 = hat.triple(u, x, v), r3 = hat.triple(x, u, v);
        r.insert(r.end(), r2.begin(), r2.end());
        r.insert(r.end(), r3.begin(), r3.end());
        return r;
    }, exec));
    IdentityReport bol = verify_bol(hat, exec);
    for (auto& c : bol.checks) c.id = "hat:" + c.id;
    out.append(bol);
    return out;
}

AbelianExtension twisted_product(const Representation& r, const CochainPair& c) {
    IdentityReport check = is_cocycle(r, c);
    if (!check.pass()) throw RejectedInput("cochain is not a cocycle", std::move(check));
    const std::size_t n = r.base_dim(), m = r.module_dim(), total = n + m;
    const BolAlgebra& b = r.base();
    Bilinear mul(total, total);
    Trilinear tri(total, total);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t a = 0; a < n; ++a) mul.at(i, j, a) = b.mul().at(i, j, a);
            for (std::size_t a = 0; a < m; ++a) mul.at(i, j, n + a) = c.nu().at(i, j, a);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t a = 0; a < n; ++a) tri.at(i, j, k, a) = b.tri().at(i, j, k, a);
                for (std::size_t a = 0; a < m; ++a) tri.at(i, j, k, n + a) = c.omega().at(i, j, k, a);
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t a = 0; a < m; ++a) {
                mul.at(i, n + u, n + a) = r.rho(i)(a, u);
                mul.at(n + u, i, n + a) = -r.rho(i)(a, u);
                for (std::size_t j = 0; j < n; ++j) {
                    tri.at(i, j, n + u, n + a) = r.D(i, j)(a, u);
                    tri.at(i, n + u, j, n + a) = -r.theta(i, j)(a, u);
                    tri.at(n + u, i, j, n + a) = r.theta(i, j)(a, u);
                }
            }
    Mat inj(total, m), proj(n, total), sec(total, n);
    for (std::size_t a = 0; a < m; ++a) inj(n + a, a) = 1;
    for (std::size_t i = 0; i < n; ++i) proj(i, i) = sec(i, i) = 1;
    return {BolAlgebra::from_tensors(std::move(mul), std::move(tri)), b, std::move(inj), std::move(proj),
            std::move(sec)};
}

namespace {

Representation read_representation(const AbelianExtension& e) {
    const std::size_t n = e.base_dim(), m = e.fiber_dim();
    const Mat split = splitting_inverse(e);
    const BolAlgebra& hat = e.hat();
    std::vector<Vec> s(n), iv(m);
    for (std::size_t k = 0; k < n; ++k) s[k] = e.sigma().column(k);
    for (std::size_t k = 0; k < m; ++k) iv[k] = e.i().column(k);
    Representation r(e.base(), m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t u = 0; u < m; ++u) {
            const Vec rv = fiber_part(split, hat.product(s[i], iv[u]), n);
            for (std::size_t a = 0; a < m; ++a) r.rho(i)(a, u) = rv[a];
            for (std::size_t j = 0; j < n; ++j) {
                const Vec dv = fiber_part(split, hat.triple(s[i], s[j], iv[u]), n);
                const Vec tv = fiber_part(split, hat.triple(iv[u], s[i], s[j]), n);
                for (std::size_t a = 0; a < m; ++a) {
                    r.D(i, j)(a, u) = dv[a];
                    r.theta(i, j)(a, u) = tv[a];
                }
            }
        }
    return r;
}

CochainPair read_cocycle(const AbelianExtension& e) {
    const std::size_t n = e.base_dim(), m = e.fiber_dim();
    const Mat split = splitting_inverse(e);
    const BolAlgebra& hat = e.hat();
    const BolAlgebra& b = e.base();
    std::vector<Vec> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = e.sigma().column(k);
    const auto eb = basis_vectors(n);
    CochainPair c(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec nv = fiber_part(split, hat.product(s[i], s[j]) - e.sigma() * b.product(eb[i], eb[j]), n);
            std::copy(nv.begin(), nv.end(), c.nu().basis(i, j).begin());
            for (std::size_t k = 0; k < n; ++k) {
                const Vec wv = fiber_part(
                    split, hat.triple(s[i], s[j], s[k]) - e.sigma() * b.triple(eb[i], eb[j], eb[k]), n);
                std::copy(wv.begin(), wv.end(), c.omega().basis(i, j, k).begin());
            }
        }
    return c;
}

} // namespace

Representation induced_representation(const AbelianExtension& e) {
    require_valid(e);
    return read_representation(e);
}

CochainPair induced_cocycle(const AbelianExtension& e) {
    require_valid(e);
    return read_cocycle(e);
}

InducedData induced_data(const AbelianExtension& e, Exec exec) {
    require_valid(e, exec);
    return {read_representation(e), read_cocycle(e)};
}

const char* to_string(EquivalenceStatus s) {
    switch (s) {
    case EquivalenceStatus::equivalent: return "equivalent";
    case EquivalenceStatus::different_representations: return "different-representations";
    case EquivalenceStatus::not_cohomologous: return "not-cohomologous";
    case EquivalenceStatus::cohomologous_uncertified: return "cohomologous-uncertified";
    }
    return "unknown";
}

ExtensionEquivalence extensions_equivalent(const AbelianExtension& e1, const AbelianExtension& e2, Exec exec) {
    if (!(e1.base() == e2.base())) throw InputError("base", "extensions have different base algebras");
    if (e1.fiber_dim() != e2.fiber_dim()) throw InputError("module_dimension", "extensions have different fibers");
    const InducedData d1 = induced_data(e1, exec), d2 = induced_data(e2, exec);
    const Representation& r1 = d1.rep;
    const Representation& r2 = d2.rep;

    ExtensionEquivalence out;
    if (!(r1 == r2)) {
        out.status = EquivalenceStatus::different_representations;
        return out;
    }
    const std::size_t n = e1.base_dim(), m = e1.fiber_dim(), total = n + m;
    const CochainPair &c1 = d1.cocycle, &c2 = d2.cocycle;
    const CochainPair diff = c1 - c2;

    const CoboundaryTest cob = is_coboundary(r1, diff, exec);
    if (!cob.holds) {
        out.status = EquivalenceStatus::not_cohomologous;
        return out;
    }
    out.coboundary_witness = cob.witness;
    const PseudoderivationData& fe = *cob.witness;

    // f_tilde solves diff = coboundary_of(f_tilde, 0); then f_hat = f_tilde - f
    // has coboundary_of(f_hat, -eta) = 0.
    const auto x = solve(coboundary_matrix_without_companion(r1, exec), diff.to_coords(), exec);
    if (!x) {
        out.status = EquivalenceStatus::cohomologous_uncertified;
        return out;
    }
    Mat f_tilde(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a) f_tilde(a, i) = (*x)[i * m + a];
    const Mat f_hat = f_tilde - fe.f;
    out.checks.append(check_pseudoderivation(r1, {f_hat, -fe.chi}, exec));
    for (auto& c : out.checks.checks) c.id = "correction:" + c.id;
    out.correction = f_hat;
    out.f_tilde = f_tilde;

    Mat normal = Mat::identity(total);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a) normal(n + a, i) = f_tilde(a, i);
    const AbelianExtension t1 = twisted_product(r1, c1), t2 = twisted_product(r1, c2);
    check_homomorphism(out.checks, "normal-binary", "normal-ternary", t1.hat(), t2.hat(), normal, exec);

    const Mat s1 = hconcat(e1.sigma(), e1.i()), s2 = hconcat(e2.sigma(), e2.i());
    const auto s1_inv = inverse(s1);
    if (!s1_inv) throw InputError("sigma", "section and injection do not span the extension");
    const Mat phi = s2 * normal * *s1_inv;
    check_homomorphism(out.checks, "phi-binary", "phi-ternary", e1.hat(), e2.hat(), phi, exec);
    out.checks.checks.push_back(matrix_equal("phi-after-i", phi * e1.i(), e2.i()));
    out.checks.checks.push_back(matrix_equal("p-after-phi", e2.p() * phi, e1.p()));
    out.phi_normal = normal;
    out.phi = phi;
    out.status = EquivalenceStatus::equivalent;
    return out;
}

} // namespace bolalg
