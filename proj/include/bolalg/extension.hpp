#ifndef BOLALG_EXTENSION_HPP
#define BOLALG_EXTENSION_HPP

#include <bolalg/algebra.hpp>
#include <bolalg/cochain.hpp>
#include <bolalg/report.hpp>
#include <bolalg/representation.hpp>

#include <optional>

namespace bolalg {

// 0 -> V -i-> hat -p-> base -> 0 with a section sigma of p.
// i is (n+m) x m, p is n x (n+m), sigma is (n+m) x n.
class AbelianExtension {
public:
    AbelianExtension() = default;
    // Checks shapes only (DimensionError); see validate_extension.
    AbelianExtension(BolAlgebra hat, BolAlgebra base, Mat i, Mat p, Mat sigma);

    const BolAlgebra& hat() const { return hat_; }
    const BolAlgebra& base() const { return base_; }
    const Mat& i() const { return i_; }
    const Mat& p() const { return p_; }
    const Mat& sigma() const { return sigma_; }
    std::size_t base_dim() const { return base_.dim(); }
    std::size_t fiber_dim() const { return i_.cols(); }

    // Same extension with another section.
    AbelianExtension with_section(Mat sigma) const;

private:
    BolAlgebra hat_;
    BolAlgebra base_;
    Mat i_;
    Mat p_;
    Mat sigma_;
};

// Exactness, p sigma = id, p a homomorphism, i(V) an abelian ideal,
// and hat a Bol algebra (ids prefixed "hat:").
IdentityReport validate_extension(const AbelianExtension& e, Exec exec = Exec::parallel);

// Base basis e_0..e_{n-1} followed by V basis; operations
// (x1+u1)*(x2+u2) = x1*x2 + nu(x1,x2) + rho(x1)u2 - rho(x2)u1,
// [x1+u1, x2+u2, x3+u3] = [x1,x2,x3] + omega(x1,x2,x3) + D(x1,x2)u3
//   - theta(x1,x3)u2 + theta(x2,x3)u1,
// with the canonical injection, projection and section.
// Throws RejectedInput when c fails is_cocycle.
AbelianExtension twisted_product(const Representation& r, const CochainPair& c);

// rho(x)u = sigma(x)*u, D(x1,x2)u = [sigma x1, sigma x2, u],
// theta(x1,x2)u = [u, sigma x1, sigma x2], read in V coordinates through the
// splitting hat = sigma(B) + i(V). Throw RejectedInput for an invalid extension.
Representation induced_representation(const AbelianExtension& e);
// nu(x1,x2) = sigma x1 * sigma x2 - sigma(x1 x2) and the ternary analogue.
CochainPair induced_cocycle(const AbelianExtension& e);

struct InducedData {
    Representation rep;
    CochainPair cocycle;
};
// Both of the above with a single validation pass.
InducedData induced_data(const AbelianExtension& e, Exec exec = Exec::parallel);

enum class EquivalenceStatus {
    equivalent,
    different_representations,
    not_cohomologous,
    // The cocycles differ by a coboundary whose companion cannot be
    // absorbed by a companion-free correction; no map x + u -> x + f(x) + u
    // intertwines the two extensions.
    cohomologous_uncertified,
};

const char* to_string(EquivalenceStatus s);

struct ExtensionEquivalence {
    EquivalenceStatus status = EquivalenceStatus::not_cohomologous;
    // (f, eta) with c1 - c2 = coboundary_of(f, eta).
    std::optional<PseudoderivationData> coboundary_witness;
    // f_hat: pseudoderivation with companion -eta; f_tilde = f + f_hat.
    std::optional<Mat> correction;
    std::optional<Mat> f_tilde;
    // x + u -> x + f_tilde(x) + u between the twisted products.
    std::optional<Mat> phi_normal;
    // The same map between the given algebras: hat1 -> hat2.
    std::optional<Mat> phi;
    IdentityReport checks;

    bool equivalent() const { return status == EquivalenceStatus::equivalent && checks.pass(); }
};

// Throws InputError when the extensions have different base algebras or
// fiber dimensions, RejectedInput when either fails validate_extension.
ExtensionEquivalence extensions_equivalent(const AbelianExtension& e1, const AbelianExtension& e2,
                                           Exec exec = Exec::parallel);

} // namespace bolalg

#endif // BOLALG_EXTENSION_HPP
