#ifndef BOLALG_DEFORMATION_HPP
#define BOLALG_DEFORMATION_HPP

#include <bolalg/algebra.hpp>
#include <bolalg/cochain.hpp>
#include <bolalg/cohomology.hpp>
#include <bolalg/report.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace bolalg {

// Infinitesimal data (nu, omega) with values in the algebra itself.
struct DeformationDatum {
    BolAlgebra base;
    CochainPair pair;

    // Throws DimensionError unless pair is B x B -> B.
    DeformationDatum(BolAlgebra b, CochainPair c);
};

// Triple (mu, nu, omega) on one space.
struct DeformationTypeCandidate {
    Bilinear mu;
    Bilinear nu;
    Trilinear omega;
};

// B01', B02', B03' (antisymmetries), B1', B2', B3' on basis tuples.
IdentityReport is_deformation_type(const DeformationTypeCandidate& d, Exec exec = Exec::parallel);

// x *_t y = x*y + t nu(x,y), [x,y,z]_t = [x,y,z] + t omega(x,y,z).
BolAlgebra deformed_algebra(const DeformationDatum& d, const Scalar& t);

struct InfinitesimalReport {
    IdentityReport deformation_type; // (*, nu, omega)
    IdentityReport cocycle;          // adjoint coefficients
    bool predicate = false;          // both of the above
    // nu(nu(y1,y2), nu(x1,x2)) = 0: the t^3 part of B2 for B_t, which the
    // predicate does not contain.
    IdentityCheck cubic_term;
    std::vector<std::pair<Scalar, IdentityReport>> samples; // verify_bol(B_t)
    bool sampling = false;
    bool routes_agree = false;
    // B_t is a Bol algebra for every t.
    bool generates() const { return sampling; }
};

// The sample points; every axiom of B_t is a polynomial of degree <= 3 in t.
const std::vector<Scalar>& deformation_sample_points();

InfinitesimalReport generates_infinitesimal_deformation(const DeformationDatum& d, Exec exec = Exec::parallel);

// Order-1 formal deformation equations for (F1, G1) = (nu, omega), with
// ids: F1-antisymmetry, G1-antisymmetry, order1-cyclic, order1-binary,
// order1-ternary, order2-binary, order2-ternary, order3-binary.
IdentityReport check_first_order_formal(const DeformationDatum& d, Exec exec = Exec::parallel);

struct FirstOrderEquivalence {
    // (F1' - F1, G1' - G1) = (x1*phi(x2) - x2*phi(x1) - phi(x1 x2),
    //   [x1,x2,phi x3] + [phi x1,x2,x3] - [phi x2,x1,x3] - phi[x1,x2,x3]).
    bool direct = false;
    std::optional<Mat> phi;
    // Coboundary in the adjoint representation with companion eta
    // restricted to the common kernel of all Delta(e_i, e_j).
    bool companion = false;
    std::optional<PseudoderivationData> companion_witness;
    bool routes_agree = false;
    bool equivalent() const { return direct; }
};

// d2 relative to d1. Throws DimensionError unless both are over `base`.
FirstOrderEquivalence first_order_equivalent(const BolAlgebra& base, const DeformationDatum& d1,
                                             const DeformationDatum& d2, Exec exec = Exec::parallel);

} // namespace bolalg

#endif // BOLALG_DEFORMATION_HPP
