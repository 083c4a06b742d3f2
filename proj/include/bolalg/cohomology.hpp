#ifndef BOLALG_COHOMOLOGY_HPP
#define BOLALG_COHOMOLOGY_HPP

#include <bolalg/cochain.hpp>
#include <bolalg/report.hpp>
#include <bolalg/representation.hpp>

#include <optional>
#include <vector>

namespace bolalg {

// CC1 on triples, CC2 on (x1,x2,y1,y2), CC3 on (x1,x2,y1,y2,y3).
// Throws DimensionError if the cochain does not match the representation.
IdentityReport is_cocycle(const Representation& r, const CochainPair& c, Exec exec = Exec::parallel);

// (nu, omega) given by BB1 and BB2 for the pair (f, chi).
CochainPair coboundary_of(const Representation& r, const PseudoderivationData& p);

// Columns: cochain coordinates of coboundary_of on each parameter unit vector.
Mat coboundary_matrix(const Representation& r, Exec exec = Exec::parallel);
// Same, restricted to chi = 0 (only the n*m columns of f).
Mat coboundary_matrix_without_companion(const Representation& r, Exec exec = Exec::parallel);

// RREF of the CC1-CC3 constraints on cochain coordinates. Rows are
// generated tuple by tuple and reduced in chunks, which leaves the unique
// RREF of the full constraint matrix.
RrefResult cocycle_constraints(const Representation& r, Exec exec = Exec::parallel);

struct CoboundaryTest {
    bool holds = false;
    std::optional<PseudoderivationData> witness;
};

// Solves coboundary_of(r, (f, chi)) = c.
CoboundaryTest is_coboundary(const Representation& r, const CochainPair& c, Exec exec = Exec::parallel);

struct CohomologyReport {
    std::size_t dim_C = 0;
    std::size_t dim_C_nu = 0; // nu block of the ambient space
    std::size_t dim_Z = 0;
    std::size_t dim_B = 0;
    std::size_t dim_H = 0;
    std::size_t dim_pseudoderivations = 0;
    std::vector<CochainPair> z_basis;
    std::vector<CochainPair> b_basis;
    std::vector<CochainPair> h_representatives;
};

CohomologyReport cohomology(const Representation& r, Exec exec = Exec::parallel);

} // namespace bolalg

#endif // BOLALG_COHOMOLOGY_HPP
