#include <bolalg/cohomology.hpp>
#include <bolalg/errors.hpp>
#include <bolalg/extension.hpp>

#include "corpus.hpp"

#include <doctest.h>

using namespace bolalg;

namespace {

Mat perturbed_section(const AbelianExtension& e, corpus::Rng& gen) {
    // sigma + i g for a random linear g: B -> V
    const std::size_t n = e.base_dim(), m = e.fiber_dim();
    Mat g(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = corpus::random_scalar(gen);
    return e.sigma() + e.i() * g;
}

} // namespace

TEST_CASE("twisted product is a valid extension and round trips") {
    corpus::Rng gen(2);
    for (const auto& [name, rep] : corpus::fixed_representations()) {
        CAPTURE(name);
        const auto coh = cohomology(rep);
        const std::size_t n = rep.base_dim(), m = rep.module_dim();
        const CochainPair c = corpus::random_combination(coh.z_basis, n, m, gen);
        const AbelianExtension e = twisted_product(rep, c);
        CHECK(validate_extension(e).pass());
        CHECK(verify_bol(e.hat()).pass());
        CHECK(induced_representation(e) == rep);
        CHECK(induced_cocycle(e) == c);
        const InducedData d = induced_data(e, Exec::serial);
        CHECK(d.rep == rep);
        CHECK(d.cocycle == c);
    }
}

TEST_CASE("twisted product rejects a non-cocycle") {
    const Representation rep = adjoint_representation(two_dim_bol(1));
    CochainPair c(2, 2);
    c.set_omega(0, 1, 0, unit_vec(2, 0));
    CHECK_THROWS_AS(twisted_product(rep, c), RejectedInput);
}

TEST_CASE("section changes keep the representation and shift the cocycle by a coboundary") {
    corpus::Rng gen(6);
    const Representation rep = corpus::example_m0();
    const auto coh = cohomology(rep);
    const CochainPair c = corpus::random_combination(coh.z_basis, 2, 2, gen);
    const AbelianExtension e = twisted_product(rep, c);
    for (int k = 0; k < 3; ++k) {
        const AbelianExtension e2 = e.with_section(perturbed_section(e, gen));
        CHECK(validate_extension(e2).pass());
        CHECK(induced_representation(e2) == rep);
        const CochainPair c2 = induced_cocycle(e2);
        CHECK(is_cocycle(rep, c2).pass());
        CHECK(is_coboundary(rep, c2 - c).holds);
    }
}

TEST_CASE("a non-section and a non-exact pair are reported") {
    const Representation rep = adjoint_representation(two_dim_bol(1));
    const AbelianExtension e = twisted_product(rep, CochainPair(2, 2));
    const AbelianExtension bad = e.with_section(Mat(4, 2));
    const auto r = validate_extension(bad);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.at("section").pass);
    CHECK_THROWS_AS(induced_representation(bad), RejectedInput);
    CHECK_THROWS_AS(AbelianExtension(e.hat(), e.base(), Mat(4, 3), e.p(), e.sigma()), DimensionError);
}

TEST_CASE("extension equivalence, f-only shift") {
    corpus::Rng gen(14);
    for (const auto& [name, rep] : corpus::fixed_representations()) {
        CAPTURE(name);
        const std::size_t n = rep.base_dim(), m = rep.module_dim();
        const auto coh = cohomology(rep);
        const CochainPair c = corpus::random_combination(coh.z_basis, n, m, gen);
        PseudoderivationData p = corpus::random_params(n, m, gen);
        p.chi = Vec(m);
        const auto r = extensions_equivalent(twisted_product(rep, c), twisted_product(rep, c + coboundary_of(rep, p)));
        CHECK(r.status == EquivalenceStatus::equivalent);
        CHECK(r.equivalent());
        CHECK(r.checks.pass());
        REQUIRE(r.phi);
    }
}

TEST_CASE("extension equivalence through a non-canonical presentation") {
    corpus::Rng gen(15);
    const Representation rep = adjoint_representation(two_dim_bol(-1));
    const auto coh = cohomology(rep);
    const CochainPair c = corpus::random_combination(coh.z_basis, 2, 2, gen);
    const AbelianExtension e1 = twisted_product(rep, c);
    const AbelianExtension e2 = e1.with_section(perturbed_section(e1, gen));
    const auto r = extensions_equivalent(e1, e2);
    CHECK(r.equivalent());
}

TEST_CASE("a companion that cannot be absorbed") {
    // Adjoint of B2(1): (f, chi) = (0, e1) gives nu(e1, e2) = 2 e2. No map
    // x + u -> x + g(x) + u intertwines the twisted products.
    const Representation rep = adjoint_representation(two_dim_bol(1));
    PseudoderivationData p = PseudoderivationData::zero(2, 2);
    p.chi = unit_vec(2, 0);
    const auto r = extensions_equivalent(twisted_product(rep, CochainPair(2, 2)), twisted_product(rep, coboundary_of(rep, p)));
    CHECK(r.status == EquivalenceStatus::cohomologous_uncertified);
    CHECK_FALSE(r.equivalent());
    CHECK(r.coboundary_witness);
}

TEST_CASE("different classes are not equivalent") {
    const Representation rep = adjoint_representation(two_dim_bol(1));
    const auto coh = cohomology(rep);
    const auto r = extensions_equivalent(twisted_product(rep, CochainPair(2, 2)), twisted_product(rep, coh.h_representatives[0]));
    CHECK(r.status == EquivalenceStatus::not_cohomologous);

    const auto r2 = extensions_equivalent(twisted_product(rep, CochainPair(2, 2)),
                                          twisted_product(Representation(two_dim_bol(1), 2), CochainPair(2, 2)));
    CHECK(r2.status == EquivalenceStatus::different_representations);

    CHECK_THROWS_AS(extensions_equivalent(twisted_product(rep, CochainPair(2, 2)),
                                          twisted_product(Representation(two_dim_bol(1), 1), CochainPair(2, 1))),
                    InputError);
}
