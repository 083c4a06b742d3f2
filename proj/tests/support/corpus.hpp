#ifndef BOLALG_TESTS_CORPUS_HPP
#define BOLALG_TESTS_CORPUS_HPP

#include <bolalg/algebra.hpp>
#include <bolalg/cochain.hpp>
#include <bolalg/representation.hpp>

#include <random>
#include <string>
#include <vector>

namespace corpus {

using namespace bolalg;

using Rng = std::mt19937_64;

// Small rationals p/q with |p| <= 3, q in {1, 2, 3}.
Scalar random_scalar(Rng& gen);
Vec random_vec(std::size_t n, Rng& gen);
// Product of random unit lower and upper triangular matrices.
Mat random_invertible(std::size_t n, Rng& gen);

// The 4-dimensional Maltsev algebra e1e2 = -e2, e1e3 = -e3, e1e4 = e4,
// e2e3 = 2e4, and its subalgebra M0 = span{e1, e2}.
MaltsevAlgebra maltsev4();
MaltsevAlgebra m0();
// rho of M0 on span{e3, e4}.
std::vector<Mat> m0_module();
Representation example_m0();

MaltsevAlgebra so3();
BolAlgebra so3_bol();

// Same structure after the change of basis f_i = Q e_i, and for
// representations also f'_a = P e'_a on the module.
BolAlgebra transport(const BolAlgebra& b, const Mat& q);
Representation transport(const Representation& r, const Mat& q, const Mat& p);
Representation direct_sum(const Representation& a, const Representation& b);

struct Named {
    std::string name;
    Representation rep;
};

// Adjoint of B_2(lambda) with lambda in {-1, 0, 1, 5/3}, the M0 module, and
// zero representations.
std::vector<Named> fixed_representations();
// Random base and module changes of basis applied to known representations,
// some of them direct sums; every one passes verify_representation.
std::vector<Named> random_representations(std::size_t count, std::uint64_t seed);

CochainPair random_combination(const std::vector<CochainPair>& basis, std::size_t n, std::size_t m, Rng& gen);
CochainPair random_cochain(std::size_t n, std::size_t m, Rng& gen);
PseudoderivationData random_params(std::size_t n, std::size_t m, Rng& gen);

} // namespace corpus

#endif // BOLALG_TESTS_CORPUS_HPP
