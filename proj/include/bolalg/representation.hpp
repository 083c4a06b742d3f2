#ifndef BOLALG_REPRESENTATION_HPP
#define BOLALG_REPRESENTATION_HPP

#include <bolalg/algebra.hpp>
#include <bolalg/linalg.hpp>
#include <bolalg/report.hpp>

#include <cstddef>
#include <vector>

namespace bolalg {

// Maps rho: B -> End(V) and D, theta: B x B -> End(V) on basis elements.
// Column c of rho(i) is the image of the c-th basis vector of V.
class Representation {
public:
    Representation() = default;
    // All maps zero.
    Representation(BolAlgebra base, std::size_t module_dim);
    // d and theta are indexed i * n + j. Throws DimensionError on bad shapes.
    Representation(BolAlgebra base, std::size_t module_dim, std::vector<Mat> rho, std::vector<Mat> d,
                   std::vector<Mat> theta);

    const BolAlgebra& base() const { return base_; }
    std::size_t base_dim() const { return base_.dim(); }
    std::size_t module_dim() const { return m_; }

    const Mat& rho(std::size_t i) const { return rho_[i]; }
    const Mat& D(std::size_t i, std::size_t j) const { return d_[i * base_dim() + j]; }
    const Mat& theta(std::size_t i, std::size_t j) const { return theta_[i * base_dim() + j]; }
    Mat& rho(std::size_t i) { return rho_[i]; }
    Mat& D(std::size_t i, std::size_t j) { return d_[i * base_dim() + j]; }
    Mat& theta(std::size_t i, std::size_t j) { return theta_[i * base_dim() + j]; }

    // Linear and bilinear extensions to coordinate vectors of B.
    Mat rho_of(const Vec& x) const;
    Mat D_of(const Vec& x, const Vec& y) const;
    Mat theta_of(const Vec& x, const Vec& y) const;

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.base_ == b.base_ && a.m_ == b.m_ && a.rho_ == b.rho_ && a.d_ == b.d_ && a.theta_ == b.theta_;
    }

private:
    BolAlgebra base_;
    std::size_t m_ = 0;
    std::vector<Mat> rho_;
    std::vector<Mat> d_;
    std::vector<Mat> theta_;
};

// Linear map f: B -> V (m x n, column i = f(e_i)) with companion chi in V.
struct PseudoderivationData {
    Mat f;
    Vec chi;

    static PseudoderivationData zero(std::size_t base_dim, std::size_t module_dim) {
        return {Mat(module_dim, base_dim), Vec(module_dim)};
    }
    friend bool operator==(const PseudoderivationData&, const PseudoderivationData&) = default;
};

// R1, R21, R22, R31, R32, R33 as m x m matrix identities on basis tuples.
IdentityReport verify_representation(const Representation& r, Exec exec = Exec::parallel);

// V = B with rho(u)v = u*v, D(u,v)w = [u,v,w], theta(u,v)w = [w,u,v].
// Throws RejectedInput when the algebra fails verify_bol.
Representation adjoint_representation(const BolAlgebra& b);

// Module condition for rho over a Maltsev algebra:
// [[rho x, rho y] + rho(xy), rho z] = rho(x(yz) - y(xz) + (xy)z).
IdentityReport check_maltsev_module(const MaltsevAlgebra& m, const std::vector<Mat>& rho,
                                    Exec exec = Exec::parallel);
// Equivalent form using Jordan products {a, b} = ab + ba:
// rho(x(yz)) - rho z {rho x, rho y} + rho y {rho x, rho z}
//   = {rho x, rho(yz)} - rho z rho(xy) + rho y rho(xz).
IdentityReport check_maltsev_module_jordan(const MaltsevAlgebra& m, const std::vector<Mat>& rho,
                                           Exec exec = Exec::parallel);

// Representation of the associated Bol algebra:
// theta(x,y) = (rho x rho y + 2 rho y rho x - rho(xy)) / 3,
// D(x,y) = ([rho x, rho y] + 2 rho(xy)) / 3.
// Throws RejectedInput if m is not Maltsev or rho fails check_maltsev_module.
Representation induce_from_maltsev(const MaltsevAlgebra& m, const std::vector<Mat>& rho);

// D(e_i, e_j) - rho(e_i * e_j).
Mat delta(const Representation& r, std::size_t i, std::size_t j);
Mat delta_of(const Representation& r, const Vec& x, const Vec& y);

// [Delta(x1,x2), Delta(y1,y2)] = Delta([x1,x2,y1], y2) + Delta(y1, [x1,x2,y2]) - Delta(y1 y2, x1 x2).
IdentityReport check_delta_identity(const Representation& r, Exec exec = Exec::parallel);

// f(x1 x2) = rho(x1) f(x2) - rho(x2) f(x1) + Delta(x1,x2) chi and
// f([x1,x2,x3]) = theta(x2,x3) f(x1) - theta(x1,x3) f(x2) + D(x1,x2) f(x3).
IdentityReport check_pseudoderivation(const Representation& r, const PseudoderivationData& p,
                                      Exec exec = Exec::parallel);
bool is_pseudoderivation(const Representation& r, const PseudoderivationData& p);

// Basis of the kernel of (f, chi) -> coboundary.
std::vector<PseudoderivationData> pseudoderivation_space(const Representation& r, Exec exec = Exec::parallel);

// Parameter coordinates: f(e_i)_a at i * m + a, then chi_a at n * m + a.
Vec to_params(const PseudoderivationData& p);
PseudoderivationData from_params(std::size_t base_dim, std::size_t module_dim, const Vec& params);

} // namespace bolalg

#endif // BOLALG_REPRESENTATION_HPP
