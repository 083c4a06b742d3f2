#ifndef BOLALG_ALGEBRA_HPP
#define BOLALG_ALGEBRA_HPP

#include <bolalg/linalg.hpp>
#include <bolalg/report.hpp>
#include <bolalg/tensor.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bolalg {

// Product of basis elements e_i * e_j (i < j); the (j, i) entry is implied.
struct BinaryEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    Vec value;
};

// Ternary product [e_i, e_j, e_k] with i < j; [e_j, e_i, e_k] is implied.
struct TernaryEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Vec value;
};

// Anticommutative algebra given by structure constants.
class MaltsevAlgebra {
public:
    MaltsevAlgebra() = default;
    explicit MaltsevAlgebra(std::size_t n) : mul_(n, n) {}

    // Fills the (j, i) entries by antisymmetry. Throws InputError on a
    // diagonal or reversed pair, a duplicate, an index out of range or a
    // value of the wrong length.
    static MaltsevAlgebra from_entries(std::size_t n, const std::vector<BinaryEntry>& entries);
    // Takes the tensor as is; anticommutativity is left to verify_maltsev.
    static MaltsevAlgebra from_tensor(Bilinear mul);

    std::size_t dim() const { return mul_.in_dim(); }
    const Bilinear& mul() const { return mul_; }

    const std::vector<std::string>& basis_names() const { return names_; }
    void set_basis_names(std::vector<std::string> names);

    friend bool operator==(const MaltsevAlgebra& a, const MaltsevAlgebra& b) { return a.mul_ == b.mul_; }

private:
    Bilinear mul_;
    std::vector<std::string> names_;
};

// Binary operation plus ternary operation.
class BolAlgebra {
public:
    BolAlgebra() = default;
    explicit BolAlgebra(std::size_t n) : mul_(n, n), tri_(n, n) {}

    static BolAlgebra from_entries(std::size_t n, const std::vector<BinaryEntry>& binary,
                                   const std::vector<TernaryEntry>& ternary);
    static BolAlgebra from_tensors(Bilinear mul, Trilinear tri);

    std::size_t dim() const { return mul_.in_dim(); }
    const Bilinear& mul() const { return mul_; }
    const Trilinear& tri() const { return tri_; }

    Vec product(const Vec& x, const Vec& y) const { return mul_(x, y); }
    Vec triple(const Vec& x, const Vec& y, const Vec& z) const { return tri_(x, y, z); }

    const std::vector<std::string>& basis_names() const { return names_; }
    void set_basis_names(std::vector<std::string> names);

    friend bool operator==(const BolAlgebra& a, const BolAlgebra& b) { return a.mul_ == b.mul_ && a.tri_ == b.tri_; }

private:
    Bilinear mul_;
    Trilinear tri_;
    std::vector<std::string> names_;
};

// B_2(lambda): e1*e2 = -e2, [e1,e2,e1] = lambda e2 (0-based: e0, e1).
BolAlgebra two_dim_bol(const Scalar& lambda);

Vec bilinear_eval(const MaltsevAlgebra& a, const Vec& x, const Vec& y);
Vec bilinear_eval(const BolAlgebra& a, const Vec& x, const Vec& y);
Vec trilinear_eval(const BolAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

// Checks B01, B02, B1, B2, B3 on basis tuples, in that order.
IdentityReport verify_bol(const BolAlgebra& b, Exec exec = Exec::parallel);

// Checks anticommutativity and (xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y.
// The identity is quadratic in x, so x runs over e_i (witness (i,i,y,z))
// and e_i + e_j (witness (i,j,y,z), i < j).
IdentityReport verify_maltsev(const MaltsevAlgebra& m, Exec exec = Exec::parallel);

// [x,y,z] = (x(yz) - y(xz) + 2(xy)z) / 3 on the same binary tensor.
// Throws RejectedInput when verify_maltsev fails.
BolAlgebra maltsev_to_bol(const MaltsevAlgebra& m);

} // namespace bolalg

#endif // BOLALG_ALGEBRA_HPP
