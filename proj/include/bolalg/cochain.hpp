#ifndef BOLALG_COCHAIN_HPP
#define BOLALG_COCHAIN_HPP

#include <bolalg/linalg.hpp>
#include <bolalg/tensor.hpp>

#include <cstddef>

namespace bolalg {

// Pair (nu, omega): nu is an antisymmetric bilinear map B x B -> V,
// omega a trilinear map B x B x B -> V antisymmetric in its first two slots.
class CochainPair {
public:
    CochainPair() = default;
    CochainPair(std::size_t base_dim, std::size_t module_dim)
        : nu_(base_dim, module_dim), omega_(base_dim, module_dim) {}
    // Throws DimensionError on mismatched shapes; antisymmetry is not forced.
    CochainPair(Bilinear nu, Trilinear omega);

    std::size_t base_dim() const { return nu_.in_dim(); }
    std::size_t module_dim() const { return nu_.out_dim(); }

    const Bilinear& nu() const { return nu_; }
    const Trilinear& omega() const { return omega_; }
    Bilinear& nu() { return nu_; }
    Trilinear& omega() { return omega_; }

    // Sets nu(e_i, e_j) = v and nu(e_j, e_i) = -v.
    void set_nu(std::size_t i, std::size_t j, const Vec& v);
    // Sets omega(e_i, e_j, e_k) = v and omega(e_j, e_i, e_k) = -v.
    void set_omega(std::size_t i, std::size_t j, std::size_t k, const Vec& v);

    bool is_antisymmetric() const;
    bool is_zero() const { return nu_.is_zero() && omega_.is_zero(); }

    // Coordinates on the antisymmetric cochain space: nu(e_i, e_j) for i < j
    // in lexicographic order, then omega(e_i, e_j, e_k) for i < j and all k;
    // the V coordinate is innermost in both blocks.
    static std::size_t coord_count(std::size_t base_dim, std::size_t module_dim);
    static std::size_t nu_coord_count(std::size_t base_dim, std::size_t module_dim);
    Vec to_coords() const;
    static CochainPair from_coords(std::size_t base_dim, std::size_t module_dim, const Vec& coords);

    CochainPair& operator+=(const CochainPair& o);
    CochainPair& operator-=(const CochainPair& o);
    friend CochainPair operator+(CochainPair a, const CochainPair& b) { return a += b; }
    friend CochainPair operator-(CochainPair a, const CochainPair& b) { return a -= b; }
    friend CochainPair operator*(const Scalar& s, const CochainPair& c);
    friend bool operator==(const CochainPair&, const CochainPair&) = default;

private:
    Bilinear nu_;
    Trilinear omega_;
};

} // namespace bolalg

#endif // BOLALG_COCHAIN_HPP
