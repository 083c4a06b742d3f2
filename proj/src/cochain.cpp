#include <bolalg/cochain.hpp>
#include <bolalg/errors.hpp>

namespace bolalg {

CochainPair::CochainPair(Bilinear nu, Trilinear omega) : nu_(std::move(nu)), omega_(std::move(omega)) {
    if (nu_.in_dim() != omega_.in_dim() || nu_.out_dim() != omega_.out_dim())
        throw DimensionError("cochain pair: nu and omega shapes differ");
}

void CochainPair::set_nu(std::size_t i, std::size_t j, const Vec& v) {
    if (v.size() != module_dim()) throw DimensionError("set_nu: value length mismatch");
    for (std::size_t a = 0; a < v.size(); ++a) {
        nu_.at(i, j, a) = v[a];
        nu_.at(j, i, a) = -v[a];
    }
}

void CochainPair::set_omega(std::size_t i, std::size_t j, std::size_t k, const Vec& v) {
    if (v.size() != module_dim()) throw DimensionError("set_omega: value length mismatch");
    for (std::size_t a = 0; a < v.size(); ++a) {
        omega_.at(i, j, k, a) = v[a];
        omega_.at(j, i, k, a) = -v[a];
    }
}

bool CochainPair::is_antisymmetric() const {
    const std::size_t n = base_dim(), m = module_dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < m; ++a) {
                if (nu_.at(i, j, a) != -nu_.at(j, i, a)) return false;
                for (std::size_t k = 0; k < n; ++k)
                    if (omega_.at(i, j, k, a) != -omega_.at(j, i, k, a)) return false;
            }
    return true;
}

std::size_t CochainPair::nu_coord_count(std::size_t n, std::size_t m) { return n < 2 ? 0 : n * (n - 1) / 2 * m; }

std::size_t CochainPair::coord_count(std::size_t n, std::size_t m) {
    return nu_coord_count(n, m) + nu_coord_count(n, m) * n;
}

Vec CochainPair::to_coords() const {
    const std::size_t n = base_dim(), m = module_dim();
    Vec out;
    out.reserve(coord_count(n, m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t a = 0; a < m; ++a) out.push_back(nu_.at(i, j, a));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t a = 0; a < m; ++a) out.push_back(omega_.at(i, j, k, a));
    return out;
}

CochainPair CochainPair::from_coords(std::size_t n, std::size_t m, const Vec& coords) {
    if (coords.size() != coord_count(n, m)) throw DimensionError("cochain coordinates: length mismatch");
    CochainPair c(n, m);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t a = 0; a < m; ++a, ++pos) {
                c.nu_.at(i, j, a) = coords[pos];
                c.nu_.at(j, i, a) = -coords[pos];
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t a = 0; a < m; ++a, ++pos) {
                    c.omega_.at(i, j, k, a) = coords[pos];
                    c.omega_.at(j, i, k, a) = -coords[pos];
                }
    return c;
}

CochainPair& CochainPair::operator+=(const CochainPair& o) {
    nu_ += o.nu_;
    omega_ += o.omega_;
    return *this;
}

CochainPair& CochainPair::operator-=(const CochainPair& o) {
    nu_ -= o.nu_;
    omega_ -= o.omega_;
    return *this;
}

CochainPair operator*(const Scalar& s, const CochainPair& c) { return CochainPair(s * c.nu_, s * c.omega_); }

} // namespace bolalg
