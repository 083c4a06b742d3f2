#ifndef BOLALG_TENSOR_HPP
#define BOLALG_TENSOR_HPP

#include <bolalg/linalg.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace bolalg {

// Bilinear map K^in x K^in -> K^out stored by basis images:
// at(i, j, a) is the a-th output coordinate of (e_i, e_j).
class Bilinear {
public:
    Bilinear() = default;
    Bilinear(std::size_t in_dim, std::size_t out_dim)
        : in_(in_dim), out_(out_dim), data_(in_dim * in_dim * out_dim) {}

    std::size_t in_dim() const { return in_; }
    std::size_t out_dim() const { return out_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t a) { return data_[(i * in_ + j) * out_ + a]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t a) const { return data_[(i * in_ + j) * out_ + a]; }

    std::span<const Scalar> basis(std::size_t i, std::size_t j) const { return {data_.data() + (i * in_ + j) * out_, out_}; }
    std::span<Scalar> basis(std::size_t i, std::size_t j) { return {data_.data() + (i * in_ + j) * out_, out_}; }

    Vec operator()(const Vec& x, const Vec& y) const;

    bool is_zero() const { return bolalg::is_zero(std::span<const Scalar>(data_)); }
    const std::vector<Scalar>& data() const { return data_; }

    Bilinear& operator+=(const Bilinear& o);
    Bilinear& operator-=(const Bilinear& o);
    friend Bilinear operator*(const Scalar& s, Bilinear b);
    friend bool operator==(const Bilinear&, const Bilinear&) = default;

private:
    std::size_t in_ = 0;
    std::size_t out_ = 0;
    std::vector<Scalar> data_;
};

// Trilinear map; at(i, j, k, a) is the a-th coordinate of (e_i, e_j, e_k).
class Trilinear {
public:
    Trilinear() = default;
    Trilinear(std::size_t in_dim, std::size_t out_dim)
        : in_(in_dim), out_(out_dim), data_(in_dim * in_dim * in_dim * out_dim) {}

    std::size_t in_dim() const { return in_; }
    std::size_t out_dim() const { return out_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t a) { return data_[offset(i, j, k) + a]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t a) const { return data_[offset(i, j, k) + a]; }

    std::span<const Scalar> basis(std::size_t i, std::size_t j, std::size_t k) const { return {data_.data() + offset(i, j, k), out_}; }
    std::span<Scalar> basis(std::size_t i, std::size_t j, std::size_t k) { return {data_.data() + offset(i, j, k), out_}; }

    Vec operator()(const Vec& x, const Vec& y, const Vec& z) const;

    bool is_zero() const { return bolalg::is_zero(std::span<const Scalar>(data_)); }
    const std::vector<Scalar>& data() const { return data_; }

    Trilinear& operator+=(const Trilinear& o);
    Trilinear& operator-=(const Trilinear& o);
    friend Trilinear operator*(const Scalar& s, Trilinear t);
    friend bool operator==(const Trilinear&, const Trilinear&) = default;

private:
    std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const { return ((i * in_ + j) * in_ + k) * out_; }

    std::size_t in_ = 0;
    std::size_t out_ = 0;
    std::vector<Scalar> data_;
};

} // namespace bolalg

#endif // BOLALG_TENSOR_HPP
