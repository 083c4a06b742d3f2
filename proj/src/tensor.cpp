#include <bolalg/errors.hpp>
#include <bolalg/tensor.hpp>

namespace bolalg {

Vec Bilinear::operator()(const Vec& x, const Vec& y) const {
    if (x.size() != in_ || y.size() != in_) throw DimensionError("bilinear evaluation: argument length mismatch");
    Vec out(out_);
    for (std::size_t i = 0; i < in_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < in_; ++j) {
            if (sgn(y[j]) == 0) continue;
            axpy(out, x[i] * y[j], basis(i, j));
        }
    }
    return out;
}

Bilinear& Bilinear::operator+=(const Bilinear& o) {
    if (in_ != o.in_ || out_ != o.out_) throw DimensionError("bilinear add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Bilinear& Bilinear::operator-=(const Bilinear& o) {
    if (in_ != o.in_ || out_ != o.out_) throw DimensionError("bilinear subtract: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Bilinear operator*(const Scalar& s, Bilinear b) {
    for (auto& x : b.data_) x *= s;
    return b;
}

Vec Trilinear::operator()(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != in_ || y.size() != in_ || z.size() != in_)
        throw DimensionError("trilinear evaluation: argument length mismatch");
    Vec out(out_);
    for (std::size_t i = 0; i < in_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < in_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < in_; ++k) {
                if (sgn(z[k]) == 0) continue;
                axpy(out, xy * z[k], basis(i, j, k));
            }
        }
    }
    return out;
}

Trilinear& Trilinear::operator+=(const Trilinear& o) {
    if (in_ != o.in_ || out_ != o.out_) throw DimensionError("trilinear add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Trilinear& Trilinear::operator-=(const Trilinear& o) {
    if (in_ != o.in_ || out_ != o.out_) throw DimensionError("trilinear subtract: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Trilinear operator*(const Scalar& s, Trilinear t) {
    for (auto& x : t.data_) x *= s;
    return t;
}

} // namespace bolalg
