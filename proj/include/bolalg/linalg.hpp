#ifndef BOLALG_LINALG_HPP
#define BOLALG_LINALG_HPP

#include <bolalg/exec.hpp>
#include <bolalg/scalar.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bolalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);

// out += s * v, skipping when s is zero.
void axpy(Vec& out, const Scalar& s, std::span<const Scalar> v);

// Dense row-major rational matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Mat identity(std::size_t n);
    // Columns given as vectors of equal length `rows`.
    static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;

    const std::vector<Scalar>& data() const { return data_; }

    bool is_zero() const;
    Mat transpose() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);

    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Scalar& s, const Mat& a);
Vec operator*(const Mat& a, std::span<const Scalar> v);
inline Vec operator*(const Mat& a, const Vec& v) { return a * std::span<const Scalar>(v); }

// [a, b] = ab - ba
Mat commutator(const Mat& a, const Mat& b);

// Vertical stacking of matrices with equal column counts.
Mat vstack(const std::vector<Mat>& blocks);
// Horizontal concatenation [a | b].
Mat hconcat(const Mat& a, const Mat& b);

Vec flatten(const Mat& m);

struct RrefResult {
    Mat reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    std::size_t rank = 0;
};

// Reduced row-echelon form by Gauss-Jordan elimination with first-nonzero
// pivoting. The result is the unique RREF of `m`, so every execution path
// returns the same matrix. The parallel path reduces row blocks
// independently and merges them pairwise.
RrefResult rref(const Mat& m, Exec exec = Exec::parallel);

// Basis of {v : m v = 0}, one vector per free column in increasing column
// order; the free coordinate is 1 and the other free coordinates are 0.
std::vector<Vec> kernel_basis(const Mat& m, Exec exec = Exec::parallel);
std::vector<Vec> kernel_basis(const RrefResult& r, std::size_t cols);

std::size_t image_rank(const Mat& m, Exec exec = Exec::parallel);

// Particular solution of m x = b with free variables set to zero, or nullopt
// when the system is inconsistent. Throws DimensionError if b.size() != rows.
std::optional<Vec> solve(const Mat& m, const Vec& b, Exec exec = Exec::parallel);

// Inverse of a square matrix, nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

namespace reference {

// Textbook single-pass Gauss-Jordan elimination; kept as the baseline the
// parallel elimination is checked and benchmarked against.
RrefResult rref(const Mat& m);

} // namespace reference

} // namespace bolalg

#endif // BOLALG_LINALG_HPP
