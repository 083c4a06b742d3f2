#include <bolalg/errors.hpp>
#include <bolalg/linalg.hpp>

#include <algorithm>
#include <utility>

namespace bolalg {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

static void check_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw DimensionError(std::string(what) + ": size mismatch");
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    return r += b;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    return r -= b;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& a) {
    Vec r(a.size());
    if (sgn(s) == 0) return r;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
    check_same(a.size(), b.size(), "vector add");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    check_same(a.size(), b.size(), "vector subtract");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] -= b[i];
    return a;
}

void axpy(Vec& out, const Scalar& s, std::span<const Scalar> v) {
    check_same(out.size(), v.size(), "axpy");
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out[i] += s * v[i];
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size != rows * cols");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        check_same(cols[c].size(), rows, "from_columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vec Mat::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Mat::is_zero() const { return bolalg::is_zero(std::span<const Scalar>(data_)); }

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix subtract: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0) data_[i] -= o.data_[i];
    return *this;
}

Mat operator+(const Mat& a, const Mat& b) {
    Mat r = a;
    return r += b;
}

Mat operator-(const Mat& a, const Mat& b) {
    Mat r = a;
    return r -= b;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    Mat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
        }
    return r;
}

Mat operator*(const Scalar& s, const Mat& a) {
    Mat r(a.rows(), a.cols());
    if (sgn(s) == 0) return r;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

Vec operator*(const Mat& a, std::span<const Scalar> v) {
    check_same(a.cols(), v.size(), "matrix-vector product");
    Vec r(a.rows());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (sgn(a(i, k)) != 0) r[i] += a(i, k) * v[k];
    }
    return r;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat vstack(const std::vector<Mat>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = 0;
    const std::size_t cols = blocks.front().cols();
    for (const auto& b : blocks) {
        check_same(b.cols(), cols, "vstack");
        rows += b.rows();
    }
    std::vector<Scalar> data;
    data.reserve(rows * cols);
    for (const auto& b : blocks) data.insert(data.end(), b.data().begin(), b.data().end());
    return Mat(rows, cols, std::move(data));
}

Mat hconcat(const Mat& a, const Mat& b) {
    check_same(a.rows(), b.rows(), "hconcat");
    Mat r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Vec flatten(const Mat& m) { return m.data(); }

namespace {

using Rows = std::vector<Vec>;

// Gauss-Jordan on a list of rows; returns only the nonzero rows of the RREF
// together with their pivot columns. Skips zero entries throughout, which
// matters for the very sparse constraint systems built from basis tuples.
std::pair<Rows, std::vector<std::size_t>> reduce_rows(Rows rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && prow < rows.size(); ++c) {
        std::size_t r = prow;
        while (r < rows.size() && sgn(rows[r][c]) == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[prow], rows[r]);

        Vec& piv = rows[prow];
        if (piv[c] != 1) {
            const Scalar inv = 1 / piv[c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(piv[j]) != 0) piv[j] *= inv;
        }
        support.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(piv[j]) != 0) support.push_back(j);

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == prow || sgn(rows[i][c]) == 0) continue;
            const Scalar f = rows[i][c];
            for (std::size_t j : support) rows[i][j] -= f * piv[j];
        }
        pivots.push_back(c);
        ++prow;
    }
    rows.resize(prow);
    return {std::move(rows), std::move(pivots)};
}

RrefResult assemble(std::size_t nrows, std::size_t cols, Rows reduced, std::vector<std::size_t> pivots) {
    RrefResult out;
    out.reduced = Mat(nrows, cols);
    for (std::size_t r = 0; r < reduced.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.reduced(r, c) = std::move(reduced[r][c]);
    out.rank = pivots.size();
    out.pivots = std::move(pivots);
    return out;
}

constexpr std::size_t kMinBlockRows = 64;

} // namespace

namespace reference {

RrefResult rref(const Mat& m) {
    Mat a = m;
    RrefResult out;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < a.cols() && prow < a.rows(); ++c) {
        std::size_t r = prow;
        while (r < a.rows() && sgn(a(r, c)) == 0) ++r;
        if (r == a.rows()) continue;
        if (r != prow)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(prow, j));
        const Scalar inv = 1 / a(prow, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(prow, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == prow) continue;
            const Scalar f = a(i, c);
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(prow, j);
        }
        out.pivots.push_back(c);
        ++prow;
    }
    out.rank = out.pivots.size();
    out.reduced = std::move(a);
    return out;
}

} // namespace reference

RrefResult rref(const Mat& m, Exec exec) {
    const std::size_t nrows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t block = std::max(kMinBlockRows, 2 * cols);

    if (exec == Exec::serial || nrows <= block) {
        Rows rows(nrows);
        for (std::size_t r = 0; r < nrows; ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());
        auto [red, piv] = reduce_rows(std::move(rows), cols);
        return assemble(nrows, cols, std::move(red), std::move(piv));
    }

    // Each block is reduced independently; only its nonzero rows survive.
    // Pairwise merges preserve the row space, and the RREF of a row space
    // is unique, so the final matrix matches the serial result exactly.
    const std::size_t nblocks = (nrows + block - 1) / block;
    std::vector<Rows> parts(nblocks);
    std::vector<std::vector<std::size_t>> pivs(nblocks);

#pragma omp parallel for schedule(dynamic)
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::size_t lo = b * block;
        const std::size_t hi = std::min(nrows, lo + block);
        Rows rows;
        rows.reserve(hi - lo);
        for (std::size_t r = lo; r < hi; ++r)
            if (!is_zero(m.row(r))) rows.emplace_back(m.row(r).begin(), m.row(r).end());
        std::tie(parts[b], pivs[b]) = reduce_rows(std::move(rows), cols);
    }

    while (parts.size() > 1) {
        const std::size_t half = (parts.size() + 1) / 2;
        std::vector<Rows> next(half);
        std::vector<std::vector<std::size_t>> next_piv(half);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t b = 0; b < half; ++b) {
            Rows rows = std::move(parts[2 * b]);
            if (2 * b + 1 < parts.size()) {
                auto& other = parts[2 * b + 1];
                rows.insert(rows.end(), std::make_move_iterator(other.begin()), std::make_move_iterator(other.end()));
            }
            std::tie(next[b], next_piv[b]) = reduce_rows(std::move(rows), cols);
        }
        parts = std::move(next);
        pivs = std::move(next_piv);
    }
    return assemble(nrows, cols, std::move(parts.front()), std::move(pivs.front()));
}

std::vector<Vec> kernel_basis(const RrefResult& r, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = -r.reduced(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> kernel_basis(const Mat& m, Exec exec) { return kernel_basis(rref(m, exec), m.cols()); }

std::size_t image_rank(const Mat& m, Exec exec) { return rref(m, exec).rank; }

std::optional<Vec> solve(const Mat& m, const Vec& b, Exec exec) {
    if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length != rows");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const RrefResult r = rref(aug, exec);
    if (r.rank > 0 && r.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t row = 0; row < r.rank; ++row) x[r.pivots[row]] = r.reduced(row, m.cols());
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    const RrefResult r = rref(hconcat(m, Mat::identity(n)), Exec::serial);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

} // namespace bolalg
