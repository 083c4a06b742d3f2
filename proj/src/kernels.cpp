#include <bolalg/errors.hpp>
#include <bolalg/kernels.hpp>

#include <atomic>
#include <cstdint>
#include <exception>

namespace bolalg {

std::size_t tuple_count(std::size_t n, std::size_t arity) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= n;
    return total;
}

Tuple decode_tuple(std::size_t index, std::size_t n, std::size_t arity) {
    Tuple t(arity);
    for (std::size_t s = arity; s-- > 0;) {
        t[s] = index % n;
        index /= n;
    }
    return t;
}

std::optional<Failure> first_failure(std::size_t n, std::size_t arity, const ResidualFn& residual, Exec exec) {
    const std::size_t total = n == 0 ? 0 : tuple_count(n, arity);
    if (exec == Exec::serial) {
        for (std::size_t idx = 0; idx < total; ++idx) {
            Tuple t = decode_tuple(idx, n, arity);
            Vec r = residual(t);
            if (!is_zero(r)) return Failure{std::move(t), std::move(r)};
        }
        return std::nullopt;
    }

    std::atomic<std::size_t> best{total};
    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (idx >= best.load(std::memory_order_relaxed)) continue;
        try {
            const Tuple t = decode_tuple(idx, n, arity);
            if (is_zero(residual(t))) continue;
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
            continue;
        }
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (idx < cur && !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
        }
    }
    if (error) std::rethrow_exception(error);
    if (best.load() == total) return std::nullopt;
    Tuple t = decode_tuple(best.load(), n, arity);
    Vec r = residual(t);
    return Failure{std::move(t), std::move(r)};
}

Vec stacked_residuals(std::size_t n, std::size_t arity, std::size_t width, const ResidualFn& residual) {
    const std::size_t total = n == 0 ? 0 : tuple_count(n, arity);
    Vec out;
    out.reserve(total * width);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vec r = residual(decode_tuple(idx, n, arity));
        if (r.empty()) r.resize(width);
        if (r.size() != width) throw DimensionError("stacked_residuals: residual width mismatch");
        for (auto& x : r) out.push_back(std::move(x));
    }
    return out;
}

Mat assemble_columns(std::size_t rows, std::size_t cols, const std::function<Vec(std::size_t)>& column, Exec exec) {
    Mat m(rows, cols);
    const auto count = static_cast<std::int64_t>(cols);
    // Exceptions must not escape an OpenMP region; capture the first one.
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto c = static_cast<std::size_t>(i);
        try {
            Vec v = column(c);
            if (v.size() != rows) throw DimensionError("assemble_columns: column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = std::move(v[r]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return m;
}

} // namespace bolalg
