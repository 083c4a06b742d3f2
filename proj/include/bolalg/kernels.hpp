#ifndef BOLALG_KERNELS_HPP
#define BOLALG_KERNELS_HPP

#include <bolalg/exec.hpp>
#include <bolalg/linalg.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace bolalg {

using Tuple = std::vector<std::size_t>;

// Residual of a multilinear identity at one basis tuple. An empty vector
// means the tuple is skipped (treated as passing).
using ResidualFn = std::function<Vec(std::span<const std::size_t>)>;

struct Failure {
    Tuple witness;
    Vec residual;
};

// Number of tuples in [0, n)^arity.
std::size_t tuple_count(std::size_t n, std::size_t arity);
// Lexicographic decoding: the first slot is the most significant digit.
Tuple decode_tuple(std::size_t index, std::size_t n, std::size_t arity);

// First tuple, in lexicographic order, at which `residual` is nonzero.
// The parallel path scans with a shared lower bound and returns the same
// tuple as the serial scan.
std::optional<Failure> first_failure(std::size_t n, std::size_t arity, const ResidualFn& residual,
                                     Exec exec = Exec::parallel);

// Concatenation of residual(t) over all tuples t in lexicographic order;
// every residual must have length `width`. Used to turn a linear identity
// into rows of a constraint matrix.
Vec stacked_residuals(std::size_t n, std::size_t arity, std::size_t width, const ResidualFn& residual);

// Matrix whose column j is column(j); each column must have `rows` entries.
// Columns are independent and are evaluated concurrently on the parallel path.
Mat assemble_columns(std::size_t rows, std::size_t cols, const std::function<Vec(std::size_t)>& column,
                     Exec exec = Exec::parallel);

} // namespace bolalg

#endif // BOLALG_KERNELS_HPP
