#ifndef BOLALG_SCALAR_HPP
#define BOLALG_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bolalg {

// Exact rational base field. mpq_class keeps numerator/denominator canonical
// after every arithmetic operation; values produced by parse_scalar are
// canonicalized explicitly.
using Scalar = mpq_class;

// Parses "p" or "p/q" (optional sign on p, decimal digits only, q != 0).
// Throws InputError on anything else, including floating-point syntax.
Scalar parse_scalar(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string render_scalar(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

} // namespace bolalg

#endif // BOLALG_SCALAR_HPP
