#ifndef BOLALG_ERRORS_HPP
#define BOLALG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace bolalg {

// Malformed user input: bad rational, index out of range, duplicate entry,
// shape mismatch. `where` names the offending field, e.g. "binary[2].args".
class InputError : public std::runtime_error {
public:
    InputError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

// Operand sizes do not fit the operation (programmer error, not input data).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace bolalg

#endif // BOLALG_ERRORS_HPP
