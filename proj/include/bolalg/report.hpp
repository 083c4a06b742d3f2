#ifndef BOLALG_REPORT_HPP
#define BOLALG_REPORT_HPP

#include <bolalg/exec.hpp>
#include <bolalg/kernels.hpp>
#include <bolalg/linalg.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bolalg {

// Outcome of one named identity. witness is the first failing basis tuple
// (lexicographic); residual holds LHS - RHS there (matrix identities are
// flattened row-major).
struct IdentityCheck {
    std::string id;
    bool pass = true;
    std::optional<Tuple> witness;
    Vec residual;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool pass() const;
    // First failing check in report order, or nullptr.
    const IdentityCheck* first_failure() const;
    // Throws std::out_of_range for an unknown id.
    const IdentityCheck& at(const std::string& id) const;

    void append(const IdentityReport& other);
};

// A precondition expressed as identities did not hold; carries the report.
class RejectedInput : public std::runtime_error {
public:
    RejectedInput(const std::string& what, IdentityReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const IdentityReport& report() const noexcept { return report_; }

private:
    IdentityReport report_;
};

// Scans [0, n)^arity for the first nonzero residual.
IdentityCheck check_identity(std::string id, std::size_t n, std::size_t arity, const ResidualFn& residual,
                             Exec exec = Exec::parallel);

// Human-readable one-line-per-check rendering.
std::string render_text(const IdentityReport& report);

} // namespace bolalg

#endif // BOLALG_REPORT_HPP
