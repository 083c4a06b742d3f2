#include <bolalg/report.hpp>

#include <sstream>
#include <stdexcept>

namespace bolalg {

bool IdentityReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const IdentityCheck* IdentityReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

const IdentityCheck& IdentityReport::at(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return c;
    throw std::out_of_range("no check named " + id);
}

void IdentityReport::append(const IdentityReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

IdentityCheck check_identity(std::string id, std::size_t n, std::size_t arity, const ResidualFn& residual,
                             Exec exec) {
    IdentityCheck out;
    out.id = std::move(id);
    if (auto f = first_failure(n, arity, residual, exec)) {
        out.pass = false;
        out.witness = std::move(f->witness);
        out.residual = std::move(f->residual);
    }
    return out;
}

std::string render_text(const IdentityReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << c.id << ": " << (c.pass ? "pass" : "FAIL");
        if (c.witness) {
            os << " at (";
            for (std::size_t i = 0; i < c.witness->size(); ++i) os << (i ? "," : "") << (*c.witness)[i];
            os << ") residual [";
            for (std::size_t i = 0; i < c.residual.size(); ++i) os << (i ? " " : "") << render_scalar(c.residual[i]);
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace bolalg
