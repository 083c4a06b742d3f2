#include <bolalg/errors.hpp>
#include <bolalg/scalar.hpp>

#include <cctype>

namespace bolalg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("", "malformed rational \"" + std::string(text) + "\"");

    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw InputError("", "zero denominator in \"" + std::string(text) + "\"");
    if (negative) p = -p;
    Scalar s(p, q);
    s.canonicalize();
    return s;
}

std::string render_scalar(const Scalar& s) { return s.get_str(10); }

} // namespace bolalg
