#ifndef BOLALG_IO_HPP
#define BOLALG_IO_HPP

#include <bolalg/algebra.hpp>
#include <bolalg/cochain.hpp>
#include <bolalg/cohomology.hpp>
#include <bolalg/deformation.hpp>
#include <bolalg/extension.hpp>
#include <bolalg/representation.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bolalg::io {

// Insertion-ordered so rendered files keep a fixed field order.
using Json = nlohmann::ordered_json;

// Throws InputError with the parser's line/column on malformed text.
Json parse_text(std::string_view text);
// Reads a whole file; InputError if it cannot be opened.
Json read_file(const std::string& path);
// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

using AnyAlgebra = std::variant<BolAlgebra, MaltsevAlgebra>;

AnyAlgebra parse_algebra(const Json& j);
BolAlgebra parse_bol(const Json& j);
MaltsevAlgebra parse_maltsev(const Json& j);
// Canonical form: entries with i < j in lexicographic order, zero
// coordinates and zero products omitted. Throws DimensionError when the
// tensors are not antisymmetric in the first two slots.
Json to_json(const BolAlgebra& b);
Json to_json(const MaltsevAlgebra& m);

Mat parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json to_json(const Mat& m);
Json to_json(const Vec& v);

Representation parse_representation(const Json& j, const BolAlgebra& base);
Json to_json(const Representation& r);
std::vector<Mat> parse_maltsev_representation(const Json& j, std::size_t base_dim);

CochainPair parse_cochain(const Json& j, std::size_t base_dim, std::size_t module_dim);
Json to_json(const CochainPair& c);

AbelianExtension parse_extension(const Json& j);
Json to_json(const AbelianExtension& e);

Json to_json(const PseudoderivationData& p);
Json to_json(const IdentityCheck& c);
Json to_json(const IdentityReport& r);
Json to_json(const CohomologyReport& r);
Json to_json(const InfinitesimalReport& r);
Json to_json(const FirstOrderEquivalence& r);
Json to_json(const ExtensionEquivalence& r);

} // namespace bolalg::io

#endif // BOLALG_IO_HPP
