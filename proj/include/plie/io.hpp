#pragma once

// JSON serialization for the command-line tool and the Python module.
// Rationals are written as bare integers when integral and as "p/q"
// strings otherwise; every parser rejects unknown fields and reports the
// offending location as a JSON pointer.

#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "plie/bialg.hpp"
#include "plie/fiber.hpp"
#include "plie/flag.hpp"
#include "plie/matched.hpp"

namespace plie::io {

using Json = nlohmann::ordered_json;

class SchemaError : public InputError {
public:
  SchemaError(std::string pointer, const std::string& message)
      : InputError((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

private:
  std::string pointer_;
};

/// Parses JSON text; syntax errors become SchemaError at the root.
Json parse_text(std::string_view text);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& pointer);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const std::string& pointer, std::size_t dim);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const std::string& pointer, std::size_t rows, std::size_t cols);
/// Row vectors of the canonical basis.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const std::string& pointer, std::size_t dim);

/// {"dim", "basis", "brackets": [{"i", "j", "coeffs": {name: value}}]}
Json algebra_to_json(const LieAlgebra& g);
/// `extra` lists further top-level keys the caller will read itself.
LieAlgebra algebra_from_json(const Json& j, std::initializer_list<std::string_view> extra = {});

/// Structure-constant block plus {"delta": [{"i", "wedge": [[j, k, c], ...]}]}.
Json bialgebra_to_json(const LieBialgebra& b);
LieBialgebra bialgebra_from_json(const Json& j, std::initializer_list<std::string_view> extra = {});

/// {"g_dim", "p_dim", "sigma", "pi_sharp"}
Json point_data_to_json(const PointActionData& d);
PointActionData point_data_from_json(const Json& j);

/// Parses whichever schema the document matches: point data when it has
/// "g_dim", a bialgebra when it has "delta", otherwise a Lie algebra.
using ParsedInput = std::variant<LieAlgebra, LieBialgebra, PointActionData>;
ParsedInput parse_algebra_json(std::string_view text);

/// {"l", "h", "n", "act_h_on_n", "act_n_on_h"}; parsing recomputes the
/// actions from l, h, n and rejects a document whose stored actions differ.
Json matched_to_json(const MatchedPair& mp);
MatchedPair matched_from_json(const Json& j);

Json fiber_to_json(const FiberResult& r);
FiberResult fiber_from_json(const Json& j);

Json flag_to_json(const FlagCohomologyTable& t);
FlagCohomologyTable flag_from_json(const Json& j);

/// {"cartan": [[...]], "name": optional}
RootSystem root_system_from_json(const Json& j);

Json jacobi_report_to_json(const JacobiReport& r, const std::vector<std::string>& names);

} // namespace plie::io
