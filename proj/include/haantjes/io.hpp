#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "haantjes/geometry.hpp"
#include "haantjes/linearizer.hpp"
#include "haantjes/structure.hpp"

namespace haantjes {

/// Malformed operator-field document. The message names the source and,
/// where possible, the offending entry and character position.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File that cannot be opened.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dim": n, "matrix": [[p11, ..., p1n], ...]} with entries in the
/// polynomial grammar over x1..xn (strings or numbers).
OperatorField parse_operator_field(std::string_view text, const std::string& source = "<input>");
/// Throws FileError if the file cannot be read, InputError if it is malformed.
OperatorField read_operator_field(const std::string& path);
nlohmann::json operator_field_json(const OperatorField& l);

/// Rational point from "1,-2,3/4". Throws std::invalid_argument.
RationalVector parse_point(const std::string& text);
std::string format_point(const RationalVector& p);

/// "S^i_{jk} = <poly>" for each nonzero component in (i, j, k) order, or
/// "zero tensor".
std::string format_tensor(const Tensor12& s, const std::string& symbol);
nlohmann::json tensor_json(const Tensor12& s, const std::string& symbol);

nlohmann::json vector_field_json(const VectorField& v);
/// Generator pairs are reported 1-based.
nlohmann::json integrability_json(const Distribution& d, const IntegrabilityReport& r);
nlohmann::json regularity_json(const RegularityReport& r);
/// Fields verdict, eigenvalue, rank_profile, failing_certificates, detail.
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json system_json(const LinearSystemQ& sys);
nlohmann::json search_json(const SearchResult& r);

}  // namespace haantjes
