#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "vknot/construct.hpp"
#include "vknot/error.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

using Json = nlohmann::ordered_json;

/// A number when it fits in int64, a decimal string otherwise.
Json integer_to_json(const Integer& value);

/// {"3": -1, "1": -2}: decimal exponent keys, highest exponent first.
Json poly_to_json(const LaurentPolynomial& f);
/// Inverse of poly_to_json. Throws ParseError.
LaurentPolynomial poly_from_json(const Json& j);

/// Fields: gauss_code, n, v1, v2, v21, v22, v1_prime_1, v2_prime_1, alpha2, alpha3.
Json report_to_json(const InvariantReport& report);
/// One "key: value" line per field, polynomials in text form.
std::string report_to_text(const InvariantReport& report);

/// Fields: difference, lower_bound (null when obstructed), obstruction.
Json delta_bound_to_json(const DeltaBoundReport& report);
std::string delta_bound_to_text(const DeltaBoundReport& report);

struct InputLine {
  std::size_t number;  // 1-based
  std::string text;
  bool blank;
};

/// Reads one diagram per line, dropping lines whose first non-blank
/// character is '#'. Blank lines are returned with `blank` set so callers
/// can warn about them.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<InputLine> next();

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

/// parse_gauss with the message prefixed by "line N, column C: ".
GaussDiagram parse_gauss_line(const InputLine& line);

}  // namespace vknot
