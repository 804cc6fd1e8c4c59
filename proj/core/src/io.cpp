#include "vknot/io.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace vknot {

Json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

Json poly_to_json(const LaurentPolynomial& f) {
  Json out = Json::object();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    out[std::to_string(it->first)] = integer_to_json(it->second);
  }
  return out;
}

LaurentPolynomial poly_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("polynomial JSON must be an object", 0);
  }
  LaurentPolynomial out;
  for (const auto& [key, value] : j.items()) {
    LaurentPolynomial::Exponent exponent = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), exponent);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw ParseError("bad exponent key '" + key + "'", 0);
    }
    Integer coefficient;
    if (value.is_number_integer()) {
      coefficient = value.get<std::int64_t>();
    } else if (value.is_string()) {
      try {
        coefficient = Integer(value.get<std::string>());
      } catch (const std::exception&) {
        throw ParseError("bad coefficient for exponent " + key, 0);
      }
    } else {
      throw ParseError("bad coefficient for exponent " + key, 0);
    }
    out.add_term(exponent, coefficient);
  }
  return out;
}

Json report_to_json(const InvariantReport& r) {
  Json out = Json::object();
  out["gauss_code"] = r.gauss_code;
  out["n"] = r.n;
  out["v1"] = poly_to_json(r.v1);
  out["v2"] = poly_to_json(r.v2);
  out["v21"] = integer_to_json(r.v21);
  out["v22"] = integer_to_json(r.v22);
  out["v1_prime_1"] = integer_to_json(r.v1_prime_1);
  out["v2_prime_1"] = integer_to_json(r.v2_prime_1);
  out["alpha2"] = integer_to_json(r.alpha2);
  out["alpha3"] = integer_to_json(r.alpha3);
  return out;
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "gauss_code: " << r.gauss_code << '\n'
      << "n: " << r.n << '\n'
      << "v1: " << format_poly(r.v1) << '\n'
      << "v2: " << format_poly(r.v2) << '\n'
      << "v21: " << r.v21 << '\n'
      << "v22: " << r.v22 << '\n'
      << "v1_prime_1: " << r.v1_prime_1 << '\n'
      << "v2_prime_1: " << r.v2_prime_1 << '\n'
      << "alpha2: " << r.alpha2 << '\n'
      << "alpha3: " << r.alpha3 << '\n';
  return out.str();
}

Json delta_bound_to_json(const DeltaBoundReport& r) {
  Json out = Json::object();
  out["difference"] = poly_to_json(r.difference);
  out["lower_bound"] = r.lower_bound ? integer_to_json(*r.lower_bound) : Json(nullptr);
  out["obstruction"] = r.obstruction;
  return out;
}

std::string delta_bound_to_text(const DeltaBoundReport& r) {
  std::ostringstream out;
  out << "difference: " << format_poly(r.difference) << '\n'
      << "lower_bound: ";
  if (r.lower_bound) {
    out << *r.lower_bound;
  } else {
    out << "none (not Delta-equivalent)";
  }
  out << '\n' << "obstruction: " << (r.obstruction ? "true" : "false") << '\n';
  return out.str();
}

std::optional<InputLine> LineReader::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++number_;
    if (!text.empty() && text.back() == '\r') {
      text.pop_back();
    }
    const std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '#') {
      continue;
    }
    return InputLine{number_, std::move(text), first == std::string::npos};
  }
  return std::nullopt;
}

GaussDiagram parse_gauss_line(const InputLine& line) {
  try {
    return parse_gauss(line.text);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line.number) + ", " + e.what(), e.column());
  } catch (const DiagramError& e) {
    throw ParseError("line " + std::to_string(line.number) + ": " + e.what(), 0);
  }
}

}  // namespace vknot
