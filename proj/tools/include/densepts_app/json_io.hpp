#pragma once

// JSON <-> domain conversions. Integers travel as decimal strings; readers also
// accept plain JSON integers. Every reader takes the JSON path of its argument
// so schema errors can name the offending field.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "densepts/constructions.hpp"

namespace densepts::app {

using json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

const json& require(const json& obj, const std::string& key, const std::string& path);
unsigned read_unsigned(const json& j, const std::string& path);
long read_long(const json& j, const std::string& path);
Integer read_integer(const json& j, const std::string& path);
Rational read_rational(const json& j, const std::string& path);
PlaceSet read_placeset(const json& j, const std::string& path);
/// Parses "X0*X1 + X2*X3", "2*X0 - X1", "X0^2 - X1*X2" in num_vars variables.
HomForm parse_form(const std::string& text, std::size_t num_vars, const std::string& path);
/// A form string or a list of {"exponents": [...], "coeff": "..."}.
HomForm read_form(const json& j, std::size_t num_vars, const std::string& path);
json form_terms(const HomForm& f);
ProjPoint read_point(const json& j, std::size_t num_vars, const std::string& path);
/// {"form": ...} or {"span": [[...], ...]}
Component read_component(const json& j, std::size_t num_vars, const std::string& path);
DivisorConfig read_divisor(const json& j, std::size_t n, const std::string& path);

json to_json(const Integer& x);
json to_json(const Rational& x);
json to_json(const ProjPoint& p);
json to_json(const PlaceSet& S);
json to_json(const Component& c);
json count(std::size_t x);

}  // namespace densepts::app
