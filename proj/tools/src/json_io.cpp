#include "densepts_app/json_io.hpp"

#include <cctype>

namespace densepts::app {

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

long read_long(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    try {
      Integer v = parse_integer(j.get<std::string>());
      if (v.fits_slong_p()) return v.get_si();
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(path, "expected a machine-sized integer");
}

unsigned read_unsigned(const json& j, const std::string& path) {
  long v = read_long(j, path);
  if (v < 0 || v > 1000000) throw SchemaError(path, "expected a small non-negative integer");
  return static_cast<unsigned>(v);
}

Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(path, "expected an integer (decimal string or JSON integer)");
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(read_integer(j, path));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(path, "expected a rational (\"a\" or \"a/b\")");
}

PlaceSet read_placeset(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of primes");
  std::vector<Integer> primes;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Integer p = read_integer(j[i], path + "[" + std::to_string(i) + "]");
    if (p < 2 || !is_prime(p)) throw SchemaError(path + "[" + std::to_string(i) + "]", to_string(p) + " is not prime");
    primes.push_back(p);
  }
  return PlaceSet(std::move(primes));
}

namespace {

class FormParser {
 public:
  FormParser(const std::string& text, std::size_t vars, const std::string& path)
      : s_(text), vars_(vars), path_(path) {}

  std::vector<std::pair<Exponents, Integer>> parse() {
    std::vector<std::pair<Exponents, Integer>> terms;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      first = false;
      skip();
    }
    if (terms.empty()) fail("empty form");
    return terms;
  }

 private:
  std::pair<Exponents, Integer> term(int sign) {
    Integer coeff = sign;
    Exponents e(vars_, 0);
    bool any = false;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else if (peek() == 'X' || peek() == 'x') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index after X");
        Integer idx = number();
        if (idx >= static_cast<unsigned long>(vars_))
          fail("variable X" + to_string(idx) + " outside X0..X" + std::to_string(vars_ - 1));
        unsigned power = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          power = static_cast<unsigned>(number().get_ui());
        }
        e[idx.get_ui()] += power;
      } else {
        fail("expected a coefficient or variable");
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {e, coeff};
  }

  Integer number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError(path_, "cannot parse form \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  const std::string& s_;
  std::size_t vars_;
  std::string path_;
  std::size_t pos_ = 0;
};

}  // namespace

HomForm parse_form(const std::string& text, std::size_t num_vars, const std::string& path) {
  auto terms = FormParser(text, num_vars, path).parse();
  try {
    return HomForm(num_vars, terms);
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

HomForm read_form(const json& j, std::size_t num_vars, const std::string& path) {
  if (j.is_string()) return parse_form(j.get<std::string>(), num_vars, path);
  if (!j.is_array() || j.empty())
    throw SchemaError(path, "expected a form string such as \"X0*X1 + X2*X3\" or a list of {exponents, coeff}");
  std::vector<std::pair<Exponents, Integer>> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tp = path + "[" + std::to_string(i) + "]";
    const json& e = require(j[i], "exponents", tp);
    if (!e.is_array() || e.size() != num_vars)
      throw SchemaError(tp + ".exponents", "expected " + std::to_string(num_vars) + " exponents");
    Exponents ex;
    for (std::size_t k = 0; k < e.size(); ++k) ex.push_back(read_unsigned(e[k], tp + ".exponents[" + std::to_string(k) + "]"));
    terms.emplace_back(std::move(ex), read_integer(require(j[i], "coeff", tp), tp + ".coeff"));
  }
  try {
    return HomForm(num_vars, terms);
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

json form_terms(const HomForm& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  return out;
}

ProjPoint read_point(const json& j, std::size_t num_vars, const std::string& path) {
  if (!j.is_array() || j.size() != num_vars)
    throw SchemaError(path, "expected an array of " + std::to_string(num_vars) + " coordinates");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_rational(j[i], path + "[" + std::to_string(i) + "]"));
  try {
    return normalize_primitive(v);
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

Component read_component(const json& j, std::size_t num_vars, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected {\"form\": ...} or {\"span\": [...]}");
  if (j.contains("form")) return read_form(j["form"], num_vars, path + ".form");
  if (j.contains("span")) {
    const json& rows = j["span"];
    if (!rows.is_array() || rows.empty()) throw SchemaError(path + ".span", "expected a non-empty array of points");
    IntMatrix m;
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.push_back(read_point(rows[i], num_vars, path + ".span[" + std::to_string(i) + "]").coords());
    try {
      return LinearSubspace(std::move(m));
    } catch (const std::exception& e) {
      throw SchemaError(path + ".span", e.what());
    }
  }
  throw SchemaError(path, "expected {\"form\": ...} or {\"span\": [...]}");
}

DivisorConfig read_divisor(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array of components");
  std::vector<Component> comps;
  for (std::size_t i = 0; i < j.size(); ++i) comps.push_back(read_component(j[i], n + 1, path + "[" + std::to_string(i) + "]"));
  try {
    return DivisorConfig(n, std::move(comps));
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

json to_json(const Integer& x) { return to_string(x); }
json to_json(const Rational& x) { return to_string(x); }

json to_json(const ProjPoint& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(to_string(c));
  return out;
}

json to_json(const PlaceSet& S) {
  json out = json::array();
  for (const auto& p : S.primes()) out.push_back(to_string(p));
  return out;
}

json to_json(const Component& c) {
  if (auto* f = std::get_if<HomForm>(&c)) return {{"form", f->to_string()}, {"terms", form_terms(*f)}};
  json rows = json::array();
  for (const auto& r : std::get<LinearSubspace>(c).span()) {
    json row = json::array();
    for (const auto& x : r) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return {{"span", rows}};
}

json count(std::size_t x) { return std::to_string(x); }

}  // namespace densepts::app
