#include "densepts/constructions.hpp"

namespace densepts {

std::vector<std::pair<Rational, Rational>> unit_equation_solutions(const PlaceSet& S, unsigned exponent_bound) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& u : s_unit_enumerator(S, exponent_bound)) {
    Rational v = 1 - u;
    if (is_s_unit(S, v)) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace densepts
