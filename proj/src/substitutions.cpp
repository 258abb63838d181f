#include "knotqp/substitutions.hpp"

#include "knotqp/errors.hpp"

namespace knotqp {

namespace {

QPSpec rename_t_to_q(const QPSpec& s) {
  auto image = [](const Monomial& m) {
    Monomial out;
    for (const auto& [v, e] : m.exponents()) out = out * Monomial::var(v == 't' ? 'q' : v, e);
    return out;
  };
  return {image(s.u()), image(s.v())};
}

}  // namespace

std::string_view spec_map_name(SpecMap m) { return m == SpecMap::AlexToH1 ? "AlexToH1" : "JonesToH2"; }

QPSpec apply_spec_map(SpecMap m, const QPSpec& s) {
  const Family source = m == SpecMap::AlexToH1 ? Family::Alexander : Family::Jones;
  const Family target = m == SpecMap::AlexToH1 ? Family::H1 : Family::H2;
  const QPSpec expected = family_spec(source);
  if (!(s == expected) && !(s == rename_t_to_q(expected))) {
    throw SpecMismatch(std::string(spec_map_name(m)) + " expects (" + to_string(expected.u()) + ", " +
                       to_string(expected.v()) + "), got (" + to_string(s.u()) + ", " + to_string(s.v()) + ")");
  }
  return family_spec(target);
}

const SubstitutionMap& h1_to_h_map() {
  static const SubstitutionMap map{
      {'q', Monomial::from_exponents({{'a', 2}, {'t', 1}})},
      {'p', Monomial::from_exponents({{'a', -2}, {'t', 1}})},
  };
  return map;
}

const SubstitutionMap& h2_to_h_map() {
  static const SubstitutionMap map{
      {'q', Monomial::from_exponents({{'a', Rational(2, 3)}, {'t', Rational(1, 3)}})},
      {'p', Monomial::from_exponents({{'a', 2}, {'t', -1}})},
  };
  return map;
}

LaurentPoly h1_to_h(const LaurentPoly& p) { return substitute(p, h1_to_h_map()); }

LaurentPoly h2_to_h(const LaurentPoly& p) { return substitute(p, h2_to_h_map()); }

}  // namespace knotqp
