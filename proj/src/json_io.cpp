#include "knotqp/json_io.hpp"

#include <cctype>

#include "knotqp/errors.hpp"

namespace knotqp {

namespace {

BigInt parse_bigint(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw Error("malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw Error("malformed integer '" + s + "'");
  }
  BigInt v(s.substr(i));
  return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

std::string fraction_string(const Rational& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + s + "'");
  return Rational(num, den);
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (const auto& [v, e] : m.exponents()) mono[std::string(1, v)] = fraction_string(e);
    terms.push_back(Json{{"coeff", c.str()}, {"monomial", std::move(mono)}});
  }
  return Json{{"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error("polynomial JSON needs a \"terms\" array");
  }
  LaurentPoly out;
  for (const auto& term : j["terms"]) {
    if (!term.contains("coeff") || !term.contains("monomial")) {
      throw Error("polynomial term needs \"coeff\" and \"monomial\"");
    }
    std::vector<Monomial::Exponent> exps;
    for (const auto& [key, value] : term["monomial"].items()) {
      if (key.size() != 1 || !std::islower(static_cast<unsigned char>(key[0]))) {
        throw Error("variable names are single lowercase letters, got '" + key + "'");
      }
      exps.emplace_back(key[0], parse_rational(value.get<std::string>()));
    }
    out.add_term(Monomial::from_exponents(std::move(exps)), parse_bigint(term["coeff"].get<std::string>()));
  }
  return out;
}

}  // namespace knotqp
