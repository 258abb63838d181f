#pragma once

// Two routes from the one-parameter numbers to the HOMFLY (q,p)-numbers.
//
// Route 1 (Alexander): the pair (t, t^-1) becomes (q, p^-1), giving
// [n]^{H1} = (q^n - p^-n) / (q - p^-1). The relations q^(1/4) p^(-1/4) = a and
// q^(1/2) p^(1/2) = t are two linear equations on the exponent lattice:
//   q/p = a^4, qp = t^2   =>   q = a^2 t, p = a^-2 t.
//
// Route 2 (Jones): the pair (t^3, t) becomes (q^3, p), giving
// [n]^{H2} = (q^3n - p^n) / (q^3 - p). With q^3 p = a^4 and
// q^(3/2) p^(-1/2) = t:
//   q^3 p = a^4, q^3 / p = t^2   =>   q^3 = a^2 t, p = a^2 t^-1,
// so q = a^(2/3) t^(1/3).
//
// Route maps act on the QPSpec, not on expanded polynomials: applying
// t^k -> q^k, t^-k -> p^-k termwise to [3]^A gives q^2 + 1 + p^-2, which is
// not [3]^{H1} = q^2 + q p^-1 + p^-2.

#include <string_view>

#include "knotqp/laurent.hpp"
#include "knotqp/qp_numbers.hpp"

namespace knotqp {

enum class SpecMap { AlexToH1, JonesToH2 };

std::string_view spec_map_name(SpecMap m);

// Throws SpecMismatch unless s is the map's source pair (t may be written q).
QPSpec apply_spec_map(SpecMap m, const QPSpec& s);

const SubstitutionMap& h1_to_h_map();
const SubstitutionMap& h2_to_h_map();

// Both throw MissingImage for variables other than q and p.
LaurentPoly h1_to_h(const LaurentPoly& p);
LaurentPoly h2_to_h(const LaurentPoly& p);

}  // namespace knotqp
