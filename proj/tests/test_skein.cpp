#include "doctest.h"

#include "knotqp/errors.hpp"
#include "knotqp/expr.hpp"
#include "knotqp/skein.hpp"
#include "oracle.hpp"

using namespace knotqp;
using oracle::Q;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

// t = 9/4 and a = 25, given by their roots 3/2 and 5.
const std::map<char, Q> kRoots{{'t', Q(3, 2)}, {'a', 5}};
const std::map<char, Q> kValues{{'t', Q(9, 4)}, {'a', 25}, {'z', Q(3, 2) - Q(2, 3)}};

Q at(const LaurentPoly& p) { return oracle::eval_at_roots(p, kRoots); }

// Torus knot values from the two roots u, v of x^2 - k1 x - k2 with P_0 = 1,
// P_1 = k1 + k2:  P_m = (u^{m+1}(1 - v) - v^{m+1}(1 - u)) / (u - v).
Q knot_closed_form(const Q& u, const Q& v, int m) {
  return (oracle::rpow(u, m + 1) * (1 - v) - oracle::rpow(v, m + 1) * (1 - u)) / (u - v);
}

}  // namespace

TEST_CASE("link and knot coefficients") {
  CHECK(link_coeffs(InvariantKind::Alexander) == SkeinCoeffs{P("t^(1/2) - t^(-1/2)"), P("1")});
  CHECK(link_coeffs(InvariantKind::Jones) == SkeinCoeffs{P("t^(3/2) - t^(1/2)"), P("t^2")});
  CHECK(link_coeffs(InvariantKind::Homfly) == SkeinCoeffs{P("a*t^(1/2) - a*t^(-1/2)"), P("a^2")});
  CHECK(knot_coeffs(InvariantKind::Alexander) == KnotCoeffs{P("t + t^-1"), P("-1")});
  CHECK(knot_coeffs(InvariantKind::Jones) == KnotCoeffs{P("t^3 + t"), P("-t^4")});
  CHECK(knot_coeffs(InvariantKind::Homfly) == KnotCoeffs{P("a^2*t + a^2*t^-1"), P("-a^4")});
  for (InvariantKind k : kAllKinds) {
    const SkeinCoeffs l = link_coeffs(k);
    const KnotCoeffs kc = knot_coeffs(k);
    CHECK(kc.k1 == l.l1 * l.l1 + l.l2 + l.l2);
    CHECK(kc.k2 == LaurentPoly() - pow(l.l2, 2));
    CHECK(parse_kind(kind_name(k)) == k);
  }
  CHECK_FALSE(parse_kind("bmq").has_value());
}

TEST_CASE("two-component unlink") {
  CHECK(std::get<LaurentPoly>(unlink2(InvariantKind::Alexander)).is_zero());
  CHECK(std::get<LaurentPoly>(unlink2(InvariantKind::Jones)) == P("-t^(1/2) - t^(-1/2)"));
  CHECK(std::get<AZForm>(unlink2(InvariantKind::Homfly)).poly == P("a^-1*z^-1 - a*z^-1"));
}

TEST_CASE("link series seeds") {
  CHECK_THROWS_AS(link_series(InvariantKind::Jones, 1), BadRange);
  const auto a = link_series(InvariantKind::Alexander, 3);
  CHECK(*a.entries[0] == LaurentPoly());
  CHECK(*a.entries[1] == P("1"));
  CHECK(*a.entries[2] == P("t^(1/2) - t^(-1/2)"));
  CHECK(*a.entries[3] == P("t - 1 + t^-1"));
  const auto j = link_series(InvariantKind::Jones, 3);
  CHECK(*j.entries[2] == P("-t^(5/2) - t^(1/2)"));
  CHECK(*j.entries[3] == P("t + t^3 - t^4"));
  const auto h = link_series(InvariantKind::Homfly, 3);
  CHECK(h.form == VariableForm::AZ);
  CHECK_FALSE(h.entries[0].has_value());
  CHECK(*h.entries[2] == P("a*z + a*z^-1 - a^3*z^-1"));
  CHECK(from_az_form(AZForm{*h.entries[3]}) == P("a^2*t + a^2*t^-1 - a^4"));
  // a -> 1 on the Hopf link gives the Alexander value z
  CHECK(substitute(*h.entries[2], {{'a', Monomial()}, {'z', Monomial::var('z')}}) == P("z"));
}

TEST_CASE("knot series") {
  const auto a = knot_series(InvariantKind::Alexander, 2);
  CHECK(*a.entries[0] == P("1"));
  CHECK(*a.entries[1] == P("t - 1 + t^-1"));
  CHECK(*a.entries[2] == P("t^2 - t + 1 - t^-1 + t^-2"));
  CHECK(*knot_series(InvariantKind::Jones, 1).entries[1] == P("t + t^3 - t^4"));
  CHECK(*knot_series(InvariantKind::Homfly, 1).entries[1] == P("a^2*t + a^2*t^-1 - a^4"));
  CHECK(knot_series(InvariantKind::Homfly, 0).entries.size() == 1);
  CHECK(a.torus_index(2) == 5);
}

TEST_CASE("Alexander torus knots are alternating sums") {
  const auto s = knot_series(InvariantKind::Alexander, 50);
  for (int m = 0; m <= 50; ++m) {
    LaurentPoly expect;
    for (int i = 0; i <= 2 * m; ++i) expect.add_term(Monomial::var('t', m - i), i % 2 == 0 ? 1 : -1);
    CHECK(*s.entries[m] == expect);
  }
}

TEST_CASE("knot series match the closed form at a rational point") {
  for (InvariantKind k : kAllKinds) {
    const QPSpec spec = family_spec(family_of(k));
    const Q u = at(LaurentPoly(spec.u()));
    const Q v = at(LaurentPoly(spec.v()));
    const auto s = knot_series(k, 30);
    for (int m = 0; m <= 30; ++m) CHECK(at(*s.entries[m]) == knot_closed_form(u, v, m));
  }
}

TEST_CASE("Jones torus knots match the rational closed form") {
  const auto s = knot_series(InvariantKind::Jones, 30);
  for (Q t : {Q(2), Q(-3), Q(5, 7)}) {
    for (int m = 0; m <= 30; ++m) {
      const Q expect = oracle::rpow(t, m) * (1 - oracle::rpow(t, 3) - oracle::rpow(t, 2 * m + 2) +
                                             oracle::rpow(t, 2 * m + 3)) /
                       (1 - t * t);
      CHECK(oracle::eval_at(*s.entries[m], {{'t', t}}) == expect);
    }
  }
}

TEST_CASE("link series follow the numeric recurrence") {
  for (InvariantKind k : kAllKinds) {
    const auto s = link_series(k, 25);
    const SkeinCoeffs l = link_coeffs(k);
    const Q l1 = at(l.l1), l2 = at(l.l2);
    Q prev = (1 - l2) / l1, cur = 1;
    for (int n = 1; n <= 25; ++n) {
      const Q got = s.form == VariableForm::AZ ? oracle::eval_at(*s.entries[n], kValues) : at(*s.entries[n]);
      CHECK(got == cur);
      const Q next = l1 * cur + l2 * prev;
      prev = cur;
      cur = next;
    }
  }
}

TEST_CASE("HOMFLY knot entries satisfy the knot recurrence") {
  const auto s = knot_series(InvariantKind::Homfly, 40);
  const LaurentPoly k1 = P("a^2*t + a^2*t^-1"), k2 = P("-a^4");
  for (int m = 40; m >= 2; --m) CHECK(*s.entries[m] == k1 * *s.entries[m - 1] + k2 * *s.entries[m - 2]);
}

TEST_CASE("knot and link indexing agree") {
  for (InvariantKind k : kAllKinds) {
    const auto knots = knot_series(k, 50);
    const auto links = link_series(k, 101);
    for (int m = 0; m <= 50; ++m) {
      LaurentPoly link = *links.entries[2 * m + 1];
      if (links.form == VariableForm::AZ) link = from_az_form(AZForm{link});
      CHECK(*knots.entries[m] == link);
    }
  }
}

TEST_CASE("specialization") {
  const LaurentPoly tre = P("a^2*t + a^2*t^-1 - a^4");
  CHECK(specialize_homfly(tre, InvariantKind::Alexander) == P("t + t^-1 - 1"));
  CHECK(specialize_homfly(tre, InvariantKind::Jones) == P("t^3 + t - t^4"));
  CHECK(specialize_homfly(P("1"), InvariantKind::Jones) == P("1"));
  CHECK_THROWS_AS(specialize_homfly(P("q"), InvariantKind::Alexander), MissingImage);
  const auto h = knot_series(InvariantKind::Homfly, 50);
  const auto a = knot_series(InvariantKind::Alexander, 50);
  const auto j = knot_series(InvariantKind::Jones, 50);
  for (int m = 0; m <= 50; ++m) {
    CHECK(specialize_homfly(*h.entries[m], InvariantKind::Alexander) == *a.entries[m]);
    CHECK(specialize_homfly(*h.entries[m], InvariantKind::Jones) == *j.entries[m]);
  }
}

TEST_CASE("skein coefficients from the numbers") {
  for (InvariantKind k : kAllKinds) CHECK(skein_from_numbers(family_of(k)) == link_coeffs(k));
  CHECK(skein_from_numbers(Family::BMq) == SkeinCoeffs{P("q^(1/2) - q^(-1/2)"), P("1")});
  CHECK(skein_from_numbers(Family::H1) == SkeinCoeffs{P("q^(1/2) - p^(-1/2)"), P("q^(1/2)*p^(-1/2)")});
  CHECK(skein_from_numbers(Family::H2) == SkeinCoeffs{P("q^(3/2) - p^(1/2)"), P("q^(3/2)*p^(1/2)")});
  CHECK(skein_from_numbers(Family::QP) == SkeinCoeffs{P("p^(1/2) - q^(1/2)"), P("q^(1/2)*p^(1/2)")});
}

TEST_CASE("(a,z) form") {
  CHECK(to_az_form(P("a^2*t + a^2*t^-1 - a^4")).poly == P("a^2*z^2 + 2*a^2 - a^4"));
  CHECK(to_az_form(P("t - 1 + t^-1")).poly == P("z^2 + 1"));
  CHECK(to_az_form(P("1")).poly == P("1"));
  CHECK(to_az_form(LaurentPoly()).poly.is_zero());
  CHECK(to_az_form(P("t^(1/2) - t^(-1/2)")).poly == P("z"));
  CHECK_THROWS_AS(to_az_form(P("t + t^3 - t^4")), NotExpressible);
  CHECK_THROWS_AS(to_az_form(P("t")), NotExpressible);
  CHECK_THROWS_AS(to_az_form(P("q")), NotExpressible);

  const AZForm hopf{P("a*z + a*z^-1 - a^3*z^-1")};
  CHECK(az_clearing_power(hopf) == 1);
  CHECK(az_clearing_power(AZForm{P("z^2 + 1")}) == 0);
  CHECK_THROWS_AS(from_az_form(hopf), NotExpressible);
  CHECK(from_az_form(AZForm{P("z^2")}) == P("t - 2 + t^-1"));

  const auto s = knot_series(InvariantKind::Homfly, 50);
  for (int m = 0; m <= 50; ++m) CHECK(from_az_form(to_az_form(*s.entries[m])) == *s.entries[m]);
}

TEST_CASE("(a,z) form against numeric z") {
  const auto s = knot_series(InvariantKind::Alexander, 20);
  for (int m = 0; m <= 20; ++m) CHECK(oracle::eval_at(to_az_form(*s.entries[m]).poly, kValues) == at(*s.entries[m]));
}

TEST_CASE("torus names") {
  CHECK(torus_name(3) == "T(3,2) 3_1");
  CHECK(torus_name(9) == "T(9,2) 9_1");
  CHECK(torus_name(11) == "T(11,2)");
  CHECK(torus_name(2) == "L(2,2) Hopf");
  CHECK(torus_name(0) == "L(0,2) unlink");
  CHECK(torus_name(4) == "L(4,2)");
}
