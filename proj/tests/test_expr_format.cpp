#include "doctest.h"

#include "knotqp/errors.hpp"
#include "knotqp/expr.hpp"
#include "knotqp/format.hpp"
#include "knotqp/qp_numbers.hpp"

using namespace knotqp;

TEST_CASE("expressions") {
  CHECK(parse_poly("q^3 + q^2*p + q*p^2 + p^3") == qp_number(QPSpec(Monomial::var('q'), Monomial::var('p')), 4));
  CHECK(parse_poly("(t - t^(-1))") == LaurentPoly::var('t') - LaurentPoly::var('t', -1));
  CHECK(parse_poly("(q^2 - p^2)/(q - p)") == parse_poly("q + p"));
  CHECK(parse_poly("t^(1/2) * t^(1/2)") == LaurentPoly::var('t'));
  CHECK(parse_poly("(t^3 - t^(-3))/(t - t^(-1))") == parse_poly("t^2 + 1 + t^-2"));
  CHECK(parse_poly("  2 * ( a + 1 ) ^ 2 ") == parse_poly("2*a^2 + 4*a + 2"));
  CHECK(parse_poly("-t^2") == parse_poly("0 - t^2"));
  CHECK(parse_poly("(a*t)^(1/2)") == parse_poly("a^(1/2)*t^(1/2)"));
  CHECK(parse_poly("(t^2 + 2*t + 1)/(t + 1)") == parse_poly("t + 1"));
  CHECK_THROWS_AS(parse_poly("(t + 1)^-1"), NotDivisible);
  CHECK(parse_poly("(-t)^-3") == parse_poly("-t^-3"));
  CHECK(parse_poly("t^(2/4)") == LaurentPoly::var('t', Rational(1, 2)));
}

TEST_CASE("expression errors") {
  CHECK_THROWS_AS(parse_poly("(1+t)^(1/2)"), NonMonomialFractionalPower);
  CHECK_THROWS_AS(parse_poly("(2*t)^(1/2)"), NonMonomialFractionalPower);
  CHECK_THROWS_AS(parse_poly("(t^2 - 1)/(t - 2)"), NotDivisible);
  CHECK_THROWS_AS(parse_poly("t/0"), DivByZero);
  CHECK_THROWS_AS(parse_poly(""), SyntaxError);
  CHECK_THROWS_AS(parse_poly("t +"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("ab"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("t^(1/0)"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(t"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("T"), SyntaxError);
  try {
    parse_poly("t + * 2");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("identities") {
  auto [l, r] = parse_identity("(q^3 - p^3)/(q - p) == q^2 + q*p + p^2");
  CHECK(l == r);
  auto [l2, r2] = parse_identity("t + 1 == t");
  CHECK_FALSE(l2 == r2);
  CHECK_THROWS_AS(parse_identity("t + 1"), SyntaxError);
  try {
    parse_identity("t == t +");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 8);
  }
}

TEST_CASE("latex") {
  CHECK(to_latex(LaurentPoly()) == "0");
  CHECK(to_latex(parse_poly("t^(1/2) - t^(-1/2)")) == "t^{1/2} - t^{-1/2}");
  CHECK(to_latex(parse_poly("-a^4 + a^2*t + 2*a^2*t^-1")) == "-a^{4} + a^{2} t + 2 a^{2} t^{-1}");
  CHECK(to_latex(parse_poly("3")) == "3");
}

TEST_CASE("series rendering") {
  const InvariantSeries s = knot_series(InvariantKind::Homfly, 1);
  CHECK(render_series(s, OutputFormat::Text) == "n=1 T(1,2) 0_1: 1\nn=3 T(3,2) 3_1: -a^4 + a^2*t + a^2*t^-1\n");
  CHECK(render_series(s, OutputFormat::Csv) == "n,polynomial\n1,\"1\"\n3,\"-a^4 + a^2*t + a^2*t^-1\"\n");
  CHECK(render_series(s, OutputFormat::Latex) == "$P_{1,2} = 1$\n$P_{3,2} = -a^{4} + a^{2} t + a^{2} t^{-1}$\n");
  const std::string table = render_table(s, OutputFormat::Text);
  CHECK(table.find("T(3,2) 3_1 | -a^4 + a^2*t + a^2*t^-1") != std::string::npos);
  CHECK(render_number("h1", 2, parse_poly("q + p^-1"), OutputFormat::Latex) == "$[2]^{h1} = q + p^{-1}$\n");
  CHECK(render_number("h1", 2, parse_poly("q + p^-1"), OutputFormat::Text) == "q + p^-1\n");
}

TEST_CASE("series json round trip") {
  for (InvariantKind k : kAllKinds) {
    for (const InvariantSeries& s : {knot_series(k, 6), link_series(k, 7)}) {
      const std::string dumped = to_json(s).dump();
      const InvariantSeries back = series_from_json(Json::parse(dumped));
      CHECK(back.kind == s.kind);
      CHECK(back.indexing == s.indexing);
      CHECK(back.form == s.form);
      CHECK(back.entries == s.entries);
      CHECK(to_json(back).dump() == dumped);
    }
  }
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"kind":"kauffman"})")), Error);
  CHECK_THROWS_AS(series_from_json(Json::parse("[1,2]")), Error);
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_FALSE(parse_format("xml").has_value());
}
