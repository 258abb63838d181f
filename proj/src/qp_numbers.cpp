#include "knotqp/qp_numbers.hpp"

#include "knotqp/errors.hpp"

namespace knotqp {

namespace {

Monomial mono(std::vector<Monomial::Exponent> exps) { return Monomial::from_exponents(std::move(exps)); }

void require_nonnegative(int n) {
  if (n < 0) throw NegativeIndex(n);
}

Monomial single_monomial_quotient(const LaurentPoly& num, const LaurentPoly& den, int n) {
  LaurentPoly q = exact_div(num, den);
  if (!q.is_monomial()) {
    throw InternalError("multiplier at n = " + std::to_string(n) + " is not a monomial: " + to_string(q));
  }
  return q.leading().first;
}

}  // namespace

QPSpec::QPSpec(Monomial u, Monomial v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_ == v_) throw InvalidSpec("QPSpec needs u != v, got u = v = " + to_string(u_));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Alexander:
      return "alexander";
    case Family::Jones:
      return "jones";
    case Family::Homfly:
      return "homfly";
    case Family::H1:
      return "h1";
    case Family::H2:
      return "h2";
    case Family::BMq:
      return "bmq";
    case Family::QP:
      return "qp";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

QPSpec family_spec(Family f) {
  switch (f) {
    case Family::Alexander:
      return {mono({{'t', 1}}), mono({{'t', -1}})};
    case Family::Jones:
      return {mono({{'t', 3}}), mono({{'t', 1}})};
    case Family::Homfly:
      // u + v = a^2 (t + t^-1), uv = a^4.
      return {mono({{'a', 2}, {'t', 1}}), mono({{'a', 2}, {'t', -1}})};
    case Family::H1:
      return {mono({{'q', 1}}), mono({{'p', -1}})};
    case Family::H2:
      return {mono({{'q', 3}}), mono({{'p', 1}})};
    case Family::BMq:
      return {mono({{'q', 1}}), mono({{'q', -1}})};
    case Family::QP:
      return {mono({{'q', 1}}), mono({{'p', 1}})};
  }
  throw InternalError("unknown family");
}

LaurentPoly qp_number(const QPSpec& spec, int n) {
  require_nonnegative(n);
  LaurentPoly out;
  for (int i = 0; i < n; ++i) out.add_term(spec.u().pow(n - 1 - i) * spec.v().pow(i), 1);
  return out;
}

std::vector<LaurentPoly> qp_sequence_recurrence(const QPSpec& spec, int n_max) {
  require_nonnegative(n_max);
  const LaurentPoly k1 = LaurentPoly(spec.u()) + LaurentPoly(spec.v());
  const Monomial uv = spec.u() * spec.v();
  std::vector<LaurentPoly> seq{LaurentPoly(), LaurentPoly(1)};
  seq.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n < n_max; ++n) {
    LaurentPoly next = k1 * seq[n];
    next.add_product(seq[n - 1], uv, -1);
    seq.push_back(std::move(next));
  }
  seq.resize(static_cast<std::size_t>(n_max) + 1);
  return seq;
}

LaurentPoly qp_number_recurrence(const QPSpec& spec, int n) {
  require_nonnegative(n);
  return qp_sequence_recurrence(spec, n)[n];
}

LaurentPoly qp_number_division(const QPSpec& spec, int n) {
  if (n < 1) throw BadRange("division route needs n >= 1, got " + std::to_string(n));
  LaurentPoly num = LaurentPoly(spec.u().pow(n)) - LaurentPoly(spec.v().pow(n));
  LaurentPoly den = LaurentPoly(spec.u()) - LaurentPoly(spec.v());
  try {
    return exact_div(num, den);
  } catch (const NotDivisible& e) {
    throw InternalError(std::string("(u^n - v^n)/(u - v) failed: ") + e.what());
  }
}

Monomial homfly_alexander_multiplier(int n) {
  if (n < 1) throw BadRange("multiplier needs n >= 1, got " + std::to_string(n));
  Monomial m = single_monomial_quotient(qp_number(Family::Homfly, n), qp_number(Family::Alexander, n), n);
  if (!(m == Monomial::var('a', 2 * (n - 1)))) {
    throw InternalError("[n]^H / [n]^A = " + to_string(m) + " at n = " + std::to_string(n));
  }
  return m;
}

Monomial homfly_jones_multiplier(int n) {
  if (n < 1) throw BadRange("multiplier needs n >= 1, got " + std::to_string(n));
  return single_monomial_quotient(qp_number(Family::Homfly, n), qp_number(Family::Jones, n), n);
}

}  // namespace knotqp
