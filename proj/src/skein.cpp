#include "knotqp/skein.hpp"

#include <map>

#include "knotqp/errors.hpp"

namespace knotqp {

namespace {

LaurentPoly half_t_difference() {
  return LaurentPoly::var('t', Rational(1, 2)) - LaurentPoly::var('t', Rational(-1, 2));
}

void require_vars(const LaurentPoly& p, std::string_view allowed, const char* what) {
  for (char v : p.variables()) {
    if (allowed.find(v) == std::string_view::npos) {
      throw NotExpressible(std::string(what) + ": unexpected variable '" + v + "' in " + to_string(p));
    }
  }
}

long long to_int(const Rational& r, const char* what) {
  if (!r.is_integer()) throw NotExpressible(std::string(what));
  return static_cast<long long>(r.numerator());
}

// C(d, 0) .. C(d, d)
std::vector<BigInt> binomial_row(long long d) {
  std::vector<BigInt> row{1};
  row.reserve(static_cast<std::size_t>(d) + 1);
  for (long long j = 1; j <= d; ++j) row.push_back(row.back() * (d - j + 1) / j);
  return row;
}

void run_recurrence(std::vector<std::optional<LaurentPoly>>& entries, std::size_t first, std::size_t last,
                    const LaurentPoly& c1, const LaurentPoly& c2) {
  for (std::size_t i = first; i < last; ++i) {
    entries[i + 1] = c1 * *entries[i] + c2 * *entries[i - 1];
  }
}

}  // namespace

std::string_view kind_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::Alexander:
      return "alexander";
    case InvariantKind::Jones:
      return "jones";
    case InvariantKind::Homfly:
      return "homfly";
  }
  return "?";
}

std::optional<InvariantKind> parse_kind(std::string_view name) {
  for (InvariantKind k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

Family family_of(InvariantKind k) {
  switch (k) {
    case InvariantKind::Alexander:
      return Family::Alexander;
    case InvariantKind::Jones:
      return Family::Jones;
    case InvariantKind::Homfly:
      return Family::Homfly;
  }
  throw InternalError("unknown invariant kind");
}

SkeinCoeffs link_coeffs(InvariantKind kind) {
  const LaurentPoly z = half_t_difference();
  switch (kind) {
    case InvariantKind::Alexander:
      // D+ - D- = z D0
      return {z, 1};
    case InvariantKind::Jones:
      // t^-1 V+ - t V- = z V0
      return {LaurentPoly::var('t') * z, LaurentPoly::var('t', 2)};
    case InvariantKind::Homfly:
      // a^-1 H+ - a H- = z H0
      return {LaurentPoly::var('a') * z, LaurentPoly::var('a', 2)};
  }
  throw InternalError("unknown invariant kind");
}

KnotCoeffs knot_coeffs(const SkeinCoeffs& l) { return {l.l1 * l.l1 + 2 * l.l2, -(l.l2 * l.l2)}; }

KnotCoeffs knot_coeffs(InvariantKind kind) { return knot_coeffs(link_coeffs(kind)); }

std::variant<LaurentPoly, AZForm> unlink2(InvariantKind kind) {
  const SkeinCoeffs l = link_coeffs(kind);
  if (kind != InvariantKind::Homfly) return exact_div(1 - l.l2, l.l1);
  // (1 - a^2) / (a z)
  const AZForm l1 = to_az_form(l.l1);
  const LaurentPoly num = 1 - l.l2;
  if (!l1.poly.is_monomial()) throw InternalError("HOMFLY l1 is not a monomial in (a, z)");
  return AZForm{num * LaurentPoly(l1.poly.leading().first.inverse())};
}

InvariantSeries link_series(InvariantKind kind, int n_max) {
  if (n_max < 2) throw BadRange("link series needs n_max >= 2, got " + std::to_string(n_max));
  InvariantSeries s{kind, Indexing::Link, VariableForm::AT, {}};
  s.entries.resize(static_cast<std::size_t>(n_max) + 1);

  SkeinCoeffs l = link_coeffs(kind);
  auto u = unlink2(kind);
  if (auto* az = std::get_if<AZForm>(&u)) {
    s.form = VariableForm::AZ;
    l.l1 = to_az_form(l.l1).poly;
    l.l2 = to_az_form(l.l2).poly;
    s.entries[1] = LaurentPoly(1);
    s.entries[2] = l.l1 + l.l2 * az->poly;
  } else {
    s.entries[0] = std::get<LaurentPoly>(u);
    s.entries[1] = LaurentPoly(1);
    s.entries[2] = l.l1 + l.l2 * *s.entries[0];
  }
  run_recurrence(s.entries, 2, s.entries.size() - 1, l.l1, l.l2);
  return s;
}

InvariantSeries knot_series(InvariantKind kind, int m_max) {
  if (m_max < 0) throw NegativeIndex(m_max);
  InvariantSeries s{kind, Indexing::Knot, VariableForm::AT, {}};
  s.entries.resize(static_cast<std::size_t>(std::max(m_max, 1)) + 1);
  const KnotCoeffs k = knot_coeffs(kind);
  s.entries[0] = LaurentPoly(1);
  s.entries[1] = k.k1 + k.k2;
  run_recurrence(s.entries, 1, s.entries.size() - 1, k.k1, k.k2);
  s.entries.resize(static_cast<std::size_t>(m_max) + 1);
  return s;
}

LaurentPoly specialize_homfly(const LaurentPoly& p, InvariantKind target) {
  SubstitutionMap map{{'t', Monomial::var('t')}};
  switch (target) {
    case InvariantKind::Alexander:
      map['a'] = Monomial();
      break;
    case InvariantKind::Jones:
      map['a'] = Monomial::var('t');
      break;
    case InvariantKind::Homfly:
      throw Error("HOMFLY specializes to alexander or jones only");
  }
  return substitute(p, map);
}

SkeinCoeffs skein_from_numbers(Family f) {
  const QPSpec spec = family_spec(f);
  const LaurentPoly k1 = LaurentPoly(spec.u()) + LaurentPoly(spec.v());
  const LaurentPoly k2 = -LaurentPoly(spec.u() * spec.v());
  LaurentPoly l2 = exact_sqrt(-k2);
  LaurentPoly l1 = exact_sqrt(k1 - 2 * l2);
  return {std::move(l1), std::move(l2)};
}

// Works in w = t^(1/2), where z = w - w^-1. A Laurent polynomial in w is a
// polynomial in z exactly when it is fixed by w -> -w^-1; peeling off c*z^d for
// the leading w^d decides this constructively.
AZForm to_az_form(const LaurentPoly& p) {
  require_vars(p, "at", "to_az_form");
  std::map<Rational, std::map<long long, BigInt>> by_a;
  for (const auto& [m, c] : p.terms()) {
    long long w = to_int(2 * m.exponent('t'), "t exponent is not a multiple of 1/2");
    by_a[m.exponent('a')][w] += c;
  }

  LaurentPoly out;
  std::map<long long, std::vector<BigInt>> rows;
  for (auto& [a_exp, wpoly] : by_a) {
    std::erase_if(wpoly, [](const auto& kv) { return kv.second == 0; });
    while (!wpoly.empty()) {
      auto top = std::prev(wpoly.end());
      const long long d = top->first;
      const BigInt c = top->second;
      if (d < 0) {
        throw NotExpressible("not a polynomial in z = t^(1/2) - t^(-1/2): " + to_string(p));
      }
      // z^d = sum_j C(d, j) (-1)^j w^{d - 2j}
      auto row = rows.find(d);
      if (row == rows.end()) row = rows.emplace(d, binomial_row(d)).first;
      for (long long j = 0; j <= d; ++j) {
        BigInt term = c * row->second[j];
        if (j % 2 != 0) term = -term;
        auto& slot = wpoly[d - 2 * j];
        slot -= term;
        if (slot == 0) wpoly.erase(d - 2 * j);
      }
      out.add_term(Monomial::from_exponents({{'a', a_exp}, {'z', d}}), c);
    }
  }
  return {std::move(out)};
}

LaurentPoly from_az_form(const AZForm& f) {
  require_vars(f.poly, "az", "from_az_form");
  // Accumulate in w = t^(1/2): z^k = sum_j C(k, j) (-1)^j w^{k - 2j}.
  std::map<std::pair<Rational, long long>, BigInt> acc;
  std::map<long long, std::vector<BigInt>> rows;
  for (const auto& [m, c] : f.poly.terms()) {
    const long long k = to_int(m.exponent('z'), "fractional power of z");
    if (k < 0) throw NotExpressible("negative power of z in " + to_string(f.poly));
    auto row = rows.find(k);
    if (row == rows.end()) row = rows.emplace(k, binomial_row(k)).first;
    const Rational a = m.exponent('a');
    for (long long j = 0; j <= k; ++j) {
      BigInt term = c * row->second[j];
      if (j % 2 != 0) term = -term;
      acc[{a, k - 2 * j}] += term;
    }
  }
  LaurentPoly out;
  for (const auto& [key, c] : acc) {
    out.add_term(Monomial::from_exponents({{'a', key.first}, {'t', Rational(key.second, 2)}}), c);
  }
  return out;
}

int az_clearing_power(const AZForm& f) {
  long long k = 0;
  for (const auto& [m, c] : f.poly.terms()) {
    k = std::max(k, -to_int(m.exponent('z'), "fractional power of z"));
  }
  return static_cast<int>(k);
}

std::string torus_name(int n) {
  static const char* const kKnots[] = {"0_1", "3_1", "5_1", "7_1", "9_1"};
  if (n % 2 == 1) {
    std::string name = "T(" + std::to_string(n) + ",2)";
    int m = (n - 1) / 2;
    if (m < 5) name += " " + std::string(kKnots[m]);
    return name;
  }
  std::string name = "L(" + std::to_string(n) + ",2)";
  if (n == 0) name += " unlink";
  if (n == 2) name += " Hopf";
  return name;
}

}  // namespace knotqp
