#include "knotqp/verify.hpp"

#include <array>
#include <functional>
#include <future>

#include "knotqp/errors.hpp"
#include "knotqp/expr.hpp"
#include "knotqp/qp_numbers.hpp"
#include "knotqp/skein.hpp"
#include "knotqp/substitutions.hpp"

namespace knotqp {

namespace {

// Collects the first counterexample.
class Outcome {
 public:
  bool ok() const { return !failure_; }
  void fail(std::string detail) {
    if (!failure_) failure_ = std::move(detail);
  }
  // Records a mismatch and returns false when lhs != rhs.
  bool expect_eq(const LaurentPoly& lhs, const LaurentPoly& rhs, const std::string& where) {
    if (lhs == rhs) return true;
    fail(where + ": " + to_string(lhs) + " != " + to_string(rhs));
    return false;
  }
  CheckReport report(std::string success_detail, int n_max) && {
    CheckReport r;
    r.passed = ok();
    r.detail = failure_ ? *failure_ : std::move(success_detail);
    r.n_max = n_max;
    return r;
  }

 private:
  std::optional<std::string> failure_;
};

std::string range(int n_max, const char* var = "n") {
  return "1 <= " + std::string(var) + " <= " + std::to_string(n_max);
}

LaurentPoly a_power(int n) { return LaurentPoly::var('a', 2 * (n - 1)); }

CheckReport three_route(int n_max) {
  Outcome out;
  for (Family f : kAllFamilies) {
    const QPSpec spec = family_spec(f);
    const auto rec = qp_sequence_recurrence(spec, n_max);
    for (int n = 1; n <= n_max && out.ok(); ++n) {
      const LaurentPoly sum = qp_number(spec, n);
      const std::string at = std::string(family_name(f)) + " n=" + std::to_string(n);
      out.expect_eq(sum, rec[n], at + " sum vs recurrence") &&
          out.expect_eq(sum, qp_number_division(spec, n), at + " sum vs division");
    }
  }
  return std::move(out).report("sum = recurrence = division for all 6 families, " + range(n_max), n_max);
}

CheckReport bm_coincidence(int n_max) {
  Outcome out;
  const SubstitutionMap q_to_t{{'q', Monomial::var('t')}};
  for (int n = 1; n <= n_max && out.ok(); ++n) {
    out.expect_eq(substitute(qp_number(Family::BMq, n), q_to_t), qp_number(Family::Alexander, n),
                  "n=" + std::to_string(n));
  }
  return std::move(out).report("[n]^A = [n]_q with q = t, " + range(n_max), n_max);
}

struct Reference {
  InvariantKind kind;
  const char* l1;
  const char* l2;
  const char* k1;
  const char* k2;
  const char* trefoil;
};

constexpr std::array<Reference, 3> kReference = {{
    {InvariantKind::Alexander, "t^(1/2) - t^(-1/2)", "1", "t + t^-1", "-1", "t - 1 + t^-1"},
    {InvariantKind::Jones, "t^(3/2) - t^(1/2)", "t^2", "t^3 + t", "-t^4", "t + t^3 - t^4"},
    {InvariantKind::Homfly, "a*t^(1/2) - a*t^(-1/2)", "a^2", "a^2*t + a^2*t^-1", "-a^4",
     "a^2*t + a^2*t^-1 - a^4"},
}};

CheckReport eq8_coeffs(int n_max) {
  Outcome out;
  for (const auto& pub : kReference) {
    const std::string k(kind_name(pub.kind));
    const SkeinCoeffs l = link_coeffs(pub.kind);
    const KnotCoeffs kc = knot_coeffs(pub.kind);
    out.expect_eq(l.l1, parse_poly(pub.l1), k + " l1");
    out.expect_eq(l.l2, parse_poly(pub.l2), k + " l2");
    out.expect_eq(kc.k1, pow(l.l1, 2) + l.l2 + l.l2, k + " k1 = l1^2 + 2 l2");
    out.expect_eq(kc.k2, -pow(l.l2, 2), k + " k2 = -l2^2");
    out.expect_eq(kc.k1, parse_poly(pub.k1), k + " k1");
    out.expect_eq(kc.k2, parse_poly(pub.k2), k + " k2");
  }
  return std::move(out).report("k1 = l1^2 + 2 l2, k2 = -l2^2 and reference values for all 3 kinds", n_max);
}

CheckReport trefoil(int n_max) {
  Outcome out;
  for (const auto& pub : kReference) {
    out.expect_eq(*knot_series(pub.kind, 1).entries[1], parse_poly(pub.trefoil),
                  std::string(kind_name(pub.kind)) + " trefoil");
  }
  return std::move(out).report("P_{3,2} = k1 + k2 for all 3 kinds", n_max);
}

CheckReport knot_vs_link(int n_max) {
  Outcome out;
  for (InvariantKind kind : kAllKinds) {
    const InvariantSeries knots = knot_series(kind, n_max);
    const InvariantSeries links = link_series(kind, 2 * n_max + 1);
    for (int m = 0; m <= n_max && out.ok(); ++m) {
      const LaurentPoly& knot = *knots.entries[m];
      const LaurentPoly& link = *links.entries[2 * m + 1];
      const std::string at = std::string(kind_name(kind)) + " m=" + std::to_string(m);
      if (links.form == VariableForm::AZ) {
        out.expect_eq(to_az_form(knot).poly, link, at + " (a,z)") &&
            out.expect_eq(from_az_form(AZForm{link}), knot, at + " (a,t)");
      } else {
        out.expect_eq(knot, link, at);
      }
    }
  }
  return std::move(out).report("knot series m = link series 2m+1 for all 3 kinds, 0 <= m <= " +
                                   std::to_string(n_max),
                               n_max);
}

CheckReport homfly_specialize(int n_max) {
  Outcome out;
  const InvariantSeries h = knot_series(InvariantKind::Homfly, n_max);
  for (InvariantKind target : {InvariantKind::Alexander, InvariantKind::Jones}) {
    const InvariantSeries s = knot_series(target, n_max);
    for (int m = 0; m <= n_max && out.ok(); ++m) {
      out.expect_eq(specialize_homfly(*h.entries[m], target), *s.entries[m],
                    std::string(kind_name(target)) + " m=" + std::to_string(m));
    }
  }
  return std::move(out).report("a -> 1 gives Alexander, a -> t gives Jones, 0 <= m <= " + std::to_string(n_max),
                               n_max);
}

CheckReport roundtrip_numbers_to_skein(int n_max) {
  Outcome out;
  for (InvariantKind kind : kAllKinds) {
    const SkeinCoeffs got = skein_from_numbers(family_of(kind));
    const SkeinCoeffs want = link_coeffs(kind);
    const std::string k(kind_name(kind));
    out.expect_eq(got.l1, want.l1, k + " l1");
    out.expect_eq(got.l2, want.l2, k + " l2");
  }
  return std::move(out).report("square roots of the number coefficients recover (l1, l2) for all 3 kinds", n_max);
}

CheckReport eq33_multiplier(int n_max) {
  Outcome out;
  for (int n = 1; n <= n_max && out.ok(); ++n) {
    const std::string at = "n=" + std::to_string(n);
    out.expect_eq(LaurentPoly(homfly_alexander_multiplier(n)), a_power(n), at + " [n]^H / [n]^A") &&
        out.expect_eq(qp_number(Family::Homfly, n), a_power(n) * qp_number(Family::Alexander, n), at);
  }
  return std::move(out).report("[n]^H = a^(2(n-1)) [n]^A, " + range(n_max), n_max);
}

CheckReport eq34_multiplier(int n_max) {
  Outcome out;
  bool printed_matches = true;
  std::string printed_note;
  std::string sample;
  for (int n = 1; n <= n_max && out.ok(); ++n) {
    const Monomial m = homfly_jones_multiplier(n);
    const Monomial computed = Monomial::from_exponents({{'a', 2 * (n - 1)}, {'t', -2 * (n - 1)}});
    const Monomial printed = Monomial::from_exponents({{'a', 2 * (n - 1)}, {'t', 2 * (n - 1)}});
    out.expect_eq(LaurentPoly(m), LaurentPoly(computed), "n=" + std::to_string(n) + " [n]^H / [n]^V");
    if (n == std::min(n_max, 2)) sample = "n=" + std::to_string(n) + ": " + to_string(m);
    if (printed_matches && !(m == printed)) {
      printed_matches = false;
      printed_note = "mismatch at n=" + std::to_string(n) + " (printed form gives " + to_string(printed) + ")";
    }
  }
  CheckReport r = std::move(out).report(
      "computed [n]^H / [n]^V = (a*t^-1)^(2(n-1)) for " + range(n_max) + " (" + sample +
          "); printed (aq)^(2(n-1)) with q = t: " + (printed_matches ? "matches" : printed_note),
      n_max);
  r.printed_form_matches = printed_matches;
  return r;
}

CheckReport h_equivalence(int n_max, Family source, LaurentPoly (*route)(const LaurentPoly&)) {
  Outcome out;
  for (int n = 1; n <= n_max && out.ok(); ++n) {
    const LaurentPoly image = route(qp_number(source, n));
    const std::string at = "n=" + std::to_string(n);
    out.expect_eq(image, qp_number(Family::Homfly, n), at) &&
        out.expect_eq(image, a_power(n) * qp_number(Family::Alexander, n), at + " vs a^(2(n-1)) [n]^A");
  }
  return std::move(out).report("substituted [n]^" + std::string(source == Family::H1 ? "H1" : "H2") +
                                   " = [n]^H, " + range(n_max),
                               n_max);
}

CheckReport az_roundtrip(int n_max) {
  Outcome out;
  out.expect_eq(to_az_form(parse_poly("a^2*t + a^2*t^-1 - a^4")).poly, parse_poly("a^2*z^2 + 2*a^2 - a^4"),
                "HOMFLY trefoil in (a,z)");
  out.expect_eq(to_az_form(parse_poly("t - 1 + t^-1")).poly, parse_poly("z^2 + 1"), "Alexander trefoil in z");
  for (InvariantKind kind : {InvariantKind::Alexander, InvariantKind::Homfly}) {
    const InvariantSeries s = knot_series(kind, n_max);
    for (int m = 0; m <= n_max && out.ok(); ++m) {
      const LaurentPoly& p = *s.entries[m];
      out.expect_eq(from_az_form(to_az_form(p)), p, std::string(kind_name(kind)) + " m=" + std::to_string(m));
    }
  }
  return std::move(out).report("z -> t^(1/2) - t^(-1/2) inverts to_az_form on Alexander and HOMFLY knots, 0 <= m <= " +
                                   std::to_string(n_max),
                               n_max);
}

struct Entry {
  std::string_view name;
  std::function<CheckReport(int)> run;
};

const std::array<Entry, 12>& registry() {
  static const std::array<Entry, 12> r = {{
      {"three-route", three_route},
      {"bm-coincidence", bm_coincidence},
      {"eq8-coeffs", eq8_coeffs},
      {"trefoil", trefoil},
      {"knot-vs-link", knot_vs_link},
      {"homfly-specialize", homfly_specialize},
      {"roundtrip-sect7", roundtrip_numbers_to_skein},
      {"eq33-multiplier", eq33_multiplier},
      {"eq34-multiplier", eq34_multiplier},
      {"h1-equivalence", [](int n) { return h_equivalence(n, Family::H1, h1_to_h); }},
      {"h2-equivalence", [](int n) { return h_equivalence(n, Family::H2, h2_to_h); }},
      {"az-roundtrip", az_roundtrip},
  }};
  return r;
}

const std::array<std::string_view, 12>& names() {
  static const std::array<std::string_view, 12> n = [] {
    std::array<std::string_view, 12> out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = registry()[i].name;
    return out;
  }();
  return n;
}

CheckReport run_entry(const Entry& e, int n_max) {
  CheckReport r;
  try {
    r = e.run(n_max);
  } catch (const Error& err) {
    r.passed = false;
    r.detail = err.what();
    r.n_max = n_max;
  }
  r.name = std::string(e.name);
  return r;
}

}  // namespace

std::span<const std::string_view> check_names() { return names(); }

CheckReport run_check(std::string_view name, int n_max) {
  for (const Entry& e : registry()) {
    if (e.name != name) continue;
    if (n_max < 1) throw BadRange("n_max must be >= 1, got " + std::to_string(n_max));
    return run_entry(e, n_max);
  }
  throw UnknownCheck(std::string(name));
}

std::vector<CheckReport> run_all(int n_max, bool parallel) {
  if (n_max < 1) throw BadRange("n_max must be >= 1, got " + std::to_string(n_max));
  std::vector<CheckReport> reports;
  if (!parallel) {
    for (const Entry& e : registry()) reports.push_back(run_entry(e, n_max));
    return reports;
  }
  std::vector<std::future<CheckReport>> pending;
  for (const Entry& e : registry()) pending.push_back(std::async(std::launch::async, run_entry, std::cref(e), n_max));
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

Json to_json(const CheckReport& r) {
  Json j{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"n_max", r.n_max}};
  if (r.printed_form_matches) j["printed_form_matches"] = *r.printed_form_matches;
  return j;
}

}  // namespace knotqp
