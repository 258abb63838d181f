#pragma once

// Deformed "bosonic" numbers [n]_{u,v} = (u^n - v^n) / (u - v) for a monomial
// pair (u, v), and the named families built from the three skein relations.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "knotqp/laurent.hpp"

namespace knotqp {

class QPSpec {
 public:
  // Throws InvalidSpec when u == v.
  QPSpec(Monomial u, Monomial v);

  const Monomial& u() const { return u_; }
  const Monomial& v() const { return v_; }
  bool operator==(const QPSpec&) const = default;

 private:
  Monomial u_;
  Monomial v_;
};

enum class Family { Alexander, Jones, Homfly, H1, H2, BMq, QP };

inline constexpr std::array<Family, 7> kAllFamilies = {Family::Alexander, Family::Jones, Family::Homfly,
                                                      Family::H1,        Family::H2,    Family::BMq,
                                                      Family::QP};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Alexander (t, t^-1), Jones (t^3, t), Homfly (a^2 t, a^2 t^-1),
// H1 (q, p^-1), H2 (q^3, p), BMq (q, q^-1), QP (q, p).
QPSpec family_spec(Family f);

// Closed sum  sum_{i=0}^{n-1} u^{n-1-i} v^i ; [0] = 0.
LaurentPoly qp_number(const QPSpec& spec, int n);
inline LaurentPoly qp_number(Family f, int n) { return qp_number(family_spec(f), n); }

// [n+1] = (u+v)[n] - uv[n-1] from [0] = 0, [1] = 1.
LaurentPoly qp_number_recurrence(const QPSpec& spec, int n);
// Entries [0] .. [n_max] of the same recurrence.
std::vector<LaurentPoly> qp_sequence_recurrence(const QPSpec& spec, int n_max);

// exact_div(u^n - v^n, u - v), n >= 1.
LaurentPoly qp_number_division(const QPSpec& spec, int n);

// [n]^H / [n]^A, a^{2(n-1)}.
Monomial homfly_alexander_multiplier(int n);
// [n]^H / [n]^V as computed by exact division: (a t^-1)^{2(n-1)}.
Monomial homfly_jones_multiplier(int n);

}  // namespace knotqp
