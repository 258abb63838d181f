#pragma once

// Skein recurrences for the torus links L(n,2): P_{n+1} = l1 P_n + l2 P_{n-1},
// and for the torus knots T(2m+1,2): P_{m+1} = k1 P_m + k2 P_{m-1} with
// k1 = l1^2 + 2 l2, k2 = -l2^2.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotqp/laurent.hpp"
#include "knotqp/qp_numbers.hpp"

namespace knotqp {

enum class InvariantKind { Alexander, Jones, Homfly };

inline constexpr std::array<InvariantKind, 3> kAllKinds = {InvariantKind::Alexander, InvariantKind::Jones,
                                                          InvariantKind::Homfly};

std::string_view kind_name(InvariantKind k);
std::optional<InvariantKind> parse_kind(std::string_view name);
Family family_of(InvariantKind k);

struct SkeinCoeffs {
  LaurentPoly l1;
  LaurentPoly l2;
  bool operator==(const SkeinCoeffs&) const = default;
};

struct KnotCoeffs {
  LaurentPoly k1;
  LaurentPoly k2;
  bool operator==(const KnotCoeffs&) const = default;
};

// A polynomial in the variables {a, z}, z standing for t^(1/2) - t^(-1/2).
struct AZForm {
  LaurentPoly poly;
  bool operator==(const AZForm&) const = default;
};

enum class Indexing { Knot, Link };
// Which variables the entries of a series use.
enum class VariableForm { AT, AZ };

struct InvariantSeries {
  InvariantKind kind;
  Indexing indexing;
  VariableForm form = VariableForm::AT;
  // Knot indexing: entries[m] is T(2m+1,2). Link indexing: entries[n] is L(n,2).
  std::vector<std::optional<LaurentPoly>> entries;

  // The n of P_{n,2} for entries[i].
  int torus_index(std::size_t i) const {
    return indexing == Indexing::Knot ? 2 * static_cast<int>(i) + 1 : static_cast<int>(i);
  }
};

SkeinCoeffs link_coeffs(InvariantKind kind);
KnotCoeffs knot_coeffs(InvariantKind kind);
KnotCoeffs knot_coeffs(const SkeinCoeffs& l);

// Two-component unlink, (1 - l2) / l1. Laurent in t for Alexander and Jones;
// for HOMFLY only the (a, z) form (a^-1 - a) z^-1 exists.
std::variant<LaurentPoly, AZForm> unlink2(InvariantKind kind);

// Throws BadRange if n_max < 2. HOMFLY link entries are kept in (a, z) form
// and entries[0] is absent for HOMFLY.
InvariantSeries link_series(InvariantKind kind, int n_max);
InvariantSeries knot_series(InvariantKind kind, int m_max);

// a -> 1 (Alexander) or a -> t (Jones).
LaurentPoly specialize_homfly(const LaurentPoly& p, InvariantKind target);

// (u, v) -> k1 = u + v, k2 = -uv -> l2 = sqrt(-k2), l1 = sqrt(k1 - 2 l2).
SkeinCoeffs skein_from_numbers(Family f);

// Throws NotExpressible when p is not a polynomial in a and z.
AZForm to_az_form(const LaurentPoly& p);
// z -> t^(1/2) - t^(-1/2). Throws NotExpressible on negative powers of z.
LaurentPoly from_az_form(const AZForm& f);
// Smallest k >= 0 with poly * z^k free of negative z powers.
int az_clearing_power(const AZForm& f);

// "T(3,2) 3_1", "L(2,2) Hopf", ...
std::string torus_name(int n);

}  // namespace knotqp
