#include "knotqp/laurent.hpp"

#include <algorithm>

#include "knotqp/errors.hpp"

namespace knotqp {

namespace {

Rational sum_exponents(const std::vector<Monomial::Exponent>& exps) {
  Rational d = 0;
  for (const auto& [v, e] : exps) d += e;
  return d;
}

// Per-variable [min, max] exponent over all terms; absent variables count as 0.
using Box = std::map<char, std::pair<Rational, Rational>>;

Box exponent_box(const LaurentPoly& p, const std::set<char>& vars) {
  Box box;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    for (char v : vars) {
      Rational e = m.exponent(v);
      auto it = box.find(v);
      if (first || it == box.end()) {
        box[v] = {e, e};
      } else {
        it->second.first = std::min(it->second.first, e);
        it->second.second = std::max(it->second.second, e);
      }
    }
    first = false;
  }
  return box;
}

bool inside(const Monomial& m, const Box& box) {
  for (const auto& [v, range] : box) {
    Rational e = m.exponent(v);
    if (e < range.first || e > range.second) return false;
  }
  // Variables outside the box are pinned to exponent 0.
  for (const auto& [v, e] : m.exponents()) {
    if (!box.contains(v)) return false;
  }
  return true;
}

std::set<char> union_vars(const LaurentPoly& a, const LaurentPoly& b) {
  std::set<char> vars = a.variables();
  vars.merge(b.variables());
  return vars;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> canonical)
    : exps_(std::move(canonical)), degree_(sum_exponents(exps_)) {}

Monomial Monomial::from_exponents(std::vector<Exponent> exps) {
  std::stable_sort(exps.begin(), exps.end(),
                   [](const Exponent& a, const Exponent& b) { return a.first < b.first; });
  std::vector<Exponent> out;
  for (auto& [v, e] : exps) {
    if (!out.empty() && out.back().first == v) {
      out.back().second += e;
    } else {
      out.emplace_back(v, std::move(e));
    }
  }
  std::erase_if(out, [](const Exponent& x) { return x.second == 0; });
  return Monomial(std::move(out));
}

Monomial Monomial::var(char v, const Rational& e) { return from_exponents({{v, e}}); }

Rational Monomial::exponent(char v) const {
  for (const auto& [w, e] : exps_) {
    if (w == v) return e;
    if (w > v) break;
  }
  return 0;
}

std::set<char> Monomial::variables() const {
  std::set<char> vars;
  for (const auto& [v, e] : exps_) vars.insert(v);
  return vars;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Exponent> out;
  out.reserve(exps_.size() + other.exps_.size());
  auto a = exps_.begin();
  auto b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational e = a->second + b->second;
      if (e != 0) out.emplace_back(a->first, std::move(e));
      ++a;
      ++b;
    }
  }
  return Monomial(std::move(out));
}

Monomial Monomial::operator/(const Monomial& other) const { return *this * other.inverse(); }

Monomial Monomial::pow(const Rational& r) const {
  if (r == 0) return Monomial();
  std::vector<Exponent> out;
  out.reserve(exps_.size());
  for (const auto& [v, e] : exps_) out.emplace_back(v, e * r);
  return Monomial(std::move(out));
}

int compare_graded_lex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    // Compare the exponent of the alphabetically smallest variable present in either.
    char v;
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      v = i->first;
    } else {
      v = j->first;
    }
    static const Rational kZero;
    const Rational& ea = (i != x.end() && i->first == v) ? (i++)->second : kZero;
    const Rational& eb = (j != y.end() && j->first == v) ? (j++)->second : kZero;
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const BigInt& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool LaurentPoly::is_monomial() const { return terms_.size() == 1 && leading().second == 1; }

std::set<char> LaurentPoly::variables() const {
  std::set<char> vars;
  for (const auto& [m, c] : terms_) vars.merge(m.variables());
  return vars;
}

void LaurentPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::add_product(const LaurentPoly& p, const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  for (const auto& [pm, pc] : p.terms_) add_term(pm * m, pc * c);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  const LaurentPoly& outer = a.size() <= b.size() ? a : b;
  const LaurentPoly& inner = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : outer.terms()) out.add_product(inner, m, c);
  return out;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result = 1;
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly substitute(const LaurentPoly& p, const SubstitutionMap& map) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial image;
    for (const auto& [v, e] : m.exponents()) {
      auto it = map.find(v);
      if (it == map.end()) throw MissingImage(v);
      image = image * it->second.pow(e);
    }
    out.add_term(image, c);
  }
  return out;
}

// Leading-term reduction. If num = q*den then every exponent of q lies in
// [min_x(num) - min_x(den), max_x(num) - max_x(den)] for each variable x, and
// the remainders live on a finitely generated (discrete) exponent lattice, so
// the strictly decreasing quotient terms must leave that box if num is not a
// multiple of den.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivByZero();
  if (num.is_zero()) return {};

  const std::set<char> vars = union_vars(num, den);
  const Box num_box = exponent_box(num, vars);
  const Box den_box = exponent_box(den, vars);
  Box box;
  for (char v : vars) {
    box[v] = {num_box.at(v).first - den_box.at(v).first,
              num_box.at(v).second - den_box.at(v).second};
  }

  const auto& [lead_m, lead_c] = den.leading();
  LaurentPoly quotient;
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (c % lead_c != 0) throw NotDivisible(to_string(rem));
    Monomial qm = m / lead_m;
    if (!inside(qm, box)) throw NotDivisible(to_string(rem));
    BigInt qc = c / lead_c;
    quotient.add_term(qm, qc);
    rem.add_product(den, qm, -qc);
  }
  return quotient;
}

LaurentPoly exact_sqrt(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const auto& [lead_m, lead_c] = p.leading();
  if (lead_c < 0) throw NotAPerfectSquare(to_string(p));
  BigInt root_c = boost::multiprecision::sqrt(lead_c);
  if (root_c * root_c != lead_c) throw NotAPerfectSquare(to_string(p));

  const std::set<char> vars = p.variables();
  Box box = exponent_box(p, vars);
  for (auto& [v, range] : box) {
    range.first /= 2;
    range.second /= 2;
  }

  const Monomial root_m = lead_m.pow(Rational(1, 2));
  const BigInt twice_lead = 2 * root_c;
  LaurentPoly root(root_m, root_c);
  LaurentPoly rem = p - root * root;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (c % twice_lead != 0) throw NotAPerfectSquare(to_string(p));
    Monomial tm = m / root_m;
    if (!inside(tm, box) || compare_graded_lex(tm, root.trailing().first) >= 0) {
      throw NotAPerfectSquare(to_string(p));
    }
    BigInt tc = c / twice_lead;
    // rem -= (2*root + t) * t
    rem.add_product(root, tm, -2 * tc);
    rem.add_term(tm * tm, -tc * tc);
    root.add_term(tm, tc);
  }
  return root;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    if (!out.empty()) out += '*';
    out += v;
    if (e == 1) continue;
    if (e.is_integer()) {
      out += '^' + to_string(e);
    } else {
      out += "^(" + to_string(e) + ")";
    }
  }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (m.is_one()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace knotqp
