#include "knotqp/format.hpp"

#include <algorithm>
#include <sstream>

#include "knotqp/errors.hpp"

namespace knotqp {

namespace {

std::string latex_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    if (!out.empty()) out += ' ';
    out += v;
    if (e != 1) out += "^{" + to_string(e) + "}";
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Row {
  int n;
  std::string name;
  std::string poly;
  const LaurentPoly* value;
};

std::vector<Row> rows(const InvariantSeries& s) {
  std::vector<Row> out;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (!s.entries[i]) continue;
    const int n = s.torus_index(i);
    out.push_back({n, torus_name(n), to_string(*s.entries[i]), &*s.entries[i]});
  }
  return out;
}

std::string render_rows(const InvariantSeries& s, OutputFormat f, bool table) {
  std::ostringstream os;
  const std::vector<Row> rs = rows(s);
  switch (f) {
    case OutputFormat::Json:
      os << to_json(s).dump() << '\n';
      break;
    case OutputFormat::Csv:
      os << "n,polynomial\n";
      for (const Row& r : rs) os << r.n << ',' << csv_quote(r.poly) << '\n';
      break;
    case OutputFormat::Latex:
      for (const Row& r : rs) os << "$P_{" << r.n << ",2} = " << to_latex(*r.value) << "$\n";
      break;
    case OutputFormat::Text:
      if (!table) {
        for (const Row& r : rs) os << "n=" << r.n << " " << r.name << ": " << r.poly << '\n';
        break;
      }
      std::size_t wn = 1;
      std::size_t wname = 4;
      for (const Row& r : rs) {
        wn = std::max(wn, std::to_string(r.n).size());
        wname = std::max(wname, r.name.size());
      }
      auto pad = [](const std::string& x, std::size_t w) { return x + std::string(w - x.size(), ' '); };
      const std::string header = std::string(kind_name(s.kind)) + (s.form == VariableForm::AZ ? " (a,z)" : "");
      os << pad("n", wn) << " | " << pad("link", wname) << " | " << header << '\n';
      os << std::string(wn, '-') << "-+-" << std::string(wname, '-') << "-+-" << std::string(header.size(), '-')
         << '\n';
      for (const Row& r : rs) {
        os << pad(std::to_string(r.n), wn) << " | " << pad(r.name, wname) << " | " << r.poly << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "latex") return OutputFormat::Latex;
  return std::nullopt;
}

std::string to_latex(const LaurentPoly& p) {
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
      if (mag != 1) out += mag.str() + " ";
      out += latex_monomial(m);
    }
  }
  return out;
}

Json to_json(const InvariantSeries& s) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (s.entries[i]) entries.push_back(Json{{"n", s.torus_index(i)}, {"poly", to_json(*s.entries[i])}});
  }
  return Json{{"kind", std::string(kind_name(s.kind))},
              {"indexing", s.indexing == Indexing::Knot ? "knot" : "link"},
              {"form", s.form == VariableForm::AZ ? "az" : "at"},
              {"entries", std::move(entries)}};
}

InvariantSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("indexing") || !j.contains("entries")) {
    throw Error("series JSON needs \"kind\", \"indexing\" and \"entries\"");
  }
  auto kind = parse_kind(j["kind"].get<std::string>());
  if (!kind) throw Error("unknown invariant kind " + j["kind"].dump());
  const std::string indexing = j["indexing"].get<std::string>();
  if (indexing != "knot" && indexing != "link") throw Error("indexing must be knot or link");

  InvariantSeries s{*kind, indexing == "knot" ? Indexing::Knot : Indexing::Link, VariableForm::AT, {}};
  if (j.contains("form") && j["form"].get<std::string>() == "az") s.form = VariableForm::AZ;
  for (const auto& e : j["entries"]) {
    const int n = e.at("n").get<int>();
    if (n < 0 || (s.indexing == Indexing::Knot && n % 2 == 0)) {
      throw Error("bad entry index n = " + std::to_string(n));
    }
    const auto i = static_cast<std::size_t>(s.indexing == Indexing::Knot ? (n - 1) / 2 : n);
    if (s.entries.size() <= i) s.entries.resize(i + 1);
    s.entries[i] = poly_from_json(e.at("poly"));
  }
  return s;
}

std::string render_series(const InvariantSeries& s, OutputFormat f) { return render_rows(s, f, false); }

std::string render_table(const InvariantSeries& s, OutputFormat f) { return render_rows(s, f, true); }

std::string render_number(std::string_view family, int n, const LaurentPoly& p, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text:
      return to_string(p) + "\n";
    case OutputFormat::Json:
      return Json{{"family", std::string(family)}, {"n", n}, {"poly", to_json(p)}}.dump() + "\n";
    case OutputFormat::Csv:
      return "n,polynomial\n" + std::to_string(n) + "," + csv_quote(to_string(p)) + "\n";
    case OutputFormat::Latex:
      return "$[" + std::to_string(n) + "]^{" + std::string(family) + "} = " + to_latex(p) + "$\n";
  }
  return {};
}

}  // namespace knotqp
