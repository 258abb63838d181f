#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "knotqp/json_io.hpp"
#include "knotqp/skein.hpp"

namespace knotqp {

enum class OutputFormat { Text, Json, Csv, Latex };

std::optional<OutputFormat> parse_format(std::string_view name);

// "t^{1/2} - t^{-1/2}", "a^{2} t + 2 a^{2}" ...; same term order as to_string.
std::string to_latex(const LaurentPoly& p);

Json to_json(const InvariantSeries& s);
// Throws knotqp::Error on malformed input.
InvariantSeries series_from_json(const Json& j);

// One entry per line (text), a single JSON document, `n,polynomial` CSV with
// the canonical text quoted, or `$P_{n,2} = ...$` lines.
std::string render_series(const InvariantSeries& s, OutputFormat f);

// Like render_series, but text output is an aligned table with a header.
std::string render_table(const InvariantSeries& s, OutputFormat f);

// A single deformed number [n] of a family.
std::string render_number(std::string_view family, int n, const LaurentPoly& p, OutputFormat f);

}  // namespace knotqp
