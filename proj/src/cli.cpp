#include "knotqp/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "knotqp/errors.hpp"
#include "knotqp/expr.hpp"
#include "knotqp/format.hpp"
#include "knotqp/qp_numbers.hpp"
#include "knotqp/skein.hpp"
#include "knotqp/verify.hpp"

namespace knotqp {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

const std::map<std::string, OutputFormat> kFormats{{"text", OutputFormat::Text},
                                                   {"json", OutputFormat::Json},
                                                   {"csv", OutputFormat::Csv},
                                                   {"latex", OutputFormat::Latex}};

const std::map<std::string, InvariantKind> kKinds{{"alexander", InvariantKind::Alexander},
                                                  {"jones", InvariantKind::Jones},
                                                  {"homfly", InvariantKind::Homfly}};

struct Options {
  std::string family;
  int n = 0;
  OutputFormat format = OutputFormat::Text;
  InvariantKind kind = InvariantKind::Alexander;
  bool knots = false;
  bool links = false;
  bool az = false;
  int max = 0;
  std::string check;
  int n_max = 50;
  std::string expr;
  std::string assertion;
};

InvariantSeries build_series(const Options& o) {
  InvariantSeries s = o.links ? link_series(o.kind, o.max) : knot_series(o.kind, o.max);
  if (o.az && s.form == VariableForm::AT) {
    for (auto& e : s.entries) {
      if (e) e = to_az_form(*e).poly;
    }
    s.form = VariableForm::AZ;
  }
  return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CheckReport> reports;
  if (o.check.empty()) {
    reports = run_all(o.n_max);
  } else {
    reports.push_back(run_check(o.check, o.n_max));
  }
  bool all = true;
  for (const CheckReport& r : reports) {
    all = all && r.passed;
    if (o.format == OutputFormat::Json) {
      out << to_json(r).dump() << '\n';
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (n_max=" << r.n_max << "): " << r.detail << '\n';
    }
  }
  return all ? kOk : kCheckFailed;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (!o.assertion.empty()) {
    auto [lhs, rhs] = parse_identity(o.assertion);
    const bool equal = lhs == rhs;
    out << (equal ? "true" : "false") << ": " << to_string(lhs) << (equal ? " == " : " != ") << to_string(rhs)
        << '\n';
    return equal ? kOk : kCheckFailed;
  }
  out << to_string(parse_poly(o.expr)) << '\n';
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-/(q,p)-number calculus and skein invariants of torus knots T(2m+1,2) and links L(2m,2)",
               "knotqp"};
  app.require_subcommand(1);
  Options o;

  auto* qp = app.add_subcommand("qp-num", "Deformed number [n] of a family");
  qp->add_option("--family", o.family, "alexander|jones|homfly|h1|h2|bmq|qp")
      ->required()
      ->check(CLI::IsMember({"alexander", "jones", "homfly", "h1", "h2", "bmq", "qp"}));
  qp->add_option("--n", o.n, "Index n >= 0")->required();
  qp->add_option("--format", o.format, "text|json|csv|latex")->transform(CLI::CheckedTransformer(kFormats));

  auto* series = app.add_subcommand("series", "Invariant series of torus knots or links");
  series->add_option("--invariant", o.kind, "alexander|jones|homfly")
      ->required()
      ->transform(CLI::CheckedTransformer(kKinds));
  auto* knots_flag = series->add_flag("--knots", o.knots, "T(2m+1,2), m = 0..max");
  auto* links_flag = series->add_flag("--links", o.links, "L(n,2), n up to max");
  knots_flag->excludes(links_flag);
  series->add_option("--max", o.max, "Largest m (knots) or n (links)")->required();
  series->add_option("--format", o.format, "text|json|csv|latex")->transform(CLI::CheckedTransformer(kFormats));

  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  verify->add_option("--check", o.check, "Run a single named check");
  verify->add_option("--n-max", o.n_max, "Upper end of the exercised range")->capture_default_str();
  verify->add_option("--format", o.format, "text|json")->transform(CLI::CheckedTransformer(kFormats));

  auto* table = app.add_subcommand("table", "Tabulate a knot (or link) series");
  table->add_option("--invariant", o.kind, "alexander|jones|homfly")
      ->required()
      ->transform(CLI::CheckedTransformer(kKinds));
  table->add_option("--max", o.max, "Largest m (knots) or n (links)")->required();
  table->add_option("--format", o.format, "text|json|csv|latex")->transform(CLI::CheckedTransformer(kFormats));
  table->add_flag("--az", o.az, "Rewrite entries in (a, z), z = t^(1/2) - t^(-1/2)");
  table->add_flag("--links", o.links, "Tabulate L(n,2) instead of T(2m+1,2)");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression or check an identity");
  auto* expr_opt = eval->add_option("expr", o.expr, "Expression, e.g. \"(q^3 - p^3)/(q - p)\"");
  auto* assert_opt = eval->add_option("--assert", o.assertion, "Identity \"<lhs> == <rhs>\"");
  expr_opt->excludes(assert_opt);
  eval->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints help to out and errors to err.
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (qp->parsed()) {
      out << render_number(o.family, o.n, qp_number(*parse_family(o.family), o.n), o.format);
      return kOk;
    }
    if (series->parsed()) {
      if (!o.knots && !o.links) {
        err << "series: one of --knots or --links is required\n";
        return kUsage;
      }
      out << render_series(build_series(o), o.format);
      return kOk;
    }
    if (table->parsed()) {
      out << render_table(build_series(o), o.format);
      return kOk;
    }
    if (verify->parsed()) return cmd_verify(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace knotqp
