// mzv: reduce, evaluate and verify multiple zeta values from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mzv/mzv.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_digits() {
  if (const char* env = std::getenv("MZV_DIGITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MZV_DIGITS is not an integer: ") + env);
    }
  }
  return 30;
}

mzv::PrecisionContext make_context(int digits, std::optional<long> direct_terms = std::nullopt) {
  if (digits < 10) throw UsageError("--digits must be >= 10");
  mzv::PrecisionContext::Options opts;
  if (direct_terms) opts.direct_terms = *direct_terms;
  return mzv::PrecisionContext(digits, opts);
}

bool is_decimal(const std::string& s) {
  static const std::regex re(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  return std::regex_match(s, re);
}

mzv::Real parse_real(const mzv::PrecisionContext& ctx, const std::string& s, const char* what) {
  if (!is_decimal(s)) throw UsageError(std::string(what) + " is not a decimal number: '" + s + "'");
  return ctx.parse_real(s);
}

/// "re,im" or "re".
mzv::ComplexHP parse_z(const mzv::PrecisionContext& ctx, const std::string& s) {
  const auto comma = s.find(',');
  const std::string re = s.substr(0, comma);
  const std::string im = comma == std::string::npos ? "0" : s.substr(comma + 1);
  if (!is_decimal(re) || !is_decimal(im)) throw UsageError("--z must be 're,im' with decimal parts, got '" + s + "'");
  return ctx.parse_complex(re, im);
}

mzv::Composition parse_composition(const std::string& s) {
  try {
    return mzv::Composition::parse(s);
  } catch (const mzv::precondition_error& e) {
    throw UsageError(e.what());
  }
}

/// Writes to --output if given, else stdout. An unwritable path is a usage error.
void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(output);
  if (!f) throw UsageError("cannot write to '" + output + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw UsageError("cannot write to '" + output + "'");
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string composition;
  int digits = 30;
  bool allow_nonadmissible = false;
  std::string t_value = "0";
  std::string format = "text";
  std::string output;
};

int cmd_reduce(const ReduceArgs& args) {
  const auto ctx = make_context(args.digits);
  const auto c = parse_composition(args.composition);
  if (c.empty()) throw UsageError("composition must be nonempty");
  mzv::detail::require_opposite_parity(c);
  if (!c.is_admissible() && !args.allow_nonadmissible)
    throw UsageError("composition (" + c.to_string() + ") is not admissible; pass --allow-nonadmissible");
  const mzv::Real t = parse_real(ctx, args.t_value, "--T");

  const bool with_delta = !c.is_admissible();
  const auto display = mzv::parity_reduction_display(c, with_delta);
  const auto expanded = with_delta ? mzv::reduce_main3(c) : mzv::reduce_main(c);
  const auto value = mzv::eval_pigraded(expanded, t, ctx);

  std::ostringstream out;
  if (args.format == "json") {
    mzv::json j{{"composition", c.to_string()},
                {"display", mzv::display_text(display)},
                {"expanded", mzv::expanded_to_json(expanded)},
                {"value", mzv::format_real(value.value, args.digits)},
                {"digits", args.digits}};
    if (with_delta) j["T"] = mzv::format_real(t, 6);
    out << j.dump(2) << '\n';
  } else if (args.format == "latex") {
    out << "\\zeta^{*}(" << c.to_string() << ") &= " << mzv::display_latex(display) << " \\\\\n"
        << " &= " << mzv::expanded_latex(expanded) << " \\\\\n"
        << " &\\approx " << mzv::format_real(value.value, args.digits) << '\n';
  } else {
    out << "zeta(" << c.to_string() << ")\n"
        << "  display:  " << mzv::display_text(display) << '\n'
        << "  expanded: " << mzv::expanded_text(expanded) << '\n'
        << "  max depth " << expanded.max_depth() << ", T-degree " << std::max(0, expanded.t_degree()) << '\n'
        << "  value:    " << mzv::format_real(value.value, args.digits) << '\n';
  }
  emit(out.str(), args.output);
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::string composition;
  std::optional<int> max_weight;
  std::string z = "0.3,0";
  std::vector<std::string> t_values{"0", "1"};
  int digits = 30;
  std::optional<long> direct_terms;
  std::string format = "text";
  std::string output;
};

int cmd_verify(const VerifyArgs& args) {
  const auto identity = mzv::parse_identity(args.identity);
  if (!identity) throw UsageError("unknown identity '" + args.identity + "' (main|main2|main3|fundeq2|bouillot)");
  const auto ctx = make_context(args.digits);

  mzv::SweepOptions opts;
  opts.identity = *identity;
  opts.t_values.clear();
  for (const auto& t : args.t_values) opts.t_values.push_back(parse_real(ctx, t, "--T"));
  opts.direct_terms = args.direct_terms;
  if (*identity == mzv::Identity::bouillot) {
    const auto z = parse_z(ctx, args.z);
    const mzv::Real r = mzv::abs(z);
    if (r == 0 || r > mzv::Real(0.5) || mzv::detail::is_integer(z)) throw UsageError("--z must satisfy 0 < |z| <= 1/2");
    opts.z = z;
  }

  std::vector<mzv::ResidualReport> reports;
  if (!args.composition.empty()) {
    const auto c = parse_composition(args.composition);
    reports.push_back(mzv::run_identity(c, ctx, opts));
    // identities that take a single T get one row per T value
    if (*identity == mzv::Identity::bouillot || *identity == mzv::Identity::fund_eq2 ||
        *identity == mzv::Identity::main3) {
      for (std::size_t i = 1; i < opts.t_values.size(); ++i) {
        auto shifted = opts;
        shifted.t_values = {opts.t_values[i]};
        reports.push_back(mzv::run_identity(c, ctx, shifted));
      }
    }
  } else {
    const int w = args.max_weight.value_or(6);
    if (w > opts.max_weight_cap) throw UsageError("--max-weight exceeds " + std::to_string(opts.max_weight_cap));
    reports = mzv::sweep(w, ctx, opts);
  }

  const auto summary = mzv::summarize(reports);
  std::ostringstream out;
  if (args.format == "json") {
    mzv::json rows = mzv::json::array();
    for (const auto& r : reports) rows.push_back(mzv::report_to_json(r));
    mzv::json j{{"identity", args.identity},
                {"passed", summary.passed},
                {"failed", summary.failed},
                {"skipped", summary.skipped},
                {"max_residual", mzv::format_sci(summary.max_residual)},
                {"reports", rows}};
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << mzv::report_line(r) << '\n';
      if (r.status == mzv::Status::failed)
        out << "    lhs = " << mzv::complex_text(r.lhs, r.digits) << "\n    rhs = " << mzv::complex_text(r.rhs, r.digits)
            << '\n';
    }
    out << "summary: " << summary.passed << " passed, " << summary.failed << " failed, " << summary.skipped
        << " skipped; max residual " << mzv::format_sci(summary.max_residual) << '\n';
  }
  emit(out.str(), args.output);
  return summary.all_passed() ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string kind;
  std::string argument;
  std::optional<std::string> t_value;
  std::optional<std::string> z;
  int shift = 0;
  int digits = 30;
  std::optional<long> direct_terms;
  std::string method = "auto";
  std::string format = "text";
};

mzv::Real require_t(const mzv::PrecisionContext& ctx, const EvalArgs& args, const mzv::Composition& c) {
  if (args.t_value) return parse_real(ctx, *args.t_value, "--T");
  throw UsageError("composition (" + c.to_string() + ") is not admissible; supply --T to evaluate its regularization");
}

int cmd_eval(const EvalArgs& args) {
  const auto ctx = make_context(args.digits, args.direct_terms);
  mzv::PrecisionContext::Scope scope(ctx);
  std::optional<mzv::ComplexHP> z;
  if (args.z) z = parse_z(ctx, *args.z);
  auto need_z = [&]() -> const mzv::ComplexHP& {
    if (!z) throw UsageError("eval " + args.kind + " needs --z re,im");
    return *z;
  };

  mzv::Estimate<mzv::ComplexHP> result{mzv::ComplexHP(), mzv::Real(0)};
  std::string label;
  if (args.kind == "monotangent") {
    int s = 0;
    try {
      s = std::stoi(args.argument);
    } catch (const std::exception&) {
      throw UsageError("monotangent needs an integer s >= 1");
    }
    label = "Psi_" + std::to_string(s);
    result = mzv::eval_monotangent(s, need_z(), ctx);
  } else {
    const auto c = parse_composition(args.argument);
    if (c.empty()) throw UsageError("composition must be nonempty");
    if (args.kind == "mzv" || args.kind == "star" || args.kind == "shifted") {
      if (args.shift < 0) throw UsageError("--a must be >= 0");
      const mzv::WordCombo words = args.kind == "mzv"    ? mzv::WordCombo(c)
                                   : args.kind == "star" ? mzv::star_expand(c)
                                                         : mzv::shift_expand(args.shift, c);
      const mzv::TPoly p = mzv::regularize(words);
      const mzv::Real t = p.degree() > 0 ? require_t(ctx, args, c) : mzv::Real(0);
      const auto v = mzv::eval_tpoly(p, t, ctx);
      result = {mzv::ComplexHP(v.value), v.error_bound};
      label = args.kind == "mzv" ? "zeta" : args.kind == "star" ? "zeta_star" : "zeta_" + std::to_string(args.shift);
    } else if (args.kind == "hurwitz") {
      const auto& zv = need_z();
      const bool disc = mzv::abs(zv) <= mzv::Real(0.5);
      const bool direct = args.method == "direct" || (args.method == "auto" && !disc);
      if (direct) {
        if (!c.is_admissible()) throw UsageError("direct Hurwitz summation needs an admissible composition");
        result = mzv::eval_hurwitz_direct(c, zv, ctx);
      } else {
        const mzv::Real t = c.is_admissible() ? mzv::Real(0) : require_t(ctx, args, c);
        result = mzv::eval_hurwitz_taylor(c, zv, ctx, t);
      }
      label = "zeta^(z)";
    } else if (args.kind == "multitangent") {
      const auto& zv = need_z();
      const bool disc = mzv::abs(zv) <= mzv::Real(0.5);
      const bool direct = args.method == "direct" || (args.method == "auto" && !disc);
      if (direct) {
        result = mzv::eval_multitangent_direct(c, zv, ctx);
      } else {
        const bool needs_t = c.front() == 1 || c.back() == 1;
        const mzv::Real t = needs_t ? require_t(ctx, args, c) : mzv::Real(0);
        result = mzv::eval_multitangent_regularized(c, zv, t, ctx);
      }
      label = "Psi";
    } else {
      throw UsageError("unknown symbol '" + args.kind + "' (mzv|star|shifted|hurwitz|multitangent|monotangent)");
    }
    label += "(" + c.to_string() + ")";
  }

  if (args.format == "json") {
    mzv::json j{{"symbol", label},
                {"re", mzv::format_real(result.value.re, args.digits)},
                {"im", mzv::format_real(result.value.im, args.digits)},
                {"error_bound", mzv::format_sci(result.error_bound)},
                {"digits", args.digits}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << label << " = " << mzv::complex_text(result.value, args.digits) << '\n'
              << "error bound: " << mzv::format_sci(result.error_bound) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  int max_weight = 6;
  int digits = 30;
  std::string format = "json";
  std::string output;
};

int cmd_table(const TableArgs& args) {
  const auto ctx = make_context(args.digits);
  if (args.max_weight < 0) throw UsageError("--max-weight must be >= 0");
  if (args.max_weight > 14) throw UsageError("--max-weight exceeds 14");
  // Fail before the computation when the destination is unwritable.
  if (!args.output.empty()) emit("", args.output);
  const auto table = mzv::reduction_table(args.max_weight, ctx);
  const std::string text =
      args.format == "latex" ? mzv::table_to_latex(table, args.digits) : mzv::table_to_json(table, args.digits).dump(2);
  emit(text, args.output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity reduction and numerical verification for multiple zeta values"};
  app.require_subcommand(1);

  int digits = 30;
  try {
    digits = default_digits();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  const std::vector<std::string> text_formats{"text", "json", "latex"};

  ReduceArgs reduce;
  reduce.digits = digits;
  auto* r = app.add_subcommand("reduce", "Parity reduction of zeta(k_1,...,k_d) to lower depth");
  r->add_option("composition", reduce.composition, "comma-separated parts, e.g. 1,2")->required();
  r->add_option("--digits", reduce.digits, "working precision in decimal digits (env MZV_DIGITS)");
  r->add_flag("--allow-nonadmissible", reduce.allow_nonadmissible, "reduce the regularized value (includes delta terms)");
  r->add_option("--T", reduce.t_value, "value substituted for T = zeta*(1)");
  r->add_option("--format", reduce.format)->check(CLI::IsMember(text_formats));
  r->add_option("--output", reduce.output, "write to this file instead of stdout");

  VerifyArgs verify;
  verify.digits = digits;
  auto* v = app.add_subcommand("verify", "Check an identity for one composition or sweep all up to a weight");
  v->add_option("identity", verify.identity, "main | main2 | main3 | fundeq2 | bouillot")->required();
  auto* k_opt = v->add_option("--k", verify.composition, "single composition");
  v->add_option("--max-weight", verify.max_weight, "sweep all compositions up to this weight (default 6)")
      ->excludes(k_opt);
  v->add_option("--z", verify.z, "evaluation point 're,im' for bouillot (default 0.3,0)");
  v->add_option("--T", verify.t_values, "T values (default 0 1)");
  v->add_option("--digits", verify.digits, "working precision in decimal digits (env MZV_DIGITS)");
  v->add_option("--M", verify.direct_terms, "cross-check bouillot against the direct series truncated at M");
  v->add_option("--format", verify.format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
  v->add_option("--output", verify.output, "write to this file instead of stdout");

  EvalArgs eval;
  eval.digits = digits;
  auto* e = app.add_subcommand("eval", "Evaluate one symbol");
  e->add_option("kind", eval.kind, "mzv | star | shifted | hurwitz | multitangent | monotangent")->required();
  e->add_option("argument", eval.argument, "composition, or s for monotangent")->required();
  e->add_option("--T", eval.t_value, "value of T for non-admissible symbols");
  e->add_option("--z", eval.z, "point 're,im'");
  e->add_option("--a", eval.shift, "shift for 'shifted'");
  e->add_option("--digits", eval.digits, "working precision in decimal digits (env MZV_DIGITS)");
  e->add_option("--M", eval.direct_terms, "truncation of the direct multitangent series");
  e->add_option("--method", eval.method)
      ->check(CLI::IsMember(std::vector<std::string>{"auto", "taylor", "direct"}));
  e->add_option("--format", eval.format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

  TableArgs table;
  table.digits = digits;
  auto* t = app.add_subcommand("table", "Table of reductions for all admissible opposite-parity compositions");
  t->add_option("--max-weight", table.max_weight, "largest weight (default 6)");
  t->add_option("--digits", table.digits, "working precision in decimal digits (env MZV_DIGITS)");
  t->add_option("--format", table.format)->check(CLI::IsMember(std::vector<std::string>{"json", "latex"}));
  t->add_option("--output", table.output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*r) return cmd_reduce(reduce);
    if (*v) return cmd_verify(verify);
    if (*e) return cmd_eval(eval);
    if (*t) return cmd_table(table);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const mzv::precondition_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
