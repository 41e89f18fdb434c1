#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "mzv/verify.hpp"

namespace mzv {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Display form (unexpanded products)

/// Sums the coefficients of terms with identical pi power and factors, in
/// order of first appearance; zero sums are dropped.
inline DisplayForm collect_display(const DisplayForm& form) {
  auto key_of = [](const DisplayTerm& t) {
    std::string k = std::to_string(t.pi_exp);
    for (const auto& f : t.factors)
      k += "|" + std::to_string(static_cast<int>(f.kind)) + ":" + std::to_string(f.shift) + ":" + f.args.to_string();
    return k;
  };
  std::map<std::string, std::size_t> index;
  DisplayForm out;
  for (const auto& t : form) {
    const auto key = key_of(t);
    if (auto it = index.find(key); it != index.end()) {
      out[it->second].coeff += t.coeff;
    } else {
      index.emplace(key, out.size());
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const DisplayTerm& t) { return t.coeff == 0; });
  return out;
}

namespace detail {

inline std::string factor_text(const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::plain: return "z(" + f.args.to_string() + ")";
    case Factor::Kind::star: return "zs(" + f.args.to_string() + ")";
    case Factor::Kind::shifted: return "z_" + std::to_string(f.shift) + "(" + f.args.to_string() + ")";
  }
  return "";
}

inline std::string factor_latex(const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::plain: return "\\zeta^{*}(" + f.args.to_string() + ")";
    case Factor::Kind::star: return "\\zeta^{\\star,*}(" + f.args.to_string() + ")";
    case Factor::Kind::shifted:
      return "\\zeta^{*}_{" + std::to_string(f.shift) + "}(" + f.args.to_string() + ")";
  }
  return "";
}

inline std::string rational_latex(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return "\\frac{" + numerator(q).str() + "}{" + denominator(q).str() + "}";
}

/// Appends " + " / " - " (or a leading "-") and returns |coeff|.
inline Rational append_sign(std::string& s, const Rational& coeff) {
  const bool negative = coeff < 0;
  if (s.empty()) {
    if (negative) s += "-";
  } else {
    s += negative ? " - " : " + ";
  }
  return negative ? Rational(-coeff) : coeff;
}

}  // namespace detail

inline std::string display_text(const DisplayForm& form) {
  const DisplayForm terms = collect_display(form);
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    const Rational mag = detail::append_sign(s, t.coeff);
    std::vector<std::string> parts;
    if (mag != 1 || (t.pi_exp == 0 && t.factors.empty())) parts.push_back(mag.str());
    if (t.pi_exp > 0) parts.push_back("pi^" + std::to_string(t.pi_exp));
    for (const auto& f : t.factors) parts.push_back(detail::factor_text(f));
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  }
  return s;
}

inline std::string display_latex(const DisplayForm& form) {
  const DisplayForm terms = collect_display(form);
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    const Rational mag = detail::append_sign(s, t.coeff);
    std::string body;
    if (mag != 1 || (t.pi_exp == 0 && t.factors.empty())) body += detail::rational_latex(mag);
    if (t.pi_exp > 0) body += (body.empty() ? "" : " ") + std::string("\\pi^{") + std::to_string(t.pi_exp) + "}";
    for (const auto& f : t.factors) body += (body.empty() ? "" : " ") + detail::factor_latex(f);
    s += body;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Expanded form

inline std::string expanded_text(const PiGradedExpr& e) { return e.to_string(); }

inline std::string expanded_latex(const PiGradedExpr& e) {
  std::string s;
  for (const auto& [pe, p] : e)
    for (const auto& [t, w] : p)
      for (const auto& [c, q] : w) {
        const Rational mag = detail::append_sign(s, q);
        std::string body;
        if (mag != 1 || (pe == 0 && t == 0 && c.empty())) body += detail::rational_latex(mag);
        if (pe > 0) body += (body.empty() ? "" : " ") + std::string("\\pi^{") + std::to_string(pe) + "}";
        if (t > 0) body += (body.empty() ? "" : " ") + std::string("T^{") + std::to_string(t) + "}";
        if (!c.empty()) body += (body.empty() ? "" : " ") + std::string("\\zeta(") + c.to_string() + ")";
        s += body;
      }
  return s.empty() ? "0" : s;
}

/// [{pi_exp, T_deg, word, coeff_num, coeff_den}], coefficients as decimal strings.
inline json expanded_to_json(const PiGradedExpr& e) {
  json arr = json::array();
  for (const auto& [pe, p] : e)
    for (const auto& [t, w] : p)
      for (const auto& [c, q] : w)
        arr.push_back({{"pi_exp", pe},
                       {"T_deg", t},
                       {"word", c.to_string()},
                       {"coeff_num", numerator(q).str()},
                       {"coeff_den", denominator(q).str()}});
  return arr;
}

inline PiGradedExpr expanded_from_json(const json& arr) {
  if (!arr.is_array()) throw precondition_error("expanded_from_json: expected an array");
  PiGradedExpr out;
  for (const auto& item : arr) {
    const Rational q(Integer(item.at("coeff_num").get<std::string>()), Integer(item.at("coeff_den").get<std::string>()));
    const std::string word = item.at("word").get<std::string>();
    const Composition c = word.empty() ? Composition{} : Composition::parse(word);
    TPoly p;
    p.add(item.at("T_deg").get<int>(), WordCombo(c), q);
    out.add(item.at("pi_exp").get<int>(), p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables of reductions

struct TableEntry {
  Composition composition;
  DisplayForm display;
  PiGradedExpr expanded;
  Real value;
};

/// Reductions of every admissible opposite-parity composition of weight <= max_weight.
inline std::vector<TableEntry> reduction_table(int max_weight, const PrecisionContext& ctx) {
  std::vector<TableEntry> out;
  for (const Composition& c : compositions_up_to(max_weight)) {
    if (!c.is_admissible() || detail::same_parity(c)) continue;
    TableEntry e{c, parity_reduction_display(c, false), reduce_main(c), Real(0)};
    e.value = eval_pigraded(e.expanded, Real(0), ctx).value;
    out.push_back(std::move(e));
  }
  return out;
}

inline json table_to_json(const std::vector<TableEntry>& table, int digits) {
  json arr = json::array();
  for (const auto& e : table)
    arr.push_back({{"composition", e.composition.to_string()},
                   {"display", display_text(e.display)},
                   {"expanded", expanded_to_json(e.expanded)},
                   {"value", format_real(e.value, digits)},
                   {"digits", digits}});
  return arr;
}

inline std::string table_to_latex(const std::vector<TableEntry>& table, int digits) {
  std::string s = "\\begin{longtable}{ll}\n";
  for (const auto& e : table) {
    s += "$\\zeta(" + e.composition.to_string() + ")$ & $" + expanded_latex(e.expanded) + "$ \\\\\n";
    s += " & $\\approx " + format_real(e.value, digits) + "$ \\\\\n";
  }
  s += "\\end{longtable}\n";
  return s;
}

// ---------------------------------------------------------------------------
// Reports

inline std::string complex_text(const ComplexHP& z, int digits) {
  if (z.im == 0) return format_real(z.re, digits);
  const bool neg = z.im < 0;
  return format_real(z.re, digits) + (neg ? " - " : " + ") + format_real(neg ? Real(-z.im) : z.im, digits) + "i";
}

inline json report_to_json(const ResidualReport& r) {
  json j{{"identity", identity_name(r.identity)},
         {"composition", r.composition.to_string()},
         {"digits", r.digits},
         {"status", status_name(r.status)},
         {"pass", r.pass},
         {"residual", format_sci(r.residual)},
         {"bound", format_sci(r.bound)},
         {"wall_seconds", r.wall_seconds}};
  json ts = json::array();
  for (const auto& t : r.t_values) ts.push_back(format_real(t, 6));
  j["T"] = ts;
  if (r.z) j["z"] = {{"re", format_real(r.z->re, 12)}, {"im", format_real(r.z->im, 12)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.status != Status::skipped) {
    j["lhs"] = complex_text(r.lhs, r.digits);
    j["rhs"] = complex_text(r.rhs, r.digits);
  }
  if (r.t_degree) j["T_degree"] = *r.t_degree;
  if (r.depth_certificate) j["depth_certificate"] = *r.depth_certificate;
  if (r.cross_residual) j["cross_residual"] = format_sci(*r.cross_residual);
  if (r.cross_bound) j["cross_bound"] = format_sci(*r.cross_bound);
  return j;
}

inline std::string report_line(const ResidualReport& r) {
  std::string s = identity_name(r.identity) + " (" + r.composition.to_string() + ")";
  if (r.z) s += " z=" + complex_text(*r.z, 6);
  if (r.identity != Identity::main && r.identity != Identity::main2 && r.t_values.size() == 1)
    s += " T=" + format_real(r.t_values.front(), 3);
  s += ": " + status_name(r.status);
  if (r.status == Status::skipped) return s + " [" + r.reason + "]";
  s += "  residual " + format_sci(r.residual) + " (bound " + format_sci(r.bound) + ")";
  if (r.cross_residual) s += "  direct " + format_sci(*r.cross_residual) + " (bound " + format_sci(*r.cross_bound) + ")";
  if (!r.reason.empty()) s += " [" + r.reason + "]";
  return s;
}

}  // namespace mzv
