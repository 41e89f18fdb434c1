// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "mzv/mzv.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

constexpr int kDigits = 30;
const char* const kEulerTol = "1e-30";
const char* const kMainTol = "1e-25";
const char* const kMain2Tol = "1e-20";
const char* const kBouillotTol = "1e-15";
const char* const kRouteTol = "1e-8";
constexpr long kDirectTerms = 100000;
constexpr int kRandomCases = 500;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << o.detail << " ["
       << secs << " s]";
  std::cout << line.str() << std::endl;
}

Composition random_composition(std::mt19937& rng, int max_weight) {
  std::uniform_int_distribution<int> weight(1, max_weight);
  int w = weight(rng);
  std::vector<int> parts;
  while (w > 0) {
    std::uniform_int_distribution<int> part(1, w);
    parts.push_back(part(rng));
    w -= parts.back();
  }
  return Composition(parts);
}

bool opposite_parity(const Composition& c) { return (c.weight() - static_cast<int>(c.depth())) % 2 != 0; }

}  // namespace

int main() {
  PrecisionContext ctx(kDigits);

  criterion(1, "exact antipode, weight <= 8", [] {
    std::size_t checked = 0;
    for (const auto& c : compositions_up_to(8))
      for (int j = 1; j <= static_cast<int>(c.depth()); ++j) {
        if (!antipode_combo(j, c).is_zero()) return Outcome{false, "nonzero at (" + c.to_string() + "), j=" + std::to_string(j)};
        ++checked;
      }
    return Outcome{true, std::to_string(checked) + " (composition, j) pairs vanish exactly"};
  });

  criterion(2, "stuffle laws and regularization homomorphism", [] {
    std::mt19937 rng(8);
    for (int i = 0; i < kRandomCases; ++i) {
      const auto u = random_composition(rng, 8);
      const auto v = random_composition(rng, 8);
      if (stuffle(u, v) != stuffle(v, u)) return Outcome{false, "not commutative on " + u.to_string() + " | " + v.to_string()};
    }
    for (int i = 0; i < kRandomCases; ++i) {
      const auto u = random_composition(rng, 8);
      const auto v = random_composition(rng, 8);
      const auto w = random_composition(rng, 8);
      const WordCombo U(u), V(v), W(w);
      if (stuffle(stuffle(U, V), W) != stuffle(U, stuffle(V, W)))
        return Outcome{false, "not associative on " + u.to_string() + " | " + v.to_string() + " | " + w.to_string()};
    }
    const auto words = compositions_up_to(6);
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = a; b < words.size(); ++b) {
        if (regularize(stuffle(words[a], words[b])) != regularize(words[a]) * regularize(words[b]))
          return Outcome{false, "homomorphism fails on " + words[a].to_string() + " | " + words[b].to_string()};
        ++pairs;
      }
    return Outcome{true, std::to_string(kRandomCases) + " pairs, " + std::to_string(kRandomCases) + " triples, " +
                             std::to_string(pairs) + " homomorphism pairs"};
  });

  criterion(3, "Euler checks at 30 digits", [&] {
    PrecisionContext::Scope scope(ctx);
    const Real tol(kEulerTol);
    const Real r2 = boost::multiprecision::abs(eval_pigraded(reduce_main(Composition{2}), 0, ctx).value -
                                               eval_admissible_mzv(Composition{2}, ctx).value);
    const Real pi2 = boost::multiprecision::abs(eval_pigraded(reduce_main(Composition{2}), 0, ctx).value -
                                                ctx.pi() * ctx.pi() / 6);
    const Real r12 = boost::multiprecision::abs(eval_pigraded(reduce_main(Composition{1, 2}), 0, ctx).value -
                                                eval_admissible_mzv(Composition{3}, ctx).value);
    const Real z3 = boost::multiprecision::abs(eval_admissible_mzv(Composition{1, 2}, ctx).value - zeta_single(3, ctx));
    const bool ok = r2 < tol && pi2 < tol && r12 < tol && z3 < tol;
    return Outcome{ok, "|red(2) - zeta(2)| " + format_sci(r2) + ", |red(2) - pi^2/6| " + format_sci(pi2) +
                           ", |red(1,2) - zeta(3)| " + format_sci(r12) + ", |zeta(1,2) - zeta(3)| " + format_sci(z3)};
  });

  criterion(4, "main sweep, weight <= 10", [&] {
    const Real tol(kMainTol);
    Real worst = 0;
    std::size_t n = 0;
    for (const auto& c : compositions_up_to(10)) {
      if (!c.is_admissible() || !opposite_parity(c)) continue;
      const auto r = verify_main(c, ctx);
      if (r.status != Status::passed || r.residual >= tol || r.t_degree != 0 || r.depth_certificate != true)
        return Outcome{false, "fails at (" + c.to_string() + "): residual " + format_sci(r.residual)};
      worst = std::max(worst, r.residual);
      ++n;
    }
    return Outcome{true, std::to_string(n) + " compositions, max residual " + format_sci(worst) +
                             ", all T-degree 0 with depth certificate"};
  });

  criterion(5, "main2 sweep, weight <= 7, T in {0, 1}", [&] {
    const Real tol(kMain2Tol);
    Real worst = 0;
    std::size_t n = 0;
    for (const auto& c : compositions_up_to(7)) {
      const auto r = verify_main2(c, ctx, {Real(0), Real(1)});
      if (r.residual >= tol) return Outcome{false, "fails at (" + c.to_string() + "): residual " + format_sci(r.residual)};
      worst = std::max(worst, r.residual);
      ++n;
    }
    return Outcome{true, std::to_string(n) + " compositions, max residual " + format_sci(worst)};
  });

  criterion(6, "multitangent reduction, weight <= 6", [&] {
    const Real tol(kBouillotTol);
    Real worst = 0;
    Real worst_cross = 0;
    std::size_t n = 0;
    std::size_t crossed = 0;
    for (const auto& z : {ctx.parse_complex("0.3", "0"), ctx.parse_complex("0.25", "0.2")}) {
      for (const auto& c : compositions_up_to(6)) {
        BouillotOptions opts;
        if (c.front() >= 3 && c.back() >= 3) opts.direct_terms = kDirectTerms;
        const auto r = verify_bouillot(c, z, ctx, opts);
        if (r.residual >= tol) return Outcome{false, "fails at (" + c.to_string() + "): residual " + format_sci(r.residual)};
        if (r.cross_residual) {
          if (*r.cross_residual > *r.cross_bound)
            return Outcome{false, "direct series outside its bound at (" + c.to_string() + ")"};
          worst_cross = std::max(worst_cross, *r.cross_residual);
          ++crossed;
        }
        worst = std::max(worst, r.residual);
        ++n;
      }
    }
    return Outcome{true, std::to_string(n) + " cases, max residual " + format_sci(worst) + "; " +
                             std::to_string(crossed) + " direct cross-checks at M=1e5, max gap " + format_sci(worst_cross)};
  });

  criterion(7, "analytic cross-routes", [&] {
    PrecisionContext::Scope scope(ctx);
    const Real tol(kRouteTol);
    Real hurwitz = 0;
    const std::vector<ComplexHP> grid{ctx.parse_complex("0.45", "0"),  ctx.parse_complex("-0.45", "0"),
                                      ctx.parse_complex("0", "0.3"),    ctx.parse_complex("0.25", "0.2"),
                                      ctx.parse_complex("-0.2", "-0.3"), ctx.parse_complex("0.1", "0")};
    for (const auto& z : grid)
      for (const auto& c : compositions_up_to(5)) {
        if (!c.is_admissible()) continue;
        const Real gap = abs(eval_hurwitz_taylor(c, z, ctx).value - eval_hurwitz_direct(c, z, ctx).value);
        if (gap >= tol) return Outcome{false, "Hurwitz routes differ at (" + c.to_string() + ")"};
        hurwitz = std::max(hurwitz, gap);
      }
    Real mono = 0;
    for (int s = 2; s <= 6; ++s)
      for (const auto& z : grid) {
        const Real gap = abs(eval_monotangent(s, z, ctx).value - oracle::monotangent_series(s, z));
        if (gap >= tol) return Outcome{false, "monotangent differs at s=" + std::to_string(s)};
        mono = std::max(mono, gap);
      }
    Real even = 0;
    for (int m = 1; m <= 6; ++m)
      even = std::max(even, Real(boost::multiprecision::abs(eval_admissible_mzv(Composition{2 * m}, ctx).value -
                                                            eval_pi_term(even_zeta(m), ctx))));
    if (even >= Real(kEulerTol)) return Outcome{false, "even zeta mismatch " + format_sci(even)};
    return Outcome{true, "Hurwitz max gap " + format_sci(hurwitz) + ", monotangent " + format_sci(mono) +
                             ", even zeta " + format_sci(even)};
  });

  criterion(8, "CLI contract", [&] {
    const std::vector<std::pair<std::string, int>> expectations{
        {"reduce 1,2", 0},
        {"reduce 1,1,1", 2},
        {"verify main --k 2,2", 0},
        {"verify nonsense --k 2", 2},
        {"eval mzv 5,3,1", 2},
        {"eval mzv 3", 0},
        {"table --max-weight 2 --output /nonexistent-dir/t.json", 2}};
    for (const auto& [args, code] : expectations) {
      const auto r = cli::run(args);
      if (r.code != code) return Outcome{false, "'" + args + "' exited " + std::to_string(r.code)};
    }
    const auto table = cli::run("table --max-weight 6 --format json --digits 30");
    if (table.code != 0) return Outcome{false, "table exited " + std::to_string(table.code)};
    const auto entries = json::parse(table.out);
    PrecisionContext::Scope scope(ctx);
    const Real tol(kEulerTol);
    for (const auto& e : entries) {
      const Real stored = ctx.parse_real(e.at("value").get<std::string>());
      const Real again = eval_pigraded(expanded_from_json(e.at("expanded")), 0, ctx).value;
      if (boost::multiprecision::abs(stored - again) >= tol)
        return Outcome{false, "round trip differs for " + e.at("composition").get<std::string>()};
    }
    return Outcome{true, "exit codes as specified; " + std::to_string(entries.size()) +
                             " table entries re-evaluate to 30 digits"};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
