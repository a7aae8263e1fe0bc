// Command-line front end: parse Borel / squarefree Borel ideals, dispatch to
// the invariant computations, render text or JSON.
//
// Exit codes: 0 success, 1 internal error (cross-check divergence),
// 2 syntax/usage error, 3 domain error.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "borel/betti.hpp"
#include "borel/catalan.hpp"
#include "borel/enumerate.hpp"
#include "borel/errors.hpp"
#include "borel/ideal.hpp"
#include "borel/oracle.hpp"
#include "borel/parse.hpp"
#include "borel/poly.hpp"
#include "borel/primes.hpp"
#include "borel/render.hpp"
#include "borel/stanley.hpp"

using nlohmann::json;
using namespace borel;

namespace {

constexpr const char* kSchema = "borel/1";

struct Options {
  bool json = false;
  bool verify = false;
  std::optional<int> nvars;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Print the offending text with a caret under the failure position, then
// exit with the syntax-error code.
template <typename F>
auto with_caret(const std::string& text, F&& f) {
  try {
    return f();
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position() << "\n  " << text
              << "\n  " << std::string(std::min(e.position(), text.size()), ' ') << "^\n";
    std::exit(2);
  }
}

BorelIdeal parse_ideal_arg(const std::string& text, const Options& opt) {
  return with_caret(text, [&] { return parse_ideal(text, opt.nvars); });
}

Monomial parse_monomial_arg(const std::string& text, std::optional<int> nvars) {
  return with_caret(text, [&] { return parse_monomial(text, nvars); });
}

json ideal_json(const BorelIdeal& b) {
  json gens = json::array();
  for (const Monomial& m : b.bgens()) gens.push_back(render_monomial(m));
  return json{{"ideal", render_ideal(b)},
              {"bgens", gens},
              {"nvars", b.nvars()},
              {"kind", b.is_squarefree_kind() ? "sfborel" : "borel"}};
}

json bigs(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const BigInt& v : values) out.push_back(v.str());
  return out;
}

void emit(const Options& opt, const json& payload, const std::string& plain) {
  if (opt.json) {
    json out = payload;
    out["schema"] = kSchema;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << plain;
    if (!plain.empty() && plain.back() != '\n') std::cout << "\n";
  }
}

// Refuse brute-force cross-checks on inputs where the scan would blow up.
void check_verify_bounds(const BorelIdeal& b) {
  if (b.nvars() > 8 || b.max_degree() > 8)
    throw domain_error("--verify uses exhaustive scans; limited to nvars <= 8, degree <= 8");
}

oracle::NaiveMonomialIdeal naive_expansion(const BorelIdeal& b) {
  if (b.is_squarefree_kind()) return oracle::naive_sq_borel_closure(b.bgens(), b.nvars());
  return oracle::naive_borel_closure(b.bgens(), b.nvars(), b.max_degree());
}

void report_verify(const char* what, double fast_ms, double oracle_ms, bool ok) {
  std::cerr << "verify " << what << ": fast=" << fast_ms << "ms oracle=" << oracle_ms
            << "ms " << (ok ? "agree" : "DISAGREE") << "\n";
  if (!ok) throw internal_error(std::string("oracle disagrees with fast path for ") + what);
}

// ------------------------------------------------------------------ verbs

void run_bgens(const std::string& expr, const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  emit(opt, ideal_json(b), render_ideal(b));
}

void run_gens(const std::string& expr, const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  auto start = std::chrono::steady_clock::now();
  const std::vector<Monomial>& gens = b.min_gens();
  double fast_ms = ms_since(start);

  if (opt.verify) {
    check_verify_bounds(b);
    start = std::chrono::steady_clock::now();
    oracle::NaiveMonomialIdeal naive = naive_expansion(b);
    double oracle_ms = ms_since(start);
    report_verify("gens", fast_ms, oracle_ms, naive.gens == gens);
  }

  std::string plain;
  json list = json::array();
  for (const Monomial& m : gens) {
    plain += render_monomial(m) + "\n";
    list.push_back(render_monomial(m));
  }
  emit(opt, json{{"verb", "gens"}, {"gens", list}, {"count", gens.size()}}, plain);
}

void run_member(const std::string& expr, const std::string& mono_text, const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  Monomial probe = parse_monomial_arg(mono_text, b.nvars());
  auto start = std::chrono::steady_clock::now();
  bool inside = b.contains(probe);
  double fast_ms = ms_since(start);

  if (opt.verify) {
    check_verify_bounds(b);
    start = std::chrono::steady_clock::now();
    bool naive = oracle::naive_membership(naive_expansion(b), probe);
    double oracle_ms = ms_since(start);
    report_verify("member", fast_ms, oracle_ms, naive == inside);
  }
  emit(opt, json{{"verb", "member"}, {"member", inside}}, inside ? "true" : "false");
}

void run_trunc(const std::string& expr, int d, const Options& opt) {
  BorelIdeal b = truncate_ideal(parse_ideal_arg(expr, opt), d);
  json payload = ideal_json(b);
  payload["verb"] = "trunc";
  emit(opt, payload, render_ideal(b));
}

void run_ass(const std::string& expr, const std::string& method, const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  std::vector<int> primes;
  if (method == "socle") {
    primes = ass_socle(b);
  } else if (method == "trunc") {
    primes = ass_trunc(b);
  } else if (method == "both") {
    primes = ass_socle(b);
    if (primes != ass_trunc(b))
      throw internal_error("socle and truncation methods disagree on Ass(S/B)");
  } else {
    throw CLI::ValidationError("--method must be socle|trunc|both");
  }

  if (opt.verify) {
    check_verify_bounds(b);
    auto start = std::chrono::steady_clock::now();
    std::vector<int> naive = oracle::naive_ass(naive_expansion(b), b.max_degree());
    double oracle_ms = ms_since(start);
    report_verify("ass", 0.0, oracle_ms, naive == primes);
  }
  emit(opt, json{{"verb", "ass"}, {"primes", primes}, {"method", method}},
       render_primes(primes));
}

void run_dual(const std::string& expr, const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  BorelIdeal dual = alexander_dual(b);

  if (opt.verify) {
    check_verify_bounds(b);
    auto start = std::chrono::steady_clock::now();
    oracle::NaiveMonomialIdeal naive = oracle::naive_alexander_dual(naive_expansion(b));
    double oracle_ms = ms_since(start);
    report_verify("dual", 0.0, oracle_ms, naive.gens == dual.min_gens());
  }
  json payload = ideal_json(dual);
  payload["verb"] = "dual";
  emit(opt, payload, render_ideal(dual));
}

void run_stanley(const std::string& expr, const Options& opt) {
  StanleyDecomposition decomp = stanley_decomposition(parse_ideal_arg(expr, opt));
  json list = json::array();
  for (const StanleySummand& s : decomp.summands) {
    json vars = json::array();
    for (int v : s.vars) vars.push_back(v);
    list.push_back(json{{"base", render_monomial(s.base)}, {"vars", vars}});
  }
  emit(opt, json{{"verb", "stanley"}, {"summands", list}}, render_stanley(decomp));
}

void run_depth(const std::string& expr, const Options& opt) {
  auto [sdepth, depth] = stanley_depth_depth(parse_ideal_arg(expr, opt));
  emit(opt, json{{"verb", "depth"}, {"sdepth", sdepth}, {"depth", depth}},
       "sdepth = depth = " + std::to_string(depth));
}

void run_hilbert(const std::string& expr, bool h_poly_only, std::optional<int> values,
                 const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  HilbertSeries series = hilbert_series(b);

  if (opt.verify) {
    check_verify_bounds(b);
    int cutoff = values.value_or(std::max(8, 2 * b.max_degree()));
    auto start = std::chrono::steady_clock::now();
    std::vector<BigInt> fast = series.values(cutoff);
    double fast_ms = ms_since(start);
    start = std::chrono::steady_clock::now();
    oracle::NaiveMonomialIdeal naive = naive_expansion(b);
    bool ok = true;
    for (int t = 0; t <= cutoff && ok; ++t)
      ok = oracle::naive_std_count(naive, t) == fast[static_cast<size_t>(t)];
    double oracle_ms = ms_since(start);
    report_verify("hilbert", fast_ms, oracle_ms, ok);
  }

  json payload{{"verb", "hilbert"}, {"dim", series.dim}};
  json terms = json::array();
  for (const auto& term : series.terms)
    terms.push_back(json{{"coeff", term.coeff.str()}, {"degree", term.degree}, {"pole", term.pole}});
  payload["terms"] = terms;
  payload["h"] = bigs(series.h.coeffs());

  std::string plain;
  if (!h_poly_only && !values) {
    plain = render_hilbert_terms(series) + "\n" + render_hilbert_normal_form(series) + "\n";
  }
  if (h_poly_only) plain += render_hilbert_normal_form(series) + "\n";
  if (values) {
    std::vector<BigInt> vals = series.values(*values);
    payload["values"] = bigs(vals);
    plain += render_bigint_row(vals) + "\n";
  }
  emit(opt, payload, plain);
}

void run_mult(const std::string& expr, const Options& opt) {
  BigInt e = multiplicity(parse_ideal_arg(expr, opt));
  emit(opt, json{{"verb", "mult"}, {"multiplicity", e.str()}}, e.str());
}

void run_catalan(const std::string& mono_text, const Options& opt) {
  Monomial shape = parse_monomial_arg(mono_text, opt.nvars);
  CatalanDiagram diagram = catalan_diagram(shape);
  json rows = json::array();
  for (const auto& row : diagram.rows) rows.push_back(bigs(row));
  emit(opt,
       json{{"verb", "catalan"},
            {"shape", render_monomial(shape)},
            {"rows", rows},
            {"w", bigs(diagram.bottom_row())}},
       render_catalan_diagram(diagram));
}

void run_betti(const std::string& expr, const std::string& method, bool quotient,
               const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  BettiTable table(BettiTable::Kind::ideal);
  if (method == "ek") {
    table = betti_ek(b);
  } else if (method == "ie") {
    table = betti_ie(b);
  } else if (method == "both") {
    table = betti_ek(b);
    if (!(table == betti_ie(b)))
      throw internal_error("EK and inclusion-exclusion Betti tables disagree");
  } else {
    throw CLI::ValidationError("--method must be ek|ie|both");
  }
  if (quotient) table = table.to_quotient();

  json entries = json::array();
  for (const auto& [key, c] : table.entries())
    entries.push_back(json{{"i", key.first}, {"j", key.second}, {"value", c.str()}});
  emit(opt,
       json{{"verb", "betti"},
            {"kind", quotient ? "quotient" : "ideal"},
            {"method", method},
            {"entries", entries},
            {"totals", bigs(table.totals())}},
       render_betti_table(table));
}

void run_poincare(const std::string& expr, const std::string& series, std::optional<int> expand,
                  const Options& opt) {
  BorelIdeal b = parse_ideal_arg(expr, opt);
  json payload{{"verb", "poincare"}, {"series", series}};
  std::string plain;
  RationalBiSeries rational;

  auto bipoly_json = [](const BiPoly& p) {
    json out = json::array();
    for (const auto& [key, c] : p.terms())
      out.push_back(json{{"t", key.first}, {"u", key.second}, {"c", c.str()}});
    return out;
  };

  if (series == "B" || series == "sqB") {
    if ((series == "sqB") != b.is_squarefree_kind())
      throw domain_error("series kind does not match the ideal kind");
    BiPoly p = poincare_ideal(b);
    payload["polynomial"] = bipoly_json(p);
    plain = render_bipoly(p) + "\n";
    rational = RationalBiSeries{p, BiPoly::constant(1)};
  } else if (series == "k" || series == "sqk") {
    if ((series == "sqk") != b.is_squarefree_kind())
      throw domain_error("series kind does not match the ideal kind");
    rational = poincare_residue_field(b);
    payload["numerator"] = bipoly_json(rational.numerator);
    payload["denominator"] = bipoly_json(rational.denominator);
    plain = "numerator: " + render_bipoly(rational.numerator) + "\ndenominator: " +
            render_bipoly(rational.denominator) + "\n";
  } else if (series == "ext") {
    rational = poincare_exterior(b);
    payload["numerator"] = bipoly_json(rational.numerator);
    payload["denominator"] = bipoly_json(rational.denominator);
    plain = "numerator: " + render_bipoly(rational.numerator) + "\ndenominator: " +
            render_bipoly(rational.denominator) + "\n";
  } else {
    throw CLI::ValidationError("--series must be B|k|sqB|sqk|ext");
  }

  if (expand) {
    BiPoly expanded = rational.expand(*expand);
    payload["expansion"] = bipoly_json(expanded);
    plain += "expand: " + render_bipoly(expanded) + "\n";
  }
  emit(opt, payload, plain);
}

void run_ppt(int ell, const Options& opt) {
  auto rows = ppt_numbers(ell);
  const auto& row = rows.back();
  BigInt total = 0;
  for (const BigInt& v : row) total += v;
  emit(opt,
       json{{"verb", "ppt"}, {"ell", ell}, {"row", bigs(row)}, {"total", total.str()}},
       "a(" + std::to_string(ell) + ",i): " + render_bigint_row(row) + "\ntotal: " +
           total.str());
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of Borel (strongly stable) monomial ideals from Borel generators"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  int nvars_flag = 0;
  app.add_flag("--json", opt.json, "emit one JSON object instead of plain text");
  app.add_flag("--verify", opt.verify, "cross-check against the brute-force oracle");
  app.add_option("--nvars", nvars_flag, "ambient number of variables (alternative to @n)");

  std::string expr, mono_text, method_ass = "both", method_betti = "ek", series = "B";
  int trunc_d = 0, ppt_ell = 0;
  bool h_poly = false, quotient = false;
  std::optional<int> values, expand;
  int values_flag = -1, expand_flag = -1;

  auto* c_bgens = app.add_subcommand("bgens", "minimal Borel generators");
  c_bgens->add_option("expr", expr)->required();

  auto* c_gens = app.add_subcommand("gens", "minimal monomial generators");
  c_gens->add_option("expr", expr)->required();

  auto* c_member = app.add_subcommand("member", "ideal membership test");
  c_member->add_option("expr", expr)->required();
  c_member->add_option("monomial", mono_text)->required();

  auto* c_trunc = app.add_subcommand("trunc", "d-truncation");
  c_trunc->add_option("expr", expr)->required();
  c_trunc->add_option("d", trunc_d)->required();

  auto* c_ass = app.add_subcommand("ass", "associated primes of S/B");
  c_ass->add_option("expr", expr)->required();
  c_ass->add_option("--method", method_ass, "socle|trunc|both")->capture_default_str();

  auto* c_dual = app.add_subcommand("dual", "Alexander dual (squarefree)");
  c_dual->add_option("expr", expr)->required();

  auto* c_stanley = app.add_subcommand("stanley", "Stanley decomposition of S/B");
  c_stanley->add_option("expr", expr)->required();

  auto* c_depth = app.add_subcommand("depth", "Stanley depth and depth of S/B");
  c_depth->add_option("expr", expr)->required();

  auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert series of S/B");
  c_hilbert->add_option("expr", expr)->required();
  c_hilbert->add_flag("--h-poly", h_poly, "print only the normal form");
  c_hilbert->add_option("--values", values_flag, "print coefficients 0..N");

  auto* c_mult = app.add_subcommand("mult", "multiplicity of S/B");
  c_mult->add_option("expr", expr)->required();

  auto* c_catalan = app.add_subcommand("catalan", "Catalan diagram of a monomial shape");
  c_catalan->add_option("monomial", mono_text)->required();

  auto* c_betti = app.add_subcommand("betti", "graded Betti numbers");
  c_betti->add_option("expr", expr)->required();
  c_betti->add_option("--method", method_betti, "ek|ie|both")->capture_default_str();
  c_betti->add_flag("--quotient", quotient, "table of S/B instead of B");

  auto* c_poincare = app.add_subcommand("poincare", "Poincare series");
  c_poincare->add_option("expr", expr)->required();
  c_poincare->add_option("--series", series, "B|k|sqB|sqk|ext")->capture_default_str();
  c_poincare->add_option("--expand", expand_flag, "expand to total degree D");

  auto* c_ppt = app.add_subcommand("ppt", "pointed pseudo-triangulation counts");
  c_ppt->add_option("ell", ppt_ell)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (app.count("--nvars") > 0) {
    if (nvars_flag < 1) {
      std::cerr << "error: --nvars must be positive\n";
      return 2;
    }
    opt.nvars = nvars_flag;
  }
  if (values_flag >= 0) values = values_flag;
  if (expand_flag >= 0) expand = expand_flag;

  try {
    if (c_bgens->parsed()) run_bgens(expr, opt);
    else if (c_gens->parsed()) run_gens(expr, opt);
    else if (c_member->parsed()) run_member(expr, mono_text, opt);
    else if (c_trunc->parsed()) run_trunc(expr, trunc_d, opt);
    else if (c_ass->parsed()) run_ass(expr, method_ass, opt);
    else if (c_dual->parsed()) run_dual(expr, opt);
    else if (c_stanley->parsed()) run_stanley(expr, opt);
    else if (c_depth->parsed()) run_depth(expr, opt);
    else if (c_hilbert->parsed()) run_hilbert(expr, h_poly, values, opt);
    else if (c_mult->parsed()) run_mult(expr, opt);
    else if (c_catalan->parsed()) run_catalan(mono_text, opt);
    else if (c_betti->parsed()) run_betti(expr, method_betti, quotient, opt);
    else if (c_poincare->parsed()) run_poincare(expr, series, expand, opt);
    else if (c_ppt->parsed()) run_ppt(ppt_ell, opt);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
