#include "opkit/cli.hpp"

#include "opkit/dsl.hpp"
#include "opkit/dual.hpp"
#include "opkit/gerstenhaber.hpp"
#include "opkit/presentation.hpp"
#include "opkit/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace opkit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string builtin;
  std::string file;
  std::string with_builtin;
  std::string with_file;
  std::string coeffs;
  int arity = 0;
  int inner_arity = 0;
  int max_arity = 0;
  int order = 13;
  bool one_variable = false;
  bool full = false;
  bool json = false;
  bool timings = false;
  bool nongraded = false;
  std::int64_t bound = 5000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json series_json(const PowerSeries& s) {
  Json a = Json::array();
  for (int d = 1; d <= s.order(); ++d) a.push_back(to_fraction_string(s[d]));
  return a;
}

QuadraticPresentation load(const std::string& builtin, const std::string& file) {
  if (!builtin.empty() && !file.empty()) throw UsageError("give either --builtin or --file, not both");
  if (!builtin.empty()) return builtin_presentation(builtin);
  if (!file.empty()) return dsl::parse(dsl::SourceText::from_file(file));
  throw UsageError("an input is required: --builtin NAME or --file PATH");
}

Json input_json(const RunConfig& cfg) {
  Json j = Json::object();
  if (!cfg.builtin.empty()) j["builtin"] = cfg.builtin;
  if (!cfg.file.empty()) j["file"] = cfg.file;
  if (!cfg.coeffs.empty()) j["coeffs"] = cfg.coeffs;
  return j;
}

void print_dims_table(std::ostream& out, const OperadDims& d) {
  out << std::left << std::setw(8) << "arity" << std::setw(14) << "dim" << "method\n";
  for (const auto& [m, e] : d.entries) {
    out << std::setw(8) << m << std::setw(14) << e.dim << to_string(e.method);
    if (e.factorization_checked) out << " (= shape-level x " << m << "!)";
    out << "\n";
  }
}

struct Outcome {
  Json results = Json::object();
  Json method_tags = Json::object();
  int status = 0;
};

ComputeOptions options(const RunConfig& cfg) {
  if (cfg.bound <= 0) throw UsageError("--bound must be positive");
  ComputeOptions o;
  o.bound = cfg.bound;
  return o;
}

// --------------------------------------------------------------------------

Outcome cmd_dims(const RunConfig& cfg, std::ostream& out) {
  const auto p = load(cfg.builtin, cfg.file);
  const int n = p.generator.arity;
  if (cfg.arity && cfg.max_arity) throw UsageError("give --arity or --max-arity, not both");
  if (cfg.one_variable && cfg.full) throw UsageError("--one-variable and --full are exclusive");
  if (cfg.arity && tree_degree_of(n, cfg.arity) < 1)
    throw UsageError("arity " + std::to_string(cfg.arity) + " is not of the form k(" + std::to_string(n - 1) +
                     ")+1 with k >= 1");
  const int top = cfg.arity ? cfg.arity : (cfg.max_arity ? cfg.max_arity : arity_of(n, 4));
  const auto mode = cfg.one_variable ? DimsMode::shape_level : (cfg.full ? DimsMode::full : DimsMode::mixed);
  auto dims = operad_dims(p, top, mode, options(cfg));
  if (cfg.arity) std::erase_if(dims.entries, [&](const auto& kv) { return kv.first != cfg.arity; });

  Outcome o;
  o.results["presentation"] = p.name;
  o.results["dims"] = dims_json(dims);
  Json checked = Json::array();
  for (const auto& [m, e] : dims.entries)
    if (e.factorization_checked) checked.push_back(m);
  o.results["factorization_checked"] = checked;
  o.method_tags = method_tags_json(dims);
  if (!cfg.json) {
    out << "dimensions of " << p.name << "\n";
    print_dims_table(out, dims);
  }
  return o;
}

Outcome cmd_dual(const RunConfig& cfg, std::ostream& out) {
  const auto p = load(cfg.builtin, cfg.file);
  const auto opts = options(cfg);
  const int n = p.generator.arity;
  const auto grading = cfg.nongraded ? DualGrading::nongraded : DualGrading::graded;
  const auto d = dual_presentation(p, opts, grading);
  const int top = cfg.max_arity ? cfg.max_arity : arity_of(n, 3);
  const auto dims = operad_dims(d, top, DimsMode::mixed, opts);
  const auto g = generating_function(d, dims);

  std::optional<bool> self_dual;
  if (d.generator.degree == p.generator.degree && free_dimension(n, 2 * n - 1) <= opts.bound)
    self_dual = relation_module(d, opts) == relation_module(p, opts);
  else if (d.generator.degree != p.generator.degree)
    self_dual = false;

  Json warnings = Json::array();
  if (n % 2 == 1 && p.generator.degree == 0) {
    warnings.push_back(cfg.nongraded
                           ? "odd arity: this nongraded reading gives the dual generator degree 0 and is not the "
                             "Ginzburg-Kapranov quadratic dual"
                           : "odd arity: the dual generator has degree 1; dropping that degree gives a nongraded "
                             "operad that is not the Ginzburg-Kapranov quadratic dual");
  }

  const auto text = dsl::print(d).text;
  Outcome o;
  o.results["presentation"] = p.name;
  o.results["dual_presentation"] = text;
  o.results["dual_generator_degree"] = d.generator.degree;
  o.results["dims"] = dims_json(dims);
  o.results["generating_function"] = series_json(g);
  o.results["self_dual"] = self_dual ? Json(*self_dual) : Json(nullptr);
  o.results["warnings"] = warnings;
  o.method_tags = method_tags_json(dims);
  if (!cfg.json) {
    out << "dual of " << p.name << " (generator degree " << d.generator.degree << ")\n" << text;
    print_dims_table(out, dims);
    out << "generating function: " << g.to_string() << "\n";
    if (self_dual) out << "self-dual: " << (*self_dual ? "yes" : "no") << "\n";
    for (const auto& w : warnings) out << "warning: " << w.get<std::string>() << "\n";
  }
  return o;
}

Outcome cmd_gfun(const RunConfig& cfg, std::ostream& out) {
  const auto p = load(cfg.builtin, cfg.file);
  const auto dims = operad_dims(p, cfg.order, DimsMode::mixed, options(cfg));
  const auto g = generating_function(p, dims, cfg.order);
  Outcome o;
  o.results["presentation"] = p.name;
  o.results["series"] = series_json(g);
  o.results["text"] = g.to_string();
  o.method_tags = method_tags_json(dims);
  if (!cfg.json) out << "g_" << p.name << "(x) = " << g.to_string() << "\n";
  return o;
}

Outcome cmd_koszul(const RunConfig& cfg, std::ostream& out) {
  if (cfg.order < 3) throw UsageError("--order must be at least 3");
  const auto p = load(cfg.builtin, cfg.file);
  const auto grading = cfg.nongraded ? DualGrading::nongraded : DualGrading::graded;
  const auto a = analyze_koszul(p, cfg.order, options(cfg), grading);
  const auto& r = a.report;

  // |a_d| against the dual coefficients, for the unsigned comparison.
  Json abs_cmp = Json::object();
  abs_cmp["mismatch_degree"] = nullptr;
  for (int d = 1; d <= cfg.order; ++d) {
    if (abs(r.s[d]) != abs(a.g_dual[d])) {
      abs_cmp["mismatch_degree"] = d;
      abs_cmp["abs_s_coefficient"] = to_fraction_string(abs(r.s[d]));
      abs_cmp["abs_dual_coefficient"] = to_fraction_string(abs(a.g_dual[d]));
      break;
    }
  }

  Outcome o;
  o.results["presentation"] = p.name;
  o.results["order"] = cfg.order;
  o.results["dual_generator_degree"] = a.dual.generator.degree;
  o.results["g"] = series_json(a.g);
  o.results["g_dual"] = series_json(a.g_dual);
  o.results["s"] = series_json(r.s);
  o.results["verdict"] = r.verdict == Verdict::consistent ? "CONSISTENT" : "INCONSISTENT";
  o.results["mismatch_degree"] = r.mismatch_degree ? Json(*r.mismatch_degree) : Json(nullptr);
  o.results["s_coefficient"] = r.mismatch_degree ? Json(to_fraction_string(r.s_coefficient)) : Json(nullptr);
  o.results["dual_coefficient"] = r.mismatch_degree ? Json(to_fraction_string(r.dual_coefficient)) : Json(nullptr);
  o.results["absolute_value_comparison"] = abs_cmp;
  o.results["summary"] = r.summary();
  o.results["koszul_certified_false"] = r.verdict == Verdict::inconsistent && !cfg.nongraded;
  o.method_tags["operad"] = method_tags_json(a.dims);
  o.method_tags["dual"] = method_tags_json(a.dual_dims);
  o.status = r.verdict == Verdict::consistent ? 0 : kNotKoszul;
  if (!cfg.json) {
    out << "operad:          " << p.name << "\n"
        << "dual generator:  degree " << a.dual.generator.degree
        << (cfg.nongraded ? " (nongraded reading)" : "") << "\n"
        << "g_P(x)         = " << a.g.to_string() << "\n"
        << "g_P!(x)        = " << a.g_dual.to_string() << "\n"
        << "s(x)           = " << r.s.to_string() << "   [g_P(-s(-x)) = x]\n"
        << r.summary() << "\n";
    if (r.verdict == Verdict::inconsistent && !cfg.nongraded)
      out << p.name << " is not Koszul\n";
    else if (r.verdict == Verdict::inconsistent)
      out << "the nongraded reading is not the quadratic dual, so this says nothing about Koszulity of " << p.name
          << "\n";
    if (cfg.nongraded && !abs_cmp["mismatch_degree"].is_null())
      out << "|s| vs |g_P!|: first difference at degree " << abs_cmp["mismatch_degree"].get<int>() << " ("
          << abs_cmp["abs_s_coefficient"].get<std::string>() << " vs "
          << abs_cmp["abs_dual_coefficient"].get<std::string>() << ")\n";
  }
  return o;
}

PowerSeries parse_coeffs(const std::string& text) {
  std::vector<Rational> a{0};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty coefficient in --coeffs");
    Rational q;
    if (q.set_str(item, 10) != 0 || q.get_den() == 0) throw UsageError("bad coefficient '" + item + "'");
    q.canonicalize();
    a.push_back(q);
  }
  return PowerSeries(std::move(a));
}

Outcome cmd_series_inverse(const RunConfig& cfg, std::ostream& out) {
  PowerSeries g;
  if (!cfg.coeffs.empty()) {
    if (!cfg.builtin.empty() || !cfg.file.empty()) throw UsageError("give --coeffs or a presentation, not both");
    g = parse_coeffs(cfg.coeffs);
  } else {
    const auto p = load(cfg.builtin, cfg.file);
    g = generating_function(p, operad_dims(p, cfg.order, DimsMode::mixed, options(cfg)), cfg.order);
  }
  const int order = std::min(cfg.order, g.order());
  const auto s = solve_koszul_inverse(g, order);
  Outcome o;
  o.results["input_series"] = series_json(g.truncated(order));
  o.results["s"] = series_json(s);
  o.results["text"] = s.to_string();
  if (!cfg.json) out << "g(x) = " << g.truncated(order).to_string() << "\ns(x) = " << s.to_string()
                     << "   [g(-s(-x)) = x]\n";
  return o;
}

Outcome cmd_gerstenhaber(const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.arity ? cfg.arity : 3;
  if (n < 1 || cfg.inner_arity < 0) throw UsageError("arities must be positive");
  Element e = cfg.inner_arity ? circle(cochain("f", n), cochain("g", cfg.inner_arity))
                              : partial_assoc_defect(GeneratorSpec(n, 0));
  Outcome o;
  o.results["arity"] = n;
  o.results["inner_arity"] = cfg.inner_arity ? cfg.inner_arity : n;
  o.results["element"] = e.to_string();
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) terms.push_back(Json{{"coefficient", to_fraction_string(c)}, {"monomial", m.to_string()}});
  o.results["terms"] = terms;
  if (!cfg.json) {
    if (cfg.inner_arity)
      out << "f o_{" << n << "," << cfg.inner_arity << "} g = " << e.to_string() << "\n";
    else
      out << "mu o_{" << n << "," << n << "} mu = " << e.to_string() << "\n";
  }
  return o;
}

Outcome cmd_tensor_check(const RunConfig& cfg, std::ostream& out) {
  const auto p = load(cfg.builtin, cfg.file);
  if (cfg.with_builtin.empty() && cfg.with_file.empty())
    throw UsageError("tensor-check needs a second presentation: --with NAME or --with-file PATH");
  const auto q = load(cfg.with_builtin, cfg.with_file);
  const bool ok = tensor_compatibility_shape_check(p, q);
  Outcome o;
  o.results["left"] = p.name;
  o.results["right"] = q.name;
  o.results["compatible"] = ok;
  o.results["level"] = "shape";
  if (!cfg.json)
    out << "A (" << p.name << "-algebra) tensor B (" << q.name << "-algebra) is a " << p.name
        << "-algebra at shape level: " << (ok ? "yes" : "no") << "\n";
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"opkit: quadratic operads, Koszul duals and generating functions"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--builtin", cfg.builtin, "Builtin presentation: Ass, 3Ass, 3tAss, <n>Ass, <n>tAss");
    sub->add_option("--file", cfg.file, "Presentation file (.opd)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_flag("--timings", cfg.timings, "Record wall-clock timings in the JSON output");
    sub->add_option("--bound", cfg.bound, "Largest free component dimension computed fully")->capture_default_str();
  };

  auto* dims = app.add_subcommand("dims", "Component dimensions");
  add_input(dims);
  add_common(dims);
  dims->add_option("--arity", cfg.arity, "Single arity");
  dims->add_option("--max-arity", cfg.max_arity, "All admissible arities up to this one");
  dims->add_flag("--one-variable", cfg.one_variable, "Shape-level computation only");
  dims->add_flag("--full", cfg.full, "Full multilinear computation only");

  auto* dual = app.add_subcommand("dual", "Quadratic dual presentation");
  add_input(dual);
  add_common(dual);
  dual->add_option("--max-arity", cfg.max_arity, "Dual dims up to this arity");
  dual->add_flag("--nongraded", cfg.nongraded, "Keep the dual generator in degree 0");

  auto* gfun = app.add_subcommand("gfun", "Generating function");
  add_input(gfun);
  add_common(gfun);
  gfun->add_option("--order", cfg.order, "Truncation order")->capture_default_str();

  auto* koszul = app.add_subcommand("koszul", "Koszul generating-function test");
  add_input(koszul);
  add_common(koszul);
  koszul->add_option("--order", cfg.order, "Truncation order")->capture_default_str();
  koszul->add_flag("--nongraded", cfg.nongraded, "Compare against the nongraded dual");

  auto* inverse = app.add_subcommand("series-inverse", "Solve g(-s(-x)) = x");
  add_input(inverse);
  add_common(inverse);
  inverse->add_option("--order", cfg.order, "Truncation order")->capture_default_str();
  inverse->add_option("--coeffs", cfg.coeffs, "Coefficients a1,a2,... of g");

  auto* gerst = app.add_subcommand("gerstenhaber", "Gerstenhaber circle product");
  add_common(gerst);
  gerst->add_option("--arity", cfg.arity, "Arity n of the outer cochain");
  gerst->add_option("--inner-arity", cfg.inner_arity, "Arity m of a distinct inner cochain");

  auto* tensor = app.add_subcommand("tensor-check", "Shape-level tensor-product compatibility");
  add_input(tensor);
  add_common(tensor);
  tensor->add_option("--with", cfg.with_builtin, "Second presentation (builtin)");
  tensor->add_option("--with-file", cfg.with_file, "Second presentation (file)");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    if (cfg.command == "dims") o = cmd_dims(cfg, out);
    else if (cfg.command == "dual") o = cmd_dual(cfg, out);
    else if (cfg.command == "gfun") o = cmd_gfun(cfg, out);
    else if (cfg.command == "koszul") o = cmd_koszul(cfg, out);
    else if (cfg.command == "series-inverse") o = cmd_series_inverse(cfg, out);
    else if (cfg.command == "gerstenhaber") o = cmd_gerstenhaber(cfg, out);
    else o = cmd_tensor_check(cfg, out);

    if (cfg.json) {
      Json j;
      j["command"] = cfg.command;
      j["input"] = input_json(cfg);
      j["results"] = o.results;
      j["method_tags"] = o.method_tags;
      j["timings_ms"] = Json::object();
      if (cfg.timings) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        j["timings_ms"]["total"] = ms;
      }
      out << j.dump(2) << "\n";
    }
    return o.status;
  } catch (const dsl::ParseError& e) {
    err << e.what() << "\n";
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace opkit::cli
