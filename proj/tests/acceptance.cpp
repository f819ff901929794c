// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "opkit/dsl.hpp"
#include "opkit/dual.hpp"
#include "opkit/gerstenhaber.hpp"
#include "opkit/presentation.hpp"
#include "opkit/series.hpp"

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace opkit;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PowerSeries series_of(std::initializer_list<int> a) {
  std::vector<Rational> v;
  for (int x : a) v.emplace_back(x);
  return PowerSeries(v);
}

void quintic_quotient(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = builtin_presentation("3Ass");
  const auto slice = ideal_slice(p, 5);
  const auto dim = operad_dim(p, 5);
  const double t = seconds_since(t0);
  o.require(slice.ambient() == 360, "ambient 360");
  o.require(slice.rank() == 120, "ideal rank 120");
  o.require(dim == 240, "dim 240");
  o.require(t <= 10, "runtime <= 10 s");
  o.detail << "dim 3Ass(5) = " << dim << " (ambient " << slice.ambient() << ", ideal " << slice.rank() << ") in "
           << t << " s";
}

void one_variable(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = one_variable_dims(builtin_presentation("3Ass"), 6);
  const double t = seconds_since(t0);
  std::vector<std::int64_t> got;
  for (const auto& [m, e] : d.entries) got.push_back(e.dim);
  o.require(got == std::vector<std::int64_t>{1, 2, 4, 5, 6, 7}, "dims 1,2,4,5,6,7");
  o.require(enumerate_shapes(3, 6).size() == 1428, "1428 shapes at arity 13");
  o.require(t <= 120, "runtime <= 2 min");
  o.detail << "one-variable dims of 3Ass, arities 3..13:";
  for (auto x : got) o.detail << " " << x;
  o.detail << " in " << t << " s";
}

void dual_3ass(Outcome& o) {
  const auto d = dual_presentation(builtin_presentation("3Ass"));
  const auto dims = operad_dims(d, 13);
  const auto g = generating_function(d, dims, 13);
  o.require(d.generator.degree == 1, "dual generator degree 1");
  o.require(dims.at(3) == 6 && dims.at(5) == 120, "dual dims 6, 120");
  o.require(dims.at(7) == 0 && dims.entries.at(7).method == DimMethod::shape_level, "arity 7 zero at shape level");
  o.require(enumerate_shapes(3, 3).size() == 12, "12 shapes at arity 7");
  for (int m = 9; m <= 13; m += 2) o.require(dims.at(m) == 0, "arity " + std::to_string(m) + " zero");
  o.require(g == series_of({0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}), "g = x - x^3 + x^5");
  o.detail << "dual generator degree " << d.generator.degree << ", dims " << dims.at(3) << "/" << dims.at(5) << "/"
           << dims.at(7) << ", g = " << g.to_string();
}

void inverse_3ass(Outcome& o) {
  const auto p = builtin_presentation("3Ass");
  const auto g = generating_function(p, operad_dims(p, 13), 13);
  const auto s = solve_koszul_inverse(g, 13);
  const std::vector<int> want{1, -1, 1, 0, 0, -19};
  for (int j = 0; j < 6; ++j) o.require(s[2 * j + 1] == want[static_cast<std::size_t>(j)], "a_" + std::to_string(2 * j + 1));
  for (int d = 0; d <= 12; d += 2) o.require(s[d] == 0, "even coefficients vanish");
  const auto oracle_s = oracle::koszul_inverse(g.coefficients());
  o.require(s.coefficients() == oracle_s, "fixed-point oracle agrees (incl. a_13)");
  const auto d = dual_presentation(p);
  const auto g_dual = generating_function(d, operad_dims(d, 13), 13);
  const auto r = koszul_verdict(g, g_dual, 13);
  o.require(r.verdict == Verdict::inconsistent && r.mismatch_degree == 11, "INCONSISTENT at degree 11");
  o.detail << "s = " << s.to_string() << "; a_13 = " << to_short_string(s[13]) << " (oracle "
           << to_short_string(oracle_s[13]) << "); " << r.summary();
}

void binary_sanity(Outcome& o) {
  const auto ass = builtin_presentation("Ass");
  for (int m = 2; m <= 5; ++m) o.require(operad_dim(ass, m) == factorial(m).get_si(), "dim Ass(" + std::to_string(m) + ")");
  o.require(relation_module(dual_presentation(ass)) == relation_module(ass), "dual(Ass) = Ass");
  const auto g = PowerSeries::geometric(1, 12);
  o.require(compose(g, -g.negated_argument()) == PowerSeries::variable(12), "g(-g(-x)) = x");
  o.require(koszul_verdict(g, g, 12).verdict == Verdict::consistent, "verdict on closed form");
  const auto a = analyze_koszul(ass, 12);
  o.require(a.report.verdict == Verdict::consistent, "engine verdict");
  o.detail << "Ass dims n! for n <= 5, self-dual, " << a.report.summary();
}

void totally_associative(Outcome& o) {
  const auto t3 = builtin_presentation("3tAss");
  const auto d = one_variable_dims(t3, 6);
  for (const auto& [m, e] : d.entries) o.require(e.dim == 1, "one-variable dim 1 at arity " + std::to_string(m));
  o.require(d.entries.rbegin()->first == 13, "through arity 13");

  PowerSeries g(13);
  for (int k = 1; k <= 13; k += 2) g.set(k, 1);
  const auto s = solve_koszul_inverse(g, 13);
  const std::vector<int> catalan{1, -1, 2, -5, 14, -42};
  for (int j = 0; j < 6; ++j) o.require(s[2 * j + 1] == catalan[static_cast<std::size_t>(j)], "signed Catalan");
  o.require(s.coefficients() == oracle::koszul_inverse(g.coefficients()), "iteration oracle agrees");

  const auto p3 = builtin_presentation("3Ass");
  const auto g3 = generating_function(p3, operad_dims(p3, 13), 13);
  const auto r = koszul_verdict(generating_function(t3, operad_dims(t3, 13), 13), g3, 13);
  o.require(r.verdict == Verdict::inconsistent, "INCONSISTENT against 3Ass dims");
  o.detail << "s = " << s.truncated(11).to_string() << "; against g_3Ass: " << r.summary();
}

void gerstenhaber(Outcome& o) {
  const auto e3 = partial_assoc_defect(GeneratorSpec(3, 0));
  o.require(e3 == builtin_presentation("3Ass").relations[0], "n=3 equals the 3Ass relation");
  bool all_plus = e3.size() == 3;
  for (const auto& [m, c] : e3.terms()) all_plus = all_plus && c == 1;
  o.require(all_plus, "three +1 coefficients");
  const auto e2 = partial_assoc_defect(GeneratorSpec(2, 0));
  const auto s1 = TreeMonomial::parse("((x1 x2) x3)"), s2 = TreeMonomial::parse("(x1 (x2 x3))");
  o.require(e2.size() == 2 && e2.coefficient(s1) == 1 && e2.coefficient(s2) == -1, "n=2 associator (+, -)");
  o.detail << "mu o mu = " << e3.to_string() << "; binary: " << e2.to_string();
}

void properties(Outcome& o) {
  // comp-i associativity, three cases, graded signs.
  std::mt19937 rng(4242);
  int checked = 0;
  struct Case { int n, ka, kb, kc; };
  for (const Case cs : {Case{2, 1, 1, 1}, Case{2, 2, 2, 1}, Case{2, 3, 2, 1}, Case{3, 1, 1, 1}})
    for (int d : {0, 1}) {
      const GeneratorSpec g(cs.n, d);
      for (int t = 0; t < 100; ++t) {
        const auto a = oracle::random_element(rng, cs.n, cs.ka);
        const auto b = oracle::random_element(rng, cs.n, cs.kb);
        const auto c = oracle::random_element(rng, cs.n, cs.kc);
        const int mb = b.arity(), qc = c.arity();
        const Rational sign = (d * b.tree_degree() * d * c.tree_degree()) % 2 ? -1 : 1;
        for (int i = 1; i <= a.arity(); ++i)
          for (int j = 1; j <= a.arity() + mb - 1; ++j) {
            const auto lhs = compose_i(g, compose_i(g, a, i, b), j, c);
            const auto rhs = j < i              ? sign * compose_i(g, compose_i(g, a, j, c), i + qc - 1, b)
                             : j <= i + mb - 1 ? compose_i(g, a, i, compose_i(g, b, j - i + 1, c))
                                               : sign * compose_i(g, compose_i(g, a, j - mb + 1, c), i, b);
            if (lhs != rhs) {
              o.require(false, "comp-i associativity");
              return;
            }
          }
        ++checked;
      }
    }

  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n * k), static_cast<unsigned long>(k));
      o.require(Integer(static_cast<unsigned long>(enumerate_shapes(n, k).size())) == binom / ((n - 1) * k + 1),
                "Fuss-Catalan count");
    }

  o.require(rref(pairing(GeneratorSpec(3, 0))).rank == 360, "pairing rank 360");

  for (const char* name : {"Ass", "3Ass", "3tAss"}) {
    const auto p = builtin_presentation(name);
    o.require(relation_module(dual_presentation(dual_presentation(p))) == relation_module(p),
              std::string("double dual of ") + name);
  }

  int round_trips = 0;
  for (int id = 0; id < 120; ++id) {
    const auto p = oracle::random_presentation(rng, id);
    round_trips += dsl::parse(dsl::print(p)) == p;
  }
  o.require(round_trips == 120, "parse/print round trip");

  const auto dims = operad_dims(builtin_presentation("3Ass"), 5);
  const auto shape = one_variable_dims(builtin_presentation("3Ass"), 2);
  o.require(dims.at(5) == 240 && shape.at(5) == 2 && dims.entries.at(5).factorization_checked,
            "factorization 240 = 2 x 120");
  o.detail << checked << " associativity triples, 18 shape counts, pairing rank 360, 3 double duals, " << round_trips
           << " round trips, 240 = " << shape.at(5) << " x 120";
}

void tensor(Outcome& o) {
  const auto p3 = builtin_presentation("3Ass"), t3 = builtin_presentation("3tAss");
  const bool a = tensor_compatibility_shape_check(p3, t3);
  const bool b = tensor_compatibility_shape_check(p3, p3);
  o.require(a, "(3Ass, 3tAss) -> true");
  o.require(!b, "(3Ass, 3Ass) -> false");
  o.detail << std::boolalpha << "(3Ass, 3tAss) -> " << a << ", (3Ass, 3Ass) -> " << b;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"quintic quotient of 3Ass", quintic_quotient},
      {"one-variable dims of 3Ass", one_variable},
      {"graded dual of 3Ass", dual_3ass},
      {"Koszul inverse of g_3Ass", inverse_3ass},
      {"binary associative sanity", binary_sanity},
      {"totally associative suite", totally_associative},
      {"Gerstenhaber circle", gerstenhaber},
      {"property suites", properties},
      {"tensor compatibility", tensor},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures ? 1 : 0;
}
