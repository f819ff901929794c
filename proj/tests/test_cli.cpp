#include "opkit/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

const std::string kData = OPKIT_EXAMPLES_DIR;

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "opkit");
  std::ostringstream out, err;
  const int status = opkit::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("dims") {
  auto r = run({"dims", "--builtin", "3Ass", "--max-arity", "13", "--one-variable", "--json"});
  REQUIRE(r.status == 0);
  auto j = json_of(r);
  CHECK(j["command"] == "dims");
  CHECK(j["input"]["builtin"] == "3Ass");
  std::vector<std::int64_t> dims;
  for (const auto& [k, v] : j["results"]["dims"].items()) dims.push_back(v.get<std::int64_t>());
  CHECK(dims == std::vector<std::int64_t>{1, 2, 4, 5, 6, 7});
  CHECK(j["method_tags"]["13"] == "shape-level");
  CHECK(j["timings_ms"].empty());

  r = run({"dims", "--builtin", "3Ass", "--arity", "5", "--full", "--json"});
  j = json_of(r);
  CHECK(j["results"]["dims"]["5"] == 240);
  CHECK(j["method_tags"]["5"] == "full");
  CHECK(j["results"]["dims"].size() == 1);

  r = run({"dims", "--builtin", "Ass", "--arity", "4", "--full"});
  CHECK(r.status == 0);
  CHECK(r.out.find("24") != std::string::npos);

  CHECK(run({"dims", "--builtin", "3Ass", "--arity", "4"}).status == 1);
  CHECK(run({"dims", "--builtin", "3Ass", "--arity", "7", "--full"}).status == 1);
  CHECK(run({"dims", "--builtin", "3Ass", "--arity", "7", "--full", "--bound", "70000"}).status == 0);
}

TEST_CASE("input selection errors") {
  CHECK(run({"dims"}).status == 1);
  CHECK(run({"dims", "--builtin", "3Ass", "--file", kData + "/Ass.opd"}).status == 1);
  CHECK(run({"dims", "--builtin", "Nope"}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"dims", "--builtin", "3Ass", "--bound", "0"}).status == 1);
  const auto bad = run({"dims", "--file", kData + "/cubic.opd"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("error[E103]") != std::string::npos);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("koszul exit codes") {
  auto r = run({"koszul", "--builtin", "3Ass", "--order", "13", "--json"});
  CHECK(r.status == 2);
  auto j = json_of(r);
  CHECK(j["results"]["verdict"] == "INCONSISTENT");
  CHECK(j["results"]["mismatch_degree"] == 11);
  CHECK(j["results"]["s_coefficient"] == "-19/1");
  CHECK(j["results"]["dual_coefficient"] == "0/1");
  CHECK(j["results"]["s"][12] == "112/1");

  CHECK(run({"koszul", "--builtin", "Ass", "--order", "12"}).status == 0);
  CHECK(run({"koszul", "--file", kData + "/3Ass.opd"}).status == 2);
  CHECK(run({"koszul", "--builtin", "3Ass", "--order", "2"}).status == 1);

  CHECK(run({"koszul", "--builtin", "3tAss", "--order", "9"}).status == 0);
  r = run({"koszul", "--builtin", "3tAss", "--order", "9", "--nongraded", "--json"});
  CHECK(r.status == 2);
  j = json_of(r);
  CHECK(j["results"]["absolute_value_comparison"]["mismatch_degree"] == 7);
}

TEST_CASE("dual") {
  auto r = run({"dual", "--builtin", "3Ass"});
  CHECK(r.status == 0);
  CHECK(r.out.find("degree 1") != std::string::npos);
  CHECK(r.out.find("x - x^3 + x^5 + O(x^8)") != std::string::npos);
  r = run({"dual", "--builtin", "Ass", "--json"});
  CHECK(json_of(r)["results"]["self_dual"] == true);
  r = run({"dual", "--builtin", "3tAss", "--nongraded"});
  CHECK(r.out.find("not the Ginzburg-Kapranov quadratic dual") != std::string::npos);
}

TEST_CASE("series, gerstenhaber and tensor commands") {
  auto r = run({"gfun", "--builtin", "3Ass"});
  CHECK(r.out.find("x + x^3 + 2x^5 + 4x^7 + 5x^9 + 6x^11 + 7x^13 + O(x^14)") != std::string::npos);

  r = run({"series-inverse", "--coeffs", "1,0,1,0,1,0,1,0,1", "--json"});
  CHECK(json_of(r)["results"]["text"] == "x - x^3 + 2x^5 - 5x^7 + 14x^9 + O(x^10)");
  CHECK(run({"series-inverse", "--coeffs", "2,1"}).status == 1);
  CHECK(run({"series-inverse", "--coeffs", "1,x"}).status == 1);

  r = run({"gerstenhaber", "--arity", "3", "--json"});
  const auto terms = json_of(r)["results"]["terms"];
  CHECK(terms.size() == 3);
  for (const auto& t : terms) CHECK(t["coefficient"] == "1/1");

  r = run({"tensor-check", "--builtin", "3Ass", "--with", "3tAss", "--json"});
  CHECK(json_of(r)["results"]["compatible"] == true);
  r = run({"tensor-check", "--builtin", "3Ass", "--with", "3Ass", "--json"});
  CHECK(json_of(r)["results"]["compatible"] == false);
  CHECK(run({"tensor-check", "--builtin", "3Ass"}).status == 1);
}

TEST_CASE("json output is byte-identical across runs") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"koszul", "--builtin", "3Ass", "--json"},
        std::vector<std::string>{"dual", "--builtin", "3Ass", "--json"},
        std::vector<std::string>{"dims", "--builtin", "Ass", "--max-arity", "7", "--json"}}) {
    CHECK(run(args).out == run(args).out);
  }
  const auto t = json_of(run({"gfun", "--builtin", "Ass", "--json", "--timings"}));
  CHECK(t["timings_ms"].contains("total"));
  std::vector<std::string> keys;
  for (const auto& [k, v] : t.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "input", "results", "method_tags", "timings_ms"});
}
