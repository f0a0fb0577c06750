#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>

#include "monowalk/rational.hpp"
#include "monowalk_cli/cli.hpp"

namespace {
  struct Ran {
    int            code = 0;
    std::string    out;
    std::string    err;
    nlohmann::json json() const {
      return nlohmann::json::parse(out);
    }
  };

  Ran run(std::vector<std::string> args) {
    args.insert(args.begin(), "monowalk");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = monowalk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  // Non-integer numbers may only appear under a "monte_carlo" key; every
  // string that claims to be a number must be a canonical fraction.
  void check_exact(nlohmann::json const& j, std::string const& path, bool in_mc) {
    if (j.is_object()) {
      for (auto const& [k, v] : j.items()) {
        check_exact(v, path + "." + k, in_mc || k == "monte_carlo");
      }
    } else if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        check_exact(j[i], path + "[" + std::to_string(i) + "]", in_mc);
      }
    } else if (j.is_number_float()) {
      INFO(path);
      REQUIRE(in_mc);
    } else if (j.is_string()) {
      auto const& s = j.get_ref<std::string const&>();
      if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-')
          && s.find_first_not_of("-0123456789/") == std::string::npos) {
        INFO(path << " = " << s);
        REQUIRE(monowalk::to_string(monowalk::parse_rational(s)) == s);
      }
    }
  }
}  // namespace

TEST_CASE("exit codes", "[cli]") {
  auto unknown = run({"analyze", "nope"});
  REQUIRE(unknown.code == 2);
  REQUIRE(unknown.json()["error"]["kind"] == "UnknownModel");
  REQUIRE(unknown.json()["error"]["code"] == 2);

  REQUIRE(run({"analyze", "tsetlin", "--k", "3", "--probs", "1/2,1/3"}).code == 2);
  REQUIRE(run({"analyze", "tsetlin", "--k", "3", "--frobnicate"}).code == 2);
  REQUIRE(run({"analyze", "tsetlin", "--k", "3", "--format", "xml"}).code == 2);

  auto budget = run({"analyze", "tsetlin", "--k", "4", "--budget-elements", "10"});
  REQUIRE(budget.code == 3);
  REQUIRE(budget.json()["error"]["kind"] == "CapExceeded");

  // A non-R-trivial custom generator set where the lattice is required.
  auto path = std::string(MONOWALK_TEST_DATA) + "/cyclic3.json";
  auto prop = run({"analyze", "--generators", path, "--analyses", "spectrum"});
  REQUIRE(prop.code == 4);
  REQUIRE(prop.json()["error"]["kind"] == "NotRTrivial");
  REQUIRE(run({"analyze", "--generators", path, "--analyses", "structure"}).code == 0);
}

TEST_CASE("analyze reports", "[cli]") {
  auto ts = run({"analyze", "tsetlin", "--k", "3", "--probs", "uniform", "--analyses", "spectrum"});
  REQUIRE(ts.code == 0);
  REQUIRE(ts.json()["spectrum"]["distinct_lambda_values"] == 4);

  auto toom = run({"analyze", "toom-fixed", "--content", "2,2", "--probs", "1/10,1/5,3/10,2/5",
                   "--analyses", "spectrum"});
  REQUIRE(toom.code == 0);
  auto const tj = toom.json();
  std::map<std::string, int> got;
  for (auto const& e : tj["spectrum"]["eigenvalues"]) {
    got[e["lambda"].get<std::string>()] = e["multiplicity"].get<int>();
  }
  // 1, x11+x21, x11+x22 = x12+x21, x12+x22, 0.
  REQUIRE(got == std::map<std::string, int>{{"1", 1}, {"2/5", 1}, {"1/2", 2}, {"3/5", 1}, {"0", 1}});
  REQUIRE(tj["spectrum"]["distinct_eigenvalues"] == 5);
  std::set<std::string> symbols;
  for (auto const& e : tj["spectrum"]["closed_form"]["entries"]) {
    if (e["multiplicity"] != 0) {
      symbols.insert(e["symbol"].get<std::string>());
    }
  }
  REQUIRE(symbols == std::set<std::string>{"x11+x12+x21+x22", "x11+x21", "x11+x22", "x12+x21", "x12+x22", "0"});

  auto all = run({"analyze", "free-tree", "--n", "2", "--probs", "powers"});
  REQUIRE(all.code == 0);
  auto j = all.json();
  for (auto const& key : {"structure", "spectrum", "stationary", "bounds"}) {
    REQUIRE(j.contains(key));
  }
  REQUIRE(j["structure"]["r_trivial"] == true);
  check_exact(j, "", false);
}

TEST_CASE("reports are exact and deterministic", "[cli][property]") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"analyze", "sandpile", "--analyses", "structure,spectrum,stationary,bounds,simulate", "--trials", "500"},
           {"analyze", "exchange-walk", "--system", "A2", "--analyses", "spectrum,stationary,bounds"},
           {"simulate", "tsetlin", "--k", "3", "--seed", "7", "--trials", "300"},
           {"verify", "toom-loan", "--m", "2", "--L", "2", "--conjecture"}}) {
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    check_exact(a.json(), "", false);
  }
  auto s1 = run({"simulate", "tsetlin", "--k", "3", "--seed", "7", "--trials", "300"});
  auto s2 = run({"simulate", "tsetlin", "--k", "3", "--seed", "8", "--trials", "300"});
  REQUIRE(s1.out != s2.out);
}

TEST_CASE("verify passes on every model and fails under fault injection", "[cli][verify]") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"verify", "tsetlin", "--k", "3", "--probs", "powers"},
           {"verify", "toom-fixed", "--content", "2,2", "--probs", "powers"},
           {"verify", "toom-loan", "--m", "2", "--L", "2"},
           {"verify", "free-tree", "--n", "3"},
           {"verify", "sandpile"},
           {"verify", "exchange-walk", "--system", "A2xA1"}}) {
    auto r = run(args);
    INFO(r.out);
    REQUIRE(r.code == 0);
    REQUIRE(r.json()["verify"]["status"] == "pass");
  }
  auto conj = run({"verify", "toom-loan", "--m", "2", "--L", "2", "--conjecture"});
  REQUIRE(conj.json()["verify"]["conjecture"]["cases"] == 9);

  auto bad = run({"verify", "tsetlin", "--k", "3", "--inject-fault", "multiplicity"});
  REQUIRE(bad.code == 4);
  auto j = bad.json();
  REQUIRE(j["verify"]["status"] == "fail");
  REQUIRE(j["error"]["kind"] == "VerificationFailed");
  REQUIRE(j["verify"].contains("counterexample"));
}

TEST_CASE("list-models and formats", "[cli]") {
  auto r = run({"list-models"});
  REQUIRE(r.code == 0);
  auto models = r.json()["models"];
  REQUIRE(models.size() == 6);
  REQUIRE(models[0]["name"] == "tsetlin");
  REQUIRE(models[5]["name"] == "exchange-walk");
  for (auto const& m : models) {
    REQUIRE(m.contains("params"));
  }
  auto csv = run({"analyze", "tsetlin", "--k", "2", "--analyses", "stationary", "--format", "csv"});
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out.rfind("path,value\n", 0) == 0);
  auto text = run({"list-models", "--format", "text"});
  REQUIRE(text.code == 0);
  REQUIRE(text.out.find("toom-loan") != std::string::npos);

  auto fl = run({"analyze", "tsetlin", "--k", "2", "--probs", "1/3,2/3", "--analyses", "stationary", "--float"});
  REQUIRE(fl.code == 0);
  REQUIRE(fl.out.find("_decimal") != std::string::npos);
  REQUIRE(fl.out.find("\"1/3\"") != std::string::npos);
}
