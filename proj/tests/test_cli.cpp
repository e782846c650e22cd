#include "bclock/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

using bclock::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> w;
  for (std::string x; is >> x;) w.push_back(x);
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::regex kFloatLiteral(R"((\d\.\d)|(\d[eE][+-]?\d)|\binf\b|\bnan\b)");

// Exact commands: none of them may print a floating-point literal.
const std::vector<std::vector<std::string>> kExactCommands = {
    {"bernoulli", "10"},
    {"bernoulli", "6", "--poly"},
    {"convolve", "--f", "0,1", "--g", "1/3,0,2"},
    {"pvec", "5"},
    {"delta", "5"},
    {"qmatrix", "4"},
    {"joint", "4"},
    {"joint", "--spec", "1,3,1,2", "--method", "enum"},
    {"cdf", "--spec", "2,3", "--at", "0.25,1,7/4"},
    {"dcount", "7"},
    {"acount", "9"},
    {"hk-count", "--spec", "3,3,3"},
    {"conjecture2", "--max-n", "6"},
};

void walk_json(const nlohmann::json& j, const std::string& path, std::vector<std::string>& bad) {
  if (path == "/provenance/git_rev") return;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) walk_json(it.value(), path + "/" + it.key(), bad);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) walk_json(j[i], path + "/" + std::to_string(i), bad);
  } else if (j.is_number_float()) {
    bad.push_back(path);
  } else if (j.is_string() && std::regex_search(j.get<std::string>(), kFloatLiteral)) {
    bad.push_back(path + " = " + j.get<std::string>());
  }
}

}  // namespace

TEST_CASE("golden files") {
  const std::string dir = BCLOCK_GOLDEN_DIR;
  std::ifstream cases(dir + "/cases.txt");
  REQUIRE(cases.good());
  int count = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    REQUIRE(bar != std::string::npos);
    const std::string name = split_words(line.substr(0, bar)).at(0);
    const Result r = invoke(split_words(line.substr(bar + 1)));
    CAPTURE(name);
    CHECK(r.code == 0);
    CHECK(r.out == read_file(dir + "/" + name + ".csv"));
    ++count;
  }
  CHECK(count >= 15);
}

TEST_CASE("documented outputs") {
  Result r = invoke({"pvec", "4", "--format", "csv"});
  CHECK(r.out.find("\n322/2520,322/2520,312/2520,304/2520,304/2520,312/2520,322/2520,322/2520\n") !=
        std::string::npos);
  r = invoke({"dcount", "3"});
  CHECK(r.out == "d0,d1,d2\n47,42,1\n");
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::vector<std::vector<std::string>> cmds = {
      {"simulate", "--spec", "2,3,2", "--trials", "5000", "--seed", "11", "--format", "json"},
      {"simulate", "--spec", "2,3,2", "--trials", "5000", "--seed", "11", "--parallel", "3"},
      {"mean-fn", "3", "--grid", "5", "--format", "json"},
      {"wrapped", "--r", "3", "--lambda", "1", "--method", "expansion", "--terms", "40"},
      {"conjecture1", "--n-list", "4,6", "--format", "json"},
  };
  for (const auto& c : cmds) {
    const Result a = invoke(c);
    const Result b = invoke(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  // The thread count changes only the work split, not the result.
  const Result serial = invoke({"simulate", "--spec", "2,3,2", "--trials", "5000", "--seed", "11"});
  const Result parallel = invoke({"simulate", "--spec", "2,3,2", "--trials", "5000", "--seed", "11", "--parallel", "4"});
  CHECK(serial.out == parallel.out);
  const Result other_seed = invoke({"simulate", "--spec", "2,3,2", "--trials", "5000", "--seed", "12"});
  CHECK(serial.out != other_seed.out);
}

TEST_CASE("exact commands never print floating-point literals") {
  for (auto args : kExactCommands) {
    const Result csv = invoke(args);
    CAPTURE(args[0]);
    REQUIRE(csv.code == 0);
    CHECK_FALSE(std::regex_search(csv.out, kFloatLiteral));

    args.push_back("--format");
    args.push_back("json");
    const Result js = invoke(args);
    REQUIRE(js.code == 0);
    std::vector<std::string> bad;
    walk_json(nlohmann::json::parse(js.out), "", bad);
    CHECK_MESSAGE(bad.empty(), (bad.empty() ? std::string() : bad.front()));
  }
}

TEST_CASE("JSON record layout") {
  const Result r = invoke({"simulate", "--spec", "2,2", "--trials", "100", "--seed", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "simulate");
  CHECK(j["parameters"]["spec"] == "2,2");
  CHECK(j["parameters"]["trials"] == 100);
  CHECK(j["provenance"]["seed"] == 5);
  CHECK(j["provenance"]["precision_bits"] == 128);
  CHECK(j["provenance"]["git_rev"].is_string());
  REQUIRE(j["columns"].size() == 4);
  CHECK(j["columns"][3]["type"] == "real");
  for (const auto& row : j["rows"]) CHECK(row.size() == 4);

  const auto exact = nlohmann::json::parse(invoke({"conjecture2", "--max-n", "2", "--format", "json"}).out);
  CHECK(exact["provenance"]["seed"].is_null());
  CHECK(exact["rows"][1]["c_n"] == "12/1");
  CHECK(exact["rows"][1]["holds"] == true);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"simulate", "--spec", "2,2", "--trials", "0"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  CHECK(invoke({"pvec"}).code == 2);
  CHECK(invoke({"pvec", "4", "--format", "xml"}).code == 2);
  CHECK(invoke({"cdf", "--spec", "2,0", "--at", "1"}).code == 2);
  CHECK(invoke({"cdf", "--spec", "2,2", "--at", "x"}).code == 2);
  CHECK(invoke({"joint", "3", "--spec", "2,2"}).code == 2);
  CHECK(invoke({"pvec", "4", "--help"}).code == 0);

  const Result domain = invoke({"cdf", "--spec", "2,2", "--at", "3"});
  CHECK(domain.code == 3);
  CHECK(domain.out.empty());
  CHECK_FALSE(domain.err.empty());
  CHECK(invoke({"wrapped", "--r", "1", "--lambda", "7", "--method", "expansion"}).code == 3);
  CHECK(invoke({"joint", "--spec", "2,3", "--method", "recursion"}).code == 3);
  CHECK(invoke({"joint", "9", "--method", "enum"}).code == 3);
}

TEST_CASE("precision default from the environment") {
  ::setenv("BCLOCK_PRECISION_BITS", "192", 1);
  const Result r = invoke({"mean-fn", "1", "--grid", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["provenance"]["precision_bits"] == 192);
  const Result flag = invoke({"mean-fn", "1", "--grid", "1", "--format", "json", "--precision-bits", "96"});
  CHECK(nlohmann::json::parse(flag.out)["provenance"]["precision_bits"] == 96);
  ::setenv("BCLOCK_PRECISION_BITS", "lots", 1);
  CHECK(invoke({"mean-fn", "1"}).code == 2);
  ::unsetenv("BCLOCK_PRECISION_BITS");
}
