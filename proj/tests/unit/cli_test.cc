#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <omega/families.hh>
#include <omega/hoa.hh>

#include "cli.hh"

namespace
{
  struct cli_result
  {
    int code;
    std::string out, err;
  };

  cli_result run(std::vector<std::string> args)
  {
    args.insert(args.begin(), "omega-succinct");
    std::vector<const char*> argv;
    for (const auto& a : args)
      argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = omega::tools::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(const char* name) { return std::string(OMEGA_TEST_DATA_DIR) + "/" + name; }

  std::filesystem::path scratch(const std::string& name)
  {
    auto dir = std::filesystem::temp_directory_path() / "omega_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
  }
}

TEST_CASE("gen writes HOA and DOT")
{
  auto dot = run({"gen", "Gn", "--n", "3", "--dot"});
  CHECK(dot.code == 0);
  std::size_t states = 0;
  std::istringstream lines(dot.out);
  for (std::string line; std::getline(lines, line);)
    if (line.find("circle") != std::string::npos)
      ++states;
  CHECK(states == 5);

  auto hoa = run({"gen", "Sn", "--n", "2"});
  CHECK(hoa.code == 0);
  CHECK(omega::parse_hoa(hoa.out) == omega::families::build_sn(2));

  auto chain = run({"gen", "SigmaMc", "--n", "2", "--sigma", "10"});
  CHECK(chain.code == 0);
  CHECK(nlohmann::json::parse(chain.out)["states"] == 4);

  auto path = scratch("gn.hoa");
  CHECK(run({"gen", "Gn", "--n", "2", "-o", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(omega::parse_hoa(buf.str()) == omega::families::build_gn(2));
}

TEST_CASE("analyze reports the example values")
{
  auto syn = run({"analyze", "--mdp", data("example_chain.json"), "--automaton", data("s1.hoa"),
                  "--mode", "psyn", "--quiet"});
  CHECK(syn.code == 0);
  CHECK(syn.out == "1/8\n");

  auto letter = run({"analyze", "--mdp", data("example_chain.json"), "--automaton", data("s1.hoa"),
                     "--mode", "psyn", "--choice", "per-letter"});
  CHECK(letter.code == 0);
  auto doc = nlohmann::json::parse(letter.out);
  CHECK(doc["value"] == "1/6");
  CHECK(doc.contains("strategy"));
  CHECK(doc.contains("acceptingMecs"));

  auto dba = scratch("s1dba.hoa");
  std::ofstream(dba) << omega::to_hoa(omega::families::build_sn_dba(1));
  auto sem = run({"analyze", "--mdp", data("example_chain.json"), "--dba", dba.string(),
                  "--automaton", data("s1.hoa"), "--mode", "psem"});
  CHECK(sem.code == 0);
  auto semdoc = nlohmann::json::parse(sem.out);
  CHECK(semdoc["value"] == "1/4");
  CHECK(semdoc["languageCheck"]["equivalentOnLassos"] == true);
}

TEST_CASE("mark, props and experiments")
{
  auto mark = run({"mark", "--n", "3"});
  CHECK(mark.code == 0);
  auto doc = nlohmann::json::parse(mark.out);
  CHECK(doc["pSize"] == 9);
  CHECK(doc["pass"] == true);

  auto g1 = scratch("g1.hoa");
  std::ofstream(g1) << omega::to_hoa(omega::families::build_gn(1));
  CHECK(run({"props", "--automaton", g1.string(), "--check", "separating"}).code == 1);
  CHECK(run({"props", "--automaton", data("s1.hoa"), "--check", "separating"}).code == 0);
  CHECK(run({"props", "--automaton", data("s1.hoa"), "--check", "strongly-unambiguous"}).code == 0);

  auto lb = run({"experiment", "thm10", "--n", "3"});
  CHECK(lb.code == 0);
  CHECK(nlohmann::json::parse(lb.out)["distinctPairedStates"] == 8);
  CHECK(run({"experiment", "lower-bound", "--n", "1", "--candidate", data("s1.hoa")}).code == 0);
  CHECK(run({"experiment", "thm10", "--n", "1", "--candidate", g1.string()}).code == 1);

  auto spot = run({"experiment", "gfm-spotcheck", "--n", "1", "--seeds", "0..4"});
  CHECK(spot.code == 0);
  CHECK(nlohmann::json::parse(spot.out)["cases"].size() == 5);
}

TEST_CASE("reproduce-all is quick and stable at small n")
{
  auto path = scratch("suite.json");
  auto first = run({"reproduce-all", "--max-n", "4", "--out", path.string()});
  CHECK(first.code == 0);
  CHECK(first.out.find("9/9 criteria passed") != std::string::npos);
  std::ifstream in(path);
  std::stringstream a;
  a << in.rdbuf();
  auto second = run({"reproduce-all", "--max-n", "4", "--out", path.string()});
  std::ifstream in2(path);
  std::stringstream b;
  b << in2.rdbuf();
  CHECK(a.str() == b.str());
  CHECK(nlohmann::json::parse(a.str())["pass"] == true);
}

TEST_CASE("malformed input exits with 2")
{
  CHECK(run({"props", "--automaton", data("malformed.hoa"), "--check", "separating"}).code == 2);
  CHECK(run({"analyze", "--mdp", data("malformed.json"), "--automaton", data("s1.hoa"), "--mode",
             "psyn"}).code == 2);
  CHECK(run({"analyze", "--mdp", data("missing.json"), "--mode", "psyn"}).code == 2);
  CHECK(run({"gen", "Nope", "--n", "2"}).code == 2);
  CHECK(run({"gen", "Gn", "--n", "0"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--mdp", data("example_chain.json"), "--automaton", data("s1.hoa"),
             "--mode", "psyn", "--choice", "sometimes"}).code == 2);
  CHECK(run({"mark", "--n", "2", "--dba", data("s1.hoa")}).code == 2);
  auto r = run({"props", "--automaton", data("malformed.hoa"), "--check", "separating"});
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).code == 0);
}
