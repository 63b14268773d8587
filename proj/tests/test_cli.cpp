#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "anyon/builtin.hpp"
#include "anyon/cli.hpp"
#include "anyon/json_io.hpp"

using anyon::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + " ", 0) == 0) return std::stod(line.substr(key.size() + 1));
  FAIL("missing " << key);
  return 0;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", "--builtin", "fibonacci"}).code == 0);
  Run bad = run({"validate", "--builtin", "su2", "--k", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("k must be") != std::string::npos);
  CHECK(run({"validate", "--json", "/nonexistent.json"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto path = std::filesystem::temp_directory_path() / "anyon_corrupted.json";
  auto doc = anyon::category_to_json(anyon::fibonacci());
  for (auto& b : doc["F"])
    if (b["a"] == 1 && b["b"] == 1 && b["c"] == 1 && b["d"] == 1) b["entries"][0][0] = -b["entries"][0][0].template get<double>();
  std::ofstream(path) << doc.dump();
  Run r = run({"validate", "--json", path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL pentagon") != std::string::npos);
  CHECK(r.out.find("first_violation=pentagon a,b,c,d,e=(tau") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("aln") {
  Run r = run({"aln", "--builtin", "fibonacci", "--a", "tau", "--b", "tau", "--p", "I=1"});
  CHECK(r.code == 0);
  CHECK(std::abs(field(r.out, "aln") - 0.481211825060) < 1e-11);
  CHECK(r.out.find("channel tau") != std::string::npos);

  r = run({"aln", "--builtin", "ising", "--nu", "1", "--a", "sigma", "--b", "psi"});
  CHECK(r.code == 0);
  CHECK(std::abs(field(r.out, "aln")) < 1e-12);

  r = run({"aln", "--builtin", "su3_3", "--a", "8", "--b", "8", "--p8", "p=0.5,qr=0,qi=0.3"});
  CHECK(r.code == 0);
  CHECK(std::abs(field(r.out, "aln")) < 1e-12);

  r = run({"aln", "--builtin", "su3_3", "--a", "8", "--b", "8", "--pmatrix", "8=0.3,0.1+0.2i;0.1-0.2i,0.7", "--format",
           "json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["aln"].get<double>() - 0.236388778064) < 1e-11);
  CHECK(doc["ace"].is_null());

  r = run({"aln", "--builtin", "fibonacci", "--a", "tau", "--b", "tau", "--p", "I=1.5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("total weight") != std::string::npos);
  CHECK(run({"aln", "--builtin", "fibonacci", "--a", "tau", "--b", "tau"}).code == 1);
  CHECK(run({"aln", "--builtin", "fibonacci", "--a", "tau", "--b", "sigma", "--p", "I=1"}).code == 1);
  CHECK(run({"aln", "--builtin", "fibonacci", "--a", "tau", "--b", "tau", "--p", "I=x"}).code == 2);
  CHECK(run({"aln", "--builtin", "fibonacci", "--a", "tau", "--b", "tau", "--p", "I=1", "--side", "B"}).code == 0);
}

TEST_CASE("sweep output is deterministic") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto p1 = dir / "anyon_sweep1.csv", p2 = dir / "anyon_sweep2.csv";
  CHECK(run({"sweep", "--builtin", "su2", "--k", "4", "--a", "1", "--b", "1", "--resolution", "20", "--threads", "3",
             "--out", p1.string()})
            .code == 0);
  CHECK(run({"sweep", "--builtin", "su2", "--k", "4", "--a", "1", "--b", "1", "--resolution", "20", "--threads", "1",
             "--out", p2.string()})
            .code == 0);
  const std::string a = slurp(p1);
  CHECK(a == slurp(p2));
  CHECK(a.rfind("p_0,p_1,p_2,aln\n", 0) == 0);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);

  Run r = run({"sweep", "--builtin", "su2", "--k", "100", "--a", "1/2", "--b", "1/2", "--resolution", "4", "--werner"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p_0,p_1,werner,aln\n", 0) == 0);
  CHECK(r.out.find("\n1,0,0.69314718056,") != std::string::npos);

  CHECK(run({"sweep", "--builtin", "su3_3", "--a", "8", "--b", "8"}).code == 1);
  CHECK(run({"sweep", "--builtin", "ising", "--a", "sigma", "--b", "psi"}).code == 1);
}

TEST_CASE("zero-locus") {
  Run r = run({"zero-locus", "--builtin", "su2", "--k", "6", "--a", "1", "--b", "1", "--resolution", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.find("zeros 1\n") != std::string::npos);
  CHECK(r.out.find("r0 0\n") != std::string::npos);
  r = run({"zero-locus", "--builtin", "su2", "--k", "4", "--a", "1", "--b", "1", "--resolution", "10"});
  CHECK(r.out.find("im_rank 1\nr0 1\n") != std::string::npos);
  CHECK(r.out.find("zeros 6\n") != std::string::npos);
  r = run({"zero-locus", "--builtin", "fibonacci", "--a", "tau", "--b", "tau", "--resolution", "20"});
  CHECK(r.out.find("zero 0.38196601125 0.61803398875") != std::string::npos);
}

TEST_CASE("fermionic-demo and export") {
  Run r = run({"fermionic-demo"});
  CHECK(r.code == 0);
  CHECK(std::abs(field(r.out, "majorana_dimer_ln") - 0.34657359028) < 1e-11);
  CHECK(std::abs(field(r.out, "ising_sigma_sigma_aln") - 0.34657359028) < 1e-11);
  CHECK(run({"fermionic-demo", "--modes", "3"}).code == 0);
  CHECK(run({"fermionic-demo", "--modes", "9"}).code == 2);

  r = run({"export", "--builtin", "ising", "--nu", "3"});
  CHECK(r.code == 0);
  CHECK(anyon::category_from_json(nlohmann::json::parse(r.out)).name() == "ising_nu3");
  CHECK(run({"export", "--builtin", "su2", "--k", "60"}).code == 1);
}
