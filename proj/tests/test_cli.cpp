// End-to-end checks of the installed binary, located via ISOSPEC_BIN.
// Output files land in the test working directory.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/wait.h>
#endif

namespace {

std::string binary_path() {
  const char* bin = std::getenv("ISOSPEC_BIN");
  return bin == nullptr ? std::string() : std::string(bin);
}

int run(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
#if defined(__unix__) || defined(__APPLE__)
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
#else
  return status;
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

bool exists(const std::string& path) {
  std::ifstream file(path);
  return file.good();
}

}  // namespace

TEST_CASE("binary location is provided") {
  REQUIRE_FALSE(binary_path().empty());
}

TEST_CASE("table runs are byte-identical") {
  CHECK(run("table --model ho --n 0 --C 1 --k 0,1,2 --out cli_t1.csv") == 0);
  CHECK(run("table --model ho --n 0 --C 1 --k 0,1,2 --out cli_t2.csv") == 0);
  const std::string first = slurp("cli_t1.csv");
  CHECK_FALSE(first.empty());
  CHECK(first == slurp("cli_t2.csv"));
  CHECK(first.substr(0, first.find('\n')) ==
        "x,V_base,V_tilde,density_k0,density_k1,density_k2");
}

TEST_CASE("stdout is the default destination") {
  CHECK(std::system((binary_path() +
                     " table --model ho --n 0 --C 1 --k 0 --N 11"
                     " > cli_stdout.csv 2>/dev/null")
                        .c_str()) == 0);
  CHECK(run("table --model ho --n 0 --C 1 --k 0 --N 11 --out cli_f.csv") == 0);
  CHECK(slurp("cli_stdout.csv") == slurp("cli_f.csv"));
}

TEST_CASE("invalid parameter exits 2 and leaves no file") {
  std::remove("cli_bad.csv");
  CHECK(run("table --model ho --n 0 --C 0.5 --out cli_bad.csv") == 2);
  CHECK_FALSE(exists("cli_bad.csv"));
  CHECK(run("table --model banana") == 2);
  CHECK(run("table --model cprs --n 1 --C 99 --out cli_bad.csv") == 2);
  CHECK_FALSE(exists("cli_bad.csv"));
  CHECK(run("") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("spectrum emits a json report") {
  CHECK(run("spectrum --model ho --n 0 --C 1 --N 400 --out cli_s.json") == 0);
  const auto doc = nlohmann::json::parse(slurp("cli_s.json"));
  CHECK(doc["model"] == "ho");
  CHECK(doc["levels"].size() == 4);
  CHECK(doc["max_abs_delta"].get<double>() < 1e-2);
  CHECK(run("spectrum --model ho --C 1 --N 100 --format csv") == 2);
}

TEST_CASE("verify filters by suite and reports") {
  CHECK(run("verify --suite cprs-identities --out cli_v.json") == 0);
  const auto doc = nlohmann::json::parse(slurp("cli_v.json"));
  CHECK(doc["overall_pass"] == true);
  CHECK(doc["failures"] == 0);
  REQUIRE(doc["checks"].size() == 3);
  for (const auto& check : doc["checks"]) {
    CHECK(check["suite"] == "cprs-identities");
    CHECK(check["pass"] == true);
  }
  CHECK(run("verify --suite no-such-suite") == 2);
}

TEST_CASE("config file supplies values and flags win") {
  {
    std::ofstream cfg("cli_cfg.toml");
    cfg << "[table]\nmodel = \"ho\"\nn = 0\nC = 1.0\nk = [0, 1]\nN = 21\n";
  }
  CHECK(run("table --config cli_cfg.toml --out cli_c1.csv") == 0);
  const std::string from_config = slurp("cli_c1.csv");
  const auto header = from_config.substr(0, from_config.find('\n'));
  CHECK(header == "x,V_base,V_tilde,density_k0,density_k1");
  CHECK(run("table --config cli_cfg.toml --C 2.0 --out cli_c2.csv") == 0);
  CHECK(from_config != slurp("cli_c2.csv"));
  CHECK(run("table --config cli_nonexistent.toml") == 2);
}
