#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#include "abelian/powers.hpp"
#include "abelian/recipe_io.hpp"
#include "cli.hpp"

using namespace abelian;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(std::string const& name) {
    return std::string(ABELIAN_TEST_DATA) + "/" + name;
  }

  std::filesystem::path temp_file(std::string const& name) {
    return std::filesystem::temp_directory_path() / ("abelian_test_" + name);
  }

  // Runs the real executable; returns (exit code, stdout).
  std::pair<int, std::string> shell(std::string const& args) {
    std::string const cmd = std::string(ABELIAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string            out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    int const status = pclose(pipe);
    return {WEXITSTATUS(status), out};
  }
}  // namespace

TEST_CASE("generate") {
  auto r = run({"generate", "--recipe", data("tm.json"), "--len", "16"});
  CHECK(r.code == 0);
  CHECK(r.out == "0110100110010110\n");
  r = run({"generate", "--recipe", "champernowne", "--len", "26"});
  CHECK(r.out == "01101110010111011110001001\n");
  r = run({"generate", "--recipe", "tm", "--len", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "\n");
  r = run({"generate", "--recipe", R"({"type":"periodic","pattern":"012"})", "--len", "7"});
  CHECK(r.out == "0120120\n");
  r = run({"generate", "--recipe", "tm", "--len", "200000000"});
  CHECK(r.code == cli::kResource);
}

TEST_CASE("profile") {
  auto r = run({"profile", "--recipe", "tm", "--nmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,rho_ab,rho,balance_running\n1,2,2,1\n2,3,4,2\n3,2,6,2\n4,3,10,2\n");
  CHECK(r.err.find("prefix_len=256") != std::string::npos);
  r = run({"profile", "--recipe", "fibonacci", "--nmax", "3"});
  CHECK(r.out == "n,rho_ab,rho,balance_running\n1,2,2,1\n2,2,3,1\n3,2,4,1\n");
  r = run({"profile", "--recipe", "periodic01", "--nmax", "2"});
  CHECK(r.out == "n,rho_ab,rho,balance_running\n1,2,2,1\n2,1,2,1\n");
  r = run({"profile", "--recipe", "tm", "--nmax", "10", "--prefix-len", "5"});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("profile output does not depend on the worker count") {
  auto const a = run({"profile", "--recipe", "hubert", "--nmax", "300", "--jobs", "1"});
  auto const b = run({"profile", "--recipe", "hubert", "--nmax", "300", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("powers") {
  auto r = run({"powers", "sturmian", "--slope", "golden", "--pos", "1", "--k", "4"});
  REQUIRE(r.code == 0);
  auto cert = nlohmann::json::parse(r.out);
  auto const pair = sturmian_period_pair(ContinuedFraction::golden(), 4);
  auto const period = BigInt(cert.at("period").get<std::size_t>());
  CHECK((period == pair.short_period || period == pair.long_period));
  CHECK(check_certificate(cert));

  r = run({"powers", "vdw", "--recipe", data("tm.json"), "--k", "2", "--M", "2"});
  REQUIRE(r.code == 0);
  cert = nlohmann::json::parse(r.out);
  CHECK(cert.at("start") == 3);
  CHECK(cert.at("period") == 5);
  CHECK(check_certificate(cert));

  r = run({"powers", "brute", "--recipe", "const0", "--k", "9"});
  REQUIRE(r.code == 0);
  cert = nlohmann::json::parse(r.out);
  CHECK(cert.at("start") == 0);
  CHECK(cert.at("period") == 1);

  r = run({"powers", "brute", "--recipe", "periodic01", "--k", "3", "--len", "2"});
  CHECK(r.code == cli::kFailed);
  r = run({"powers", "sideways", "--recipe", "tm"});
  CHECK(r.code == cli::kUsage);
  r = run({"powers", "vdw", "--k", "2"});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("verify") {
  auto r = run({"verify", "thue-morse", "--nmax", "256"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = run({"verify", "rauzy", "--variant", "morphism", "--nmax", "256"});
  CHECK(r.code == 0);
  r = run({"verify", "periodicity", "--recipe", "periodic01", "--p", "3"});
  CHECK(r.code == cli::kFailed);
  CHECK(r.out.find("witness") != std::string::npos);
  r = run({"verify", "periodicity", "--recipe", "periodic01", "--p", "2"});
  CHECK(r.code == 0);
  r = run({"verify", "no-such-claim"});
  CHECK(r.code == cli::kUsage);
  r = run({"verify", "thue-morse", "--recipe", "fibonacci", "--nmax", "32"});
  CHECK(r.code == cli::kFailed);
}

TEST_CASE("verify all writes a deterministic CSV") {
  auto const path = temp_file("all.csv");
  auto r = run({"verify", "all", "--nmax", "64", "--jobs", "4", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string   csv((std::istreambuf_iterator<char>(in)), {});
  CHECK(csv.rfind("claim,range,verdict,witness\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  auto const again = run({"verify", "all", "--nmax", "64", "--jobs", "1"});
  CHECK(again.out == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("run config files") {
  auto const cfg = temp_file("config.json");
  {
    std::ofstream f(cfg);
    f << R"({"command":"profile","recipe":"tm","n_max":4})";
  }
  auto r = run({"run", cfg.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "n,rho_ab,rho,balance_running\n1,2,2,1\n2,3,4,2\n3,2,6,2\n4,3,10,2\n");
  {
    std::ofstream f(cfg);
    f << R"({"command":"powers","mode":"sturmian","slope":{"preperiod":[2],"period":[1]},"pos":3,"k":2,"seed":1})";
  }
  r = run({"run", cfg.string()});
  CHECK(r.code == 0);
  CHECK(check_certificate(nlohmann::json::parse(r.out)));
  {
    std::ofstream f(cfg);
    f << R"({"command":"generate","recipe":{"type":"champernowne"},"len":3})";
  }
  r = run({"run", cfg.string()});
  CHECK(r.out == "011\n");
  {
    std::ofstream f(cfg);
    f << R"({"command":"profile","recipe":"tm","n_max":8,"prefix_len":4})";
  }
  CHECK(run({"run", cfg.string()}).code == cli::kUsage);
  {
    std::ofstream f(cfg);
    f << R"({"command":"profile","recipe":"tm","n_max":0})";
  }
  CHECK(run({"run", cfg.string()}).code == cli::kUsage);
  {
    std::ofstream f(cfg);
    f << R"({"command":"profile","colour":"blue"})";
  }
  CHECK(run({"run", cfg.string()}).code == cli::kUsage);
  std::filesystem::remove(cfg);
  CHECK(run({"run", "/nonexistent/config.json"}).code == cli::kUsage);
}

TEST_CASE("the executable honours exit codes and is byte-deterministic") {
  auto const a = shell("generate --recipe tm --len 16");
  CHECK(a.first == 0);
  CHECK(a.second == "0110100110010110\n");
  CHECK(shell("").first == cli::kUsage);
  CHECK(shell("verify periodicity --recipe periodic01 --p 3").first == cli::kFailed);
  CHECK(shell("generate --recipe tm --len 999999999").first == cli::kResource);
  auto const p1 = shell("powers vdw --recipe tm --k 3 --M 2 --len 20000 --jobs 1");
  auto const p4 = shell("powers vdw --recipe tm --k 3 --M 2 --len 20000 --jobs 4");
  CHECK(p1.first == 0);
  CHECK(p1.second == p4.second);
  CHECK(shell("--help").first == 0);
}
