#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "process.hpp"

namespace {

const std::string kCli = FRACFREQ_CLI_PATH;

process::Result cli(const std::string& args) {
  return process::run(process::quote(kCli) + " " + args + " 2>/dev/null");
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("defaults emit 81 csv rows") {
  const auto r = cli("--tf 's^0.5'");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 82);
  CHECK(r.out.rfind("omega,mag_linear,mag_db,phase_rad,phase_deg\n", 0) == 0);
}

TEST_CASE("grid options and json output") {
  const auto r = cli("--tf '10000/s^0.5' --wmin 1 --wmax 100 --ppd 1 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["mag_db"].get<double>() == doctest::Approx(80));
  CHECK(doc[1]["mag_db"].get<double>() == doctest::Approx(70));
  CHECK(doc[2]["phase_deg"].get<double>() == doctest::Approx(-45));
}

TEST_CASE("output file") {
  const std::string path = "cli_test_output.csv";
  std::remove(path.c_str());
  const auto r = cli("--tf 1/1 --wmin 1 --wmax 10 --ppd 2 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(count_lines(ss.str()) == 4);
  CHECK(ss.str() == cli("--tf 1/1 --wmin 1 --wmax 10 --ppd 2").out);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(cli("--tf 's^'").exit_code == 2);
  CHECK(cli("--tf '(s+1'").exit_code == 2);
  CHECK(cli("--tf ''").exit_code == 2);
  CHECK(cli("--tf '1/s^100' --wmin 1e-5").exit_code == 3);
  CHECK(cli("--tf s --wmin 10 --wmax 1").exit_code == 1);
  CHECK(cli("--tf s --format xml").exit_code != 0);
  CHECK(cli("").exit_code != 0);
}

TEST_CASE("parse errors mention the offset and evaluation errors the frequency") {
  const auto parse = process::run(process::quote(kCli) + " --tf 's^' 2>&1 >/dev/null");
  CHECK(parse.out.find("offset 2") != std::string::npos);
  const auto eval = process::run(process::quote(kCli) + " --tf '1/s^100' --wmin 1e-5 2>&1 >/dev/null");
  CHECK(eval.out.find("omega=1.0000000000000001e-05") != std::string::npos);
}
