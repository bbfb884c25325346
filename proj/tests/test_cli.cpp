#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "fflat/io.hpp"
#include "fflat/verify.hpp"

using namespace fflat;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FFLAT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fflat_cli_" + name)).string();
}

}  // namespace

TEST_CASE("build the genus-3 example") {
  const std::string out = temp_path("f11.json");
  const Run r = run("build --p 11 --f 9,0,2,4,9,3,5,1 --places ramified-inert --out " + out);
  CHECK(r.code == 0);
  const IntegerLattice l = lattice_from_json(read_json_file(out));
  CHECK(l.rank() == 9);
  CHECK(lattice_equal(l, IntegerLattice(f11_reference_basis())));
  const Json places = read_json_file(temp_path("f11.places.json"));
  CHECK(places["places"].size() == 10);

  const Run inv = run("invariants " + out + " --what minimum2,well_rounded");
  CHECK(inv.code == 0);
  const Json j = Json::parse(inv.out);
  CHECK(j["minimum2"] == 8);
  CHECK(j["well_rounded"] == true);

  const Run aut = run("aut " + out + " --mode full");
  CHECK(aut.code == 0);
  CHECK(Json::parse(aut.out)["factored"] == Json::parse("[[2,9],[3,2],[5,1],[7,1]]"));
}

TEST_CASE("build is deterministic") {
  const Run a = run("build --p 7 --f 0,24,-50,35,-10,1 --places all-rational");
  const Run b = run("build --p 7 --f 0,24,-50,35,-10,1 --places all-rational");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("rational and named builds") {
  const Run r = run("build --rational --n 5");
  CHECK(r.code == 0);
  CHECK(lattice_equal(lattice_from_json(Json::parse(r.out)), root_lattice_a(5)));
  const std::string a4 = temp_path("a4.json");
  CHECK(run("build --named a --n 4 --out " + a4).code == 0);
  CHECK(Json::parse(run("invariants " + a4 + " --what det2").out)["det2"] == 5);
  const std::string a3 = temp_path("a3.json");
  CHECK(run("build --named a --n 3 --out " + a3).code == 0);
  CHECK(Json::parse(run("aut " + a3 + " --mode perm").out)["order"] == "24");
  const std::string b11 = temp_path("b11.json");
  CHECK(run("build --named barnes --n 11 --out " + b11).code == 0);
  CHECK(Json::parse(run("aut " + b11 + " --mode full").out)["order"] == "96");
}

TEST_CASE("genus-2 split lattice minima through the CLI") {
  const std::string g2 = temp_path("g2.json");
  CHECK(run("build --p 7 --f 0,24,-50,35,-10,1 --out " + g2).code == 0);
  const Json j = Json::parse(run("invariants " + g2 + " --what lambda2,minimal_vector_basis").out);
  CHECK(j["lambda2"] == Json::parse("[6,6,6,6,6,8]"));
  CHECK(j["minimal_vector_basis"] == "NotFound");
}

TEST_CASE("exit codes") {
  CHECK(run("build --p 11 --f 9,0,2,4,9,3,5,0").code == 2);
  CHECK(run("build --p 10 --f 1,1,0,1").code == 2);
  CHECK(run("build --p 7 --f 0,0,1,1").code == 2);
  CHECK(run("build --p 7 --f 1,1,0,1 --places nowhere").code == 2);
  CHECK(run("invariants /nonexistent.json").code == 2);
  CHECK(run("verify --check no_such").code == 2);
  CHECK(run("frobnicate").code == 2);
  const std::string a8 = temp_path("a8.json");
  CHECK(run("build --named a --n 8 --out " + a8).code == 0);
  CHECK(run("invariants " + a8 + " --what kissing --max-enum 10").code == 3);
  const std::string a16 = temp_path("a16.json");
  CHECK(run("build --named a --n 16 --out " + a16).code == 0);
  CHECK(run("aut " + a16 + " --mode perm --max-perm-dim 14").code == 3);
}

TEST_CASE("verify subcommand") {
  const Run list = run("verify --list");
  CHECK(list.code == 0);
  CHECK(Json::parse(list.out).size() == 15);
  const Run r = run("verify --check rational_An --check aut_example_F11");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == 2);
  CHECK(j["checks"][1]["details"]["report"]["order"] == "161280");
}
