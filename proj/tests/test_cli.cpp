#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// stderr is discarded so `out` holds exactly what the tool printed to stdout.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CFNUM_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json row(const std::string& json_text, int n) { return nlohmann::json::parse(json_text)["rows"][n]; }

}  // namespace

TEST_CASE("triangle") {
  auto r = run("triangle --family t2 --n 6 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,k,value\n", 0) == 0);
  CHECK(r.out.find("6,4,\"5\"\n") != std::string::npos);

  r = run("triangle --family s2l --lambda 1/3 --n 4");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "s2l");
  CHECK(j["params"] == nlohmann::json{{"lambda", "1/3"}});
  CHECK(j["n_max"] == 4);
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][3].size() == 4);

  r = run("triangle --family gh --r 2 --s 1 --n 4");
  CHECK(r.code == 0);
  CHECK(row(r.out, 1) == nlohmann::json{"1", "2"});

  CHECK(run("triangle --family nope --n 3").code == 2);
  CHECK(run("triangle --family s2l --lambda 0 --n 3").code == 2);
  CHECK(run("triangle --family t2 --n 6", "CFNUM_ORDER=3").code == 2);
  CHECK(run("triangle --family t2 --n 6", "CFNUM_ORDER=20").code == 0);
  CHECK(run("triangle --family t2 --n 6 --order 3").code == 2);
}

TEST_CASE("assoc") {
  auto r = run("assoc --kind t2 --seq bernoulli --n 2");
  CHECK(r.code == 0);
  CHECK(row(r.out, 2) == nlohmann::json{"1/6", "-1", "1"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sequence"] == "bernoulli");
  CHECK(j["kind"] == "t2");
  CHECK(j["route"] == "explicit");

  r = run("assoc --kind t1 --seq bernoulli_product --n 2");
  CHECK(r.code == 0);
  CHECK(row(r.out, 2) == nlohmann::json{"11/36", "1/2", "1/3"});

  const auto gf = run("assoc --kind t1 --seq laguerre --route genfunc --n 6");
  const auto solve = run("assoc --kind t1 --seq laguerre --route solve --n 6");
  CHECK(gf.code == 0);
  CHECK(nlohmann::json::parse(gf.out)["rows"] == nlohmann::json::parse(solve.out)["rows"]);

  CHECK(run("assoc --kind t1 --seq bernoulli --route genfunc --n 4").code == 2);
  CHECK(run("assoc --kind t2 --seq nothing --n 4").code == 2);
}

TEST_CASE("convert") {
  auto r = run("convert --from monomial --to central 0,0,0,1");
  CHECK(r.code == 0);
  CHECK(r.out == "0,1/4,0,1\n");
  r = run("convert --from central --to monomial 0,0,0,0,0,0,1");
  CHECK(r.out == "0,0,4,0,-5,0,1\n");
  r = run("convert --from falling --to falling 1/2,0,3,0");
  CHECK(r.out == "1/2,0,3\n");
  CHECK(run("convert --from monomial --to central 1,x").code == 2);
  CHECK(run("convert --from monomial --to central 1/0").code == 2);
}

TEST_CASE("series") {
  const auto r = run("series --name t --order 7");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ec"][3] == "1/24");
  CHECK(j["f_bar"][1] == "1");
  CHECK(run("series --name monomials --order 5").code == 0);
  CHECK(run("series --name bernoulli_product --order 5").code == 2);
}

TEST_CASE("verify and listing") {
  auto r = run("verify --suite none");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["checks"].empty());
  CHECK(j["all_pass"] == true);

  r = run("verify --suite orthogonality --n 12");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["all_pass"] == true);

  CHECK(run("verify --suite unknown").code == 2);

  r = run("list-sequences");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
  CHECK(run("--list-sequences").out == r.out);
  CHECK(run("frobnicate").code == 2);
}
