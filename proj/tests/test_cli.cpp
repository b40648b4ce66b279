// End-to-end checks of the command-line binary: spawns the built executable,
// captures stdout, and verifies documents, exit codes, and determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HARMONIA_BIN_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/harmonia_cli_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("unknown subcommand exits 64") {
  auto r = run("frobnicate");
  CHECK(r.exit_code == 64);
  CHECK(Json::parse(r.out)["error"] == "unknown-subcommand");
}

TEST_CASE("unknown flags are rejected with a validation error") {
  auto r = run("dft --nonsense 3");
  CHECK(r.exit_code == 2);
  CHECK(Json::parse(r.out)["error"] == "usage");
}

TEST_CASE("malformed input file exits 65") {
  auto path = write_temp("broken.json", "{not json");
  auto r = run("dft --input " + path);
  CHECK(r.exit_code == 65);
  CHECK(Json::parse(r.out)["error"] == "bad-input-file");

  auto missing = run("dft --input /tmp/harmonia_cli_no_such_file.json");
  CHECK(missing.exit_code == 65);
}

TEST_CASE("dft of the point mass at zero is identically one") {
  auto path = write_temp("delta0.json",
                         R"({"moduli":[2],"haar":"counting","values":[[1,0],[0,0]]})");
  auto r = run("dft --moduli 2 --input " + path);
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["values"][0][0].get<double>() == doctest::Approx(1.0));
  CHECK(doc["values"][1][0].get<double>() == doctest::Approx(1.0));
  CHECK(doc["values"][0][1].get<double>() == doctest::Approx(0.0));

  // emitted documents re-parse under the input schema: transform back
  auto out_path = write_temp("fhat.json", doc.dump());
  auto back = run("dft --inverse --input " + out_path);
  REQUIRE(back.exit_code == 0);
  Json orig = Json::parse(back.out);
  CHECK(orig["values"][0][0].get<double>() == doctest::Approx(1.0));
  CHECK(orig["values"][1][0].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("fast path agrees and moduli mismatch is a validation error") {
  auto path = write_temp("f30.json",
                         R"({"moduli":[6,5],"haar":"counting","values":[
    [1,0],[0,1],[2,0],[0,-1],[1,1],[0,0],[0.5,0],[0,0],[0,0],[1,0],
    [0,0],[0,2],[0,0],[1,0],[0,0],[0,0],[0,1],[0,0],[3,0],[0,0],
    [0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[0,0],[1,1],[0,0],[0,0]]})");
  auto r = run("dft --fast --input " + path);
  CHECK(r.exit_code == 0);

  auto mismatch = run("dft --moduli 4 --input " + path);
  CHECK(mismatch.exit_code == 2);
  CHECK(Json::parse(mismatch.out)["error"] == "invalid");
}

TEST_CASE("convolution of two point masses") {
  auto a = write_temp("da.json", R"({"moduli":[4],"values":[[0,0],[1,0],[0,0],[0,0]]})");
  auto b = write_temp("db.json", R"({"moduli":[4],"values":[[0,0],[0,0],[0,0],[1,0]]})");
  auto r = run("conv --input " + a + " --input2 " + b);
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["values"][0][0].get<double>() == doctest::Approx(1.0));  // 1 + 3 = 0 mod 4
  CHECK(doc["values"][1][0].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("measure convolution keeps total variation submultiplicative") {
  auto a = write_temp("mu.json", R"({"moduli":[3],"mass":[[1,0],[0,-2],[0.5,0]]})");
  auto r = run("conv --measure --input " + a + " --input2 " + a);
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  REQUIRE(doc.contains("mass"));
  double tv = 0.0, tv_in = 1.0 + 2.0 + 0.5;
  for (const auto& m : doc["mass"])
    tv += std::hypot(m[0].get<double>(), m[1].get<double>());
  CHECK(tv <= tv_in * tv_in + 1e-10);
}

TEST_CASE("kernel table CSV export") {
  auto r = run("poisson --r 0.5 --grid 8 --csv-out /tmp/harmonia_cli_kernel.csv");
  REQUIRE(r.exit_code == 0);
  std::ifstream csv("/tmp/harmonia_cli_kernel.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "r,theta_z,theta_w,P");
  int rows = 0;
  for (std::string line; std::getline(csv, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 64);
}

TEST_CASE("padic commands") {
  auto abs18 = run("padic abs --p 3 --x 18");
  REQUIRE(abs18.exit_code == 0);
  CHECK(Json::parse(abs18.out)["abs"] == "1/9");

  auto inv = run("padic inv --p 3 --L 4 --x 2");
  REQUIRE(inv.exit_code == 0);
  CHECK(Json::parse(inv.out)["inverse"] == "41");

  auto nonunit = run("padic inv --p 3 --L 4 --x 6");
  CHECK(nonunit.exit_code == 2);

  auto pair = run("padic pair --p 2 --y 1/2 --x 1");
  REQUIRE(pair.exit_code == 0);
  Json pd = Json::parse(pair.out);
  CHECK(pd["fraction"] == "1/2");
  CHECK(pd["value"][0].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("poisson extension at r = 0 averages the samples") {
  auto path = write_temp("samples8.json",
                         R"({"samples":[[1,0],[2,0],[3,0],[4,0],[5,0],[6,0],[7,0],[8,0]]})");
  auto r = run("poisson --r 0 --samples 8 --z 0 --input " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out)["value"][0].get<double>() == doctest::Approx(4.5));

  auto wrong = run("poisson --r 0 --samples 9 --z 0 --input " + path);
  CHECK(wrong.exit_code == 2);

  auto kernel = run("poisson --kernel --r 0.5 --theta 0.25 --theta-w 0.25");
  REQUIRE(kernel.exit_code == 0);
  CHECK(Json::parse(kernel.out)["kernel"].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("solenoid commands") {
  auto from = run("solenoid from-real --radices 2,3 --a 5/4");
  REQUIRE(from.exit_code == 0);
  Json doc = Json::parse(from.out);
  CHECK(doc["angles"] == Json::array({"1/4", "5/4", "5/4"}));

  auto path = write_temp("sol.json", doc.dump());
  auto chi = run("solenoid char --input " + path + " --level 1 --num 1");
  REQUIRE(chi.exit_code == 0);
  // exp(2 pi i * (5/4) / 2) = exp(5 pi i / 4)
  CHECK(Json::parse(chi.out)["value"][0].get<double>() ==
        doctest::Approx(-std::sqrt(0.5)).epsilon(1e-12));

  auto embed = run("solenoid embed --radices 2,3 --u 5");
  REQUIRE(embed.exit_code == 0);
  CHECK(Json::parse(embed.out)["angles"] == Json::array({"0", "1", "5"}));

  auto sum = run("solenoid add --input " + path + " --input2 " + path);
  REQUIRE(sum.exit_code == 0);
  CHECK(Json::parse(sum.out)["angles"] == Json::array({"1/2", "1/2", "5/2"}));
}

TEST_CASE("spectrum command") {
  auto path = write_temp("theta.json",
                         R"({"moduli":[4],"values":[[0,0],[1,0],[0,0],[0,0]]})");
  auto r = run("spectrum --input " + path + " --kmax 8");
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  REQUIRE(doc["eigenvalues"].size() == 4);
  CHECK(doc["eigenvalues"][1][1].get<double>() == doctest::Approx(-1.0));  // conj(i)
  CHECK(doc["radius_estimate"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["defect_max"].get<double>() < 1e-9);
}

TEST_CASE("--out writes the same document that is echoed") {
  auto path = write_temp("outsrc.json",
                         R"({"moduli":[3],"haar":"counting","values":[[1,0],[0,0],[0,0]]})");
  auto r = run("dft --input " + path + " --out /tmp/harmonia_cli_out.json");
  REQUIRE(r.exit_code == 0);
  std::ifstream written("/tmp/harmonia_cli_out.json");
  std::string file_doc((std::istreambuf_iterator<char>(written)),
                       std::istreambuf_iterator<char>());
  CHECK(Json::parse(file_doc) == Json::parse(r.out));
}

TEST_CASE("identical inputs and seed give identical bytes") {
  auto path = write_temp("det.json",
                         R"({"moduli":[3],"haar":"counting","values":[[1,0],[0.5,-1],[0,2]]})");
  auto r1 = run("dft --input " + path);
  auto r2 = run("dft --input " + path);
  CHECK(r1.out == r2.out);
}
