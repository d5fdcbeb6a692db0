#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lcc/cli.hpp"
#include "lcc/engines.hpp"
#include "lcc/json_io.hpp"

using namespace lcc;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("enumerate a family as json") {
  auto r = run_cli({"enumerate", "--family", "vt", "--n", "4", "--b", "0", "--engine", "exact",
                    "--emit", "json"});
  CHECK(r.status == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["coeffs"] == json::array({"1", "0", "2", "0", "1"}));
  CHECK(doc["engine"] == "exact");
  CHECK(doc["residual"] == 0.0);
  CHECK(doc.contains("elapsed_ms"));
}

TEST_CASE("enumerate text and csv") {
  auto text = run_cli({"enumerate", "--m", "3", "--a", "1,2"});
  CHECK(text.status == 0);
  CHECK(text.out == "A_0 = 1\nA_1 = 0\nA_2 = 1\n");
  auto csv = run_cli({"enumerate", "--m", "3", "--a", "1,2", "--b", "1", "--engine", "brute",
                      "--emit", "csv"});
  CHECK(csv.out == "weight,count\n0,0\n1,1\n2,0\n");
}

TEST_CASE("size") {
  auto r = run_cli({"size", "--n", "3", "--q", "2", "--m", "1", "--a", "1,1,1", "--b", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "8\n");
  auto j = run_cli({"size", "--family", "vt", "--n", "4", "--engine", "dft", "--emit", "json"});
  CHECK(json::parse(j.out)["size"] == "4");
}

TEST_CASE("check reports agreement") {
  auto r = run_cli({"check", "--n", "6", "--q", "2", "--m", "7", "--a", "1,2,3,4,5,6", "--b", "0",
                    "--engines", "exact,dft,brute"});
  CHECK(r.status == 0);
  CHECK(r.out == "AGREE\n");
  auto j = run_cli({"check", "--m", "5", "--q", "3", "--a", "1,2,3", "--b", "2", "--engines",
                    "exact,brute", "--emit", "json"});
  CHECK(json::parse(j.out)["agree"] == true);
}

TEST_CASE("sweep") {
  auto r = run_cli({"sweep", "--family", "vt", "--n", "4", "--emit", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "b,size,A_0,A_1,A_2,A_3,A_4\n0,4,1,0,2,0,1\n1,3,0,1,1,1,0\n2,3,0,1,1,1,0\n"
        "3,3,0,1,1,1,0\n4,3,0,1,1,1,0\n");
  auto j = run_cli({"sweep", "--family", "vt", "--n", "4", "--emit", "json"});
  CHECK(json::parse(j.out)["family"] == "vt");
  CHECK(run_cli({"sweep", "--m", "3", "--a", "1", "--engine", "dft"}).status == 1);
}

TEST_CASE("family subcommand") {
  auto r = run_cli({"family", "--family", "cse", "--n", "4", "--s", "3", "--emit", "json"});
  CHECK(r.status == 0);
  auto doc = json::parse(r.out);
  CHECK(doc == json::parse(R"({"n":4,"q":2,"m":16,"a":[1,2,4,5],"b":0})"));
  auto text = run_cli({"family", "--family", "ternary_integer", "--n", "3"});
  CHECK(text.out == "ternary_integer: n=3 q=3 m=15 a=(1,3,7) b=0\n");
}

TEST_CASE("constraint and validation errors exit 1") {
  auto lev = run_cli({"family", "--family", "levenshtein", "--n", "3", "--m", "3"});
  CHECK(lev.status == 1);
  CHECK(lev.err.find("m >= n + 1") != std::string::npos);
  CHECK(run_cli({"enumerate", "--family", "construction_cprime", "--n", "4", "--b", "2"}).status == 1);
  CHECK(run_cli({"size", "--family", "cse", "--n", "8", "--s", "3"}).status == 1);
  CHECK(run_cli({"size", "--family", "le_nguyen", "--n", "2", "--q", "3", "--s", "1", "--m", "6"})
            .status == 1);

  auto mismatch = run_cli({"enumerate", "--n", "2", "--m", "3", "--a", "1,2,3"});
  CHECK(mismatch.status == 1);
  CHECK(mismatch.err.find("dimension_mismatch") != std::string::npos);
  CHECK(run_cli({"enumerate", "--q", "1", "--m", "3", "--a", "1"}).status == 1);
  CHECK(run_cli({"enumerate", "--m", "0", "--a", "1"}).status == 1);
  CHECK(run_cli({"enumerate", "--m", "3", "--a", "1,x"}).status == 1);
  CHECK(run_cli({"enumerate", "--engine", "fft", "--m", "3", "--a", "1"}).status == 1);
  CHECK(run_cli({"enumerate"}).status == 1);
  CHECK(run_cli({"frobnicate"}).status == 1);
  CHECK(run_cli({"enumerate", "--family", "bogus", "--n", "3"}).status == 1);
}

TEST_CASE("exactly one spec source") {
  auto path = write_temp("lcc_cli_one_source.json", R"({"n":1,"q":2,"m":2,"a":[1],"b":1})");
  auto both = run_cli({"enumerate", "--spec", path, "--m", "3", "--a", "1"});
  CHECK(both.status == 1);
  CHECK(run_cli({"enumerate", "--spec", path, "--family", "vt", "--n", "3"}).status == 1);
  auto ok = run_cli({"enumerate", "--spec", path});
  CHECK(ok.status == 0);
  CHECK(ok.out == "A_0 = 0\nA_1 = 1\n");
  CHECK(run_cli({"enumerate", "--spec", "/nonexistent/spec.json"}).status == 1);
  auto garbage = write_temp("lcc_cli_garbage.json", "{not json");
  CHECK(run_cli({"enumerate", "--spec", garbage}).status == 1);
}

TEST_CASE("family request files") {
  auto path = write_temp("lcc_cli_family.json",
                         R"({"family":"le_nguyen","params":{"n":2,"q":3,"s":1,"m":7,"b":0}})");
  auto r = run_cli({"family", "--spec", path, "--emit", "json"});
  CHECK(r.status == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"n":2,"q":3,"m":7,"a":[1,3],"b":0})"));
  auto size = run_cli({"size", "--spec", path});
  CHECK(size.status == 0);
}

TEST_CASE("engine errors exit 2") {
  auto cap = run_cli({"enumerate", "--engine", "brute", "--m", "3", "--a", "1,1,1,1", "--brute-cap",
                      "15"});
  CHECK(cap.status == 2);
  CHECK(cap.err.find("15") != std::string::npos);

  std::string many = "1";
  for (int i = 1; i < 60; ++i) many += ",1";
  CHECK(run_cli({"enumerate", "--engine", "dft", "--m", "3", "--a", many}).status == 2);
  CHECK(run_cli({"enumerate", "--engine", "dft", "--m", "3", "--a", many, "--force-dft"}).status != 1);
}

TEST_CASE("LCC_BRUTE_CAP environment override") {
  ::setenv("LCC_BRUTE_CAP", "8", 1);
  CHECK(run_cli({"size", "--engine", "brute", "--m", "3", "--a", "1,1,1"}).status == 0);
  CHECK(run_cli({"size", "--engine", "brute", "--m", "3", "--a", "1,1,1,1"}).status == 2);
  // the flag wins over the environment
  CHECK(run_cli({"size", "--engine", "brute", "--m", "3", "--a", "1,1,1,1", "--brute-cap", "16"})
            .status == 0);
  ::setenv("LCC_BRUTE_CAP", "lots", 1);
  CHECK(run_cli({"size", "--engine", "brute", "--m", "3", "--a", "1"}).status == 1);
  ::unsetenv("LCC_BRUTE_CAP");
}

TEST_CASE("code spec json round trip preserves engine output") {
  std::vector<CodeSpec> specs{make_code_spec(3, 11, {4, -7, 22, 9}, -5),
                              make_code_spec(2, 7, {1, 2, 3, 4, 5, 6}, 3)};
  CodeSpec huge = make_code_spec(2, 5, {1, 2}, 0);
  huge.a[0] = power(BigInt(10), 30) + 1;
  huge.b = -power(BigInt(3), 50);
  specs.push_back(huge);
  for (const auto& spec : specs) {
    auto text = to_json(spec).dump();
    auto back = code_spec_from_json(json::parse(text));
    CHECK(back == spec);
    auto path = write_temp("lcc_cli_roundtrip.json", text);
    auto from_file = run_cli({"enumerate", "--spec", path, "--emit", "json"});
    CHECK(json::parse(from_file.out)["coeffs"] == to_json(enumerate_exact(spec))["coeffs"]);
  }
  CHECK(to_json(huge)["a"][0] == "1000000000000000000000000000001");
  CHECK_THROWS_AS(code_spec_from_json(json::parse(R"({"n":1,"q":2,"m":2.5,"a":[1],"b":0})")),
                  ValidationError);
  CHECK_THROWS_AS(code_spec_from_json(json::parse(R"({"n":1,"q":2,"a":[1],"b":0})")),
                  ValidationError);
}

TEST_CASE("engine report json round trip") {
  auto report = enumerate_exact(make_code_spec(2, 5, {1, 2, 3, 4}, 0));
  CHECK(enumerator_from_json(to_json(report)) == report.enumerator);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli({"--help"}).status == 0);
}
