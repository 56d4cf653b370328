#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "symnc/cli.hpp"
#include "symnc/io.hpp"

using namespace symnc;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("exists") {
  const auto ok = run({"exists", "--k", "4", "--n", "10"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("d = n/g = 5") != std::string::npos);
  const auto no = run({"exists", "--k", "2", "--n", "5"});
  CHECK(no.code == kExitDomainFailure);
  const auto js = run({"exists", "--k", "7", "--n", "28", "--json"});
  CHECK(js.code == kExitOk);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["satisfied"] == true);
  CHECK(j["d"] == 4);
  CHECK(run({"exists", "--k", "5", "--n", "4"}).code == kExitUsage);
}

TEST_CASE("construct") {
  const auto r = run({"construct", "--k", "4", "--n", "10", "--order", "3,4,2,1"});
  REQUIRE(r.code == kExitOk);
  const auto f = parse_collection(r.out);
  CHECK(f.collection() == fixtures::example_4_10());
  CHECK(f.metadata["class_order"] == nlohmann::json({3, 4, 2, 1}));
  CHECK(f.metadata["auxiliary_n"] == 20);

  CHECK(run({"construct", "--k", "4", "--n", "10", "--order", "1,2,3,4"}).code == kExitUsage);
  CHECK(run({"construct", "--k", "4", "--n", "10", "--order", "x"}).code == kExitUsage);
  CHECK(run({"construct", "--k", "2", "--n", "5"}).code == kExitDomainFailure);
  CHECK(run({"construct", "--k", "4"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);

  const auto staged = run({"construct", "--k", "4", "--n", "10", "--order", "3,4,2,1", "--stages"});
  const auto sf = parse_collection(staged.out);
  REQUIRE(sf.metadata["stages"].size() == 4);
  CHECK(sf.metadata["stages"][3]["block"] == nlohmann::json::parse("[[1,5,9,13]]"));
}

TEST_CASE("verify, quiver and embed through files") {
  const auto path = temp_path("symnc_cli_4_10.json");
  REQUIRE(run({"construct", "--k", "4", "--n", "10", "--out", path}).code == kExitOk);
  CHECK(run({"verify", path, "--symmetric"}).code == kExitOk);

  const auto q = run({"quiver", path, "--format", "json", "--jacobian"});
  CHECK(q.code == kExitOk);
  const auto qj = nlohmann::json::parse(q.out);
  CHECK(qj["vertices"].size() == 15);
  CHECK(q.err.find("rotation-invariant: true") != std::string::npos);
  CHECK(run({"quiver", path, "--format", "png"}).code == kExitUsage);

  const auto e = run({"embed", path, "--format", "dot"});
  CHECK(e.code == kExitOk);
  CHECK(e.err.find("euler characteristic: 1") != std::string::npos);

  const auto bad = temp_path("symnc_cli_bad.json");
  {
    std::ofstream f(bad);
    f << R"({"n": 4, "k": 2, "sets": [[1, 3], [2, 4]]})";
  }
  CHECK(run({"verify", bad}).code == kExitDomainFailure);
  {
    std::ofstream f(bad);
    f << "{\"n\": 4,";
  }
  const auto broken = run({"verify", bad});
  CHECK(broken.code == kExitDomainFailure);
  CHECK(broken.err.find("line") != std::string::npos);
  CHECK(run({"verify", temp_path("symnc_missing.json")}).code == kExitDomainFailure);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--k", "4", "--n", "8", "--count-only"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("count: 110") != std::string::npos);
  CHECK(run({"enumerate", "--k", "2", "--n", "5", "--count-only"}).out.find("count: 0") != std::string::npos);
  CHECK(run({"enumerate", "--k", "4", "--n", "20", "--count-only"}).code == kExitDomainFailure);

  const auto dir = temp_path("symnc_cli_enum");
  std::filesystem::remove_all(dir);
  CHECK(run({"enumerate", "--k", "3", "--n", "9", "--out", dir}).code == kExitOk);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  CHECK(files == 24);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "k3_n9_0001.json"));
  std::filesystem::remove_all(dir);
}
