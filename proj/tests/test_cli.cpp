#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "citemetrics/cli.hpp"
#include "citemetrics/corpus.hpp"
#include "citemetrics/csv.hpp"
#include "support.hpp"

using namespace citemetrics;

namespace {

const std::string kFixtures = CITEMETRICS_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "citemetrics");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("compute over the golden fixture") {
  const auto r = cli({"compute", "--corpus", kFixtures + "/golden", "--metrics", "h,hr", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "researcher_id,field_id,metric,value,display\n"));
  CHECK(contains(r.out, "physicist,physics,h,50,50\n"));
  CHECK(contains(r.out, "physicist,physics,hr,0.3787878787878788,0.38\n"));
  CHECK(contains(r.out, "economist,economics,hr,0.49382716049382713,0.49\n"));
  // ordered by (field, researcher)
  CHECK(r.out.find("economist,") < r.out.find("shleifer,"));
  CHECK(r.out.find("shleifer,") < r.out.find("newcomer,"));
}

TEST_CASE("compute json round-trips full precision and notes unavailable metrics") {
  const auto r = cli({"compute", "--corpus", kFixtures + "/golden", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["reference_year"] == 2013);
  REQUIRE(doc["reports"].size() == 5);
  const auto& phys = doc["reports"][3];
  CHECK(phys["researcher_id"] == "physicist");
  CHECK(phys["metrics"]["hr"]["value"].get<double>() == 50.0 / 132.0);
  CHECK(phys["metrics"]["hr"]["display"] == "0.38");
  CHECK(phys["metrics"]["c"]["available"] == false);
  CHECK_FALSE(phys["metrics"]["c"]["note"].get<std::string>().empty());
  CHECK(phys["metrics"].size() == 9);
}

TEST_CASE("compute over an uncited corpus") {
  testsupport::TempDir dir;
  dir.write("fields.csv", "field_id,name\nf,F\n");
  dir.write("researchers.csv", "researcher_id,name,field_id,first_pub_year\na,A,f,2000\nb,B,f,2001\n");
  dir.write("publications.csv", "pub_id,researcher_id,year,citation_count\np1,a,2001,\np2,b,2002,0\n");
  const auto r = cli({"compute", "--corpus", dir.path().string(), "--metrics", "h,hr", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "a,f,h,0,0\n"));
  CHECK(contains(r.out, "a,f,hr,0,0.00\n"));
  CHECK(contains(r.out, "b,f,hr,0,0.00\n"));
}

TEST_CASE("compute with the c column reports exclusions") {
  const auto r = cli({"compute", "--corpus", kFixtures + "/events", "--metrics", "c,h"});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "c_excluded"));
  const auto j = cli({"compute", "--corpus", kFixtures + "/events", "--metrics", "c", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["reports"][0]["researcher_id"] == "alice");
  CHECK(doc["reports"][0]["metrics"]["c"]["value"] == 3.0);
  CHECK(doc["reports"][0]["diagnostics"]["excluded_unknown_citations"] == 1);
}

TEST_CASE("usage errors exit 1") {
  auto r = cli({"compute", "--corpus", kFixtures + "/golden", "--metrics", "z"});
  CHECK(r.code == kExitUsage);
  CHECK(contains(r.err, "unknown metric 'z'"));
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"compute"}).code == kExitUsage);
  CHECK(cli({"compute", "--corpus", kFixtures + "/golden", "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"compute", "--corpus", kFixtures + "/golden", "--ref-year", "soon"}).code == kExitUsage);
  CHECK(cli({"rank", "--corpus", kFixtures + "/golden", "--field", "physics", "--metric", "q"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("rank") {
  auto r = cli({"rank", "--corpus", kFixtures + "/golden", "--field", "economics", "--metric", "h", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "rank,researcher_id,value,display\n1,shleifer,81,81\n2,economist,40,40\n"));

  r = cli({"rank", "--corpus", kFixtures + "/golden", "--field", "biology", "--metric", "h"});
  CHECK(r.code == kExitData);
  CHECK(contains(r.err, "biology"));

  r = cli({"rank", "--corpus", kFixtures + "/golden", "--field", "physics", "--metric", "c"});
  CHECK(r.code == kExitData);
  CHECK(contains(r.err, "citing authors"));
}

TEST_CASE("compare") {
  auto r = cli({"compare", "--corpus", kFixtures + "/golden", "physicist", "economist"});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "0.38"));
  CHECK(contains(r.out, "0.49"));
  CHECK(contains(r.out, "verdict: economist is relatively better"));

  r = cli({"compare", "--corpus", kFixtures + "/golden", "physicist", "physicist"});
  CHECK(contains(r.out, "verdict: tie"));

  r = cli({"compare", "--corpus", kFixtures + "/golden", "witten", "shleifer"});
  CHECK(contains(r.out, "verdict: tie at 1.00"));

  r = cli({"compare", "--corpus", kFixtures + "/golden", "physicist", "ghost", "--format", "json"});
  CHECK(r.code == kExitData);
  CHECK(contains(r.err, "ghost"));

  r = cli({"compare", "--corpus", kFixtures + "/golden", "economist", "physicist", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["winner"] == "left");
  CHECK(doc["left"]["hr"].get<double>() == 40.0 / 81.0);
}

TEST_CASE("validate") {
  auto r = cli({"validate", "--corpus", kFixtures + "/golden"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "0 errors, 0 warnings"));

  r = cli({"validate", "--corpus", kFixtures + "/malformed/dangling_owner"});
  CHECK(r.code == kExitData);
  CHECK(contains(r.err, "publications.csv:3:"));

  r = cli({"validate", "--corpus", kFixtures + "/events"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "0 errors, 1 warnings"));
}

TEST_CASE("malformed corpora exit 2 from every data command") {
  for (const char* name : {"missing_file", "bad_row", "dangling_owner", "count_mismatch"}) {
    const auto dir = kFixtures + "/malformed/" + name;
    const auto r = cli({"compute", "--corpus", dir});
    CHECK(r.code == kExitData);
    CHECK(contains(r.err, ".csv"));
  }
}

TEST_CASE("synth then compute") {
  testsupport::TempDir a, b;
  auto r = cli({"synth", "--fields", "2", "--researchers", "7", "--pubs-mean", "5", "--exponent", "2.5", "--seed",
                "11", "--out", a.path().string()});
  REQUIRE(r.code == kExitOk);
  r = cli({"synth", "--fields", "2", "--researchers", "7", "--pubs-mean", "5", "--exponent", "2.5", "--seed", "11",
           "--out", b.path().string()});
  REQUIRE(r.code == kExitOk);
  for (const char* f : {"fields.csv", "researchers.csv", "publications.csv", "citations.csv", "coauthorships.csv"}) {
    CHECK(testsupport::read_file(a.path() / f) == testsupport::read_file(b.path() / f));
  }

  CHECK(cli({"synth", "--exponent", "1", "--out", a.path().string()}).code == kExitUsage);
  CHECK(cli({"synth", "--exponent", "0.3", "--out", a.path().string()}).code == kExitUsage);

  r = cli({"compute", "--corpus", a.path().string(), "--metrics", "h", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  const auto table = csv::parse(r.out);
  CHECK(table.records.size() == 1 + 14);

  // identical flags, identical bytes
  CHECK(cli({"compute", "--corpus", a.path().string(), "--format", "json"}).out ==
        cli({"compute", "--corpus", b.path().string(), "--format", "json"}).out);
}

TEST_CASE("--out writes the report to a file") {
  testsupport::TempDir dir;
  const auto path = (dir.path() / "report.csv").string();
  const auto r = cli({"compute", "--corpus", kFixtures + "/golden", "--metrics", "h", "--format", "csv", "--out", path});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(contains(testsupport::read_file(path), "witten,physics,h,132,132"));
}
