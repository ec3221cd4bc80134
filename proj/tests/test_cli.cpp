#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "silt/io.hpp"
#include "silt/silting.hpp"

using namespace silt;
namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* b = std::getenv("SILTCHECK_BIN");
  REQUIRE(b != nullptr);
  return b;
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  std::string cmd = bin() + " " + args + " " + redirect;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int st = pclose(f);
  REQUIRE(WIFEXITED(st));
  return {WEXITSTATUS(st), out};
}

// Written once; every case runs against the same files.
const std::string& fixture_dir() {
  static std::string dir = [] {
    fs::path d = fs::temp_directory_path() / "siltcheck_cli_fixtures";
    fs::remove_all(d);
    fs::create_directories(d);
    AlgebraPtr a2 = fixtures::a2();
    save_algebra(a2, (d / "a2.json").string());
    save_algebra(fixtures::a3(), (d / "a3.json").string());
    save_algebra(fixtures::n3(), (d / "n3.json").string());

    Module t = direct_sum(a2, {projective(a2, 0), simple(a2, 0)}).mod;
    save_module(t, (d / "p1_plus_s1.json").string(), "a2.json");
    save_module(simple(a2, 0), (d / "s1.json").string(), "a2.json");
    save_module(simple(a2, 1), (d / "s2.json").string(), "a2.json");
    save_module(regular_module(a2), (d / "reg2.json").string(), "a2.json");

    save_presentation(min_presentation(simple(a2, 0)), (d / "minpres_s1.json").string(), "a2.json");
    save_presentation(make_presentation(a2, {}, {1}, {}), (d / "proj2_stalk.json").string(),
                      "a2.json");
    save_presentation(sigma_tilde(simple(a2, 1)), (d / "sig_s2.json").string(), "a2.json");

    std::ofstream(d / "bad.json") << "this is not json\n";
    std::ofstream(d / "wrongp.json")
        << "{\"field\": {\"p\": 7}, \"algebra\": \"a2.json\", \"dims\": {\"1\": 1, \"2\": 0}, "
           "\"maps\": {}}\n";
    return d.string() + "/";
  }();
  return dir;
}

}  // namespace

TEST_CASE("files written by save round-trip through load") {
  const std::string& D = fixture_dir();
  AlgebraPtr a = load_algebra(D + "a2.json");
  CHECK(a->p() == kDefaultPrime);
  CHECK(a->dim() == 3);
  CHECK(a->is_hereditary());

  Module t = load_module(D + "p1_plus_s1.json", a);
  CHECK(t.dims == std::vector<int>{2, 1});
  Presentation s = load_presentation(D + "minpres_s1.json", a);
  CHECK(s.pm1.vertices == std::vector<int>{1});
  CHECK(s.p0.vertices == std::vector<int>{0});

  IndSet ind = enumerate_indecomposables(a, IndStrategy::HereditaryKnitting);
  save_indset(ind, D + "a2_ind.json", "a2.json");
  IndSet back = load_indset(D + "a2_ind.json", a);
  CHECK(back.modules.size() == ind.modules.size());
  CHECK(back.hom_table == ind.hom_table);
  CHECK(back.ext_table == ind.ext_table);

  CHECK_THROWS_AS((void)load_module(D + "wrongp.json", a), Error);
  CHECK_THROWS_AS((void)load_algebra(D + "bad.json"), Error);
}

TEST_CASE("exit codes follow the verdict and error contract") {
  const std::string& D = fixture_dir();
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "p1_plus_s1.json").code == 0);
  CHECK(run("check-tau-rigid -A " + D + "a2.json -M " + D + "s1.json").code == 0);
  CHECK(run("check-2silting -A " + D + "a2.json -C " + D + "minpres_s1.json").code == 1);
  CHECK(run("check-presilting -A " + D + "a2.json -C " + D + "minpres_s1.json").code == 0);

  // silting depends on the chosen presentation, not just the module
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "s1.json").code == 0);
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "s1.json -C " + D +
            "minpres_s1.json").code == 1);
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "s2.json").code == 0);
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "s2.json -C " + D +
            "proj2_stalk.json").code == 1);
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "s2.json -C " + D +
            "sig_s2.json").code == 0);

  CHECK(run("check-tilting -A " + D + "a2.json -M " + D + "s1.json").code == 1);
  CHECK(run("check-tilting -A " + D + "a2.json -M " + D + "reg2.json").code == 0);
  CHECK(run("check-quasitilting -A " + D + "a2.json -M " + D + "s1.json").code == 0);
  CHECK(run("hrs-report -A " + D + "a2.json -M " + D + "p1_plus_s1.json").code == 0);
  CHECK(run("verify-bijection -A " + D + "a2.json").code == 0);

  // input problems are 2, never 1
  CHECK(run("check-partial-silting -A " + D + "a2.json -M " + D + "s1.json -C " + D +
            "proj2_stalk.json").code == 2);
  CHECK(run("check-silting -A " + D + "bad.json -M " + D + "s1.json").code == 2);
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "wrongp.json").code == 2);
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "nonexistent.json").code == 2);
  CHECK(run("check-silting -A " + D + "a2.json").code == 2);

  CHECK(run("verify-all -A " + D + "a2.json").code == 0);
  CHECK(run("verify-all -A " + D + "n3.json").code == 0);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string& D = fixture_dir();
  Run a = run("enumerate -A " + D + "a3.json");
  Run b = run("enumerate -A " + D + "a3.json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  Run c = run("check-silting -A " + D + "a2.json -M " + D + "p1_plus_s1.json");
  Run d = run("check-silting -A " + D + "a2.json -M " + D + "p1_plus_s1.json");
  CHECK(c.out == d.out);

  Run e = run("verify-all -A " + D + "a2.json --seed 9");
  Run f = run("verify-all -A " + D + "a2.json --seed 9");
  CHECK(e.out == f.out);
}

TEST_CASE("enumerate emits the census document") {
  const std::string& D = fixture_dir();
  Run r = run("enumerate -A " + D + "a2.json");
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == true);
  CHECK(doc["count"] == 5);
  REQUIRE(doc["classes"].size() == 5);
  std::vector<size_t> class_sizes, proj_sizes;
  for (const auto& c : doc["classes"]) {
    CHECK(c.contains("module"));
    class_sizes.push_back(c["class"].size());
    proj_sizes.push_back(c["ext_projectives"].size());
  }
  std::sort(class_sizes.begin(), class_sizes.end());
  std::sort(proj_sizes.begin(), proj_sizes.end());
  CHECK(class_sizes == std::vector<size_t>{0, 1, 1, 2, 3});
  CHECK(proj_sizes == std::vector<size_t>{0, 1, 1, 2, 2});

  CHECK(nlohmann::json::parse(run("enumerate -A " + D + "a3.json").out)["count"] == 14);
  CHECK(nlohmann::json::parse(run("enumerate -A " + D + "n3.json").out)["count"] == 14);
}

TEST_CASE("--recheck replays emitted certificates") {
  const std::string& D = fixture_dir();
  CHECK(run("check-silting -A " + D + "a2.json -M " + D + "p1_plus_s1.json --recheck").code == 0);
  CHECK(run("check-2silting -A " + D + "a2.json -C " + D + "minpres_s1.json --recheck").code == 1);
  CHECK(run("verify-bijection -A " + D + "a2.json --recheck").code == 0);
  CHECK(run("complete -A " + D + "a2.json -M " + D + "s1.json --recheck").code == 0);
  CHECK(run("verify-all -A " + D + "a2.json --recheck").code == 0);
}

TEST_CASE("complete and approximate write loadable artifacts") {
  const std::string& D = fixture_dir();
  AlgebraPtr a = load_algebra(D + "a2.json");

  CHECK(run("complete -A " + D + "a2.json -M " + D + "s1.json -o " + D + "out_c").code == 0);
  Module cm = load_module(D + "out_c/complement.json", a);
  CHECK(cm.dims == std::vector<int>{3, 2});
  Presentation sb = load_presentation(D + "out_c/sigma_bar.json", a);
  CHECK(sb.p0.mod.dims[0] >= cm.dims[0]);

  CHECK(run("approximate -A " + D + "a2.json -M " + D + "p1_plus_s1.json -o " + D +
            "out_a").code == 0);
  Module t0 = load_module(D + "out_a/t0.json", a);
  Module t1 = load_module(D + "out_a/t1.json", a);
  CHECK(t0.dims == std::vector<int>{2, 2});  // two copies of the big projective
  CHECK(t1.dims == std::vector<int>{1, 0});

  CHECK(run("enumerate -A " + D + "a2.json --kind 2silting -o " + D + "out_e").code == 0);
  for (int k = 0; k < 5; ++k) {
    Module rep = load_module(D + "out_e/class_" + std::to_string(k) + ".json", a);
    Presentation s = load_presentation(D + "out_e/complex_" + std::to_string(k) + ".json", a);
    Module h = cokernel(s.map).quot;
    CHECK(h.dims == rep.dims);
  }
}

TEST_CASE("stderr carries a one-line summary") {
  const std::string& D = fixture_dir();
  Run r = run("check-silting -A " + D + "a2.json -M " + D + "p1_plus_s1.json", "2>&1 1>/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict true") != std::string::npos);
  CHECK(r.out.find('\n') == r.out.size() - 1);
}
