#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pbwkit/cli/commands.hpp"
#include "pbwkit/cli/format.hpp"
#include "pbwkit/cli/report.hpp"
#include "json.hpp"

using namespace pbwkit;
using namespace pbwkit::cli;

namespace {

std::string corpus(const std::string& name) { return std::string(PBWKIT_CORPUS_DIR) + "/" + name; }

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(PBWKIT_CORPUS_DIR))
    if (e.path().extension() == ".alg") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

ErrorCode code_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for:\n" << text);
  return ErrorCode::ParseError;
}

std::string message_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.witness();
  }
  return {};
}

const char* kSmall =
    "pbwkit-alg 1\n"
    "field Q\n"
    "algebra ground\n"
    "module braided 2\n"
    "  psi [1 0; 0 1]\n"
    "end\n"
    "relations V\n"
    "  [0 1 -1 0]\n"
    "end\n";

}  // namespace

TEST_CASE("parse reads the symplectic reflection file") {
  auto f = parse_file(corpus("sympl_refl_z2_q.alg"));
  CHECK(f.field.name() == "Q");
  CHECK(f.dim_s == 2);
  CHECK(f.kind == PresentationFile::ModuleKind::Braided);
  CHECK(f.dim_m == 2);
  CHECK(f.space == PresentationFile::RelationSpace::V);
  REQUIRE(f.relations.size() == 1);
  REQUIRE(f.deformation);
  CHECK(f.deformation->theta.rows() == 2);
  CHECK(f.psi.rows() == 4);

  auto m = build(f);
  CHECK(m.smash_shaped());
  CHECK(m.M.dim() == 4);
  auto pres = m.presentation();
  CHECK(pres.R().dim() == 2);
}

TEST_CASE("serialize then parse is the identity on the corpus") {
  auto files = corpus_files();
  REQUIRE(files.size() >= 10);
  for (const auto& name : files) {
    CAPTURE(name);
    auto f = parse_file(corpus(name));
    auto text = serialize(f);
    auto g = parse(text);
    CHECK(f == g);
    CHECK(serialize(g) == text);
  }
}

TEST_CASE("input errors carry a code and a line") {
  std::string s = kSmall;
  CHECK(code_of(std::string(s).replace(s.find("field Q"), 7, "field GF(6)")) == ErrorCode::ValidationError);
  CHECK(message_of(std::string(s).replace(s.find("field Q"), 7, "field GF(6)")).starts_with("line 2 (field)"));
  CHECK(code_of(std::string(s).replace(s.find("field Q"), 7, "field R")) == ErrorCode::ParseError);

  auto bad_len = std::string(s).replace(s.find("[0 1 -1 0]"), 10, "[0 1 -1]");
  CHECK(code_of(bad_len) == ErrorCode::ValidationError);
  CHECK(message_of(bad_len) == "line 8 (relations[0]): length 3, expected 4");

  CHECK(code_of("field Q\n") == ErrorCode::ParseError);
  CHECK(message_of("pbwkit-alg 1\nfield Q\nfield Q\n").starts_with("line 3:"));
  CHECK(message_of("pbwkit-alg 1\n# comment\n\nfield Q\nalgebra ground\nmodule braided 2\n  psi [1 0; 0 1\n")
            .starts_with("line 7:"));
  CHECK(code_of("pbwkit-alg 1\nfield Q\nalgebra ground\n") == ErrorCode::ValidationError);
  CHECK(code_of("pbwkit-alg 1\nfield Q\nalgebra cyclic 2\nmodule braided 1\n  action 0 [1]\nend\n") ==
        ErrorCode::ValidationError);
  CHECK(message_of(std::string(s) + "bounds deg_max x\n").starts_with("line 10:"));

  // a unit that is not a unit is rejected at the algebra's line
  std::string bad_table =
      "pbwkit-alg 1\nfield Q\nalgebra table 2\n  unit [0 1]\n  product 0 0 [1 0]\n  product 0 1 [0 1]\n"
      "  product 1 0 [0 1]\n  product 1 1 [0 1]\nend\n"
      "module bimodule 1\n  left 0 [1]\n  left 1 [1]\n  right 0 [1]\n  right 1 [1]\nend\nrelations M\nend\n";
  CHECK(code_of(bad_table) == ErrorCode::ValidationError);
  CHECK(message_of(bad_table).starts_with("line 3 (algebra)"));

  CHECK_THROWS_AS(parse_file(corpus("no_such_file.alg")), Error);
}

TEST_CASE("bounds resolve file then command line then defaults") {
  Bounds file;
  file.deg_max = 4;
  file.seed = 7;
  Overrides cli;
  cli.seed = 9;
  cli.n_max = 3;
  auto o = resolve(file, cli);
  CHECK(o.deg_max == 4);
  CHECK(o.seed == 9);
  CHECK(o.n_max == 3);
  CHECK(o.n_sat == Options{}.n_sat);
  CHECK(o.trial_budget == Options{}.trial_budget);
}

TEST_CASE("sha256 and exit codes") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(exit_code(Status::Pass) == 0);
  CHECK(exit_code(Status::Fail) == 1);
  CHECK(exit_code(Status::Undecided) == 2);
  CHECK(error_exit_code(ErrorCode::ParseError) == 3);
  CHECK(error_exit_code(ErrorCode::NotSmashShape) == 3);
  CHECK(error_exit_code(ErrorCode::CapExceeded) == 2);
  CHECK(error_exit_code(ErrorCode::EquivarianceFailed) == 1);
}

TEST_CASE("run_command on corpus models") {
  Options opt;
  opt.deg_max = 4;
  auto sympl = build(parse_file(corpus("sympl_refl_z2_q.alg")));
  for (const auto& cmd : command_names()) {
    CAPTURE(cmd);
    CHECK(run_command(cmd, sympl, opt).overall() == Status::Pass);
  }
  auto oracle = run_command("oracle", sympl, opt);
  REQUIRE(!oracle.tables.empty());
  CHECK(oracle.tables[0].rows.size() == static_cast<std::size_t>(opt.n_max + 1));

  auto broken = build(parse_file(corpus("broken_theta.alg")));
  auto a = run_command("check-pbw-a", broken, opt);
  CHECK(a.overall() == Status::Fail);
  REQUIRE(a.find("theta_bimodule"));
  CHECK(!a.find("theta_bimodule")->witness.empty());

  auto unstable = build(parse_file(corpus("unstable_relations.alg")));
  CHECK(run_command("check-algebra", unstable, opt).overall() == Status::Fail);

  CHECK_THROWS_AS(run_command("no-such-command", sympl, opt), Error);
}

TEST_CASE("run writes a deterministic JSON report") {
  auto dir = std::filesystem::temp_directory_path() / "pbwkit_test_cli";
  std::filesystem::create_directories(dir);
  auto report = (dir / "r.json").string();
  auto input = corpus("weyl_q.alg");
  auto invoke = [&](std::vector<std::string> args) {
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::make_pair(code, out.str() + err.str());
  };
  auto [code, text] = invoke({"pbwkit", "check-pbw-b", input, "--report", report});
  CHECK(code == 0);
  CHECK(text.find("overall: pass") != std::string::npos);
  std::ifstream in(report);
  auto j = nlohmann::json::parse(in);
  CHECK(j["command"] == "check-pbw-b");
  CHECK(j["overall"] == "pass");
  CHECK(j["exit_code"] == 0);
  CHECK(j["field"] == "Q");
  CHECK(!j.contains("elapsed_ms"));

  CHECK(invoke({"pbwkit", "oracle", corpus("missing.alg")}).first == 3);
  CHECK(invoke({"pbwkit", "oracle", input, "--deg-max"}).first == 3);
  CHECK(invoke({"pbwkit"}).first == 3);
  std::filesystem::remove_all(dir);
}
