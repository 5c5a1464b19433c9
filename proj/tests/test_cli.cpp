#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "test_support.hpp"

using testsupport::run_cli;

namespace {

std::string temp_path(const char* name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("verify wright emits the witness violation and is byte-deterministic") {
  const auto first = run_cli("verify --kind wright --n 3 --seed 42");
  CHECK(first.exit_code == 0);
  const auto second = run_cli("verify --kind wright --n 3 --seed 42");
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);

  const nlohmann::json document = nlohmann::json::parse(first.output);
  CHECK(document.at("verdict") == "violated");
  CHECK(document.at("violations").at(0).at("lhs") == "-24");
  CHECK(document.at("violations").at(0).at("index") == 0);

  SUBCASE("the witness value scales as -(n+1)!") {
    const auto n4 = run_cli("verify --kind wright --n 4 --seed 1 --samples 10");
    CHECK(n4.exit_code == 0);
    CHECK(nlohmann::json::parse(n4.output).at("violations").at(0).at("lhs") ==
          "-120");
  }
}

TEST_CASE("verify jensen certifies with zero violations") {
  const auto result = run_cli("verify --kind jensen --n 4 --samples 60 --seed 9");
  CHECK(result.exit_code == 0);
  const nlohmann::json document = nlohmann::json::parse(result.output);
  CHECK(document.at("verdict") == "certified-on-samples");
  CHECK(document.at("violations").empty());
  CHECK(document.at("forced_samples") == 0);
}

TEST_CASE("verify strong-wright reports the exact deficit") {
  const auto result =
      run_cli("verify --kind strong-wright --n 2 --c 1/3 --samples 30 --seed 4");
  CHECK(result.exit_code == 0);
  const nlohmann::json document = nlohmann::json::parse(result.output);
  CHECK(document.at("c") == "1/3");
  CHECK(document.at("violations").at(0).at("deficit") == "6");
}

TEST_CASE("thread fan-out does not change the canonical report") {
  const auto serial = run_cli("verify --kind wright --n 2 --seed 31 --samples 40");
  const auto parallel =
      run_cli("verify --kind wright --n 2 --seed 31 --samples 40 --threads 4");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.output == parallel.output);
}

TEST_CASE("configuration errors exit with status 1 and one diagnostic line") {
  for (const char* args : {
           "verify --kind wright",                        // missing --n
           "verify --kind diagonal --n 2",                // unknown kind
           "verify --kind strong-jensen --n 2",           // missing --c
           "verify --kind strong-jensen --n 2 --c 0",     // zero modulus
           "verify --kind strong-jensen --n 2 --c -1/3",  // negative modulus
           "verify --kind jensen --n 2 --c 1/3",          // modulus on a plain kind
           "verify --kind wright --n 0",                  // order below 1
           "verify --kind wright --n 2 --d 12",           // non-squarefree radicand
           "verify --kind wright --n 2 --samples 0",      // no samples
           "verify --kind wright --n 2 --alpha-one 1",    // missing --alpha-root
           "identities --samples 0",
           "nonsense",
       }) {
    const auto result = run_cli(args, /*merge_stderr=*/true);
    CAPTURE(args);
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("error:") != std::string::npos);
  }
}

TEST_CASE("eval computes exact values") {
  CHECK(run_cli("eval alpha \"-1 + 1*sqrt(2)\"").output == "-1\n");
  CHECK(run_cli("eval beta \"-1 + 1*sqrt(2)\"").output == "1*sqrt(2)\n");
  CHECK(run_cli("eval delta --f \"pow 3\" --steps 1,2,3 --x 0").output == "36\n");
  CHECK(run_cli("eval closed-form-wright --n 2 --steps witness").output ==
        "-6\n");
  CHECK(run_cli("eval closed-form-jensen --n 2 --h 1").output == "6\n");
  CHECK(run_cli("eval counterexample --n 1 --x \"1 + 1*sqrt(2)\"").output == "3\n");
  CHECK(run_cli("eval delta --f \"counterexample 3\" --steps witness --n 3 "
                "--x \"5/7 - 2*sqrt(2)\"")
            .output == "-24\n");

  SUBCASE("parse errors exit 1") {
    CHECK(run_cli("eval alpha \"1 + sqrt(3)\"", true).exit_code == 1);
    CHECK(run_cli("eval delta --f \"cube 3\" --steps 1 --x 0", true).exit_code == 1);
    CHECK(run_cli("eval closed-form-wright --n 2 --steps 1,2", true).exit_code == 1);
    CHECK(run_cli("eval frobnicate", true).exit_code == 1);
  }
}

TEST_CASE("identities command is deterministic and exits 0") {
  const auto first = run_cli("identities --n-max 3 --samples 15 --seed 7");
  CHECK(first.exit_code == 0);
  const auto second = run_cli("identities --n-max 3 --samples 15 --seed 7");
  CHECK(first.output == second.output);
  const nlohmann::json document = nlohmann::json::parse(first.output);
  CHECK(document.at("all_passed") == true);
  CHECK(document.at("suites").size() == 4);
}

TEST_CASE("reports round-trip through recheck") {
  const std::string path = temp_path("report.json");
  const auto emit = run_cli("verify --kind wright --n 3 --seed 42 --samples 20 -o " +
                            path);
  REQUIRE(emit.exit_code == 0);

  const auto ok = run_cli("recheck " + path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("recheck passed") != std::string::npos);

  SUBCASE("tampering is detected with exit 2") {
    nlohmann::json document;
    {
      std::ifstream in(path);
      in >> document;
    }
    document["violations"][0]["lhs"] = "-25";
    {
      std::ofstream out(path);
      out << document.dump(2) << "\n";
    }
    const auto bad = run_cli("recheck " + path, true);
    CHECK(bad.exit_code == 2);
  }

  SUBCASE("meta sections are ignored by recheck") {
    const std::string meta_path = temp_path("meta.json");
    const auto with_meta = run_cli(
        "verify --kind wright --n 3 --seed 42 --samples 20 --with-meta -o " +
        meta_path);
    REQUIRE(with_meta.exit_code == 0);
    CHECK(run_cli("recheck " + meta_path).exit_code == 0);
    std::remove(meta_path.c_str());
  }

  std::remove(path.c_str());
}

TEST_CASE("recheck of an identities report") {
  const std::string path = temp_path("identities.json");
  REQUIRE(run_cli("identities --n-max 2 --samples 10 --seed 3 -o " + path)
              .exit_code == 0);
  CHECK(run_cli("recheck " + path).exit_code == 0);

  SUBCASE("unreadable or malformed input exits 1") {
    CHECK(run_cli("recheck does_not_exist.json", true).exit_code == 1);
    const std::string garbage = temp_path("garbage.json");
    std::ofstream(garbage) << "not json";
    CHECK(run_cli("recheck " + garbage, true).exit_code == 1);
    std::remove(garbage.c_str());
  }

  std::remove(path.c_str());
}

TEST_CASE("text format and custom pairs") {
  const auto text =
      run_cli("verify --kind wright --n 2 --seed 5 --samples 10 --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("verdict: violated") != std::string::npos);
  CHECK(text.output.find("lhs = -6") != std::string::npos);

  // custom additive pair: no certified expectation, so exit is 0 either way
  const auto pair = run_cli(
      "verify --kind jensen --n 2 --seed 5 --samples 10 "
      "--alpha-one 1/2 --alpha-root \"1/2*sqrt(2)\"");
  CHECK(pair.exit_code == 0);
  const nlohmann::json document = nlohmann::json::parse(pair.output);
  CHECK(document.at("function").at("family") == "pair-counterexample");
}

TEST_CASE("config file mirrors the flags, flags take precedence") {
  const std::string path = temp_path("config.toml");
  std::ofstream(path) << "[verify]\nkind = \"wright\"\nn = 3\nseed = 42\n"
                         "samples = 20\n";
  const auto from_config = run_cli("--config " + path + " verify");
  const auto from_flags =
      run_cli("verify --kind wright --n 3 --seed 42 --samples 20");
  CHECK(from_config.exit_code == 0);
  CHECK(from_config.output == from_flags.output);

  const auto overridden = run_cli("--config " + path + " verify --seed 11");
  CHECK(overridden.exit_code == 0);
  CHECK(nlohmann::json::parse(overridden.output).at("seed") == 11);
  std::remove(path.c_str());
}

TEST_CASE("version flag") {
  const auto result = run_cli("--version");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("0.1.0") != std::string::npos);
}
