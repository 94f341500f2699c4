#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "giuga/cli/checkpoint_io.hpp"
#include "giuga/cli/commands.hpp"

using namespace giuga;
using namespace giuga::cli;

namespace {

std::filesystem::path temp_path(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "giuga_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::filesystem::remove(path);
    return path;
}

}  // namespace

TEST_CASE("parse_int")
{
    CHECK(parse_int("123", "n") == 123);
    CHECK(parse_int("-4", "n") == -4);
    CHECK(parse_int("340282366920938463463374607431768211457", "n") == (Int(1) << 128) + 1);
    CHECK_THROWS_AS(parse_int("", "n"), UsageError);
    CHECK_THROWS_AS(parse_int("12a", "n"), UsageError);
    CHECK_THROWS_AS(parse_int("-", "n"), UsageError);
    CHECK_THROWS_AS(parse_int(" 1", "n"), UsageError);
}

TEST_CASE("bernoulli command")
{
    const RunReport both = cmd_bernoulli("12", std::nullopt);
    CHECK(both.exit_code() == kExitOk);
    CHECK(both.plain_lines.front() == "-691/2730");
    CHECK(both.results[0]["agree"] == true);
    CHECK(render(both, Format::plain) == "-691/2730\n");

    const RunReport one = cmd_bernoulli("4", BernoulliMethod::worpitzky);
    CHECK(one.results[0]["value"] == "-1/30");
    CHECK(one.to_json(false).dump() ==
          R"({"command":"bernoulli","parameters":{"n":4,"method":"worpitzky"},)"
          R"("results":[{"n":4,"value":"-1/30","method":"worpitzky"}],"counterexamples":[]})");
    CHECK(cmd_bernoulli("1", std::nullopt).plain_lines.front() == "-1/2");
    CHECK_THROWS_AS(cmd_bernoulli("-1", std::nullopt), UsageError);
    CHECK_THROWS_AS(cmd_bernoulli("x", std::nullopt), UsageError);
}

TEST_CASE("verify command")
{
    const RunReport t2 = cmd_verify("theorem2", VerifyBounds{10, 20});
    CHECK(t2.exit_code() == kExitOk);
    CHECK(t2.results.size() == 5 * 19);
    CHECK(t2.plain_lines.front() == "theorem2: 95 cells, 0 failures");
    CHECK(t2.parameters["n_max"] == 10);

    CHECK(cmd_verify("theorem4", VerifyBounds{100, {}}).results.size() == 99);
    CHECK(cmd_verify("staudt", VerifyBounds{}).results.size() == 50);
    CHECK(cmd_verify("numerator", VerifyBounds{12, {}}).results.back()["lhs"] == "2039");
    CHECK(cmd_verify("stirling-lemma", VerifyBounds{6, {}}).exit_code() == kExitOk);

    CHECK_THROWS_AS(cmd_verify("theorem5", VerifyBounds{}), UsageError);
    CHECK_THROWS_AS(cmd_verify("theorem4", VerifyBounds{{}, 10}), UsageError);
    CHECK_THROWS_AS(cmd_verify("theorem2", VerifyBounds{1, {}}), UsageError);
}

TEST_CASE("find and check commands")
{
    const RunReport giuga = cmd_find("giuga", "10000");
    CHECK(giuga.results == Json::array({"30", "858", "1722"}));
    CHECK(render(giuga, Format::plain) == "30\n858\n1722\n");
    CHECK(cmd_find("carmichael", "2000").results == Json::array({"561", "1105", "1729"}));
    CHECK_THROWS_AS(cmd_find("perfect", "100"), UsageError);
    CHECK_THROWS_AS(cmd_find("giuga", "1"), UsageError);

    const RunReport c = cmd_check("561");
    CHECK(c.exit_code() == kExitOk);
    const Json& r = c.results[0];
    CHECK(r["carmichael"] == true);
    CHECK(r["giuga_number"] == false);
    CHECK(r["verdict"] == "composite_consistent");
    CHECK(r["giuga_agoh"]["residue"] == "271");
    CHECK(r["primes"].size() == 3);

    CHECK(cmd_check("1000000007").results[0]["verdict"] == "prime_consistent");
    CHECK_THROWS_AS(cmd_check("1"), UsageError);
}

TEST_CASE("json rendering is a single line with fixed key order")
{
    RunReport r;
    r.command = "x";
    r.elapsed_ms = 7;
    r.counterexamples = {Int(5)};
    CHECK(r.exit_code() == kExitFailure);
    CHECK(render(r, Format::json) ==
          "{\"command\":\"x\",\"parameters\":{},\"results\":[],\"counterexamples\":[\"5\"],\"elapsed_ms\":7}\n");
}

TEST_CASE("checkpoint json round trip")
{
    const ScanCheckpoint cp{2, 1000, 500, {}, 498};
    CHECK(checkpoint_from_json(checkpoint_to_json(cp)) == cp);
    CHECK(checkpoint_to_json(cp)["next_unscanned"] == "500");

    const Json numeric{{"from", 2}, {"to", 1000}, {"next_unscanned", 500}, {"counterexamples", Json::array()},
                       {"scanned_count", 498}};
    CHECK(checkpoint_from_json(numeric) == cp);

    Json missing = numeric;
    missing.erase("to");
    CHECK_THROWS_AS(checkpoint_from_json(missing), std::invalid_argument);
    Json inconsistent = numeric;
    inconsistent["scanned_count"] = 3;
    CHECK_THROWS_AS(checkpoint_from_json(inconsistent), std::invalid_argument);
    Json negative = numeric;
    negative["from"] = -2;
    CHECK_THROWS_AS(checkpoint_from_json(negative), std::invalid_argument);
    Json garbage = numeric;
    garbage["from"] = "two";
    CHECK_THROWS_AS(checkpoint_from_json(garbage), std::invalid_argument);
}

TEST_CASE("checkpoint files")
{
    const auto path = temp_path("roundtrip.json");
    CHECK_FALSE(read_checkpoint(path).has_value());
    const ScanCheckpoint cp{2, 1000, 500, {}, 498};
    write_checkpoint(path, cp);
    CHECK(read_checkpoint(path) == cp);
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));

    const auto corrupt = temp_path("corrupt.json");
    std::ofstream(corrupt) << "{\"from\": ";
    CHECK_THROWS_AS(read_checkpoint(corrupt), std::runtime_error);
}

TEST_CASE("scan command resumes from its checkpoint")
{
    const auto path = temp_path("scan.json");
    ScanArgs args{"2", "5000", path, 8, 2, 3u};
    const RunReport first = cmd_scan(args);
    CHECK(first.results[0]["complete"] == false);
    const ScanCheckpoint saved = *read_checkpoint(path);
    CHECK_FALSE(saved.complete());

    args.max_blocks.reset();
    const RunReport resumed = cmd_scan(args);
    const RunReport fresh = cmd_scan(ScanArgs{"2", "5000", std::nullopt, 1, 1, {}});
    CHECK(resumed.to_json(false) == fresh.to_json(false));
    CHECK(read_checkpoint(path)->complete());

    CHECK_THROWS_AS(cmd_scan(ScanArgs{"2", "4000", path, 1, 1, {}}), UsageError);
    CHECK_THROWS_AS(cmd_scan(ScanArgs{"10", "5", std::nullopt, 1, 1, {}}), UsageError);
    CHECK_THROWS_AS(cmd_scan(ScanArgs{"1", "5", std::nullopt, 1, 1, {}}), UsageError);
    CHECK_THROWS_AS(cmd_scan(ScanArgs{"2", "5", std::nullopt, 0, 1, {}}), UsageError);
}
