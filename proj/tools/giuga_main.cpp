// giuga: exact checks of the power-sum/Bernoulli congruences and scans for
// composite solutions of the Giuga-Agoh criterion.
//
// Exit codes: 0 nothing anomalous, 1 usage or I/O error, 2 a check failed.

#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include "CLI11.hpp"

#include "giuga/cli/commands.hpp"

using namespace giuga;
using namespace giuga::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Exact Bernoulli/Stirling congruence checks and Giuga-Agoh scans"};
    app.require_subcommand(1);
    app.fallthrough();

    Format format = Format::plain;
    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}};
    app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for scans (0 = hardware concurrency)");

    auto* bern = app.add_subcommand("bernoulli", "Print B_n as num/den");
    std::string bern_n;
    std::string bern_method;
    bern->add_option("n", bern_n, "Index n >= 0")->required();
    bern->add_option("--method", bern_method, "stirling or worpitzky (default: run both and compare)")
        ->check(CLI::IsMember({"stirling", "worpitzky"}));

    auto* verify = app.add_subcommand("verify", "Sweep a congruence over a grid");
    std::string verify_target;
    VerifyBounds bounds;
    verify->add_option("target", verify_target, "theorem2 | theorem4 | staudt | numerator | stirling-lemma")
        ->required()
        ->check(CLI::IsMember({"theorem2", "theorem4", "staudt", "numerator", "stirling-lemma"}));
    verify->add_option("--n-max", bounds.n_max, "Largest n");
    verify->add_option("--m-max", bounds.m_max, "Largest modulus m (theorem2)");

    auto* scan = app.add_subcommand("scan", "Classify every n in [from, to] under the Giuga-Agoh criterion");
    ScanArgs scan_args;
    std::string checkpoint;
    scan->add_option("--from", scan_args.from, "First n (>= 2)")->required();
    scan->add_option("--to", scan_args.to, "Last n")->required();
    scan->add_option("--checkpoint", checkpoint, "Checkpoint file, read if present and rewritten after each block");
    scan->add_option("--blocks", scan_args.blocks, "Number of blocks the range is split into");
    scan->add_option("--max-blocks", scan_args.max_blocks, "Stop after this many blocks (checkpoint is kept)");

    auto* find = app.add_subcommand("find", "List all special numbers up to --max");
    std::string find_target;
    std::string find_max;
    find->add_option("target", find_target, "giuga | carmichael | butske-plus | butske-minus")
        ->required()
        ->check(CLI::IsMember({"giuga", "carmichael", "butske-plus", "butske-minus"}));
    find->add_option("--max", find_max, "Upper bound")->required();

    auto* check = app.add_subcommand("check", "Report every structural condition for one n");
    std::string check_n;
    check->add_option("n", check_n, "Integer n >= 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunReport report;
        if (*bern) {
            std::optional<BernoulliMethod> method;
            if (!bern_method.empty()) method = parse_method(bern_method);
            report = cmd_bernoulli(bern_n, method);
        } else if (*verify) {
            report = cmd_verify(verify_target, bounds);
        } else if (*scan) {
            if (!checkpoint.empty()) scan_args.checkpoint = checkpoint;
            scan_args.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
            report = cmd_scan(scan_args);
        } else if (*find) {
            report = cmd_find(find_target, find_max);
        } else if (*check) {
            report = cmd_check(check_n);
        }
        std::cout << render(report, format);
        if (report.exit_code() != kExitOk) std::cerr << "giuga: " << report.counterexamples.size() << " failed checks\n";
        return report.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "giuga: " << e.what() << '\n';
        return kExitUsage;
    }
}
