#include "giuga/cli/commands.hpp"

#include <chrono>
#include <climits>

#include "giuga/cli/checkpoint_io.hpp"
#include "giuga/congruence.hpp"
#include "giuga/conjecture.hpp"
#include "giuga/stirling.hpp"

namespace giuga::cli {

namespace {

class Stopwatch {
public:
    std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

unsigned to_unsigned(const Int& v, const std::string& what)
{
    if (v < 0 || v > UINT_MAX) throw UsageError(what + " out of range: " + v.get_str());
    return static_cast<unsigned>(v.get_ui());
}

std::uint64_t to_u64_arg(const Int& v, const std::string& what)
{
    if (!fits_u64(v)) throw UsageError(what + " out of range: " + v.get_str());
    return to_u64(v);
}

unsigned require_bound(const std::optional<unsigned>& v, unsigned fallback, unsigned minimum, const char* flag)
{
    const unsigned out = v.value_or(fallback);
    if (out < minimum) throw UsageError(std::string(flag) + " must be at least " + std::to_string(minimum));
    return out;
}

struct Tally {
    std::size_t cells = 0;
    std::size_t failures = 0;
};

void record_cell(RunReport& report, Tally& tally, Json cell, bool pass, const Int& key, const std::string& label)
{
    ++tally.cells;
    cell["pass"] = pass;
    report.results.push_back(std::move(cell));
    if (!pass) {
        ++tally.failures;
        report.counterexamples.push_back(key);
        report.plain_lines.push_back("FAIL " + label);
    }
}

void verify_theorem2(RunReport& report, Tally& tally, unsigned n_max, unsigned m_max)
{
    for (unsigned n = 2; n <= n_max; n += 2) {
        for (unsigned m = 2; m <= m_max; ++m) {
            const CongruenceTriple t = theorem2_triple(n, Int(m));
            record_cell(report, tally,
                        Json{{"n", n},
                             {"m", m},
                             {"lhs_sum", t.lhs_sum.str()},
                             {"mid_bernoulli", t.mid_bernoulli.str()},
                             {"rhs_prime_sum", t.rhs_prime_sum.str()}},
                        t.holds(), Int(m), "n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
}

void verify_theorem4(RunReport& report, Tally& tally, unsigned n_max)
{
    for (unsigned n = 2; n <= n_max; ++n) {
        const Residue delta = theorem4_delta(n);
        const Residue expected = theorem4_expected(n);
        record_cell(report, tally, Json{{"n", n}, {"delta", delta.str()}, {"expected", expected.str()}},
                    delta == expected, Int(n), "n=" + std::to_string(n));
    }
}

void verify_staudt(RunReport& report, Tally& tally, unsigned n_max)
{
    for (unsigned n = 2; n <= n_max; n += 2) {
        const StaudtCheck c = clausen_staudt_check(n);
        record_cell(report, tally,
                    Json{{"n", n},
                         {"bernoulli", bernoulli(n).str()},
                         {"denominator", c.denominator.get_str()},
                         {"predicted_denominator", c.predicted_denominator.get_str()},
                         {"sum_is_integer", c.sum_is_integer()}},
                    c.holds(), Int(n), "n=" + std::to_string(n));
    }
}

void verify_numerator(RunReport& report, Tally& tally, unsigned n_max)
{
    for (unsigned n = 2; n <= n_max; n += 2) {
        const NumeratorCongruence c = numerator_congruence_check(n);
        record_cell(report, tally,
                    Json{{"n", n}, {"modulus", c.lhs.modulus().get_str()}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}},
                    c.holds(), Int(n), "n=" + std::to_string(n));
    }
}

void verify_stirling_lemma(RunReport& report, Tally& tally, unsigned n_max)
{
    for (unsigned n = 2; n <= n_max; n += 2) {
        for (unsigned k = 2; k <= n + 1; ++k) {
            const Residue actual(t_big(n, k - 1), Int(k));
            const Residue expected = t_congruence_expected(n, k);
            record_cell(report, tally,
                        Json{{"n", n}, {"k", k}, {"t_mod_k", actual.str()}, {"expected", expected.str()}},
                        actual == expected, Int(n), "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
}

Json verdict_json(const GiugaAgohVerdict& v)
{
    return Json{{"residue", v.residue.str()},
                {"indicator", v.indicator},
                {"is_prime", v.is_prime},
                {"primality", v.primality_deterministic ? "deterministic" : "probabilistic"},
                {"classification", std::string(classification_name(v.classification))}};
}

}  // namespace

Int parse_int(const std::string& text, const std::string& what)
{
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw UsageError("malformed " + what + ": '" + text + "'");
    }
    return Int(text, 10);
}

RunReport cmd_bernoulli(const std::string& n_text, std::optional<BernoulliMethod> method)
{
    Stopwatch clock;
    const unsigned n = to_unsigned(parse_int(n_text, "n"), "n");
    RunReport report;
    report.command = "bernoulli";
    report.parameters["n"] = n;
    report.parameters["method"] = method ? std::string(method_name(*method)) : "both";

    Json record{{"n", n}};
    if (method) {
        const Rat value = bernoulli(n, *method);
        record["value"] = value.str();
        record["method"] = std::string(method_name(*method));
        report.plain_lines.push_back(value.str());
    } else {
        const Rat via_stirling = bernoulli(n, BernoulliMethod::stirling);
        const Rat via_worpitzky = bernoulli(n, BernoulliMethod::worpitzky);
        const bool agree = via_stirling == via_worpitzky;
        record["value"] = via_stirling.str();
        record["stirling"] = via_stirling.str();
        record["worpitzky"] = via_worpitzky.str();
        record["agree"] = agree;
        report.plain_lines.push_back(via_stirling.str());
        if (!agree) {
            report.counterexamples.push_back(Int(n));
            report.plain_lines.push_back("FAIL methods disagree: worpitzky gives " + via_worpitzky.str());
        }
    }
    report.results.push_back(std::move(record));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_verify(const std::string& target, const VerifyBounds& bounds)
{
    Stopwatch clock;
    RunReport report;
    report.command = "verify";
    report.parameters["target"] = target;
    Tally tally;

    if (target != "theorem2" && bounds.m_max) throw UsageError("--m-max only applies to theorem2");
    if (target == "theorem2") {
        const unsigned n_max = require_bound(bounds.n_max, 60, 2, "--n-max");
        const unsigned m_max = require_bound(bounds.m_max, 300, 2, "--m-max");
        report.parameters["n_max"] = n_max;
        report.parameters["m_max"] = m_max;
        verify_theorem2(report, tally, n_max, m_max);
    } else if (target == "theorem4") {
        const unsigned n_max = require_bound(bounds.n_max, 2000, 2, "--n-max");
        report.parameters["n_max"] = n_max;
        verify_theorem4(report, tally, n_max);
    } else if (target == "staudt") {
        const unsigned n_max = require_bound(bounds.n_max, 100, 2, "--n-max");
        report.parameters["n_max"] = n_max;
        verify_staudt(report, tally, n_max);
    } else if (target == "numerator") {
        const unsigned n_max = require_bound(bounds.n_max, 60, 2, "--n-max");
        report.parameters["n_max"] = n_max;
        verify_numerator(report, tally, n_max);
    } else if (target == "stirling-lemma") {
        const unsigned n_max = require_bound(bounds.n_max, 40, 2, "--n-max");
        report.parameters["n_max"] = n_max;
        verify_stirling_lemma(report, tally, n_max);
    } else {
        throw UsageError("unknown verify target '" + target + "'");
    }
    report.plain_lines.insert(report.plain_lines.begin(), target + ": " + std::to_string(tally.cells) + " cells, " +
                                                              std::to_string(tally.failures) + " failures");
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_scan(const ScanArgs& args)
{
    Stopwatch clock;
    const std::uint64_t from = to_u64_arg(parse_int(args.from, "--from"), "--from");
    const std::uint64_t to = to_u64_arg(parse_int(args.to, "--to"), "--to");
    if (from < 2) throw UsageError("--from must be at least 2");
    if (from > to) throw UsageError("--from must not exceed --to");
    if (args.blocks == 0) throw UsageError("--blocks must be positive");

    std::optional<ScanCheckpoint> resume;
    if (args.checkpoint) {
        resume = read_checkpoint(*args.checkpoint);
        if (resume && (resume->from != from || resume->to != to)) {
            throw UsageError("checkpoint " + args.checkpoint->string() + " covers [" + std::to_string(resume->from) +
                             ", " + std::to_string(resume->to) + "], not the requested range");
        }
    }

    ScanOptions options;
    options.blocks = args.blocks;
    options.threads = std::max(1u, args.threads);
    options.max_blocks = args.max_blocks;
    if (args.checkpoint) {
        options.on_block = [path = *args.checkpoint](const ScanCheckpoint& cp) { write_checkpoint(path, cp); };
    }
    const ScanCheckpoint final_state = scan_range(from, to, resume, options);
    if (args.checkpoint && (!resume || !(final_state == *resume))) write_checkpoint(*args.checkpoint, final_state);

    RunReport report;
    report.command = "scan";
    report.parameters["from"] = std::to_string(from);
    report.parameters["to"] = std::to_string(to);
    report.results.push_back(Json{{"next_unscanned", std::to_string(final_state.next_unscanned)},
                                  {"scanned_count", std::to_string(final_state.scanned_count)},
                                  {"complete", final_state.complete()}});
    report.counterexamples = final_state.counterexamples;
    report.plain_lines.push_back("scanned " + std::to_string(final_state.scanned_count) + " integers in [" +
                                 std::to_string(from) + ", " + std::to_string(to) + "], " +
                                 std::to_string(final_state.counterexamples.size()) + " counterexamples");
    if (!final_state.complete()) {
        report.plain_lines.push_back("incomplete: resume at " + std::to_string(final_state.next_unscanned));
    }
    for (const Int& c : final_state.counterexamples) report.plain_lines.push_back("COUNTEREXAMPLE " + c.get_str());
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_find(const std::string& target, const std::string& max_text)
{
    Stopwatch clock;
    const std::uint64_t max = to_u64_arg(parse_int(max_text, "--max"), "--max");
    if (max < 2) throw UsageError("--max must be at least 2");
    std::vector<Int> found;
    if (target == "giuga") {
        found = find_giuga_numbers(max);
    } else if (target == "carmichael") {
        found = find_carmichael_numbers(max);
    } else if (target == "butske-plus") {
        found = butske_search(ButskeSign::plus, max);
    } else if (target == "butske-minus") {
        found = butske_search(ButskeSign::minus, max);
    } else {
        throw UsageError("unknown find target '" + target + "'");
    }
    RunReport report;
    report.command = "find";
    report.parameters["target"] = target;
    report.parameters["max"] = std::to_string(max);
    report.results = int_list(found);
    for (const Int& v : found) report.plain_lines.push_back(v.get_str());
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_check(const std::string& n_text)
{
    Stopwatch clock;
    const Int n = parse_int(n_text, "n");
    if (n < 2) throw UsageError("n must be at least 2");
    const CandidateReport c = candidate_report(n);
    const GiugaAgohVerdict v = classify(n);

    Json primes = Json::array();
    for (const PrimeRecord& p : c.primes) {
        primes.push_back(Json{{"p", p.p.get_str()},
                              {"p_divides_n_over_p_minus_1", p.p_divides_cofactor_minus_one},
                              {"p_minus_1_divides_n_minus_1", p.p_minus_one_divides_n_minus_one},
                              {"p_minus_1_divides_n_over_p_minus_1", p.p_minus_one_divides_cofactor_minus_one}});
    }
    Json record{{"n", n.get_str()},
                {"composite", c.composite},
                {"odd", c.odd},
                {"squarefree", c.squarefree},
                {"prime_factor_count", c.prime_factor_count},
                {"primes", primes},
                {"giuga_number", c.is_giuga_number},
                {"carmichael", c.is_carmichael},
                {"reciprocal_sum_exceeds_one", c.reciprocal_sum_exceeds_one},
                {"at_least_nine_prime_factors", c.at_least_nine_prime_factors},
                {"no_prime_congruent_one_mod_another", c.no_prime_congruent_one_mod_another},
                {"verdict", std::string(classification_name(v.classification))},
                {"giuga_agoh", verdict_json(v)}};

    RunReport report;
    report.command = "check";
    report.parameters["n"] = n.get_str();
    for (const auto& [key, value] : record.items()) {
        if (key == "primes" || key == "giuga_agoh") continue;
        report.plain_lines.push_back(key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()));
    }
    report.plain_lines.push_back("giuga_agoh_residue: " + v.residue.str());
    report.results.push_back(std::move(record));
    if (v.classification == Classification::counterexample) report.counterexamples.push_back(n);
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

}  // namespace giuga::cli
