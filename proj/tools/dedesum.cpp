// dedesum: command-line front end for the generalized Dedekind sum library.
//
//   dedesum chars --modulus q [--primitive]
//   dedesum eval --chi1 L1 --chi2 L2 (--matrix a,b,c,d | --bottom c,d)
//   dedesum verify --suite NAME|all [--max-level 36] [--samples n] [--seed s] [--tolerance t]
//   dedesum fixtures (--write PATH | --check PATH)
//
// Records go to stdout as JSON lines; the last line is the run report. A human summary
// goes to stderr. Exit status is 0 iff the report lists no failures.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dedesum/characters.hpp"
#include "dedesum/dedekind.hpp"
#include "dedesum/fixtures.hpp"
#include "dedesum/json.hpp"
#include "dedesum/modgroup.hpp"
#include "dedesum/verify.hpp"

namespace {

using dedesum::CaseFailure;
using dedesum::Json;

class RunReport {
public:
    RunReport(std::string command, Json inputs)
        : command_(std::move(command)), inputs_(std::move(inputs)), start_(std::chrono::steady_clock::now())
    {
    }

    void result(const Json& record)
    {
        std::cout << record.dump() << '\n';
        ++results_;
    }

    void failure(const CaseFailure& f)
    {
        failures_.push_back(Json{{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}, {"delta", f.delta}});
    }

    int finish()
    {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
        const Json report{{"command", command_},
                          {"inputs", inputs_},
                          {"results", results_},
                          {"failures", failures_},
                          {"elapsed_ms", elapsed.count()},
                          {"status", failures_.empty() ? "ok" : "failed"}};
        std::cout << report.dump() << std::endl;
        std::cerr << command_ << ": " << results_ << " record(s), " << failures_.size() << " failure(s), "
                  << elapsed.count() << " ms\n";
        return failures_.empty() ? 0 : 1;
    }

private:
    std::string command_;
    Json inputs_;
    std::size_t results_ = 0;
    Json failures_ = Json::array();
    std::chrono::steady_clock::time_point start_;
};

std::vector<mpz_class> parse_integers(const std::string& text, std::size_t expected, const char* what)
{
    std::vector<mpz_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        mpz_class z;
        if (item.empty() || z.set_str(item, 10) != 0)
            throw std::invalid_argument(std::string("malformed ") + what + " '" + text + "'");
        out.push_back(z);
    }
    if (out.size() != expected)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(expected) + " comma-separated integers");
    return out;
}

int cmd_chars(long modulus, bool primitive)
{
    RunReport report("chars", Json{{"modulus", modulus}, {"primitive", primitive}});
    for (const auto& chi : dedesum::enumerate_characters(modulus, primitive))
        report.result(dedesum::to_json(chi));
    return report.finish();
}

int cmd_eval(const std::string& chi1, const std::string& chi2, const std::string& matrix, const std::string& bottom)
{
    RunReport report("eval", Json{{"chi1", chi1}, {"chi2", chi2}, {"matrix", matrix}, {"bottom", bottom}});
    try {
        const auto pair = dedesum::CharacterPair::from_labels(chi1, chi2);
        const dedesum::GammaMatrix g = [&] {
            if (!matrix.empty()) {
                const auto e = parse_integers(matrix, 4, "matrix");
                return dedesum::GammaMatrix(e[0], e[1], e[2], e[3], pair.level());
            }
            const auto e = parse_integers(bottom, 2, "bottom row");
            return dedesum::complete_bottom_row(e[0], e[1], pair.level());
        }();
        const auto value = dedesum::dedekind_sum_value(pair, g);
        const auto z = value.embed();
        report.result(Json{{"pair", Json::array({pair.chi1().label(), pair.chi2().label()})},
                           {"matrix", dedesum::to_json(g)},
                           {"value", dedesum::to_json(value)},
                           {"approx", Json::array({z.real(), z.imag()})},
                           {"display", value.to_string()}});
    } catch (const std::exception& e) {
        report.failure({"input", "admissible pair and matrix in Gamma_0(q1 q2)", e.what(), 0.0});
    }
    return report.finish();
}

int cmd_verify(const std::string& suite, const dedesum::CampaignConfig& cfg)
{
    RunReport report("verify", Json{{"suite", suite},
                                    {"max_level", cfg.max_level},
                                    {"samples", cfg.samples},
                                    {"seed", cfg.seed},
                                    {"tolerance", cfg.tolerance},
                                    {"threads", cfg.threads}});
    std::vector<std::string_view> names;
    if (suite == "all")
        names = dedesum::suite_names();
    else
        names.push_back(suite);
    for (auto name : names) {
        const auto r = dedesum::run_suite(name, cfg);
        report.result(Json{{"suite", r.suite},
                           {"cases", r.cases},
                           {"failures", r.failures.size()},
                           {"tolerance", r.tolerance},
                           {"worst_delta", r.worst_delta}});
        std::cerr << "  " << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
        for (const auto& f : r.failures)
            report.failure({r.suite + ": " + f.case_id, f.expected, f.actual, f.delta});
    }
    return report.finish();
}

int cmd_fixtures(const std::string& write_path, const std::string& check_path, unsigned threads)
{
    RunReport report("fixtures", Json{{"write", write_path}, {"check", check_path}});
    if (!write_path.empty()) {
        const Json fixtures = dedesum::generate_fixtures(threads);
        std::ofstream out(write_path);
        if (!out)
            throw std::runtime_error("cannot open '" + write_path + "' for writing");
        out << fixtures.dump(1) << '\n';
        report.result(Json{{"written", write_path}, {"entries", fixtures.size()}});
    } else {
        std::ifstream in(check_path);
        if (!in)
            throw std::runtime_error("cannot open '" + check_path + "'");
        const Json fixtures = Json::parse(in);
        const auto failures = dedesum::check_fixtures(fixtures, threads);
        for (const auto& f : failures)
            report.failure(f);
        report.result(Json{{"checked", check_path}, {"entries", fixtures.size()}, {"mismatches", failures.size()}});
    }
    return report.finish();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact generalized Dedekind sums for newform Eisenstein series"};
    app.require_subcommand(1);

    long modulus = 0;
    bool primitive = false;
    auto* chars = app.add_subcommand("chars", "List Dirichlet characters modulo q");
    chars->add_option("--modulus", modulus, "Modulus q")->required()->check(CLI::Range(1L, long{dedesum::max_character_modulus}));
    chars->add_flag("--primitive", primitive, "Only characters of conductor q");

    std::string chi1, chi2, matrix, bottom;
    auto* eval = app.add_subcommand("eval", "Evaluate S_{chi1,chi2}(gamma) exactly");
    eval->add_option("--chi1", chi1, "Label q1:e1,e2,...")->required();
    eval->add_option("--chi2", chi2, "Label q2:e1,e2,...")->required();
    auto* matrix_opt = eval->add_option("--matrix", matrix, "a,b,c,d");
    auto* bottom_opt = eval->add_option("--bottom", bottom, "c,d (canonical lift)");
    matrix_opt->excludes(bottom_opt);
    eval->callback([&] {
        if (matrix.empty() && bottom.empty())
            throw CLI::ValidationError("eval", "one of --matrix or --bottom is required");
    });

    std::string suite;
    dedesum::CampaignConfig cfg;
    cfg.threads = dedesum::default_thread_count();
    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    std::vector<std::string> suites{"all"};
    for (auto n : dedesum::suite_names())
        suites.emplace_back(n);
    verify->add_option("--suite", suite, "Campaign name or 'all'")->required()->check(CLI::IsMember(suites));
    verify->add_option("--max-level", cfg.max_level, "Largest level q1 q2")->check(CLI::Range(9L, 1000L));
    verify->add_option("--samples", cfg.samples, "Samples per pair (0: suite default)")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "Campaign seed");
    verify->add_option("--tolerance", cfg.tolerance, "Numeric tolerance (0: suite default)")->check(CLI::NonNegativeNumber);
    verify->add_option("--threads", cfg.threads, "Worker count (default: DEDESUM_THREADS or hardware)")->check(CLI::PositiveNumber);

    std::string write_path, check_path;
    unsigned fixture_threads = dedesum::default_thread_count();
    auto* fixtures = app.add_subcommand("fixtures", "Write or re-check frozen Dedekind-sum fixtures");
    auto* write_opt = fixtures->add_option("--write", write_path, "Output path");
    auto* check_opt = fixtures->add_option("--check", check_path, "Fixture file to verify");
    write_opt->excludes(check_opt);
    fixtures->add_option("--threads", fixture_threads, "Worker count")->check(CLI::PositiveNumber);
    fixtures->callback([&] {
        if (write_path.empty() && check_path.empty())
            throw CLI::ValidationError("fixtures", "one of --write or --check is required");
    });

    CLI11_PARSE(app, argc, argv);

    try {
        if (*chars)
            return cmd_chars(modulus, primitive);
        if (*eval)
            return cmd_eval(chi1, chi2, matrix, bottom);
        if (*verify)
            return cmd_verify(suite, cfg);
        if (*fixtures)
            return cmd_fixtures(write_path, check_path, fixture_threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
