// Acceptance campaign: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "dedesum/oracle.hpp"
#include "dedesum/verify.hpp"

namespace {

using namespace dedesum;

constexpr double time_limit_seconds = 120.0;

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome from_reports(const std::vector<SuiteReport>& reports)
{
    Outcome out{true, ""};
    for (const auto& r : reports) {
        if (!out.detail.empty())
            out.detail += "; ";
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s: %lld cases, %zu failures", r.suite.c_str(),
                      static_cast<long long>(r.cases), r.failures.size());
        out.detail += buf;
        if (r.tolerance > 0) {
            std::snprintf(buf, sizeof buf, ", worst %.2e <= %.0e", r.worst_delta, r.tolerance);
            out.detail += buf;
        }
        if (!r.failures.empty())
            out.detail += ", first " + r.failures.front().case_id;
        out.passed = out.passed && r.passed() && r.cases > 0;
    }
    return out;
}

CampaignConfig criteria_config()
{
    CampaignConfig cfg;
    cfg.max_level = 36;
    cfg.seed = 1;
    cfg.threads = 1;
    return cfg;
}

Outcome reciprocity_criterion()
{
    Outcome out = from_reports({verify_reciprocity(criteria_config())});
    int even = 0, odd = 0;
    for (const auto& p : admissible_pairs(36))
        ++(p.both_even() ? even : odd);
    out.detail += "; " + std::to_string(even) + " even/even and " + std::to_string(odd) + " odd/odd pairs";
    out.passed = out.passed && even > 0 && odd > 0;
    return out;
}

Outcome l_value_criterion()
{
    Outcome out = from_reports({verify_l_values(criteria_config(), 50, 100000)});
    const double l4 = l_one_series(DirichletCharacter(4, {1}), 100000).real();
    const double delta = std::abs(l4 - std::numbers::pi / 4);
    char buf[96];
    std::snprintf(buf, sizeof buf, "; |L(1,chi_4) - pi/4| = %.2e", delta);
    out.detail += buf;
    out.passed = out.passed && delta <= 1e-4;
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact S vs Fourier oracle (25 per pair, |c| <= 30N, M = 6|c|, 1e-8)",
         [] { return from_reports({verify_oracle(criteria_config())}); }},
        {"cocycle law, exact (200 per pair)", [] { return from_reports({verify_cocycle(criteria_config())}); }},
        {"reciprocity, exact (200 per pair)", reciprocity_criterion},
        {"Fricke value vs numeric cusp limit (1e-9; even pairs exactly 0)",
         [] { return from_reports({verify_fricke(criteria_config())}); }},
        {"L(1,chi) series vs closed form, odd chi, q <= 50 (1e-4)", l_value_criterion},
        {"automorphy of E* at s = 1, z = i/N (10 per pair, 1e-9)",
         [] { return from_reports({verify_automorphy(criteria_config())}); }},
        {"Hecke multiplicativity c_mn = c_m c_n, mn <= 500",
         [] { return from_reports({verify_hecke(criteria_config(), 500)}); }},
        {"Eichler-Shimura coefficient identity, n <= 500",
         [] { return from_reports({verify_eichler_shimura(criteria_config(), 500)}); }},
        {"structural identities on the criterion 1 campaign",
         [] { return from_reports({verify_structure(criteria_config()), verify_bottom_row(criteria_config())}); }},
        {"twisted character sums vanish, c <= 36",
         [] { return from_reports({verify_character_sums(criteria_config(), 36)}); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= time_limit_seconds;
        const bool ok = out.passed && in_time;
        failed += ok ? 0 : 1;
        std::printf("%s criterion %zu: %s [%s; %.1f s%s]\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    out.detail.c_str(), seconds, in_time ? "" : ", over time limit");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
