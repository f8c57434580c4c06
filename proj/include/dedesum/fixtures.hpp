#ifndef DEDESUM_FIXTURES_HPP_INCLUDED
#define DEDESUM_FIXTURES_HPP_INCLUDED

// Frozen Dedekind-sum fixtures: an array of
//   {"pair": [label1, label2], "matrix": {...}, "value": {...}, "approx": [re, im]}

#include <cmath>
#include <string>
#include <vector>

#include "dedesum/dedekind.hpp"
#include "dedesum/json.hpp"
#include "dedesum/verify.hpp"

namespace dedesum {

inline constexpr double fixture_approx_tolerance = 1e-10;

inline Json fixture_entry(const CharacterPair& pair, const GammaMatrix& g)
{
    const Cyclotomic value = dedekind_sum_value(pair, g);
    const auto z = value.embed();
    return Json{{"pair", Json::array({pair.chi1().label(), pair.chi2().label()})},
                {"matrix", to_json(g)},
                {"value", to_json(value)},
                {"approx", Json::array({z.real(), z.imag()})}};
}

/// Deterministic fixture set: a few hand-picked matrices plus three seeded samples for
/// every admissible pair of level <= max_level.
inline Json generate_fixtures(unsigned threads = 1, Int max_level = 20, std::uint64_t seed = 2024)
{
    struct Case {
        CharacterPair pair;
        GammaMatrix g;
    };
    std::vector<Case> cases;
    const auto chi3 = CharacterPair::from_labels("3:1", "3:1");
    cases.push_back({chi3, GammaMatrix::identity(9)});
    cases.push_back({chi3, make_gamma(1, 0, 9, 1, 9)});
    cases.push_back({chi3, make_gamma(5, 1, 9, 2, 9)});
    cases.push_back({chi3, complete_bottom_row(18, 5, 9)});
    const auto pairs = admissible_pairs(max_level);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t s = 0; s < 3; ++s)
            cases.push_back({pairs[p], random_gamma0(pairs[p].level(), 5 * pairs[p].level(), case_seed(seed, p, s, 7))});
    auto entries = parallel_map<Json>(cases.size(), threads,
                                      [&](std::size_t i) { return fixture_entry(cases[i].pair, cases[i].g); });
    Json out = Json::array();
    for (auto& e : entries)
        out.push_back(std::move(e));
    return out;
}

/// Recomputes every entry: exact values must serialize identically, approximations agree within 1e-10.
inline std::vector<CaseFailure> check_fixtures(const Json& fixtures, unsigned threads = 1)
{
    if (!fixtures.is_array())
        throw std::invalid_argument("fixture file must hold a JSON array");
    auto results = parallel_map<std::optional<CaseFailure>>(fixtures.size(), threads, [&](std::size_t i) -> std::optional<CaseFailure> {
        const Json& e = fixtures[i];
        const std::string id = "#" + std::to_string(i) + " " + e.at("pair").dump() + " " + e.at("matrix").dump();
        try {
            const auto pair = CharacterPair::from_labels(e.at("pair").at(0).get<std::string>(),
                                                         e.at("pair").at(1).get<std::string>());
            const Json fresh = fixture_entry(pair, gamma_from_json(e.at("matrix")));
            if (fresh.at("value").dump() != e.at("value").dump())
                return CaseFailure{id, e.at("value").dump(), fresh.at("value").dump(),
                                   std::abs(cyclotomic_from_json(e.at("value")).embed() - cyclotomic_from_json(fresh.at("value")).embed())};
            const std::complex<double> stored{e.at("approx").at(0).get<double>(), e.at("approx").at(1).get<double>()};
            const std::complex<double> now{fresh.at("approx").at(0).get<double>(), fresh.at("approx").at(1).get<double>()};
            const double delta = std::abs(stored - now);
            if (!(delta <= fixture_approx_tolerance))
                return CaseFailure{id, e.at("approx").dump(), fresh.at("approx").dump(), delta};
        } catch (const std::exception& ex) {
            return CaseFailure{id, "valid entry", ex.what(), 0.0};
        }
        return std::nullopt;
    });
    std::vector<CaseFailure> failures;
    for (auto& r : results)
        if (r)
            failures.push_back(std::move(*r));
    return failures;
}

} // namespace dedesum

#endif // DEDESUM_FIXTURES_HPP_INCLUDED
