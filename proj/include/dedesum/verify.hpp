#ifndef DEDESUM_VERIFY_HPP_INCLUDED
#define DEDESUM_VERIFY_HPP_INCLUDED

// Verification campaigns over every admissible pair up to a level bound. Each campaign
// is a list of independent cases; cases run on a worker pool and results are merged in
// case order, so reports do not depend on the thread count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dedesum/bernoulli.hpp"
#include "dedesum/characters.hpp"
#include "dedesum/dedekind.hpp"
#include "dedesum/modgroup.hpp"
#include "dedesum/oracle.hpp"

namespace dedesum {

struct CampaignConfig {
    Int max_level = 36;
    Int samples = 0;       // 0: suite default
    std::uint64_t seed = 1;
    double tolerance = 0;  // 0: suite default
    unsigned threads = 1;
};

struct CaseFailure {
    std::string case_id;
    std::string expected;
    std::string actual;
    double delta = 0;
};

struct SuiteReport {
    std::string suite;
    Int cases = 0;
    double tolerance = 0;  // 0 for exact suites
    double worst_delta = 0;
    std::vector<CaseFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Worker count: DEDESUM_THREADS if set, else the hardware concurrency.
inline unsigned default_thread_count()
{
    if (const char* env = std::getenv("DEDESUM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) on `threads` workers; results in index order.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn fn)
{
    std::vector<Result> out(count);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < count;)
                    out[i] = fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

/// Seed for sample `index` of pair `pair_index` in a campaign seeded with `seed`.
inline std::uint64_t case_seed(std::uint64_t seed, std::size_t pair_index, std::size_t index, std::uint64_t salt = 0)
{
    // splitmix64 over the tuple
    std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
    for (std::uint64_t v : {static_cast<std::uint64_t>(pair_index), static_cast<std::uint64_t>(index)}) {
        x += 0x9e3779b97f4a7c15ULL + v;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        x ^= x >> 31;
    }
    return x;
}

namespace detail {

using CaseOutcome = std::optional<CaseFailure>;

inline std::string format_complex(std::complex<double> z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

inline CaseOutcome exact_zero(const std::string& id, const Cyclotomic& defect)
{
    if (defect.is_zero())
        return std::nullopt;
    return CaseFailure{id, "0", defect.to_string(), std::abs(defect.embed())};
}

inline CaseOutcome exact_equal(const std::string& id, const Cyclotomic& expected, const Cyclotomic& actual)
{
    if (expected == actual)
        return std::nullopt;
    return CaseFailure{id, expected.to_string(), actual.to_string(), std::abs(expected.embed() - actual.embed())};
}

inline std::string case_name(const CharacterPair& pair, const GammaMatrix& g)
{
    return pair.label() + " " + g.to_string();
}

struct CaseResult {
    CaseOutcome failure;
    double delta = 0;
};

inline SuiteReport collect(std::string suite, double tolerance, const std::vector<CaseResult>& results)
{
    SuiteReport report{std::move(suite), static_cast<Int>(results.size()), tolerance, 0.0, {}};
    for (const auto& r : results) {
        report.worst_delta = std::max(report.worst_delta, r.delta);
        if (r.failure)
            report.failures.push_back(*r.failure);
    }
    return report;
}

// Flattens (pair, sample) into one task list.
struct PairSample {
    std::size_t pair;
    std::size_t sample;
};

inline std::vector<PairSample> pair_samples(std::size_t pairs, Int samples)
{
    std::vector<PairSample> out;
    for (std::size_t p = 0; p < pairs; ++p)
        for (Int s = 0; s < samples; ++s)
            out.push_back({p, static_cast<std::size_t>(s)});
    return out;
}

} // namespace detail

// c bounds used by the sampled campaigns, as multiples of the level N.
inline constexpr Int oracle_c_multiple = 30;
inline constexpr Int cocycle_c_multiple = 10;
inline constexpr Int reciprocity_c_multiple = 30;
inline constexpr Int automorphy_c_multiple = 2;

/// Exact S vs tau(conj chi1)/(pi i) phi evaluated from the Fourier series.
inline SuiteReport verify_oracle(const CampaignConfig& cfg)
{
    const Int samples = cfg.samples > 0 ? cfg.samples : 25;
    const double tol = cfg.tolerance > 0 ? cfg.tolerance : 1e-8;
    const auto pairs = admissible_pairs(cfg.max_level);
    const auto tasks = detail::pair_samples(pairs.size(), samples);
    auto results = parallel_map<detail::CaseResult>(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto& pair = pairs[tasks[i].pair];
        const Int n = pair.level();
        const GammaMatrix g = random_gamma0(n, oracle_c_multiple * n, case_seed(cfg.seed, tasks[i].pair, tasks[i].sample, 1));
        const auto exact = dedekind_sum_value(pair, g).embed();
        const auto numeric = s_numeric(pair, g);
        const double delta = std::abs(exact - numeric);
        detail::CaseResult r{std::nullopt, delta};
        if (!(delta <= tol))
            r.failure = CaseFailure{detail::case_name(pair, g), detail::format_complex(exact),
                                    detail::format_complex(numeric), delta};
        return r;
    });
    return detail::collect("oracle", tol, results);
}

/// S(g1 g2) = S(g1) + psi(g1) S(g2), exactly.
inline SuiteReport verify_cocycle(const CampaignConfig& cfg)
{
    const Int samples = cfg.samples > 0 ? cfg.samples : 200;
    const auto pairs = admissible_pairs(cfg.max_level);
    const auto tasks = detail::pair_samples(pairs.size(), samples);
    auto results = parallel_map<detail::CaseResult>(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto& pair = pairs[tasks[i].pair];
        const Int n = pair.level();
        const GammaMatrix g1 = random_gamma0(n, cocycle_c_multiple * n, case_seed(cfg.seed, tasks[i].pair, tasks[i].sample, 2));
        const GammaMatrix g2 = random_gamma0(n, cocycle_c_multiple * n, case_seed(cfg.seed, tasks[i].pair, tasks[i].sample, 3));
        return detail::CaseResult{
            detail::exact_zero(detail::case_name(pair, g1) + " * " + g2.to_string(), cocycle_defect(pair, g1, g2)), 0.0};
    });
    return detail::collect("cocycle", 0.0, results);
}

/// Reciprocity under g -> g', exactly, with the odd-case defect term in closed form.
inline SuiteReport verify_reciprocity(const CampaignConfig& cfg)
{
    const Int samples = cfg.samples > 0 ? cfg.samples : 200;
    const auto pairs = admissible_pairs(cfg.max_level);
    const auto tasks = detail::pair_samples(pairs.size(), samples);
    auto results = parallel_map<detail::CaseResult>(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto& pair = pairs[tasks[i].pair];
        const Int n = pair.level();
        const GammaMatrix g = random_gamma0(n, reciprocity_c_multiple * n, case_seed(cfg.seed, tasks[i].pair, tasks[i].sample, 4));
        return detail::CaseResult{detail::exact_zero(detail::case_name(pair, g), reciprocity_defect(pair, g)), 0.0};
    });
    return detail::collect("reciprocity", 0.0, results);
}

/// Numeric S(omega) against the closed form; even pairs must be exactly 0 on the exact side.
inline SuiteReport verify_fricke(const CampaignConfig& cfg)
{
    const double tol = cfg.tolerance > 0 ? cfg.tolerance : 1e-9;
    const auto pairs = admissible_pairs(cfg.max_level);
    auto results = parallel_map<detail::CaseResult>(pairs.size(), cfg.threads, [&](std::size_t i) {
        const auto& pair = pairs[i];
        const Cyclotomic exact = fricke_value(pair);
        const auto numeric = dedekind_normalization(pair) * fricke_phi_numeric(pair);
        const double delta = std::abs(numeric - exact.embed());
        detail::CaseResult r{std::nullopt, delta};
        if (pair.both_even() && !exact.is_zero())
            r.failure = CaseFailure{pair.label(), "0", exact.to_string(), std::abs(exact.embed())};
        else if (!(delta <= tol))
            r.failure = CaseFailure{pair.label(), detail::format_complex(exact.embed()), detail::format_complex(numeric), delta};
        return r;
    });
    return detail::collect("fricke", tol, results);
}

/// Series L(1, chi) against the closed form for odd primitive chi, q <= max_modulus.
inline SuiteReport verify_l_values(const CampaignConfig& cfg, Int max_modulus = 50, Int truncation = 100000)
{
    const double tol = cfg.tolerance > 0 ? cfg.tolerance : 1e-4;
    std::vector<DirichletCharacter> chars;
    for (Int q = 3; q <= max_modulus; ++q)
        for (auto& chi : enumerate_characters(q, true))
            if (!chi.is_even())
                chars.push_back(std::move(chi));
    auto results = parallel_map<detail::CaseResult>(chars.size(), cfg.threads, [&](std::size_t i) {
        const auto series = l_one_series(chars[i], truncation);
        const auto closed = l_one_closed_form(chars[i]);
        const double delta = std::abs(series - closed);
        detail::CaseResult r{std::nullopt, delta};
        if (!(delta <= tol))
            r.failure = CaseFailure{chars[i].label(), detail::format_complex(closed), detail::format_complex(series), delta};
        return r;
    });
    return detail::collect("lvalue", tol, results);
}

/// |E*(g z, 1) - psi(g) E*(z, 1)| at z = i/N.
inline SuiteReport verify_automorphy(const CampaignConfig& cfg)
{
    const Int samples = cfg.samples > 0 ? cfg.samples : 10;
    const double tol = cfg.tolerance > 0 ? cfg.tolerance : 1e-9;
    const auto pairs = admissible_pairs(cfg.max_level);
    auto per_pair = parallel_map<std::vector<detail::CaseResult>>(pairs.size(), cfg.threads, [&](std::size_t p) {
        const auto& pair = pairs[p];
        const Int n = pair.level();
        std::vector<GammaMatrix> gs;
        std::vector<Int> terms;
        for (Int s = 0; s < samples; ++s) {
            gs.push_back(random_gamma0(n, automorphy_c_multiple * n, case_seed(cfg.seed, p, static_cast<std::size_t>(s), 5)));
            // Im(g z) = N / (d^2 N^2 + c^2); both points are covered by 6 / min height terms.
            const double c = gs.back().c().get_d(), d = gs.back().d().get_d(), nn = static_cast<double>(n);
            terms.push_back(truncation_for_height(std::min(1.0 / nn, nn / (d * d * nn * nn + c * c))));
        }
        const CompletedEisensteinSeries series(pair, *std::max_element(terms.begin(), terms.end()));
        std::vector<detail::CaseResult> out;
        for (std::size_t s = 0; s < gs.size(); ++s) {
            const double residual = automorphy_residual(series, pair, gs[s], n, terms[s]);
            detail::CaseResult r{std::nullopt, residual};
            if (!(residual <= tol))
                r.failure = CaseFailure{detail::case_name(pair, gs[s]), "0", std::to_string(residual), residual};
            out.push_back(std::move(r));
        }
        return out;
    });
    std::vector<detail::CaseResult> flat;
    for (auto& v : per_pair)
        flat.insert(flat.end(), v.begin(), v.end());
    return detail::collect("automorphy", tol, flat);
}

/// c_{mn} = c_m c_n for every coprime m, n with m n <= limit.
inline SuiteReport verify_hecke(const CampaignConfig& cfg, Int limit = 500)
{
    const auto pairs = admissible_pairs(cfg.max_level);
    auto per_pair = parallel_map<std::vector<detail::CaseResult>>(pairs.size(), cfg.threads, [&](std::size_t p) {
        const auto& pair = pairs[p];
        const auto table = coeff_table_exact(pair, limit);
        std::vector<detail::CaseResult> out;
        for (Int m = 1; m <= limit; ++m)
            for (Int n = m; m * n <= limit; ++n) {
                if (gcd(m, n) != 1)
                    continue;
                const auto mn = static_cast<std::size_t>(m * n);
                out.push_back({detail::exact_equal(pair.label() + " m=" + std::to_string(m) + " n=" + std::to_string(n),
                                                   table[mn], table[static_cast<std::size_t>(m)] * table[static_cast<std::size_t>(n)]),
                               0.0});
            }
        return out;
    });
    std::vector<detail::CaseResult> flat;
    for (auto& v : per_pair)
        flat.insert(flat.end(), v.begin(), v.end());
    return detail::collect("hecke", 0.0, flat);
}

/// Coefficient identity between d/dz (1/(pi i)) f and E_{2,chi1,chi2}, n <= limit.
inline SuiteReport verify_eichler_shimura(const CampaignConfig& cfg, Int limit = 500)
{
    const auto pairs = admissible_pairs(cfg.max_level);
    auto results = parallel_map<detail::CaseResult>(pairs.size(), cfg.threads, [&](std::size_t p) {
        const auto report = eichler_shimura_check(pairs[p], limit);
        detail::CaseResult r{std::nullopt, 0.0};
        if (!report.equal)
            r.failure = CaseFailure{pairs[p].label() + " n=" + std::to_string(report.first_mismatch),
                                    report.rhs.to_string(), report.lhs.to_string(),
                                    std::abs(report.lhs.embed() - report.rhs.embed())};
        return r;
    });
    return detail::collect("eichler", 0.0, results);
}

/// S depends only on the bottom row: canonical lift vs lifts shifted by T^k, on the oracle campaign.
inline SuiteReport verify_bottom_row(const CampaignConfig& cfg)
{
    const Int samples = cfg.samples > 0 ? cfg.samples : 25;
    const auto pairs = admissible_pairs(cfg.max_level);
    const auto tasks = detail::pair_samples(pairs.size(), samples);
    auto results = parallel_map<detail::CaseResult>(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto& pair = pairs[tasks[i].pair];
        const Int n = pair.level();
        const GammaMatrix g = random_gamma0(n, oracle_c_multiple * n, case_seed(cfg.seed, tasks[i].pair, tasks[i].sample, 1));
        const Int shift = 1 + static_cast<Int>(tasks[i].sample % 7);
        const auto report = bottom_row_dependence_check(pair, g.c(), g.d(), shift);
        detail::CaseResult r{std::nullopt, 0.0};
        if (!report.equal)
            r.failure = CaseFailure{detail::case_name(pair, g) + " shift=" + std::to_string(shift),
                                    report.lhs.to_string(), report.rhs.to_string(),
                                    std::abs(report.lhs.embed() - report.rhs.embed())};
        return r;
    });
    return detail::collect("bottomrow", 0.0, results);
}

/// S(T^n) = 0, S(-g) = S(g), bottom-row independence and S_{chi1,chi2}(g) = conj S_{conj chi1, conj chi2}(g),
/// all exact, on the oracle campaign.
inline SuiteReport verify_structure(const CampaignConfig& cfg)
{
    const Int samples = cfg.samples > 0 ? cfg.samples : 25;
    const auto pairs = admissible_pairs(cfg.max_level);
    const auto tasks = detail::pair_samples(pairs.size(), samples);
    auto results = parallel_map<detail::CaseResult>(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto& pair = pairs[tasks[i].pair];
        const Int n = pair.level();
        const GammaMatrix g = random_gamma0(n, oracle_c_multiple * n, case_seed(cfg.seed, tasks[i].pair, tasks[i].sample, 1));
        const std::string id = detail::case_name(pair, g);
        const Cyclotomic s = dedekind_sum_value(pair, g);
        const Int k = static_cast<Int>(tasks[i].sample) - 12;
        if (auto f = detail::exact_zero(id + " S(T^" + std::to_string(k) + ")", dedekind_sum_value(pair, GammaMatrix::translation(k, n))))
            return detail::CaseResult{f, 0.0};
        if (auto f = detail::exact_equal(id + " S(-g)", s, dedekind_sum_value(pair, -g)))
            return detail::CaseResult{f, 0.0};
        const GammaMatrix shifted = GammaMatrix::translation(k, n) * g;
        if (auto f = detail::exact_equal(id + " S(T^k g)", s, dedekind_sum_value(pair, shifted)))
            return detail::CaseResult{f, 0.0};
        const Cyclotomic mirrored = dedekind_sum_value(pair.conjugated(), g).conj();
        if (auto f = detail::exact_equal(id + " conj", s, mirrored))
            return detail::CaseResult{f, 0.0};
        return detail::CaseResult{std::nullopt, 0.0};
    });
    return detail::collect("structure", 0.0, results);
}

/// sum_{j mod c} conj(chi)(j) e_c(a l j) = 0 for every admissible (chi, a, c, l), c <= max_c.
inline SuiteReport verify_character_sums(const CampaignConfig& cfg, Int max_c = 36)
{
    std::vector<DirichletCharacter> chars;
    for (Int q = 2; q <= max_c; ++q)
        for (auto& chi : enumerate_characters(q, true))
            chars.push_back(std::move(chi));
    auto per_char = parallel_map<std::vector<detail::CaseResult>>(chars.size(), cfg.threads, [&](std::size_t i) {
        const auto& chi = chars[i];
        const Int q = chi.modulus();
        std::vector<detail::CaseResult> out;
        for (Int c = q; c <= max_c; c += q)
            for (Int a = 1; a < c; ++a) {
                if (gcd(a, c) != 1)
                    continue;
                for (Int l = 0; l < c; ++l) {
                    if (mod(l, c / q) == 0)
                        continue;
                    const std::string id = chi.label() + " a=" + std::to_string(a) + " c=" + std::to_string(c)
                                           + " l=" + std::to_string(l);
                    out.push_back({detail::exact_zero(id, twisted_character_sum(chi, a, c, l)), 0.0});
                }
            }
        return out;
    });
    std::vector<detail::CaseResult> flat;
    for (auto& v : per_char)
        flat.insert(flat.end(), v.begin(), v.end());
    return detail::collect("charsum", 0.0, flat);
}

inline const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names{"oracle",  "cocycle", "reciprocity", "fricke",
                                                     "lvalue",  "automorphy", "hecke", "eichler",
                                                     "structure", "bottomrow", "charsum"};
    return names;
}

/// Runs one named suite; throws std::invalid_argument for an unknown name.
inline SuiteReport run_suite(std::string_view name, const CampaignConfig& cfg)
{
    if (name == "oracle")
        return verify_oracle(cfg);
    if (name == "cocycle")
        return verify_cocycle(cfg);
    if (name == "reciprocity")
        return verify_reciprocity(cfg);
    if (name == "fricke")
        return verify_fricke(cfg);
    if (name == "lvalue")
        return verify_l_values(cfg);
    if (name == "automorphy")
        return verify_automorphy(cfg);
    if (name == "hecke")
        return verify_hecke(cfg);
    if (name == "eichler")
        return verify_eichler_shimura(cfg);
    if (name == "structure")
        return verify_structure(cfg);
    if (name == "bottomrow")
        return verify_bottom_row(cfg);
    if (name == "charsum")
        return verify_character_sums(cfg);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace dedesum

#endif // DEDESUM_VERIFY_HPP_INCLUDED
