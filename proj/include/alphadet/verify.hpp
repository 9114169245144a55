#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "adet.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "symgroup.hpp"

namespace alphadet {

// ---------------------------------------------------------------------------
// Seeded generation
//
// All random instances come from std::mt19937_64 (its output sequence is fixed
// by the C++ standard) with rejection sampling for ranges, so the same seed
// yields the same instances on every platform.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    /// Fisher-Yates shuffle of the identity.
    Perm perm(int n)
    {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            images[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i)
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(uniform(0, i))]);
        return Perm::from_images(images);
    }

    /// p/q with p in [-9, 9], q in [1, 9].
    Rational small_rational()
    {
        const long p = uniform(-9, 9);
        const long q = uniform(1, 9);
        return make_rational(p, q);
    }

private:
    std::mt19937_64 engine_;
};

/// Integer entries uniform in [-9, 9], filled row by row from Rng(seed).
inline RatMatrix random_matrix(int rows, int cols, std::uint64_t seed)
{
    require_cap(rows >= 0 && cols >= 0 && static_cast<long>(rows) * cols <= 10'000, "random_matrix: rows*cols exceeds 10^4");
    Rng rng(seed);
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Rational(rng.uniform(-9, 9));
    return m;
}

/// Seed of the t-th instance of a suite run with `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) { return seed + 0x9E3779B97F4A7C15ull * (t + 1); }

// ---------------------------------------------------------------------------
// Reports

struct CaseResult {
    std::string id;
    bool pass = true;
    json witness; // null on pass
};

struct SuiteReport {
    std::string suite;
    json params = json::object();
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;
    double wall_time_s = 0;

    bool passed() const
    {
        for (const auto& c : cases)
            if (!c.pass)
                return false;
        return true;
    }

    void add(std::string id, bool pass, json witness = nullptr)
    {
        cases.push_back({std::move(id), pass, pass ? json() : std::move(witness)});
    }

    /// {suite, params, seed, cases:[{id, status, witness?}], status, wall_time_s}
    json to_json(bool with_time = true) const
    {
        json cs = json::array();
        for (const auto& c : cases) {
            json j = {{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
            if (!c.pass)
                j["witness"] = c.witness;
            cs.push_back(std::move(j));
        }
        json out = {{"suite", suite}, {"params", params}, {"seed", seed}, {"cases", std::move(cs)},
                    {"status", passed() ? "pass" : "fail"}};
        if (with_time)
            out["wall_time_s"] = wall_time_s;
        return out;
    }
};

namespace detail {

class SuiteTimer {
public:
    explicit SuiteTimer(SuiteReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~SuiteTimer()
    {
        report_.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    SuiteReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline void require_positive(long v, const char* name)
{
    if (v < 1)
        throw error(errc::invalid_argument, std::string(name) + " must be positive");
}

inline Rational adet_all_ones(int n, const Rational& x) { return content_poly_at(Partition::row(n), x); }

} // namespace detail

// ---------------------------------------------------------------------------
// Identity checks shared by suites and tests

/// Sum over sigma in S_N of chi^lambda(sigma) adet(A P(sigma)).
inline PolyA character_weighted_adet(const Partition& lambda, const RatMatrix& a)
{
    if (!a.is_square() || a.rows() != lambda.size())
        throw error(errc::dimension_mismatch, "character_weighted_adet: need an |lambda| x |lambda| matrix");
    require_cap(a.rows() <= 6, "character_weighted_adet: N exceeds 6");
    const auto chi = detail::character_row(lambda);
    PolyA sum;
    for_each_perm(a.rows(), [&](const Perm& sigma) {
        sum += adet_poly(permute_columns(a, sigma)) * Rational(chi.at(cycle_type(sigma)));
    });
    return sum;
}

/// Oracle-equivalence gate for adet2_structured: 20 random (g, mu, x, y)
/// with N <= 5 compared against the naive double sum.
inline SuiteReport verify_structured_gate(std::uint64_t seed, int instances = 20)
{
    SuiteReport report;
    report.suite = "structured-gate";
    report.seed = seed;
    report.params = {{"instances", instances}};
    detail::SuiteTimer timer(report);
    for (int t = 0; t < instances; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        const int n = static_cast<int>(rng.uniform(1, 5));
        const auto shapes = partitions_of(n);
        const Partition mu = shapes[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(shapes.size()) - 1))];
        const Perm g = rng.perm(n);
        const Rational x = rng.small_rational();
        const Rational y = rng.small_rational();
        const StructuredOnesMatrix s(g, mu);
        const Rational fast = adet2_structured(s, x, y);
        const Rational naive = adet2_poly(s.materialize())(x, y);
        report.add("gate-" + std::to_string(t), fast == naive,
                   {{"g", to_string(g)}, {"mu", to_string(mu)}, {"x", to_string(x)}, {"y", to_string(y)},
                    {"structured", to_string(fast)}, {"naive", to_string(naive)}});
    }
    return report;
}

/// Runs the gate once per process; suites at kn >= 7 call this before using
/// the structured path.
inline void ensure_structured_gate()
{
    static std::once_flag once;
    static bool ok = false;
    std::call_once(once, [] { ok = verify_structured_gate(0x5EEDULL).passed(); });
    if (!ok)
        throw error(errc::identity_violation, "structured adet2 path disagrees with the naive oracle");
}

// ---------------------------------------------------------------------------
// Suites

/// F(alpha; A) = f_{(k^n)}(alpha) wrdet_k(A) on `trials` random kn x n matrices.
inline SuiteReport verify_theorem(int k, int n, int trials, std::uint64_t seed)
{
    detail::require_positive(k, "k");
    detail::require_positive(n, "n");
    detail::require_positive(trials, "trials");
    require_cap(k * n <= 6, "verify theorem: kn=" + std::to_string(k * n) + " exceeds 6");
    SuiteReport report;
    report.suite = "theorem";
    report.seed = seed;
    report.params = {{"k", k}, {"n", n}, {"trials", trials}};
    detail::SuiteTimer timer(report);
    const PolyA content = content_poly(Partition::rectangle(k, n));
    for (int t = 0; t < trials; ++t) {
        const RatMatrix a = random_matrix(k * n, n, trial_seed(seed, static_cast<std::uint64_t>(t)));
        const PolyA lhs = theorem_lhs(a, k);
        const Rational w = wrdet(a, k);
        const PolyA rhs = content * w;
        report.add("trial-" + std::to_string(t), lhs == rhs,
                   {{"matrix", to_json(a)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}, {"wrdet", to_string(w)}});
    }
    return report;
}

enum class CharacterAverageForm {
    /// right side f^lambda f_lambda(alpha) Imm_lambda(A)
    with_dimension,
    /// right side f_lambda(alpha) Imm_lambda(A)
    without_dimension,
};

/// sum_sigma chi^lambda(sigma) adet(A P(sigma)) against the chosen right side,
/// for every lambda of N on `trials` random N x N matrices.
inline SuiteReport verify_character_average(int n, int trials, std::uint64_t seed,
                                            CharacterAverageForm form = CharacterAverageForm::with_dimension)
{
    detail::require_positive(n, "N");
    detail::require_positive(trials, "trials");
    require_cap(n <= 6, "verify character average: N exceeds 6");
    SuiteReport report;
    report.suite = "character-average";
    report.seed = seed;
    report.params = {{"N", n},
                     {"trials", trials},
                     {"form", form == CharacterAverageForm::with_dimension ? "with-dimension" : "without-dimension"}};
    detail::SuiteTimer timer(report);
    for (int t = 0; t < trials; ++t) {
        const RatMatrix a = random_matrix(n, n, trial_seed(seed, static_cast<std::uint64_t>(t)));
        for (const auto& lambda : partitions_of(n)) {
            const PolyA lhs = character_weighted_adet(lambda, a);
            Rational scale = immanant(lambda, a);
            if (form == CharacterAverageForm::with_dimension)
                scale *= Rational(num_standard_tableaux(lambda));
            const PolyA rhs = content_poly(lambda) * scale;
            report.add("trial-" + std::to_string(t) + "/" + to_string(lambda), lhs == rhs,
                       {{"matrix", to_json(a)}, {"lambda", to_string(lambda)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
        }
    }
    return report;
}

namespace detail {
inline void check_omega_case(SuiteReport& report, int k, int n, const Perm& g, const Partition& mu)
{
    const Partition rect = Partition::rectangle(k, n);
    const Rational direct = omega(rect, mu, g);
    const Rational formula = omega_rect_formula(rect, mu, g);
    bool pass = formula == direct;
    json witness = {{"g", to_string(g)}, {"mu", to_string(mu)}, {"formula", to_string(formula)}, {"omega", to_string(direct)}};
    if (g.is_identity()) {
        const auto kostka = kostka_ssyt(rect, mu);
        witness["kostka_ssyt"] = kostka;
        pass = pass && formula == Rational(Integer(static_cast<unsigned long>(kostka)));
    }
    report.add("mu=" + to_string(mu) + "/g=" + to_string(g), pass, std::move(witness));
}

inline void check_omega_preconditions(int k, int n)
{
    require_positive(k, "k");
    require_positive(n, "n");
    require_cap(k * n <= 8, "verify omega: kn exceeds 8");
    if (k * n >= 7)
        ensure_structured_gate();
}
} // namespace detail

/// omega^{(k^n)}_mu(g) = (f^{(k^n)}/mu!) adet[-1/k,1/n](P(g) 1_mu) / adet[-1/kn] 1_kn;
/// at g = 1 the value is also checked against the tableau count K_{(k^n) mu}.
inline SuiteReport verify_corollary_omega(int k, int n, const Perm& g, const Partition& mu)
{
    detail::check_omega_preconditions(k, n);
    if (g.size() != k * n || mu.size() != k * n)
        throw error(errc::dimension_mismatch, "verify omega: g and mu must live in S_kn");
    SuiteReport report;
    report.suite = "omega";
    report.params = {{"k", k}, {"n", n}, {"g", to_string(g)}, {"mu", to_string(mu)}};
    detail::SuiteTimer timer(report);
    detail::check_omega_case(report, k, n, g, mu);
    return report;
}

/// Same identity for every weight mu of kn.
inline SuiteReport verify_corollary_omega(int k, int n, const Perm& g)
{
    detail::check_omega_preconditions(k, n);
    if (g.size() != k * n)
        throw error(errc::dimension_mismatch, "verify omega: g must live in S_kn");
    SuiteReport report;
    report.suite = "omega";
    report.params = {{"k", k}, {"n", n}, {"g", to_string(g)}, {"mu", "all"}};
    detail::SuiteTimer timer(report);
    for (const auto& mu : partitions_of(k * n))
        detail::check_omega_case(report, k, n, g, mu);
    return report;
}

/// chi^{(k^n)}(g)/f^{(k^n)} = adet[-1/k,1/n] P(g) / adet[-1/kn] 1_kn, over all
/// of S_kn when kn <= 7 and over `samples` seeded draws otherwise.
inline SuiteReport verify_corollary_chi(int k, int n, std::uint64_t seed, int samples = 200)
{
    detail::require_positive(k, "k");
    detail::require_positive(n, "n");
    detail::require_positive(samples, "samples");
    const int kn = k * n;
    require_cap(kn <= 8, "verify chi: kn exceeds 8");
    if (kn >= 7)
        ensure_structured_gate();
    SuiteReport report;
    report.suite = "chi";
    report.seed = seed;
    const bool exhaustive = kn <= 7;
    report.params = {{"k", k}, {"n", n}, {"mode", exhaustive ? "exhaustive" : "sampled"}};
    if (!exhaustive)
        report.params["samples"] = samples;
    detail::SuiteTimer timer(report);

    const Partition rect = Partition::rectangle(k, n);
    const Rational f(Integer(static_cast<unsigned long>(num_standard_tableaux(rect))));
    const Rational denom = detail::adet_all_ones(kn, make_rational(-1, kn));
    const Partition trivial = Partition::column(kn);
    auto check = [&](const Perm& g) {
        const Rational lhs = Rational(character(rect, g)) / f;
        const Rational rhs = adet2_structured(StructuredOnesMatrix(g, trivial), make_rational(-1, k), make_rational(1, n)) / denom;
        report.add("g=" + to_string(g), lhs == rhs, {{"g", to_string(g)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
    };
    if (exhaustive) {
        for_each_perm(kn, check);
    } else {
        Rng rng(seed);
        for (int t = 0; t < samples; ++t)
            check(rng.perm(kn));
    }
    return report;
}

/// (N!/(N-m)!) chi(iota w)/chi(1) = (-1)^m sum_{sigma in S_m} (-k)^{kappa(w sigma)} n^{kappa(sigma^{-1})}
/// for every w in S_m, N = kn.
inline SuiteReport verify_stanley(int k, int n, int m)
{
    detail::require_positive(k, "k");
    detail::require_positive(n, "n");
    detail::require_positive(m, "m");
    const int kn = k * n;
    require_cap(kn <= 10, "verify stanley: kn exceeds 10");
    require_cap(m <= std::min(kn, 6), "verify stanley: m exceeds min(kn, 6)");
    SuiteReport report;
    report.suite = "stanley";
    report.params = {{"k", k}, {"n", n}, {"m", m}};
    detail::SuiteTimer timer(report);

    const Partition rect = Partition::rectangle(k, n);
    const Integer falling = factorial(static_cast<unsigned>(kn)) / factorial(static_cast<unsigned>(kn - m));
    const Rational f(Integer(static_cast<unsigned long>(num_standard_tableaux(rect))));
    const std::vector<Perm> sm = enumerate_perms(m);
    for (const auto& w : sm) {
        const Rational lhs = Rational(falling) * Rational(character(rect, w.extended(kn))) / f;
        Integer sum = 0;
        for (const auto& sigma : sm)
            sum += detail::power(Integer(-k), kappa(w * sigma)) * detail::power(Integer(n), kappa(sigma.inverse()));
        const Rational rhs(m % 2 == 0 ? sum : Integer(-sum));
        report.add("w=" + to_string(w), lhs == rhs, {{"w", to_string(w)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
    }
    return report;
}

/// Three routes to omega^{(k^n)}(g): the character average, the wreath
/// determinant ratio wrdet_k(P(g) I_{n,k}) / wrdet_k(I_{n,k}), and the
/// (det X)^k coefficient of x^{M(g)} over the double coset index.
inline SuiteReport verify_zsf(int k, int n, std::uint64_t seed, int samples = 100)
{
    detail::require_positive(k, "k");
    detail::require_positive(n, "n");
    detail::require_positive(samples, "samples");
    const int kn = k * n;
    require_cap(kn <= 8, "verify zsf: kn exceeds 8");
    require_cap(detail::power(factorial(static_cast<unsigned>(n)), k) <= 10'000'000, "verify zsf: (n!)^k exceeds 10^7");
    SuiteReport report;
    report.suite = "zsf";
    report.seed = seed;
    const bool exhaustive = kn <= 7;
    report.params = {{"k", k}, {"n", n}, {"mode", exhaustive ? "exhaustive" : "sampled"}};
    if (!exhaustive)
        report.params["samples"] = samples;
    detail::SuiteTimer timer(report);

    const Partition rect = Partition::rectangle(k, n);
    const RatMatrix indicator = block_indicator(n, k);
    const Rational base = wrdet(indicator, k);
    auto check = [&](const Perm& g) {
        const Rational by_character = omega(rect, rect, g);
        const Rational by_wreath = wrdet(permute_rows(g, indicator), k) / base;
        const Integer coeff = det_power_coeff(block_profile(g, n, k), k);
        const std::uint64_t index = double_coset_index(g, n, k);
        const Rational by_coefficient = detail::ratio(coeff, Integer(static_cast<unsigned long>(index)));
        report.add("g=" + to_string(g), by_character == by_wreath && by_wreath == by_coefficient,
                   {{"g", to_string(g)}, {"omega", to_string(by_character)}, {"wrdet_ratio", to_string(by_wreath)},
                    {"coefficient", to_string(coeff)}, {"index", index}});
    };
    if (exhaustive) {
        for_each_perm(kn, check);
    } else {
        Rng rng(seed);
        for (int t = 0; t < samples; ++t)
            check(rng.perm(kn));
    }
    return report;
}

/// (a) adet at -1/k vanishes once k+1 columns coincide (only when k < N);
/// (b) sum over S_k of adet(A P(sigma)) is divisible by (1+alpha)...(1+(k-1)alpha).
inline SuiteReport verify_weak_alternating(int n, int k, int trials, std::uint64_t seed)
{
    detail::require_positive(n, "N");
    detail::require_positive(k, "k");
    detail::require_positive(trials, "trials");
    require_cap(n <= 7, "verify weak-alt: N exceeds 7");
    if (k > n)
        throw error(errc::invalid_argument, "verify weak-alt: k must not exceed N");
    SuiteReport report;
    report.suite = "weak-alt";
    report.seed = seed;
    report.params = {{"N", n}, {"k", k}, {"trials", trials}};
    detail::SuiteTimer timer(report);
    const PolyA divisor = rising_content(k);
    for (int t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        RatMatrix a = random_matrix(n, n, rng.uniform(0, std::numeric_limits<long>::max()));
        if (k < n) {
            RatMatrix dup = a;
            const Perm order = rng.perm(n);
            const int src = order[0];
            for (int c = 1; c <= k; ++c)
                for (int i = 0; i < n; ++i)
                    dup(i, order[c]) = dup(i, src);
            const Rational v = adet_at(dup, make_rational(-1, k));
            report.add("vanish-" + std::to_string(t), v == 0, {{"matrix", to_json(dup)}, {"value", to_string(v)}});
        }
        const PolyA avg = subgroup_avg_adet(a, k);
        const auto [quotient, remainder] = poly_divmod(avg, divisor);
        report.add("divide-" + std::to_string(t), remainder.is_zero(),
                   {{"matrix", to_json(a)}, {"sum", to_json(avg)}, {"remainder", to_json(remainder)}});
    }
    return report;
}

/// alpha^{nu} Fourier expansion for every sigma in S_N (N <= 8), and the
/// Jucys-Murphy product coefficients against alpha^{nu} (N <= 6).
inline SuiteReport verify_fourier_jm(int n)
{
    detail::require_positive(n, "N");
    require_cap(n <= 8, "verify fourier: N exceeds 8");
    SuiteReport report;
    report.suite = "fourier";
    report.params = {{"N", n}};
    detail::SuiteTimer timer(report);
    try {
        fourier_expand_nu(n);
        report.add("fourier", true);
    } catch (const error& e) {
        if (e.code() != errc::identity_violation)
            throw;
        report.add("fourier", false, {{"error", e.what()}});
    }
    if (n <= 6) {
        const auto phi = jm_expand(n);
        json witness;
        bool ok = true;
        for_each_perm(n, [&](const Perm& sigma) {
            if (ok && phi.coeff(sigma) != PolyA::monomial(static_cast<std::size_t>(nu(sigma)))) {
                ok = false;
                witness = {{"sigma", to_string(sigma)}, {"coefficient", to_json(phi.coeff(sigma))}, {"nu", nu(sigma)}};
            }
        });
        report.add("jucys-murphy", ok, witness);
    }
    return report;
}

} // namespace alphadet
