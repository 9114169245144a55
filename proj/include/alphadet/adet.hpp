#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "symgroup.hpp"

namespace alphadet {

// ---------------------------------------------------------------------------
// Matrix constructions

/// varpi_k(A) = A (x) 1_{1,k}: every column of the kn x n matrix A repeated
/// k times in place.
inline RatMatrix inflate(const RatMatrix& a, int k)
{
    if (k < 1)
        throw error(errc::invalid_argument, "inflate: k must be positive");
    if (a.rows() != k * a.cols())
        throw error(errc::dimension_mismatch, "inflate: expected a " + std::to_string(k * a.cols()) + "x" +
                                                  std::to_string(a.cols()) + " matrix, got " + a.shape());
    RatMatrix b(a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j)
            b(i, j) = a(i, j / k);
    return b;
}

/// I_n (x) 1_{k,1}, the kn x n matrix whose j-th column is the indicator of
/// the j-th block of k rows.
inline RatMatrix block_indicator(int n, int k)
{
    RatMatrix m(k * n, n);
    for (int i = 0; i < k * n; ++i)
        m(i, i / k) = 1;
    return m;
}

/// Block diagonal matrix with all-one blocks of sizes mu_1, mu_2, ...
inline RatMatrix block_ones(const Partition& mu)
{
    const auto labels = block_labels(mu);
    const int n = mu.size();
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)])
                m(i, j) = 1;
    return m;
}

/// P(g) 1_mu, represented implicitly.
struct StructuredOnesMatrix {
    Perm g;
    Partition mu;

    StructuredOnesMatrix(Perm g_, Partition mu_) : g(std::move(g_)), mu(std::move(mu_))
    {
        if (g.size() != mu.size())
            throw error(errc::dimension_mismatch, "StructuredOnesMatrix: g and mu of different degree");
    }

    /// Entry (r, s), 0-based: 1 iff g^{-1}(r) and s share a mu-block.
    int entry(int r, int s) const
    {
        const auto labels = block_labels(mu);
        return labels[static_cast<std::size_t>(g.inverse()[r])] == labels[static_cast<std::size_t>(s)] ? 1 : 0;
    }

    RatMatrix materialize() const { return permute_rows(g, block_ones(mu)); }
};

// ---------------------------------------------------------------------------
// Permutation-product kernel

namespace detail {

/// Visits tau of rank [first, last) with prod_i s(tau(i), col(i)), where col
/// is the identity or a column relabelling. Prefix products are reused across
/// lexicographic neighbours.
template <class Visit>
void perm_products(const ScaledIntMatrix& s, const Perm* col, std::uint64_t first, std::uint64_t last, Visit&& visit)
{
    const int n = s.rows;
    if (first >= last)
        return;
    std::vector<Integer> prefix(static_cast<std::size_t>(n) + 1);
    prefix[0] = 1;
    Perm tau = lex_unrank(n, first);
    int valid = 0;
    for (std::uint64_t r = first;;) {
        for (int i = valid; i < n; ++i) {
            const int c = col ? (*col)[i] : i;
            mpz_mul(prefix[static_cast<std::size_t>(i) + 1].get_mpz_t(), prefix[static_cast<std::size_t>(i)].get_mpz_t(),
                    s(tau[i], c).get_mpz_t());
        }
        visit(static_cast<const Perm&>(tau), static_cast<const Integer&>(prefix[static_cast<std::size_t>(n)]));
        if (++r == last)
            break;
        const Perm prev = tau;
        tau.next();
        valid = 0;
        while (valid < n && prev[valid] == tau[valid])
            ++valid;
    }
}

inline Integer power(const Integer& base, int e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Rational ratio(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// adet(A P(col)) bucketed by nu over a rank range of tau, serially.
inline void add_adet_buckets(const ScaledIntMatrix& s, const Perm* col, std::uint64_t first, std::uint64_t last,
                             std::vector<Integer>& buckets)
{
    const int n = s.rows;
    perm_products(s, col, first, last, [&](const Perm& tau, const Integer& prod) {
        if (prod != 0)
            buckets[static_cast<std::size_t>(n - count_cycles(tau.data(), n))] += prod;
    });
}

inline void merge_sums(std::vector<Integer>& into, const std::vector<Integer>& from)
{
    for (std::size_t i = 0; i < into.size(); ++i)
        into[i] += from[i];
}

inline void check_square(const RatMatrix& a, const char* who)
{
    if (!a.is_square())
        throw error(errc::not_square, std::string(who) + " of a " + a.shape() + " matrix");
}

} // namespace detail

// ---------------------------------------------------------------------------
// alpha-determinants

inline constexpr int max_adet_size = 9;

/// adet A = sum_sigma alpha^{nu(sigma)} prod_i a_{sigma(i), i}, symbolic in alpha.
inline PolyA adet_poly(const RatMatrix& a)
{
    detail::check_square(a, "adet_poly");
    const int n = a.rows();
    require_cap(n <= max_adet_size, "adet_poly: N=" + std::to_string(n) + " exceeds 9");
    if (n == 0)
        return Rational(1);
    const auto s = detail::scale_to_integers(a);
    auto buckets = parallel_range_reduce<std::vector<Integer>>(
        factorial_u64(n), [n] { return std::vector<Integer>(static_cast<std::size_t>(n)); },
        [&](std::uint64_t first, std::uint64_t last, std::vector<Integer>& acc) {
            detail::add_adet_buckets(s, nullptr, first, last, acc);
        },
        detail::merge_sums);
    const Integer scale = detail::power(s.denom, n);
    std::vector<Rational> c;
    for (const auto& b : buckets)
        c.push_back(detail::ratio(b, scale));
    return PolyA(std::move(c));
}

/// adet A at alpha = x, accumulated directly with integer weights
/// p^nu q^{N-1-nu} for x = p/q.
inline Rational adet_at(const RatMatrix& a, const Rational& x)
{
    detail::check_square(a, "adet_at");
    const int n = a.rows();
    require_cap(n <= max_adet_size, "adet_at: N=" + std::to_string(n) + " exceeds 9");
    if (n == 0)
        return 1;
    const auto s = detail::scale_to_integers(a);
    std::vector<Integer> weight(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        weight[static_cast<std::size_t>(v)] = detail::power(x.get_num(), v) * detail::power(x.get_den(), n - 1 - v);
    Integer sum = parallel_range_reduce<Integer>(
        factorial_u64(n), [] { return Integer(0); },
        [&](std::uint64_t first, std::uint64_t last, Integer& acc) {
            Integer term;
            detail::perm_products(s, nullptr, first, last, [&](const Perm& sigma, const Integer& prod) {
                if (prod == 0)
                    return;
                const int v = n - count_cycles(sigma.data(), n);
                mpz_mul(term.get_mpz_t(), prod.get_mpz_t(), weight[static_cast<std::size_t>(v)].get_mpz_t());
                acc += term;
            });
        },
        [](Integer& into, const Integer& from) { into += from; });
    return detail::ratio(sum, detail::power(x.get_den(), n - 1) * detail::power(s.denom, n));
}

inline constexpr int max_adet2_size = 6;

namespace detail {
/// grid[i*n + j] = sum over (tau, sigma) with nu(tau)=i, nu(sigma)=j of
/// prod_i s(tau(i), sigma(i)); outer loop over sigma is the parallel one.
inline std::vector<Integer> adet2_counts(const ScaledIntMatrix& s)
{
    const int n = s.rows;
    const std::uint64_t total = factorial_u64(n);
    return parallel_range_reduce<std::vector<Integer>>(
        total, [n] { return std::vector<Integer>(static_cast<std::size_t>(n * n)); },
        [&](std::uint64_t first, std::uint64_t last, std::vector<Integer>& grid) {
            std::vector<Integer> buckets(static_cast<std::size_t>(n));
            for_each_perm_in_range(n, first, last, [&](const Perm& sigma) {
                for (auto& b : buckets)
                    b = 0;
                add_adet_buckets(s, &sigma, 0, total, buckets);
                const int j = n - count_cycles(sigma.data(), n);
                for (int i = 0; i < n; ++i)
                    grid[static_cast<std::size_t>(i * n + j)] += buckets[static_cast<std::size_t>(i)];
            });
        },
        merge_sums);
}
} // namespace detail

/// adet[alpha,beta] A = sum_{tau,sigma} alpha^{nu(tau)} beta^{nu(sigma)} prod_i a_{tau(i), sigma(i)}.
inline PolyAB adet2_poly(const RatMatrix& a)
{
    detail::check_square(a, "adet2_poly");
    const int n = a.rows();
    require_cap(n <= max_adet2_size, "adet2_poly: N=" + std::to_string(n) + " exceeds 6");
    if (n == 0)
        return PolyAB({{Rational(1)}});
    const auto s = detail::scale_to_integers(a);
    const auto counts = detail::adet2_counts(s);
    const Integer scale = detail::power(s.denom, n);
    std::vector<std::vector<Rational>> g(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                detail::ratio(counts[static_cast<std::size_t>(i * n + j)], scale);
    return PolyAB(std::move(g));
}

// ---------------------------------------------------------------------------
// Structured evaluation of adet[x,y](P(g) 1_mu)
//
// prod_i (P(g) 1_mu)_{tau(i), sigma(i)} is 1 exactly when tau = g h sigma for
// some h in S_mu, so the double sum equals sum_{h in S_mu} C(g h) with
// C(pi) = sum_sigma x^{nu(pi sigma)} y^{nu(sigma)}. C is a class function;
// its integer (nu, nu) counts are tabulated once per class and per degree.

namespace detail {

struct ClassPairCounts {
    int n = 0;
    // counts[class][a * n + b] = #{sigma : nu(pi sigma) = a, nu(sigma) = b}
    std::map<Partition, std::vector<std::uint64_t>> counts;
};

inline std::shared_ptr<const ClassPairCounts> class_pair_counts(int n)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const ClassPairCounts>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    auto table = std::make_shared<ClassPairCounts>();
    table->n = n;
    const std::uint64_t total = factorial_u64(n);
    for (const auto& cls : partitions_of(n)) {
        const Perm pi = class_representative(cls);
        auto grid = parallel_range_reduce<std::vector<std::uint64_t>>(
            total, [n] { return std::vector<std::uint64_t>(static_cast<std::size_t>(n * n)); },
            [&](std::uint64_t first, std::uint64_t last, std::vector<std::uint64_t>& acc) {
                for_each_perm_in_range(n, first, last, [&](const Perm& sigma) {
                    const Perm prod = pi * sigma;
                    const int a = n - count_cycles(prod.data(), n);
                    const int b = n - count_cycles(sigma.data(), n);
                    ++acc[static_cast<std::size_t>(a * n + b)];
                });
            },
            [](std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
                for (std::size_t i = 0; i < into.size(); ++i)
                    into[i] += from[i];
            });
        table->counts.emplace(cls, std::move(grid));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(table)).first->second;
}

} // namespace detail

inline constexpr int max_structured_size = 9;

/// Exact adet[x,y](P(g) 1_mu) without materializing the matrix.
inline Rational adet2_structured(const StructuredOnesMatrix& m, const Rational& x, const Rational& y)
{
    const int n = m.mu.size();
    require_cap(n <= max_structured_size, "adet2_structured: N=" + std::to_string(n) + " exceeds 9");
    require_cap(parts_factorial(m.mu) <= max_young_order, "adet2_structured: mu! exceeds 10^6");
    if (n == 0)
        return 1;
    const auto table = detail::class_pair_counts(n);

    std::map<Partition, std::uint64_t> hits;
    for_each_young(m.mu, [&](const Perm& h) { ++hits[cycle_type(m.g * h)]; });

    std::vector<Rational> xp(static_cast<std::size_t>(n)), yp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xp[static_cast<std::size_t>(i)] = pow(x, static_cast<unsigned>(i));
        yp[static_cast<std::size_t>(i)] = pow(y, static_cast<unsigned>(i));
    }
    Rational total = 0;
    for (const auto& [cls, count] : hits) {
        const auto& grid = table->counts.at(cls);
        Rational c = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (auto g = grid[static_cast<std::size_t>(a * n + b)])
                    c += Rational(Integer(static_cast<unsigned long>(g))) * xp[static_cast<std::size_t>(a)] *
                         yp[static_cast<std::size_t>(b)];
        total += c * Integer(static_cast<unsigned long>(count));
    }
    return total;
}

/// Determinantal value of omega^{(k^n)}_mu(g) for a rectangular shape:
/// (f^{(k^n)}/mu!) adet[-1/k,1/n](P(g) 1_mu) / adet[-1/kn] 1_kn.
inline Rational omega_rect_formula(const Partition& rect, const Partition& mu, const Perm& g)
{
    if (!rect.is_rectangular())
        throw error(errc::invalid_argument, "omega_rect_formula: shape " + to_string(rect) + " is not rectangular");
    if (rect.size() != mu.size())
        throw error(errc::shape_weight_mismatch, "omega_rect_formula: |shape| != |weight|");
    const int k = rect.largest();
    const int n = static_cast<int>(rect.length());
    const int kn = k * n;
    const Rational structured = adet2_structured(StructuredOnesMatrix(g, mu), make_rational(-1, k), make_rational(1, n));
    // adet[x] 1_N = f_{(N)}(x)
    const Rational all_ones = content_poly_at(Partition::row(kn), make_rational(-1, kn));
    return Rational(Integer(static_cast<unsigned long>(num_standard_tableaux(rect)))) / Rational(parts_factorial(mu)) *
           structured / all_ones;
}

/// K_{(k^n) mu} through the same formula at g = 1.
inline Rational kostka_rect_formula(const Partition& rect, const Partition& mu)
{
    return omega_rect_formula(rect, mu, Perm::identity(mu.size()));
}

// ---------------------------------------------------------------------------
// Wreath determinant and the averaging identities

/// wrdet_k A = adet at alpha = -1/k of varpi_k(A).
inline Rational wrdet(const RatMatrix& a, int k)
{
    const RatMatrix b = inflate(a, k);
    require_cap(b.rows() <= max_adet_size, "wrdet: kn exceeds 9");
    return adet_at(b, make_rational(-1, k));
}

/// F(alpha; A) = sum_{sigma in S_kn} (-1/k)^{nu(sigma)} adet(varpi_k(A) P(sigma)).
inline PolyA theorem_lhs(const RatMatrix& a, int k)
{
    const RatMatrix b = inflate(a, k);
    const int n = b.rows();
    require_cap(n <= 6, "theorem_lhs: kn=" + std::to_string(n) + " exceeds 6");
    if (n == 0)
        return Rational(1);
    const auto s = detail::scale_to_integers(b);
    const auto grid = detail::adet2_counts(s);
    const Rational w = make_rational(-1, k);
    const Integer scale = detail::power(s.denom, n);
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j)
            acc += detail::ratio(grid[static_cast<std::size_t>(i * n + j)], scale) * pow(w, static_cast<unsigned>(j));
        c[static_cast<std::size_t>(i)] = acc;
    }
    return PolyA(std::move(c));
}

/// sum_{sigma in S_k} adet(A P(sigma)), with S_k fixing k+1..N.
inline PolyA subgroup_avg_adet(const RatMatrix& a, int k)
{
    detail::check_square(a, "subgroup_avg_adet");
    const int n = a.rows();
    if (k < 1 || k > n)
        throw error(errc::invalid_argument, "subgroup_avg_adet: need 1 <= k <= N");
    require_cap(n <= 7, "subgroup_avg_adet: N exceeds 7");
    const auto s = detail::scale_to_integers(a);
    const std::uint64_t total = factorial_u64(n);
    std::vector<Integer> buckets(static_cast<std::size_t>(n));
    for_each_perm(k, [&](const Perm& small) {
        const Perm sigma = small.extended(n);
        auto part = parallel_range_reduce<std::vector<Integer>>(
            total, [n] { return std::vector<Integer>(static_cast<std::size_t>(n)); },
            [&](std::uint64_t first, std::uint64_t last, std::vector<Integer>& acc) {
                detail::add_adet_buckets(s, &sigma, first, last, acc);
            },
            detail::merge_sums);
        detail::merge_sums(buckets, part);
    });
    const Integer scale = detail::power(s.denom, n);
    std::vector<Rational> c;
    for (const auto& b : buckets)
        c.push_back(detail::ratio(b, scale));
    return PolyA(std::move(c));
}

/// (1 + alpha)(1 + 2 alpha)...(1 + (k-1) alpha)
inline PolyA rising_content(int k)
{
    PolyA p = Rational(1);
    for (int i = 1; i < k; ++i)
        p *= PolyA::linear(Rational(i));
    return p;
}

// ---------------------------------------------------------------------------
// Coefficients of (det X)^k

/// Coefficient of prod x_ij^{m_ij} in (det X)^k, X an n x n matrix of
/// indeterminates, by expanding over k-tuples of permutations.
inline Integer det_power_coeff(const BlockProfile& m, int k)
{
    const int n = m.n();
    if (k < 1)
        throw error(errc::invalid_argument, "det_power_coeff: k must be positive");
    Integer terms = detail::power(factorial(static_cast<unsigned>(n)), k);
    require_cap(terms <= 10'000'000, "det_power_coeff: (n!)^k exceeds 10^7");
    for (int i = 0; i < n; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            row += m.at(i, j);
            col += m.at(j, i);
        }
        if (row != k || col != k)
            return 0;
    }
    const auto perms = enumerate_perms(n);
    std::vector<int> sign_of;
    for (const auto& p : perms)
        sign_of.push_back(sign(p));
    BlockProfile rest = m;
    Integer total = 0;
    // every ordered k-tuple of permutations whose monomial fits inside m
    std::function<void(int, int)> ordered = [&](int left, int sgn) {
        if (left == 0) {
            total += sgn;
            return;
        }
        for (std::size_t p = 0; p < perms.size(); ++p) {
            bool fits = true;
            for (int i = 0; i < n && fits; ++i)
                fits = rest.at(i, perms[p][i]) > 0;
            if (!fits)
                continue;
            for (int i = 0; i < n; ++i)
                --rest.at(i, perms[p][i]);
            ordered(left - 1, sgn * sign_of[p]);
            for (int i = 0; i < n; ++i)
                ++rest.at(i, perms[p][i]);
        }
    };
    ordered(k, 1);
    return total;
}

} // namespace alphadet
