#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "symgroup.hpp"

namespace alphadet {

/// Character values for |lambda| <= 12 are bounded by f^lambda <= 7700, so a
/// fixed-width integer is exact here.
using CharacterValue = std::int64_t;

namespace detail {

class CharacterCache {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    static CharacterCache& instance()
    {
        static CharacterCache cache;
        return cache;
    }

    bool find(const Key& key, CharacterValue& out) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return false;
        out = it->second;
        return true;
    }

    void insert(Key key, CharacterValue v)
    {
        std::unique_lock lock(mutex_);
        map_.emplace(std::move(key), v);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, CharacterValue> map_;
};

// Murnaghan-Nakayama on beta-sets: removing a border strip of length r is
// sliding one bead from position b to the free position b - r; the sign is
// (-1)^(number of beads strictly in between).
inline CharacterValue mn_recurse(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t next)
{
    if (next == rho.size())
        return lambda.empty() ? 1 : 0;

    CharacterCache::Key key{lambda, std::vector<int>(rho.begin() + static_cast<std::ptrdiff_t>(next), rho.end())};
    CharacterValue cached;
    if (CharacterCache::instance().find(key, cached))
        return cached;

    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
    const int r = rho[next];

    CharacterValue total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0)
            continue;
        int between = 0;
        bool blocked = false;
        for (int j = 0; j < len; ++j) {
            const int c = beta[static_cast<std::size_t>(j)];
            if (c == target)
                blocked = true;
            else if (c > target && c < b)
                ++between;
        }
        if (blocked)
            continue;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int j = 0; j < len; ++j) {
            const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0)
                smaller.push_back(part);
        }
        const CharacterValue sub = mn_recurse(smaller, rho, next + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    CharacterCache::instance().insert(std::move(key), total);
    return total;
}

} // namespace detail

/// chi^lambda on the class of cycle type rho (Murnaghan-Nakayama rule).
inline CharacterValue character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw error(errc::shape_weight_mismatch, "character: |" + to_string(lambda) + "| != |" + to_string(rho) + "|");
    require_cap(lambda.size() <= max_partition_size, "character: N exceeds 12");
    return detail::mn_recurse(lambda.parts(), rho.parts(), 0);
}

inline CharacterValue character(const Partition& lambda, const Perm& sigma)
{
    return character(lambda, cycle_type(sigma));
}

/// z_rho = prod_i i^{m_i} m_i!, the centralizer order.
inline Integer centralizer_order(const Partition& rho)
{
    Integer z = 1;
    std::map<int, unsigned> mult;
    for (int p : rho.parts())
        ++mult[p];
    for (auto [part, m] : mult) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), m);
        z *= pw * factorial(m);
    }
    return z;
}

inline Integer class_size(const Partition& rho)
{
    return factorial(static_cast<unsigned>(rho.size())) / centralizer_order(rho);
}

namespace detail {
/// Character of lambda on every class of S_N, keyed by cycle type.
inline std::map<Partition, CharacterValue> character_row(const Partition& lambda)
{
    std::map<Partition, CharacterValue> row;
    for (const auto& rho : partitions_of(lambda.size()))
        row.emplace(rho, character(lambda, rho));
    return row;
}
} // namespace detail

/// omega^lambda_mu(g) = (1/mu!) sum_{tau in S_mu} chi^lambda(g tau).
inline Rational omega(const Partition& lambda, const Partition& mu, const Perm& g)
{
    if (lambda.size() != mu.size() || g.size() != mu.size())
        throw error(errc::shape_weight_mismatch, "omega: lambda, mu and g must live in the same S_N");
    const Integer order = parts_factorial(mu);
    require_cap(order <= max_young_order, "omega: mu! exceeds 10^6");
    const auto chi = detail::character_row(lambda);
    Integer sum = 0;
    for_each_young(mu, [&](const Perm& tau) { sum += chi.at(cycle_type(g * tau)); });
    Rational r(sum, order);
    r.canonicalize();
    return r;
}

/// Imm_lambda(A) = sum_sigma chi^lambda(sigma) prod_i a_{sigma(i), i}.
inline Rational immanant(const Partition& lambda, const RatMatrix& a)
{
    if (!a.is_square())
        throw error(errc::not_square, "immanant of a " + a.shape() + " matrix");
    const int n = a.rows();
    if (lambda.size() != n)
        throw error(errc::shape_weight_mismatch, "immanant: |lambda| != N");
    require_cap(n <= 8, "immanant: N exceeds 8");
    if (n == 0)
        return 1;
    const auto chi = detail::character_row(lambda);
    const auto s = detail::scale_to_integers(a);
    Integer sum = reduce_perms<Integer>(
        n, [] { return Integer(0); },
        [&](const Perm& sigma, Integer& acc) {
            Integer prod = s(sigma[0], 0);
            for (int i = 1; i < n && prod != 0; ++i)
                prod *= s(sigma[i], i);
            if (prod != 0)
                acc += chi.at(cycle_type(sigma)) * prod;
        },
        [](Integer& into, const Integer& from) { into += from; });
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), s.denom.get_mpz_t(), static_cast<unsigned long>(n));
    Rational r(sum, scale);
    r.canonicalize();
    return r;
}

/// (chi^lambda * chi^rho)(x) = sum_sigma chi^lambda(x sigma) chi^rho(sigma^{-1}),
/// tabulated on one representative per class.
inline std::map<Partition, Rational> convolve_characters(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw error(errc::shape_weight_mismatch, "convolve_characters: shapes of different size");
    const int n = lambda.size();
    require_cap(n <= 6, "convolve_characters: N exceeds 6");
    const auto chi_l = detail::character_row(lambda);
    const auto chi_r = detail::character_row(rho);
    std::map<Partition, Rational> out;
    for (const auto& cls : partitions_of(n)) {
        const Perm x = class_representative(cls);
        Integer sum = 0;
        for_each_perm(n, [&](const Perm& sigma) {
            sum += chi_l.at(cycle_type(x * sigma)) * chi_r.at(cycle_type(sigma.inverse()));
        });
        out.emplace(cls, Rational(sum));
    }
    return out;
}

/// Checks alpha^{nu(sigma)} = (1/N!) sum_lambda f^lambda f_lambda(alpha) chi^lambda(sigma)
/// for every sigma in S_N and returns the right-hand side per cycle type.
inline std::map<Partition, PolyA> fourier_expand_nu(int n)
{
    require_cap(n >= 1 && n <= 8, "fourier_expand_nu: N exceeds 8");
    const auto shapes = partitions_of(n);
    std::vector<PolyA> weighted;
    for (const auto& lambda : shapes)
        weighted.push_back(content_poly(lambda) * Rational(num_standard_tableaux(lambda)));
    const Rational inv_order(Integer(1), factorial(static_cast<unsigned>(n)));

    std::map<Partition, PolyA> table;
    for (const auto& cls : partitions_of(n)) {
        PolyA rhs;
        for (std::size_t i = 0; i < shapes.size(); ++i)
            rhs += weighted[i] * Rational(character(shapes[i], cls));
        table.emplace(cls, rhs * inv_order);
    }
    for_each_perm(n, [&](const Perm& sigma) {
        if (table.at(cycle_type(sigma)) != PolyA::monomial(static_cast<std::size_t>(nu(sigma))))
            throw error(errc::identity_violation, "Fourier expansion of alpha^nu fails at sigma=" + to_string(sigma));
    });
    return table;
}

} // namespace alphadet
