#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "poly.hpp"

namespace alphadet {

// ---------------------------------------------------------------------------
// Conjugacy classes

/// A permutation with the given cycle type, cycles on consecutive letters.
inline Perm class_representative(const Partition& rho)
{
    std::vector<int> images(static_cast<std::size_t>(rho.size()));
    int start = 0;
    for (int len : rho.parts()) {
        for (int i = 0; i < len; ++i)
            images[static_cast<std::size_t>(start + i)] = start + (i + 1) % len + 1;
        start += len;
    }
    return Perm::from_images(images);
}

// ---------------------------------------------------------------------------
// Young subgroups

/// The block of consecutive letters each 0-based letter belongs to under mu.
inline std::vector<int> block_labels(const Partition& mu)
{
    std::vector<int> label;
    for (std::size_t b = 0; b < mu.length(); ++b)
        for (int i = 0; i < mu[b]; ++i)
            label.push_back(static_cast<int>(b));
    return label;
}

inline bool in_young_subgroup(const Perm& g, const std::vector<int>& labels)
{
    for (int i = 0; i < g.size(); ++i)
        if (labels[static_cast<std::size_t>(g[i])] != labels[static_cast<std::size_t>(i)])
            return false;
    return true;
}

inline constexpr std::uint64_t max_young_order = 1'000'000;

/// Visits every element of S_mu; the i-th factor permutes the letters
/// m+1..m+mu_i with m = mu_1 + ... + mu_{i-1}. Order is lexicographic.
template <class F>
void for_each_young(const Partition& mu, F&& f)
{
    require_cap(mu.size() <= max_letters, "young_subgroup: degree exceeds 16");
    require_cap(parts_factorial(mu) <= max_young_order, "young_subgroup: |S_mu| exceeds 10^6");
    Perm p = Perm::identity(mu.size());
    std::vector<int> starts;
    for (int s = 0, b = 0; b < static_cast<int>(mu.length()); s += mu[static_cast<std::size_t>(b)], ++b)
        starts.push_back(s);
    while (true) {
        f(static_cast<const Perm&>(p));
        int b = static_cast<int>(mu.length()) - 1;
        for (; b >= 0; --b) {
            auto* first = p.data() + starts[static_cast<std::size_t>(b)];
            if (std::next_permutation(first, first + mu[static_cast<std::size_t>(b)]))
                break;
        }
        if (b < 0)
            return;
    }
}

inline std::vector<Perm> young_subgroup(const Partition& mu)
{
    std::vector<Perm> out;
    for_each_young(mu, [&](const Perm& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------
// Coset factor

/// The unique tau0 in S_k (fixing k+1..N) with
/// nu(tau sigma) = nu(tau tau0^{-1}) + nu(tau0 sigma) for every sigma in S_k,
/// found by exhaustive search. Absence or multiplicity is an error.
inline Perm coset_factor(const Perm& tau, int k)
{
    const int n = tau.size();
    if (k < 1 || k > n)
        throw error(errc::invalid_argument, "coset_factor: need 1 <= k <= N");
    require_cap(n <= 8, "coset_factor: N exceeds 8");
    const std::vector<Perm> small = enumerate_perms(k);
    std::vector<Perm> sub;
    sub.reserve(small.size());
    for (const auto& s : small)
        sub.push_back(s.extended(n));

    std::optional<Perm> found;
    for (const auto& cand : sub) {
        const int head = nu(tau * cand.inverse());
        bool ok = true;
        for (const auto& sigma : sub) {
            if (nu(tau * sigma) != head + nu(cand * sigma)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        if (found)
            throw error(errc::non_unique_factor,
                        "tau=" + to_string(tau) + " k=" + std::to_string(k) + ": " + to_string(*found) + " and " +
                            to_string(cand));
        found = cand;
    }
    if (!found)
        throw error(errc::no_factor_found, "tau=" + to_string(tau) + " k=" + std::to_string(k));
    return *found;
}

// ---------------------------------------------------------------------------
// Group algebra of S_N with PolyA coefficients

class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n), coeffs_(factorial_u64(n)) {}

    int degree() const noexcept { return n_; }
    const PolyA& coeff(const Perm& p) const { return coeffs_[lex_rank(p)]; }
    PolyA& coeff(const Perm& p) { return coeffs_[lex_rank(p)]; }
    const PolyA& coeff_at_rank(std::uint64_t r) const { return coeffs_[r]; }
    PolyA& coeff_at_rank(std::uint64_t r) { return coeffs_[r]; }
    std::uint64_t support_size() const noexcept { return coeffs_.size(); }

    std::size_t nonzero_terms() const
    {
        return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const PolyA& c) { return !c.is_zero(); }));
    }

private:
    int n_;
    std::vector<PolyA> coeffs_; // indexed by lex_rank
};

namespace detail {
inline PolyA times_alpha(const PolyA& p)
{
    if (p.is_zero())
        return p;
    std::vector<Rational> c(p.coeffs().size() + 1);
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + 1);
    return PolyA(std::move(c));
}
} // namespace detail

/// (1 + alpha X_1)(1 + alpha X_2)...(1 + alpha X_N) expanded in the group
/// algebra, where X_k = (1 k) + (2 k) + ... + (k-1 k).
inline GroupAlgebraElement jm_expand(int n)
{
    require_cap(n >= 1 && n <= 7, "jm_expand: N=" + std::to_string(n) + " exceeds 7");
    GroupAlgebraElement acc(n);
    acc.coeff(Perm::identity(n)) = Rational(1);
    for (int k = 2; k <= n; ++k) {
        GroupAlgebraElement next = acc;
        for (std::uint64_t r = 0; r < acc.support_size(); ++r) {
            const PolyA& c = acc.coeff_at_rank(r);
            if (c.is_zero())
                continue;
            const Perm p = lex_unrank(n, r);
            const PolyA shifted = detail::times_alpha(c);
            for (int i = 1; i < k; ++i)
                next.coeff(p * Perm::cycle(n, {i, k})) += shifted;
        }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Block profiles and double cosets of S_k^n in S_kn

class BlockProfile {
public:
    BlockProfile(int n, int k) : n_(n), k_(k), m_(static_cast<std::size_t>(n * n), 0) {}

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int& at(int i, int j) { return m_[static_cast<std::size_t>(i * n_ + j)]; }
    int at(int i, int j) const { return m_[static_cast<std::size_t>(i * n_ + j)]; }

    friend bool operator==(const BlockProfile&, const BlockProfile&) = default;

private:
    int n_;
    int k_;
    std::vector<int> m_;
};

/// m_ij = #{ s : s in block i, sigma(s) in block j }, blocks of k letters.
inline BlockProfile block_profile(const Perm& sigma, int n, int k)
{
    if (sigma.size() != n * k)
        throw error(errc::dimension_mismatch, "block_profile: permutation is not in S_kn");
    BlockProfile m(n, k);
    for (int s = 0; s < sigma.size(); ++s)
        ++m.at(s / k, sigma[s] / k);
    return m;
}

/// [S_k^n : S_k^n cap sigma^{-1} S_k^n sigma].
inline std::uint64_t double_coset_index(const Perm& sigma, int n, int k)
{
    if (sigma.size() != n * k)
        throw error(errc::dimension_mismatch, "double_coset_index: permutation is not in S_kn");
    const Partition blocks = Partition::rectangle(k, n);
    require_cap(parts_factorial(blocks) <= max_young_order, "double_coset_index: (k!)^n exceeds 10^6");
    const auto labels = block_labels(blocks);
    const Perm inv = sigma.inverse();
    std::uint64_t order = 0, common = 0;
    for_each_young(blocks, [&](const Perm& h) {
        ++order;
        // h lies in sigma^{-1} H sigma iff sigma h sigma^{-1} lies in H
        if (in_young_subgroup(sigma * h * inv, labels))
            ++common;
    });
    return order / common;
}

} // namespace alphadet
