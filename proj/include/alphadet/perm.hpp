#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"
#include "partition.hpp"

namespace alphadet {

inline constexpr int max_letters = 16;

/// A permutation of {1..n}. Stored 0-based; p[i] is the image of letter i+1
/// minus one. Composition follows functions: (a * b)[i] = a[b[i]].
class Perm {
public:
    Perm() = default;

    static Perm identity(int n)
    {
        check_size(n);
        Perm p;
        p.n_ = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i)
            p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        return p;
    }

    /// One-line notation with 1-based images, e.g. {2,1,3}.
    static Perm from_images(const std::vector<int>& images)
    {
        const int n = static_cast<int>(images.size());
        check_size(n);
        Perm p;
        p.n_ = static_cast<std::uint8_t>(n);
        std::array<bool, max_letters> seen{};
        for (int i = 0; i < n; ++i) {
            int v = images[static_cast<std::size_t>(i)];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw error(errc::invalid_argument, "images do not form a permutation of 1.." + std::to_string(n));
            seen[static_cast<std::size_t>(v - 1)] = true;
            p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
        }
        return p;
    }

    /// The cycle (c_1 c_2 ... c_r) in S_n, letters 1-based.
    static Perm cycle(int n, std::initializer_list<int> letters)
    {
        Perm p = identity(n);
        std::vector<int> c(letters);
        for (std::size_t i = 0; i < c.size(); ++i) {
            int from = c[i], to = c[(i + 1) % c.size()];
            if (from < 1 || from > n || to < 1 || to > n)
                throw error(errc::invalid_argument, "cycle letter out of range");
            p.img_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
        }
        return p;
    }

    int size() const noexcept { return n_; }
    int operator[](int i) const noexcept { return img_[static_cast<std::size_t>(i)]; }
    /// 1-based image of a 1-based letter.
    int image(int letter) const noexcept { return img_[static_cast<std::size_t>(letter - 1)] + 1; }

    std::uint8_t* data() noexcept { return img_.data(); }
    const std::uint8_t* data() const noexcept { return img_.data(); }

    std::vector<int> images() const
    {
        std::vector<int> v(n_);
        for (int i = 0; i < n_; ++i)
            v[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
        return v;
    }

    bool is_identity() const noexcept
    {
        for (int i = 0; i < n_; ++i)
            if (img_[static_cast<std::size_t>(i)] != i)
                return false;
        return true;
    }

    Perm inverse() const noexcept
    {
        Perm q;
        q.n_ = n_;
        for (int i = 0; i < n_; ++i)
            q.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return q;
    }

    /// Embeds into S_m by fixing the letters n+1..m.
    Perm extended(int m) const
    {
        Perm q = identity(m);
        for (int i = 0; i < n_; ++i)
            q.img_[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)];
        return q;
    }

    friend Perm operator*(const Perm& a, const Perm& b)
    {
        if (a.n_ != b.n_)
            throw error(errc::dimension_mismatch, "composing permutations of different degree");
        Perm c;
        c.n_ = a.n_;
        for (int i = 0; i < a.n_; ++i)
            c.img_[static_cast<std::size_t>(i)] = a.img_[b.img_[static_cast<std::size_t>(i)]];
        return c;
    }

    /// Advances to the lexicographic successor; false after the last one.
    bool next() noexcept { return std::next_permutation(img_.begin(), img_.begin() + n_); }

    friend bool operator==(const Perm& a, const Perm& b) noexcept
    {
        return a.n_ == b.n_ && std::equal(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin());
    }
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) noexcept
    {
        if (a.n_ != b.n_)
            return a.n_ <=> b.n_;
        return std::lexicographical_compare_three_way(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin(),
                                                      b.img_.begin() + b.n_);
    }

private:
    static void check_size(int n)
    {
        if (n < 0 || n > max_letters)
            throw error(errc::size_cap_exceeded, "permutation degree " + std::to_string(n) + " exceeds 16");
    }

    std::array<std::uint8_t, max_letters> img_{};
    std::uint8_t n_ = 0;
};

/// Number of disjoint cycles of the first n entries of img, fixed points included.
inline int count_cycles(const std::uint8_t* img, int n) noexcept
{
    std::uint32_t seen = 0;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen & (1u << i))
            continue;
        ++cycles;
        for (int j = i; !(seen & (1u << j)); j = img[j])
            seen |= 1u << j;
    }
    return cycles;
}

inline int kappa(const Perm& p) noexcept { return count_cycles(p.data(), p.size()); }
inline int nu(const Perm& p) noexcept { return p.size() - kappa(p); }
inline int sign(const Perm& p) noexcept { return nu(p) % 2 == 0 ? 1 : -1; }

inline Partition cycle_type(const Perm& p)
{
    std::vector<int> lens;
    std::uint32_t seen = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (seen & (1u << i))
            continue;
        int len = 0;
        for (int j = i; !(seen & (1u << j)); j = p[j]) {
            seen |= 1u << j;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
}

inline std::uint64_t factorial_u64(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Position of p in the lexicographic order of S_n, identity = 0.
inline std::uint64_t lex_rank(const Perm& p)
{
    const int n = p.size();
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i])
                ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial_u64(n - 1 - i);
    }
    return rank;
}

inline Perm lex_unrank(int n, std::uint64_t rank)
{
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = factorial_u64(i);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        images.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Perm::from_images(images);
}

inline constexpr int max_enumeration_degree = 10;

/// Visits permutations of rank [first, last) in lexicographic order.
template <class F>
void for_each_perm_in_range(int n, std::uint64_t first, std::uint64_t last, F&& f)
{
    if (first >= last)
        return;
    Perm p = lex_unrank(n, first);
    for (std::uint64_t r = first; r < last; ++r) {
        f(static_cast<const Perm&>(p));
        p.next();
    }
}

/// Visits all of S_n in lexicographic order, starting with the identity.
template <class F>
void for_each_perm(int n, F&& f)
{
    require_cap(n >= 0 && n <= max_enumeration_degree, "enumerate_perms: N=" + std::to_string(n) + " exceeds 10");
    for_each_perm_in_range(n, 0, factorial_u64(n), std::forward<F>(f));
}

inline std::vector<Perm> enumerate_perms(int n)
{
    require_cap(n >= 1 && n <= max_enumeration_degree, "enumerate_perms: N=" + std::to_string(n) + " exceeds 10");
    std::vector<Perm> out;
    out.reserve(factorial_u64(n));
    for_each_perm(n, [&](const Perm& p) { out.push_back(p); });
    return out;
}

/// Parallel fold over all of S_n. `body(perm, acc)` is called once per
/// permutation; accumulators are merged in lexicographic chunk order.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc reduce_perms(int n, MakeAcc make_acc, Body body, Merge merge)
{
    require_cap(n >= 0 && n <= max_enumeration_degree, "perm sum: N=" + std::to_string(n) + " exceeds 10");
    return parallel_range_reduce<Acc>(
        factorial_u64(n), make_acc,
        [&](std::uint64_t first, std::uint64_t last, Acc& acc) {
            for_each_perm_in_range(n, first, last, [&](const Perm& p) { body(p, acc); });
        },
        merge);
}

/// "2,1,3" style, 1-based.
inline std::string to_string(const Perm& p)
{
    std::string s;
    for (int i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i] + 1);
    }
    return s;
}

inline Perm parse_perm(std::string_view text)
{
    std::vector<int> images;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty() || tok.size() > 3 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw error(errc::parse_error, "malformed permutation '" + std::string(text) + "'");
        images.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    try {
        return Perm::from_images(images);
    } catch (const error&) {
        throw error(errc::parse_error, "'" + std::string(text) + "' is not a permutation");
    }
}

} // namespace alphadet
