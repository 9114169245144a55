#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace alphadet {

/// Weakly decreasing sequence of positive integers. Doubles as a Young
/// diagram (English notation, rows top to bottom), a weight, and a cycle type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw error(errc::invalid_argument, "partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw error(errc::invalid_argument, "partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into canonical order.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// (k^n): n rows of length k.
    static Partition rectangle(int k, int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), k)); }
    /// (1^n)
    static Partition column(int n) { return rectangle(1, n); }
    /// (n)
    static Partition row(int n) { return n == 0 ? Partition{} : Partition(std::vector<int>{n}); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const noexcept { return parts_.size(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_rectangular() const noexcept
    {
        return !parts_.empty() && parts_.front() == parts_.back();
    }

    Partition conjugate() const
    {
        std::vector<int> c(static_cast<std::size_t>(largest()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    /// Calls f(row, col) for every cell, 1-based.
    template <class F>
    void for_each_cell(F&& f) const
    {
        for (std::size_t i = 0; i < parts_.size(); ++i)
            for (int j = 1; j <= parts_[i]; ++j)
                f(static_cast<int>(i) + 1, j);
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

inline Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw error(errc::parse_error, "malformed partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const error&) {
        throw error(errc::parse_error, "'" + std::string(text) + "' is not a partition");
    }
}

/// mu! = mu_1! mu_2! ..., the order of the Young subgroup.
inline Integer parts_factorial(const Partition& mu)
{
    Integer f = 1;
    for (int p : mu.parts())
        f *= factorial(static_cast<unsigned>(p));
    return f;
}

inline constexpr int max_partition_size = 12;

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n)
{
    require_cap(n >= 0 && n <= max_partition_size, "partitions_of: n=" + std::to_string(n) + " exceeds 12");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// f^lambda by the hook length formula.
inline std::uint64_t num_standard_tableaux(const Partition& lambda)
{
    require_cap(lambda.size() <= max_partition_size, "num_standard_tableaux: |lambda| exceeds 12");
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    lambda.for_each_cell([&](int i, int j) {
        int arm = lambda[static_cast<std::size_t>(i - 1)] - j;
        int leg = conj[static_cast<std::size_t>(j - 1)] - i;
        hooks *= arm + leg + 1;
    });
    Integer f = factorial(static_cast<unsigned>(lambda.size())) / hooks;
    return f.get_ui();
}

/// prod over cells (i,j) of (1 + (j - i) alpha).
inline PolyA content_poly(const Partition& lambda)
{
    require_cap(lambda.size() <= max_partition_size, "content_poly: |lambda| exceeds 12");
    PolyA f = Rational(1);
    lambda.for_each_cell([&](int i, int j) { f *= PolyA::linear(Rational(j - i)); });
    return f;
}

inline Rational content_poly_at(const Partition& lambda, const Rational& x)
{
    Rational v = 1;
    lambda.for_each_cell([&](int i, int j) { v *= 1 + (j - i) * x; });
    return v;
}

/// Number of semistandard tableaux of shape lambda and weight mu, counted by
/// backtracking over row-major fillings.
inline std::uint64_t kostka_ssyt(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw error(errc::shape_weight_mismatch,
                    "|" + to_string(lambda) + "| != |" + to_string(mu) + "|");
    require_cap(lambda.size() <= 10, "kostka_ssyt: |lambda| exceeds 10");

    const int rows = static_cast<int>(lambda.length());
    const int letters = static_cast<int>(mu.length());
    std::vector<int> remaining(mu.parts());
    // filling[r][c], 1-based letters
    std::vector<std::vector<int>> filling(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        filling[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);

    std::uint64_t count = 0;
    std::function<void(int, int)> place = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        auto& row = filling[static_cast<std::size_t>(r)];
        if (c == static_cast<int>(row.size())) {
            place(r + 1, 0);
            return;
        }
        int lo = c > 0 ? row[static_cast<std::size_t>(c - 1)] : 1;
        if (r > 0)
            lo = std::max(lo, filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= letters; ++v) {
            auto& left = remaining[static_cast<std::size_t>(v - 1)];
            if (left == 0)
                continue;
            --left;
            row[static_cast<std::size_t>(c)] = v;
            place(r, c + 1);
            ++left;
        }
    };
    place(0, 0);
    return count;
}

} // namespace alphadet
