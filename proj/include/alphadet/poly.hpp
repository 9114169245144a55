#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace alphadet {

/// Dense univariate polynomial in alpha. coeffs()[i] multiplies alpha^i;
/// trailing zeros are always stripped so the zero polynomial has no
/// coefficients.
class PolyA {
public:
    PolyA() = default;
    PolyA(const Rational& constant) : coeffs_{constant} { trim(); }
    explicit PolyA(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PolyA monomial(std::size_t degree, const Rational& c = 1)
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return PolyA(std::move(v));
    }

    /// 1 + c*alpha
    static PolyA linear(const Rational& c) { return PolyA(std::vector<Rational>{1, c}); }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    PolyA& operator+=(const PolyA& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    PolyA& operator-=(const PolyA& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    PolyA& operator*=(const Rational& c)
    {
        for (auto& a : coeffs_)
            a *= c;
        trim();
        return *this;
    }

    friend PolyA operator+(PolyA a, const PolyA& b) { return a += b; }
    friend PolyA operator-(PolyA a, const PolyA& b) { return a -= b; }
    friend PolyA operator*(PolyA a, const Rational& c) { return a *= c; }
    friend PolyA operator*(const Rational& c, PolyA a) { return a *= c; }
    friend PolyA operator-(PolyA a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    friend PolyA operator*(const PolyA& a, const PolyA& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyA(std::move(r));
    }
    PolyA& operator*=(const PolyA& o) { return *this = *this * o; }

    friend bool operator==(const PolyA&, const PolyA&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact polynomial long division.
inline std::pair<PolyA, PolyA> poly_divmod(const PolyA& p, const PolyA& d)
{
    if (d.is_zero())
        throw error(errc::division_by_zero_poly, "division by the zero polynomial");
    std::vector<Rational> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    if (rem.size() < dc.size())
        return {PolyA{}, p};
    std::vector<Rational> quo(rem.size() - dd);
    for (std::size_t i = quo.size(); i-- > 0;) {
        Rational c = rem[i + dd] / dc[dd];
        quo[i] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i + j] -= c * dc[j];
    }
    return {PolyA(std::move(quo)), PolyA(std::move(rem))};
}

/// Returns q with p = q*d, or throws NotDivisible.
inline PolyA poly_exact_div(const PolyA& p, const PolyA& d)
{
    auto [q, r] = poly_divmod(p, d);
    if (!r.is_zero())
        throw error(errc::not_divisible, "nonzero remainder of degree " + std::to_string(r.degree()));
    return q;
}

inline Rational poly_eval(const PolyA& p, const Rational& x) { return p(x); }

/// Dense bivariate polynomial; at(i, j) multiplies alpha^i beta^j. Trailing
/// all-zero rows and columns are stripped.
class PolyAB {
public:
    PolyAB() = default;
    explicit PolyAB(std::vector<std::vector<Rational>> grid) : grid_(std::move(grid)) { trim(); }

    /// Grid of integer counts, scaled by `scale`.
    template <class Grid>
    static PolyAB from_counts(const Grid& counts, const Rational& scale)
    {
        std::vector<std::vector<Rational>> g(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) {
            g[i].resize(counts[i].size());
            for (std::size_t j = 0; j < counts[i].size(); ++j)
                g[i][j] = Rational(counts[i][j]) * scale;
        }
        return PolyAB(std::move(g));
    }

    static PolyAB outer(const PolyA& a, const PolyA& b)
    {
        std::vector<std::vector<Rational>> g(a.coeffs().size(), std::vector<Rational>(b.coeffs().size()));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g[i].size(); ++j)
                g[i][j] = a.coeffs()[i] * b.coeffs()[j];
        return PolyAB(std::move(g));
    }

    std::size_t rows() const noexcept { return grid_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool is_zero() const noexcept { return grid_.empty(); }

    Rational at(std::size_t i, std::size_t j) const
    {
        return i < grid_.size() && j < grid_[i].size() ? grid_[i][j] : Rational(0);
    }

    /// Rectangular view, rows() x cols().
    std::vector<std::vector<Rational>> grid() const
    {
        std::vector<std::vector<Rational>> g(rows(), std::vector<Rational>(cols_));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < grid_[i].size(); ++j)
                g[i][j] = grid_[i][j];
        return g;
    }

    Rational operator()(const Rational& x, const Rational& y) const { return eval_beta(y)(x); }

    /// Specializes beta, leaving a polynomial in alpha.
    PolyA eval_beta(const Rational& y) const
    {
        std::vector<Rational> out(grid_.size());
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            Rational acc = 0;
            for (auto it = grid_[i].rbegin(); it != grid_[i].rend(); ++it)
                acc = acc * y + *it;
            out[i] = acc;
        }
        return PolyA(std::move(out));
    }

    PolyAB transposed() const
    {
        std::vector<std::vector<Rational>> t(cols_, std::vector<Rational>(rows()));
        for (std::size_t i = 0; i < grid_.size(); ++i)
            for (std::size_t j = 0; j < grid_[i].size(); ++j)
                t[j][i] = grid_[i][j];
        return PolyAB(std::move(t));
    }

    PolyAB& operator+=(const PolyAB& o)
    {
        if (o.grid_.size() > grid_.size())
            grid_.resize(o.grid_.size());
        for (std::size_t i = 0; i < o.grid_.size(); ++i) {
            if (o.grid_[i].size() > grid_[i].size())
                grid_[i].resize(o.grid_[i].size());
            for (std::size_t j = 0; j < o.grid_[i].size(); ++j)
                grid_[i][j] += o.grid_[i][j];
        }
        trim();
        return *this;
    }

    PolyAB& operator*=(const Rational& c)
    {
        for (auto& row : grid_)
            for (auto& a : row)
                a *= c;
        trim();
        return *this;
    }

    friend PolyAB operator+(PolyAB a, const PolyAB& b) { return a += b; }
    friend PolyAB operator*(PolyAB a, const Rational& c) { return a *= c; }
    friend bool operator==(const PolyAB& a, const PolyAB& b) { return a.grid_ == b.grid_; }

private:
    void trim()
    {
        for (auto& row : grid_)
            while (!row.empty() && row.back() == 0)
                row.pop_back();
        while (!grid_.empty() && grid_.back().empty())
            grid_.pop_back();
        cols_ = 0;
        for (const auto& row : grid_)
            cols_ = std::max(cols_, row.size());
    }

    // rows individually trimmed; cols_ is the widest row
    std::vector<std::vector<Rational>> grid_;
    std::size_t cols_ = 0;
};

inline bool polyab_symmetric(const PolyAB& p) { return p == p.transposed(); }

} // namespace alphadet
