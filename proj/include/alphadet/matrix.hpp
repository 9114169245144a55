#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"
#include "rational.hpp"

namespace alphadet {

/// Dense row-major matrix of exact rationals. Indices are 0-based.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols))
    {
        if (rows < 0 || cols < 0)
            throw error(errc::dimension_mismatch, "negative matrix dimension");
    }

    /// From nested rows; all rows must have equal length.
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows)
    {
        const int r = static_cast<int>(rows.size());
        const int c = r ? static_cast<int>(rows.front().size()) : 0;
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw error(errc::dimension_mismatch, "ragged matrix rows");
            for (int j = 0; j < c; ++j)
                m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    static RatMatrix from_ints(const std::vector<std::vector<long>>& rows)
    {
        std::vector<std::vector<Rational>> q;
        for (const auto& row : rows)
            q.emplace_back(row.begin(), row.end());
        return from_rows(q);
    }

    static RatMatrix identity(int n)
    {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static RatMatrix ones(int rows, int cols)
    {
        RatMatrix m(rows, cols);
        for (auto& x : m.e_)
            x = 1;
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(int i, int j) { return e_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return e_[index(i, j)]; }

    RatMatrix transposed() const
    {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw error(errc::dimension_mismatch, "matrix product of " + a.shape() + " and " + b.shape());
        RatMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int l = 0; l < a.cols_; ++l) {
                const Rational& x = a(i, l);
                if (x == 0)
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    c(i, j) += x * b(l, j);
            }
        return c;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    std::size_t index(int i, int j) const noexcept
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> e_;
};

/// P(sigma) = (delta_{i, sigma(j)}): column j carries its 1 in row sigma(j).
inline RatMatrix perm_matrix(const Perm& sigma)
{
    RatMatrix m(sigma.size(), sigma.size());
    for (int j = 0; j < sigma.size(); ++j)
        m(sigma[j], j) = 1;
    return m;
}

/// A * P(sigma): column j of the result is column sigma(j) of A.
inline RatMatrix permute_columns(const RatMatrix& a, const Perm& sigma)
{
    if (a.cols() != sigma.size())
        throw error(errc::dimension_mismatch, "column permutation degree mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, sigma[j]);
    return m;
}

/// P(sigma) * A: row sigma(i) of the result is row i of A.
inline RatMatrix permute_rows(const Perm& sigma, const RatMatrix& a)
{
    if (a.rows() != sigma.size())
        throw error(errc::dimension_mismatch, "row permutation degree mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(sigma[i], j) = a(i, j);
    return m;
}

namespace detail {

/// A = entries / denom with integer entries; the inner loops run on these.
struct ScaledIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Integer> entries;
    Integer denom = 1;

    const Integer& operator()(int i, int j) const
    {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
    }
};

inline ScaledIntMatrix scale_to_integers(const RatMatrix& a)
{
    ScaledIntMatrix s;
    s.rows = a.rows();
    s.cols = a.cols();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), a(i, j).get_den_mpz_t());
    s.entries.reserve(static_cast<std::size_t>(a.rows() * a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            s.entries.push_back(a(i, j).get_num() * (s.denom / a(i, j).get_den()));
    return s;
}

} // namespace detail

} // namespace alphadet
