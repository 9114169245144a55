#include <gtest/gtest.h>

#include "alphadet/alphadet.hpp"
#include "oracles.hpp"

using namespace alphadet;

namespace {

Rational Q(long p, long q = 1) { return make_rational(p, q); }

PolyA poly(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return PolyA(std::move(v));
}

template <class F>
void expect_code(errc code, F&& f)
{
    try {
        f();
        ADD_FAILURE() << "no error raised";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

/// Random matrix with small rational entries.
RatMatrix rational_matrix(int rows, int cols, std::uint64_t seed)
{
    Rng rng(seed);
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = rng.small_rational();
    return m;
}

RatMatrix kron_identity_ones_column(int n, int k)
{
    // I_n tensor 1_{k,1}
    RatMatrix m(k * n, n);
    for (int i = 0; i < k * n; ++i)
        m(i, i / k) = 1;
    return m;
}

} // namespace

// ---------------------------------------------------------------------------
// Matrix constructions

TEST(Inflate, Examples)
{
    EXPECT_EQ(inflate(block_indicator(2, 2), 2), block_ones(Partition::rectangle(2, 2)));
    EXPECT_EQ(inflate(kron_identity_ones_column(3, 2), 2), block_ones(Partition::rectangle(2, 3)));
    const RatMatrix col = RatMatrix::from_ints({{5}, {-3}});
    EXPECT_EQ(inflate(col, 2), RatMatrix::from_ints({{5, 5}, {-3, -3}}));
    expect_code(errc::dimension_mismatch, [] { inflate(RatMatrix(3, 2), 2); });
}

TEST(Inflate, Equivariance)
{
    const RatMatrix a = random_matrix(4, 2, 8);
    const RatMatrix w = inflate(a, 2);
    for (const auto& g : young_subgroup(Partition::rectangle(2, 2)))
        EXPECT_EQ(permute_columns(w, g), w);
    for_each_perm(4, [&](const Perm& p) { EXPECT_EQ(inflate(permute_rows(p, a), 2), permute_rows(p, w)); });
}

TEST(BlockOnes, Examples)
{
    EXPECT_EQ(block_ones(Partition::row(4)), RatMatrix::ones(4, 4));
    EXPECT_EQ(block_ones(Partition::column(4)), RatMatrix::identity(4));
    const RatMatrix b = block_ones(Partition::rectangle(3, 2));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            EXPECT_EQ(b(i, j), i / 3 == j / 3 ? 1 : 0);
}

TEST(StructuredOnes, EntryRule)
{
    for (const auto& mu : partitions_of(5)) {
        const auto labels = block_labels(mu);
        for_each_perm(5, [&](const Perm& g) {
            const StructuredOnesMatrix s{g, mu};
            const RatMatrix m = s.materialize();
            const Perm gi = g.inverse();
            for (int r = 0; r < 5; ++r)
                for (int c = 0; c < 5; ++c) {
                    const bool one = labels[static_cast<std::size_t>(gi[r])] == labels[static_cast<std::size_t>(c)];
                    ASSERT_EQ(s.entry(r, c), one);
                    ASSERT_EQ(m(r, c), one ? 1 : 0);
                }
        });
    }
}

// ---------------------------------------------------------------------------
// adet

TEST(Adet, Examples)
{
    EXPECT_EQ(adet_poly(RatMatrix::ones(3, 3)), poly({1, 3, 2}));
    const RatMatrix two = RatMatrix::from_ints({{2, 3}, {5, 7}});
    EXPECT_EQ(adet_poly(two), poly({14, 15}));
    for (int n = 0; n <= 9; ++n)
        EXPECT_EQ(adet_poly(RatMatrix::identity(n)), PolyA(1));
    EXPECT_EQ(adet_poly(RatMatrix(0, 0)), PolyA(1));
}

TEST(Adet, MatchesOracle)
{
    for (int n = 1; n <= 7; ++n)
        for (std::uint64_t s = 0; s < 3; ++s) {
            const RatMatrix a = rational_matrix(n, n, trial_seed(100 + n, s));
            const PolyA p = adet_poly(a);
            EXPECT_EQ(p, oracle::adet(a));
            EXPECT_LE(p.degree(), n - 1);
        }
}

TEST(AdetAt, Specializations)
{
    for (std::uint64_t s = 0; s < 5; ++s) {
        const RatMatrix a = rational_matrix(4, 4, trial_seed(7, s));
        EXPECT_EQ(adet_at(a, -1), oracle::det(a));
        EXPECT_EQ(adet_at(a, 1), oracle::per(a));
        Rational diag = 1;
        for (int i = 0; i < 4; ++i)
            diag *= a(i, i);
        EXPECT_EQ(adet_at(a, 0), diag);
        for (const Rational& x : {Q(-1, 3), Q(2, 7), Q(5)})
            EXPECT_EQ(adet_at(a, x), oracle::adet(a)(x));
    }
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(adet_at(RatMatrix::ones(n, n), 1), Rational(factorial(static_cast<unsigned>(n))));
}

TEST(Adet, Errors)
{
    expect_code(errc::not_square, [] { adet_poly(RatMatrix(2, 3)); });
    expect_code(errc::not_square, [] { adet_at(RatMatrix(2, 3), 1); });
    expect_code(errc::size_cap_exceeded, [] { adet_poly(RatMatrix::identity(10)); });
}

TEST(Adet, CommutesWithPermutationMatrix)
{
    const RatMatrix a = random_matrix(4, 4, 31);
    for_each_perm(4, [&](const Perm& s) { ASSERT_EQ(adet_poly(permute_rows(s, a)), adet_poly(permute_columns(a, s))); });
}

TEST(Adet, ColumnMultilinear)
{
    for (std::uint64_t s = 0; s < 4; ++s) {
        const RatMatrix a = random_matrix(4, 4, trial_seed(3, s));
        const RatMatrix b = random_matrix(4, 4, trial_seed(4, s));
        const Rational c = Q(-5, 3);
        for (int j = 0; j < 4; ++j) {
            RatMatrix a2 = a, mixed = a;
            for (int i = 0; i < 4; ++i) {
                a2(i, j) = b(i, j);
                mixed(i, j) = a(i, j) + c * b(i, j);
            }
            EXPECT_EQ(adet_poly(mixed), adet_poly(a) + adet_poly(a2) * c);
        }
    }
}

TEST(Adet, WeakAlternation)
{
    for (int n : {5, 6})
        for (int k = 1; k <= 3; ++k)
            for (std::uint64_t s = 0; s < 8; ++s) {
                RatMatrix a = random_matrix(n, n, trial_seed(static_cast<std::uint64_t>(n * 10 + k), s));
                for (int j = 1; j <= k; ++j)
                    for (int i = 0; i < n; ++i)
                        a(i, j) = a(i, 0);
                EXPECT_EQ(adet_at(a, Q(-1, k)), 0);
            }
}

TEST(Adet, SerialAndParallelIdentical)
{
    const RatMatrix a = rational_matrix(8, 8, 2024);
    set_workers(1);
    const PolyA serial = adet_poly(a);
    const Rational serial_at = adet_at(a, Q(-1, 3));
    for (unsigned w : {2u, 5u, 8u}) {
        set_workers(w);
        EXPECT_EQ(to_json(adet_poly(a)).dump(), to_json(serial).dump());
        EXPECT_EQ(adet_at(a, Q(-1, 3)), serial_at);
    }
    set_workers(1);
}

// ---------------------------------------------------------------------------
// adet[alpha, beta]

TEST(Adet2, Examples)
{
    EXPECT_EQ(adet2_poly(RatMatrix::identity(2)), PolyAB({{Q(1), Q(0)}, {Q(0), Q(1)}}));
    for (int n = 1; n <= 5; ++n) {
        const PolyA f = content_poly(Partition::row(n));
        EXPECT_EQ(adet2_poly(RatMatrix::ones(n, n)), PolyAB::outer(f, f));
    }
    for (std::uint64_t s = 0; s < 3; ++s)
        EXPECT_TRUE(polyab_symmetric(adet2_poly(random_matrix(4, 4, s))));
    expect_code(errc::size_cap_exceeded, [] { adet2_poly(RatMatrix::identity(7)); });
}

TEST(Adet2, MatchesOracleAndColumnSum)
{
    for (int n = 1; n <= 5; ++n) {
        const RatMatrix a = rational_matrix(n, n, trial_seed(55, static_cast<std::uint64_t>(n)));
        const PolyAB p = adet2_poly(a);
        EXPECT_EQ(p, oracle::adet2(a));
        for (const Rational& y : {Q(1, 2), Q(-2, 3)}) {
            PolyA s;
            for_each_perm(n, [&](const Perm& g) { s += adet_poly(permute_columns(a, g)) * pow(y, static_cast<unsigned>(nu(g))); });
            EXPECT_EQ(p.eval_beta(y), s);
        }
    }
}

TEST(Adet2, ImmanantDecomposition)
{
    for (int n = 1; n <= 5; ++n) {
        const RatMatrix a = random_matrix(n, n, trial_seed(66, static_cast<std::uint64_t>(n)));
        PolyAB rhs;
        for (const auto& l : partitions_of(n)) {
            const PolyA f = content_poly(l);
            rhs += PolyAB::outer(f, f) * (Rational(static_cast<long>(num_standard_tableaux(l))) * immanant(l, a));
        }
        rhs *= Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
        EXPECT_EQ(adet2_poly(a), rhs);
    }
}

TEST(Adet2, KroneckerOnesAsKostkaSum)
{
    for (auto [k, n] : {std::pair{2, 2}, {1, 3}, {3, 1}, {3, 2}, {2, 3}}) {
        const Partition rect = Partition::rectangle(k, n);
        PolyAB rhs;
        for (const auto& l : partitions_of(k * n)) {
            const PolyA f = content_poly(l);
            const auto weight = static_cast<long>(num_standard_tableaux(l) * kostka_ssyt(l, rect));
            rhs += PolyAB::outer(f, f) * Rational(weight);
        }
        rhs *= Rational(parts_factorial(rect)) / Rational(factorial(static_cast<unsigned>(k * n)));
        EXPECT_EQ(adet2_poly(block_ones(rect)), rhs) << k << "," << n;
    }
}

TEST(Adet2, SerialAndParallelIdentical)
{
    const RatMatrix a = rational_matrix(6, 6, 77);
    set_workers(1);
    const PolyAB serial = adet2_poly(a);
    set_workers(4);
    EXPECT_EQ(to_json(adet2_poly(a)).dump(), to_json(serial).dump());
    set_workers(1);
}

// ---------------------------------------------------------------------------
// Structured fast path

TEST(Adet2Structured, Examples)
{
    for (int n = 1; n <= 6; ++n)
        for (const Rational& x : {Q(-1, 2), Q(3)}) {
            const Rational y = Q(1, 3);
            EXPECT_EQ(adet2_structured({Perm::identity(n), Partition::column(n)}, x, y), content_poly_at(Partition::row(n), x * y));
        }
    EXPECT_EQ(adet2_structured({Perm::identity(4), Partition({2, 2})}, Q(-1, 2), Q(1, 2)), Q(3, 16));
    EXPECT_EQ(oracle::adet2(block_ones(Partition({2, 2})))(Q(-1, 2), Q(1, 2)), Q(3, 16));
}

TEST(Adet2Structured, MatchesOracleExhaustivelyAtFour)
{
    const Rational x = Q(-1, 2), y = Q(2, 5);
    for (const auto& mu : partitions_of(4))
        for_each_perm(4, [&](const Perm& g) {
            const StructuredOnesMatrix s{g, mu};
            ASSERT_EQ(adet2_structured(s, x, y), oracle::adet2(s.materialize())(x, y));
        });
}

TEST(Adet2Structured, GateSuitePasses)
{
    const SuiteReport r = verify_structured_gate(0x5EED);
    EXPECT_EQ(r.cases.size(), 20u);
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
}

TEST(Adet2Structured, ParallelIdenticalAtEight)
{
    const StructuredOnesMatrix s{Rng(3).perm(8), Partition({3, 3, 2})};
    set_workers(1);
    const Rational serial = adet2_structured(s, Q(-1, 2), Q(1, 4));
    set_workers(8);
    EXPECT_EQ(adet2_structured(s, Q(-1, 2), Q(1, 4)), serial);
    set_workers(1);
}

TEST(Adet2Structured, Caps)
{
    expect_code(errc::size_cap_exceeded, [] { adet2_structured({Perm::identity(10), Partition::column(10)}, 1, 1); });
    expect_code(errc::dimension_mismatch, [] { adet2_structured({Perm::identity(4), Partition({2, 1})}, 1, 1); });
}

TEST(RectFormula, KostkaValues)
{
    for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}})
        for (const auto& mu : partitions_of(k * n)) {
            const Partition rect = Partition::rectangle(k, n);
            EXPECT_EQ(kostka_rect_formula(rect, mu), Rational(static_cast<long>(kostka_ssyt(rect, mu))));
        }
    EXPECT_EQ(kostka_rect_formula(Partition({2, 2}), Partition::column(4)), 2);
    expect_code(errc::invalid_argument, [] { kostka_rect_formula(Partition({2, 1}), Partition({3})); });
}

// ---------------------------------------------------------------------------
// Wreath determinant

TEST(Wrdet, Examples)
{
    for (std::uint64_t s = 0; s < 4; ++s) {
        const RatMatrix a = rational_matrix(4, 4, s);
        EXPECT_EQ(wrdet(a, 1), oracle::det(a));
    }
    for (auto [k, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 3}}) {
        const Rational base = Rational(factorial(static_cast<unsigned>(k))) / pow(Rational(k), static_cast<unsigned>(k));
        EXPECT_EQ(wrdet(block_indicator(n, k), k), pow(base, static_cast<unsigned>(n)));
    }
    EXPECT_EQ(wrdet(block_indicator(2, 2), 2), Q(1, 4));
    const RatMatrix a = RatMatrix::from_ints({{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    EXPECT_EQ(wrdet(a, 2), Q(-3, 8));
    EXPECT_EQ(oracle::wrdet2_minor_sum(a), Q(-3, 8));
    EXPECT_EQ(oracle::adet_at(inflate(a, 2), Q(-1, 2)), Q(-3, 8));
    expect_code(errc::dimension_mismatch, [] { wrdet(RatMatrix(3, 2), 2); });
}

TEST(Wrdet, MinorSumOracle)
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        const RatMatrix a = rational_matrix(4, 2, trial_seed(9, s));
        EXPECT_EQ(wrdet(a, 2), oracle::wrdet2_minor_sum(a));
    }
}

TEST(Wrdet, RelativeInvariance)
{
    for (std::uint64_t s = 0; s < 10; ++s) {
        const RatMatrix a = random_matrix(4, 2, trial_seed(12, s));
        const RatMatrix q = rational_matrix(2, 2, trial_seed(13, s));
        const Rational d = oracle::det(q);
        EXPECT_EQ(wrdet(oracle::matmul(a, q), 2), wrdet(a, 2) * d * d);
    }
    const RatMatrix a = random_matrix(6, 2, 5);
    const RatMatrix q = rational_matrix(2, 2, 6);
    EXPECT_EQ(wrdet(oracle::matmul(a, q), 3), wrdet(a, 3) * pow(oracle::det(q), 3));
}

// ---------------------------------------------------------------------------
// Averaging identities

TEST(TheoremLhs, Examples)
{
    EXPECT_EQ(theorem_lhs(block_indicator(2, 2), 2), PolyA(std::vector<Rational>{Q(1, 4), 0, Q(-1, 4)}));
    for (int n = 1; n <= 4; ++n) {
        const RatMatrix a = random_matrix(n, n, static_cast<std::uint64_t>(n));
        EXPECT_EQ(theorem_lhs(a, 1), content_poly(Partition::column(n)) * oracle::det(a));
    }
    const RatMatrix a = random_matrix(6, 2, 600);
    EXPECT_EQ(theorem_lhs(a, 3), content_poly(Partition::rectangle(3, 2)) * wrdet(a, 3));
    expect_code(errc::size_cap_exceeded, [] { theorem_lhs(RatMatrix(8, 4), 2); });
}

TEST(TheoremLhs, MatchesDirectDefinition)
{
    const RatMatrix a = rational_matrix(4, 2, 44);
    const RatMatrix w = inflate(a, 2);
    PolyA direct;
    for_each_perm(4, [&](const Perm& s) { direct += oracle::adet(permute_columns(w, s)) * pow(Q(-1, 2), static_cast<unsigned>(nu(s))); });
    EXPECT_EQ(theorem_lhs(a, 2), direct);
}

TEST(TheoremLhs, ColumnScalingIsPowerK)
{
    const RatMatrix a = random_matrix(6, 2, 3);
    RatMatrix b = a;
    const Rational c = Q(-3, 2);
    for (int i = 0; i < 6; ++i)
        b(i, 1) *= c;
    EXPECT_EQ(theorem_lhs(b, 3), theorem_lhs(a, 3) * pow(c, 3));
}

TEST(TheoremLhs, LeftYoungInvariance)
{
    const RatMatrix a = random_matrix(4, 2, 808);
    const PolyA base = theorem_lhs(a, 2);
    for (const auto& g : young_subgroup(Partition::rectangle(2, 2)))
        EXPECT_EQ(theorem_lhs(permute_rows(g, a), 2), base);
}

TEST(SubgroupAverage, Examples)
{
    const RatMatrix a = random_matrix(5, 5, 1);
    EXPECT_EQ(subgroup_avg_adet(a, 1), adet_poly(a));
    for (int n = 1; n <= 6; ++n) {
        const PolyA expect = content_poly(Partition::row(n)) * Rational(factorial(static_cast<unsigned>(n)));
        EXPECT_EQ(subgroup_avg_adet(RatMatrix::ones(n, n), n), expect);
    }
    const PolyA avg = subgroup_avg_adet(a, 3);
    EXPECT_NO_THROW(poly_exact_div(avg, poly({1, 1}) * poly({1, 2})));
    EXPECT_EQ(poly_divmod(avg, rising_content(3)).second, PolyA());
    expect_code(errc::invalid_argument, [] { subgroup_avg_adet(RatMatrix::identity(3), 4); });
    expect_code(errc::size_cap_exceeded, [] { subgroup_avg_adet(RatMatrix::identity(8), 2); });
}

TEST(SubgroupAverage, FullGroupIsContentTimesPermanent)
{
    for (std::uint64_t s = 0; s < 3; ++s) {
        const RatMatrix a = random_matrix(5, 5, trial_seed(70, s));
        EXPECT_EQ(subgroup_avg_adet(a, 5), content_poly(Partition::row(5)) * oracle::per(a));
    }
}

TEST(RisingContent, IsRowContent)
{
    for (int k = 1; k <= 8; ++k)
        EXPECT_EQ(rising_content(k), content_poly(Partition::row(k)));
}

// ---------------------------------------------------------------------------
// (det X)^k coefficients

TEST(DetPowerCoeff, Examples)
{
    for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {3, 3}, {2, 4}}) {
        BlockProfile m(n, k);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = k;
        EXPECT_EQ(det_power_coeff(m, k), 1);
    }
    BlockProfile m(2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    EXPECT_EQ(det_power_coeff(m, 2), -2);
    BlockProfile anti(2, 2);
    anti.at(0, 1) = anti.at(1, 0) = 2;
    EXPECT_EQ(det_power_coeff(anti, 2), 1);
    EXPECT_EQ(det_power_coeff(block_profile(Perm::cycle(4, {2, 3}), 2, 2), 2), -2);
}

TEST(DetPowerCoeff, SumOverProfilesOfAllOnes)
{
    // (det 1_n)^k = 0 for n >= 2, so the coefficients over all profiles sum to 0
    Integer total = 0;
    for (int a = 0; a <= 3; ++a) {
        BlockProfile m(2, 3);
        m.at(0, 0) = a;
        m.at(0, 1) = 3 - a;
        m.at(1, 0) = 3 - a;
        m.at(1, 1) = a;
        total += det_power_coeff(m, 3);
    }
    EXPECT_EQ(total, 0);
}

TEST(DetPowerCoeff, Cap)
{
    expect_code(errc::size_cap_exceeded, [] { det_power_coeff(BlockProfile(5, 4), 4); });
}
