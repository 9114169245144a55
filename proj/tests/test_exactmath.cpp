#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "alphadet/alphadet.hpp"

using namespace alphadet;

namespace {

PolyA poly(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return PolyA(std::move(v));
}

PolyA random_poly(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5), deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = make_rational(num(rng), den(rng));
    return PolyA(std::move(c));
}

} // namespace

TEST(Rational, CanonicalForm)
{
    const Rational q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(q), "-3/2");
    EXPECT_EQ(to_string(make_rational(8, 4)), "2");
    EXPECT_EQ(make_rational(2, 4), make_rational(1, 2));
}

TEST(Rational, ParseRoundTrip)
{
    for (const char* s : {"0", "7", "-7", "3/4", "-12/5"})
        EXPECT_EQ(to_string(parse_rational(s)), s);
    EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
    EXPECT_EQ(parse_rational("\xE2\x88\x92" "1/2"), make_rational(-1, 2));
}

TEST(Rational, ParseErrors)
{
    for (const char* s : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3"}) {
        try {
            parse_rational(s);
            ADD_FAILURE() << "accepted " << s;
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::parse_error) << s;
        }
    }
}

TEST(Rational, ShuffledSummationIsIdentical)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    std::vector<Rational> xs;
    for (int i = 0; i < 1000; ++i)
        xs.push_back(make_rational(num(rng), den(rng)));
    Rational reference = 0;
    for (const auto& x : xs)
        reference += x;
    for (int round = 0; round < 5; ++round) {
        std::shuffle(xs.begin(), xs.end(), rng);
        Rational s = 0;
        for (const auto& x : xs)
            s += x;
        EXPECT_EQ(to_string(s), to_string(reference));
    }
}

TEST(PolyA, ZeroIsEmpty)
{
    EXPECT_TRUE(PolyA().coeffs().empty());
    EXPECT_TRUE(poly({0, 0, 0}).is_zero());
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(poly({1, -1}) + poly({-1, 1}), PolyA());
}

TEST(PolyA, Eval)
{
    const PolyA p = poly({1, 3, 2});
    EXPECT_EQ(poly_eval(p, -1), 0);
    EXPECT_EQ(poly_eval(p, 0), 1);
    EXPECT_EQ(poly_eval(content_poly(Partition::row(3)), 1), 6);
    EXPECT_EQ(poly_eval(p, make_rational(-1, 2)), 0);
}

TEST(PolyA, ExactDivision)
{
    EXPECT_EQ(poly_exact_div(poly({1, 3, 2}), poly({1, 1})), poly({1, 2}));
    EXPECT_EQ(poly_exact_div(poly({1, 0, -1}), poly({1, -1})), poly({1, 1}));
    try {
        poly_exact_div(poly({1, 1}), poly({1, 2}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_divisible);
    }
    try {
        poly_exact_div(poly({1, 1}), PolyA());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::division_by_zero_poly);
    }
}

TEST(PolyA, DivmodRemainder)
{
    const auto [q, r] = poly_divmod(poly({1, 1}), poly({1, 2}));
    EXPECT_EQ(q, PolyA(make_rational(1, 2)));
    EXPECT_EQ(r, PolyA(make_rational(1, 2)));
}

TEST(PolyA, RandomDivisionRoundTrip)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const PolyA p = random_poly(rng, 6);
        PolyA q = random_poly(rng, 6);
        if (q.is_zero())
            q = PolyA(1);
        EXPECT_EQ(poly_exact_div(p * q, q), p);
    }
}

TEST(PolyA, EvalIsMultiplicative)
{
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int i = 0; i < 50; ++i) {
        const PolyA p = random_poly(rng, 5), q = random_poly(rng, 5);
        const Rational x = make_rational(num(rng), den(rng));
        EXPECT_EQ(poly_eval(p * q, x), poly_eval(p, x) * poly_eval(q, x));
    }
}

TEST(PolyAB, Symmetry)
{
    const PolyAB one_plus_ab({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    EXPECT_TRUE(polyab_symmetric(one_plus_ab));
    const PolyAB alpha({{Rational(0)}, {Rational(1)}});
    EXPECT_FALSE(polyab_symmetric(alpha));
    EXPECT_TRUE(polyab_symmetric(PolyAB()));
}

TEST(PolyAB, TrimsTrailingZeros)
{
    const PolyAB p({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
    EXPECT_EQ(p.rows(), 1u);
    EXPECT_EQ(p.cols(), 1u);
    EXPECT_EQ(p(make_rational(3), make_rational(5)), 1);
}

TEST(PolyAB, EvalAndOuter)
{
    const PolyAB p = PolyAB::outer(poly({1, 3, 2}), poly({1, -1}));
    EXPECT_EQ(p(2, 3), Rational(15 * -2));
    EXPECT_EQ(p.eval_beta(1), PolyA());
    EXPECT_EQ(p.transposed()(3, 2), p(2, 3));
}

TEST(Json, PolyRoundTrip)
{
    const PolyA p(std::vector<Rational>{make_rational(-1, 2), 0, 3});
    const json j = to_json(p);
    EXPECT_EQ(j.dump(), R"(["-1/2","0","3"])");
    EXPECT_EQ(poly_from_json(j), p);
}
