#include "gammalgo/beta_adic.hpp"
#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gammalgo;

namespace {

DigitWord word(const std::string &s) { return DigitWord::parse(s); }

ZBetaElem beta_power(const PisotBase &base, std::size_t n)
{
    ZBetaElem p(1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        p = zb_mul_beta(base, p);
    }
    return p;
}

} // namespace

TEST_CASE("digit map is the nonnegative residue modulo b")
{
    CHECK(digit(make_base(2, 2), ZBetaElem(2, 0)) == 0);
    CHECK(digit(make_base(3, 3), ZBetaElem(5, -1)) == 2);
    CHECK(digit(make_base(2, 2), ZBetaElem(-3, 1)) == 1);
    CHECK(digit(make_base(4, 2), ZBetaElem(-8, 5)) == 0);
}

TEST_CASE("shift satisfies z = digit(z) + beta * shift(z)")
{
    CHECK(shift(make_base(2, 2), ZBetaElem(2, 0)) == ZBetaElem(-2, 1));
    CHECK(shift(make_base(4, 4), ZBetaElem(4, 0)) == ZBetaElem(-4, 1));
    CHECK(shift(make_base(5, 3), ZBetaElem(0, 0)) == ZBetaElem(0, 0));

    auto rng = testutil::make_rng(10);
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {3, 2}, {6, 4}, {7, 7}}) {
        PisotBase base = make_base(a, b);
        for (int i = 0; i < 100; ++i) {
            ZBetaElem z(testutil::rand_integer(rng, 80), testutil::rand_integer(rng, 80));
            Integer u = digit(base, z);
            ZBetaElem back = zb_mul_beta(base, shift(base, z));
            back.x0 += u;
            REQUIRE(back == z);
        }
    }
}

TEST_CASE("expansion prefixes match the hand-checked words")
{
    CHECK(expand_prefix(make_base(4, 4), ZBetaElem(4, 0), 4) == word("0013"));
    CHECK(expand_prefix(make_base(3, 3), ZBetaElem(21, 0), 12) == word("001200020201"));
    CHECK(expand_prefix(make_base(5, 2), ZBetaElem(0, 0), 7) == word("0000000"));
    CHECK(expand_prefix(make_base(2, 2), ZBetaElem(2, 0), 4) == word("0011"));
}

TEST_CASE("prefix evaluation at the conjugate")
{
    PisotBase base = make_base(4, 4);
    CHECK(to_decimal(eval_prefix(base, word("0013")), 4) == "-1.0193");
    CHECK(eval_prefix(base, DigitWord()) == base.rational(0));
    CHECK(eval_prefix(base, word("1")) == base.rational(1));
    // Direct polynomial identity: P_{0013}(x) = x^2 + 3x^3 at x = beta'.
    const QuadElem &bc = base.beta_conj();
    CHECK(eval_prefix(base, word("0013")) == bc * bc + bc * bc * bc * Rational(3));
}

TEST_CASE("reconstruction: z = sum u_i beta^i + beta^n residue")
{
    auto rng = testutil::make_rng(11);
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {3, 2}, {6, 4}, {5, 5}, {9, 3}}) {
        PisotBase base = make_base(a, b);
        for (int i = 0; i < 50; ++i) {
            ZBetaElem z(testutil::rand_integer(rng, 60), testutil::rand_integer(rng, 60));
            std::size_t n = 1 + static_cast<std::size_t>(rng() % 12);
            AutomatonRun run = run_automaton(base, z, n);
            ZBetaElem sum = eval_prefix_at_beta(base, run.prefix);
            ZBetaElem rebuilt = sum + zb_mul(base, beta_power(base, n), run.residue);
            REQUIRE(rebuilt == z);
        }
    }
}

TEST_CASE("round-trip: the expansion of P_w(beta) starts with w")
{
    auto rng = testutil::make_rng(12);
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {4, 3}, {6, 4}, {7, 7}, {9, 3}}) {
        PisotBase base = make_base(a, b);
        for (int i = 0; i < 80; ++i) {
            std::size_t len = 1 + static_cast<std::size_t>(rng() % 24);
            DigitWord w;
            for (std::size_t k = 0; k < len; ++k) {
                w.push_back(Integer(rng() % static_cast<std::uint64_t>(b)));
            }
            ZBetaElem z = eval_prefix_at_beta(base, w);
            REQUIRE(expand_prefix(base, z, len) == w);
        }
    }
}

TEST_CASE("prefix congruence modulo b^n")
{
    auto rng = testutil::make_rng(13);
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {3, 2}, {6, 4}, {5, 5}, {7, 3}}) {
        PisotBase base = make_base(a, b);
        for (int i = 0; i < 60; ++i) {
            std::size_t n = 1 + static_cast<std::size_t>(rng() % 8);
            Integer bn = boost::multiprecision::pow(Integer(b), static_cast<unsigned>(n));
            Integer j = testutil::rand_integer(rng, 64);
            Integer jp = j + bn * testutil::rand_integer(rng, 32);
            REQUIRE(expand_prefix(base, ZBetaElem(j, 0), n) ==
                    expand_prefix(base, ZBetaElem(jp, 0), n));
        }
    }
}

TEST_CASE("divisible case doubles the congruent prefix length")
{
    auto rng = testutil::make_rng(14);
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {6, 3}, {8, 4}, {12, 6}}) {
        PisotBase base = make_base(a, b);
        for (int i = 0; i < 60; ++i) {
            std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
            Integer bn = boost::multiprecision::pow(Integer(b), static_cast<unsigned>(n));
            Integer j = testutil::rand_integer(rng, 64);
            Integer jp = j + bn * testutil::rand_integer(rng, 32);
            REQUIRE(expand_prefix(base, ZBetaElem(j, 0), 2 * n) ==
                    expand_prefix(base, ZBetaElem(jp, 0), 2 * n));
        }
    }
}

TEST_CASE("congruence ladder values")
{
    PisotBase b22 = make_base(2, 2);
    CongruenceLadder l22 = s_ladder(b22, 3);
    CHECK(l22.s == std::vector<Integer>{1, 2, 2, 4});

    PisotBase b32 = make_base(3, 2);
    CongruenceLadder l32 = s_ladder(b32, 2);
    CHECK(l32.s == std::vector<Integer>{1, 2, 4});

    // When b divides a, beta^{2n} Z[beta] = b^n Z[beta], so s_{2n} = b^n.
    for (auto [a, b] : {std::pair<int, int>{4, 4}, {6, 3}, {12, 6}}) {
        PisotBase base = make_base(a, b);
        CongruenceLadder ladder = s_ladder(base, 8);
        for (std::size_t n = 0; 2 * n <= 8; ++n) {
            REQUIRE(ladder.s[2 * n] ==
                    boost::multiprecision::pow(Integer(b), static_cast<unsigned>(n)));
        }
    }
}

TEST_CASE("ladder coherence and divisibility invariants")
{
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {3, 2}, {6, 4}, {10, 4}, {15, 9}}) {
        PisotBase base = make_base(a, b);
        CongruenceLadder ladder = s_ladder(base, 8);
        Integer bn = 1;
        for (std::size_t n = 1; n <= 8; ++n) {
            bn *= b;
            REQUIRE(ladder.s[n] % ladder.s[n - 1] == 0);
            REQUIRE(bn % ladder.s[n] == 0);
            REQUIRE(ladder.r[n] == ladder.s[n] / ladder.s[n - 1]);
            REQUIRE(expand_prefix(base, ZBetaElem(ladder.s[n], 0), n).all_zero());
            // No smaller multiple of s_{n-1} lies in beta^n Z[beta].
            for (Integer m = ladder.s[n - 1]; m < ladder.s[n]; m += ladder.s[n - 1]) {
                REQUIRE(!expand_prefix(base, ZBetaElem(m, 0), n).all_zero());
            }
            // sigma_n reconstructs s_n: beta^n * sigma_n = s_n.
            ZBetaElem back = zb_mul(base, beta_power(base, n), ladder.sigma[n]);
            REQUIRE(back == ZBetaElem(ladder.s[n], 0));
        }
    }
}

TEST_CASE("binomial congruence for b^n / beta^(2n) when b divides a")
{
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {6, 3}, {8, 4}}) {
        PisotBase base = make_base(a, b);
        Integer c = Integer(a) / b;
        for (unsigned n = 0; n <= 6; ++n) {
            Integer bn = boost::multiprecision::pow(Integer(b), n);
            AutomatonRun run = run_automaton(base, ZBetaElem(bn, 0), 2 * n);
            REQUIRE(run.prefix.all_zero());
            // 1 - n c beta + C(n+1,2) c^2 beta^2 - C(n+2,3) c^3 beta^3,
            // reduced to the (1, beta) basis.
            Integer c2 = Integer(n + 1) * n / 2;
            Integer c3 = Integer(n + 2) * (n + 1) * n / 6;
            ZBetaElem expect(1, -Integer(n) * c);
            ZBetaElem beta2(base.b(), base.a());
            ZBetaElem beta3 = zb_mul_beta(base, beta2);
            expect = expect + beta2 * (c2 * c * c) - beta3 * (c3 * c * c * c);
            REQUIRE(expand_prefix(base, run.residue - expect, 4).all_zero());
        }
    }
}

TEST_CASE("paired-step sigma agrees with the automaton residue")
{
    for (auto [a, b] : {std::pair<int, int>{2, 2}, {6, 3}, {12, 6}}) {
        PisotBase base = make_base(a, b);
        Integer c = Integer(a) / b;
        ZBetaElem sigma(1, 0);
        Integer bn = 1;
        for (unsigned n = 1; n <= 6; ++n) {
            sigma = zb_mul(base, sigma, ZBetaElem(1 + Integer(a) * c, -c));
            bn *= b;
            REQUIRE(sigma == run_automaton(base, ZBetaElem(bn, 0), 2 * n).residue);
        }
    }
}

TEST_CASE("digit words render and parse")
{
    DigitWord w = DigitWord::parse("0013");
    CHECK(w.str() == "0013");
    CHECK(w.size() == 4);
    DigitWord wide;
    wide.push_back(0);
    wide.push_back(11);
    wide.push_back(3);
    CHECK(wide.str() == "0.11.3");
    CHECK(DigitWord::parse("0.11.3") == wide);
}
