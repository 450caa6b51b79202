#include "pacert/polynomial.hpp"
#include "pacert/symplectic.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <complex>

using namespace pacert;

namespace {
IntPoly P(std::vector<long> desc) {
    std::vector<Int> v(desc.begin(), desc.end());
    return IntPoly::from_desc(std::move(v));
}
}  // namespace

TEST_CASE("polynomial arithmetic") {
    CHECK(P({1, 1}) * P({1, -1}) == P({1, 0, -1}));
    CHECK(IntPoly::zero() * P({1, 0, 2}) == IntPoly::zero());
    CHECK(P({1, 6, 3}) * P({1, 1}) == P({1, 7, 9, 3}));

    CHECK(P({1, 6, 3}).degree() == 2);
    CHECK(IntPoly::zero().degree() == -1);
    CHECK(IntPoly({Int(0), Int(0)}).is_zero());
    CHECK(P({2, 0, 1}).eval(Int(-3)) == 19);
}

TEST_CASE("polynomial text round trips") {
    const IntPoly p = IntPoly::parse_csv_desc("1, 6,5,6,1");
    CHECK(p == P({1, 6, 5, 6, 1}));
    CHECK(p.csv_desc() == "1,6,5,6,1");
    CHECK(p.pretty() == "x^4+6x^3+5x^2+6x+1");
    CHECK(P({1, -3, 0, 1}).pretty() == "x^3-3x^2+1");
    CHECK_THROWS_AS(IntPoly::parse_csv_desc("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse_csv_desc("1,q"), std::invalid_argument);
}

TEST_CASE("exact division") {
    const IntPoly num = P({1, 6, 5, 6, 1});
    const IntPoly den = P({1, 1});
    CHECK_FALSE(div_exact(num, den).has_value());
    const IntPoly prod = num * den;
    auto q = div_exact(prod, den);
    REQUIRE(q.has_value());
    CHECK(*q == num);
    CHECK_THROWS_AS(div_exact(num, IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("sym on the worked examples") {
    CHECK(sym(IntPoly::x()) == P({1, 0, 1}));
    CHECK(sym(P({1, 6, 3})) == P({1, 6, 5, 6, 1}));
    // x^2 + a x + (b-2) -> x^4 + a x^3 + b x^2 + a x + 1
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            CHECK(sym(P({1, a, b - 2})) == P({1, a, b, a, 1}));
    CHECK_THROWS_AS(sym(P({2, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(sym(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("symplectic poly accessors") {
    const SymplecticPoly r(P({1, 6, 5, 6, 1}));
    CHECK(r.genus() == 2);
    CHECK(r.c(1) == 6);
    CHECK(r.c(2) == 5);
    CHECK(r.c(3) == 6);
    CHECK(r.c(4) == 1);
    CHECK(r.t(1) == -6);
    CHECK(r.t(2) == 5);
    CHECK(r.t(3) == -6);
    CHECK_THROWS_AS(r.t(4), std::out_of_range);

    CHECK_THROWS_AS(SymplecticPoly(P({1, 6, 3})), std::invalid_argument);     // not palindromic
    CHECK_THROWS_AS(SymplecticPoly(P({1, 2, 2, 1})), std::invalid_argument);  // odd degree
    CHECK_THROWS_AS(SymplecticPoly(P({2, 1, 2})), std::invalid_argument);     // not monic
    CHECK(SymplecticPoly(P({1, 2, 1})).genus() == 1);  // degree 2 is allowed
}

TEST_CASE("desym on the worked examples") {
    CHECK(desym(SymplecticPoly(P({1, 0, 1}))) == IntPoly::x());
    CHECK(desym(SymplecticPoly(P({1, 6, 5, 6, 1}))) == P({1, 6, 3}));
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            CHECK(desym(SymplecticPoly(P({1, a, b, a, 1}))) == P({1, a, b - 2}));
}

TEST_CASE("sym properties: multiplicativity, round trip, structure") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int dp = 1 + static_cast<int>(trial % 8);
        const int dq = 1 + static_cast<int>((trial / 3) % 8);
        const IntPoly p = oracles::random_monic(rng, dp, -50, 50);
        const IntPoly q = oracles::random_monic(rng, dq, -50, 50);
        CHECK(sym(p * q) == sym(p) * sym(q));
        const IntPoly sp = sym(p);
        CHECK(sp.is_monic());
        CHECK(sp.is_palindromic());
        CHECK(sp.degree() == 2 * dp);
        CHECK(desym(SymplecticPoly(sp)) == p);
        // coefficient transfer: x^{g-1} coefficient shows up as c_1 and c_{2g-1}
        const SymplecticPoly spp(sp);
        CHECK(spp.c(1) == p.coeff(dp - 1));
        CHECK(spp.c(2 * dp - 1) == p.coeff(dp - 1));
    }
    // sym(desym(r)) = r for random palindromics
    for (int trial = 0; trial < 100; ++trial) {
        const int g = 1 + trial % 6;
        const SymplecticPoly r = oracles::random_symplectic(rng, g, -50, 50);
        CHECK(sym(desym(r)) == r.poly());
    }
}

TEST_CASE("root correspondence: zeta + 1/zeta is a root of q") {
    const IntPoly q = P({1, -3, 1});
    const IntPoly r = sym(q);  // x^4-3x^3+3x^2-3x+1... structural: compute roots
    const auto zr = approximate_roots(r);
    const std::complex<double> roots_q[] = {{(3 + std::sqrt(5.0)) / 2, 0},
                                            {(3 - std::sqrt(5.0)) / 2, 0}};
    for (const auto& z : zr) {
        const std::complex<double> w = z + 1.0 / z;
        const double d = std::min(std::abs(w - roots_q[0]), std::abs(w - roots_q[1]));
        CHECK(d < 1e-9);
    }
}

TEST_CASE("seed polynomial validation") {
    SeedPoly seed{2, {Int(1), Int(2)}, Int(3)};
    seed.validate();
    CHECK(seed.q() == P({1, 6, 3}));
    CHECK(seed.certification_bound_ok());

    SeedPoly no_prime{2, {Int(3), Int(7)}, std::nullopt};
    CHECK(no_prime.q() == P({1, 7, 3}));
    CHECK(no_prime.certification_bound_ok());
    CHECK_FALSE(SeedPoly{2, {Int(3), Int(4)}, std::nullopt}.certification_bound_ok());

    CHECK_THROWS_AS((SeedPoly{1, {Int(1)}, std::nullopt}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SeedPoly{2, {Int(0), Int(5)}, Int(3)}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SeedPoly{2, {Int(1), Int(5)}, Int(4)}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SeedPoly{2, {Int(3), Int(5)}, Int(3)}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SeedPoly{2, {Int(1)}, std::nullopt}.validate()), std::invalid_argument);
}
