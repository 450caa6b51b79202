#include "pacert/criterion.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace pacert;

namespace {
IntPoly P(std::vector<long> desc) {
    std::vector<Int> v(desc.begin(), desc.end());
    return IntPoly::from_desc(std::move(v));
}
}  // namespace

TEST_CASE("eisenstein witness") {
    CHECK(eisenstein_witness(P({1, 6, 3}), Int(3)));
    CHECK_FALSE(eisenstein_witness(P({1, 6, 9}), Int(3)));  // p^2 divides constant term
    CHECK_FALSE(eisenstein_witness(P({1, 1, 1}), Int(2)));
    CHECK_THROWS_AS(eisenstein_witness(P({1, 6, 3}), Int(4)), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_witness(P({2, 6, 3}), Int(3)), std::invalid_argument);
}

TEST_CASE("kronecker factor search") {
    CHECK(kronecker_irreducible(P({1, 1, 1}), kDefaultBudget) == TriState::Proven);
    CHECK(kronecker_irreducible(P({1, 5, -1}), kDefaultBudget) == TriState::Proven);
    CHECK(kronecker_irreducible(P({1, 7}), kDefaultBudget) == TriState::Proven);  // degree 1

    IntPoly factor;
    CHECK(kronecker_irreducible(P({1, 1, 0}), kDefaultBudget, &factor) == TriState::Refuted);
    CHECK(factor == IntPoly::x());

    CHECK(kronecker_irreducible(P({1, 5, 6}), kDefaultBudget, &factor) == TriState::Refuted);
    REQUIRE(div_exact(P({1, 5, 6}), factor).has_value());
    CHECK(factor.degree() >= 1);

    // (x^2+x+1)^2
    const IntPoly sq = P({1, 1, 1}) * P({1, 1, 1});
    CHECK(kronecker_irreducible(sq, kDefaultBudget, &factor) == TriState::Refuted);
    CHECK(div_exact(sq, factor).has_value());

    CHECK(kronecker_irreducible(P({1, 5, -1}), 3) == TriState::Inconclusive);

    // degree 6 irreducible (Eisenstein at 3 gives an independent reason)
    CHECK(kronecker_irreducible(P({1, 3, 3, 3, 3, 3, 3}), kDefaultBudget) == TriState::Proven);
    // degree 5 with a quadratic factor
    const IntPoly quint = P({1, 0, -2}) * P({1, 1, 1, 7});
    CHECK(kronecker_irreducible(quint, kDefaultBudget, &factor) == TriState::Refuted);
    CHECK(div_exact(quint, factor).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == P({1, -1}));
    CHECK(cyclotomic_poly(2) == P({1, 1}));
    CHECK(cyclotomic_poly(5) == P({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(8) == P({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_poly(10) == P({1, -1, 1, -1, 1}));
    CHECK(cyclotomic_poly(12) == P({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(105).degree() == 48);  // first with a coefficient of magnitude 2
}

TEST_CASE("cyclotomic product detection") {
    auto w = cyclotomic_product_witness(P({1, 0, 0, 0, 1}));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<long>{8});

    w = cyclotomic_product_witness(P({1, 1, 1, 1, 1}));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<long>{5});

    CHECK_FALSE(is_cyclotomic_product(P({1, 6, 5, 6, 1})));
    CHECK(is_cyclotomic_product(IntPoly::one()));

    // mixed product with multiplicity
    const IntPoly mix = cyclotomic_poly(1) * cyclotomic_poly(1) * cyclotomic_poly(4);
    w = cyclotomic_product_witness(mix);
    REQUIRE(w.has_value());
    IntPoly back = IntPoly::one();
    for (long n : *w) back = back * cyclotomic_poly(n);
    CHECK(back == mix);

    CHECK_THROWS_AS(cyclotomic_product_witness(P({1, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_product_witness(P({2, 1, 2})), std::invalid_argument);
}

TEST_CASE("power index") {
    CHECK(power_index(P({1, 0, 5, 0, 1})) == 2);
    CHECK(power_index(P({1, 2, 5, 2, 1})) == 1);
    CHECK(power_index(P({1, 0, 0, 0, 0, 0, 1})) == 6);
    CHECK(power_index(P({1, 0, 0, 0, 1, 0, 0, 0, 1})) == 4);
    CHECK(power_index(P({7})) == 1);
    CHECK_THROWS_AS(power_index(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("check_criterion on the worked examples") {
    const CriterionReport ok = check_criterion(SymplecticPoly(P({1, 6, 5, 6, 1})));
    CHECK(ok.verdict == TriState::Proven);
    CHECK(ok.symp_irreducible == TriState::Proven);
    REQUIRE(ok.eisenstein_prime.has_value());
    CHECK(*ok.eisenstein_prime == 3);
    CHECK_FALSE(ok.cyclotomic);
    CHECK(ok.power_index == 1);

    const CriterionReport cyc = check_criterion(SymplecticPoly(P({1, 1, 1, 1, 1})));
    CHECK(cyc.verdict == TriState::Refuted);
    CHECK(cyc.cyclotomic);
    CHECK(cyc.cyclotomic_witness == std::vector<long>{5});

    const CriterionReport pow = check_criterion(SymplecticPoly(P({1, 0, 3, 0, 1})));
    CHECK(pow.verdict == TriState::Refuted);
    CHECK(pow.power_index == 2);

    // reducible: sym((x+2)(x+3)) = sym(x^2+5x+6)
    const CriterionReport red = check_criterion(sym_poly(P({1, 5, 6})));
    CHECK(red.verdict == TriState::Refuted);
    CHECK(red.symp_irreducible == TriState::Refuted);
    REQUIRE(red.reducible_factor.has_value());
    CHECK(div_exact(P({1, 5, 6}), *red.reducible_factor).has_value());

    // budget exhaustion is inconclusive, not refuted
    const CriterionReport inc = check_criterion(SymplecticPoly(P({1, 9, 3, 9, 1})), 2);
    CHECK(inc.verdict == TriState::Inconclusive);
    CHECK(inc.symp_irreducible == TriState::Inconclusive);
    CHECK_FALSE(inc.note.empty());
}

TEST_CASE("criterion report invariants hold on random inputs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 120; ++trial) {
        const int g = 1 + trial % 4;
        const SymplecticPoly r = oracles::random_symplectic(rng, g, -6, 6);
        const CriterionReport rep = check_criterion(r);
        const bool refuted_leg =
            rep.symp_irreducible == TriState::Refuted || rep.cyclotomic || rep.power_index > 1;
        const bool proven_leg =
            rep.symp_irreducible == TriState::Proven && !rep.cyclotomic && rep.power_index == 1;
        if (rep.verdict == TriState::Proven) CHECK(proven_leg);
        if (rep.verdict == TriState::Refuted) CHECK(refuted_leg);
        if (rep.verdict == TriState::Inconclusive) {
            CHECK_FALSE(proven_leg);
            CHECK_FALSE(refuted_leg);
        }
        if (rep.power_index > 1) CHECK(rep.verdict == TriState::Refuted);
        if (rep.cyclotomic) CHECK(rep.verdict == TriState::Refuted);
        if (rep.eisenstein_prime) CHECK(rep.symp_irreducible == TriState::Proven);
    }
}

TEST_CASE("seed_to_symplectic") {
    SUBCASE("worked seed certifies") {
        const SeedPoly seed{2, {Int(1), Int(2)}, Int(3)};
        const auto [r, rep] = seed_to_symplectic(seed);
        CHECK(r.poly() == P({1, 6, 5, 6, 1}));
        CHECK(rep.verdict == TriState::Proven);
        REQUIRE(rep.eisenstein_prime.has_value());
        CHECK(*rep.eisenstein_prime == 3);
    }
    SUBCASE("bound violation is inconclusive with a note") {
        const SeedPoly seed{2, {Int(1), Int(1)}, std::nullopt};  // |a_1| = 1 <= 4
        const auto [r, rep] = seed_to_symplectic(seed);
        CHECK(rep.verdict == TriState::Inconclusive);
        CHECK(rep.symp_irreducible == TriState::Inconclusive);
        CHECK(rep.note.find("a_{g-1}") != std::string::npos);
    }
    SUBCASE("bound violation can still refute honestly") {
        // q = x^2 + x - 1, sym(q) = Phi_5
        const SeedPoly seed{2, {Int(-1), Int(1)}, std::nullopt};
        const auto [r, rep] = seed_to_symplectic(seed);
        CHECK(r.poly() == P({1, 1, 1, 1, 1}));
        CHECK(rep.verdict == TriState::Refuted);
        CHECK(rep.cyclotomic);
    }
    SUBCASE("genus 3 Eisenstein family certifies") {
        const SeedPoly seed{3, {Int(1), Int(1), Int(4)}, Int(2)};  // |a_2 * 2| = 8 > 6
        const auto [r, rep] = seed_to_symplectic(seed);
        CHECK(rep.verdict == TriState::Proven);
    }
    SUBCASE("prime-free seed goes through the factor search") {
        const SeedPoly seed{2, {Int(3), Int(7)}, std::nullopt};  // x^2+7x+3 irreducible
        const auto [r, rep] = seed_to_symplectic(seed);
        CHECK(rep.verdict == TriState::Proven);
        CHECK(rep.proven_by_search);
    }
}
