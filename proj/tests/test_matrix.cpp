#include "pacert/matrix.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace pacert;

namespace {
IntPoly P(std::vector<long> desc) {
    std::vector<Int> v(desc.begin(), desc.end());
    return IntPoly::from_desc(std::move(v));
}
}  // namespace

TEST_CASE("matrix basics") {
    IntMatrix a(2);
    a.at(0, 0) = 1; a.at(0, 1) = 2;
    a.at(1, 0) = 3; a.at(1, 1) = 4;
    IntMatrix b = IntMatrix::identity(2);
    CHECK(a * b == a);
    CHECK(b.is_identity());
    IntMatrix sq = a * a;
    CHECK(sq.at(0, 0) == 7);
    CHECK(sq.at(1, 1) == 22);
    CHECK(a.pow(0).is_identity());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.transpose().at(0, 1) == 3);
    CHECK(det(a) == -2);
}

TEST_CASE("charpoly small cases") {
    CHECK(charpoly(IntMatrix::identity(2)) == P({1, -2, 1}));
    IntMatrix rot(2);  // j_form(1)
    rot.at(0, 1) = 1;
    rot.at(1, 0) = -1;
    CHECK(charpoly(rot) == P({1, 0, 1}));
    IntMatrix z(3);
    CHECK(charpoly(z) == P({1, 0, 0, 0}));
}

TEST_CASE("charpoly agrees with the cofactor oracle") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            IntMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = oracles::rand_int(rng, -9, 9);
            CHECK(charpoly(m) == oracles::charpoly_cofactor(m));
        }
    }
}

TEST_CASE("charpoly is monic of degree n with trace and det in place") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 5;
        IntMatrix m(n);
        Int tr = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m.at(i, j) = oracles::rand_int(rng, -20, 20);
            tr += m.at(i, i);
        }
        const IntPoly cp = charpoly(m);
        CHECK(cp.degree() == n);
        CHECK(cp.is_monic());
        CHECK(cp.coeff(n - 1) == -tr);
        CHECK(cp.coeff(0) == ((n % 2 == 0) ? det(m) : -det(m)));
    }
}
