#include <doctest.h>

#include "addcyc/fp.hpp"

using namespace addcyc;

TEST_SUITE("fp") {
    TEST_CASE("constructor rejects composite moduli") {
        CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
        CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
        CHECK_THROWS_AS(PrimeField(91), std::invalid_argument);  // 7 * 13
        CHECK_NOTHROW(PrimeField(2));
        CHECK_NOTHROW(PrimeField(2147483647));  // 2^31 - 1
    }

    TEST_CASE("basic arithmetic mod 3") {
        PrimeField F(3);
        CHECK(F.add(2, 2) == 1);
        CHECK(F.sub(0, 1) == 2);
        CHECK(F.mul(2, 2) == 1);
        CHECK(F.inv(2) == 2);  // 2 * 2 = 4 = 1
        CHECK(F.neg(0) == 0);
        CHECK(F.neg(1) == 2);
    }

    TEST_CASE("inversion identity across small primes") {
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
            PrimeField F(p);
            for (std::uint32_t a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }

    TEST_CASE("inversion of zero throws") {
        PrimeField F(5);
        CHECK_THROWS_AS(F.inv(0), std::invalid_argument);
    }

    TEST_CASE("pow matches repeated multiplication") {
        PrimeField F(7);
        std::uint32_t acc = 1;
        for (int e = 0; e < 20; ++e) {
            CHECK(F.pow(3, e) == acc);
            acc = F.mul(acc, 3);
        }
    }
}
