#include <doctest.h>

#include <numeric>

#include "ppinv/intmath.hpp"

using namespace ppinv;

TEST_SUITE("intmath") {

    TEST_CASE("primality by trial division") {
        CHECK(is_prime_u64(2));
        CHECK(is_prime_u64(3));
        CHECK(is_prime_u64(5));
        CHECK(is_prime_u64(617));
        CHECK_FALSE(is_prime_u64(1));
        CHECK_FALSE(is_prime_u64(0));
        CHECK_FALSE(is_prime_u64(91)); // 7 * 13
        CHECK_FALSE(is_prime_u64(1024));
    }

    TEST_CASE("factorization and phi") {
        auto f = factorize_u64(360);
        REQUIRE(f.size() == 3);
        CHECK(f[0] == std::pair<u64, u32>{2, 3});
        CHECK(f[1] == std::pair<u64, u32>{3, 2});
        CHECK(f[2] == std::pair<u64, u32>{5, 1});
        CHECK(euler_phi_u64(1) == 1);
        CHECK(euler_phi_u64(5) == 4);
        CHECK(euler_phi_u64(12) == 4);
        // phi(m) = #{k < m : gcd(k, m) = 1}, checked directly
        for (u64 m = 1; m <= 200; ++m) {
            u64 cnt = 0;
            for (u64 k = 1; k <= m; ++k)
                if (std::gcd(k, m) == 1) ++cnt;
            CHECK(euler_phi_u64(m) == cnt);
        }
    }

    TEST_CASE("extended gcd and modular inverse") {
        Int x, y;
        Int g = egcd(Int(240), Int(46), x, y);
        CHECK(g == 2);
        CHECK(240 * x + 46 * y == g);
        CHECK(mod_inverse(Int(3), Int(4)) == 3);
        CHECK(mod_inverse(Int(5), Int(48)) == 29); // (3*49-2)/5
        CHECK_THROWS_AS(mod_inverse(Int(6), Int(48)), Error);
        CHECK(mod_nonneg(Int(-7), Int(5)) == 3);
    }

    TEST_CASE("exact binomials") {
        CHECK(binom_exact(Int(13), Int(5)) == 1287);
        CHECK(binom_exact(Int(38), Int(7)) == 12620256);
        CHECK(binom_exact(Int(10), Int(11)) == 0);
        CHECK(binom_exact(Int(10), Int(0)) == 1);
        // Pascal recurrence as an independent check
        for (int n = 1; n <= 40; ++n)
            for (int k = 1; k < n; ++k)
                CHECK(binom_exact(Int(n), Int(k)) ==
                      binom_exact(Int(n - 1), Int(k - 1)) + binom_exact(Int(n - 1), Int(k)));
    }

    TEST_CASE("generalized binomials with negative upper argument") {
        CHECK(binom_generalized(Int(-8), 3) == -120); // (-8)(-9)(-10)/6
        CHECK(binom_generalized(Int(-3), 3) == -10);  // (-3)(-4)(-5)/6
        CHECK(binom_generalized(Int(7), 2) == 21);
        CHECK(binom_generalized(Int(5), -1) == 0);
        // C(-n, k) = (-1)^k C(n+k-1, k)
        for (int n = 1; n <= 12; ++n)
            for (int k = 0; k <= 12; ++k) {
                Int want = binom_exact(Int(n + k - 1), Int(k));
                if (k % 2 != 0) want = -want;
                CHECK(binom_generalized(Int(-n), k) == want);
            }
    }

    TEST_CASE("base-p digit expansion") {
        auto d = base_p_digits(Int(13), 5);
        CHECK(d.digits == std::vector<u32>{3, 2});
        d = base_p_digits(Int(38), 5);
        CHECK(d.digits == std::vector<u32>{3, 2, 1});
        d = base_p_digits(Int(0), 5);
        CHECK(d.digits.empty());
        d = base_p_digits(Int(7), 2);
        CHECK(d.digits == std::vector<u32>{1, 1, 1});
    }
}
