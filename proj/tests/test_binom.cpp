#include <doctest.h>

#include "ppinv/binom.hpp"
#include "ppinv/closed_forms.hpp"
#include "ppinv/intmath.hpp"
#include "ppinv/perm.hpp"
#include "test_util.hpp"

using namespace ppinv;
using ppinv::test::nonzero_elements;

TEST_SUITE("binom") {

    TEST_CASE("Lucas digit product examples") {
        CHECK(lucas_binom_mod_p(13, 5, 5) == 2); // C(13,5) = 1287 = 2 mod 5
        CHECK(binom_exact(Int(13), Int(5)) % 5 == 2);
        CHECK(lucas_binom_mod_p(12345, 0, 7) == 1);
        CHECK(lucas_binom_mod_p(38, 7, 5) == 1); // digits: C(3,2) C(2,1) C(1,0) = 6
        CHECK(binom_exact(Int(38), Int(7)) % 5 == 1);
        CHECK(lucas_binom_mod_p(5, 7, 5) == 0); // k > n
        CHECK_THROWS_AS(lucas_binom_mod_p(10, 2, 6), Error);
    }

    TEST_CASE("Lucas equals the exact binomial mod p") {
        // full Pascal sweep (exact arithmetic mod p via the addition
        // recurrence) over a large triangle, for each small prime
        for (u32 p : {2u, 3u, 5u, 7u}) {
            const u32 N = 3000;
            std::vector<u32> row{1};
            for (u32 n = 1; n <= N; ++n) {
                row.push_back(0);
                for (u32 k = n; k >= 1; --k) row[k] = (row[k] + row[k - 1]) % p;
                if (n % 13 != 0 && n > 120) continue; // spot-check rows densely at the base
                for (u32 k = 0; k <= n; ++k) CHECK(lucas_binom_mod_p(n, k, p) == row[k]);
            }
        }
        // exact big-integer falling-factorial oracle on random large pairs
        ppinv::test::Rng rng(555);
        for (int t = 0; t < 300; ++t) {
            u64 n = rng.below(10000);
            u64 k = n == 0 ? 0 : rng.below(n + 1);
            for (u32 p : {2u, 3u, 5u, 7u}) {
                u32 exact = static_cast<u32>(binom_exact(Int(n), Int(k)) % p);
                CHECK(lucas_binom_mod_p(n, k, p) == exact);
            }
        }
    }

    TEST_CASE("shift congruence C(q+r, k) = C(r, k) mod p") {
        CHECK(binom_shift_check(5, Int(2), 2)); // C(7,2) = 21 = 1 = C(2,2) mod 5
        CHECK(binom_shift_check(9, Int(-4), 0));
        CHECK(binom_shift_check(5, Int(-8), 3)); // C(-3,3) = -10, C(-8,3) = -120, both 0 mod 5
        for (u64 q : {4ull, 5ull, 8ull, 9ull, 25ull}) {
            for (i64 r = -50; r <= 50; ++r)
                for (u64 k = 0; k < q; ++k) CHECK(binom_shift_check(q, Int(r), k));
        }
        CHECK_THROWS_AS(binom_shift_check(6, Int(1), 1), Error);
        CHECK_THROWS_AS(binom_shift_check(5, Int(1), 5), Error);
    }

    TEST_CASE("quintic binomial A = C(5m+3, m) mod 5") {
        auto a1 = quintic_binom_A(1, 1);
        CHECK(a1.value == 3); // C(8, 1) = 8
        REQUIRE(a1.decomposition.has_value());
        CHECK(*a1.decomposition == std::array<u32, 3>{0, 0, 1});

        auto a0 = quintic_binom_A(0, 1);
        CHECK(a0.value == 1); // C(3, 0) = 1
        REQUIRE(a0.decomposition.has_value());
        CHECK(*a0.decomposition == std::array<u32, 3>{0, 0, 0});

        auto a7 = quintic_binom_A(7, 2);
        CHECK(a7.value == 1); // C(38, 7)
        REQUIRE(a7.decomposition.has_value());
        CHECK(*a7.decomposition == std::array<u32, 3>{0, 1, 2});

        CHECK_THROWS_AS(quintic_binom_A(25, 2), Error);

        // decomposition exists exactly when the value is nonzero, and always
        // reassembles m (n <= 3 swept in full)
        for (u32 n = 1; n <= 3; ++n) {
            u64 q = 1;
            for (u32 i = 0; i < n; ++i) q *= 5;
            for (u64 m = 0; m < q; ++m) {
                auto r = quintic_binom_A(m, n);
                CHECK((r.value != 0) == r.decomposition.has_value());
                if (r.decomposition) {
                    u64 sum = 0;
                    for (u32 k : *r.decomposition) {
                        u64 pk = 1;
                        for (u32 i = 0; i < k; ++i) pk *= 5;
                        sum += (pk - 1) / 4;
                    }
                    CHECK(sum == m);
                }
            }
        }
    }

    TEST_CASE("e_{mk} table") {
        auto f5 = Field::make(5, 1);
        FieldElement a = f5->from_int(2);
        EmkTable t = emk_table(a, 1);
        CHECK(t.T == 0);
        CHECK(t.q == 5);
        // e_{10} = C(2, 1)(-1)^1 a^{-7} = 2 * (-1) * 2 = 1: the x^3 coefficient
        CHECK(t.e[0] == f5->one());

        auto f25 = Field::make(5, 2);
        CHECK(emk_table(f25->element(2), 0).T == 2);
        auto f125 = Field::make(5, 3);
        CHECK(emk_table(f125->element(2), 0).T == 12);

        CHECK_THROWS_AS(emk_table(f5->zero(), 0), Error);
        CHECK_THROWS_AS(emk_table(a, 2), Error); // m > (q-3)/2
    }

    TEST_CASE("quintic coefficients via e_{mk} match the polynomial inverse") {
        for (auto [p, n] : {std::pair<u64, u32>{5, 1}, {5, 2}, {5, 3}}) {
            auto f = Field::make(p, n);
            const u64 q = f->q();
            for (const auto& a : nonzero_elements(*f)) {
                if (f->is_dth_power(a, 2)) {
                    CHECK_THROWS_AS(quintic_coeff_via_emk(a, Int(1)), Error);
                    continue;
                }
                Poly inv = invert_quintic_main(a);
                for (u64 i = 1; i <= q - 2; ++i) CHECK(quintic_coeff_via_emk(a, Int(i)) == inv.coeff(i));
            }
        }
        // and the generic coefficient-formula output for small fields
        for (auto [p, n] : {std::pair<u64, u32>{5, 1}, {5, 2}}) {
            auto f = Field::make(p, n);
            for (const auto& a : nonzero_elements(*f)) {
                if (f->is_dth_power(a, 2)) continue;
                Poly inv = invert_coeff_formula(quintic_pp(a)).inverse;
                for (u64 i = 1; i <= f->q() - 2; ++i) CHECK(quintic_coeff_via_emk(a, Int(i)) == inv.coeff(i));
            }
        }
        auto f5 = Field::make(5, 1);
        CHECK(quintic_coeff_via_emk(f5->from_int(2), Int(2)).is_zero()); // even index
        CHECK_THROWS_AS(quintic_coeff_via_emk(f5->from_int(2), Int(0)), Error);
        CHECK_THROWS_AS(quintic_coeff_via_emk(f5->from_int(2), Int(4)), Error);
    }

    TEST_CASE("congruence suite passes for n = 1..5") {
        for (u32 n = 1; n <= 5; ++n) {
            Report r = congruence_suite(n);
            INFO(r.to_text());
            CHECK(r.all_pass());
            u64 skipped = 0;
            for (const auto& l : r.lines) skipped += l.skipped ? 1 : 0;
            CHECK(skipped == (n == 1 ? 2 : 0)); // em02=0 and em023=0 need n >= 2
        }
        CHECK_THROWS_AS(congruence_suite(0), Error);
        CHECK_THROWS_AS(congruence_suite(9), Error);
    }

    TEST_CASE("three-way predicate equivalences for n = 1..5") {
        for (u32 n = 1; n <= 5; ++n) {
            Report r = theorem_predicate_equivalences(n);
            INFO(r.to_text());
            CHECK(r.all_pass());
            REQUIRE(r.lines.size() == 3);
        }
    }

    TEST_CASE("report text format") {
        Report r = congruence_suite(2);
        std::string text = r.to_text();
        CHECK(text.find("THEOREM e-m0 n=2 range=0..9 pass=10 fail=0") != std::string::npos);
        CHECK(text.find("THEOREM em1=0 n=2 range=0..12 pass=13 fail=0") != std::string::npos);
        Report r1 = congruence_suite(1);
        CHECK(r1.to_text().find("THEOREM em02=0 n=1 skipped") != std::string::npos);
    }
}
