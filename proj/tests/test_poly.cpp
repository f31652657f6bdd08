#include <doctest.h>

#include "ppinv/poly.hpp"
#include "test_util.hpp"

using namespace ppinv;
using ppinv::test::all_elements;
using ppinv::test::Rng;

TEST_SUITE("poly") {

    TEST_CASE("ring operations") {
        auto f5 = Field::make(5, 1);
        Poly xp1 = Poly::from_ints(*f5, {1, 1});
        Poly xm1 = Poly::from_ints(*f5, {-1, 1});
        CHECK(xp1 * xm1 == Poly::from_ints(*f5, {4, 0, 1})); // x^2 + 4

        Poly f = Poly::from_ints(*f5, {2, 0, 3});
        CHECK(f + Poly::zero(*f5) == f);
        CHECK(f - f == Poly::zero(*f5));

        auto f7 = Field::make(7, 1);
        Poly x2 = Poly::from_ints(*f7, {0, 0, 1});
        CHECK(scale(x2, f7->from_int(3)) == Poly::from_ints(*f7, {0, 0, 3}));
        CHECK_THROWS_AS(f + x2, Error); // SpecMismatch

        CHECK(Poly::from_ints(*f5, {0, 0, 0}).is_zero());
        CHECK(Poly::from_ints(*f5, {1, 5, 10}).degree() == 0); // trailing zeros trimmed
    }

    TEST_CASE("reduction mod x^q - x") {
        auto f5 = Field::make(5, 1);
        Poly x9 = Poly::monomial(*f5, f5->one(), 9);
        CHECK(reduce_mod_xq_minus_x(x9) == Poly::from_ints(*f5, {0, 1}));
        Poly x5 = Poly::monomial(*f5, f5->one(), 5);
        CHECK(reduce_mod_xq_minus_x(x5) == Poly::from_ints(*f5, {0, 1}));
        Poly x3 = Poly::monomial(*f5, f5->one(), 3);
        CHECK(reduce_mod_xq_minus_x(x3) == x3);

        CHECK(reduce_exponent(Int(9), 5) == 1);
        CHECK(reduce_exponent(Int(0), 5) == 0);
        CHECK(reduce_exponent(Int(4), 5) == 4);
        CHECK(reduce_exponent(Int(5), 5) == 1);
        CHECK(reduce_exponent(Int(8), 5) == 4);

        // reduction preserves the induced function
        for (auto [p, n] : {std::pair<u64, u32>{5, 1}, {3, 2}, {5, 3}, {11, 1}}) {
            auto f = Field::make(p, n);
            Rng rng(7);
            for (int t = 0; t < 20; ++t) {
                Poly g = ppinv::test::random_poly(*f, 2 * f->q() + 3, rng);
                Poly r = reduce_mod_xq_minus_x(g);
                CHECK(r.degree() < static_cast<i64>(f->q()));
                for (const auto& c : all_elements(*f)) CHECK(evaluate(r, c) == evaluate(g, c));
            }
        }
    }

    TEST_CASE("powmod") {
        auto f5 = Field::make(5, 1);
        Poly x3 = Poly::monomial(*f5, f5->one(), 3);
        CHECK(powmod(x3, 3) == Poly::from_ints(*f5, {0, 1})); // x^9 reduces to x
        Poly f = Poly::from_ints(*f5, {1, 2, 3});
        CHECK(powmod(f, 0) == Poly::from_ints(*f5, {1}));
        CHECK(powmod(f, 1) == reduce_mod_xq_minus_x(f));

        // agrees pointwise with repeated multiplication
        for (auto [p, n] : {std::pair<u64, u32>{5, 1}, {3, 2}, {5, 2}}) {
            auto fld = Field::make(p, n);
            Rng rng(11);
            for (int t = 0; t < 8; ++t) {
                Poly g = ppinv::test::random_poly(*fld, 6, rng);
                Poly acc = Poly::from_ints(*fld, {1});
                for (u64 e = 1; e <= 64; ++e) {
                    acc = reduce_mod_xq_minus_x(acc * g);
                    if (e % 7 == 0 || e == 64) {
                        Poly pw = powmod(g, Int(e));
                        for (const auto& c : all_elements(*fld)) CHECK(evaluate(pw, c) == evaluate(acc, c));
                    }
                }
            }
        }
    }

    TEST_CASE("evaluation") {
        auto f5 = Field::make(5, 1);
        // x^5 - 2*2*x^3 + 4x at 1: 1 - 4 + 4 = 1
        Poly f = Poly::from_ints(*f5, {0, 4, 0, -4, 0, 1});
        CHECK(evaluate(f, f5->one()) == f5->one());
        CHECK(evaluate(f, f5->zero()) == f5->zero());
        Poly g = Poly::from_ints(*f5, {3, 1, 2});
        CHECK(evaluate(g, f5->zero()) == f5->from_int(3));
        Poly x3 = Poly::monomial(*f5, f5->one(), 3);
        CHECK(evaluate(x3, f5->from_int(2)) == f5->from_int(3));
    }

    TEST_CASE("composition mod x^q - x") {
        auto f5 = Field::make(5, 1);
        Poly x3 = Poly::monomial(*f5, f5->one(), 3);
        CHECK(compose_mod(x3, x3) == Poly::from_ints(*f5, {0, 1}));

        Poly f = Poly::from_ints(*f5, {1, 4, 0, 2, 0, 0, 3});
        Poly ident = Poly::from_ints(*f5, {0, 1});
        CHECK(compose_mod(f, ident) == reduce_mod_xq_minus_x(f));
        CHECK(compose_mod(ident, f) == reduce_mod_xq_minus_x(f));

        for (auto [p, n] : {std::pair<u64, u32>{7, 1}, {3, 2}, {2, 4}}) {
            auto fld = Field::make(p, n);
            Rng rng(13);
            for (int t = 0; t < 10; ++t) {
                Poly a = ppinv::test::random_poly(*fld, fld->q(), rng);
                Poly b = ppinv::test::random_poly(*fld, fld->q(), rng);
                Poly c = compose_mod(a, b);
                for (const auto& x : all_elements(*fld)) CHECK(evaluate(c, x) == evaluate(a, evaluate(b, x)));
            }
        }
    }

    TEST_CASE("interpolation") {
        auto f5 = Field::make(5, 1);
        std::vector<std::pair<FieldElement, FieldElement>> pairs;
        for (const auto& c : all_elements(*f5)) pairs.emplace_back(c, c);
        CHECK(lagrange_interpolate(*f5, pairs) == Poly::from_ints(*f5, {0, 1}));

        pairs.clear();
        for (const auto& c : all_elements(*f5)) pairs.emplace_back(c, c.pow(3));
        CHECK(lagrange_interpolate(*f5, pairs) == Poly::monomial(*f5, f5->one(), 3));

        pairs.clear();
        for (const auto& c : all_elements(*f5)) pairs.emplace_back(c, f5->from_int(3));
        CHECK(lagrange_interpolate(*f5, pairs) == Poly::from_ints(*f5, {3}));

        pairs.clear();
        for (const auto& c : all_elements(*f5)) pairs.emplace_back(f5->zero(), c);
        CHECK_THROWS_AS(lagrange_interpolate(*f5, pairs), Error); // DuplicatePoint
        pairs.erase(pairs.begin() + 3, pairs.end());
        CHECK_THROWS_AS(lagrange_interpolate(*f5, pairs), Error); // IncompleteDomain

        // left inverse of evaluation on polynomials of degree <= q-1
        for (auto [p, n] : {std::pair<u64, u32>{5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
            auto fld = Field::make(p, n);
            Rng rng(17);
            for (int t = 0; t < 10; ++t) {
                Poly g = ppinv::test::random_poly(*fld, fld->q() - 1, rng);
                std::vector<std::pair<FieldElement, FieldElement>> pts;
                for (const auto& c : all_elements(*fld)) pts.emplace_back(c, evaluate(g, c));
                CHECK(lagrange_interpolate(*fld, pts) == g);
            }
        }
    }

    TEST_CASE("normalization") {
        auto f5 = Field::make(5, 1);
        // 2x^3 + 1 -> x^3 with b = 3, c = 0, d = 2
        Poly f = Poly::from_ints(*f5, {1, 0, 0, 2});
        auto [g, tr] = normalize(f);
        CHECK(g == Poly::monomial(*f5, f5->one(), 3));
        CHECK(tr.b == f5->from_int(3));
        CHECK(tr.c == f5->zero());
        CHECK(tr.d == f5->from_int(2));

        // x^3 + x^2: the x^2 term is removed via c = -3^{-1}
        Poly h = Poly::from_ints(*f5, {0, 0, 1, 1});
        auto [gh, trh] = normalize(h);
        CHECK(gh.coeff(2).is_zero());
        CHECK(gh.coeff(3) == f5->one());
        CHECK(evaluate(gh, f5->zero()).is_zero());
        CHECK(trh.c == -(f5->from_int(3).inverse()));

        // already normalized
        Poly x3 = Poly::monomial(*f5, f5->one(), 3);
        auto [gx, trx] = normalize(x3);
        CHECK(gx == x3);
        CHECK(trx.b == f5->one());
        CHECK(trx.c == f5->zero());
        CHECK(trx.d == f5->zero());

        CHECK_THROWS_AS(normalize(Poly::from_ints(*f5, {3})), Error);

        // g = b f(x+c) + d holds, g satisfies the normalized-shape invariants,
        // and g permutes iff f does
        for (auto [p, n] : {std::pair<u64, u32>{5, 1}, {2, 2}, {3, 2}, {2, 4}, {5, 2}}) {
            auto fld = Field::make(p, n);
            Rng rng(19);
            for (int t = 0; t < 40; ++t) {
                Poly a = ppinv::test::random_poly(*fld, 1 + rng.below(6), rng);
                if (a.degree() < 1) continue;
                auto [b, trr] = normalize(a);
                u64 m = static_cast<u64>(b.degree());
                CHECK(b.leading_coeff() == fld->one());
                CHECK(evaluate(b, fld->zero()).is_zero());
                if (m % fld->p() != 0) CHECK(b.coeff(m - 1).is_zero());
                Poly rebuilt = scale(shift_argument(a, trr.c), trr.b);
                rebuilt.add_term(trr.d, 0);
                CHECK(rebuilt == b);
                CHECK(is_permutation(a) == is_permutation(b));
            }
        }
    }
}
