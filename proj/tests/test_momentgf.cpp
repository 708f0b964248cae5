#include <catch_amalgamated.hpp>

#include "treeheight/momentgf.hpp"

using namespace treeheight;

TEST_CASE("taylor shift term U_1 = x·g0'") {
    MomentGFBundle bundle(validate_family({2}), 3);
    const auto& field = bundle.field();
    FieldElement u1 = bundle.taylor_shift_term(1);
    FieldElement expect = field.scale(field.dx(field.gen()), RatFunc::x());
    CHECK(u1 == expect);
}

TEST_CASE("taylor shift term U_2 expands the double-index sum") {
    auto bundle = derive_all(validate_family({2}), 2);
    const auto& field = bundle.field();
    FieldElement u2 = bundle.taylor_shift_term(2);
    // U_2 = g_1^{(1)}·x/(1!·1!) + g_0^{(2)}·x^2/(0!·2!)
    FieldElement expect = field.add(
        field.scale(field.dx(bundle.g(1)), RatFunc::x()),
        field.scale(field.dx(field.dx(field.gen())),
                    RatFunc(UniPoly::monomial(Rat(1, 2), 2))));
    CHECK(u2 == expect);
}

TEST_CASE("composition term C_1 is empty") {
    MomentGFBundle bundle(validate_family({2}), 2);
    CHECK(bundle.compose_char_poly(1).is_zero());
}

TEST_CASE("composition term C_2 = T_1^2 for S={2}") {
    // P(X) = 1 + X^2: the z^2 coefficient of (g0 + T_1 z + T_2 z^2)^2 is
    // 2 g0 T_2 + T_1^2; the part free of T_2 is T_1^2.
    auto bundle = derive_all(validate_family({2}), 1);
    const auto& field = bundle.field();
    FieldElement u1 = bundle.taylor_shift_term(1);
    FieldElement t1 = field.add(bundle.g(1), u1);  // g_1/1! + U_1
    CHECK(bundle.compose_char_poly(2) == field.mul(t1, t1));
}

TEST_CASE("g_1 closed form for S={2}") {
    // g_1 = 2x^2·g0·g0' / (1 - 2x·g0), verified as field elements
    auto bundle = derive_all(validate_family({2}), 1);
    const auto& field = bundle.field();
    FieldElement g0 = field.gen();
    FieldElement numer = field.scale(field.mul(g0, field.dx(g0)),
                                     RatFunc(UniPoly::monomial(Rat(2), 2)));
    FieldElement denom = field.sub(field.one(),
                                   field.scale(g0, RatFunc(UniPoly::monomial(Rat(2), 1))));
    CHECK(bundle.g(1) == field.mul(numer, field.inv(denom)));

    auto s = eval_bundle_series(bundle, 8);
    CHECK(s[1].coeff(3) == 2);
    CHECK(s[1].coeff(5) == 12);
    CHECK(s[1].coeff(7) == 58);
}

TEST_CASE("g_1 for the path family S={1}") {
    // one tree per n with H = n(n-1)/2
    auto bundle = derive_all(validate_family({1}), 1);
    auto s = eval_bundle_series(bundle, 12);
    for (long n = 1; n <= 12; ++n)
        CHECK(s[1].coeff(n) == Rat(Int(n) * (n - 1) / 2));
}

TEST_CASE("k=0 bundle holds only g_0 = F") {
    auto bundle = derive_all(validate_family({2}), 0);
    CHECK(bundle.derived_up_to() == 0);
    CHECK(bundle.g(0) == bundle.field().gen());
}

TEST_CASE("K-identity: each g_r satisfies its z^r coefficient equation") {
    for (auto degrees : std::vector<std::vector<long>>{{2}, {1, 2}, {3}}) {
        auto bundle = derive_all(validate_family(degrees), 4);
        const auto& field = bundle.field();
        FieldElement pprime = bundle.pprime_g0();
        for (long r = 1; r <= 4; ++r) {
            Rat inv_rfac = Rat(1) / Rat(factorial(static_cast<unsigned long>(r)));
            FieldElement tr = field.add(field.scale(bundle.g(r), RatFunc(inv_rfac)),
                                        bundle.taylor_shift_term(r));
            FieldElement rhs = field.scale(
                field.add(field.mul(pprime, tr), bundle.compose_char_poly(r)), RatFunc::x());
            CHECK(field.sub(field.scale(bundle.g(r), RatFunc(inv_rfac)), rhs).is_zero());
        }
    }
}

TEST_CASE("symbolic and numeric pipelines agree coefficientwise") {
    struct Case { std::vector<long> s; long k; long n; };
    for (auto tc : {Case{{2}, 6, 120}, Case{{1, 2}, 4, 80}, Case{{3}, 4, 100}}) {
        auto spec = validate_family(tc.s);
        auto bundle = derive_all(spec, tc.k);
        auto sym = eval_bundle_series(bundle, tc.n);
        auto num = solve_numeric_FE(spec, tc.n, tc.k);
        Int rfac = 1;
        for (long r = 0; r <= tc.k; ++r) {
            if (r > 0) rfac *= r;
            CHECK(sym[static_cast<std::size_t>(r)] ==
                  num[static_cast<std::size_t>(r)] * Rat(rfac));
        }
    }
}

TEST_CASE("g_r series coefficients are nonnegative beyond n = r") {
    auto bundle = derive_all(validate_family({1, 2}), 5);
    auto s = eval_bundle_series(bundle, 60);
    for (long r = 0; r <= 5; ++r)
        for (long n = r + 1; n <= 60; ++n)
            CHECK(s[static_cast<std::size_t>(r)].coeff(n) >= 0);
}
