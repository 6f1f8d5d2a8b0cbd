#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamon/cyclotomic_polys.hpp"
#include "tamon/verify.hpp"

using namespace tamon;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPoly(std::move(c));
}

MultFunc mf(std::initializer_list<std::pair<QZElem, long>> entries) {
    MultFunc f;
    for (const auto& [x, v] : entries) f.set(x, v);
    return f;
}

const QZElem q0 = QZElem::make(0, 1);
const QZElem q12 = QZElem::make(1, 2);
const QZElem q13 = QZElem::make(1, 3);
const QZElem q23 = QZElem::make(2, 3);
const QZElem q14 = QZElem::make(1, 4);
const QZElem q34 = QZElem::make(3, 4);

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(4) == poly({1, 0, 1}));
    CHECK(cyclotomic(6) == poly({1, -1, 1}));
    CHECK(cyclotomic(105).degree() == 48);  // first with a coefficient of 2
}

TEST_CASE("q_poly") {
    CHECK(q_poly(mf({{q0, 3}})) == poly({-1, 3, -3, 1}));
    CHECK(q_poly(mf({{q14, 1}, {q34, 1}})) == poly({1, 0, 1}));
    CHECK(q_poly(mf({{q13, 1}, {q23, 1}, {q0, 1}})) == poly({-1, 0, 0, 1}));
    CHECK_THROWS_AS(q_poly(mf({{q13, 1}})), std::invalid_argument);
}

TEST_CASE("charpoly_from_exponents alias") {
    CHECK(charpoly_from_exponents(mf({{q0, 2}})) == poly({1, -2, 1}));
    CHECK(charpoly_from_exponents(mf({{q12, 2}, {q0, 2}})) ==
          q_poly(mf({{q12, 2}})) * q_poly(mf({{q0, 2}})));
}

TEST_CASE("factor_cyclotomic") {
    auto r1 = factor_cyclotomic(poly({1, 0, 1}));
    CHECK(r1.ok());
    CHECK(r1.factorization.factors == std::map<long, long>{{4, 1}});

    auto r2 = factor_cyclotomic(poly({1, -2, 1}));
    CHECK(r2.ok());
    CHECK(r2.factorization.factors == std::map<long, long>{{1, 2}});

    auto r3 = factor_cyclotomic(poly({2, 0, 1}));  // t^2 + 2, no unit-circle roots
    CHECK(!r3.ok());
    CHECK(r3.residual == poly({2, 0, 1}));

    CHECK_THROWS(factor_cyclotomic(poly({1, 0, 2})));  // not monic
    CHECK_THROWS(factor_cyclotomic(IntPoly{}));
}

TEST_CASE("mult_func_of inverts q_poly") {
    MultFunc f = mf({{q14, 1}, {q34, 1}, {q0, 2}});
    auto r = factor_cyclotomic(q_poly(f));
    CHECK(r.ok());
    CHECK(mult_func_of(r.factorization) == f);
}

TEST_CASE("product of all Phi_d over d | n is t^n - 1") {
    for (long n = 1; n <= 60; ++n) {
        IntPoly prod = IntPoly::one();
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        std::vector<mpz_class> tn(n + 1, mpz_class(0));
        tn[0] = -1;
        tn[n] = 1;
        CHECK(prod == IntPoly(std::move(tn)));
    }
}

TEST_CASE("roundtrip on random complete functions") {
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        long e = rng.uniform(1, 60);
        MultFunc f = random_complete(rng, e, rng.uniform(1, 6));
        IntPoly p = q_poly(f);
        CHECK(p.degree() == norm(f));
        auto r = factor_cyclotomic(p);
        REQUIRE(r.ok());
        CHECK(mult_func_of(r.factorization) == f);
    }
}
