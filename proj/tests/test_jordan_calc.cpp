#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamon/jordan_calc.hpp"
#include "tamon/verify.hpp"
#include "tamon/weight_filt.hpp"

using namespace tamon;

namespace {

const QZElem q0 = QZElem::make(0, 1);
const QZElem q12 = QZElem::make(1, 2);
const QZElem q14 = QZElem::make(1, 4);
const QZElem q34 = QZElem::make(3, 4);

MultFunc mf(std::initializer_list<std::pair<QZElem, long>> entries) {
    MultFunc f;
    for (const auto& [x, v] : entries) f.set(x, v);
    return f;
}

std::vector<QZElem> exps(long n) {
    std::vector<QZElem> out;
    for (long k = 0; k < n; ++k) out.push_back(QZElem::make(k, n));
    return out;
}

}  // namespace

TEST_CASE("jord constructor") {
    JordanSpec d2 = jord(mf({{q0, 2}}), {});
    CHECK(d2.dimension() == 2);
    REQUIRE(d2.blocks().size() == 1);
    CHECK(d2.blocks()[0].size == 1);
    CHECK(d2.blocks()[0].count == 2);

    JordanSpec j2 = jord({}, mf({{q12, 1}}));
    CHECK(j2.dimension() == 2);
    CHECK(j2.blocks()[0].size == 2);
    CHECK(j2.blocks()[0].exponent == q12);

    JordanSpec di = jord(mf({{q14, 1}, {q34, 1}}), {});
    CHECK(di.dimension() == 2);
    CHECK(di.blocks().size() == 2);
}

TEST_CASE("spec_charpoly_exponents") {
    CHECK(spec_charpoly_exponents(jord(mf({{q0, 2}}), {})) == mf({{q0, 2}}));
    CHECK(spec_charpoly_exponents(jord({}, mf({{q12, 1}}))) == mf({{q12, 2}}));
    CHECK(spec_charpoly_exponents(jord(mf({{q14, 1}, {q34, 1}}), mf({{q12, 1}}))) ==
          mf({{q14, 1}, {q34, 1}, {q12, 2}}));
}

TEST_CASE("materialize") {
    CHECK(materialize(jord(mf({{q0, 2}}), {}), 1) == CycloMatrix::identity(1, 2));

    CycloMatrix m = materialize(jord({}, mf({{q12, 1}})), 2);
    CHECK(m.at(0, 0) == CycloElem::from_rational(2, -1));
    CHECK(m.at(1, 1) == CycloElem::from_rational(2, -1));
    CHECK(m.at(1, 0) == CycloElem::from_rational(2, 1));  // subdiagonal convention
    CHECK(m.at(0, 1).is_zero());

    CHECK(materialize(jord(mf({{q0, 1}}), mf({{q14, 1}})), 4).rows() == 3);
    CHECK_THROWS_AS(materialize(jord(mf({{q14, 1}}), {}), 2), std::invalid_argument);
}

TEST_CASE("wedge_max_ranks") {
    // single block, j = m: exterior power is 1-dimensional
    JordanSpec one = JordanSpec::from_blocks({{q14, 3, 1}});
    auto top = wedge_max_ranks(one, 3);
    CHECK(top == std::map<QZElem, long>{{q34, 1}});  // 3 * (1/4) = 3/4

    // diag(1,1) + Jord_2(-1), j = 2
    JordanSpec s = jord(mf({{q0, 2}}), mf({{q12, 1}}));
    CHECK(wedge_max_ranks(s, 2) == std::map<QZElem, long>{{q0, 1}, {q12, 2}});

    // Jord_2(1) + Jord_1(1), j = 2
    JordanSpec s2 = JordanSpec::from_blocks({{q0, 2, 1}, {q0, 1, 1}});
    CHECK(wedge_max_ranks(s2, 2) == std::map<QZElem, long>{{q0, 2}});

    CHECK_THROWS_AS(wedge_max_ranks(s2, 4), std::invalid_argument);
}

TEST_CASE("single_block_wedge_amplitude") {
    CHECK(single_block_wedge_amplitude(5, 5) == 0);
    CHECK(single_block_wedge_amplitude(5, 1) == 4);
    CHECK(single_block_wedge_amplitude(3, 2) == 2);
    CHECK_THROWS_AS(single_block_wedge_amplitude(3, 4), std::invalid_argument);
}

TEST_CASE("wedge amplitude of one block against the oracle, m <= 8") {
    for (long m = 1; m <= 8; ++m) {
        JordanSpec spec = JordanSpec::from_blocks({{q12, (int)m, 1}});
        CycloMatrix mat = materialize(spec, 2);
        for (long j = 1; j <= m; ++j) {
            CycloMatrix w = wedge_matrix(mat, (int)j);
            JordanProfile p = jordan_profile(w, exps(2));
            long max_block = 0;
            for (const auto& [x, sizes] : p)
                max_block = std::max<long>(max_block, sizes.rbegin()->first);
            CHECK(single_block_wedge_amplitude(m, j) + 1 == max_block);
        }
    }
}

TEST_CASE("wedge_max_ranks against the matrix oracle on random specs") {
    Rng rng(31);
    for (int it = 0; it < 25; ++it) {
        long n = rng.uniform(1, 12);
        JordanSpec spec = random_jordan_spec(rng, n, 6);
        long j = rng.uniform(1, spec.dimension());
        JordanProfile p = jordan_profile(wedge_matrix(materialize(spec, n), (int)j), exps(n));
        std::map<QZElem, long> maxima;
        for (const auto& [x, sizes] : p) maxima[x] = sizes.rbegin()->first;
        CHECK(maxima == wedge_max_ranks(spec, j));
    }
}

TEST_CASE("spec text rendering") {
    JordanSpec s = jord(mf({{q14, 1}}), mf({{q12, 1}}));
    CHECK(s.str() == "Jord_1(exp(2\xCF\x80i\xC2\xB7" "1/4)) \xE2\x8A\x95 "
                     "Jord_2(exp(2\xCF\x80i\xC2\xB7" "1/2))");
}
