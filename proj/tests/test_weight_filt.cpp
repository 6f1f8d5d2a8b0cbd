#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamon/jordan_calc.hpp"
#include "tamon/verify.hpp"
#include "tamon/weight_filt.hpp"

using namespace tamon;

namespace {

const QZElem q0 = QZElem::make(0, 1);
const QZElem q12 = QZElem::make(1, 2);

std::vector<QZElem> exps(long n) {
    std::vector<QZElem> out;
    for (long k = 0; k < n; ++k) out.push_back(QZElem::make(k, n));
    return out;
}

CycloMatrix nilpotent_block(int m) {
    CycloMatrix n(1, m, m);
    for (int i = 1; i < m; ++i) n.set(i, i - 1, CycloElem::from_rational(1, 1));
    return n;
}

}  // namespace

TEST_CASE("zero operator") {
    WeightFiltration w = weight_filtration(CycloMatrix(1, 3, 3), 2);
    CHECK(w.dim_at(1) == 0);
    CHECK(w.dim_at(2) == 3);
    CHECK(amplitude(w) == 0);
    CHECK(w.graded_dims() == std::map<int, long>{{2, 3}});
}

TEST_CASE("single size-3 block centered 0") {
    WeightFiltration w = weight_filtration(nilpotent_block(3), 0);
    CHECK(w.graded_dims() == std::map<int, long>{{-2, 1}, {0, 1}, {2, 1}});
    CHECK(amplitude(w) == 2);
}

TEST_CASE("Jord_2(0) centered -1: W_-2 = im N, W_-1 = ker N") {
    CycloMatrix n = nilpotent_block(2);
    WeightFiltration w = weight_filtration(n, -1);
    CHECK(w.graded_dims() == std::map<int, long>{{-2, 1}, {0, 1}});
    CHECK(same_span(w.basis_at(-2), column_echelon(n)));
    CHECK(same_span(w.basis_at(-1), kernel_basis(n)));
}

TEST_CASE("non-nilpotent input rejected") {
    CHECK_THROWS_AS(weight_filtration(CycloMatrix::identity(1, 2), 0), std::invalid_argument);
}

TEST_CASE("amplitude examples") {
    CHECK(amplitude(weight_filtration(nilpotent_block(5), 1)) == 4);
    MultFunc m1;
    m1.set(q0, 1);
    JordanSpec s = JordanSpec::from_blocks({{q0, 3, 1}, {q0, 1, 1}});
    auto [ms, mn] = jordan_chevalley(materialize(s, 1), {q0});
    CHECK(amplitude(weight_filtration(mn, 0)) == 2);
}

TEST_CASE("max_block_from_amplitude") {
    CHECK(max_block_from_amplitude(CycloMatrix::identity(1, 3), {q0}) == 1);
    CHECK(max_block_from_amplitude(materialize(JordanSpec::from_blocks({{q12, 2, 1}}), 2),
                                   exps(2)) == 2);
    MultFunc m1, m2;
    m1.set(q0, 2);
    m2.set(q12, 1);
    CHECK(max_block_from_amplitude(materialize(jord(m1, m2), 2), exps(2)) == 2);
}

TEST_CASE("dual filtration") {
    CycloMatrix n = nilpotent_block(2);
    WeightFiltration w = weight_filtration(n, -1);
    WeightFiltration d = dual_filtration(w);
    CHECK(d.center() == 1);
    CHECK(d == weight_filtration((CycloMatrix(1, 2, 2) - n).transpose(), 1));
    CHECK(dual_filtration(d) == w);
}

TEST_CASE("tensor filtration convolution") {
    CycloMatrix n = nilpotent_block(2);
    WeightFiltration w = weight_filtration(n, 0);
    WeightFiltration t = tensor_filtration(w, w);
    CHECK(t.graded_dims() == std::map<int, long>{{-2, 1}, {0, 2}, {2, 1}});
    CHECK(t == weight_filtration(tensor_operator(n, n), 0));
}

TEST_CASE("tensor with a trivial one-dimensional factor") {
    WeightFiltration w = weight_filtration(nilpotent_block(3), 0);
    WeightFiltration triv = weight_filtration(CycloMatrix(1, 1, 1), 0);
    CHECK(tensor_filtration(w, triv) == w);
}

TEST_CASE("wedge filtration") {
    WeightFiltration w = weight_filtration(nilpotent_block(3), 0);
    WeightFiltration l2 = wedge_filtration(w, 2);
    CHECK(l2.graded_dims() == std::map<int, long>{{-2, 1}, {0, 1}, {2, 1}});
    CHECK(amplitude(l2) == 2);
    CHECK(wedge_filtration(w, 1) == w);
    WeightFiltration top = wedge_filtration(w, 3);
    CHECK(top.ambient_dim() == 1);
    CHECK(amplitude(top) == 0);
}

TEST_CASE("randomized filtration properties") {
    Rng rng(555);
    for (int it = 0; it < 25; ++it) {
        long n = rng.uniform(1, 4);
        int dim = (int)rng.uniform(2, 6);
        CycloMatrix nil = random_nilpotent(rng, n, dim);
        int w = (int)rng.uniform(-2, 2);
        WeightFiltration wf = weight_filtration(nil, w);
        CHECK(satisfies_weight_conditions(nil, wf));
        CycloMatrix s = CycloMatrix::identity(n, dim) + nil + nil * nil;
        CHECK(weight_filtration(nil * s, w) == wf);
        CHECK(weight_filtration(nil + nil * nil, w) == wf);
        long amp = amplitude(wf);
        CHECK(amplitude(weight_filtration(nil, -3)) == amp);
        CHECK(amplitude(weight_filtration(nil, 5)) == amp);
        for (int a = 1; a <= (int)amp; ++a)
            CHECK(wf.dim_at(w + a) - wf.dim_at(w + a - 1) ==
                  wf.dim_at(w - a) - wf.dim_at(w - a - 1));
        CHECK(weight_filtration((CycloMatrix(n, dim, dim) - nil).transpose(), -w) ==
              dual_filtration(wf));
    }
}

TEST_CASE("tensor and wedge against the from-operator filtrations") {
    Rng rng(556);
    for (int it = 0; it < 10; ++it) {
        long n = rng.uniform(1, 4);
        CycloMatrix m1 = random_quasi_unipotent(rng, n, 4, nullptr);
        CycloMatrix m2 = random_quasi_unipotent(rng, n, 4, nullptr);
        WeightFiltration w1 = weight_filtration(jordan_chevalley(m1, exps(n)).second, 0);
        WeightFiltration w2 = weight_filtration(jordan_chevalley(m2, exps(n)).second, 1);
        CycloMatrix t = kron(m1, m2);
        CHECK(weight_filtration(jordan_chevalley(t, exps(n)).second, 1) ==
              tensor_filtration(w1, w2));
        int j = (int)rng.uniform(1, m1.rows());
        CycloMatrix wj = wedge_matrix(m1, j);
        CHECK(weight_filtration(jordan_chevalley(wj, exps(n)).second, 0) ==
              wedge_filtration(w1, j));
    }
}
