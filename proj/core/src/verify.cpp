#include "tamon/verify.hpp"

#include <algorithm>

#include "tamon/arith.hpp"

namespace tamon {

namespace {

struct Recorder {
    VerifyReport* report;
    long current_case = -1;

    void check(const std::string& name, bool ok, const std::string& detail) {
        report->checks_run[name]++;
        if (!ok) report->findings.push_back({current_case, name, detail});
    }
};

mpq_class small_rational(Rng& rng) { return mpq_class(rng.uniform(-2, 2)); }

}  // namespace

MultFunc random_complete(Rng& rng, long e, long target) {
    MultFunc f;
    std::vector<long> divs = divisors(e);
    long remaining = target;
    while (remaining > 0) {
        long d = divs[rng.uniform(0, (long)divs.size() - 1)];
        if (euler_phi(d) > remaining) continue;
        for (const QZElem& x : elements_of_order(d)) f.bump(x, 1);
        remaining -= euler_phi(d);
    }
    return f;
}

MultFunc random_multfunc(Rng& rng, long e, long max_norm) {
    MultFunc f;
    long budget = rng.uniform(0, max_norm);
    std::vector<long> divs = divisors(e);
    while (budget > 0) {
        long d = divs[rng.uniform(0, (long)divs.size() - 1)];
        auto elems = elements_of_order(d);
        f.bump(elems[rng.uniform(0, (long)elems.size() - 1)], 1);
        --budget;
    }
    return f;
}

namespace {

// Complete function of even norm with even value at 0 (and at 1/2):
// increments of 2 at orders 1 and 2, phi(d) is even for d >= 3.
MultFunc random_complete_even(Rng& rng, long e, long target) {
    MultFunc f;
    std::vector<long> divs = divisors(e);
    long remaining = target;
    while (remaining > 0) {
        long d = divs[rng.uniform(0, (long)divs.size() - 1)];
        long cost = d <= 2 ? 2 : euler_phi(d);
        if (cost > remaining) continue;
        long bump = d <= 2 ? 2 : 1;
        for (const QZElem& x : elements_of_order(d)) f.bump(x, bump);
        remaining -= cost;
    }
    return f;
}

}  // namespace

AbelianType random_admissible(Rng& rng, long max_g, long max_e) {
    AbelianType a;
    a.g = rng.uniform(1, max_g);
    a.e = rng.uniform(1, max_e);
    long t_pot = rng.uniform(0, a.g);
    long a_pot = a.g - t_pot;
    a.tor = random_complete(rng, a.e, t_pot);
    MultFunc h = random_complete_even(rng, a.e, 2 * a_pot);
    // split h = m_ab + m_dual_ab with m_dual_ab = reflect(m_ab)
    for (const auto& [x, v] : h.entries()) {
        if (x == -x) {
            a.ab.bump(x, v / 2);
            a.dual_ab.bump(x, v / 2);
        } else if (x < -x) {
            long k = rng.uniform(0, v);
            a.ab.bump(x, k);
            a.ab.bump(-x, v - k);
            a.dual_ab.bump(x, v - k);
            a.dual_ab.bump(-x, k);
        }
    }
    a.residue_char_zero = true;
    a.principally_polarized = rng.flip();
    auto viols = validate(a);
    if (!viols.empty()) throw std::logic_error("random_admissible: generator produced bad type");
    return a;
}

CycloMatrix random_nilpotent(Rng& rng, long n, int dim) {
    CycloMatrix m(n, dim, dim);
    for (int i = 1; i < dim; ++i)
        for (int j = 0; j < i; ++j)
            m.set(i, j, CycloElem::from_rational(n, small_rational(rng)));
    CycloMatrix s = random_unipotent(rng, n, dim);
    return s * m * *inverse(s);
}

CycloMatrix random_unipotent(Rng& rng, long n, int dim) {
    CycloMatrix m = CycloMatrix::identity(n, dim);
    for (int i = 1; i < dim; ++i)
        for (int j = 0; j < i; ++j)
            m.set(i, j, CycloElem::from_rational(n, small_rational(rng)));
    return m;
}

JordanSpec random_jordan_spec(Rng& rng, long n, long max_dim) {
    std::vector<JordanBlockGroup> blocks;
    long remaining = rng.uniform(1, max_dim);
    while (remaining > 0) {
        int size = (int)rng.uniform(1, std::min<long>(3, remaining));
        long num = rng.uniform(0, n - 1);
        blocks.push_back({QZElem::make(num, n), size, 1});
        remaining -= size;
    }
    return JordanSpec::from_blocks(std::move(blocks));
}

CycloMatrix random_quasi_unipotent(Rng& rng, long n, int dim, JordanSpec* spec_out) {
    JordanSpec spec = random_jordan_spec(rng, n, dim);
    CycloMatrix j = materialize(spec, n);
    CycloMatrix s = random_unipotent(rng, n, (int)spec.dimension());
    if (spec_out) *spec_out = spec;
    return s * j * *inverse(s);
}

namespace {

std::vector<QZElem> all_exponents(long n) {
    std::vector<QZElem> out;
    for (long k = 0; k < n; ++k) out.push_back(QZElem::make(k, n));
    return out;
}

std::map<QZElem, long> profile_max_blocks(const JordanProfile& p) {
    std::map<QZElem, long> out;
    for (const auto& [x, sizes] : p) out[x] = sizes.rbegin()->first;
    return out;
}

bool mass_all_at_zero(const AbelianType& a) {
    MultFunc total = add(a.tor, add(a.ab, a.dual_ab));
    for (const auto& [x, v] : total.entries())
        if (!x.is_zero()) return false;
    return true;
}

void check_abelian_case(Recorder& rec, Rng& rng, const AbelianType& a,
                        const AbelianType* previous, long case_index, const VerifyCaps& caps) {
    rec.current_case = case_index;
    rec.check("abvar.admissible", validate(a).empty(), "validate returned violations");

    RankReport r = ranks(a);
    mpq_class c = conductor(a);
    mpq_class c2 = conductor_cormult(a);
    rec.check("abvar.conductor.cormult", c == c2,
              "conductor " + rational_str(c) + " != cormult " + rational_str(c2));
    rec.check("abvar.conductor.range", c >= 0 && c < a.g, "conductor out of [0, g)");
    rec.check("abvar.conductor.semiabelian_iff", (c == 0) == mass_all_at_zero(a),
              "c(A)=0 must be equivalent to all mass at 0");
    if (r.a_pot == 0)
        rec.check("abvar.conductor.u_half", c == (mpq_class(r.u) / 2),
                  "a_pot=0 but c != u/2: c=" + rational_str(c));
    rec.check("abvar.ranks.sum", r.t + r.u + r.a == a.g && r.t_pot + r.a_pot == a.g &&
                                     r.t <= r.t_pot && r.a <= r.a_pot,
              "rank identities failed");

    AbelianType d = dual(a);
    rec.check("abvar.dual.involution", dual(d) == a, "dual(dual(A)) != A");
    rec.check("abvar.dual.admissible", validate(d).empty(), "dual of admissible not admissible");
    rec.check("abvar.isogeny_key.dual_invariant", isogeny_key(d) == isogeny_key(a),
              "isogeny key changed under dual");
    auto key = isogeny_key(a);
    rec.check("abvar.isogeny_key.reflection_invariant", reflect(key.second) == key.second,
              "m_ab + m_dual_ab not reflection invariant");

    rec.check("abvar.base_change.identity", base_change(a, 1) == a, "base_change(A,1) != A");
    AbelianType bc = base_change(a, a.e);
    rec.check("abvar.base_change.full",
              conductor(bc) == 0 && mass_all_at_zero(bc) && bc.e == 1,
              "base_change(A,e) not semi-abelian");
    long n1 = rng.uniform(1, 4), n2 = rng.uniform(1, 4);
    rec.check("abvar.base_change.composition",
              base_change(base_change(a, n1), n2) == base_change(a, n1 * n2),
              "base change composition law failed");
    rec.check("abvar.base_change.complete_preserved",
              is_complete(base_change(a, n1).tor) &&
                  is_complete(add(base_change(a, n1).ab, base_change(a, n1).dual_ab)),
              "completeness lost under base change");

    if (previous) {
        AbelianType p = product(a, *previous);
        rec.check("abvar.product.conductor_additive",
                  conductor(p) == conductor(a) + conductor(*previous),
                  "conductor not additive over products");
        RankReport rp = ranks(p), r2 = ranks(*previous);
        rec.check("abvar.product.ranks_additive",
                  rp.t == r.t + r2.t && rp.u == r.u + r2.u && rp.a == r.a + r2.a &&
                      rp.t_pot == r.t_pot + r2.t_pot && rp.a_pot == r.a_pot + r2.a_pot,
                  "ranks not additive over products");
        auto kp = isogeny_key(p), k2 = isogeny_key(*previous);
        rec.check("abvar.product.key_additive",
                  kp.first == add(key.first, k2.first) && kp.second == add(key.second, k2.second),
                  "isogeny keys not additive over products");
    }

    JordanSpec h1 = h1_monodromy(a);
    long size2 = 0;
    for (const auto& b : h1.blocks())
        if (b.size == 2) size2 += b.count;
    rec.check("abvar.h1.dimension", h1.dimension() == 2 * a.g && size2 == r.t_pot,
              "H^1 spec dimension / size-2 count wrong");

    IntPoly cp = h1_charpoly(a);
    rec.check("abvar.h1.charpoly_degree", cp.degree() == 2 * a.g && cp.is_monic(),
              "charpoly degree/monicity wrong");
    CycloFactorResult fact = factor_cyclotomic(cp);
    MultFunc expected_exps = add(add(a.ab, a.dual_ab), scale(a.tor, 2));
    rec.check("abvar.h1.charpoly_roundtrip",
              fact.ok() && mult_func_of(fact.factorization) == expected_exps,
              "charpoly does not factor back to the exponent function");

    HgAnalysis hg = hg_analysis(a);
    std::string hg_detail;
    for (const auto& f : hg.findings) hg_detail += f + "; ";
    rec.check("abvar.hg.blocksize", hg.findings.empty(), hg_detail);

    MhsSummary mhs = mhs_summary(a);
    rec.check("abvar.mhs.dims",
              norm(mhs.gr_0) + norm(mhs.gr_m1_hodge_10) + norm(mhs.gr_m1_hodge_01) +
                      norm(mhs.gr_m2) == 2 * a.g &&
                  mhs.gr_m1_hodge_10 == reflect(mhs.gr_m1_hodge_01),
              "MHS graded dimensions / Hodge symmetry failed");

    if (2 * a.g <= 8) {
        CycloMatrix m = materialize(h1, a.e);
        std::vector<CycloElem> oracle_cp = charpoly(m);
        bool match = true;
        for (int i = 0; i <= (int)oracle_cp.size() - 1 && match; ++i) {
            const CycloElem& co = oracle_cp[i];
            match = co.is_rational() && co.rational_part().get_den() == 1 &&
                    co.rational_part().get_num() == cp.coeff(i);
        }
        rec.check("abvar.h1.charpoly_oracle", match,
                  "symbolic charpoly disagrees with Faddeev-LeVerrier oracle");
    }

    if (2 * a.g <= 6 && case_index % 5 == 0) {
        CycloMatrix m = materialize(h1, a.e);
        JordanProfile prof = jordan_profile(m, all_exponents(a.e));
        rec.check("oracle.h1.jordan_profile", prof == profile_of(h1),
                  "materialized H^1 profile disagrees with the spec");
        CycloMatrix w = wedge_matrix(m, (int)a.g);
        JordanProfile wprof = jordan_profile(w, all_exponents(a.e));
        rec.check("oracle.hg.wedge_ranks",
                  profile_max_blocks(wprof) == wedge_max_ranks(h1, a.g),
                  "oracle max block sizes on H^g disagree with the tuple enumeration");
    }

    if (case_index % 10 == 0 && a.e <= 8 && binomial(2 * a.g, a.g) <= caps.oracle_dim_cap &&
        2 * a.g <= 6) {
        HgWeightProfile wp = hg_weight_profile(a, caps.oracle_dim_cap);
        std::string detail;
        for (const auto& f : wp.findings) detail += f + "; ";
        rec.check("oracle.hg.weight_profile", wp.findings.empty(), detail);
    }
}

void check_rational_circle(Recorder& rec, Rng& rng) {
    long e = rng.uniform(1, 12);
    MultFunc f = random_multfunc(rng, e, 6);
    MultFunc g = random_multfunc(rng, e, 6);
    rec.check("qz.reflect.involution", reflect(reflect(f)) == f, "reflect not an involution");
    rec.check("qz.norm.additive", norm(add(f, g)) == norm(f) + norm(g), "norm not additive");
    rec.check("qz.norm.reflect", norm(reflect(f)) == norm(f), "norm changed by reflect");
    long m = rng.uniform(1, 4), n = rng.uniform(1, 4);
    rec.check("qz.pushforward.norm", norm(pushforward(f, n)) == norm(f),
              "norm changed by pushforward");
    rec.check("qz.pushforward.composition",
              pushforward(pushforward(f, m), n) == pushforward(f, m * n),
              "pushforward composition failed");
    MultFunc c = random_complete(rng, e, rng.uniform(0, 5));
    rec.check("qz.complete.reflect_fixed", reflect(c) == c, "complete function moved by reflect");
    rec.check("qz.complete.pushforward", is_complete(pushforward(c, n)),
              "pushforward of complete not complete");
    rec.check("qz.semicomplete.definition", is_semicomplete(f) == is_complete(add(f, reflect(f))),
              "semicompleteness definition mismatch");
}

void check_cyclotomic(Recorder& rec, Rng& rng) {
    long e = rng.uniform(1, 60);
    MultFunc f = random_complete(rng, e, rng.uniform(1, 6));
    IntPoly p = q_poly(f);
    rec.check("cyclo.qpoly.degree", p.degree() == norm(f) && p.is_monic(),
              "deg q_poly != norm or not monic");
    CycloFactorResult fact = factor_cyclotomic(p);
    rec.check("cyclo.bijection", fact.ok() && mult_func_of(fact.factorization) == f,
              "factor_cyclotomic(q_poly(f)) != f");
    long n = rng.uniform(1, 60);
    IntPoly prod = IntPoly::one();
    for (long d : divisors(n)) prod = prod * cyclotomic(d);
    std::vector<mpz_class> tn(n + 1, mpz_class(0));
    tn[0] = -1;
    tn[n] = 1;
    rec.check("cyclo.product_identity", prod == IntPoly(std::move(tn)),
              "product of Phi_d over d|n != t^n - 1");
}

void check_linalg(Recorder& rec, Rng& rng) {
    long n = rng.uniform(1, 8);
    // field axioms on a random element
    long phi = euler_phi(n);
    std::vector<mpq_class> coeffs;
    bool nonzero = false;
    for (long i = 0; i < phi; ++i) {
        coeffs.push_back(small_rational(rng));
        nonzero |= coeffs.back() != 0;
    }
    if (nonzero) {
        CycloElem a(n, coeffs);
        rec.check("linalg.field.inverse", a * a.inverse() == CycloElem::from_rational(n, 1),
                  "a * a^-1 != 1");
    }

    long nc = rng.uniform(1, 4);
    CycloMatrix m(nc, 3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.set(i, j, CycloElem::from_rational(nc, small_rational(rng)));
    rec.check("linalg.rank_nullity", mat_rank(m) + kernel_basis(m).cols() == m.cols(),
              "rank + nullity != cols");

    CycloMatrix p(nc, 4, 4), q(nc, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            p.set(i, j, CycloElem::from_rational(nc, small_rational(rng)));
            q.set(i, j, CycloElem::from_rational(nc, small_rational(rng)));
        }
    int j = (int)rng.uniform(1, 3);
    rec.check("linalg.wedge.functorial",
              wedge_matrix(p * q, j) == wedge_matrix(p, j) * wedge_matrix(q, j),
              "wedge of product != product of wedges");

    JordanSpec spec;
    CycloMatrix qm = random_quasi_unipotent(rng, rng.uniform(1, 6), 4, &spec);
    auto cands = all_exponents(qm.conductor());
    rec.check("linalg.profile.similarity", jordan_profile(qm, cands) == profile_of(spec),
              "profile not invariant under conjugation");
    auto [ms, mn] = jordan_chevalley(qm, cands);
    rec.check("linalg.jc.decomposition",
              ms + mn == qm && mn.pow(qm.rows()).is_zero() && ms * mn == mn * ms,
              "Jordan-Chevalley identities failed");
}

void check_weight(Recorder& rec, Rng& rng) {
    long n = rng.uniform(1, 4);
    int dim = (int)rng.uniform(2, 5);
    CycloMatrix nil = random_nilpotent(rng, n, dim);
    int w = (int)rng.uniform(-2, 2);
    WeightFiltration wf = weight_filtration(nil, w);
    rec.check("weight.conditions", satisfies_weight_conditions(nil, wf),
              "defining conditions failed");

    // independent closed-form oracle: W_{w+k} = sum over b of
    // ker(N^{k+b+1}) cap im(N^b)
    bool formula_ok = true;
    for (int i = wf.lo(); i <= wf.hi() && formula_ok; ++i) {
        int k = i - w;
        CycloMatrix acc(n, dim, 0);
        CycloMatrix power = CycloMatrix::identity(n, dim);
        for (int b = 0; b <= dim; ++b) {
            int ke = k + b + 1;
            if (ke > 0) {
                CycloMatrix kb = kernel_basis(ke >= dim ? nil.pow(dim) : nil.pow(ke));
                CycloMatrix ib = column_echelon(power);
                CycloMatrix piece = b == 0 ? column_echelon(kb) : span_intersection(kb, ib);
                if (piece.cols() > 0) acc = span_sum(acc, piece);
            }
            power = power * nil;
        }
        formula_ok = same_span(acc, wf.basis_at(i));
    }
    rec.check("weight.kernel_image_formula", formula_ok,
              "Jordan-basis filtration disagrees with the kernel/image formula");

    CycloMatrix s = CycloMatrix::identity(n, dim) + nil + nil * nil;
    rec.check("weight.robust.commuting_unit", weight_filtration(nil * s, w) == wf,
              "W changed by a commuting unit");
    rec.check("weight.robust.deep_perturbation", weight_filtration(nil + nil * nil, w) == wf,
              "W changed by an N^2 perturbation");

    long amp = amplitude(wf);
    rec.check("weight.amplitude.center_free",
              amplitude(weight_filtration(nil, -3)) == amp &&
                  amplitude(weight_filtration(nil, 5)) == amp,
              "amplitude depends on center");

    bool symmetric = true;
    for (int a = 1; a <= (int)amp; ++a)
        symmetric &= wf.dim_at(w + a) - wf.dim_at(w + a - 1) ==
                     wf.dim_at(w - a) - wf.dim_at(w - a - 1);
    rec.check("weight.graded.symmetric", symmetric, "graded dims not symmetric about center");

    CycloMatrix neg_dual = (CycloMatrix(n, dim, dim) - nil).transpose();
    rec.check("weight.dual.operator", weight_filtration(neg_dual, -w) == dual_filtration(wf),
              "dual filtration != filtration of -N^T");
    rec.check("weight.dual.involution", dual_filtration(dual_filtration(wf)) == wf,
              "dual not an involution");
}

void check_weight_tensor(Recorder& rec, Rng& rng) {
    long n = rng.uniform(1, 4);
    CycloMatrix m1 = random_quasi_unipotent(rng, n, 3, nullptr);
    CycloMatrix m2 = random_quasi_unipotent(rng, n, 3, nullptr);
    auto cands = all_exponents(n);
    int w1 = (int)rng.uniform(-1, 1), w2 = (int)rng.uniform(-1, 1);
    WeightFiltration wf1 = weight_filtration(jordan_chevalley(m1, cands).second, w1);
    WeightFiltration wf2 = weight_filtration(jordan_chevalley(m2, cands).second, w2);

    CycloMatrix t = kron(m1, m2);
    WeightFiltration wt = weight_filtration(jordan_chevalley(t, cands).second, w1 + w2);
    rec.check("weight.tensor.oracle", wt == tensor_filtration(wf1, wf2),
              "tensor filtration != weight filtration of the tensor operator");

    int j = (int)rng.uniform(1, m1.rows());
    CycloMatrix wj = wedge_matrix(m1, j);
    WeightFiltration ww = weight_filtration(jordan_chevalley(wj, cands).second, w1 * j);
    rec.check("weight.wedge.oracle", ww == wedge_filtration(wf1, j),
              "wedge filtration != weight filtration of the wedge operator");
}

void check_jordan(Recorder& rec, Rng& rng) {
    long n = rng.uniform(1, 12);
    JordanSpec spec = random_jordan_spec(rng, n, 6);
    long j = rng.uniform(1, spec.dimension());
    CycloMatrix m = materialize(spec, n);
    JordanProfile prof = jordan_profile(wedge_matrix(m, (int)j), all_exponents(n));
    rec.check("jordan.wedge_max_ranks.oracle",
              profile_max_blocks(prof) == wedge_max_ranks(spec, j),
              "symbolic wedge max ranks disagree with the matrix oracle");

    MultFunc m1 = random_multfunc(rng, n, 3);
    MultFunc m2 = random_multfunc(rng, n, 2);
    rec.check("jordan.charpoly_exponents",
              spec_charpoly_exponents(jord(m1, m2)) == add(m1, scale(m2, 2)),
              "charpoly exponents of Jord(m1, m2) != m1 + 2*m2");
    if (norm(m1) + 2 * norm(m2) > 0) {
        JordanProfile p = jordan_profile(materialize(jord(m1, m2), n), all_exponents(n));
        bool ok = true;
        for (const auto& [x, sizes] : p)
            for (const auto& [size, count] : sizes)
                ok &= (size == 1 && count == m1.at(x)) || (size == 2 && count == m2.at(x));
        for (const auto& [x, v] : m1.entries()) ok &= p[x][1] == v;
        for (const auto& [x, v] : m2.entries()) ok &= p[x][2] == v;
        rec.check("jordan.block_configuration", ok,
                  "materialized Jord(m1, m2) has wrong block counts");
    }
}

void check_single_block_amplitudes(Recorder& rec) {
    QZElem half = QZElem::make(1, 2);
    for (long m = 1; m <= 6; ++m) {
        JordanSpec spec = JordanSpec::from_blocks({{half, (int)m, 1}});
        CycloMatrix mat = materialize(spec, 2);
        for (long j = 1; j <= m; ++j) {
            CycloMatrix w = wedge_matrix(mat, (int)j);
            auto [ms, mn] = jordan_chevalley(w, all_exponents(2));
            long amp = amplitude(weight_filtration(mn, 0));
            rec.check("jordan.single_block_amplitude",
                      amp == single_block_wedge_amplitude(m, j),
                      "amplitude of wedge of a single block != j(m-j) at m=" +
                          std::to_string(m) + ", j=" + std::to_string(j));
            JordanProfile prof = jordan_profile(w, all_exponents(2));
            long mx = 0;
            for (const auto& [x, sizes] : prof) mx = std::max(mx, (long)sizes.rbegin()->first);
            rec.check("jordan.amplitude_block_bridge", amp + 1 == mx,
                      "amplitude + 1 != max Jordan block of the wedge");
        }
    }
}

}  // namespace

VerifyReport verify_harness(std::uint64_t seed, long cases, const VerifyCaps& caps) {
    VerifyReport report;
    report.seed = seed;
    report.cases = cases;
    report.caps = caps;
    if (cases <= 0) return report;

    Rng rng(seed);
    Recorder rec{&report};

    AbelianType previous;
    bool have_previous = false;
    for (long i = 0; i < cases; ++i) {
        AbelianType a = random_admissible(rng, caps.max_g, caps.max_e);
        check_abelian_case(rec, rng, a, have_previous ? &previous : nullptr, i, caps);
        previous = a;
        have_previous = true;
    }

    rec.current_case = -1;
    for (long i = 0; i < cases; ++i) check_rational_circle(rec, rng);
    for (long i = 0; i < cases; ++i) check_cyclotomic(rec, rng);
    for (long i = 0; i < std::max<long>(1, cases / 5); ++i) check_linalg(rec, rng);
    for (long i = 0; i < std::max<long>(1, cases / 10); ++i) check_weight(rec, rng);
    for (long i = 0; i < std::max<long>(1, cases / 10); ++i) check_weight_tensor(rec, rng);
    for (long i = 0; i < std::max<long>(1, cases / 10); ++i) check_jordan(rec, rng);
    check_single_block_amplitudes(rec);

    return report;
}

Json verify_report_to_json(const VerifyReport& r) {
    Json checks = Json::object();
    for (const auto& [name, count] : r.checks_run) checks[name] = count;
    Json findings = Json::array();
    for (const auto& f : r.findings)
        findings.push_back({{"case", f.case_index}, {"check", f.check}, {"detail", f.detail}});
    return Json{{"seed", r.seed},
                {"cases", r.cases},
                {"caps",
                 {{"max_g", r.caps.max_g},
                  {"max_e", r.caps.max_e},
                  {"oracle_dim_cap", r.caps.oracle_dim_cap}}},
                {"checks_run", std::move(checks)},
                {"findings", std::move(findings)}};
}

}  // namespace tamon
