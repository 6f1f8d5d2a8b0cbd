#include "tamon/abvar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tamon/arith.hpp"

namespace tamon {

namespace {

bool supported_on(const MultFunc& f, long e) {
    for (const auto& [x, v] : f.entries())
        if (e % x.order() != 0) return false;
    return true;
}

void require_admissible(const AbelianType& a) {
    auto v = validate(a);
    if (!v.empty()) {
        std::ostringstream os;
        os << "inadmissible abelian type:";
        for (const auto& viol : v) os << " [" << viol.invariant << ": " << viol.detail << "]";
        throw std::invalid_argument(os.str());
    }
}

std::string func_str(const MultFunc& f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [x, v] : f.entries()) {
        if (!first) os << ", ";
        os << x.str() << ":" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

std::vector<Violation> validate(const AbelianType& a) {
    std::vector<Violation> out;
    if (a.g < 1) out.push_back({"dimension", "g must be positive"});
    if (a.e < 1) out.push_back({"degree", "e must be positive"});
    if (a.g < 1 || a.e < 1) return out;
    if (!supported_on(a.tor, a.e))
        out.push_back({"support", "Supp(m_tor) not contained in (1/e)Z/Z, e=" + std::to_string(a.e)});
    if (!supported_on(a.ab, a.e))
        out.push_back({"support", "Supp(m_ab) not contained in (1/e)Z/Z, e=" + std::to_string(a.e)});
    if (!supported_on(a.dual_ab, a.e))
        out.push_back(
            {"support", "Supp(m_dual_ab) not contained in (1/e)Z/Z, e=" + std::to_string(a.e)});
    if (norm(a.tor) + norm(a.ab) != a.g)
        out.push_back({"total-mass", "||m_tor|| + ||m_ab|| = " +
                                         std::to_string(norm(a.tor) + norm(a.ab)) +
                                         " but g = " + std::to_string(a.g)});
    if (norm(a.ab) != norm(a.dual_ab))
        out.push_back({"abelian-norm", "||m_ab|| = " + std::to_string(norm(a.ab)) +
                                           " != ||m_dual_ab|| = " + std::to_string(norm(a.dual_ab))});
    QZElem zero;
    if (a.ab.at(zero) != a.dual_ab.at(zero))
        out.push_back({"abelian-rank", "m_ab(0) != m_dual_ab(0)"});
    if (!is_complete(a.tor)) out.push_back({"tor-complete", "m_tor not complete: " + func_str(a.tor)});
    if (!is_complete(add(a.ab, a.dual_ab)))
        out.push_back({"ab-sum-complete",
                       "m_ab + m_dual_ab not complete: " + func_str(add(a.ab, a.dual_ab))});
    if ((a.residue_char_zero || a.principally_polarized) && a.dual_ab != reflect(a.ab))
        out.push_back({"reflexivity", "m_dual_ab != reflect(m_ab) under char-zero/pp hypotheses"});
    return out;
}

bool is_admissible(const AbelianType& a) { return validate(a).empty(); }

mpq_class conductor(const AbelianType& a) {
    require_admissible(a);
    mpq_class c = 0;
    MultFunc total = add(a.tor, a.ab);
    for (const auto& [x, v] : total.entries()) c += v * x.value();
    return c;
}

mpq_class conductor_cormult(const AbelianType& a) {
    require_admissible(a);
    mpq_class c = mpq_class(norm(a.tor) - a.tor.at(QZElem())) / 2;
    for (const auto& [x, v] : a.ab.entries())
        if (!x.is_zero()) c += v * x.value();
    return c;
}

RankReport ranks(const AbelianType& a) {
    require_admissible(a);
    RankReport r;
    QZElem zero;
    r.t = a.tor.at(zero);
    r.a = a.ab.at(zero);
    r.t_pot = norm(a.tor);
    r.a_pot = norm(a.ab);
    r.u = a.g - r.t - r.a;
    long u_check = 0;
    MultFunc total = add(a.tor, a.ab);
    for (const auto& [x, v] : total.entries())
        if (!x.is_zero()) u_check += v;
    if (u_check != r.u) throw std::logic_error("ranks: unipotent rank cross-check failed");
    r.c = conductor(a);
    return r;
}

AbelianType base_change(const AbelianType& a, long n) {
    require_admissible(a);
    if (n < 1) throw std::invalid_argument("base_change: degree must be positive");
    AbelianType b = a;
    b.tor = pushforward(a.tor, n);
    b.ab = pushforward(a.ab, n);
    b.dual_ab = pushforward(a.dual_ab, n);
    b.e = a.e / gcd_long(a.e, n);
    require_admissible(b);
    return b;
}

AbelianType product(const AbelianType& a1, const AbelianType& a2) {
    require_admissible(a1);
    require_admissible(a2);
    if (a1.residue_char_zero != a2.residue_char_zero)
        throw std::invalid_argument("product: residue characteristic flags conflict");
    AbelianType p;
    p.g = a1.g + a2.g;
    p.e = lcm_long(a1.e, a2.e);
    p.tor = add(a1.tor, a2.tor);
    p.ab = add(a1.ab, a2.ab);
    p.dual_ab = add(a1.dual_ab, a2.dual_ab);
    p.residue_char_zero = a1.residue_char_zero;
    p.principally_polarized = a1.principally_polarized && a2.principally_polarized;
    require_admissible(p);
    return p;
}

AbelianType dual(const AbelianType& a) {
    require_admissible(a);
    AbelianType d = a;
    d.ab = reflect(a.dual_ab);
    d.dual_ab = reflect(a.ab);
    require_admissible(d);
    return d;
}

std::pair<MultFunc, MultFunc> isogeny_key(const AbelianType& a) {
    return {a.tor, add(a.ab, a.dual_ab)};
}

bool is_reflexive(const AbelianType& a) { return a.dual_ab == reflect(a.ab); }

JordanSpec h1_monodromy(const AbelianType& a) {
    require_admissible(a);
    return jord(add(a.ab, a.dual_ab), a.tor);
}

IntPoly h1_charpoly(const AbelianType& a) {
    require_admissible(a);
    MultFunc exps = add(add(a.ab, a.dual_ab), scale(a.tor, 2));
    IntPoly p = charpoly_from_exponents(exps);
    if (p != q_poly(spec_charpoly_exponents(h1_monodromy(a))))
        throw std::logic_error("h1_charpoly: disagrees with the Jordan-spec exponents");
    return p;
}

HgAnalysis hg_analysis(const AbelianType& a) {
    require_admissible(a);
    HgAnalysis out;
    mpq_class c = conductor(a);
    out.pole_candidate = QZElem::make(c.get_num(), c.get_den());
    out.per_eigenvalue = wedge_max_ranks(h1_monodromy(a), a.g);
    long t_pot = norm(a.tor);
    for (const auto& [x, mx] : out.per_eigenvalue)
        out.global_max_block = std::max(out.global_max_block, mx);
    auto it = out.per_eigenvalue.find(out.pole_candidate);
    out.max_block_at_candidate = it == out.per_eigenvalue.end() ? 0 : it->second;
    if (out.max_block_at_candidate != t_pot + 1) {
        std::ostringstream os;
        os << "block-size theorem violated: max block at exp(2pi*i*" << out.pole_candidate.str()
           << ") is " << out.max_block_at_candidate << ", expected t_pot+1 = " << t_pot + 1;
        out.findings.push_back(os.str());
    }
    if (out.global_max_block != t_pot + 1) {
        std::ostringstream os;
        os << "block-size theorem violated: global max block is " << out.global_max_block
           << ", expected t_pot+1 = " << t_pot + 1;
        out.findings.push_back(os.str());
    }
    return out;
}

MhsSummary mhs_summary(const AbelianType& a) {
    require_admissible(a);
    if (!a.residue_char_zero)
        throw std::invalid_argument("mhs_summary: limit MHS requires the complex-analytic setting");
    MhsSummary s;
    s.gr_0 = a.tor;
    s.gr_m2 = a.tor;
    s.gr_m1_hodge_10 = a.ab;
    s.gr_m1_hodge_01 = a.dual_ab;
    return s;
}

HgWeightProfile hg_weight_profile(const AbelianType& a, long cap) {
    require_admissible(a);
    long dim_hg = binomial(2 * a.g, a.g);
    if (dim_hg > cap) throw std::length_error("hg_weight_profile: oracle too large");
    HgWeightProfile out;

    long n = a.e;
    CycloMatrix h1 = materialize(h1_monodromy(a), n);
    CycloMatrix hg = a.g == 1 ? h1 : wedge_matrix(h1, (int)a.g);
    std::vector<QZElem> candidates;
    for (long k = 0; k < n; ++k) candidates.push_back(QZElem::make(k, n));
    auto [ms, mn] = jordan_chevalley(hg, candidates);
    WeightFiltration wf = weight_filtration(mn, (int)a.g);

    // multiplicity of lambda on Gr_i: jump of dim(W_i cap E_lambda)
    std::map<QZElem, CycloMatrix> eig;
    for (const QZElem& x : candidates) {
        CycloMatrix e = generalized_eigenspace(hg, x);
        if (e.cols() > 0) eig.emplace(x, std::move(e));
    }
    for (int i = wf.lo(); i <= wf.hi(); ++i) {
        for (const auto& [x, e] : eig) {
            long below =
                i - 1 < wf.lo() ? 0 : span_intersection(wf.basis_at(i - 1), e).cols();
            long here = span_intersection(wf.basis_at(i), e).cols();
            if (here > below) out.graded_eigen[i][x] = here - below;
        }
    }

    mpq_class c = conductor(a);
    QZElem candidate = QZElem::make(c.get_num(), c.get_den());
    long largest_alpha = 0;
    bool found = false;
    for (const auto& [i, eigs] : out.graded_eigen)
        if (eigs.count(candidate)) {
            largest_alpha = i - a.g;
            found = true;
        }
    out.largest_alpha_with_candidate = largest_alpha;
    out.amplitude_plus_one = amplitude(wf) + 1;

    long t_pot = norm(a.tor);
    if (!found || largest_alpha != t_pot) {
        std::ostringstream os;
        os << "weight theorem violated: largest alpha carrying exp(2pi*i*" << candidate.str()
           << ") is " << (found ? std::to_string(largest_alpha) : std::string("absent"))
           << ", expected t_pot = " << t_pot;
        out.findings.push_back(os.str());
    }
    HgAnalysis symbolic = hg_analysis(a);
    if (out.amplitude_plus_one != symbolic.global_max_block) {
        std::ostringstream os;
        os << "amplitude bridge violated: amplitude+1 = " << out.amplitude_plus_one
           << " but symbolic max block = " << symbolic.global_max_block;
        out.findings.push_back(os.str());
    }
    return out;
}

}  // namespace tamon
