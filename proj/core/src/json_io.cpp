#include "tamon/json_io.hpp"

namespace tamon {

namespace {

mpq_class rational_from_str(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: " + s);
    }
}

QZElem qz_from_key(const std::string& key) {
    auto x = QZElem::parse(key);
    if (!x) throw ParseError("bad Q/Z key (must be a reduced fraction in [0,1)): " + key);
    return *x;
}

}  // namespace

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json multfunc_to_json(const MultFunc& f) {
    Json j = Json::object();
    for (const auto& [x, v] : f.entries()) j[x.str()] = v;
    return j;
}

MultFunc multfunc_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("MultFunc: expected object");
    MultFunc f;
    for (const auto& [key, val] : j.items()) {
        if (!val.is_number_integer() || val.get<long>() <= 0)
            throw ParseError("MultFunc: values must be positive integers");
        f.set(qz_from_key(key), val.get<long>());
    }
    return f;
}

Json intpoly_to_json(const IntPoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.get_str());
    return j;
}

IntPoly intpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("IntPoly: expected array of coefficient strings");
    std::vector<mpz_class> c;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError("IntPoly: coefficients must be decimal strings");
        try {
            c.emplace_back(e.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("IntPoly: bad integer: " + e.get<std::string>());
        }
    }
    return IntPoly(std::move(c));
}

Json jordan_spec_to_json(const JordanSpec& s) {
    Json j = Json::array();
    for (const auto& b : s.blocks())
        j.push_back({{"exponent", b.exponent.str()}, {"size", b.size}, {"count", b.count}});
    return j;
}

JordanSpec jordan_spec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("JordanSpec: expected array");
    std::vector<JordanBlockGroup> blocks;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("exponent") || !e.contains("size") ||
            !e.contains("count"))
            throw ParseError("JordanSpec: blocks need exponent/size/count");
        JordanBlockGroup b;
        b.exponent = qz_from_key(e.at("exponent").get<std::string>());
        b.size = e.at("size").get<int>();
        b.count = e.at("count").get<long>();
        if (b.size < 1 || b.count < 1) throw ParseError("JordanSpec: size and count must be positive");
        blocks.push_back(b);
    }
    return JordanSpec::from_blocks(std::move(blocks));
}

Json cyclo_matrix_to_json(const CycloMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            Json entry = Json::array();
            for (const auto& q : m.at(i, j).coeffs()) entry.push_back(rational_str(q));
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"N", m.conductor()}, {"rows", std::move(rows)}};
}

CycloMatrix cyclo_matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("rows"))
        throw ParseError("CycloMatrix: expected {N, rows}");
    long n = j.at("N").get<long>();
    if (n < 1) throw ParseError("CycloMatrix: conductor must be positive");
    const Json& rows = j.at("rows");
    if (!rows.is_array()) throw ParseError("CycloMatrix: rows must be an array");
    int r = (int)rows.size();
    int c = r == 0 ? 0 : (int)rows.at(0).size();
    CycloMatrix m(n, r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows.at(i).size() != c) throw ParseError("CycloMatrix: ragged rows");
        for (int k = 0; k < c; ++k) {
            const Json& entry = rows.at(i).at(k);
            if (!entry.is_array()) throw ParseError("CycloMatrix: entry must be an array");
            std::vector<mpq_class> coeffs;
            for (const auto& q : entry) {
                if (!q.is_string()) throw ParseError("CycloMatrix: coefficients must be strings");
                coeffs.push_back(rational_from_str(q.get<std::string>()));
            }
            try {
                m.set(i, k, CycloElem(n, std::move(coeffs)));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
    }
    return m;
}

Json abelian_type_to_json(const AbelianType& a) {
    return Json{{"g", a.g},
                {"e", a.e},
                {"tor", multfunc_to_json(a.tor)},
                {"ab", multfunc_to_json(a.ab)},
                {"dual_ab", multfunc_to_json(a.dual_ab)},
                {"flags",
                 {{"residue_char_zero", a.residue_char_zero},
                  {"principally_polarized", a.principally_polarized}}}};
}

AbelianType abelian_type_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("AbelianType: expected object");
    for (const char* key : {"g", "e", "tor", "ab", "dual_ab"})
        if (!j.contains(key)) throw ParseError(std::string("AbelianType: missing field ") + key);
    AbelianType a;
    a.g = j.at("g").get<long>();
    a.e = j.at("e").get<long>();
    a.tor = multfunc_from_json(j.at("tor"));
    a.ab = multfunc_from_json(j.at("ab"));
    a.dual_ab = multfunc_from_json(j.at("dual_ab"));
    if (j.contains("flags")) {
        const Json& f = j.at("flags");
        a.residue_char_zero = f.value("residue_char_zero", true);
        a.principally_polarized = f.value("principally_polarized", false);
    }
    return a;
}

Json rank_report_to_json(const RankReport& r) {
    return Json{{"t", r.t},         {"u", r.u},
                {"a", r.a},         {"t_pot", r.t_pot},
                {"a_pot", r.a_pot}, {"conductor", rational_str(r.c)}};
}

Json violations_to_json(const std::vector<Violation>& v) {
    Json j = Json::array();
    for (const auto& viol : v) j.push_back({{"invariant", viol.invariant}, {"detail", viol.detail}});
    return j;
}

Json qz_map_to_json(const std::map<QZElem, long>& m) {
    Json j = Json::object();
    for (const auto& [x, v] : m) j[x.str()] = v;
    return j;
}

Json hg_analysis_to_json(const HgAnalysis& h) {
    return Json{{"pole_candidate", h.pole_candidate.str()},
                {"max_block_at_candidate", h.max_block_at_candidate},
                {"global_max_block", h.global_max_block},
                {"per_eigenvalue", qz_map_to_json(h.per_eigenvalue)},
                {"findings", h.findings}};
}

Json mhs_summary_to_json(const MhsSummary& s) {
    return Json{{"gr_0", multfunc_to_json(s.gr_0)},
                {"gr_m1_hodge_10", multfunc_to_json(s.gr_m1_hodge_10)},
                {"gr_m1_hodge_01", multfunc_to_json(s.gr_m1_hodge_01)},
                {"gr_m2", multfunc_to_json(s.gr_m2)}};
}

Json hg_weight_profile_to_json(const HgWeightProfile& p) {
    Json graded = Json::object();
    for (const auto& [i, eigs] : p.graded_eigen) graded[std::to_string(i)] = qz_map_to_json(eigs);
    return Json{{"graded_eigenvalues", std::move(graded)},
                {"largest_alpha_with_candidate", p.largest_alpha_with_candidate},
                {"amplitude_plus_one", p.amplitude_plus_one},
                {"findings", p.findings}};
}

Json jordan_profile_to_json(const JordanProfile& p) {
    Json j = Json::object();
    for (const auto& [x, sizes] : p) {
        Json s = Json::object();
        for (const auto& [size, count] : sizes) s[std::to_string(size)] = count;
        j[x.str()] = std::move(s);
    }
    return j;
}

Json weight_filtration_to_json(const WeightFiltration& w) {
    Json g = Json::object();
    for (const auto& [i, d] : w.graded_dims()) g[std::to_string(i)] = d;
    return Json{{"center", w.center()}, {"graded_dims", std::move(g)}};
}

Json cyclo_factor_result_to_json(const CycloFactorResult& r) {
    Json f = Json::object();
    for (const auto& [d, c] : r.factorization.factors) f[std::to_string(d)] = c;
    Json j{{"factors", std::move(f)}};
    if (!r.ok()) j["residual"] = intpoly_to_json(r.residual);
    return j;
}

}  // namespace tamon
