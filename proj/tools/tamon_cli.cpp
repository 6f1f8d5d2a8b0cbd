// tamon: invariants of tamely ramified abelian varieties from
// multiplicity-function data. JSON in, JSON (or text) out.
//
// Exit codes: 0 success, 1 validation / theorem-violation findings,
// 2 parse or usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tamon/json_io.hpp"
#include "tamon/verify.hpp"

using namespace tamon;

namespace {

Json load_json(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw ParseError("cannot open " + path);
        in = &file;
    }
    try {
        return Json::parse(*in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long x = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || x <= 0)
        throw ParseError(std::string(name) + " must be a positive integer");
    return x;
}

std::string poly_text(const IntPoly& p) { return p.str(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact monodromy/Hodge invariants of tamely ramified abelian varieties"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string path = "-", path2;
    long degree = 1, cap = 0, wedge_j = 1;
    int center = 0;
    std::uint64_t seed = 0;
    long cases = 0;
    VerifyCaps caps;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", path, "input JSON file (- for stdin)");
        return sub;
    };

    auto* c_validate = with_input(app.add_subcommand("validate", "check admissibility"));
    auto* c_ranks = with_input(app.add_subcommand("ranks", "toric/unipotent/abelian ranks"));
    auto* c_cond = with_input(app.add_subcommand("conductor", "base change conductor"));
    auto* c_h1 = with_input(app.add_subcommand("h1", "monodromy Jordan spec on H^1"));
    auto* c_charpoly = with_input(app.add_subcommand("charpoly", "charpoly of monodromy on H^1"));
    auto* c_hg = with_input(app.add_subcommand("hg", "max Jordan blocks on H^g per eigenvalue"));
    auto* c_bc = with_input(app.add_subcommand("base-change", "push the type down a degree-n extension"));
    c_bc->add_option("--degree", degree, "extension degree")->required()->check(CLI::PositiveNumber);
    auto* c_prod = app.add_subcommand("product", "product of two types");
    c_prod->add_option("first", path, "first type")->required();
    c_prod->add_option("second", path2, "second type")->required();
    auto* c_dual = with_input(app.add_subcommand("dual", "dual abelian variety"));
    auto* c_key = with_input(app.add_subcommand("isogeny-key", "isogeny-invariant pair"));
    auto* c_mhs = with_input(app.add_subcommand("mhs", "limit mixed Hodge structure gradeds"));
    auto* c_hgw = with_input(app.add_subcommand("hg-weight", "brute-force weight profile of H^g"));
    c_hgw->add_option("--cap", cap, "max allowed dim of H^g");
    auto* c_wedge = with_input(app.add_subcommand("wedge", "max block per eigenvalue on a wedge power"));
    c_wedge->add_option("--j", wedge_j, "exterior power")->required()->check(CLI::PositiveNumber);
    auto* c_wf = with_input(app.add_subcommand("weight-filtration", "weight filtration of a nilpotent matrix"));
    c_wf->add_option("--center", center, "center weight");
    auto* c_qpoly = with_input(app.add_subcommand("qpoly", "cyclotomic product of a complete function"));
    auto* c_factor = with_input(app.add_subcommand("factor-cyclotomic", "factor into cyclotomics"));
    auto* c_verify = app.add_subcommand("verify", "randomized invariant harness");
    c_verify->add_option("--seed", seed, "rng seed")->required();
    c_verify->add_option("--cases", cases, "number of random cases")->required()
        ->check(CLI::NonNegativeNumber);
    c_verify->add_option("--max-g", caps.max_g, "cap on dimension g");
    c_verify->add_option("--max-e", caps.max_e, "cap on the reduction degree e");
    c_verify->add_option("--oracle-cap", caps.oracle_dim_cap, "cap on brute-force matrix dim");

    CLI11_PARSE(app, argc, argv);

    try {
        caps.max_g = c_verify->count("--max-g") ? caps.max_g : env_long("TAMON_MAX_G", caps.max_g);
        caps.max_e = c_verify->count("--max-e") ? caps.max_e : env_long("TAMON_MAX_E", caps.max_e);
        long default_cap = env_long("TAMON_ORACLE_CAP", VerifyCaps{}.oracle_dim_cap);
        if (!c_verify->count("--oracle-cap")) caps.oracle_dim_cap = default_cap;
        if (cap == 0) cap = default_cap;

        bool text = format == "text";

        if (c_validate->parsed()) {
            AbelianType a = abelian_type_from_json(load_json(path));
            auto v = validate(a);
            if (text) {
                if (v.empty()) std::cout << "admissible\n";
                for (const auto& viol : v)
                    std::cout << viol.invariant << ": " << viol.detail << "\n";
            } else {
                emit(Json{{"admissible", v.empty()}, {"violations", violations_to_json(v)}});
            }
            return v.empty() ? 0 : 1;
        }
        if (c_ranks->parsed()) {
            RankReport r = ranks(abelian_type_from_json(load_json(path)));
            if (text)
                std::cout << "t=" << r.t << " u=" << r.u << " a=" << r.a << " t_pot=" << r.t_pot
                          << " a_pot=" << r.a_pot << " c=" << rational_str(r.c) << "\n";
            else
                emit(rank_report_to_json(r));
            return 0;
        }
        if (c_cond->parsed()) {
            mpq_class c = conductor(abelian_type_from_json(load_json(path)));
            if (text)
                std::cout << rational_str(c) << "\n";
            else
                emit(Json{{"conductor", rational_str(c)}});
            return 0;
        }
        if (c_h1->parsed()) {
            JordanSpec s = h1_monodromy(abelian_type_from_json(load_json(path)));
            if (text)
                std::cout << s.str() << "\n";
            else
                emit(jordan_spec_to_json(s));
            return 0;
        }
        if (c_charpoly->parsed()) {
            IntPoly p = h1_charpoly(abelian_type_from_json(load_json(path)));
            if (text)
                std::cout << poly_text(p) << "\n";
            else
                emit(intpoly_to_json(p));
            return 0;
        }
        if (c_hg->parsed()) {
            HgAnalysis h = hg_analysis(abelian_type_from_json(load_json(path)));
            if (text) {
                std::cout << "pole candidate exp(2\xCF\x80i\xC2\xB7" << h.pole_candidate.str()
                          << "), max block " << h.max_block_at_candidate << " (global "
                          << h.global_max_block << ")\n";
                for (const auto& f : h.findings) std::cout << "finding: " << f << "\n";
            } else {
                emit(hg_analysis_to_json(h));
            }
            return h.findings.empty() ? 0 : 1;
        }
        if (c_bc->parsed()) {
            emit(abelian_type_to_json(base_change(abelian_type_from_json(load_json(path)), degree)));
            return 0;
        }
        if (c_prod->parsed()) {
            emit(abelian_type_to_json(product(abelian_type_from_json(load_json(path)),
                                              abelian_type_from_json(load_json(path2)))));
            return 0;
        }
        if (c_dual->parsed()) {
            emit(abelian_type_to_json(dual(abelian_type_from_json(load_json(path)))));
            return 0;
        }
        if (c_key->parsed()) {
            auto [tor, ab_pair] = isogeny_key(abelian_type_from_json(load_json(path)));
            emit(Json{{"tor", multfunc_to_json(tor)}, {"ab_pair", multfunc_to_json(ab_pair)}});
            return 0;
        }
        if (c_mhs->parsed()) {
            emit(mhs_summary_to_json(mhs_summary(abelian_type_from_json(load_json(path)))));
            return 0;
        }
        if (c_hgw->parsed()) {
            HgWeightProfile p = hg_weight_profile(abelian_type_from_json(load_json(path)), cap);
            emit(hg_weight_profile_to_json(p));
            return p.findings.empty() ? 0 : 1;
        }
        if (c_wedge->parsed()) {
            JordanSpec s = jordan_spec_from_json(load_json(path));
            emit(qz_map_to_json(wedge_max_ranks(s, wedge_j)));
            return 0;
        }
        if (c_wf->parsed()) {
            CycloMatrix m = cyclo_matrix_from_json(load_json(path));
            WeightFiltration w = weight_filtration(m, center);
            Json j = weight_filtration_to_json(w);
            j["amplitude"] = amplitude(w);
            emit(j);
            return 0;
        }
        if (c_qpoly->parsed()) {
            IntPoly p = q_poly(multfunc_from_json(load_json(path)));
            if (text)
                std::cout << poly_text(p) << "\n";
            else
                emit(intpoly_to_json(p));
            return 0;
        }
        if (c_factor->parsed()) {
            emit(cyclo_factor_result_to_json(factor_cyclotomic(intpoly_from_json(load_json(path)))));
            return 0;
        }
        if (c_verify->parsed()) {
            VerifyReport r = verify_harness(seed, cases, caps);
            emit(verify_report_to_json(r));
            return r.findings.empty() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
