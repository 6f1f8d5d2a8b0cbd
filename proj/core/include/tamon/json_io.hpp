#pragma once

#include <nlohmann/json.hpp>

#include "tamon/abvar.hpp"
#include "tamon/cyclotomic_polys.hpp"
#include "tamon/exact_linalg.hpp"
#include "tamon/jordan_calc.hpp"
#include "tamon/weight_filt.hpp"

namespace tamon {

// ordered_json keeps insertion order; all writers below insert keys in the
// canonical Q/Z (or index) order so serialized output is deterministic.
using Json = nlohmann::ordered_json;

/// Thrown for malformed input documents; mapped to usage errors by the CLI.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json multfunc_to_json(const MultFunc& f);
MultFunc multfunc_from_json(const Json& j);

Json intpoly_to_json(const IntPoly& p);
IntPoly intpoly_from_json(const Json& j);

Json jordan_spec_to_json(const JordanSpec& s);
JordanSpec jordan_spec_from_json(const Json& j);

Json cyclo_matrix_to_json(const CycloMatrix& m);
CycloMatrix cyclo_matrix_from_json(const Json& j);

Json abelian_type_to_json(const AbelianType& a);
AbelianType abelian_type_from_json(const Json& j);

Json rank_report_to_json(const RankReport& r);
Json violations_to_json(const std::vector<Violation>& v);
Json hg_analysis_to_json(const HgAnalysis& h);
Json mhs_summary_to_json(const MhsSummary& s);
Json hg_weight_profile_to_json(const HgWeightProfile& p);
Json jordan_profile_to_json(const JordanProfile& p);
Json weight_filtration_to_json(const WeightFiltration& w);
Json qz_map_to_json(const std::map<QZElem, long>& m);
Json cyclo_factor_result_to_json(const CycloFactorResult& r);

std::string rational_str(const mpq_class& q);

}  // namespace tamon
