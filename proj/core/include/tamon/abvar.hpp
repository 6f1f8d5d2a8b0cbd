#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "tamon/cyclotomic_polys.hpp"
#include "tamon/jordan_calc.hpp"
#include "tamon/rational_circle.hpp"
#include "tamon/weight_filt.hpp"

namespace tamon {

/// A tamely ramified abelian variety, known through its multiplicity data:
/// dimension g, the degree e of the minimal extension acquiring semi-abelian
/// reduction, and the toric / abelian / dual-abelian multiplicity functions.
struct AbelianType {
    long g = 1;
    long e = 1;
    MultFunc tor;
    MultFunc ab;
    MultFunc dual_ab;
    bool residue_char_zero = true;
    bool principally_polarized = false;

    bool operator==(const AbelianType& o) const {
        return g == o.g && e == o.e && tor == o.tor && ab == o.ab && dual_ab == o.dual_ab &&
               residue_char_zero == o.residue_char_zero &&
               principally_polarized == o.principally_polarized;
    }
};

struct Violation {
    std::string invariant;
    std::string detail;
};

/// Empty iff the type is admissible; each entry names the failed invariant
/// with witnesses.
std::vector<Violation> validate(const AbelianType& a);

bool is_admissible(const AbelianType& a);

struct RankReport {
    long t = 0, u = 0, a = 0, t_pot = 0, a_pot = 0;
    mpq_class c;  // base change conductor
};

/// t = m_tor(0), a = m_ab(0), t_pot = ||m_tor||, a_pot = ||m_ab||,
/// u = g - t - a, plus the conductor. Throws on inadmissible input.
RankReport ranks(const AbelianType& a);

/// c(A) = sum of m_A(x)·x over representatives in [0,1).
mpq_class conductor(const AbelianType& a);

/// c(A) = (t_pot - t)/2 + sum over x != 0 of m_ab(x)·x.
mpq_class conductor_cormult(const AbelianType& a);

/// All multiplicity functions pushed forward by multiplication by n;
/// e becomes e / gcd(e, n).
AbelianType base_change(const AbelianType& a, long n);

/// g adds, e becomes lcm, multiplicity functions add. Throws on a flag
/// conflict.
AbelianType product(const AbelianType& a1, const AbelianType& a2);

/// Dual variety: m_tor unchanged, the abelian pair reflected and swapped.
/// An involution.
AbelianType dual(const AbelianType& a);

/// The isogeny-invariant pair (m_tor, m_ab + m_dual_ab).
std::pair<MultFunc, MultFunc> isogeny_key(const AbelianType& a);

/// Does the reflexivity m_dual_ab = reflect(m_ab) hold? (Always checkable;
/// only guaranteed under the residue-char-zero / principal-polarization
/// hypotheses.)
bool is_reflexive(const AbelianType& a);

/// Monodromy on H^1: Jord(m_ab + m_dual_ab, m_tor), dimension 2g.
JordanSpec h1_monodromy(const AbelianType& a);

/// Characteristic polynomial of the monodromy on H^1; exponent function
/// m_ab + m_dual_ab + 2·m_tor. Degree 2g, integer coefficients.
IntPoly h1_charpoly(const AbelianType& a);

struct HgAnalysis {
    QZElem pole_candidate;           // c(A) mod 1
    long max_block_at_candidate = 0;  // expected t_pot + 1
    long global_max_block = 0;        // expected t_pot + 1
    std::map<QZElem, long> per_eigenvalue;
    std::vector<std::string> findings;  // theorem violations, with witnesses
};

/// Maximal Jordan block sizes of the monodromy on H^g = Lambda^g H^1, per
/// eigenvalue, via the symbolic tuple enumeration. Violations of the
/// block-size theorem are reported as findings, never thrown.
HgAnalysis hg_analysis(const AbelianType& a);

struct MhsSummary {
    MultFunc gr_0;
    MultFunc gr_m1_hodge_10;
    MultFunc gr_m1_hodge_01;
    MultFunc gr_m2;
};

/// Weight-graded pieces of the limit mixed Hodge structure of H_1.
/// Requires residue_char_zero.
MhsSummary mhs_summary(const AbelianType& a);

struct HgWeightProfile {
    /// graded index -> eigenvalue exponent -> multiplicity of the
    /// semi-simple part on that graded piece
    std::map<int, std::map<QZElem, long>> graded_eigen;
    long largest_alpha_with_candidate = 0;  // expected t_pot
    long amplitude_plus_one = 0;            // expected hg max block
    std::vector<std::string> findings;
};

/// Brute-force route: materialize H^1, wedge to H^g, split off the
/// semi-simple part, take the weight filtration centered at g, and report
/// eigenvalue multiplicities per graded piece. Throws "oracle too large"
/// (std::length_error) when C(2g, g) exceeds cap.
HgWeightProfile hg_weight_profile(const AbelianType& a, long cap);

}  // namespace tamon
