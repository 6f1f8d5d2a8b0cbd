#pragma once

#include <map>
#include <vector>

#include "tamon/exact_linalg.hpp"
#include "tamon/rational_circle.hpp"

namespace tamon {

struct JordanBlockGroup {
    QZElem exponent;  // eigenvalue exp(2*pi*i*exponent)
    int size = 1;
    long count = 1;

    bool operator==(const JordanBlockGroup& o) const {
        return exponent == o.exponent && size == o.size && count == o.count;
    }
};

/// Multiset of Jordan blocks, canonical: sorted by (exponent, size), equal
/// keys merged, counts positive.
class JordanSpec {
public:
    JordanSpec() = default;
    static JordanSpec from_blocks(std::vector<JordanBlockGroup> blocks);

    const std::vector<JordanBlockGroup>& blocks() const { return blocks_; }
    long dimension() const;
    bool operator==(const JordanSpec& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const JordanSpec& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<JordanBlockGroup> blocks_;
};

/// Jord(m1, m2): size-1 blocks from m1, size-2 blocks from m2.
JordanSpec jord(const MultFunc& m1, const MultFunc& m2);

/// Algebraic multiplicity of each eigenvalue exponent.
MultFunc spec_charpoly_exponents(const JordanSpec& s);

/// Block-diagonal matrix over Q(zeta_N), subdiagonal-ones convention.
/// Every exponent order must divide N.
CycloMatrix materialize(const JordanSpec& s, long n);

/// Rank-sequence profile the spec denotes (for oracle comparisons).
JordanProfile profile_of(const JordanSpec& s);

/// For each eigenvalue exponent z of Lambda^j of the spec'd matrix, the
/// maximal Jordan block size at z: max of 1 + sum s_i(m_i - s_i) over
/// admissible tuples with ||s|| = j and exponent sum z. Exponents with no
/// admissible tuple are absent.
std::map<QZElem, long> wedge_max_ranks(const JordanSpec& s, long j);

/// Amplitude of the weight filtration of (Lambda^j Jord_m)_n: j*(m - j).
long single_block_wedge_amplitude(long m, long j);

}  // namespace tamon
