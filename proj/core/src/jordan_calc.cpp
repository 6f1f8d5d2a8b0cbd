#include "tamon/jordan_calc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tamon/arith.hpp"

namespace tamon {

JordanSpec JordanSpec::from_blocks(std::vector<JordanBlockGroup> blocks) {
    std::map<std::pair<QZElem, int>, long> merged;
    for (const auto& b : blocks) {
        if (b.size < 1) throw std::invalid_argument("JordanSpec: block size must be positive");
        if (b.count < 0) throw std::invalid_argument("JordanSpec: negative count");
        if (b.count == 0) continue;
        merged[{b.exponent, b.size}] += b.count;
    }
    JordanSpec s;
    for (const auto& [key, count] : merged)
        s.blocks_.push_back({key.first, key.second, count});
    return s;
}

long JordanSpec::dimension() const {
    long d = 0;
    for (const auto& b : blocks_) d += (long)b.size * b.count;
    return d;
}

std::string JordanSpec::str() const {
    if (blocks_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& b : blocks_) {
        for (long i = 0; i < b.count; ++i) {
            if (!first) os << " \xE2\x8A\x95 ";
            os << "Jord_" << b.size << "(exp(2\xCF\x80i\xC2\xB7" << b.exponent.str() << "))";
            first = false;
        }
    }
    return os.str();
}

JordanSpec jord(const MultFunc& m1, const MultFunc& m2) {
    std::vector<JordanBlockGroup> blocks;
    for (const auto& [x, v] : m1.entries()) blocks.push_back({x, 1, v});
    for (const auto& [x, v] : m2.entries()) blocks.push_back({x, 2, v});
    return JordanSpec::from_blocks(std::move(blocks));
}

MultFunc spec_charpoly_exponents(const JordanSpec& s) {
    MultFunc f;
    for (const auto& b : s.blocks()) f.bump(b.exponent, (long)b.size * b.count);
    return f;
}

CycloMatrix materialize(const JordanSpec& s, long n) {
    long dim = s.dimension();
    CycloMatrix m(n, (int)dim, (int)dim);
    CycloElem one = CycloElem::from_rational(n, 1);
    int pos = 0;
    for (const auto& b : s.blocks()) {
        if (n % b.exponent.order() != 0)
            throw std::invalid_argument("materialize: exponent order does not divide conductor");
        CycloElem lambda = CycloElem::root_of_unity(b.exponent, n);
        for (long c = 0; c < b.count; ++c) {
            for (int i = 0; i < b.size; ++i) {
                m.set(pos + i, pos + i, lambda);
                if (i > 0) m.set(pos + i, pos + i - 1, one);
            }
            pos += b.size;
        }
    }
    return m;
}

JordanProfile profile_of(const JordanSpec& s) {
    JordanProfile p;
    for (const auto& b : s.blocks()) p[b.exponent][b.size] += b.count;
    return p;
}

std::map<QZElem, long> wedge_max_ranks(const JordanSpec& s, long j) {
    long dim = s.dimension();
    if (j < 1 || j > dim) throw std::invalid_argument("wedge_max_ranks: j out of range");
    long order_lcm = 1;
    for (const auto& b : s.blocks()) order_lcm = lcm_long(order_lcm, b.exponent.order());

    // dp over block instances: dp[taken][exponent numerator mod lcm]
    //   = max of sum s_i(m_i - s_i), or -1 if unreachable.
    std::vector<std::vector<long>> dp(j + 1, std::vector<long>(order_lcm, -1));
    dp[0][0] = 0;
    for (const auto& b : s.blocks()) {
        mpz_class step_num = b.exponent.numerator() * (order_lcm / b.exponent.order());
        long step = step_num.get_si();
        for (long c = 0; c < b.count; ++c) {
            std::vector<std::vector<long>> next(j + 1, std::vector<long>(order_lcm, -1));
            for (long taken = 0; taken <= j; ++taken)
                for (long z = 0; z < order_lcm; ++z) {
                    if (dp[taken][z] < 0) continue;
                    for (long pick = 0; pick <= b.size && taken + pick <= j; ++pick) {
                        long nz = (z + pick * step) % order_lcm;
                        long gain = pick * (b.size - pick);
                        long& slot = next[taken + pick][nz];
                        slot = std::max(slot, dp[taken][z] + gain);
                    }
                }
            dp = std::move(next);
        }
    }
    std::map<QZElem, long> out;
    for (long z = 0; z < order_lcm; ++z)
        if (dp[j][z] >= 0) out[QZElem::make(z, order_lcm)] = 1 + dp[j][z];
    return out;
}

long single_block_wedge_amplitude(long m, long j) {
    if (j < 1 || j > m) throw std::invalid_argument("single_block_wedge_amplitude: j out of range");
    return j * (m - j);
}

}  // namespace tamon
