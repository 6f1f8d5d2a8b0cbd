#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tamon/abvar.hpp"
#include "tamon/json_io.hpp"

namespace tamon {

struct VerifyCaps {
    long max_g = 4;
    long max_e = 12;
    long oracle_dim_cap = 70;
};

/// Deterministic RNG; the draw sequence is pinned by mt19937_64 so a seed
/// fully determines the harness run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
        return lo + (long)(gen_() % (std::uint64_t)(hi - lo + 1));
    }
    bool flip() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 gen_;
};

/// Complete function supported on divisors of e with exact norm `target`.
MultFunc random_complete(Rng& rng, long e, long target);

/// Arbitrary finitely supported function with orders dividing e.
MultFunc random_multfunc(Rng& rng, long e, long max_norm);

/// Admissible type: t_pot + a_pot = g; m_tor complete; m_ab drawn from a
/// complete h with h(0) even, split so that m_dual_ab = reflect(m_ab).
AbelianType random_admissible(Rng& rng, long max_g, long max_e);

/// Strictly-triangular seed conjugated is avoided: plain random strictly
/// lower triangular nilpotent with small rational entries.
CycloMatrix random_nilpotent(Rng& rng, long n, int dim);

/// Unipotent lower-triangular, hence invertible.
CycloMatrix random_unipotent(Rng& rng, long n, int dim);

/// Materialized random Jordan spec conjugated by a random unipotent.
CycloMatrix random_quasi_unipotent(Rng& rng, long n, int dim, JordanSpec* spec_out = nullptr);

JordanSpec random_jordan_spec(Rng& rng, long n, long max_dim);

struct Finding {
    long case_index = -1;  // -1 for the global property sections
    std::string check;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    long cases = 0;
    VerifyCaps caps;
    std::map<std::string, long> checks_run;  // check name -> executions
    std::vector<Finding> findings;
};

/// Runs every module-invariant suite on `cases` random inputs.
/// Deterministic given (seed, cases, caps). Findings are data, not errors.
VerifyReport verify_harness(std::uint64_t seed, long cases, const VerifyCaps& caps);

Json verify_report_to_json(const VerifyReport& r);

}  // namespace tamon
