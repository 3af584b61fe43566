#pragma once

#include <string>
#include <vector>

#include "ssc/construct.hpp"

namespace ssc {

enum class DistanceMode { Auto, Exhaustive, OrbitReduced, Sampled };

struct VerifyOptions {
    DistanceMode mode = DistanceMode::Auto;
    std::uint64_t pair_budget = 10000000;   // exhaustive tier: unordered pair count
    std::uint64_t shift_budget = 10000000;  // orbit-reduced tier: sum of orbit sizes
    std::uint64_t sample_pairs = 20000;     // sampled tier
    std::uint64_t materialize_cap = 200000; // per-orbit member materialization
};

struct DistanceResult {
    bool defined = false; // false when the code has fewer than two codewords
    unsigned value = 0;
    bool exact = false; // sampled scans only give an upper bound
    std::string method; // "exhaustive" | "orbit-reduced" | "sampled" | "none"
    std::uint64_t enumerated = 0; // distinct codewords seen (exhaustive) or size sum
    std::string witness_a, witness_b;
};

/// Minimum subspace distance of the code. Orbit-reduced mode scans
/// d(rep_i, gamma^s rep_j) over orbit pairs i <= j, skipping s = 0 on the
/// diagonal; equal to the exhaustive value since d is shift-invariant.
DistanceResult min_distance(const CyclicCode& c, DistanceMode mode,
                            const VerifyOptions& opt = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string construction;
    std::string field;
    unsigned k = 0;
    unsigned orbit_count = 0;
    BigUint verified_size;
    bool size_ok = false;
    DistanceResult dist;
    bool distance_ok = false;
    std::vector<CheckResult> checks;
    bool all_pass = false;
    std::uint64_t duration_ms = 0;
    std::string method; // distance method actually used
};

/// Brute-force grading of every claim the code carries: enumerated size,
/// minimum distance, cyclic closure, stabilizer records, and the subfield
/// membership structure for C_d-style codes. Failures are recorded, not
/// thrown.
VerificationReport verify_code(const CyclicCode& c, const VerifyOptions& opt = {});

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

} // namespace ssc
