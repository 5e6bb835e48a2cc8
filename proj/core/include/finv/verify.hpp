#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace finv {

enum class VerifyStatus { passed, failed, error };

std::string to_string(VerifyStatus status);

/**
 * One reproduced claim.  `anchor` names the module family the claim exercises
 * (qseries, modforms, divcong, genus, flagcohom, transfer); `id` orders the
 * report deterministically and groups items by acceptance criterion (c01..c10).
 */
struct VerificationItem {
    std::string id;
    std::string anchor;
    VerifyStatus status;
    std::string details;
};

struct VerifyOptions {
    int precision = 0;        ///< 0: per-check default policy
    int cases = 200;          ///< randomized cases per property suite
    std::uint64_t seed = 271828;  ///< property-suite RNG seed
};

/**
 * Reproduce the full frozen claim set: the beta-family identities, the
 * fifteen-step congruence chain, torsion orders, the flag-transfer
 * classifications and vanishing facts, the genus oracle, the Eisenstein
 * identities, the formula/oracle agreement, and the randomized property
 * suites.  Items are returned ordered by id; a check that raises is reported
 * as an error item rather than aborting the run.
 */
std::vector<VerificationItem> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<VerificationItem>& items);
bool any_errored(const std::vector<VerificationItem>& items);

}  // namespace finv
