#pragma once

#include <string>
#include <vector>

#include "finv/transfer.hpp"
#include "finv/verify.hpp"

namespace finv {

/**
 * Deterministic JSON report: fixed key order, exact fractions rendered as
 * "p/q" strings, no floating point anywhere.  Two calls on equal inputs
 * produce byte-identical text.
 */
std::string to_json(const TransferResult& result);
std::string to_json(const std::vector<VerificationItem>& items);

/// Human-readable renderings of the same data.
std::string to_text(const TransferResult& result);
std::string to_text(const std::vector<VerificationItem>& items);

/**
 * Parse a pairing-grid file: {"n": 3, "level": 3, "pairings": [0, -1, 1, 0]}.
 * Pairings may be JSON integers or decimal strings (for values beyond 2^53).
 * Malformed input raises InvalidInputError.
 */
ChernGrid grid_from_json(const std::string& text);

}  // namespace finv
