#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lmmt/lie_algebra.hpp"

namespace lmmt {

struct CatalogEntry {
    std::string name;
    std::string salamon;
};

/// (3,4)-trivial algebras used throughout the claims, in increasing dimension.
const std::vector<CatalogEntry>& triviality_catalog();

/// The two five-dimensional entries with the e^{34} term restored in d e^5.
const std::vector<CatalogEntry>& corrected_catalog();

struct ClaimOutcome {
    bool passed = false;
    std::string computed;
    std::string expected;
};

struct Claim {
    std::string id;
    unsigned criterion = 0;  // acceptance criterion number, 1..12
    std::string description;
    std::function<ClaimOutcome()> check;
};

struct ClaimResult {
    std::string id;
    unsigned criterion = 0;
    std::string description;
    bool passed = false;
    std::string computed;
    std::string expected;
};

/// All claims, sorted by id.
const std::vector<Claim>& all_claims();

/// Runs every claim whose id contains `filter` (all when empty) concurrently.
/// Results come back sorted by id; an exception inside a claim is a failure.
std::vector<ClaimResult> run_claims(std::string_view filter = {});

/// Seed of the randomized property claims.
inline constexpr std::uint64_t kPropertySeed = 20240611;

}  // namespace lmmt
