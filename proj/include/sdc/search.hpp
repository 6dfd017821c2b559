#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sdc/record.hpp"

namespace sdc {

struct SearchConfig {
    ConstructionId construction = ConstructionId::Omega20_1;
    Alphabet alphabet = Alphabet::F4;
    /// Codes with any nonzero word below this weight are rejected.
    int target_d = 2;
    std::uint64_t max_trials = 0;
    std::uint64_t seed = 0;
    /// Census weight for survivors; 0 picks the verify default.
    int census_depth = 0;
    bool deep = false;
    int workers = 1;
    /// Discoveries are written here when non-empty.
    std::filesystem::path output_dir;
    /// Tried as trials 0, 1, ... before random vectors.
    std::vector<std::string> injected;
};

struct SearchStats {
    std::uint64_t trials = 0;
    std::uint64_t passed_conditions = 0;
    std::uint64_t lifted = 0;
    std::uint64_t rejected_distance = 0;
    std::uint64_t duplicates = 0;
    std::uint64_t discoveries = 0;

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchResult {
    /// Ordered by trial index.
    std::vector<Discovery> discoveries;
    SearchStats stats;
};

/// Throws std::invalid_argument for an odd or non-positive target distance
/// or a census depth below it.
void validate(const SearchConfig& cfg);

/// Vector tried at a given trial: injected ones first, then uniform samples
/// from a generator seeded by (seed, trial) alone.
RingVector trial_vector(const SearchConfig& cfg, std::uint64_t trial);

/// Same seed and trial count give the same discoveries and files for any worker count.
SearchResult run_search(const SearchConfig& cfg);

/// Key under which equal codes are suppressed: length, type, family,
/// parameters and the census counts.
std::string fingerprint(const Discovery& d);

/// "20.1_f4_t0.txt"
std::string record_file_name(const Discovery& d);
/// One tab-separated line per discovery, with a header line.
std::string index_text(const std::vector<Discovery>& discoveries);
void persist(const SearchResult& result, const std::filesystem::path& dir);

}  // namespace sdc
