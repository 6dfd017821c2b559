#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sdc/bincode.hpp"

namespace sdc {

class CensusError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CensusOptions {
    /// Count every codeword of weight <= max_weight.
    int max_weight = 0;
    /// Stop as soon as a nonzero codeword of weight < abort_below shows up (0 disables).
    int abort_below = 0;
    /// Refuse plans that would visit more enumeration nodes than this (0 = unlimited).
    std::uint64_t budget = 0;
    bool parallel = true;
};

/// Exact low-weight counts of a self-dual code. Messages of weight up to
/// first_radius are enumerated on one information set and up to
/// second_radius on its complement; the two passes never count a codeword twice.
struct Census {
    int max_weight = 0;
    int first_radius = 0;
    int second_radius = -1;
    std::vector<std::uint64_t> counts;
    bool aborted = false;
    std::uint64_t nodes = 0;

    std::uint64_t count(int w) const { return w >= 0 && w < static_cast<int>(counts.size()) ? counts[w] : 0; }
    /// Smallest nonzero weight seen, 0 when none is <= max_weight.
    int min_nonzero_weight() const;
};

/// Number of enumeration nodes the census of a k-dimensional code visits.
std::uint64_t census_cost(std::size_t k, int max_weight);

/// OpenMP kernel, or the serial reference when options.parallel is false.
Census low_weight_census(const BinaryCode& c, const CensusOptions& options);
/// Plain recursive enumeration kept as the reference for the kernel.
Census low_weight_census_serial(const BinaryCode& c, const CensusOptions& options);

struct DistanceCertificate {
    int distance = 0;
    /// Every codeword of weight <= radius has been counted.
    int radius = 0;
};

/// Certified minimum distance when it is at most claimed_d; throws
/// CensusError when no nonzero codeword of weight <= claimed_d exists.
DistanceCertificate min_distance(const BinaryCode& c, int claimed_d, bool parallel = true);

}  // namespace sdc
