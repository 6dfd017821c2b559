#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sdc/alphabet.hpp"
#include "sdc/bincode.hpp"
#include "sdc/census.hpp"
#include "sdc/constructions.hpp"
#include "sdc/enumerator.hpp"

namespace sdc {

/// One analysed code: where it came from and what it is.
struct Discovery {
    std::string v;
    ConstructionId construction = ConstructionId::Omega20_1;
    Alphabet alphabet = Alphabet::F2;
    std::size_t length = 0;
    std::size_t dimension = 0;
    CodeType type = CodeType::TypeI;
    /// Smallest nonzero weight; when distance_exact is false no codeword of
    /// weight < distance exists but the census stopped there.
    int distance = 0;
    bool distance_exact = false;
    EnumeratorParams params;
    /// A_0 .. A_max_weight.
    std::vector<std::uint64_t> counts;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trial;
    /// Reduced basis of the binary code.
    BinaryMatrix generator;

    friend bool operator==(const Discovery&, const Discovery&) = default;
};

class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct VerifyOptions {
    /// Adds the A_20 step for length 96.
    bool deep = false;
    /// Census weight to use instead of the default (0 = default).
    int max_weight = 0;
    bool parallel = true;
};

/// Census weight verify_record uses for a code of this length and type.
int default_census_weight(std::size_t length, CodeType type, const VerifyOptions& options);

/// Full re-derivation of one code from its defining vector: the
/// condition system, Gray lift, self-duality, type, distance and parameters.
/// Throws VerificationError when the conditions fail or the lift is not self-dual.
Discovery verify_record(std::string_view v, ConstructionId id, Alphabet alphabet, const VerifyOptions& options = {});

/// Analysis of an already lifted self-dual code to the given census weight.
Discovery analyse_code(std::string_view v, ConstructionId id, Alphabet alphabet, BinaryCode code, int census_weight,
                       bool parallel);

/// "self-dual [80,40,14] Type I, W80 α=-275 β=0"
std::string summary_line(const Discovery& d);

/// Text database format: '#'-prefixed header lines "key: value", k lines of
/// N bits, then trailing "# A_w = count" lines.
void write_record(std::ostream& out, const Discovery& d);
std::string format_record(const Discovery& d);

struct ParsedRecord {
    std::map<std::string, std::string> header;
    BinaryMatrix generator;
    std::map<int, std::uint64_t> counts;
};

ParsedRecord parse_record(std::istream& in);
/// Rebuilds the Discovery fields stored in a parsed record.
Discovery discovery_from_record(const ParsedRecord& r);

}  // namespace sdc
