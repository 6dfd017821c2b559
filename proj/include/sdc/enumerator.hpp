#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sdc/bincode.hpp"
#include "sdc/census.hpp"

namespace sdc {

/// Known partial weight enumerator families. W96_I stands for a length-96
/// Type I code whose census is too shallow to tell W96_I_1 from W96_I_2.
enum class EnumeratorFamily { None, W80, W84_1, W84_2, W84_3, W96_I, W96_I_1, W96_I_2, W96_II };

std::string_view to_string(EnumeratorFamily f) noexcept;
EnumeratorFamily parse_family(std::string_view name);

struct EnumeratorParams {
    EnumeratorFamily family = EnumeratorFamily::None;
    std::optional<std::int64_t> alpha;
    std::optional<std::int64_t> beta;
    std::optional<std::int64_t> gamma;

    friend bool operator==(const EnumeratorParams&, const EnumeratorParams&) = default;
};

/// "W80 α=-275 β=0"
std::string format_params(const EnumeratorParams& p);

/// Family candidates for a code of this length and type (None if unknown).
bool has_family(std::size_t length, CodeType type);
/// Census weight needed to pin the parameters down (deep adds the A_20 step at length 96).
int family_census_weight(std::size_t length, CodeType type, bool deep);
/// Minimum distance every code in the families of this length has.
int family_distance(std::size_t length);

/// A_w predicted by the family formula for every weight it covers (w <= max_weight).
std::map<int, std::int64_t> predicted_counts(const EnumeratorParams& p, int max_weight);

class NoFamilyFits : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Solves the family equations from the census and checks every counted
/// weight against the formula. Throws NoFamilyFits when none or several fit.
EnumeratorParams extract_params(const Census& census, std::size_t length, CodeType type);

}  // namespace sdc
