#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/alphabet.hpp"
#include "sdc/groupring.hpp"
#include "sdc/ringmat.hpp"

namespace sdc {

/// The seven composite-matrix constructions. CLI names: "20.1", "20.2",
/// "42.1", "42.2", "24.1", "24.2", "24.3".
enum class ConstructionId { Omega20_1, Omega20_2, Omega42_1, Omega42_2, Omega24_1, Omega24_2, Omega24_3 };

inline constexpr std::array<ConstructionId, 7> kAllConstructions = {
    ConstructionId::Omega20_1, ConstructionId::Omega20_2, ConstructionId::Omega42_1, ConstructionId::Omega42_2,
    ConstructionId::Omega24_1, ConstructionId::Omega24_2, ConstructionId::Omega24_3};

std::string_view to_string(ConstructionId id) noexcept;
ConstructionId parse_construction(std::string_view name);

/// Length n of v, equal to the order of G.
std::size_t half_length(ConstructionId id) noexcept;
/// Side of the square blocks the condition system works with.
std::size_t condition_block_size(ConstructionId id) noexcept;

/// The (G, H, H' = 1, P' = 1) data behind each construction.
CompositeSpec composite_spec(ConstructionId id);

/// Omega(v) assembled from the construction's circulant block layout.
RingMatrix build_omega(ConstructionId id, const RingVector& v);

/// One block equation of a construction's self-duality criterion. The
/// left-hand side is the (row, col) block of Omega Omega^T and must equal
/// I (identity == true) or 0.
struct ConditionEquation {
    std::string label;
    bool identity;
    std::size_t block_row;
    std::size_t block_col;
    std::function<RingMatrix()> evaluate;
};

std::vector<ConditionEquation> condition_system(ConstructionId id, const RingVector& v);

/// True iff every block equation holds; stops at the first failure.
bool check_conditions(ConstructionId id, const RingVector& v);

/// (I_n | Omega(v)).
RingMatrix generator_matrix(ConstructionId id, const RingVector& v);

}  // namespace sdc
