#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sdc/alphabet.hpp"
#include "sdc/bitmatrix.hpp"
#include "sdc/ringmat.hpp"

namespace sdc {

/// Binary image of a ring vector of length m: the first m bits are the first
/// Gray coordinates, the last m bits the second ones. F2 vectors map to themselves.
std::vector<std::uint8_t> gray_image(const RingVector& v);

/// Gray image of the F2-span of {row, delta * row} for every row of g
/// (delta = u or w), as the unreduced 2k x 2m stack. F2 input is copied as is.
BinaryMatrix gray_lift(const RingMatrix& g);

enum class CodeType { TypeI, TypeII };

std::string_view to_string(CodeType t) noexcept;

/// A binary linear code held by its reduced row-echelon basis.
class BinaryCode {
  public:
    /// Row space of any spanning matrix; dependent rows are dropped.
    static BinaryCode from_generator(const BinaryMatrix& spanning);

    std::size_t length() const noexcept { return basis_.cols(); }
    std::size_t dimension() const noexcept { return basis_.rows(); }
    const BinaryMatrix& generator() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool is_self_orthogonal() const noexcept;
    /// N = 2k and every pair of basis rows, self-pairs included, meets evenly.
    bool is_self_dual() const noexcept;

  private:
    BinaryMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Type II iff every basis row has weight divisible by 4. Throws for codes
/// that are not self-dual.
CodeType classify_type(const BinaryCode& c);

/// Upper bound on the minimum distance of a self-dual code of even length n.
int distance_bound(int n, CodeType t);

/// Weight distribution by enumerating all 2^k codewords (k <= 30).
std::vector<std::uint64_t> full_weight_distribution(const BinaryCode& c);

}  // namespace sdc
