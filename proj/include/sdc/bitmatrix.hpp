#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

/// Dense GF(2) matrix, rows packed into 64-bit words (bit c of a row lives in
/// word c / 64 at position c % 64).
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    /// Rows given as strings over {'0', '1'}.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);
    static BinaryMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const noexcept { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(std::size_t r, std::size_t c, bool bit) noexcept;
    void flip(std::size_t r, std::size_t c) noexcept { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

    std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * words_, words_}; }
    std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * words_, words_}; }

    /// row(dst) ^= row(src)
    void add_row(std::size_t dst, std::size_t src) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    void append_row(std::span<const std::uint64_t> words);

    std::size_t row_weight(std::size_t r) const noexcept;
    /// Parity of |row a AND row b|.
    bool rows_inner_product(std::size_t a, std::size_t b) const noexcept;

    std::string row_string(std::size_t r) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    /// Reduced row-echelon basis; zero rows dropped, row i has its pivot at pivots[i].
    BinaryMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Columns listed in pivot_preference are tried as
/// pivots first, in that order; the remaining columns follow in natural order.
RrefResult rref(const BinaryMatrix& m, std::span<const std::size_t> pivot_preference = {});

BinaryMatrix mul_transposed(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace sdc
