#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

/// The three characteristic-2 alphabets. Every element is a 2-bit symbol
/// c0 + 2*c1 standing for c0 + c1*x, where x is u (u^2 = 0) for F2U and
/// w (w^2 = w + 1) for F4. F2 uses the symbols {0, 1} only.
enum class Alphabet : std::uint8_t { F2, F2U, F4 };

constexpr std::size_t order(Alphabet a) noexcept { return a == Alphabet::F2 ? 2 : 4; }

/// "f2", "f2u", "f4"
std::string_view to_string(Alphabet a) noexcept;
Alphabet parse_alphabet(std::string_view name);

class AlphabetMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Addition and multiplication tables over symbols, generated once from the
/// defining relation of each alphabet.
struct ArithmeticTables {
    std::array<std::array<std::uint8_t, 4>, 4> add{};
    std::array<std::array<std::uint8_t, 4>, 4> mul{};
};

const ArithmeticTables& tables(Alphabet a) noexcept;

class RingElement {
  public:
    RingElement(Alphabet alphabet, std::uint8_t sym);

    Alphabet alphabet() const noexcept { return alphabet_; }
    std::uint8_t sym() const noexcept { return sym_; }

    friend bool operator==(const RingElement&, const RingElement&) = default;

  private:
    Alphabet alphabet_;
    std::uint8_t sym_;
};

RingElement add(RingElement a, RingElement b);
RingElement mul(RingElement a, RingElement b);
inline RingElement operator+(RingElement a, RingElement b) { return add(a, b); }
inline RingElement operator*(RingElement a, RingElement b) { return mul(a, b); }

/// Element-level Gray map. F2U: a + bu -> (b, a + b). F4: aw + b(1 + w) -> (a, b).
std::array<std::uint8_t, 2> gray(RingElement a);
/// Gray map on a raw symbol; the alphabet must have order 4.
std::array<std::uint8_t, 2> gray(Alphabet alphabet, std::uint8_t sym);

/// Hamming weight of gray(a); plain Hamming weight over F2.
int lee_weight(RingElement a);

/// A vector over one alphabet stored as raw symbols.
struct RingVector {
    Alphabet alphabet = Alphabet::F2;
    std::vector<std::uint8_t> syms;

    std::size_t size() const noexcept { return syms.size(); }
    RingElement operator[](std::size_t i) const { return RingElement(alphabet, syms[i]); }
    friend bool operator==(const RingVector&, const RingVector&) = default;
};

/// Parses a symbol string such as "(3122 3333)". Parentheses and whitespace
/// are ignored; every other character must be a legal symbol.
RingVector parse_vector(std::string_view s, Alphabet alphabet);
std::string format_vector(const RingVector& v);

/// Euclidean inner product over the alphabet.
std::uint8_t inner_product(const RingVector& x, const RingVector& y);

}  // namespace sdc
