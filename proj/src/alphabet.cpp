#include "sdc/alphabet.hpp"

#include <cctype>

namespace sdc {

namespace {

// x^2 expressed as c0 + c1*x.
constexpr std::uint8_t square_of_generator(Alphabet a) {
    switch (a) {
        case Alphabet::F2U: return 0;  // u^2 = 0
        case Alphabet::F4: return 3;   // w^2 = 1 + w
        case Alphabet::F2: break;
    }
    return 0;
}

constexpr ArithmeticTables make_tables(Alphabet a) {
    ArithmeticTables t;
    const std::uint8_t x2 = square_of_generator(a);
    for (std::uint8_t p = 0; p < 4; ++p) {
        for (std::uint8_t q = 0; q < 4; ++q) {
            t.add[p][q] = p ^ q;
            const std::uint8_t p0 = p & 1, p1 = p >> 1, q0 = q & 1, q1 = q >> 1;
            std::uint8_t r = (p0 & q0) | static_cast<std::uint8_t>(((p0 & q1) ^ (p1 & q0)) << 1);
            if (p1 & q1) r ^= x2;
            t.mul[p][q] = r;
        }
    }
    return t;
}

constexpr ArithmeticTables kF2Tables = make_tables(Alphabet::F2);
constexpr ArithmeticTables kF2UTables = make_tables(Alphabet::F2U);
constexpr ArithmeticTables kF4Tables = make_tables(Alphabet::F4);

void require_same(Alphabet a, Alphabet b) {
    if (a != b) throw AlphabetMismatch("ring elements belong to different alphabets");
}

}  // namespace

std::string_view to_string(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::F2: return "f2";
        case Alphabet::F2U: return "f2u";
        case Alphabet::F4: return "f4";
    }
    return "?";
}

Alphabet parse_alphabet(std::string_view name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "f2") return Alphabet::F2;
    if (lower == "f2u" || lower == "f2+uf2") return Alphabet::F2U;
    if (lower == "f4") return Alphabet::F4;
    throw std::invalid_argument("unknown alphabet '" + std::string(name) + "' (expected f2, f2u or f4)");
}

const ArithmeticTables& tables(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::F2U: return kF2UTables;
        case Alphabet::F4: return kF4Tables;
        case Alphabet::F2: break;
    }
    return kF2Tables;
}

RingElement::RingElement(Alphabet alphabet, std::uint8_t sym) : alphabet_(alphabet), sym_(sym) {
    if (sym >= order(alphabet)) throw std::invalid_argument("symbol out of range for alphabet");
}

RingElement add(RingElement a, RingElement b) {
    require_same(a.alphabet(), b.alphabet());
    return RingElement(a.alphabet(), tables(a.alphabet()).add[a.sym()][b.sym()]);
}

RingElement mul(RingElement a, RingElement b) {
    require_same(a.alphabet(), b.alphabet());
    return RingElement(a.alphabet(), tables(a.alphabet()).mul[a.sym()][b.sym()]);
}

std::array<std::uint8_t, 2> gray(Alphabet alphabet, std::uint8_t sym) {
    const std::uint8_t c0 = sym & 1, c1 = (sym >> 1) & 1;
    switch (alphabet) {
        case Alphabet::F2U:
            // sym = a + b*u
            return {c1, static_cast<std::uint8_t>(c0 ^ c1)};
        case Alphabet::F4:
            // sym = c0 + c1*w = a*w + b*(1 + w) with b = c0, a = c0 + c1
            return {static_cast<std::uint8_t>(c0 ^ c1), c0};
        case Alphabet::F2: break;
    }
    throw std::invalid_argument("the Gray map is defined for f2u and f4 only");
}

std::array<std::uint8_t, 2> gray(RingElement a) { return gray(a.alphabet(), a.sym()); }

int lee_weight(RingElement a) {
    if (a.alphabet() == Alphabet::F2) return a.sym();
    const auto g = gray(a);
    return g[0] + g[1];
}

RingVector parse_vector(std::string_view s, Alphabet alphabet) {
    RingVector v{alphabet, {}};
    v.syms.reserve(s.size());
    for (char c : s) {
        if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
        if (c < '0' || c > '3') throw std::invalid_argument(std::string("illegal symbol character '") + c + "'");
        const auto sym = static_cast<std::uint8_t>(c - '0');
        if (sym >= order(alphabet))
            throw std::invalid_argument(std::string("symbol '") + c + "' is not an element of " +
                                        std::string(to_string(alphabet)));
        v.syms.push_back(sym);
    }
    return v;
}

std::string format_vector(const RingVector& v) {
    std::string out;
    out.reserve(v.size());
    for (auto s : v.syms) out.push_back(static_cast<char>('0' + s));
    return out;
}

std::uint8_t inner_product(const RingVector& x, const RingVector& y) {
    require_same(x.alphabet, y.alphabet);
    if (x.size() != y.size()) throw std::invalid_argument("inner product of vectors of different length");
    const auto& t = tables(x.alphabet);
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc ^= t.mul[x.syms[i]][y.syms[i]];
    return acc;
}

}  // namespace sdc
