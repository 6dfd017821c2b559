#include "sdc/constructions.hpp"

#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <utility>

namespace sdc {

namespace {

void require_length(ConstructionId id, const RingVector& v) {
    if (v.size() != half_length(id))
        throw std::invalid_argument("construction " + std::string(to_string(id)) + " needs a vector of length " +
                                    std::to_string(half_length(id)) + ", got " + std::to_string(v.size()));
}

// v_{i:j} with 1-based inclusive bounds; descending when i > j.
struct Slice {
    std::size_t from, to;
};

RingMatrix cir(const RingVector& v, std::initializer_list<Slice> slices) {
    std::vector<std::uint8_t> row;
    for (const auto& s : slices) {
        if (s.from <= s.to)
            for (std::size_t k = s.from; k <= s.to; ++k) row.push_back(v.syms[k - 1]);
        else
            for (std::size_t k = s.from; k >= s.to; --k) row.push_back(v.syms[k - 1]);
    }
    return circulant(v.alphabet, row);
}

Slice at(std::size_t i) { return {i, i}; }

RingMatrix T(const RingMatrix& a) { return transpose(a); }
RingMatrix S(const RingMatrix& a) { return star(a); }

// Sum of X_k Y_k^T.
RingMatrix sum_abt(std::initializer_list<std::pair<const RingMatrix*, RingMatrix>> terms) {
    RingMatrix acc;
    bool first = true;
    for (const auto& [x, y] : terms) {
        auto p = mul_transposed(*x, y);
        acc = first ? std::move(p) : acc + p;
        first = false;
    }
    return acc;
}

// Sum of X_k Y_k.
RingMatrix sum_ab(std::initializer_list<std::pair<const RingMatrix*, const RingMatrix*>> terms) {
    RingMatrix acc;
    bool first = true;
    for (const auto& [x, y] : terms) {
        auto p = *x * *y;
        acc = first ? std::move(p) : acc + p;
        first = false;
    }
    return acc;
}

struct Blocks20_1 {
    RingMatrix A1, B1, C1, D1, A2, B2, C2, D2;
    explicit Blocks20_1(const RingVector& v)
        : A1(cir(v, {{1, 5}})), B1(cir(v, {{6, 10}})), C1(cir(v, {{11, 15}})), D1(cir(v, {{16, 20}})),
          A2(cir(v, {at(1), {10, 7}})), B2(cir(v, {{6, 2}})), C2(cir(v, {at(11), {20, 17}})),
          D2(cir(v, {{16, 12}})) {}
};

struct Blocks20_2 {
    RingMatrix A, B, C, D;
    explicit Blocks20_2(const RingVector& v)
        : A(cir(v, {{1, 5}})), B(cir(v, {{6, 10}})), C(cir(v, {{11, 15}})), D(cir(v, {{16, 20}})) {}
};

// Shared by 42.1 and 42.2. The last D block is printed as a second D_2 in
// the source definitions; it is D_3 in the matching condition systems.
struct Blocks42 {
    RingMatrix A1, A2, A3, B1, B2, B3, C1, C2, C3, D1, D2, D3;
    explicit Blocks42(const RingVector& v)
        : A1(cir(v, {{1, 7}})), A2(cir(v, {{8, 14}})), A3(cir(v, {{15, 21}})), B1(cir(v, {{22, 28}})),
          B2(cir(v, {{29, 35}})), B3(cir(v, {{36, 42}})), C1(cir(v, {at(22), {42, 37}})), C2(cir(v, {{36, 30}})),
          C3(cir(v, {{29, 23}})), D1(cir(v, {at(1), {21, 16}})), D2(cir(v, {{15, 9}})), D3(cir(v, {{8, 2}})) {}
};

struct Blocks24_1 {
    RingMatrix A1, A2, B1, B2, C1, C2, D1, D2;
    explicit Blocks24_1(const RingVector& v)
        : A1(cir(v, {{1, 3}})), A2(cir(v, {{4, 6}})), B1(cir(v, {{7, 9}})), B2(cir(v, {{10, 12}})),
          C1(cir(v, {{13, 15}})), C2(cir(v, {{16, 18}})), D1(cir(v, {{19, 21}})), D2(cir(v, {{22, 24}})) {}
};

// Shared by 24.2 and 24.3.
struct Blocks24 {
    RingMatrix A1, A2, B1, B2, C1, C2, D1, D2;
    explicit Blocks24(const RingVector& v)
        : A1(cir(v, {{1, 6}})), A2(cir(v, {{7, 12}})), B1(cir(v, {{13, 18}})), B2(cir(v, {{19, 24}})),
          C1(cir(v, {at(13), {24, 20}})), C2(cir(v, {{19, 14}})), D1(cir(v, {at(1), {12, 8}})),
          D2(cir(v, {{7, 2}})) {}
};

RingMatrix tilde(const RingMatrix& x1, const RingMatrix& x2) { return assemble({{x1, x2}, {T(x2), T(x1)}}); }

RingMatrix omega_20_1(const RingVector& v) {
    const Blocks20_1 b(v);
    return assemble({{b.A1, b.B1, b.C1, b.D1},
                     {T(b.B1), T(b.A1), T(b.D1), T(b.C1)},
                     {b.C2, b.D2, b.A2, b.B2},
                     {T(b.D2), T(b.C2), T(b.B2), T(b.A2)}});
}

RingMatrix omega_20_2(const RingVector& v) {
    const Blocks20_2 b(v);
    return assemble({{b.A, b.B, b.C, b.D},
                     {T(b.B), T(b.A), T(b.D), T(b.C)},
                     {b.C, b.D, b.A, b.B},
                     {T(b.D), T(b.C), T(b.B), T(b.A)}});
}

RingMatrix omega_42_1(const RingVector& v) {
    const Blocks42 b(v);
    return assemble({{block_circulant({b.A1, b.A2, b.A3}), block_circulant({b.B1, b.B2, b.B3})},
                     {block_circulant({b.C1, b.C2, b.C3}), block_circulant({b.D1, b.D2, b.D3})}});
}

RingMatrix omega_42_2(const RingVector& v) {
    const Blocks42 b(v);
    return assemble({{b.A1, b.A2, b.A3, b.B1, b.B2, b.B3},
                     {S(b.A3), b.A1, b.A2, S(b.B3), b.B1, b.B2},
                     {S(b.A2), S(b.A3), b.A1, S(b.B2), S(b.B3), b.B1},
                     {b.C1, b.C2, b.C3, b.D1, b.D2, b.D3},
                     {S(b.C3), b.C1, b.C2, S(b.D3), b.D1, b.D2},
                     {S(b.C2), S(b.C3), b.C1, S(b.D2), S(b.D3), b.D1}});
}

RingMatrix omega_24_1(const RingVector& v) {
    const Blocks24_1 b(v);
    const auto at_ = tilde(b.A1, b.A2), bt = tilde(b.B1, b.B2), ct = tilde(b.C1, b.C2), dt = tilde(b.D1, b.D2);
    const Alphabet al = v.alphabet;
    return kronecker(RingMatrix::identity(al, 2), block_circulant({at_, bt})) +
           kronecker(exchange(al, 2), block_circulant({ct, dt}));
}

RingMatrix omega_24_2(const RingVector& v) {
    const Blocks24 b(v);
    return assemble({{b.A1, b.A2, b.B1, b.B2},
                     {S(b.A2), b.A1, S(b.B2), b.B1},
                     {b.C1, b.C2, b.D1, b.D2},
                     {S(b.C2), b.C1, S(b.D2), b.D1}});
}

RingMatrix omega_24_3(const RingVector& v) {
    const Blocks24 b(v);
    return assemble({{b.A1, b.A2, b.B1, b.B2},
                     {T(b.A2), T(b.A1), T(b.B2), T(b.B1)},
                     {b.C1, b.C2, b.D1, b.D2},
                     {T(b.C2), T(b.C1), T(b.D2), T(b.D1)}});
}

using Eq = ConditionEquation;

std::vector<Eq> system_20_1(const RingVector& v) {
    auto b = std::make_shared<const Blocks20_1>(v);
    return {
        {"X1", true, 0, 0, [b] { return sum_abt({{&b->A1, b->A1}, {&b->B1, b->B1}, {&b->C1, b->C1}, {&b->D1, b->D1}}); }},
        {"X2", true, 2, 2, [b] { return sum_abt({{&b->A2, b->A2}, {&b->B2, b->B2}, {&b->C2, b->C2}, {&b->D2, b->D2}}); }},
        {"Y1", false, 0, 2, [b] { return sum_abt({{&b->A1, b->C2}, {&b->B1, b->D2}, {&b->C1, b->A2}, {&b->D1, b->B2}}); }},
        {"Y2", false, 0, 3, [b] { return sum_ab({{&b->A1, &b->D2}, {&b->B1, &b->C2}, {&b->C1, &b->B2}, {&b->D1, &b->A2}}); }},
    };
}

std::vector<Eq> system_20_2(const RingVector& v) {
    auto b = std::make_shared<const Blocks20_2>(v);
    return {
        {"X", true, 0, 0, [b] { return sum_abt({{&b->A, b->A}, {&b->B, b->B}, {&b->C, b->C}, {&b->D, b->D}}); }},
        {"Y", false, 0, 2, [b] { return sum_abt({{&b->A, b->C}, {&b->B, b->D}, {&b->C, b->A}, {&b->D, b->B}}); }},
    };
}

std::vector<Eq> system_42_1(const RingVector& v) {
    auto b = std::make_shared<const Blocks42>(v);
    return {
        {"X1", true, 0, 0, [b] {
             return sum_abt({{&b->A1, b->A1}, {&b->A2, b->A2}, {&b->A3, b->A3},
                             {&b->B1, b->B1}, {&b->B2, b->B2}, {&b->B3, b->B3}});
         }},
        {"X2", true, 3, 3, [b] {
             return sum_abt({{&b->C1, b->C1}, {&b->C2, b->C2}, {&b->C3, b->C3},
                             {&b->D1, b->D1}, {&b->D2, b->D2}, {&b->D3, b->D3}});
         }},
        {"Y1", false, 0, 1, [b] {
             return sum_abt({{&b->A1, b->A3}, {&b->A2, b->A1}, {&b->A3, b->A2},
                             {&b->B1, b->B3}, {&b->B2, b->B1}, {&b->B3, b->B2}});
         }},
        {"Y2", false, 0, 3, [b] {
             return sum_abt({{&b->A1, b->C1}, {&b->A2, b->C2}, {&b->A3, b->C3},
                             {&b->B1, b->D1}, {&b->B2, b->D2}, {&b->B3, b->D3}});
         }},
        {"Y3", false, 0, 4, [b] {
             return sum_abt({{&b->A1, b->C3}, {&b->A2, b->C1}, {&b->A3, b->C2},
                             {&b->B1, b->D3}, {&b->B2, b->D1}, {&b->B3, b->D2}});
         }},
        {"Y4", false, 0, 5, [b] {
             return sum_abt({{&b->A1, b->C2}, {&b->A2, b->C3}, {&b->A3, b->C1},
                             {&b->B1, b->D2}, {&b->B2, b->D3}, {&b->B3, b->D1}});
         }},
        {"Y5", false, 3, 4, [b] {
             return sum_abt({{&b->C1, b->C3}, {&b->C2, b->C1}, {&b->C3, b->C2},
                             {&b->D1, b->D3}, {&b->D2, b->D1}, {&b->D3, b->D2}});
         }},
    };
}

std::vector<Eq> system_42_2(const RingVector& v) {
    auto b = std::make_shared<const Blocks42>(v);
    return {
        {"X1", true, 0, 0, [b] {
             return sum_abt({{&b->A1, b->A1}, {&b->A2, b->A2}, {&b->A3, b->A3},
                             {&b->B1, b->B1}, {&b->B2, b->B2}, {&b->B3, b->B3}});
         }},
        {"X2", true, 3, 3, [b] {
             return sum_abt({{&b->C1, b->C1}, {&b->C2, b->C2}, {&b->C3, b->C3},
                             {&b->D1, b->D1}, {&b->D2, b->D2}, {&b->D3, b->D3}});
         }},
        {"Y1", false, 0, 1, [b] {
             return sum_abt({{&b->A2, b->A1}, {&b->A3, b->A2}, {&b->A1, S(b->A3)},
                             {&b->B2, b->B1}, {&b->B3, b->B2}, {&b->B1, S(b->B3)}});
         }},
        {"Y2", false, 0, 3, [b] {
             return sum_abt({{&b->A1, b->C1}, {&b->A2, b->C2}, {&b->A3, b->C3},
                             {&b->B1, b->D1}, {&b->B2, b->D2}, {&b->B3, b->D3}});
         }},
        {"Y3", false, 0, 4, [b] {
             return sum_abt({{&b->A2, b->C1}, {&b->A3, b->C2}, {&b->A1, S(b->C3)},
                             {&b->B2, b->D1}, {&b->B3, b->D2}, {&b->B1, S(b->D3)}});
         }},
        {"Y4", false, 0, 5, [b] {
             return sum_abt({{&b->A3, b->C1}, {&b->A1, S(b->C2)}, {&b->A2, S(b->C3)},
                             {&b->B3, b->D1}, {&b->B1, S(b->D2)}, {&b->B2, S(b->D3)}});
         }},
        {"Y5", false, 3, 4, [b] {
             return sum_abt({{&b->C2, b->C1}, {&b->C3, b->C2}, {&b->C1, S(b->C3)},
                             {&b->D2, b->D1}, {&b->D3, b->D2}, {&b->D1, S(b->D3)}});
         }},
    };
}

std::vector<Eq> system_24_1(const RingVector& v) {
    auto b = std::make_shared<const Blocks24_1>(v);
    return {
        {"X", true, 0, 0, [b] {
             return sum_abt({{&b->A1, b->A1}, {&b->A2, b->A2}, {&b->B1, b->B1}, {&b->B2, b->B2},
                             {&b->C1, b->C1}, {&b->C2, b->C2}, {&b->D1, b->D1}, {&b->D2, b->D2}});
         }},
        {"Y1", false, 0, 2, [b] {
             return sum_abt({{&b->A1, b->B1}, {&b->A2, b->B2}, {&b->B1, b->A1}, {&b->B2, b->A2},
                             {&b->C1, b->D1}, {&b->C2, b->D2}, {&b->D1, b->C1}, {&b->D2, b->C2}});
         }},
        {"Y2", false, 0, 4, [b] {
             return sum_abt({{&b->A1, b->C1}, {&b->A2, b->C2}, {&b->B1, b->D1}, {&b->B2, b->D2},
                             {&b->C1, b->A1}, {&b->C2, b->A2}, {&b->D1, b->B1}, {&b->D2, b->B2}});
         }},
        {"Y3", false, 0, 6, [b] {
             return sum_abt({{&b->A1, b->D1}, {&b->A2, b->D2}, {&b->B1, b->C1}, {&b->B2, b->C2},
                             {&b->C1, b->B1}, {&b->C2, b->B2}, {&b->D1, b->A1}, {&b->D2, b->A2}});
         }},
    };
}

std::vector<Eq> system_24_2(const RingVector& v) {
    auto b = std::make_shared<const Blocks24>(v);
    return {
        {"X1", true, 0, 0, [b] { return sum_abt({{&b->A1, b->A1}, {&b->A2, b->A2}, {&b->B1, b->B1}, {&b->B2, b->B2}}); }},
        {"X2", true, 2, 2, [b] { return sum_abt({{&b->C1, b->C1}, {&b->C2, b->C2}, {&b->D1, b->D1}, {&b->D2, b->D2}}); }},
        {"Y1", false, 0, 1, [b] { return sum_abt({{&b->A1, S(b->A2)}, {&b->A2, b->A1}, {&b->B1, S(b->B2)}, {&b->B2, b->B1}}); }},
        {"Y2", false, 0, 2, [b] { return sum_abt({{&b->A1, b->C1}, {&b->A2, b->C2}, {&b->B1, b->D1}, {&b->B2, b->D2}}); }},
        {"Y3", false, 0, 3, [b] { return sum_abt({{&b->A1, S(b->C2)}, {&b->A2, b->C1}, {&b->B1, S(b->D2)}, {&b->B2, b->D1}}); }},
        {"Y4", false, 2, 3, [b] { return sum_abt({{&b->C1, S(b->C2)}, {&b->C2, b->C1}, {&b->D1, S(b->D2)}, {&b->D2, b->D1}}); }},
    };
}

std::vector<Eq> system_24_3(const RingVector& v) {
    auto b = std::make_shared<const Blocks24>(v);
    return {
        {"X1", true, 0, 0, [b] { return sum_abt({{&b->A1, b->A1}, {&b->A2, b->A2}, {&b->B1, b->B1}, {&b->B2, b->B2}}); }},
        {"X2", true, 2, 2, [b] { return sum_abt({{&b->C1, b->C1}, {&b->C2, b->C2}, {&b->D1, b->D1}, {&b->D2, b->D2}}); }},
        {"Y1", false, 0, 2, [b] { return sum_abt({{&b->A1, b->C1}, {&b->A2, b->C2}, {&b->B1, b->D1}, {&b->B2, b->D2}}); }},
        {"Y2", false, 0, 3, [b] { return sum_ab({{&b->A1, &b->C2}, {&b->A2, &b->C1}, {&b->B1, &b->D2}, {&b->B2, &b->D1}}); }},
    };
}

}  // namespace

std::string_view to_string(ConstructionId id) noexcept {
    switch (id) {
        case ConstructionId::Omega20_1: return "20.1";
        case ConstructionId::Omega20_2: return "20.2";
        case ConstructionId::Omega42_1: return "42.1";
        case ConstructionId::Omega42_2: return "42.2";
        case ConstructionId::Omega24_1: return "24.1";
        case ConstructionId::Omega24_2: return "24.2";
        case ConstructionId::Omega24_3: return "24.3";
    }
    return "?";
}

ConstructionId parse_construction(std::string_view name) {
    for (auto id : kAllConstructions)
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown construction '" + std::string(name) +
                                "' (expected 20.1, 20.2, 42.1, 42.2, 24.1, 24.2 or 24.3)");
}

std::size_t half_length(ConstructionId id) noexcept {
    switch (id) {
        case ConstructionId::Omega20_1:
        case ConstructionId::Omega20_2: return 20;
        case ConstructionId::Omega42_1:
        case ConstructionId::Omega42_2: return 42;
        case ConstructionId::Omega24_1:
        case ConstructionId::Omega24_2:
        case ConstructionId::Omega24_3: return 24;
    }
    return 0;
}

std::size_t condition_block_size(ConstructionId id) noexcept {
    switch (id) {
        case ConstructionId::Omega20_1:
        case ConstructionId::Omega20_2: return 5;
        case ConstructionId::Omega42_1:
        case ConstructionId::Omega42_2: return 7;
        case ConstructionId::Omega24_1: return 3;
        case ConstructionId::Omega24_2:
        case ConstructionId::Omega24_3: return 6;
    }
    return 0;
}

CompositeSpec composite_spec(ConstructionId id) {
    auto make = [](GroupSpec g, GroupSpec h) {
        return uniform_composite(std::make_shared<const GroupSpec>(std::move(g)),
                                 std::make_shared<const GroupSpec>(std::move(h)));
    };
    switch (id) {
        case ConstructionId::Omega20_1: return make(GroupSpec::dihedral(10), GroupSpec::dihedral(5));
        case ConstructionId::Omega20_2: return make(GroupSpec::direct_product_cyclic(5, 4), GroupSpec::dihedral(5));
        case ConstructionId::Omega42_1: return make(GroupSpec::dihedral(21), GroupSpec::direct_product_cyclic(7, 3));
        case ConstructionId::Omega42_2: return make(GroupSpec::dihedral(21), GroupSpec::cyclic_interleaved(3, 7));
        case ConstructionId::Omega24_1: return make(GroupSpec::direct_product_cyclic(12, 2), GroupSpec::dihedral(3));
        case ConstructionId::Omega24_2: return make(GroupSpec::dihedral(12), GroupSpec::cyclic_interleaved(2, 6));
        case ConstructionId::Omega24_3: return make(GroupSpec::dihedral(12), GroupSpec::dihedral(6));
    }
    throw std::invalid_argument("unknown construction");
}

RingMatrix build_omega(ConstructionId id, const RingVector& v) {
    require_length(id, v);
    switch (id) {
        case ConstructionId::Omega20_1: return omega_20_1(v);
        case ConstructionId::Omega20_2: return omega_20_2(v);
        case ConstructionId::Omega42_1: return omega_42_1(v);
        case ConstructionId::Omega42_2: return omega_42_2(v);
        case ConstructionId::Omega24_1: return omega_24_1(v);
        case ConstructionId::Omega24_2: return omega_24_2(v);
        case ConstructionId::Omega24_3: return omega_24_3(v);
    }
    throw std::invalid_argument("unknown construction");
}

std::vector<ConditionEquation> condition_system(ConstructionId id, const RingVector& v) {
    require_length(id, v);
    switch (id) {
        case ConstructionId::Omega20_1: return system_20_1(v);
        case ConstructionId::Omega20_2: return system_20_2(v);
        case ConstructionId::Omega42_1: return system_42_1(v);
        case ConstructionId::Omega42_2: return system_42_2(v);
        case ConstructionId::Omega24_1: return system_24_1(v);
        case ConstructionId::Omega24_2: return system_24_2(v);
        case ConstructionId::Omega24_3: return system_24_3(v);
    }
    throw std::invalid_argument("unknown construction");
}

bool check_conditions(ConstructionId id, const RingVector& v) {
    for (const auto& eq : condition_system(id, v)) {
        const auto value = eq.evaluate();
        if (eq.identity ? !is_identity(value) : !is_zero(value)) return false;
    }
    return true;
}

RingMatrix generator_matrix(ConstructionId id, const RingVector& v) {
    const auto omega = build_omega(id, v);
    const std::size_t n = omega.rows();
    RingMatrix g(v.alphabet, n, 2 * n);
    g.set_block(0, 0, RingMatrix::identity(v.alphabet, n));
    g.set_block(0, n, omega);
    return g;
}

}  // namespace sdc
