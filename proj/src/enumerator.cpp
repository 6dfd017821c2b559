#include "sdc/enumerator.hpp"

#include <array>
#include <vector>

namespace sdc {

namespace {

struct Candidate {
    EnumeratorParams params;
    // Lowest weight at which the formula stops being trusted (exclusive).
    int covers_up_to;
};

// Exact integer division; nullopt when b does not divide a.
std::optional<std::int64_t> exact_div(std::int64_t a, std::int64_t b) {
    if (a % b != 0) return std::nullopt;
    return a / b;
}

bool matches(const Census& c, const EnumeratorParams& p, int low_cut) {
    const auto predicted = predicted_counts(p, c.max_weight);
    for (int w = 1; w <= c.max_weight; ++w) {
        const auto it = predicted.find(w);
        const std::int64_t expect = it != predicted.end() ? it->second : (w < low_cut || w % 2 != 0 ? 0 : -1);
        if (expect < 0) continue;  // weight outside the formula
        if (static_cast<std::int64_t>(c.count(w)) != expect) return false;
    }
    return true;
}

std::int64_t a(const Census& c, int w) { return static_cast<std::int64_t>(c.count(w)); }

}  // namespace

std::string_view to_string(EnumeratorFamily f) noexcept {
    switch (f) {
        case EnumeratorFamily::None: return "none";
        case EnumeratorFamily::W80: return "W80";
        case EnumeratorFamily::W84_1: return "W84_1";
        case EnumeratorFamily::W84_2: return "W84_2";
        case EnumeratorFamily::W84_3: return "W84_3";
        case EnumeratorFamily::W96_I: return "W96_I";
        case EnumeratorFamily::W96_I_1: return "W96_I_1";
        case EnumeratorFamily::W96_I_2: return "W96_I_2";
        case EnumeratorFamily::W96_II: return "W96_II";
    }
    return "?";
}

EnumeratorFamily parse_family(std::string_view name) {
    for (auto f : {EnumeratorFamily::None, EnumeratorFamily::W80, EnumeratorFamily::W84_1, EnumeratorFamily::W84_2,
                   EnumeratorFamily::W84_3, EnumeratorFamily::W96_I, EnumeratorFamily::W96_I_1,
                   EnumeratorFamily::W96_I_2, EnumeratorFamily::W96_II})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown enumerator family '" + std::string(name) + "'");
}

std::string format_params(const EnumeratorParams& p) {
    std::string s(to_string(p.family));
    if (p.alpha) s += " α=" + std::to_string(*p.alpha);
    if (p.beta) s += " β=" + std::to_string(*p.beta);
    if (p.gamma) s += " γ=" + std::to_string(*p.gamma);
    return s;
}

bool has_family(std::size_t length, CodeType type) {
    if (length == 80 || length == 84) return type == CodeType::TypeI;
    return length == 96;
}

int family_census_weight(std::size_t length, CodeType type, bool deep) {
    if (!has_family(length, type)) return 0;
    if (length == 80) return 16;
    if (length == 84) return 18;
    if (type == CodeType::TypeII) return deep ? 20 : 16;
    return deep ? 20 : 18;
}

int family_distance(std::size_t length) {
    if (length == 80 || length == 84) return 14;
    if (length == 96) return 16;
    return 0;
}

std::map<int, std::int64_t> predicted_counts(const EnumeratorParams& p, int max_weight) {
    std::map<int, std::int64_t> m;
    const std::int64_t al = p.alpha.value_or(0), be = p.beta.value_or(0), ga = p.gamma.value_or(0);
    switch (p.family) {
        case EnumeratorFamily::None: break;
        case EnumeratorFamily::W80:
            m[14] = 3200 + 4 * al;
            m[16] = 47645 - 8 * al + 256 * be;
            break;
        case EnumeratorFamily::W84_1:
            m[14] = 4080 - al;
            m[16] = 39524;
            m[18] = 247264 + 14 * al;
            break;
        case EnumeratorFamily::W84_2:
        case EnumeratorFamily::W84_3:
            m[14] = 4080 - al;
            m[16] = 28644 + 64 * be;
            m[18] = (p.family == EnumeratorFamily::W84_2 ? 390368 : 394464) + 14 * al - 384 * be;
            break;
        case EnumeratorFamily::W96_I:
            m[16] = al - 5814;
            m[18] = 97280 + 64 * be;
            break;
        case EnumeratorFamily::W96_I_1:
            m[16] = al - 5814;
            m[18] = 97280 + 64 * be;
            m[20] = 1784320 - 16 * al - 384 * be;
            m[22] = 17626112 + 192 * be;
            break;
        case EnumeratorFamily::W96_I_2:
            m[16] = al - 5814;
            m[18] = 97280 + 64 * be;
            m[20] = 1694208 - 16 * al - 384 * be + 4096 * ga;
            m[22] = 18969600 + 192 * be - 49152 * ga;
            break;
        case EnumeratorFamily::W96_II:
            m[16] = al;
            m[18] = 0;
            m[20] = 3217056 - 16 * al;
            break;
    }
    std::erase_if(m, [max_weight](const auto& kv) { return kv.first > max_weight; });
    return m;
}

EnumeratorParams extract_params(const Census& c, std::size_t length, CodeType type) {
    if (!has_family(length, type))
        throw NoFamilyFits("no weight enumerator family is known for length " + std::to_string(length) + " " +
                           std::string(to_string(type)));
    const int need = family_census_weight(length, type, false);
    if (c.max_weight < need)
        throw NoFamilyFits("census to weight " + std::to_string(c.max_weight) + " is too shallow; need " +
                           std::to_string(need));
    if (c.aborted) throw NoFamilyFits("census was aborted");

    std::vector<EnumeratorParams> fits;
    auto consider = [&](EnumeratorParams p) {
        if (matches(c, p, family_distance(length))) fits.push_back(p);
    };

    if (length == 80) {
        const auto al = exact_div(a(c, 14) - 3200, 4);
        if (al) {
            const auto be = exact_div(a(c, 16) - 47645 + 8 * *al, 256);
            if (be) consider({EnumeratorFamily::W80, al, be, std::nullopt});
        }
    } else if (length == 84) {
        const std::int64_t al = 4080 - a(c, 14);
        consider({EnumeratorFamily::W84_1, al, std::nullopt, std::nullopt});
        if (const auto be = exact_div(a(c, 16) - 28644, 64)) {
            consider({EnumeratorFamily::W84_2, al, be, std::nullopt});
            consider({EnumeratorFamily::W84_3, al, be, std::nullopt});
        }
    } else if (type == CodeType::TypeII) {
        consider({EnumeratorFamily::W96_II, a(c, 16), std::nullopt, std::nullopt});
    } else {
        const std::int64_t al = a(c, 16) + 5814;
        const auto be = exact_div(a(c, 18) - 97280, 64);
        if (be) {
            if (c.max_weight < 20) {
                consider({EnumeratorFamily::W96_I, al, be, std::nullopt});
            } else {
                consider({EnumeratorFamily::W96_I_1, al, be, std::nullopt});
                if (const auto ga = exact_div(a(c, 20) - (1694208 - 16 * al - 384 * *be), 4096))
                    consider({EnumeratorFamily::W96_I_2, al, be, ga});
            }
        }
    }

    if (fits.empty()) throw NoFamilyFits("the measured counts fit no known weight enumerator of length " +
                                         std::to_string(length));
    if (fits.size() == 2 && fits[0].family == EnumeratorFamily::W96_I_1 && fits[1].family == EnumeratorFamily::W96_I_2 &&
        c.max_weight < 22)
        return {EnumeratorFamily::W96_I, fits[0].alpha, fits[0].beta, std::nullopt};
    if (fits.size() > 1) {
        std::string names;
        for (const auto& f : fits) names += (names.empty() ? "" : ", ") + format_params(f);
        throw NoFamilyFits("the census cannot separate " + names + "; count deeper weights");
    }
    return fits.front();
}

}  // namespace sdc
