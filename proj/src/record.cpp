#include "sdc/record.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace sdc {

namespace {

std::string code_params(const Discovery& d) {
    return "[" + std::to_string(d.length) + "," + std::to_string(d.dimension) + "," +
           (d.distance_exact ? "" : ">=") + std::to_string(d.distance) + "]";
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::int64_t to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " value '" + s + "'");
    }
}

}  // namespace

int default_census_weight(std::size_t length, CodeType type, const VerifyOptions& options) {
    if (options.max_weight > 0) return options.max_weight;
    if (has_family(length, type)) return family_census_weight(length, type, options.deep);
    return distance_bound(static_cast<int>(length), type);
}

Discovery analyse_code(std::string_view v, ConstructionId id, Alphabet alphabet, BinaryCode code, int census_weight,
                       bool parallel) {
    Discovery d;
    d.v = std::string(v);
    d.construction = id;
    d.alphabet = alphabet;
    d.length = code.length();
    d.dimension = code.dimension();
    d.type = classify_type(code);

    CensusOptions opt;
    opt.max_weight = census_weight;
    opt.parallel = parallel;
    const auto census = low_weight_census(code, opt);
    d.counts = census.counts;
    d.distance = census.min_nonzero_weight();
    d.distance_exact = d.distance != 0;
    if (!d.distance_exact) d.distance = census_weight + 1;

    if (has_family(d.length, d.type)) {
        try {
            d.params = extract_params(census, d.length, d.type);
        } catch (const NoFamilyFits&) {
            d.params = {};
        }
    }
    d.generator = code.generator();
    return d;
}

Discovery verify_record(std::string_view v, ConstructionId id, Alphabet alphabet, const VerifyOptions& options) {
    const auto vec = parse_vector(v, alphabet);
    if (vec.size() != half_length(id))
        throw std::invalid_argument("construction " + std::string(to_string(id)) + " needs " +
                                    std::to_string(half_length(id)) + " symbols, got " + std::to_string(vec.size()));
    if (!check_conditions(id, vec))
        throw VerificationError("v does not satisfy the conditions of construction " + std::string(to_string(id)));
    auto code = BinaryCode::from_generator(gray_lift(generator_matrix(id, vec)));
    if (!code.is_self_dual()) throw VerificationError("the lifted binary code is not self-dual");
    const int weight = default_census_weight(code.length(), classify_type(code), options);
    return analyse_code(format_vector(vec), id, alphabet, std::move(code), weight, options.parallel);
}

std::string summary_line(const Discovery& d) {
    std::string s = "self-dual " + code_params(d) + " " + std::string(to_string(d.type));
    if (d.params.family != EnumeratorFamily::None) s += ", " + format_params(d.params);
    return s;
}

void write_record(std::ostream& out, const Discovery& d) {
    out << "# construction: " << to_string(d.construction) << '\n';
    out << "# alphabet: " << to_string(d.alphabet) << '\n';
    out << "# v: " << d.v << '\n';
    out << "# code: " << code_params(d) << ' ' << to_string(d.type) << '\n';
    out << "# family: " << to_string(d.params.family) << '\n';
    if (d.params.alpha) out << "# alpha: " << *d.params.alpha << '\n';
    if (d.params.beta) out << "# beta: " << *d.params.beta << '\n';
    if (d.params.gamma) out << "# gamma: " << *d.params.gamma << '\n';
    if (d.seed) out << "# seed: " << *d.seed << '\n';
    if (d.trial) out << "# trial: " << *d.trial << '\n';
    out << "# census: " << (d.counts.empty() ? 0 : d.counts.size() - 1) << '\n';
    for (std::size_t r = 0; r < d.generator.rows(); ++r) out << d.generator.row_string(r) << '\n';
    for (std::size_t w = 0; w < d.counts.size(); ++w)
        if (d.counts[w] != 0) out << "# A_" << w << " = " << d.counts[w] << '\n';
}

std::string format_record(const Discovery& d) {
    std::ostringstream s;
    write_record(s, d);
    return s.str();
}

ParsedRecord parse_record(std::istream& in) {
    ParsedRecord r;
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty()) continue;
        if (t[0] != '#') {
            rows.push_back(t);
            continue;
        }
        const auto body = trim(std::string_view(t).substr(1));
        if (body.rfind("A_", 0) == 0) {
            const auto eq = body.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("malformed weight line '" + t + "'");
            const int w = static_cast<int>(to_int(trim(std::string_view(body).substr(2, eq - 2)), "weight"));
            r.counts[w] = static_cast<std::uint64_t>(to_int(trim(std::string_view(body).substr(eq + 1)), "count"));
            continue;
        }
        const auto colon = body.find(':');
        if (colon == std::string::npos) continue;  // free comment
        r.header[trim(std::string_view(body).substr(0, colon))] = trim(std::string_view(body).substr(colon + 1));
    }
    r.generator = BinaryMatrix::from_strings(rows);
    return r;
}

Discovery discovery_from_record(const ParsedRecord& r) {
    auto field = [&](const char* key) -> const std::string& {
        const auto it = r.header.find(key);
        if (it == r.header.end()) throw std::invalid_argument(std::string("record lacks the '") + key + "' field");
        return it->second;
    };
    auto optional_int = [&](const char* key) -> std::optional<std::int64_t> {
        const auto it = r.header.find(key);
        if (it == r.header.end()) return std::nullopt;
        return to_int(it->second, key);
    };

    Discovery d;
    d.construction = parse_construction(field("construction"));
    d.alphabet = parse_alphabet(field("alphabet"));
    d.v = field("v");

    // "[80,40,14] Type I"
    const auto& code = field("code");
    const auto close = code.find(']');
    if (code.empty() || code[0] != '[' || close == std::string::npos)
        throw std::invalid_argument("malformed code field '" + code + "'");
    std::stringstream parts(code.substr(1, close - 1));
    std::string n, k, dist;
    std::getline(parts, n, ',');
    std::getline(parts, k, ',');
    std::getline(parts, dist, ',');
    d.length = static_cast<std::size_t>(to_int(n, "length"));
    d.dimension = static_cast<std::size_t>(to_int(k, "dimension"));
    d.distance_exact = dist.rfind(">=", 0) != 0;
    d.distance = static_cast<int>(to_int(d.distance_exact ? dist : dist.substr(2), "distance"));
    const auto type = trim(std::string_view(code).substr(close + 1));
    if (type == "Type I")
        d.type = CodeType::TypeI;
    else if (type == "Type II")
        d.type = CodeType::TypeII;
    else
        throw std::invalid_argument("unknown code type '" + type + "'");

    d.params.family = parse_family(field("family"));
    d.params.alpha = optional_int("alpha");
    d.params.beta = optional_int("beta");
    d.params.gamma = optional_int("gamma");
    auto optional_uint = [&](const char* key) -> std::optional<std::uint64_t> {
        const auto it = r.header.find(key);
        if (it == r.header.end()) return std::nullopt;
        try {
            std::size_t used = 0;
            const auto v = std::stoull(it->second, &used);
            if (used == it->second.size() && it->second[0] != '-') return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("bad ") + key + " value '" + it->second + "'");
    };
    d.seed = optional_uint("seed");
    d.trial = optional_uint("trial");

    const auto depth = static_cast<std::size_t>(to_int(field("census"), "census"));
    d.counts.assign(depth + 1, 0);
    for (auto [w, c] : r.counts) {
        if (w < 0 || static_cast<std::size_t>(w) > depth) throw std::invalid_argument("weight line beyond the census");
        d.counts[static_cast<std::size_t>(w)] = c;
    }
    d.generator = r.generator;
    if (d.generator.rows() != d.dimension || d.generator.cols() != d.length)
        throw std::invalid_argument("generator shape does not match the code field");
    return d;
}

}  // namespace sdc
