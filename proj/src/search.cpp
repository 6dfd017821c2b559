#include "sdc/search.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <omp.h>

namespace sdc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

enum class Outcome { FailedConditions, NotSelfDual, TooLight, Found };

struct TrialResult {
    Outcome outcome = Outcome::FailedConditions;
    Discovery discovery;
};

TrialResult run_trial(const SearchConfig& cfg, std::uint64_t trial) {
    TrialResult r;
    const auto v = trial_vector(cfg, trial);
    if (!check_conditions(cfg.construction, v)) return r;

    auto code = BinaryCode::from_generator(gray_lift(generator_matrix(cfg.construction, v)));
    if (!code.is_self_dual()) {
        r.outcome = Outcome::NotSelfDual;
        return r;
    }

    // Shallow screen: any word below the target ends the trial.
    CensusOptions screen;
    screen.max_weight = cfg.target_d - 1;
    screen.abort_below = cfg.target_d;
    if (low_weight_census(code, screen).aborted) {
        r.outcome = Outcome::TooLight;
        return r;
    }

    VerifyOptions vo;
    vo.deep = cfg.deep;
    vo.max_weight = cfg.census_depth;
    const int depth = std::max(default_census_weight(code.length(), classify_type(code), vo), cfg.target_d);
    r.discovery = analyse_code(format_vector(v), cfg.construction, cfg.alphabet, std::move(code), depth, true);
    r.discovery.seed = cfg.seed;
    r.discovery.trial = trial;
    r.outcome = Outcome::Found;
    return r;
}

}  // namespace

void validate(const SearchConfig& cfg) {
    if (cfg.target_d <= 0 || cfg.target_d % 2 != 0) throw std::invalid_argument("target distance must be even and positive");
    if (cfg.census_depth != 0 && cfg.census_depth < cfg.target_d)
        throw std::invalid_argument("census depth must be at least the target distance");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
    for (const auto& s : cfg.injected)
        if (parse_vector(s, cfg.alphabet).size() != half_length(cfg.construction))
            throw std::invalid_argument("injected vector '" + s + "' has the wrong length");
}

RingVector trial_vector(const SearchConfig& cfg, std::uint64_t trial) {
    if (trial < cfg.injected.size()) return parse_vector(cfg.injected[trial], cfg.alphabet);
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(trial)));
    std::uniform_int_distribution<int> sym(0, static_cast<int>(order(cfg.alphabet)) - 1);
    RingVector v{cfg.alphabet, std::vector<std::uint8_t>(half_length(cfg.construction))};
    for (auto& s : v.syms) s = static_cast<std::uint8_t>(sym(rng));
    return v;
}

SearchResult run_search(const SearchConfig& cfg) {
    validate(cfg);
    SearchResult out;
    std::vector<std::pair<std::uint64_t, Discovery>> found;
    std::uint64_t passed = 0, lifted = 0, light = 0;
    const auto n = static_cast<std::int64_t>(cfg.max_trials);

#pragma omp parallel num_threads(cfg.workers) reduction(+ : passed, lifted, light)
    {
        std::vector<std::pair<std::uint64_t, Discovery>> local;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t t = 0; t < n; ++t) {
            auto r = run_trial(cfg, static_cast<std::uint64_t>(t));
            if (r.outcome == Outcome::FailedConditions) continue;
            ++passed;
            if (r.outcome == Outcome::NotSelfDual) continue;
            ++lifted;
            if (r.outcome == Outcome::TooLight) {
                ++light;
                continue;
            }
            local.emplace_back(static_cast<std::uint64_t>(t), std::move(r.discovery));
        }
#pragma omp critical(sdc_search_merge)
        for (auto& f : local) found.push_back(std::move(f));
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::set<std::string> seen;
    for (auto& [trial, d] : found) {
        if (!seen.insert(fingerprint(d)).second) {
            ++out.stats.duplicates;
            continue;
        }
        out.discoveries.push_back(std::move(d));
    }
    out.stats.trials = cfg.max_trials;
    out.stats.passed_conditions = passed;
    out.stats.lifted = lifted;
    out.stats.rejected_distance = light;
    out.stats.discoveries = out.discoveries.size();

    if (!cfg.output_dir.empty()) persist(out, cfg.output_dir);
    return out;
}

std::string fingerprint(const Discovery& d) {
    std::ostringstream s;
    s << d.length << '|' << to_string(d.type) << '|' << format_params(d.params) << '|';
    for (auto c : d.counts) s << c << ',';
    return s.str();
}

std::string record_file_name(const Discovery& d) {
    return std::string(to_string(d.construction)) + "_" + std::string(to_string(d.alphabet)) + "_t" +
           std::to_string(d.trial.value_or(0)) + ".txt";
}

std::string index_text(const std::vector<Discovery>& discoveries) {
    std::ostringstream s;
    s << "construction\talphabet\tv\tN\tk\td\tfamily\talpha\tbeta\tgamma\tseed\ttrial\n";
    auto opt = [](const auto& x) { return x ? std::to_string(*x) : std::string("-"); };
    for (const auto& d : discoveries) {
        s << to_string(d.construction) << '\t' << to_string(d.alphabet) << '\t' << d.v << '\t' << d.length << '\t'
          << d.dimension << '\t' << (d.distance_exact ? "" : ">=") << d.distance << '\t' << to_string(d.params.family)
          << '\t' << opt(d.params.alpha) << '\t' << opt(d.params.beta) << '\t' << opt(d.params.gamma) << '\t'
          << opt(d.seed) << '\t' << opt(d.trial) << '\n';
    }
    return s.str();
}

void persist(const SearchResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& d : result.discoveries) {
        std::ofstream f(dir / record_file_name(d));
        if (!f) throw std::runtime_error("cannot write " + (dir / record_file_name(d)).string());
        write_record(f, d);
    }
    std::ofstream idx(dir / "index.tsv");
    if (!idx) throw std::runtime_error("cannot write " + (dir / "index.tsv").string());
    idx << index_text(result.discoveries);
}

}  // namespace sdc
