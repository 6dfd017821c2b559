#include "sdc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <omp.h>

#include "sdc/code_tables.hpp"
#include "sdc/record.hpp"
#include "sdc/search.hpp"

namespace sdc {

namespace {

// Thrown for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kShallowLimit = 18;

struct CodeSource {
    std::string construction;
    std::string alphabet;
    std::string v;
    std::string file;

    void add_to(CLI::App* cmd, bool allow_file) {
        cmd->add_option("--construction", construction, "20.1, 20.2, 42.1, 42.2, 24.1, 24.2 or 24.3");
        cmd->add_option("--alphabet", alphabet, "f2, f2u or f4");
        cmd->add_option("--v", v, "defining vector as a symbol string");
        if (allow_file) cmd->add_option("--file", file, "generator matrix in the database text format");
    }

    bool from_file() const { return !file.empty(); }

    void require_vector() const {
        if (construction.empty() || alphabet.empty() || v.empty())
            throw UsageError("--construction, --alphabet and --v are required");
    }

    ConstructionId id() const { return parse_construction(construction); }
    Alphabet alpha() const { return parse_alphabet(alphabet); }

    // Parses v and checks its length, so bad input is a usage error.
    void check_vector() const {
        require_vector();
        const auto parsed = parse_vector(v, alpha());
        if (parsed.size() != half_length(id()))
            throw UsageError("--v has " + std::to_string(parsed.size()) + " symbols; construction " + construction +
                             " needs " + std::to_string(half_length(id())));
    }
};

BinaryCode code_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    const auto record = parse_record(in);
    return BinaryCode::from_generator(record.generator);
}

void print_counts(std::ostream& out, const std::vector<std::uint64_t>& counts) {
    for (std::size_t w = 0; w < counts.size(); ++w)
        if (counts[w] != 0) out << "A_" << w << " = " << counts[w] << '\n';
}

int cmd_verify(const CodeSource& src, bool deep, int max_weight, const std::string& out_file, std::ostream& out) {
    src.check_vector();
    if (max_weight > kShallowLimit && !deep) throw UsageError("census beyond weight 18 needs --deep");
    VerifyOptions opt;
    opt.deep = deep;
    opt.max_weight = max_weight;
    const auto d = verify_record(src.v, src.id(), src.alpha(), opt);
    out << summary_line(d) << '\n';
    print_counts(out, d.counts);
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::runtime_error("cannot write " + out_file);
        write_record(f, d);
    }
    return kExitOk;
}

int cmd_census(const CodeSource& src, int max_weight, bool deep, int workers, std::ostream& out) {
    if (max_weight <= 0) throw UsageError("--max-weight is required");
    if (max_weight > kShallowLimit && !deep) throw UsageError("census beyond weight 18 needs --deep");
    BinaryCode code = BinaryCode::from_generator(BinaryMatrix(0, 0));
    if (src.from_file()) {
        code = code_from_file(src.file);
    } else {
        src.check_vector();
        code = BinaryCode::from_generator(gray_lift(generator_matrix(src.id(), parse_vector(src.v, src.alpha()))));
    }
    if (!code.is_self_dual()) {
        out << "not a self-dual code\n";
        return kExitVerificationFailure;
    }
    if (workers > 0) omp_set_num_threads(workers);
    CensusOptions opt;
    opt.max_weight = max_weight;
    const auto c = low_weight_census(code, opt);
    out << "[" << code.length() << "," << code.dimension() << "] " << to_string(classify_type(code))
        << ", census to weight " << max_weight << " (radii " << c.first_radius << " and " << c.second_radius << ", "
        << c.nodes << " nodes)\n";
    print_counts(out, c.counts);
    return kExitOk;
}

int cmd_params(const CodeSource& src, bool deep, std::ostream& out) {
    BinaryCode code = BinaryCode::from_generator(BinaryMatrix(0, 0));
    if (src.from_file()) {
        code = code_from_file(src.file);
    } else {
        src.check_vector();
        const auto vec = parse_vector(src.v, src.alpha());
        if (!check_conditions(src.id(), vec)) {
            out << "v does not satisfy the conditions of construction " << src.construction << '\n';
            return kExitVerificationFailure;
        }
        code = BinaryCode::from_generator(gray_lift(generator_matrix(src.id(), vec)));
    }
    if (!code.is_self_dual()) {
        out << "not a self-dual code\n";
        return kExitVerificationFailure;
    }
    const auto type = classify_type(code);
    if (!has_family(code.length(), type)) {
        out << "no weight enumerator family for length " << code.length() << " " << to_string(type) << '\n';
        return kExitVerificationFailure;
    }
    CensusOptions opt;
    opt.max_weight = family_census_weight(code.length(), type, deep);
    const auto c = low_weight_census(code, opt);
    try {
        out << format_params(extract_params(c, code.length(), type)) << '\n';
    } catch (const NoFamilyFits& e) {
        out << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_tables(int number, bool deep, std::ostream& out) {
    std::vector<const CodeTable*> selected;
    if (number == 0) {
        for (const auto& t : code_tables()) selected.push_back(&t);
    } else {
        try {
            selected.push_back(&code_table(number));
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    }
    VerifyOptions opt;
    opt.deep = deep;
    bool all_pass = true;
    for (const auto* t : selected) {
        out << "table " << t->number << ": " << t->description << '\n';
        int passed = 0;
        for (const auto& row : t->rows) {
            const auto r = check_row(*t, row, opt);
            out << "  " << (r.pass ? "PASS" : "FAIL") << "  C" << t->length << "," << row.code_index << "  "
                << row.v << "  " << r.detail << '\n';
            passed += r.pass;
        }
        all_pass = all_pass && passed == static_cast<int>(t->rows.size());
        out << "table " << t->number << ": " << passed << "/" << t->rows.size() << " rows pass";
        if (t->external_rows > 0)
            out << ", " << t->external_rows << " marked external (codes " << t->first_external_index << " to "
                << t->first_external_index + t->external_rows - 1 << ")";
        out << '\n';
    }
    return all_pass ? kExitOk : kExitVerificationFailure;
}

int cmd_search(SearchConfig cfg, const std::string& construction, const std::string& alphabet,
               std::optional<std::uint64_t> seed, std::ostream& out) {
    if (!seed) throw UsageError("search needs --seed");
    cfg.seed = *seed;
    cfg.construction = parse_construction(construction);
    cfg.alphabet = parse_alphabet(alphabet);
    if (cfg.alphabet != Alphabet::F2 && half_length(cfg.construction) == 42)
        out << "warning: construction " << construction << " is normally searched over f2 only\n";
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto result = run_search(cfg);
    for (const auto& d : result.discoveries)
        out << "trial " << d.trial.value_or(0) << "  " << d.v << "  " << summary_line(d) << '\n';
    const auto& s = result.stats;
    out << s.discoveries << " discoveries (" << s.trials << " trials, " << s.passed_conditions
        << " passed the conditions, " << s.rejected_distance << " rejected on distance, " << s.duplicates
        << " duplicates)\n";
    if (!cfg.output_dir.empty()) out << "written to " << cfg.output_dir.string() << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-dual codes from composite matrices: verification, search and analysis", "sdcodes"};
    app.require_subcommand(1);

    CodeSource verify_src, census_src, params_src;
    bool deep = false;
    int max_weight = 0;
    int workers = 0;
    std::string out_file;

    auto* verify = app.add_subcommand("verify", "re-derive one code from its defining vector");
    verify_src.add_to(verify, false);
    verify->add_flag("--deep", deep, "also count weight 20 at length 96");
    verify->add_option("--max-weight", max_weight, "census weight instead of the default");
    verify->add_option("--out", out_file, "write the code in the database text format");

    auto* census = app.add_subcommand("census", "low-weight codeword counts of a self-dual code");
    census_src.add_to(census, true);
    census->add_option("--max-weight", max_weight, "count all codewords up to this weight")->required();
    census->add_flag("--deep", deep, "allow weights beyond 18");
    census->add_option("--workers", workers, "OpenMP threads");

    auto* params = app.add_subcommand("params", "weight enumerator parameters of a self-dual code");
    params_src.add_to(params, true);
    params->add_flag("--deep", deep, "use the weight 20 count at length 96");

    int table = 0;
    auto* tables = app.add_subcommand("tables", "re-derive every bundled table row");
    tables->add_option("--table", table, "table number (2 to 14); all tables when omitted");
    tables->add_flag("--deep", deep, "also check gamma at length 96");

    SearchConfig cfg;
    std::string s_construction, s_alphabet;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    if (const char* env = std::getenv("SDCODES_OUT_DIR")) out_dir = env;
    auto* search = app.add_subcommand("search", "randomised search over defining vectors");
    search->add_option("--construction", s_construction, "construction name")->required();
    search->add_option("--alphabet", s_alphabet, "f2, f2u or f4")->required();
    search->add_option("--target-d", cfg.target_d, "reject codes with a nonzero word below this weight")->required();
    search->add_option("--trials", cfg.max_trials, "number of trials")->required();
    search->add_option("--seed", seed, "random seed");
    search->add_option("--workers", cfg.workers, "OpenMP threads")->check(CLI::PositiveNumber);
    search->add_option("--out-dir", out_dir, "directory for discoveries (default $SDCODES_OUT_DIR)");
    search->add_option("--census-depth", cfg.census_depth, "census weight for survivors");
    search->add_option("--inject", cfg.injected, "vectors tried before random ones");
    search->add_flag("--deep", cfg.deep, "also count weight 20 at length 96");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_src, deep, max_weight, out_file, out);
        if (census->parsed()) return cmd_census(census_src, max_weight, deep, workers, out);
        if (params->parsed()) return cmd_params(params_src, deep, out);
        if (tables->parsed()) return cmd_tables(table, deep, out);
        if (search->parsed()) {
            cfg.output_dir = out_dir;
            return cmd_search(cfg, s_construction, s_alphabet, seed, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError& e) {
        out << "verification failed: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}

}  // namespace sdc
