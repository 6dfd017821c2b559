#include "sdc/code_tables.hpp"

namespace sdc {

namespace {

std::string show(const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : "-"; }

}  // namespace

const CodeTable& code_table(int number) {
    for (const auto& t : code_tables())
        if (t.number == number) return t;
    throw std::out_of_range("no table " + std::to_string(number) + " (tables 2 to 14 are bundled)");
}

RowCheck check_row(const CodeTable& table, const TableRow& row, const VerifyOptions& options) {
    RowCheck out;
    out.code_index = row.code_index;
    Discovery d;
    try {
        d = verify_record(row.v, table.construction, table.alphabet, options);
    } catch (const std::exception& e) {
        out.detail = e.what();
        return out;
    }

    EnumeratorParams want = row.expected;
    const bool shallow_96 = table.length == 96 && table.type == CodeType::TypeI && d.counts.size() <= 20;
    if (shallow_96) {
        want.family = EnumeratorFamily::W96_I;
        want.gamma.reset();
    }

    auto fail = [&](const std::string& what) {
        out.detail = what + " (got " + summary_line(d) + ")";
        return out;
    };
    if (d.length != table.length) return fail("length differs");
    if (d.type != table.type) return fail("type differs");
    if (!d.distance_exact || d.distance != table.distance)
        return fail("distance is not " + std::to_string(table.distance));
    if (d.params.family != want.family) return fail("family is not " + std::string(to_string(want.family)));
    if (d.params.alpha != want.alpha) return fail("alpha is not " + show(want.alpha));
    if (d.params.beta != want.beta) return fail("beta is not " + show(want.beta));
    if (d.params.gamma != want.gamma) return fail("gamma is not " + show(want.gamma));
    out.pass = true;
    out.detail = summary_line(d);
    return out;
}

}  // namespace sdc
