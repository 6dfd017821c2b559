#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdc/constructions.hpp"
#include "sdc/enumerator.hpp"
#include "sdc/record.hpp"

namespace sdc {

struct TableRow {
    int code_index;
    std::string_view v;
    /// Reported parameters; for length 96 Type I the family is the one gamma belongs to.
    EnumeratorParams expected;
};

/// One table of known self-dual codes: every printed row plus the count of
/// rows that exist only in the external database.
struct CodeTable {
    int number;
    ConstructionId construction;
    Alphabet alphabet;
    std::size_t length;
    CodeType type;
    int distance;
    std::string_view description;
    std::vector<TableRow> rows;
    int external_rows;
    int first_external_index;
};

const std::vector<CodeTable>& code_tables();
/// Throws std::out_of_range for an unknown table number.
const CodeTable& code_table(int number);

struct RowCheck {
    int code_index = 0;
    bool pass = false;
    /// Summary on success, the first mismatch otherwise.
    std::string detail;
};

/// Re-derives one row and compares length, type, distance and parameters.
/// Gamma is compared only for deep checks.
RowCheck check_row(const CodeTable& table, const TableRow& row, const VerifyOptions& options);

}  // namespace sdc
