#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cremona {

struct Counterexample {
    std::string input;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string check;
    std::map<std::string, long long> params;
    bool pass = false;
    long long cases = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    double seconds = 0.0;
};

/// Named desk-scale checks, all deterministic given their bounds:
///   fulton-oracle       extension enumeration vs the explicit-group oracle
///   lr-paper-expansions the five case expansions and the triple product
///   prop-cr1-cr1        extensions of line groups land in plane families 1/2/5
///   prop-cr1-cr2        extensions of line by plane groups are product type
///   lemma-r2-4          cyclic extensions with 2-rank 4 have the klein shape
///   table1-closure      subgroup/quotient types stay inside the tables
///   subgroup-criterion  componentwise subgroup types vs the explicit oracle
///   cyclic-splitting    middles of cyclic extensions split as Z/m+ x K-
///   rank-sharpness      generator bounds hold and the sharp witnesses exist
std::vector<std::string> check_names();

struct CheckOptions {
    std::optional<long long> bound;  // overrides the check's primary bound
};

/// Throws std::invalid_argument on an unknown name; oracle-backed checks
/// propagate OracleBoundError when the bound exceeds the hard limit.
VerificationReport run_check(const std::string& name, const CheckOptions& options = {});

nlohmann::json report_to_json(const VerificationReport& report);

/// Fixed-width summary table, one row per report, checks sorted by name.
void print_report_table(std::ostream& out, const std::vector<VerificationReport>& reports);

}  // namespace cremona
