#pragma once

// Pipeline orchestration: run the full classification on a step set,
// serialize it as versioned JSON or plain text, and regression-check the
// embedded tables.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/asymptotics.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/irrational.hpp"
#include "qwalk/stepset.hpp"

namespace qwalk {

struct ClassifyOptions {
    mpfr_prec_t precision = kDefaultStartPrec;  // starting precision
    long max_n = 8;     // exact excursion terms included in the report
    long fit_n = 0;     // > 0 runs the (non-certified) float-DP fit to N
};

struct ClassificationReport {
    StepSet steps;
    std::string chi;
    bool singular = false;
    ExcursionSeq excursions;
    Verdict verdict;
    std::optional<AsymptoticFit> fit;
    std::optional<std::string> matched_tag;
    std::optional<std::string> failure;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    int exit_code() const;  // 0, 2, 3 per verdict/certificate
};

ClassificationReport classify(const StepSet& s, const ClassifyOptions& opt = {});

struct TableCheck {
    int checked = 0;
    int passed = 0;
    std::vector<std::string> failures;  // "tag: reason"
};

// table 1: sequences, printed decimals, periodicity.
// table 2: minimal polynomials divide the eliminants and carry the
// certified roots.
TableCheck check_tables(int table, const std::vector<std::string>& tags = {});

// True iff the enclosure lies within half an ulp of the printed decimal.
bool matches_decimal(const Interval& v, const std::string& printed);

}  // namespace qwalk
