#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracecodes/bounds.hpp"
#include "tracecodes/code_spec.hpp"
#include "tracecodes/defining_set.hpp"
#include "tracecodes/enumeration.hpp"
#include "tracecodes/weight_distribution.hpp"

namespace tracecodes {

enum class Method { Brute, Analytic, Theory };

std::string to_string(Method m);
Method method_from_string(const std::string& name); // ParamError on unknown

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct MethodOutcome {
    Method method = Method::Brute;
    bool ran = false;
    std::string refusal; // non-empty when the method was refused (budget)
    WeightDistribution distribution;
};

struct ReportOptions {
    EnumMode mode = EnumMode::Full;
    EnumerationBudget budget;
    int threads = 0; // 0 = auto
};

/// One code, all requested routes, and every consistency check that applies.
struct CodeReport {
    CodeSpec spec;
    mpz_class length;
    int dimension = 0;
    mpz_class min_distance;
    std::vector<MethodOutcome> outcomes; // in canonical brute/analytic/theory order
    GriesmerClass griesmer_class = GriesmerClass::Neither;
    std::vector<CheckResult> checks;
    std::string note;

    bool all_checks_pass() const;
    const WeightDistribution* distribution() const; // first method that ran, or null
    bool any_method_ran() const;
};

CodeReport run_report(const CodeSpec& spec, const std::vector<Method>& methods,
                      const ReportOptions& options);

// Enumeration-only report for parameter sets outside the construction
// hypotheses (closed forms refuse there, brute force still works). No
// closed-form cross-checks are possible, so only the dimension check runs.
CodeReport run_relaxed_brute_report(const CodeSpec& spec, const ReportOptions& options);

// Deterministic serializations: stable key order, sorted distributions,
// integers emitted as JSON numbers when they fit in 64 bits and as decimal
// strings beyond that.
std::string report_to_json(const CodeReport& report);
std::string distribution_to_csv(const WeightDistribution& d); // weight-0 row excluded
std::string defining_set_to_json(const Field& f, const CodeSpec& spec, const DefiningSet& d);
std::string defining_set_to_csv(const Field& f, const DefiningSet& d);

} // namespace tracecodes
