#include "tracecodes/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tracecodes/analytic.hpp"
#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

ordered_json distribution_to_json(const WeightDistribution& d) {
    ordered_json arr = ordered_json::array();
    for (const auto& [w, c] : d.entries) arr.push_back({mpz_to_json(w), mpz_to_json(c)});
    return arr;
}

ordered_json coeffs_to_json(const Field& f, Elem x) {
    ordered_json arr = ordered_json::array();
    for (int c : f.coeffs(x)) arr.push_back(c);
    return arr;
}

} // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Analytic: return "analytic";
        case Method::Theory: return "theory";
    }
    return "unknown";
}

Method method_from_string(const std::string& name) {
    if (name == "brute") return Method::Brute;
    if (name == "analytic") return Method::Analytic;
    if (name == "theory") return Method::Theory;
    throw ParamError("unknown method '" + name + "' (expected brute, analytic or theory)");
}

bool CodeReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const WeightDistribution* CodeReport::distribution() const {
    for (const auto& o : outcomes)
        if (o.ran) return &o.distribution;
    return nullptr;
}

bool CodeReport::any_method_ran() const {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const MethodOutcome& o) { return o.ran; });
}

CodeReport run_report(const CodeSpec& spec, const std::vector<Method>& methods,
                      const ReportOptions& options) {
    if (methods.empty()) throw ParamError("at least one method must be requested");
    if (!spec.hypotheses_ok)
        throw ParamError("report refused: construction hypotheses do not hold");

    CodeReport report;
    report.spec = spec;
    report.length = code_length(spec);
    report.note = "griesmer_class compares d against the Griesmer bound only; "
                  "optimality against best-known-code tables is not computed";

    const Field field = Field::make(spec.p, spec.e);

    const bool want_brute = std::find(methods.begin(), methods.end(), Method::Brute) != methods.end();

    std::optional<DefiningSet> dset;
    if (want_brute) {
        dset.emplace(build_defining_set(field, spec));
        report.checks.push_back({"defining-set-size",
                                 mpz_class(static_cast<unsigned long>(dset->size())) == report.length,
                                 std::to_string(dset->size()) + " points"});
    }

    for (Method m : {Method::Brute, Method::Analytic, Method::Theory}) {
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) continue;
        MethodOutcome outcome;
        outcome.method = m;
        try {
            switch (m) {
                case Method::Brute:
                    outcome.distribution =
                        brute_distribution(field, spec, *dset, options.mode, options.budget, options.threads);
                    break;
                case Method::Analytic:
                    outcome.distribution = analytic_distribution(field, spec, options.threads);
                    break;
                case Method::Theory:
                    outcome.distribution = theory_distribution(spec);
                    break;
            }
            outcome.ran = true;
        } catch (const BudgetError& be) {
            outcome.refusal = be.what();
        }
        report.outcomes.push_back(std::move(outcome));
    }

    // pairwise agreement across every method that ran
    for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
        for (std::size_t j = i + 1; j < report.outcomes.size(); ++j) {
            const auto& a = report.outcomes[i];
            const auto& b = report.outcomes[j];
            if (!a.ran || !b.ran) continue;
            const bool same = a.distribution == b.distribution;
            report.checks.push_back({"agreement:" + to_string(a.method) + "~" + to_string(b.method), same,
                                     same ? "" : distribution_diff(a.distribution, b.distribution)});
        }
    }

    for (const auto& o : report.outcomes) {
        if (!o.ran) continue;
        const PlessReport pless = check_pless_moments(o.distribution, report.length, spec);
        std::string detail;
        if (!pless.pass()) {
            std::ostringstream os;
            os << "moment residuals: " << mpz_class(pless.count.actual - pless.count.expected).get_str()
               << ", " << mpz_class(pless.first.actual - pless.first.expected).get_str() << ", "
               << mpz_class(pless.second.actual - pless.second.expected).get_str();
            detail = os.str();
        }
        report.checks.push_back({"pless-moments:" + to_string(o.method), pless.pass(), detail});
    }

    if (const WeightDistribution* dist = report.distribution()) {
        report.dimension = dimension_from_distribution(*dist, spec);
        report.checks.push_back({"dimension", report.dimension == 2 * spec.e,
                                 "k = " + std::to_string(report.dimension)});
        report.min_distance = dist->min_positive_weight();
        report.griesmer_class =
            classify_optimality(report.length, report.dimension, report.min_distance, spec.p);
    }

    return report;
}

CodeReport run_relaxed_brute_report(const CodeSpec& spec, const ReportOptions& options) {
    CodeReport report;
    report.spec = spec;
    report.note = "construction hypotheses do not hold for these parameters; "
                  "closed-form methods are unavailable and no length formula applies";

    const Field field = Field::make(spec.p, spec.e);
    const DefiningSet dset = build_defining_set(field, spec);
    report.length = static_cast<unsigned long>(dset.size());

    MethodOutcome outcome;
    outcome.method = Method::Brute;
    outcome.distribution = brute_distribution(field, spec, dset, options.mode, options.budget, options.threads);
    outcome.ran = true;
    report.outcomes.push_back(std::move(outcome));

    const WeightDistribution& dist = report.outcomes.front().distribution;
    report.dimension = dimension_from_distribution(dist, spec);
    report.checks.push_back({"dimension", report.dimension == 2 * spec.e,
                             "k = " + std::to_string(report.dimension)});
    report.min_distance = dist.min_positive_weight();
    report.griesmer_class =
        classify_optimality(report.length, report.dimension, report.min_distance, spec.p);
    return report;
}

std::string report_to_json(const CodeReport& report) {
    ordered_json j;
    j["params"] = {{"p", report.spec.p}, {"e", report.spec.e}, {"l", report.spec.l},
                   {"i", report.spec.i}, {"m", report.spec.m}, {"s", report.spec.s}};
    j["length"] = mpz_to_json(report.length);
    j["dimension"] = report.dimension;
    j["min_distance"] = mpz_to_json(report.min_distance);
    ordered_json methods = ordered_json::array();
    ordered_json refusals = ordered_json::array();
    for (const auto& o : report.outcomes) {
        if (o.ran)
            methods.push_back(to_string(o.method));
        else
            refusals.push_back({{"method", to_string(o.method)}, {"reason", o.refusal}});
    }
    j["methods"] = methods;
    j["refusals"] = refusals;
    if (const WeightDistribution* dist = report.distribution())
        j["distribution"] = distribution_to_json(*dist);
    else
        j["distribution"] = ordered_json::array();
    j["griesmer_class"] = to_string(report.griesmer_class);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["note"] = report.note;
    return j.dump(2) + "\n";
}

std::string distribution_to_csv(const WeightDistribution& d) {
    std::ostringstream os;
    os << "weight,multiplicity\n";
    for (const auto& [w, c] : d.entries) {
        if (w == 0) continue;
        os << w.get_str() << "," << c.get_str() << "\n";
    }
    return os.str();
}

std::string defining_set_to_json(const Field& f, const CodeSpec& spec, const DefiningSet& d) {
    ordered_json j;
    j["params"] = {{"p", spec.p}, {"e", spec.e}, {"l", spec.l}, {"i", spec.i}};
    j["length"] = d.size();
    ordered_json pts = ordered_json::array();
    for (std::size_t k = 0; k < d.size(); ++k)
        pts.push_back({coeffs_to_json(f, d.x1[k]), coeffs_to_json(f, d.x2[k])});
    j["points"] = pts;
    return j.dump(2) + "\n";
}

std::string defining_set_to_csv(const Field& f, const DefiningSet& d) {
    std::ostringstream os;
    os << "x1,x2\n";
    auto put = [&](Elem x) {
        const auto c = f.coeffs(x);
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? ":" : "") << c[k];
    };
    for (std::size_t k = 0; k < d.size(); ++k) {
        put(d.x1[k]);
        os << ",";
        put(d.x2[k]);
        os << "\n";
    }
    return os.str();
}

} // namespace tracecodes
