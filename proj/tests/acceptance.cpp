// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact arithmetic; "pass" means equality, not closeness.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tracecodes/analytic.hpp"
#include "tracecodes/bounds.hpp"
#include "tracecodes/char_sums.hpp"
#include "tracecodes/code_spec.hpp"
#include "tracecodes/cyclotomic.hpp"
#include "tracecodes/defining_set.hpp"
#include "tracecodes/enumeration.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/report.hpp"

using namespace tracecodes;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %02d %s (%.2fs) %s%s%s\n", number, ok ? "PASS" : "FAIL", secs,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

WeightDistribution make_dist(std::vector<std::pair<long, unsigned long>> rows) {
    WeightDistribution d;
    for (auto [w, c] : rows) d.entries.emplace_back(w, c);
    return d;
}

const WeightDistribution kExample1 = make_dist({{0, 1}, {6, 12}, {8, 54}, {9, 8}, {12, 6}});
const WeightDistribution kExample2 = make_dist({{0, 1}, {486, 12}, {648, 6534}, {729, 8}, {972, 6}});
const WeightDistribution kExample3 =
    make_dist({{0, 1}, {486, 110}, {540, 6318}, {567, 100}, {648, 30}, {810, 2}});
const WeightDistribution kExample4 =
    make_dist({{0, 1}, {126, 24}, {140, 144}, {144, 2058}, {147, 144}, {168, 30}});
const WeightDistribution kExample5 =
    make_dist({{0, 1}, {550, 60}, {594, 600}, {600, 13310}, {605, 600}, {660, 70}});

struct BruteRun {
    WeightDistribution dist;
    mpz_class length;
    int dimension;
    mpz_class min_distance;
    double seconds;
};

BruteRun brute_run(int p, int e, int l, int i, int threads) {
    const CodeSpec spec = CodeSpec::make(p, e, l, i);
    const Field field = Field::make(p, e);
    const DefiningSet dset = build_defining_set(field, spec);
    const auto t0 = std::chrono::steady_clock::now();
    BruteRun r;
    r.dist = brute_distribution(field, spec, dset, EnumMode::Full, EnumerationBudget{}, threads);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.length = static_cast<unsigned long>(dset.size());
    r.dimension = dimension_from_distribution(r.dist, spec);
    r.min_distance = r.dist.min_positive_weight();
    return r;
}

bool expect(bool cond, std::string& detail, const std::string& what) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// --- criteria ---------------------------------------------------------

bool criterion1(std::string& detail) {
    bool ok = true;
    for (int i : {0, 1}) {
        for (int l : {1, 3, 5, 7, 9, 11}) {
            const BruteRun r = brute_run(3, 2, l, i, 0);
            ok &= expect(r.dist == kExample1, detail, "enumerator mismatch at l=" + std::to_string(l));
            ok &= expect(r.length == 12 && r.dimension == 4 && r.min_distance == 6, detail,
                         "parameters not [12,4,6] at l=" + std::to_string(l));
            ok &= expect(r.seconds < 1.0, detail, "over the 1 s budget");
            ok &= expect(classify_optimality(r.length, r.dimension, r.min_distance, 3) ==
                             GriesmerClass::AlmostOptimal,
                         detail, "not almost-optimal");
        }
    }
    return ok;
}

bool criterion2(std::string& detail) {
    bool ok = true;
    for (int i : {0, 1}) {
        const BruteRun r = brute_run(7, 2, 1, i, 0);
        ok &= expect(r.dist == kExample4, detail, "enumerator mismatch");
        ok &= expect(r.length == 168 && r.dimension == 4 && r.min_distance == 126, detail,
                     "parameters not [168,4,126]");
        ok &= expect(r.seconds < 5.0, detail, "over the 5 s budget");
    }
    return ok;
}

bool criterion3(std::string& detail) {
    bool ok = true;
    for (int i : {0, 1}) {
        const BruteRun r = brute_run(11, 2, 1, i, 1); // single-threaded by construction
        ok &= expect(r.dist == kExample5, detail, "enumerator mismatch");
        ok &= expect(r.length == 660 && r.dimension == 4 && r.min_distance == 550, detail,
                     "parameters not [660,4,550]");
        ok &= expect(r.seconds < 60.0, detail, "over the 60 s budget");
    }
    return ok;
}

bool example_with_analytic_methods(int l, const WeightDistribution& golden, long n, long d,
                                   std::string& detail) {
    bool ok = true;
    for (int i : {0, 1}) {
        const CodeSpec spec = CodeSpec::make(3, 4, l, i);
        const Field field = Field::make(3, 4);

        const auto t0 = std::chrono::steady_clock::now();
        const WeightDistribution analytic = analytic_distribution(field, spec, 4);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok &= expect(secs < 600.0, detail, "analytic full pass over the 10 min budget");

        const WeightDistribution theory = theory_distribution(spec);
        ok &= expect(analytic == theory, detail, "analytic and theory disagree");
        ok &= expect(analytic == golden, detail, "enumerator mismatch");
        ok &= expect(code_length(spec) == n, detail, "length mismatch");
        ok &= expect(dimension_from_distribution(analytic, spec) == 8, detail, "dimension mismatch");
        ok &= expect(analytic.min_positive_weight() == d, detail, "min distance mismatch");

        // per-codeword brute spot check on >= 10^4 random codewords
        const DefiningSet dset = build_defining_set(field, spec);
        std::mt19937 rng(1234 + static_cast<unsigned>(l) * 2 + static_cast<unsigned>(i));
        std::uniform_int_distribution<std::uint64_t> pick(0, field.q() - 1);
        for (int round = 0; round < 10000 && ok; ++round) {
            const Elem a = pick(rng), b = pick(rng);
            ok &= expect(analytic_weight(field, spec, a, b) == codeword_weight(field, dset, a, b),
                         detail, "analytic weight disagrees with brute weight");
        }
    }
    return ok;
}

bool criterion4(std::string& detail) {
    return example_with_analytic_methods(1, kExample2, 972, 486, detail);
}

bool criterion5(std::string& detail) {
    return example_with_analytic_methods(2, kExample3, 810, 486, detail);
}

bool criterion6(std::string& detail) {
    bool ok = true;
    for (auto [p, e, l] : std::vector<std::array<int, 3>>{
             {3, 2, 1}, {3, 4, 1}, {3, 4, 2}, {7, 2, 1}, {11, 2, 1}}) {
        const CodeSpec spec = CodeSpec::make(p, e, l, 0);
        const Field f = Field::make(p, e);
        std::uint64_t mismatches = 0;
        for (Elem alpha = 1; alpha < f.q(); ++alpha)
            for (Elem beta = 0; beta < f.q(); ++beta)
                if (!(weil_sum_closed(f, spec, alpha, beta, l) == weil_sum_direct(f, alpha, beta, l)))
                    ++mismatches;
        ok &= expect(mismatches == 0, detail,
                     std::to_string(mismatches) + " discrepancies at (p,e,l)=(" + std::to_string(p) +
                         "," + std::to_string(e) + "," + std::to_string(l) + ")");
    }
    return ok;
}

bool criterion7(std::string& detail) {
    bool ok = true;
    for (int p : {3, 7, 11, 19}) {
        for (int i : {0, 1})
            for (int y = 1; y < p; ++y)
                ok &= expect(cyclotomic_eta_sum(y, i, p) == (eta_p(y, p) == 1 ? 0 : -1), detail,
                             "class sum mismatch at p=" + std::to_string(p));
        const CycInt g = gauss_sum(p);
        ok &= expect(g * g == CycInt::integer(p, -p), detail,
                     "Gauss identity fails at p=" + std::to_string(p));
    }
    return ok;
}

bool criterion8(std::string& detail) {
    const Field f = Field::make(3, 4);
    bool ok = true;
    for (int i : {0, 1})
        ok &= expect(solvable_set_count(f, CodeSpec::make(3, 4, 1, i), 1) == 9, detail,
                     "solvable count is not 9");
    return ok;
}

bool criterion9(std::string& detail) {
    bool ok = true;

    // character orthogonality over F_49
    {
        const Field f = Field::make(7, 2);
        for (Elem u = 0; u < f.q() && ok; ++u) {
            std::vector<int> vals;
            for (Elem v = 0; v < f.q(); ++v) vals.push_back(f.trace(f.mul(u, v)));
            const CycInt sum = additive_char_sum(7, vals);
            ok &= expect(u == 0 ? sum == CycInt::integer(7, 49) : sum.is_zero(), detail,
                         "orthogonality fails");
        }
    }

    // trace linearity and balanced surjectivity over F_81
    {
        const Field f = Field::make(3, 4);
        std::map<int, std::uint64_t> hits;
        for (Elem x = 0; x < f.q(); ++x) ++hits[f.trace(x)];
        for (int v = 0; v < 3; ++v) ok &= expect(hits[v] == f.q() / 3, detail, "trace not balanced");
        std::mt19937 rng(99);
        std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
        for (int round = 0; round < 2000 && ok; ++round) {
            const Elem x = pick(rng), y = pick(rng);
            const int c = static_cast<int>(pick(rng) % 3);
            ok &= expect(f.trace(f.add(x, f.mul(f.embed(c), y))) == (f.trace(x) + c * f.trace(y)) % 3,
                         detail, "trace linearity fails");
        }
    }

    // multiplicativity of both quadratic characters
    {
        const Field f = Field::make(11, 2);
        for (int a = 1; a < 11; ++a)
            for (int b = 1; b < 11; ++b)
                ok &= expect(eta_p(a * b % 11, 11) == eta_p(a, 11) * eta_p(b, 11), detail,
                             "eta_p multiplicativity fails");
        std::mt19937 rng(100);
        std::uniform_int_distribution<std::uint64_t> pick(1, f.q() - 1);
        for (int round = 0; round < 2000 && ok; ++round) {
            const Elem a = pick(rng), b = pick(rng);
            ok &= expect(f.eta(f.mul(a, b)) == f.eta(a) * f.eta(b), detail,
                         "eta_q multiplicativity fails");
        }
    }

    // scaling invariance of codeword weights
    {
        const CodeSpec spec = CodeSpec::make(7, 2, 1, 0);
        const Field f = Field::make(7, 2);
        const DefiningSet d = build_defining_set(f, spec);
        std::mt19937 rng(101);
        std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
        for (int round = 0; round < 500 && ok; ++round) {
            const Elem a = pick(rng), b = pick(rng);
            const int t = 1 + static_cast<int>(pick(rng) % 6);
            ok &= expect(codeword_weight(f, d, f.mul(f.embed(t), a), f.mul(f.embed(t), b)) ==
                             codeword_weight(f, d, a, b),
                         detail, "scaling invariance fails");
        }
    }

    // Pless moments on every produced distribution, and i-independence
    {
        for (auto [p, e, l] : std::vector<std::array<int, 3>>{
                 {3, 2, 1}, {7, 2, 1}, {11, 2, 1}, {3, 4, 1}, {3, 4, 2}}) {
            const Field f = Field::make(p, e);
            WeightDistribution per_i[2];
            for (int i : {0, 1}) {
                const CodeSpec spec = CodeSpec::make(p, e, l, i);
                const DefiningSet d = build_defining_set(f, spec);
                const WeightDistribution brute =
                    brute_distribution(f, spec, d, EnumMode::Full, EnumerationBudget{}, 0);
                const WeightDistribution theory = theory_distribution(spec);
                ok &= expect(check_pless_moments(brute, code_length(spec), spec).pass(), detail,
                             "Pless moments fail on a brute distribution");
                ok &= expect(check_pless_moments(theory, code_length(spec), spec).pass(), detail,
                             "Pless moments fail on a theory distribution");
                ok &= expect(brute == theory, detail, "brute and theory disagree");
                per_i[i] = brute;
            }
            ok &= expect(per_i[0] == per_i[1], detail, "distributions depend on i");
        }
    }

    return ok;
}

std::string run_cli_capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

bool criterion10(std::string& detail) {
    bool ok = true;

    // in-process: full verify pipeline at different worker counts
    const CodeSpec spec = CodeSpec::make(3, 2, 1, 0);
    std::string first;
    for (int threads : {1, 2, 4}) {
        ReportOptions options;
        options.threads = threads;
        const std::string dump = report_to_json(
            run_report(spec, {Method::Brute, Method::Analytic, Method::Theory}, options));
        if (first.empty())
            first = dump;
        else
            ok &= expect(dump == first, detail, "JSON differs across worker counts");
    }

    // through the CLI when its location is provided
    if (const char* cli = std::getenv("TRACE_CODES_CLI")) {
        const std::string base = std::string(cli) + " verify --p 3 --e 2 --l 1 --i 0 --threads ";
        const std::string run1 = run_cli_capture(base + "1");
        const std::string run2 = run_cli_capture(base + "4");
        ok &= expect(!run1.empty() && run1 == run2, detail, "CLI verify output differs across worker counts");
    }
    return ok;
}

} // namespace

int main() {
    run_criterion(1, "[12,4,6] code, brute force, all l-aliases, almost-optimal", criterion1);
    run_criterion(2, "[168,4,126] code, brute force", criterion2);
    run_criterion(3, "[660,4,550] code, brute force, single-threaded", criterion3);
    run_criterion(4, "[972,8,486] code, analytic + theory + brute spot checks", criterion4);
    run_criterion(5, "[810,8,486] code, analytic + theory + brute spot checks", criterion5);
    run_criterion(6, "closed-form Weil sums equal direct summation exhaustively", criterion6);
    run_criterion(7, "cyclotomic class sums and Gauss identity, p in {3,7,11,19}", criterion7);
    run_criterion(8, "solvable right-hand-side count equals 9 for (3,4,1)", criterion8);
    run_criterion(9, "property suite: orthogonality, trace, eta, scaling, Pless, i-independence",
                  criterion9);
    run_criterion(10, "byte-identical verify output across worker counts", criterion10);

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
