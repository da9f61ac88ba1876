#pragma once
// Registry of machine-verifiable identities: every closed form, decimal, and
// symbolic law exercised by the library, each carrying a source quote anchor,
// two independently computed sides, a pinned tolerance, and a verdict.
#include "zetalab/apery.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetalab::suite {

enum class Verdict { Pass, Fail, Inconclusive, Error };
const char *verdict_str(Verdict v);

// What one evaluation produced. Numeric identities fill lhs/rhs (+ their
// evaluator self-estimates); exact-symbolic identities fill exact_ok.
struct Outcome {
    XComplex lhs, rhs;
    XReal lhs_err = 0, rhs_err = 0;
    bool exact_ok = false;
    std::string detail; // route values, sweep sizes, counterexamples
};

struct Identity {
    std::string id;
    std::string paper_ref;  // source quote anchor; registration refuses ""
    std::string lhs_desc;   // evaluator plan, left side
    std::string rhs_desc;   // evaluator plan, right side
    XReal tolerance;        // ignored when exact
    bool exact = false;     // exact-symbolic (rational arithmetic, no tolerance)
    std::function<Outcome()> eval;
    std::string note;       // known-misprint annotations etc.
};

// All registered identities, sorted by id. Built once; thread-safe.
const std::vector<Identity> &registry();

struct RunResult {
    std::string id, paper_ref, note, detail;
    Verdict verdict = Verdict::Error;
    XComplex lhs, rhs;
    XReal abs_err = 0, rel_err = 0, tolerance = 0;
    double seconds = 0;
};

// Shell-style glob on ids ('*' and '?').
bool glob_match(const std::string &pattern, const std::string &id);

// Evaluate every identity matching the filter; failures are recorded per
// identity and never abort the run. Results sorted by id.
std::vector<RunResult> run(const std::string &filter = "*", int workers = 1);

// JSON report: array of {id, paper_ref, lhs_value, rhs_value, abs_err,
// rel_err, tolerance, verdict, seconds}.
std::string to_json(const std::vector<RunResult> &results);

// Human-readable text report; returns the number of Fail verdicts.
int print_report(const std::vector<RunResult> &results, int digits);

// Definitions of both sides, the quote anchor, and the evaluation plan.
// Throws std::out_of_range for an unknown id.
std::string explain(const std::string &id);

} // namespace zetalab::suite
