#pragma once

// End-to-end checks tying the whole library together. Each check recomputes
// one headline fact from scratch (free-algebra spectra, census invariants,
// certificate constructions, counting formulas, ...) and reports the measured
// values next to a pass/fail verdict and its runtime. The seed feeds only the
// randomized sampling steps; everything else is exhaustive.

#include <cstdint>
#include <string>
#include <vector>

namespace vlab {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;    // measured values, human readable
    double seconds = 0.0;  // wall-clock runtime of this check
    double budget = 0.0;   // the check fails if seconds exceeds this
};

std::vector<SuiteCheck> run_theorem_suite(std::uint64_t seed);

// "PASS <name>  <detail>  [1.23 s]" per check.
std::string format_suite_line(const SuiteCheck &c);

} // namespace vlab
