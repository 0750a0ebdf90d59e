#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cqv {

struct Counterexample {
    std::string graph6;      // empty for parameter-space (non-graph) failures
    std::string diagnostic;
};

struct VerificationReport {
    std::string theorem;
    int n_max = 0;
    std::uint64_t graphs_scanned = 0;
    std::uint64_t checks = 0;
    std::map<std::string, std::uint64_t> check_breakdown;
    std::vector<Counterexample> counterexamples;  // first 100 kept
    std::uint64_t counterexample_count = 0;
    double elapsed_seconds = 0.0;
    bool pass = false;  // true iff counterexample_count == 0
    std::vector<std::string> notes;

    std::string to_json() const;
};

// Exhaustive sweeps over all labeled graphs (and all b-vector parameter
// triples) up to n_max. jobs > 1 splits each per-n edge-mask range across
// that many threads; results are merged in range order, so every field of
// the report except elapsed_seconds is independent of jobs.
VerificationReport verify_main_theorem(int n_max, int jobs = 1);         // 1..8
VerificationReport verify_froberg(int n_max, int jobs = 1);              // 1..6
VerificationReport verify_betti_connectivity(int n_max, int jobs = 1);   // 1..6
VerificationReport verify_counting(int n_max);                           // 1..9

// theorem: "main" | "froberg" | "betti-connectivity" | "counting"
VerificationReport run_verification(const std::string& theorem, int n_max, int jobs = 1);

}  // namespace cqv
