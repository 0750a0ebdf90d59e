#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "betti.hpp"
#include "chordal.hpp"
#include "graph_io.hpp"
#include "threshold.hpp"
#include "transform.hpp"

namespace cqv {

namespace {

constexpr std::size_t kMaxRecordedCounterexamples = 100;

struct Tally {
    std::uint64_t graphs = 0;
    std::uint64_t checks = 0;
    std::map<std::string, std::uint64_t> breakdown;
    std::vector<Counterexample> ces;
};

void merge_into(Tally& into, Tally&& part) {
    into.graphs += part.graphs;
    into.checks += part.checks;
    for (auto& [key, v] : part.breakdown) into.breakdown[key] += v;
    for (auto& ce : part.ces) into.ces.push_back(std::move(ce));
}

// Runs fn over every labeled graph on n vertices, split into `jobs`
// contiguous edge-mask ranges on separate threads. Partial tallies are
// merged in range order, so the outcome does not depend on jobs. fn must
// not touch shared mutable state; anything it throws is recorded as a
// counterexample for the offending graph.
template <typename Fn>
Tally sweep_graphs(int n, int jobs, Fn&& fn) {
    const std::uint64_t total = labeled_graph_count(n);
    const std::uint64_t parts =
        std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, total);
    std::vector<Tally> tallies(parts);
    auto run_range = [&fn](int nn, std::uint64_t lo, std::uint64_t hi, Tally& t) {
        for_each_graph_in_range(nn, lo, hi, [&](const Graph& g, std::uint64_t mask) {
            t.graphs++;
            try {
                fn(g, t);
            } catch (const std::exception& e) {
                t.ces.push_back({format_graph6(g),
                                 std::string("unexpected exception: ") + e.what()});
            }
            (void)mask;
        });
    };
    if (parts == 1) {
        run_range(n, 0, total, tallies[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(parts);
        for (std::uint64_t p = 0; p < parts; ++p) {
            const std::uint64_t lo = total / parts * p + std::min(p, total % parts);
            const std::uint64_t hi = lo + total / parts + (p < total % parts ? 1 : 0);
            threads.emplace_back(
                [&run_range, &tallies, n, lo, hi, p] { run_range(n, lo, hi, tallies[p]); });
        }
        for (auto& th : threads) th.join();
    }
    Tally out;
    for (auto& t : tallies) merge_into(out, std::move(t));
    return out;
}

VerificationReport finalize(std::string theorem, int n_max, Tally&& tally,
                            std::vector<std::string> notes,
                            std::chrono::steady_clock::time_point started) {
    VerificationReport r;
    r.theorem = std::move(theorem);
    r.n_max = n_max;
    r.graphs_scanned = tally.graphs;
    r.checks = tally.checks;
    r.check_breakdown = std::move(tally.breakdown);
    r.counterexample_count = tally.ces.size();
    if (tally.ces.size() > kMaxRecordedCounterexamples)
        tally.ces.resize(kMaxRecordedCounterexamples);
    r.counterexamples = std::move(tally.ces);
    r.pass = r.counterexample_count == 0;
    r.notes = std::move(notes);
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return r;
}

void check_range(int n_max, int hi, const char* what) {
    if (n_max < 1 || n_max > hi) {
        std::ostringstream os;
        os << what << " supports 1 <= n_max <= " << hi;
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["n_max"] = n_max;
    j["graphs_scanned"] = graphs_scanned;
    j["checks"] = checks;
    j["check_breakdown"] = check_breakdown;
    j["counterexample_count"] = counterexample_count;
    auto ces = nlohmann::ordered_json::array();
    for (const auto& ce : counterexamples)
        ces.push_back({{"graph6", ce.graph6}, {"diagnostic", ce.diagnostic}});
    j["counterexamples"] = std::move(ces);
    j["elapsed_seconds"] = elapsed_seconds;
    j["pass"] = pass;
    j["notes"] = notes;
    return j.dump(2);
}

VerificationReport verify_main_theorem(int n_max, int jobs) {
    check_range(n_max, 8, "verify_main_theorem");
    const auto started = std::chrono::steady_clock::now();
    Tally tally;

    // Direction 1: every chordal graph's clique vector passes the validator
    // for every k up to its connectivity.
    for (int n = 1; n <= n_max; ++n) {
        Tally part = sweep_graphs(n, jobs, [](const Graph& g, Tally& t) {
            const auto peo = is_chordal(g);
            if (!peo) return;
            t.breakdown["chordal_graphs"]++;
            const IntVector c = to_int_vector(clique_vector_chordal(g, *peo));
            const int kappa = connectivity(g);
            for (int k = 0; k <= kappa; ++k) {
                t.checks++;
                t.breakdown["validate_checks"]++;
                const Validation v = validate_clique_vector(c, k);
                if (!v.ok) {
                    std::ostringstream os;
                    os << "validate(c=" << format_int_vector(c) << ", k=" << k
                       << ") rejected a chordal graph with connectivity " << kappa << ": "
                       << v.reason;
                    t.ces.push_back({format_graph6(g), os.str()});
                }
            }
        });
        merge_into(tally, std::move(part));
    }

    // Direction 2: every admissible b-vector realizes to a k-connected
    // chordal graph with the right clique vector (realize re-verifies).
    for (int n = 1; n <= n_max; ++n)
        for (int d = 1; d <= n; ++d)
            for (int k = 0; k <= d; ++k) {
                BVectorEnumerator en(n, d, k);
                while (auto b = en.next()) {
                    tally.checks++;
                    tally.breakdown["bvectors_checked"]++;
                    try {
                        (void)realize(b_to_c(*b), k);
                    } catch (const std::exception& e) {
                        std::ostringstream os;
                        os << "realize(b_to_c(" << format_int_vector(*b) << "), k=" << k
                           << ") failed: " << e.what();
                        tally.ces.push_back({"", os.str()});
                    }
                }
            }

    return finalize("main", n_max, std::move(tally),
                    {"connectivity convention: kappa(K_n) = n",
                     "direction 2 failures carry no graph6 string; the b-vector and k in "
                     "the diagnostic replay them"},
                    started);
}

VerificationReport verify_froberg(int n_max, int jobs) {
    check_range(n_max, 6, "verify_froberg");
    const auto started = std::chrono::steady_clock::now();
    const HomologyCache cache(n_max);
    Tally tally;
    for (int n = 1; n <= n_max; ++n) {
        Tally part = sweep_graphs(n, jobs, [&cache](const Graph& g, Tally& t) {
            const bool chordal = is_chordal(g).has_value();
            const bool linear = betti_table_full(g, &cache).has_two_linear_resolution();
            t.checks++;
            if (chordal) t.breakdown["chordal_graphs"]++;
            if (linear) t.breakdown["two_linear_graphs"]++;
            if (chordal != linear) {
                std::ostringstream os;
                os << "chordal = " << (chordal ? "true" : "false")
                   << " but 2-linear resolution = " << (linear ? "true" : "false");
                t.ces.push_back({format_graph6(g), os.str()});
            }
        });
        merge_into(tally, std::move(part));
    }
    return finalize("froberg", n_max, std::move(tally), {}, started);
}

VerificationReport verify_betti_connectivity(int n_max, int jobs) {
    check_range(n_max, 6, "verify_betti_connectivity");
    const auto started = std::chrono::steady_clock::now();
    const HomologyCache cache(n_max);
    Tally tally;
    for (int n = 1; n <= n_max; ++n) {
        Tally part = sweep_graphs(n, jobs, [&cache](const Graph& g, Tally& t) {
            const int from_betti = connectivity_from_betti(g);
            const int brute = connectivity_bruteforce(g);
            t.checks++;
            t.breakdown["connectivity_checks"]++;
            if (from_betti != brute) {
                std::ostringstream os;
                os << "connectivity_from_betti = " << from_betti
                   << " but brute force gives " << brute;
                t.ces.push_back({format_graph6(g), os.str()});
            }
            // Depth bound (and equality on chordal graphs): complete graphs
            // are measured against the classical kappa = n - 1, everything
            // else against the convention above.
            const BettiTable table = betti_table_full(g, &cache);
            const int depth = table.depth();
            const int kappa = g.is_complete()
                                  ? connectivity_bruteforce(g, Convention::classical)
                                  : brute;
            t.checks++;
            t.breakdown["depth_bound_checks"]++;
            if (depth > kappa + 1) {
                std::ostringstream os;
                os << "depth " << depth << " exceeds kappa + 1 = " << kappa + 1;
                t.ces.push_back({format_graph6(g), os.str()});
            }
            if (is_chordal(g)) {
                t.checks++;
                t.breakdown["chdps_checks"]++;
                if (depth != kappa + 1) {
                    std::ostringstream os;
                    os << "chordal graph has depth " << depth << " != kappa + 1 = "
                       << kappa + 1;
                    t.ces.push_back({format_graph6(g), os.str()});
                }
            }
        });
        merge_into(tally, std::move(part));
    }
    return finalize("betti-connectivity", n_max, std::move(tally),
                    {"complete graphs use the classical kappa = n - 1 for depth checks; "
                     "all other checks use kappa(K_n) = n"},
                    started);
}

VerificationReport verify_counting(int n_max) {
    check_range(n_max, 9, "verify_counting");
    const auto started = std::chrono::steady_clock::now();
    Tally tally;
    for (int n = 1; n <= n_max; ++n)
        for (int d = 1; d <= n; ++d)
            for (int k = 0; k <= d; ++k) {
                mpz_class streamed = 0;
                BVectorEnumerator en(n, d, k);
                while (en.next()) ++streamed;
                const mpz_class formula = bvector_count(n, d, k);
                // Words of length n, d S letters, final S, no D among the
                // first k letters: bit b of mask = 1 means letter b (from the
                // left) is S.
                mpz_class words = 0;
                const std::uint64_t lim = std::uint64_t{1} << (n - 1);
                for (std::uint64_t mask = 0; mask < lim; ++mask) {
                    const std::uint64_t word = (mask << 1) | 1;  // canonical final S
                    std::string w(static_cast<std::size_t>(n), 'D');
                    for (int p = 0; p < n; ++p)
                        if ((word >> p) & 1) w[static_cast<std::size_t>(n - 1 - p)] = 'S';
                    if (std::count(w.begin(), w.end(), 'S') != d) continue;
                    if (!word_is_k_connected(w, k)) continue;
                    ++words;
                }
                tally.checks++;
                tally.breakdown["triples_checked"]++;
                if (streamed != formula || words != formula) {
                    std::ostringstream os;
                    os << "B(" << n << "," << d << "," << k << "): stream " << streamed.get_str()
                       << ", formula " << formula.get_str() << ", words " << words.get_str();
                    tally.ces.push_back({"", os.str()});
                }
            }
    return finalize("counting", n_max, std::move(tally),
                    {"no graphs scanned; compares stream, binomial formula, and word "
                     "enumeration"},
                    started);
}

VerificationReport run_verification(const std::string& theorem, int n_max, int jobs) {
    if (theorem == "main") return verify_main_theorem(n_max, jobs);
    if (theorem == "froberg") return verify_froberg(n_max, jobs);
    if (theorem == "betti-connectivity") return verify_betti_connectivity(n_max, jobs);
    if (theorem == "counting") return verify_counting(n_max);
    throw std::invalid_argument("unknown theorem '" + theorem +
                                "' (expected main, froberg, betti-connectivity, counting)");
}

}  // namespace cqv
