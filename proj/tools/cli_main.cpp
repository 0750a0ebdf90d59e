// cliquevec: command-line front end over the C API (cliquevec.h only).
//
// Exit codes: 0 success, 1 validation rejection / failed verification,
// 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cliquevec.h"

namespace {

using nlohmann::ordered_json;

struct OwnedStr {
    char* p = nullptr;
    ~OwnedStr() { cqv_string_free(p); }
    explicit operator bool() const { return p != nullptr; }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct OwnedGraph {
    cqv_graph* g = nullptr;
    ~OwnedGraph() { cqv_graph_free(g); }
};

struct OwnedTable {
    cqv_betti_table* t = nullptr;
    ~OwnedTable() { cqv_betti_table_free(t); }
};

struct OwnedEnum {
    cqv_bvector_enum* e = nullptr;
    ~OwnedEnum() { cqv_bvector_enum_free(e); }
};

// Failure reported by the library: rejections exit 1, everything else 2.
struct CliFailure {
    int code;
    std::string message;
};

void check(cqv_status st) {
    if (st == CQV_OK) return;
    throw CliFailure{st == CQV_EREJECTED ? 1 : 2, cqv_last_error()};
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw CliFailure{2, "cannot read '" + path + "'"};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Shared graph-input options: a positional path ("-" = stdin) or --g6.
struct GraphInput {
    std::string path;
    std::string g6;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", path, "graph file (edge list or graph6), or - for stdin");
        cmd->add_option("--g6", g6, "inline graph6 string");
    }

    void load(OwnedGraph& out) const {
        if (!g6.empty() && !path.empty())
            throw CliFailure{2, "give either a graph argument or --g6, not both"};
        if (g6.empty() && path.empty())
            throw CliFailure{2, "no graph given (positional path, -, or --g6)"};
        if (!g6.empty())
            check(cqv_graph_parse(g6.c_str(), "graph6", &out.g));
        else
            check(cqv_graph_parse(read_source(path).c_str(), "auto", &out.g));
    }
};

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty() || !csv.empty()) out.push_back(cur);
    return out;
}

// Vectors stay exact in JSON output: arrays of decimal strings.
ordered_json vec_json(const std::string& csv) {
    ordered_json arr = ordered_json::array();
    for (auto& tok : split_csv(csv)) arr.push_back(tok);
    return arr;
}

void emit(const ordered_json& j) { std::cout << j.dump() << '\n'; }

int run_chordal(const GraphInput& in, bool json) {
    OwnedGraph g;
    in.load(g);
    OwnedStr peo;
    check(cqv_graph_chordal_peo(g.g, &peo.p));
    if (json) {
        ordered_json j;
        j["chordal"] = static_cast<bool>(peo);
        j["peo"] = peo ? ordered_json(vec_json(peo.str())) : ordered_json(nullptr);
        emit(j);
    } else if (peo) {
        std::cout << "peo: " << peo.p << '\n';
    } else {
        std::cout << "not chordal\n";
    }
    return 0;
}

int run_cliques(const GraphInput& in, bool brute, bool json) {
    OwnedGraph g;
    in.load(g);
    OwnedStr c;
    check(cqv_graph_clique_vector(g.g, brute ? 1 : 0, &c.p));
    if (json)
        emit(ordered_json{{"clique_vector", vec_json(c.str())}});
    else
        std::cout << c.p << '\n';
    return 0;
}

int run_connectivity(const GraphInput& in, bool classical, bool json) {
    OwnedGraph g;
    in.load(g);
    int kappa = 0;
    check(cqv_graph_connectivity(g.g, classical ? 1 : 0, &kappa));
    if (json)
        emit(ordered_json{{"connectivity", kappa},
                          {"convention", classical ? "classical" : "deletion"}});
    else
        std::cout << kappa << '\n';
    return 0;
}

int run_transform(const std::string& vec, bool to_b, bool json) {
    OwnedStr out;
    check(to_b ? cqv_clique_to_b(vec.c_str(), &out.p) : cqv_b_to_clique(vec.c_str(), &out.p));
    if (json)
        emit(ordered_json{{to_b ? "b" : "c", vec_json(out.str())}});
    else
        std::cout << out.p << '\n';
    return 0;
}

int run_validate(const std::string& vec, int k, bool json) {
    int valid = 0;
    OwnedStr reason;
    check(cqv_validate(vec.c_str(), k, &valid, &reason.p));
    OwnedStr b;
    check(cqv_clique_to_b(vec.c_str(), &b.p));
    if (json) {
        ordered_json j;
        j["valid"] = valid != 0;
        j["b"] = vec_json(b.str());
        j["reason"] = valid ? ordered_json(nullptr) : ordered_json(reason.str());
        emit(j);
    } else if (valid) {
        std::cout << "valid (b = " << b.p << ")\n";
    } else {
        std::cout << "invalid: " << reason.p << '\n';
    }
    return valid ? 0 : 1;
}

int run_realize(const std::string& vec, int k, const std::string& format, bool json) {
    OwnedGraph g;
    OwnedStr word;
    check(cqv_realize(vec.c_str(), k, &g.g, &word.p));
    OwnedStr text;
    check(cqv_graph_format(g.g, format.c_str(), &text.p));
    if (json) {
        emit(ordered_json{{"word", word.str()}, {"format", format}, {"graph", text.str()}});
    } else {
        std::cout << text.p;
        if (format == "graph6") std::cout << '\n';
        std::cerr << "word: " << word.p << '\n';
    }
    return 0;
}

int run_word_to_graph(const std::string& word, const std::string& format, bool json) {
    OwnedGraph g;
    check(cqv_word_to_graph(word.c_str(), &g.g));
    OwnedStr text;
    check(cqv_graph_format(g.g, format.c_str(), &text.p));
    if (json) {
        emit(ordered_json{{"format", format}, {"graph", text.str()}});
    } else {
        std::cout << text.p;
        if (format == "graph6") std::cout << '\n';
    }
    return 0;
}

int run_word_from_graph(const GraphInput& in, bool json) {
    OwnedGraph g;
    in.load(g);
    OwnedStr word;
    int is_threshold = 0;
    check(cqv_graph_to_word(g.g, &word.p, &is_threshold));
    if (json) {
        ordered_json j;
        j["threshold"] = is_threshold != 0;
        j["word"] = is_threshold ? ordered_json(word.str()) : ordered_json(nullptr);
        emit(j);
    } else if (is_threshold) {
        std::cout << word.p << '\n';
    } else {
        std::cout << "not threshold\n";
    }
    return 0;
}

int run_word_to_bvector(const std::string& word, bool json) {
    OwnedStr b;
    check(cqv_word_to_bvector(word.c_str(), &b.p));
    if (json)
        emit(ordered_json{{"b", vec_json(b.str())}});
    else
        std::cout << b.p << '\n';
    return 0;
}

int run_word_from_bvector(const std::string& vec, bool json) {
    OwnedStr word;
    check(cqv_bvector_to_word(vec.c_str(), &word.p));
    if (json)
        emit(ordered_json{{"word", word.str()}});
    else
        std::cout << word.p << '\n';
    return 0;
}

int run_word_kconnected(const std::string& word, int k, bool json) {
    int yes = 0;
    check(cqv_word_is_k_connected(word.c_str(), k, &yes));
    if (json)
        emit(ordered_json{{"k_connected", yes != 0}});
    else
        std::cout << (yes ? "true" : "false") << '\n';
    return 0;
}

int run_enumerate(std::int64_t n, int d, int k, bool count_only, bool json) {
    OwnedStr count;
    check(cqv_bvector_count(n, d, k, &count.p));
    if (count_only) {
        if (json)
            emit(ordered_json{{"count", count.str()}});
        else
            std::cout << count.p << '\n';
        return 0;
    }
    OwnedEnum en;
    check(cqv_bvector_enum_new(n, d, k, &en.e));
    if (json) {
        ordered_json vecs = ordered_json::array();
        for (;;) {
            OwnedStr b;
            check(cqv_bvector_enum_next(en.e, &b.p));
            if (!b) break;
            vecs.push_back(vec_json(b.str()));
        }
        emit(ordered_json{{"vectors", vecs}, {"count", count.str()}});
    } else {
        for (;;) {
            OwnedStr b;
            check(cqv_bvector_enum_next(en.e, &b.p));
            if (!b) break;
            std::cout << b.p << '\n';
        }
        std::cerr << "count: " << count.p << '\n';
    }
    return 0;
}

int run_betti(const GraphInput& in, bool full, bool json) {
    OwnedGraph g;
    in.load(g);
    if (!full) {
        OwnedStr strand;
        check(cqv_graph_betti_strand(g.g, &strand.p));
        if (json)
            emit(ordered_json{{"strand", vec_json(strand.str())}});
        else
            std::cout << strand.p << '\n';
        return 0;
    }
    OwnedTable t;
    check(cqv_graph_betti_table(g.g, &t.t));
    OwnedStr tjson;
    check(cqv_betti_table_json(t.t, &tjson.p));
    const int pd = cqv_betti_table_projective_dimension(t.t);
    const int depth = cqv_betti_table_depth(t.t);
    const bool linear = cqv_betti_table_two_linear(t.t) != 0;
    if (json) {
        ordered_json j = ordered_json::parse(tjson.str());
        j["projective_dimension"] = pd;
        j["depth"] = depth;
        j["two_linear"] = linear;
        emit(j);
    } else {
        const int size = cqv_betti_table_size(t.t);
        for (int idx = 0; idx < size; ++idx) {
            int i = 0, j = 0;
            uint64_t v = 0;
            check(cqv_betti_table_entry(t.t, idx, &i, &j, &v));
            std::cout << "beta[" << i << ',' << j << "] = " << v << '\n';
        }
        std::cout << "pd = " << pd << ", depth = " << depth << ", 2-linear = "
                  << (linear ? "yes" : "no") << '\n';
    }
    return 0;
}

int run_verify(const std::string& theorem, int nmax, int jobs, const std::string& out_path,
               bool json) {
    OwnedStr report;
    int pass = 0;
    check(cqv_verify(theorem.c_str(), nmax, jobs, &report.p, &pass));
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw CliFailure{2, "cannot write '" + out_path + "'"};
        out << report.p << '\n';
    }
    if (json) {
        std::cout << report.p << '\n';
    } else {
        const ordered_json j = ordered_json::parse(report.str());
        std::cout << "theorem " << theorem << ": " << (pass ? "PASS" : "FAIL") << " (graphs "
                  << j["graphs_scanned"] << ", checks " << j["checks"] << ", counterexamples "
                  << j["counterexample_count"] << ", " << j["elapsed_seconds"].get<double>()
                  << "s)\n";
        int shown = 0;
        for (const auto& ce : j["counterexamples"]) {
            if (++shown > 5) {
                std::cout << "  ...\n";
                break;
            }
            std::cout << "  counterexample" << (ce["graph6"].get<std::string>().empty()
                                                    ? ""
                                                    : " " + ce["graph6"].get<std::string>())
                      << ": " << ce["diagnostic"].get<std::string>() << '\n';
        }
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique vectors of k-connected chordal graphs"};
    app.set_version_flag("--version", cqv_version());
    app.fallthrough();
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    int exit_code = 0;
    auto runs = [&exit_code](auto fn) {
        return [&exit_code, fn]() {
            try {
                exit_code = fn();
            } catch (const CliFailure& f) {
                std::cerr << "error: " << f.message << '\n';
                exit_code = f.code;
            }
        };
    };

    auto in_chordal = std::make_shared<GraphInput>();
    auto* c_chordal = app.add_subcommand("chordal", "perfect elimination order, if one exists");
    in_chordal->attach(c_chordal);
    c_chordal->callback(runs([&, in_chordal] { return run_chordal(*in_chordal, json); }));

    auto in_cliques = std::make_shared<GraphInput>();
    auto brute = std::make_shared<bool>(false);
    auto* c_cliques = app.add_subcommand("cliques", "clique vector");
    in_cliques->attach(c_cliques);
    c_cliques->add_flag("--brute", *brute, "force brute-force counting");
    c_cliques->callback(runs([&, in_cliques, brute] { return run_cliques(*in_cliques, *brute, json); }));

    auto in_conn = std::make_shared<GraphInput>();
    auto classical = std::make_shared<bool>(false);
    auto* c_conn = app.add_subcommand("connectivity", "vertex connectivity");
    in_conn->attach(c_conn);
    c_conn->add_flag("--classical", *classical, "kappa(K_n) = n - 1 instead of n");
    c_conn->callback(runs([&, in_conn, classical] { return run_connectivity(*in_conn, *classical, json); }));

    auto vec_c2b = std::make_shared<std::string>();
    auto* c_c2b = app.add_subcommand("c2b", "clique vector -> b-vector");
    c_c2b->add_option("vector", *vec_c2b, "comma-separated integers")->required();
    c_c2b->callback(runs([&, vec_c2b] { return run_transform(*vec_c2b, true, json); }));

    auto vec_b2c = std::make_shared<std::string>();
    auto* c_b2c = app.add_subcommand("b2c", "b-vector -> clique vector");
    c_b2c->add_option("vector", *vec_b2c, "comma-separated integers")->required();
    c_b2c->callback(runs([&, vec_b2c] { return run_transform(*vec_b2c, false, json); }));

    auto vec_val = std::make_shared<std::string>();
    auto k_val = std::make_shared<int>(0);
    auto* c_val = app.add_subcommand("validate",
                                     "is c the clique vector of a k-connected chordal graph?");
    c_val->add_option("vector", *vec_val, "candidate clique vector")->required();
    c_val->add_option("k", *k_val, "required connectivity")->required();
    c_val->callback(runs([&, vec_val, k_val] { return run_validate(*vec_val, *k_val, json); }));

    auto vec_re = std::make_shared<std::string>();
    auto k_re = std::make_shared<int>(0);
    auto fmt_re = std::make_shared<std::string>("edge-list");
    auto* c_re = app.add_subcommand("realize", "build a k-connected chordal graph with clique vector c");
    c_re->add_option("vector", *vec_re, "clique vector")->required();
    c_re->add_option("k", *k_re, "required connectivity")->required();
    c_re->add_option("--format", *fmt_re, "edge-list (default) or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    c_re->callback(runs([&, vec_re, k_re, fmt_re] { return run_realize(*vec_re, *k_re, *fmt_re, json); }));

    auto* c_word = app.add_subcommand("word", "SD-word conversions");
    c_word->require_subcommand(1);

    auto w_tg = std::make_shared<std::string>();
    auto fmt_tg = std::make_shared<std::string>("edge-list");
    auto* c_tg = c_word->add_subcommand("to-graph", "build the threshold graph of a word");
    c_tg->add_option("word", *w_tg, "string over S/D ending in S")->required();
    c_tg->add_option("--format", *fmt_tg, "edge-list (default) or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    c_tg->callback(runs([&, w_tg, fmt_tg] { return run_word_to_graph(*w_tg, *fmt_tg, json); }));

    auto in_fg = std::make_shared<GraphInput>();
    auto* c_fg = c_word->add_subcommand("from-graph", "recover the word of a threshold graph");
    in_fg->attach(c_fg);
    c_fg->callback(runs([&, in_fg] { return run_word_from_graph(*in_fg, json); }));

    auto w_tb = std::make_shared<std::string>();
    auto* c_tb = c_word->add_subcommand("to-bvector", "split the word after each S");
    c_tb->add_option("word", *w_tb)->required();
    c_tb->callback(runs([&, w_tb] { return run_word_to_bvector(*w_tb, json); }));

    auto v_fb = std::make_shared<std::string>();
    auto* c_fb = c_word->add_subcommand("from-bvector", "word D^(b_i - 1) S concatenated");
    c_fb->add_option("vector", *v_fb)->required();
    c_fb->callback(runs([&, v_fb] { return run_word_from_bvector(*v_fb, json); }));

    auto w_kc = std::make_shared<std::string>();
    auto k_kc = std::make_shared<int>(0);
    auto* c_kc = c_word->add_subcommand("kconnected", "no D among the first k letters?");
    c_kc->add_option("word", *w_kc)->required();
    c_kc->add_option("k", *k_kc)->required();
    c_kc->callback(runs([&, w_kc, k_kc] { return run_word_kconnected(*w_kc, *k_kc, json); }));

    auto en_n = std::make_shared<std::int64_t>(0);
    auto en_d = std::make_shared<int>(0);
    auto en_k = std::make_shared<int>(0);
    auto count_only = std::make_shared<bool>(false);
    auto* c_en = app.add_subcommand("enumerate", "stream B(n,d,k) in lexicographic order");
    c_en->add_option("n", *en_n, "sum of entries")->required();
    c_en->add_option("d", *en_d, "length")->required();
    c_en->add_option("k", *en_k, "leading ones")->required();
    c_en->add_flag("--count-only", *count_only, "print |B(n,d,k)| only");
    c_en->callback(runs([&, en_n, en_d, en_k, count_only] {
        return run_enumerate(*en_n, *en_d, *en_k, *count_only, json);
    }));

    auto in_betti = std::make_shared<GraphInput>();
    auto full = std::make_shared<bool>(false);
    auto* c_betti = app.add_subcommand("betti", "linear strand (or --full table) of the face ring");
    in_betti->attach(c_betti);
    c_betti->add_flag("--full", *full, "full graded Betti table (n <= 8)");
    c_betti->callback(runs([&, in_betti, full] { return run_betti(*in_betti, *full, json); }));

    auto th = std::make_shared<std::string>();
    auto nmax = std::make_shared<int>(0);
    auto jobs = std::make_shared<int>(1);
    auto out_path = std::make_shared<std::string>();
    auto* c_ver = app.add_subcommand("verify", "exhaustive sweep for one theorem");
    c_ver->add_option("theorem", *th, "main | froberg | betti-connectivity | counting")
        ->required()
        ->check(CLI::IsMember({"main", "froberg", "betti-connectivity", "counting"}));
    c_ver->add_option("--nmax", *nmax, "largest vertex count")->required();
    c_ver->add_option("--jobs", *jobs, "parallel partitions (default 1)");
    c_ver->add_option("--out", *out_path, "also write the JSON report here");
    c_ver->callback(runs([&, th, nmax, jobs, out_path] {
        return run_verify(*th, *nmax, *jobs, *out_path, json);
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}
