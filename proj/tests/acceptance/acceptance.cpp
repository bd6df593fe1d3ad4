// Acceptance gate: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exit status is non-zero if any fail.

#include "suites.hpp"

#include "anytime/domains/msa.hpp"
#include "anytime/harness/lint.hpp"
#include "anytime/harness/runner.hpp"
#include "anytime/rbfs/rbfs.hpp"
#include "anytime/search/best_first.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <unistd.h>

using namespace anytime;
using anytime::support::digraph_suite;
using anytime::support::eight_fstar;
using anytime::support::eight_puzzle_suite;
using anytime::support::graph_fstar;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Collects failures, counted per category (for example "awastar/graph").
class Failures {
public:
    void add(const std::string &what, const std::string &category = "other") {
        ++by_category_[category];
        if (count_++ < 3)
            first_ += (first_.empty() ? "" : "; ") + what;
    }
    std::size_t count() const { return count_; }
    Verdict verdict(const std::string &summary) const {
        if (count_ == 0)
            return {true, summary};
        std::string cats;
        for (const auto &[c, n] : by_category_)
            cats += (cats.empty() ? "" : ", ") + c + "=" + std::to_string(n);
        return {false, summary + "; " + std::to_string(count_) + " failure(s) [" + cats + "]: " + first_};
    }

private:
    std::size_t count_ = 0;
    std::string first_;
    std::map<std::string, std::size_t> by_category_;
};

std::string domain_of(const std::string &label) { return label.rfind("graph", 0) == 0 ? "graph" : "tiles"; }

const std::vector<WeightSpec> kSuiteWeights{WeightSpec(13, 10), WeightSpec(3, 2), WeightSpec(2, 1),
                                            WeightSpec(3, 1)};

// Suite (1): 200 Eight Puzzle boards and 200 digraphs with exact optima.
struct SuiteOne {
    std::vector<tiles::TileState> boards = eight_puzzle_suite(200);
    std::vector<graph::ExplicitGraph> graphs = digraph_suite(200);
    std::vector<Cost> board_fstar;
    std::vector<Cost> graph_fstar;

    SuiteOne() {
        for (const auto &b : boards)
            board_fstar.push_back(eight_fstar(b));
        for (const auto &g : graphs)
            graph_fstar.push_back(support::graph_fstar(g));
    }

    // Calls fn(label, space, fstar) for every instance of the suite.
    void for_each(const std::function<void(const std::string &, const SearchSpace &, Cost)> &fn) const {
        for (std::size_t i = 0; i < boards.size(); ++i)
            fn("tiles#" + std::to_string(i + 1), tiles::TilePuzzle(boards[i]), board_fstar[i]);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            fn("graph#" + std::to_string(i + 1), graphs[i], graph_fstar[i]);
    }
};

const SuiteOne &suite_one() {
    static const SuiteOne s;
    return s;
}

bool within_weight(Cost cost, Cost fstar, const WeightSpec &w) {
    return Rational(cost.value(), 1) <= w.value() * Rational(fstar.value(), 1);
}

Verdict criterion_1() {
    Failures f;
    std::size_t runs = 0;
    suite_one().for_each([&](const std::string &label, const SearchSpace &space, Cost fstar) {
        for (const auto &w : kSuiteWeights) {
            ++runs;
            const SearchResult r = anytime_wastar(space, w);
            const std::string tag = label + " w=" + w.str();
            const std::string cat = domain_of(label);
            if (r.status != SearchStatus::Converged || !r.incumbent)
                f.add(tag + " did not converge", cat);
            else if (r.incumbent->cost != fstar)
                f.add(tag + " cost " + r.incumbent->cost.str() + " != f* " + fstar.str(), cat);
            else if (r.bounds.lower != r.bounds.upper)
                f.add(tag + " final lower " + r.bounds.lower.str() + " != upper " + r.bounds.upper.str(), cat);
        }
    });
    return f.verdict(std::to_string(runs) + " runs");
}

Verdict criterion_2() {
    Failures f;
    std::size_t runs = 0;
    suite_one().for_each([&](const std::string &label, const SearchSpace &space, Cost fstar) {
        for (const auto &w : kSuiteWeights) {
            const std::string tag = label + " w=" + w.str();
            const SearchResult wa = weighted_astar(space, w);
            const SearchResult awa = anytime_wastar(space, w);
            const SearchResult ara = ara_star(space, w, Rational(1, 10));
            runs += 3;
            const std::pair<const char *, const SearchResult *> all[] = {
                {"wastar", &wa}, {"awastar", &awa}, {"ara_star", &ara}};
            for (const auto &[name, r] : all) {
                const std::string cat = std::string(name) + "/" + domain_of(label);
                if (r->trace.entries.empty()) {
                    f.add(std::string(name) + " " + tag + " found no solution", cat);
                    continue;
                }
                const Cost first = r->trace.entries.front().cost;
                if (!within_weight(first, fstar, w))
                    f.add(std::string(name) + " " + tag + " first cost " + first.str() + " > w*f* (f*=" +
                          fstar.str() + ")",
                          cat);
            }
        }
    });
    return f.verdict(std::to_string(runs) + " runs");
}

harness::Instance as_instance(const tiles::TileState &b, const std::string &name) {
    return harness::parse_instance(harness::Domain::Tiles, tiles::format_tiles(b), name);
}

harness::Instance as_instance(const graph::ExplicitGraph &g, const std::string &name) {
    return harness::parse_instance(harness::Domain::Graph, g.format(), name);
}

std::string trace_csv(harness::Algorithm alg, const WeightSpec &w, const harness::Instance &inst, Cost fstar) {
    harness::RunConfig c;
    c.algorithm = alg;
    c.weight = w;
    c.domain = inst.domain;
    c.instance_path = inst.name;
    c.fstar = harness::FstarValue{fstar};
    return harness::run_instance(c, inst).csv;
}

// Traces of the given algorithms over suite (1), labelled "alg@w instance".
std::vector<std::pair<std::string, std::string>> suite_one_traces(const std::vector<harness::Algorithm> &algs) {
    std::vector<std::pair<std::string, std::string>> out;
    const SuiteOne &s = suite_one();
    for (auto alg : algs) {
        for (const auto &w : kSuiteWeights) {
            const std::string prefix = std::string(harness::to_string(alg)) + "@" + w.str() + " ";
            for (std::size_t i = 0; i < s.boards.size(); ++i) {
                const std::string name = "tiles" + std::to_string(i + 1);
                out.emplace_back(prefix + name, trace_csv(alg, w, as_instance(s.boards[i], name), s.board_fstar[i]));
            }
            for (std::size_t i = 0; i < s.graphs.size(); ++i) {
                const std::string name = "graph" + std::to_string(i + 1);
                out.emplace_back(prefix + name, trace_csv(alg, w, as_instance(s.graphs[i], name), s.graph_fstar[i]));
            }
        }
    }
    return out;
}

Verdict criterion_3() {
    Failures f;
    std::size_t rows = 0;
    const auto traces = suite_one_traces({harness::Algorithm::AWAStar});
    for (const auto &[label, csv] : traces) {
        rows += harness::parse_trace(csv).rows.size();
        const std::string alg = label.substr(0, label.find('@'));
        const std::string cat = alg + "/" + domain_of(label.substr(label.find(' ') + 1));
        for (const auto &issue : harness::lint_text(csv))
            f.add(label + " line " + std::to_string(issue.line) + ": " + issue.message, cat);
    }
    return f.verdict(std::to_string(traces.size()) + " traces, " + std::to_string(rows) + " rows");
}

Verdict criterion_4() {
    const auto boards = eight_puzzle_suite(500);
    double a_stored = 0, a_exp = 0, w_stored = 0, w_exp = 0;
    for (const auto &b : boards) {
        const tiles::TilePuzzle p(b);
        const SearchResult a = astar(p);
        const SearchResult w = anytime_wastar(p, WeightSpec(13, 10));
        a_stored += static_cast<double>(a.stats.stored);
        a_exp += static_cast<double>(a.stats.expansions);
        w_stored += static_cast<double>(w.stats.stored);
        w_exp += static_cast<double>(w.stats.expansions);
    }
    const double n = static_cast<double>(boards.size());
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "mean stored awastar %.1f vs astar %.1f (ratio %.4f <= 1.05); mean expansions %.1f vs %.1f "
                  "(ratio %.4f <= 1.10)",
                  w_stored / n, a_stored / n, w_stored / a_stored, w_exp / n, a_exp / n, w_exp / a_exp);
    const bool ok = w_stored <= 1.05 * a_stored && w_exp <= 1.10 * a_exp;
    return {ok, buf};
}

std::vector<std::pair<StateId, std::uint64_t>> expansion_sequence(
    const std::function<SearchResult(const RbfsOptions &)> &search) {
    std::vector<std::pair<StateId, std::uint64_t>> seq;
    RbfsOptions o;
    o.on_expand = [&seq](const ExpansionEvent &e) { seq.emplace_back(e.state, e.g.value()); };
    search(o);
    return seq;
}

Verdict criterion_5() {
    Failures f;
    std::size_t total = 0;
    const auto boards = eight_puzzle_suite(50);
    for (std::size_t i = 0; i < boards.size(); ++i) {
        const tiles::TilePuzzle p(boards[i]);
        const auto a = expansion_sequence([&](const RbfsOptions &o) { return rbfs_weighted(p, WeightSpec(), o); });
        const auto b = expansion_sequence([&](const RbfsOptions &o) { return wrbfs(p, WeightSpec(), o); });
        total += a.size();
        if (a != b)
            f.add("board " + std::to_string(i + 1) + " sequences differ (" + std::to_string(a.size()) + " vs " +
                  std::to_string(b.size()) + " expansions)");
    }
    return f.verdict(std::to_string(boards.size()) + " boards, " + std::to_string(total) + " expansions compared");
}

Verdict criterion_6() {
    Failures f;
    std::vector<tiles::TileState> boards = eight_puzzle_suite(100);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        boards.push_back(harness::generate_tiles({4, 40}, seed));
    const WeightSpec weights[] = {WeightSpec(13, 10), WeightSpec(3, 2), WeightSpec(2, 1)};
    for (std::size_t i = 0; i < boards.size(); ++i) {
        const tiles::TilePuzzle p(boards[i]);
        const SearchResult ref = astar(p);
        const std::string name = (boards[i].width() == 3 ? "eight#" : "fifteen#") + std::to_string(i + 1);
        for (const auto &w : weights) {
            const SearchResult r = anytime_wrbfs(p, w);
            const std::string tag = name + " w=" + w.str();
            if (r.status != SearchStatus::Converged || !r.incumbent)
                f.add(tag + " did not converge");
            else if (r.incumbent->cost != ref.incumbent->cost)
                f.add(tag + " cost " + r.incumbent->cost.str() + " != " + ref.incumbent->cost.str());
            if (!r.trace.strictly_decreasing())
                f.add(tag + " incumbent trace not strictly decreasing");
        }
    }
    return f.verdict("100 Eight + 5 Fifteen Puzzle boards x 3 weights");
}

Verdict criterion_7() {
    const auto boards = eight_puzzle_suite(100);
    double weighted = 0, wr = 0;
    for (const auto &b : boards) {
        const tiles::TilePuzzle p(b);
        weighted += static_cast<double>(anytime_rbfs_weighted(p, WeightSpec(3, 2)).stats.recursive_calls);
        wr += static_cast<double>(anytime_wrbfs(p, WeightSpec(3, 2)).stats.recursive_calls);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "mean recursive calls: anytime_rbfs_weighted %.1f >= anytime_wrbfs %.1f",
                  weighted / 100.0, wr / 100.0);
    return {weighted >= wr, buf};
}

std::vector<std::vector<msa::Sequence>> protein_triples() {
    std::ifstream in(ANYTIME_PROTEIN_FASTA);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto all = msa::load_fasta(ss.str());
    std::vector<std::vector<msa::Sequence>> out;
    for (std::size_t i = 0; i < 10; ++i)
        out.push_back({all[i % all.size()], all[(i + 1) % all.size()], all[(i + 3) % all.size()]});
    return out;
}

Verdict criterion_8() {
    Failures f;
    std::vector<std::pair<std::string, std::vector<msa::Sequence>>> instances;
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
        instances.emplace_back("random#" + std::to_string(seed), harness::generate_sequences({3, 8, 12}, seed));
    const auto proteins = protein_triples();
    for (std::size_t i = 0; i < proteins.size(); ++i)
        instances.emplace_back("protein#" + std::to_string(i + 1), proteins[i]);

    std::size_t longest = 0, checked = 0;
    for (const auto &[name, seqs] : instances) {
        for (const auto &s : seqs)
            longest = std::max(longest, s.residues.size());
        const msa::ScoringScheme scheme = msa::ScoringScheme::pam250();
        const msa::MsaProblem problem(seqs, scheme);
        const oracle::AlignmentTable table = oracle::alignment_table(seqs, scheme);
        const Cost optimum = table.cost_to_go[0];
        BestFirstOptions o;
        bool admissible = true;
        o.on_expand = [&](const ExpansionEvent &e) {
            ++checked;
            if (e.h > table.cost_to_go[table.index(problem.decode(e.state))])
                admissible = false;
        };
        const SearchResult r = anytime_wastar(problem, WeightSpec(100, 99), o);
        if (r.status != SearchStatus::Converged || !r.incumbent)
            f.add(name + " did not converge");
        else if (r.incumbent->cost != optimum)
            f.add(name + " cost " + r.incumbent->cost.str() + " != oracle " + optimum.str());
        if (!admissible)
            f.add(name + " heuristic exceeded the exact cost-to-go at an expanded state");
        if (oracle::exact_alignment(seqs, scheme).optimal_cost != optimum)
            f.add(name + " oracle table and path reconstruction disagree");
    }
    return f.verdict(std::to_string(instances.size()) + " instances (longest sequence " + std::to_string(longest) +
                     "), heuristic checked at " + std::to_string(checked) + " expansions");
}

Verdict criterion_9() {
    Failures f;
    const SuiteOne &s = suite_one();
    for (std::size_t i = 0; i < s.graphs.size(); ++i) {
        const auto &g = s.graphs[i];
        const SearchResult first = weighted_astar(g, WeightSpec(2, 1));
        const SearchResult ea = enhanced_astar(g, first.incumbent->cost + Cost(1));
        const SearchResult a = astar(g);
        const std::string tag = "graph#" + std::to_string(i + 1);
        if (!ea.incumbent || ea.incumbent->cost != s.graph_fstar[i])
            f.add(tag + " enhanced_astar not optimal");
        if (ea.stats.stored > a.stats.stored)
            f.add(tag + " stored " + std::to_string(ea.stats.stored) + " > astar " + std::to_string(a.stats.stored));
    }
    return f.verdict(std::to_string(s.graphs.size()) + " digraphs");
}

Verdict criterion_10() {
    Failures f;
    std::size_t runs = 0;
    suite_one().for_each([&](const std::string &label, const SearchSpace &space, Cost fstar) {
        ++runs;
        const SearchResult r = ara_star(space, WeightSpec(2, 1), Rational(1, 10));
        if (r.status != SearchStatus::Converged || !r.incumbent || r.incumbent->cost != fstar) {
            f.add(label + " final cost not optimal");
            return;
        }
        for (const Incumbent &inc : r.trace.entries) {
            const Rational actual(inc.cost.value(), fstar.value());
            if (!inc.bound_at_discovery)
                f.add(label + " incumbent " + inc.cost.str() + " carries no bound");
            else if (*inc.bound_at_discovery < actual)
                f.add(label + " bound " + inc.bound_at_discovery->str() + " < actual ratio " + actual.str());
        }
    });
    double ara = 0, awa = 0;
    for (const auto &b : suite_one().boards) {
        const tiles::TilePuzzle p(b);
        ara += static_cast<double>(ara_star(p, WeightSpec(3, 1), Rational(1, 10)).stats.distinct_expanded);
        awa += static_cast<double>(anytime_wastar(p, WeightSpec(3, 1)).stats.distinct_expanded);
    }
    const double n = static_cast<double>(suite_one().boards.size());
    if (ara < awa)
        f.add("mean distinct expanded ara_star " + std::to_string(ara / n) + " < awastar " + std::to_string(awa / n));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu runs; Eight Puzzle w0=3 mean distinct expanded ara_star %.1f vs awastar %.1f",
                  runs, ara / n, awa / n);
    return f.verdict(buf);
}

std::string profile_csv(const std::filesystem::path &dir) {
    harness::ProfileConfig c;
    c.domain = harness::Domain::Tiles;
    for (const auto &p : std::filesystem::directory_iterator(dir))
        c.instance_paths.push_back(p.path().string());
    std::sort(c.instance_paths.begin(), c.instance_paths.end());
    c.series = {harness::parse_series("awastar:13/10"), harness::parse_series("awastar:3/2"),
                harness::parse_series("anytime_wrbfs:3/2"), harness::parse_series("ara_star:2:1/10")};
    c.jobs = 4;
    const harness::ProfileReport rep = harness::profile(c);
    return rep.quality_csv() + rep.summary_csv();
}

Verdict criterion_11() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("anytime_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto boards = eight_puzzle_suite(40);
    for (std::size_t i = 0; i < boards.size(); ++i)
        std::ofstream(dir / ("board" + std::to_string(100 + i) + ".txt")) << tiles::format_tiles(boards[i]);

    auto everything = [&]() {
        std::string all;
        for (const auto &[label, csv] : suite_one_traces({harness::Algorithm::AWAStar, harness::Algorithm::AraStar}))
            all += label + "\n" + csv;
        const SuiteOne &s = suite_one();
        for (std::size_t i = 0; i < 50; ++i) {
            all += trace_csv(harness::Algorithm::AnytimeWrbfs, WeightSpec(3, 2), as_instance(s.boards[i], "b"),
                             s.board_fstar[i]);
            all += trace_csv(harness::Algorithm::AnytimeRbfsWeighted, WeightSpec(3, 2),
                             as_instance(s.graphs[i], "g"), s.graph_fstar[i]);
        }
        all += profile_csv(dir);
        return all;
    };
    const std::string first = everything();
    const std::string second = everything();
    fs::remove_all(dir);
    return {first == second, std::to_string(first.size()) + " bytes of trace and profile CSV compared"};
}

} // namespace

int main() {
    const std::pair<int, Verdict (*)()> criteria[] = {
        {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},   {5, criterion_5},  {6, criterion_6},
        {7, criterion_7}, {8, criterion_8}, {9, criterion_9}, {10, criterion_10}, {11, criterion_11},
    };
    int failed = 0;
    for (const auto &[n, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  (%.1fs) %s\n", n, v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
