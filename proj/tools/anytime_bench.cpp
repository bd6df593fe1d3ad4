// anytime-bench: run anytime search algorithms, build performance profiles,
// generate instances and check trace files.

#include "anytime/core/errors.hpp"
#include "anytime/harness/config.hpp"
#include "anytime/harness/generate.hpp"
#include "anytime/harness/lint.hpp"
#include "anytime/harness/runner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace anytime;
using namespace anytime::harness;

namespace {

struct LimitArgs {
    std::optional<std::uint64_t> max_expansions;
    std::optional<std::uint64_t> max_stored;
    std::optional<double> max_seconds;

    void attach(CLI::App *app) {
        app->add_option("--max-expansions", max_expansions, "Interrupt after N expansions");
        app->add_option("--max-stored", max_stored, "Interrupt when more than N nodes are stored");
        app->add_option("--max-seconds", max_seconds, "Interrupt after S seconds of wall time");
    }

    SearchLimits limits() const {
        SearchLimits l;
        l.max_expansions = max_expansions;
        l.max_stored = max_stored;
        if (max_seconds)
            l.max_wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::duration<double>(*max_seconds));
        return l;
    }
};

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write '" + path + "'");
    out << text;
}

struct RunArgs {
    std::string algorithm = "awastar";
    std::string weight = "1";
    std::string weight_step;
    std::string domain = "tiles";
    std::string instance;
    std::string scheme;
    std::optional<std::uint64_t> upper_bound;
    std::string fstar;
    std::uint64_t seed = 0;
    std::string out;
    bool wall_time = false;
    LimitArgs limits;
};

int do_run(const RunArgs &a) {
    RunConfig c;
    c.algorithm = parse_algorithm(a.algorithm);
    c.weight = WeightSpec::parse(a.weight);
    if (!a.weight_step.empty())
        c.weight_step = Rational::parse(a.weight_step);
    c.domain = parse_domain(a.domain);
    c.instance_path = a.instance;
    c.scheme_path = a.scheme;
    if (a.upper_bound)
        c.upper_bound = Cost(*a.upper_bound);
    c.limits = a.limits.limits();
    c.seed = a.seed;
    c.out_path = a.out;
    c.fstar = parse_fstar(a.fstar);
    c.record_wall_time = a.wall_time;

    const RunOutcome o = run(c);
    write_output(a.out, o.csv);
    if (!a.out.empty() && a.out != "-") {
        std::cout << "status=" << to_string(o.result.status)
                  << " cost=" << (o.result.incumbent ? o.result.incumbent->cost.str() : "none")
                  << " expansions=" << o.result.stats.expansions << " stored=" << o.result.stats.stored << '\n';
    }
    return o.exit_code;
}

struct ProfileArgs {
    std::string domain = "tiles";
    std::vector<std::string> instances;
    std::string instance_dir;
    std::vector<std::string> series;
    std::string scheme;
    std::string fstar = "oracle";
    unsigned jobs = 1;
    std::string out;
    std::string summary_out;
    LimitArgs limits;
};

int do_profile(const ProfileArgs &a) {
    ProfileConfig c;
    c.domain = parse_domain(a.domain);
    c.instance_paths = a.instances;
    if (!a.instance_dir.empty()) {
        std::vector<std::string> found;
        for (const auto &entry : fs::directory_iterator(a.instance_dir))
            if (entry.is_regular_file())
                found.push_back(entry.path().string());
        std::sort(found.begin(), found.end());
        c.instance_paths.insert(c.instance_paths.end(), found.begin(), found.end());
    }
    for (const auto &s : a.series)
        c.series.push_back(parse_series(s));
    c.scheme_path = a.scheme;
    c.fstar = parse_fstar(a.fstar);
    c.limits = a.limits.limits();
    c.jobs = a.jobs;

    const ProfileReport rep = profile(c);
    for (const auto &w : rep.warnings)
        std::cerr << "warning: " << w << '\n';
    write_output(a.out, rep.quality_csv());
    std::string summary_path = a.summary_out;
    if (summary_path.empty() && !a.out.empty() && a.out != "-")
        summary_path = (fs::path(a.out).parent_path() / (fs::path(a.out).stem().string() + "_summary.csv")).string();
    if (!summary_path.empty())
        write_output(summary_path, rep.summary_csv());
    return kExitConverged;
}

struct GenArgs {
    std::string domain = "tiles";
    std::uint64_t seed = 1;
    std::string out;
    int width = 3;
    int walk = 0;
    GraphGenParams graph;
    SequenceGenParams seqs;
};

int do_gen(const GenArgs &a) {
    std::string text;
    switch (parse_domain(a.domain)) {
    case Domain::Tiles:
        text = tiles::format_tiles(generate_tiles({a.width, a.walk}, a.seed));
        break;
    case Domain::Graph:
        text = generate_graph(a.graph, a.seed).format();
        break;
    case Domain::Msa:
        text = msa::format_fasta(generate_sequences(a.seqs, a.seed));
        break;
    }
    write_output(a.out, text);
    return kExitConverged;
}

int do_lint(const std::vector<std::string> &files) {
    std::size_t total = 0;
    for (const auto &f : files) {
        const auto issues = lint_text(read_file(f));
        for (const auto &i : issues)
            std::cout << f << ':' << i.line << ": " << i.message << '\n';
        total += issues.size();
    }
    std::cout << files.size() << " trace(s), " << total << " violation(s)\n";
    return total == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Anytime heuristic search benchmark harness"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto *run_cmd = app.add_subcommand("run", "Run one algorithm on one instance and write its trace CSV");
    run_cmd->add_option("--algorithm", run_args.algorithm,
                        "astar, wastar, awastar, ea_star, ara_star, rbfs, wrbfs, anytime_wrbfs, anytime_rbfs_weighted")
        ->capture_default_str();
    run_cmd->add_option("--weight", run_args.weight, "Weight as P/Q, integer or decimal")->capture_default_str();
    run_cmd->add_option("--weight-step", run_args.weight_step, "Weight decrement for ara_star (default 1/10)");
    run_cmd->add_option("--domain", run_args.domain, "tiles, msa or graph")->capture_default_str();
    run_cmd->add_option("--instance", run_args.instance, "Instance file")->required();
    run_cmd->add_option("--scheme", run_args.scheme, "Scoring scheme file for msa (PAM-250 by default)");
    run_cmd->add_option("--upper-bound", run_args.upper_bound, "Insertion bound for ea_star");
    run_cmd->add_option("--fstar", run_args.fstar, "Optimal cost: 'oracle', an integer, or a file");
    run_cmd->add_option("--seed", run_args.seed, "Seed recorded in the trace header")->capture_default_str();
    run_cmd->add_option("--out", run_args.out, "Trace CSV path (stdout if omitted)");
    run_cmd->add_flag("--wall-time", run_args.wall_time, "Record wall-clock seconds in the trace");
    run_args.limits.attach(run_cmd);

    ProfileArgs prof_args;
    auto *prof_cmd = app.add_subcommand("profile", "Mean solution quality against expansions over many instances");
    prof_cmd->add_option("--domain", prof_args.domain, "tiles, msa or graph")->capture_default_str();
    prof_cmd->add_option("--instance", prof_args.instances, "Instance file (repeatable)");
    prof_cmd->add_option("--instance-dir", prof_args.instance_dir, "Directory of instance files");
    prof_cmd->add_option("--series", prof_args.series, "ALGORITHM[:WEIGHT[:STEP]] (repeatable)")->required();
    prof_cmd->add_option("--scheme", prof_args.scheme, "Scoring scheme file for msa");
    prof_cmd->add_option("--fstar", prof_args.fstar, "'oracle' or a file of '<instance> <cost>' lines")
        ->capture_default_str();
    prof_cmd->add_option("--jobs", prof_args.jobs, "Worker threads")->capture_default_str();
    prof_cmd->add_option("--out", prof_args.out, "Quality profile CSV (stdout if omitted)");
    prof_cmd->add_option("--summary-out", prof_args.summary_out, "Stored/expanded means CSV");
    prof_args.limits.attach(prof_cmd);

    GenArgs gen_args;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
    gen_cmd->add_option("--domain", gen_args.domain, "tiles, msa or graph")->capture_default_str();
    gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen_args.out, "Output file (stdout if omitted)");
    gen_cmd->add_option("--width", gen_args.width, "Tile board width (3 or 4)")->capture_default_str();
    gen_cmd->add_option("--walk", gen_args.walk, "Random-walk length; 0 for a uniform random board")
        ->capture_default_str();
    gen_cmd->add_option("--min-vertices", gen_args.graph.min_vertices)->capture_default_str();
    gen_cmd->add_option("--max-vertices", gen_args.graph.max_vertices)->capture_default_str();
    gen_cmd->add_option("--edge-percent", gen_args.graph.edge_percent)->capture_default_str();
    gen_cmd->add_option("--max-cost", gen_args.graph.max_cost)->capture_default_str();
    gen_cmd->add_option("--max-goals", gen_args.graph.max_goals)->capture_default_str();
    gen_cmd->add_option("--count", gen_args.seqs.count, "Number of sequences")->capture_default_str();
    gen_cmd->add_option("--min-length", gen_args.seqs.min_length)->capture_default_str();
    gen_cmd->add_option("--max-length", gen_args.seqs.max_length)->capture_default_str();

    std::vector<std::string> lint_files;
    auto *lint_cmd = app.add_subcommand("lint", "Check bound monotonicity and ratio invariants of trace CSVs");
    lint_cmd->add_option("traces", lint_files, "Trace CSV files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run_cmd)
            return do_run(run_args);
        if (*prof_cmd)
            return do_profile(prof_args);
        if (*gen_cmd)
            return do_gen(gen_args);
        if (*lint_cmd)
            return do_lint(lint_files);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
