#include "anytime/harness/config.hpp"

#include "anytime/core/errors.hpp"
#include "anytime/domains/graph.hpp"
#include "anytime/domains/msa.hpp"
#include "anytime/domains/tiles.hpp"
#include "anytime/oracle/oracle.hpp"
#include "anytime/search/best_first.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace anytime::harness {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 9> kAlgorithms{{
    {Algorithm::AStar, "astar"},
    {Algorithm::WAStar, "wastar"},
    {Algorithm::AWAStar, "awastar"},
    {Algorithm::EAStar, "ea_star"},
    {Algorithm::AraStar, "ara_star"},
    {Algorithm::Rbfs, "rbfs"},
    {Algorithm::Wrbfs, "wrbfs"},
    {Algorithm::AnytimeWrbfs, "anytime_wrbfs"},
    {Algorithm::AnytimeRbfsWeighted, "anytime_rbfs_weighted"},
}};

} // namespace

std::string_view to_string(Algorithm a) {
    for (const auto &[alg, name] : kAlgorithms)
        if (alg == a)
            return name;
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    for (const auto &[alg, n] : kAlgorithms)
        if (n == name)
            return alg;
    std::string known;
    for (const auto &[alg, n] : kAlgorithms)
        known += (known.empty() ? "" : ", ") + std::string(n);
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected one of " + known + ")");
}

bool is_anytime(Algorithm a) {
    return a == Algorithm::AWAStar || a == Algorithm::AraStar || a == Algorithm::AnytimeWrbfs ||
           a == Algorithm::AnytimeRbfsWeighted;
}

bool is_rbfs_family(Algorithm a) {
    return a == Algorithm::Rbfs || a == Algorithm::Wrbfs || a == Algorithm::AnytimeWrbfs ||
           a == Algorithm::AnytimeRbfsWeighted;
}

std::string_view to_string(Domain d) {
    switch (d) {
    case Domain::Tiles:
        return "tiles";
    case Domain::Msa:
        return "msa";
    case Domain::Graph:
        return "graph";
    }
    return "unknown";
}

Domain parse_domain(std::string_view name) {
    if (name == "tiles")
        return Domain::Tiles;
    if (name == "msa")
        return Domain::Msa;
    if (name == "graph")
        return Domain::Graph;
    throw ConfigError("unknown domain '" + std::string(name) + "' (expected tiles, msa or graph)");
}

FstarSource parse_fstar(std::string_view text) {
    if (text.empty())
        return std::monostate{};
    if (text == "oracle")
        return FstarFromOracle{};
    if (text.find_first_not_of("0123456789") == std::string_view::npos)
        return FstarValue{Cost(std::stoull(std::string(text)))};
    return FstarFromFile{std::string(text)};
}

void RunConfig::validate() const {
    if (weight_step && algorithm != Algorithm::AraStar)
        throw ConfigError("--weight-step applies only to ara_star, not " + std::string(to_string(algorithm)));
    if (weight_step && *weight_step == Rational())
        throw ConfigError("--weight-step must be positive");
    if (!weight.is_unit() && algorithm == Algorithm::AStar)
        throw ConfigError("astar is unweighted; use wastar or awastar for w = " + weight.str());
    if (upper_bound && algorithm != Algorithm::EAStar)
        throw ConfigError("--upper-bound applies only to ea_star");
    if (domain == Domain::Msa && is_rbfs_family(algorithm))
        throw ConfigError("the RBFS family is a tree search and is not run on the alignment lattice");
    if (instance_path.empty())
        throw ConfigError("--instance is required");
}

Rational RunConfig::effective_step() const { return weight_step.value_or(Rational(1, 10)); }

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Instance parse_instance(Domain domain, std::string_view text, std::string name, const std::string &scheme_text) {
    Instance inst;
    inst.name = std::move(name);
    inst.domain = domain;
    switch (domain) {
    case Domain::Tiles:
        inst.space = std::make_shared<tiles::TilePuzzle>(tiles::load_tiles(text));
        break;
    case Domain::Graph:
        inst.space = std::make_shared<graph::ExplicitGraph>(graph::load_graph(text));
        break;
    case Domain::Msa: {
        const msa::ScoringScheme scheme =
            scheme_text.empty() ? msa::ScoringScheme::pam250() : msa::load_scheme(scheme_text);
        inst.space = std::make_shared<msa::MsaProblem>(msa::load_fasta(text), scheme);
        break;
    }
    }
    return inst;
}

Instance load_instance(Domain domain, const std::string &path, const std::string &scheme_path) {
    const std::string scheme = scheme_path.empty() ? std::string() : read_file(scheme_path);
    return parse_instance(domain, read_file(path), std::filesystem::path(path).filename().string(), scheme);
}

std::optional<Cost> oracle_fstar(const Instance &instance) {
    switch (instance.domain) {
    case Domain::Tiles: {
        const auto &puzzle = static_cast<const tiles::TilePuzzle &>(*instance.space);
        if (puzzle.width() == 3) {
            static const oracle::EightPuzzleTable table;
            return Cost(static_cast<std::uint64_t>(table.distance(puzzle.start())));
        }
        // Blind search is hopeless on the Fifteen Puzzle; A* with Manhattan is the reference.
        const SearchResult r = astar(puzzle);
        if (r.status != SearchStatus::Converged)
            return std::nullopt;
        return r.incumbent->cost;
    }
    case Domain::Graph: {
        const auto r = oracle::uniform_cost(*instance.space);
        return r ? std::optional<Cost>(r->optimal_cost) : std::nullopt;
    }
    case Domain::Msa: {
        const auto &problem = static_cast<const msa::MsaProblem &>(*instance.space);
        if (problem.lattice_volume() <= 1'000'000)
            return oracle::exact_alignment(problem.sequences(), problem.scheme()).optimal_cost;
        const SearchResult r = astar(problem);
        if (r.status != SearchStatus::Converged)
            return std::nullopt;
        return r.incumbent->cost;
    }
    }
    return std::nullopt;
}

std::optional<Cost> resolve_fstar(const FstarSource &source, const Instance &instance, const std::string &path) {
    if (std::holds_alternative<std::monostate>(source))
        return std::nullopt;
    if (std::holds_alternative<FstarFromOracle>(source))
        return oracle_fstar(instance);
    if (const auto *v = std::get_if<FstarValue>(&source))
        return v->value;

    const std::string &file = std::get<FstarFromFile>(source).path;
    std::istringstream in(read_file(file));
    std::string line;
    std::size_t n = 0;
    const std::string base = std::filesystem::path(path).filename().string();
    while (std::getline(in, line)) {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string a;
        std::string b;
        if (!(fields >> a))
            continue;
        try {
            if (!(fields >> b))
                return Cost(std::stoull(a)); // a lone value applies to every instance
            if (a == path || a == base || a == instance.name)
                return Cost(std::stoull(b));
        } catch (const std::invalid_argument &) {
            throw ParseError(n, "malformed f* entry in '" + file + "'");
        }
    }
    return std::nullopt;
}

} // namespace anytime::harness
