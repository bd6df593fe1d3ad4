#include "anytime/domains/msa.hpp"

#include "anytime/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace anytime::msa {

std::vector<Sequence> load_fasta(std::string_view text) {
    std::vector<Sequence> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty() && line[0] == '>') {
            std::string name = line.substr(1);
            const auto first = name.find_first_not_of(" \t");
            name = first == std::string::npos ? std::string() : name.substr(first);
            out.push_back({name, {}});
            continue;
        }
        if (!line.empty() && line[0] == ';')
            continue;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            if (out.empty())
                throw ParseError(n, "residues before the first '>' header");
            if (residue_index(c) < 0)
                throw ParseError(n, std::string("invalid residue '") + c + "' (not a standard amino acid)");
            out.back().residues += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
    }
    if (out.empty())
        throw ParseError(0, "no FASTA records found");
    return out;
}

std::string format_fasta(const std::vector<Sequence> &seqs) {
    std::string out;
    for (const auto &s : seqs) {
        out += '>' + s.name + '\n';
        for (std::size_t i = 0; i < s.residues.size(); i += 60)
            out += s.residues.substr(i, 60) + '\n';
    }
    return out;
}

PairwiseTables::PairwiseTables(const std::vector<Sequence> &seqs, const ScoringScheme &scheme) {
    for (const auto &s : seqs)
        lengths_.push_back(static_cast<std::uint32_t>(s.residues.size()));
    const std::size_t n = seqs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string &a = seqs[i].residues;
            const std::string &b = seqs[j].residues;
            const std::size_t la = a.size();
            const std::size_t lb = b.size();
            const std::size_t stride = lb + 1;
            std::vector<Cost> t((la + 1) * stride, Cost(0));
            for (std::size_t x = la + 1; x-- > 0;) {
                for (std::size_t y = lb + 1; y-- > 0;) {
                    if (x == la && y == lb)
                        continue;
                    Cost best = Cost::infinity();
                    if (x < la && y < lb)
                        best = std::min(best, t[(x + 1) * stride + y + 1] +
                                                  scheme.substitution(residue_index(a[x]), residue_index(b[y])));
                    if (x < la)
                        best = std::min(best, t[(x + 1) * stride + y] + scheme.gap_cost);
                    if (y < lb)
                        best = std::min(best, t[x * stride + y + 1] + scheme.gap_cost);
                    t[x * stride + y] = best;
                }
            }
            tables_.push_back(std::move(t));
        }
    }
}

std::size_t PairwiseTables::pair_index(std::size_t i, std::size_t j) const {
    const std::size_t n = lengths_.size();
    // Pairs are stored row by row: (0,1), (0,2), ..., (1,2), ...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Cost PairwiseTables::suffix_cost(std::size_t i, std::size_t j, std::uint32_t pi, std::uint32_t pj) const {
    if (i >= j || j >= lengths_.size() || pi > lengths_[i] || pj > lengths_[j])
        throw std::out_of_range("suffix_cost index out of range");
    return tables_[pair_index(i, j)][static_cast<std::size_t>(pi) * (lengths_[j] + 1) + pj];
}

Cost pairwise_heuristic(const MsaState &state, const PairwiseTables &tables) {
    if (state.size() != tables.sequence_count())
        throw std::invalid_argument("state dimension does not match the tables");
    Cost total(0);
    for (std::size_t i = 0; i < state.size(); ++i)
        for (std::size_t j = i + 1; j < state.size(); ++j)
            total += tables.suffix_cost(i, j, state[i], state[j]);
    return total;
}

Cost column_cost(const std::vector<Sequence> &seqs, const ScoringScheme &scheme, const MsaState &state,
                 std::uint32_t mask) {
    Cost total(0);
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        const bool ai = (mask >> i) & 1u;
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            const bool aj = (mask >> j) & 1u;
            if (ai && aj)
                total += scheme.substitution(residue_index(seqs[i].residues[state[i]]),
                                             residue_index(seqs[j].residues[state[j]]));
            else if (ai != aj)
                total += scheme.gap_cost;
        }
    }
    return total;
}

Cost alignment_cost(const std::vector<std::string> &rows, const ScoringScheme &scheme) {
    if (rows.empty())
        return Cost(0);
    const std::size_t width = rows[0].size();
    for (const auto &r : rows)
        if (r.size() != width)
            throw std::invalid_argument("alignment rows differ in length");
    Cost total(0);
    for (std::size_t col = 0; col < width; ++col) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                const char a = rows[i][col];
                const char b = rows[j][col];
                if (a == '-' && b == '-')
                    continue;
                if (a == '-' || b == '-') {
                    total += scheme.gap_cost;
                    continue;
                }
                const int ia = residue_index(a);
                const int ib = residue_index(b);
                if (ia < 0 || ib < 0)
                    throw std::invalid_argument(std::string("invalid residue in alignment: ") + (ia < 0 ? a : b));
                total += scheme.substitution(ia, ib);
            }
        }
    }
    return total;
}

namespace {

std::vector<Sequence> checked(std::vector<Sequence> seqs) {
    if (seqs.size() < 2 || seqs.size() > 16)
        throw ValidationError("alignment needs between 2 and 16 sequences, got " + std::to_string(seqs.size()));
    for (auto &s : seqs)
        for (char &c : s.residues) {
            if (residue_index(c) < 0)
                throw ValidationError(std::string("invalid residue '") + c + "' in sequence " + s.name);
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
    return seqs;
}

} // namespace

MsaProblem::MsaProblem(std::vector<Sequence> seqs, ScoringScheme scheme)
    : seqs_(checked(std::move(seqs))), scheme_(scheme), tables_(seqs_, scheme_) {
    for (const auto &s : seqs_) {
        radix_.push_back(volume_);
        if (__builtin_mul_overflow(volume_, static_cast<std::uint64_t>(s.residues.size() + 1), &volume_))
            throw ValidationError("alignment lattice is too large to encode");
    }
    MsaState goal;
    for (const auto &s : seqs_)
        goal.push_back(static_cast<std::uint32_t>(s.residues.size()));
    goal_ = encode(goal);
}

StateId MsaProblem::start() const { return state_id(0); }

StateId MsaProblem::encode(const MsaState &state) const {
    if (state.size() != seqs_.size())
        throw std::invalid_argument("state dimension does not match the problem");
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state[i] > seqs_[i].residues.size())
            throw std::out_of_range("position beyond sequence end");
        id += state[i] * radix_[i];
    }
    return state_id(id);
}

MsaState MsaProblem::decode(StateId s) const {
    MsaState state(seqs_.size());
    std::uint64_t id = raw(s);
    for (std::size_t i = 0; i < seqs_.size(); ++i) {
        const std::uint64_t r = seqs_[i].residues.size() + 1;
        state[i] = static_cast<std::uint32_t>(id % r);
        id /= r;
    }
    return state;
}

void MsaProblem::successors(StateId s, std::vector<Successor> &out) const {
    out.clear();
    const MsaState state = decode(s);
    std::uint32_t finished = 0;
    for (std::size_t i = 0; i < seqs_.size(); ++i)
        if (state[i] == seqs_[i].residues.size())
            finished |= 1u << i;
    const std::uint32_t all = (1u << seqs_.size()) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        if (mask & finished)
            continue;
        std::uint64_t next = raw(s);
        for (std::size_t i = 0; i < seqs_.size(); ++i)
            if ((mask >> i) & 1u)
                next += radix_[i];
        out.push_back({state_id(next), column_cost(seqs_, scheme_, state, mask)});
    }
}

Cost MsaProblem::heuristic(StateId s) const { return pairwise_heuristic(decode(s), tables_); }

std::string MsaProblem::describe(StateId s) const {
    const auto state = decode(s);
    std::string out = "(";
    for (std::size_t i = 0; i < state.size(); ++i)
        out += (i ? "," : "") + std::to_string(state[i]);
    return out + ")";
}

std::vector<std::string> MsaProblem::alignment(const std::vector<StateId> &path) const {
    std::vector<std::string> rows(seqs_.size());
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto a = decode(path[k - 1]);
        const auto b = decode(path[k]);
        if (a == b)
            throw std::invalid_argument("path step " + std::to_string(k) + " does not advance any sequence");
        for (std::size_t i = 0; i < seqs_.size(); ++i) {
            if (b[i] == a[i] + 1)
                rows[i] += seqs_[i].residues[a[i]];
            else if (b[i] == a[i])
                rows[i] += '-';
            else
                throw std::invalid_argument("path step " + std::to_string(k) + " is not a lattice move");
        }
    }
    return rows;
}

} // namespace anytime::msa
