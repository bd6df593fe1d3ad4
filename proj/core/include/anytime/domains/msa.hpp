#ifndef ANYTIME_DOMAINS_MSA_HPP
#define ANYTIME_DOMAINS_MSA_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/search_space.hpp"
#include "anytime/domains/scoring.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anytime::msa {

struct Sequence {
    std::string name;
    std::string residues; // upper-case letters from kAminoAcids
};

/// One index per sequence, 0 <= pos[i] <= length(i).
using MsaState = std::vector<std::uint32_t>;

/// Reads FASTA records; letters are upper-cased and must be standard amino acids.
std::vector<Sequence> load_fasta(std::string_view text);
std::string format_fasta(const std::vector<Sequence> &seqs);

/*
  Optimal pairwise alignment costs of every pair of suffixes, computed by
  backward dynamic programming for each sequence pair.
*/
class PairwiseTables {
public:
    PairwiseTables(const std::vector<Sequence> &seqs, const ScoringScheme &scheme);

    std::size_t sequence_count() const { return lengths_.size(); }
    /// Optimal cost of aligning seq i from position pi with seq j from position pj (i < j).
    Cost suffix_cost(std::size_t i, std::size_t j, std::uint32_t pi, std::uint32_t pj) const;

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const;

    std::vector<std::uint32_t> lengths_;
    std::vector<std::vector<Cost>> tables_;
};

/// Sum over all pairs of the optimal suffix alignment cost from state.
Cost pairwise_heuristic(const MsaState &state, const PairwiseTables &tables);

/// Cost of one alignment column where sequence i advances iff bit i of mask is set.
Cost column_cost(const std::vector<Sequence> &seqs, const ScoringScheme &scheme, const MsaState &state,
                 std::uint32_t mask);

/// Sum-of-pairs cost of a gapped alignment ('-' marks a gap); rows must share one length.
Cost alignment_cost(const std::vector<std::string> &rows, const ScoringScheme &scheme);

/*
  The n-dimensional alignment lattice.  StateIds are mixed-radix encodings
  of the position vector.  Successors advance every nonempty subset of the
  unfinished sequences, enumerated in increasing bitmask order.
*/
class MsaProblem final : public SearchSpace {
public:
    MsaProblem(std::vector<Sequence> seqs, ScoringScheme scheme);

    StateId start() const override;
    bool is_goal(StateId s) const override { return s == goal_; }
    void successors(StateId s, std::vector<Successor> &out) const override;
    Cost heuristic(StateId s) const override;
    std::string describe(StateId s) const override;

    StateId encode(const MsaState &state) const;
    MsaState decode(StateId s) const;

    const std::vector<Sequence> &sequences() const { return seqs_; }
    const ScoringScheme &scheme() const { return scheme_; }
    const PairwiseTables &tables() const { return tables_; }
    std::uint64_t lattice_volume() const { return volume_; }

    /// Gapped rows induced by a start-to-goal lattice path.
    std::vector<std::string> alignment(const std::vector<StateId> &path) const;

private:
    std::vector<Sequence> seqs_;
    ScoringScheme scheme_;
    PairwiseTables tables_;
    std::vector<std::uint64_t> radix_;
    std::uint64_t volume_ = 1;
    StateId goal_{};
};

} // namespace anytime::msa

#endif
