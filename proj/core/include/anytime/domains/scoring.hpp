#ifndef ANYTIME_DOMAINS_SCORING_HPP
#define ANYTIME_DOMAINS_SCORING_HPP

#include "anytime/core/cost.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace anytime::msa {

/// The twenty standard amino acids in the conventional PAM row order.
inline constexpr std::string_view kAminoAcids = "ARNDCQEGHILKMFPSTWYV";
inline constexpr int kAlphabetSize = 20;

/// Index of an amino-acid letter (case-insensitive), or -1.
int residue_index(char c);

/*
  Similarity matrix plus the linear transform that turns it into costs:
  cost(a, b) = offset - score(a, b), gap = gap_cost, gap against gap = 0.
*/
struct ScoringScheme {
    std::array<std::array<int, kAlphabetSize>, kAlphabetSize> score{};
    int offset = 17;
    Cost gap_cost = Cost(8);

    Cost substitution(int a, int b) const {
        return Cost(static_cast<std::uint64_t>(offset - score[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));
    }

    /// Dayhoff PAM-250 with offset 17 (the largest score) and gap cost 8.
    static ScoringScheme pam250();
};

/*
  Scheme file:
      offset <int>
      gap <int>
      <20 column letters>
      <letter> <20 scores>   (x20)
  '#' starts a comment.  Rejects asymmetric matrices and offsets that would
  produce negative costs.
*/
ScoringScheme load_scheme(std::string_view text);
std::string format_scheme(const ScoringScheme &scheme);

} // namespace anytime::msa

#endif
