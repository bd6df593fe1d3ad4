#include "anytime/domains/scoring.hpp"

#include "anytime/core/errors.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <vector>

namespace anytime::msa {

namespace {

// Dayhoff PAM-250 log-odds scores, rows and columns in kAminoAcids order.
constexpr int kPam250[kAlphabetSize][kAlphabetSize] = {
    {2, -2, 0, 0, -2, 0, 0, 1, -1, -1, -2, -1, -1, -3, 1, 1, 1, -6, -3, 0},
    {-2, 6, 0, -1, -4, 1, -1, -3, 2, -2, -3, 3, 0, -4, 0, 0, -1, 2, -4, -2},
    {0, 0, 2, 2, -4, 1, 1, 0, 2, -2, -3, 1, -2, -3, 0, 1, 0, -4, -2, -2},
    {0, -1, 2, 4, -5, 2, 3, 1, 1, -2, -4, 0, -3, -6, -1, 0, 0, -7, -4, -2},
    {-2, -4, -4, -5, 12, -5, -5, -3, -3, -2, -6, -5, -5, -4, -3, 0, -2, -8, 0, -2},
    {0, 1, 1, 2, -5, 4, 2, -1, 3, -2, -2, 1, -1, -5, 0, -1, -1, -5, -4, -2},
    {0, -1, 1, 3, -5, 2, 4, 0, 1, -2, -3, 0, -2, -5, -1, 0, 0, -7, -4, -2},
    {1, -3, 0, 1, -3, -1, 0, 5, -2, -3, -4, -2, -3, -5, 0, 1, 0, -7, -5, -1},
    {-1, 2, 2, 1, -3, 3, 1, -2, 6, -2, -2, 0, -2, -2, 0, -1, -1, -3, 0, -2},
    {-1, -2, -2, -2, -2, -2, -2, -3, -2, 5, 2, -2, 2, 1, -2, -1, 0, -5, -1, 4},
    {-2, -3, -3, -4, -6, -2, -3, -4, -2, 2, 6, -3, 4, 2, -3, -3, -2, -2, -1, 2},
    {-1, 3, 1, 0, -5, 1, 0, -2, 0, -2, -3, 5, 0, -5, -1, 0, 0, -3, -4, -2},
    {-1, 0, -2, -3, -5, -1, -2, -3, -2, 2, 4, 0, 6, 0, -2, -2, -1, -4, -2, 2},
    {-3, -4, -3, -6, -4, -5, -5, -5, -2, 1, 2, -5, 0, 9, -5, -3, -3, 0, 7, -1},
    {1, 0, 0, -1, -3, 0, -1, 0, 0, -2, -3, -1, -2, -5, 6, 1, 0, -6, -5, -1},
    {1, 0, 1, 0, 0, -1, 0, 1, -1, -1, -3, 0, -2, -3, 1, 2, 1, -2, -3, -1},
    {1, -1, 0, 0, -2, -1, 0, 0, -1, 0, -2, 0, -1, -3, 0, 1, 3, -5, -3, 0},
    {-6, 2, -4, -7, -8, -5, -7, -7, -3, -5, -2, -3, -4, 0, -6, -2, -5, 17, 0, -6},
    {-3, -4, -2, -4, 0, -4, -4, -5, 0, -1, -1, -4, -2, 7, -5, -3, -3, 0, 10, -2},
    {0, -2, -2, -2, -2, -2, -2, -1, -2, 4, 2, -2, 2, -1, -1, -1, 0, -6, -2, 4},
};

void validate(const ScoringScheme &s) {
    for (int a = 0; a < kAlphabetSize; ++a)
        for (int b = 0; b < kAlphabetSize; ++b) {
            const int sab = s.score[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (sab != s.score[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                throw ValidationError(std::string("substitution matrix is not symmetric at ") + kAminoAcids[static_cast<std::size_t>(a)] +
                                      kAminoAcids[static_cast<std::size_t>(b)]);
            if (sab > s.offset)
                throw ValidationError("offset " + std::to_string(s.offset) + " is below score " + std::to_string(sab) +
                                      " and would give a negative cost");
        }
}

} // namespace

int residue_index(char c) {
    const auto pos = kAminoAcids.find(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

ScoringScheme ScoringScheme::pam250() {
    ScoringScheme s;
    for (std::size_t a = 0; a < kAlphabetSize; ++a)
        for (std::size_t b = 0; b < kAlphabetSize; ++b)
            s.score[a][b] = kPam250[a][b];
    s.offset = 17;
    s.gap_cost = Cost(8);
    validate(s);
    return s;
}

ScoringScheme load_scheme(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    ScoringScheme s;
    bool have_offset = false;
    bool have_gap = false;
    std::vector<int> columns;
    std::vector<bool> row_seen(kAlphabetSize, false);
    int rows = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head))
            continue;
        auto read_int = [&](const std::string &what) {
            long long v = 0;
            if (!(fields >> v))
                throw ParseError(n, "expected an integer after '" + what + "'");
            return v;
        };
        if (head == "offset") {
            s.offset = static_cast<int>(read_int(head));
            have_offset = true;
        } else if (head == "gap") {
            const auto g = read_int(head);
            if (g < 0)
                throw ValidationError("gap cost must be non-negative");
            s.gap_cost = Cost(static_cast<std::uint64_t>(g));
            have_gap = true;
        } else if (columns.empty()) {
            std::string tok = head;
            do {
                if (tok.size() != 1 || residue_index(tok[0]) < 0)
                    throw ParseError(n, "unknown residue '" + tok + "' in column header");
                columns.push_back(residue_index(tok[0]));
            } while (fields >> tok);
            if (columns.size() != kAlphabetSize)
                throw ParseError(n, "column header must list all 20 amino acids");
        } else {
            if (head.size() != 1 || residue_index(head[0]) < 0)
                throw ParseError(n, "unknown residue '" + head + "' at start of row");
            const auto r = static_cast<std::size_t>(residue_index(head[0]));
            if (row_seen[r])
                throw ParseError(n, "duplicate row for residue '" + head + "'");
            row_seen[r] = true;
            for (int c : columns) {
                int v = 0;
                if (!(fields >> v))
                    throw ParseError(n, "row '" + head + "' has fewer than 20 scores");
                s.score[r][static_cast<std::size_t>(c)] = v;
            }
            std::string extra;
            if (fields >> extra)
                throw ParseError(n, "row '" + head + "' has more than 20 scores");
            ++rows;
        }
    }
    if (!have_offset || !have_gap)
        throw ParseError(n, "scheme must declare both 'offset' and 'gap'");
    if (rows != kAlphabetSize)
        throw ParseError(n, "expected 20 matrix rows, found " + std::to_string(rows));
    validate(s);
    return s;
}

std::string format_scheme(const ScoringScheme &scheme) {
    std::ostringstream out;
    out << "# cost(a,b) = offset - score(a,b); gap against residue = gap; gap against gap = 0\n";
    out << "offset " << scheme.offset << '\n';
    out << "gap " << scheme.gap_cost << '\n';
    out << ' ';
    for (char c : kAminoAcids)
        out << std::setw(4) << c;
    out << '\n';
    for (std::size_t a = 0; a < kAlphabetSize; ++a) {
        out << kAminoAcids[a];
        for (std::size_t b = 0; b < kAlphabetSize; ++b)
            out << std::setw(4) << scheme.score[a][b];
        out << '\n';
    }
    return out.str();
}

} // namespace anytime::msa
