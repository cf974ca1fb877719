#ifndef CFTLAB_DYCK_HPP
#define CFTLAB_DYCK_HPP

#include <string>
#include <utility>
#include <vector>

namespace cftlab {

/// A parenthesis alphabet: ordered (opening, closing) pairs of single-letter
/// symbols. The closing letter acts as right inverse to its opener.
class PairedAlphabet {
public:
    explicit PairedAlphabet(std::vector<std::pair<char, char>> pairs);

    /// The bracket alphabet used throughout the lab: (a,b) and (c,d).
    static PairedAlphabet ab_cd();

    bool is_opening(char x) const;
    bool is_closing(char x) const;
    bool contains(char x) const { return is_opening(x) || is_closing(x); }
    /// Closing partner of an opening letter.
    char closer_of(char open) const;

    const std::vector<std::pair<char, char>>& pairs() const { return pairs_; }

private:
    std::vector<std::pair<char, char>> pairs_;
};

/// Stack reduction: cancels every opener immediately followed by its closer
/// until no such factor remains. The result is the unique irreducible word
/// congruent to w; throws AlphabetError on foreign letters.
std::string dyck_reduce(const PairedAlphabet& alphabet, const std::string& word);

/// True iff the word reduces to the empty word.
bool is_dyck(const PairedAlphabet& alphabet, const std::string& word);

/// Congruence test via reductions.
bool dyck_congruent(const PairedAlphabet& alphabet, const std::string& u,
                    const std::string& v);

std::string reversed(const std::string& word);

/// Compresses runs: "caaac" -> "c a^3 c".
std::string exponent_compressed(const std::string& word);

} // namespace cftlab

#endif
