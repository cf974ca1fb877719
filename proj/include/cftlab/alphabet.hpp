#ifndef CFTLAB_ALPHABET_HPP
#define CFTLAB_ALPHABET_HPP

#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cftlab {

/// A finite set of symbol names with ranks. Insertion order is preserved and
/// is the canonical serialization order.
class RankedAlphabet {
public:
    RankedAlphabet() = default;
    RankedAlphabet(std::initializer_list<std::pair<std::string, int>> entries);

    void add(const std::string& name, int rank);
    bool contains(const std::string& name) const;
    /// Rank of a symbol; throws AlphabetError if absent.
    int rank(const std::string& name) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const std::vector<std::pair<std::string, int>>& entries() const { return entries_; }

    /// All symbols of the given rank, in insertion order.
    std::vector<std::string> symbols_of_rank(int rank) const;

    bool disjoint_with(const RankedAlphabet& other) const;
    /// Union of two alphabets; a name present in both must agree on rank.
    static RankedAlphabet merged(const RankedAlphabet& a, const RankedAlphabet& b);

    bool operator==(const RankedAlphabet& other) const;

private:
    std::vector<std::pair<std::string, int>> entries_;
    std::unordered_map<std::string, int> index_;
};

} // namespace cftlab

#endif
