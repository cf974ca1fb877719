#include "cftlab/alphabet.hpp"
#include "cftlab/errors.hpp"

namespace cftlab {

RankedAlphabet::RankedAlphabet(std::initializer_list<std::pair<std::string, int>> entries) {
    for (const auto& [name, rank] : entries) add(name, rank);
}

void RankedAlphabet::add(const std::string& name, int rank) {
    if (name.empty()) throw AlphabetError("empty symbol name");
    if (rank < 0) throw AlphabetError("negative rank for symbol '" + name + "'");
    auto it = index_.find(name);
    if (it != index_.end()) {
        if (entries_[it->second].second != rank)
            throw AlphabetError("symbol '" + name + "' redeclared with rank " +
                                std::to_string(rank) + " (was " +
                                std::to_string(entries_[it->second].second) + ")");
        return;
    }
    index_.emplace(name, entries_.size());
    entries_.emplace_back(name, rank);
}

bool RankedAlphabet::contains(const std::string& name) const {
    return index_.count(name) != 0;
}

int RankedAlphabet::rank(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw AlphabetError("unknown symbol '" + name + "'");
    return entries_[it->second].second;
}

std::vector<std::string> RankedAlphabet::symbols_of_rank(int rank) const {
    std::vector<std::string> out;
    for (const auto& [name, r] : entries_)
        if (r == rank) out.push_back(name);
    return out;
}

bool RankedAlphabet::disjoint_with(const RankedAlphabet& other) const {
    for (const auto& [name, r] : entries_)
        if (other.contains(name)) return false;
    return true;
}

RankedAlphabet RankedAlphabet::merged(const RankedAlphabet& a, const RankedAlphabet& b) {
    RankedAlphabet out = a;
    for (const auto& [name, r] : b.entries()) out.add(name, r);
    return out;
}

bool RankedAlphabet::operator==(const RankedAlphabet& other) const {
    return entries_ == other.entries_;
}

} // namespace cftlab
