#include "cftlab/dyck.hpp"

#include <algorithm>

#include "cftlab/errors.hpp"

namespace cftlab {

PairedAlphabet::PairedAlphabet(std::vector<std::pair<char, char>> pairs)
    : pairs_(std::move(pairs)) {
    std::string seen;
    for (const auto& [o, c] : pairs_) {
        if (o == c || seen.find(o) != std::string::npos || seen.find(c) != std::string::npos)
            throw AlphabetError("paired alphabet letters must be distinct");
        seen += o;
        seen += c;
    }
    if (pairs_.empty()) throw AlphabetError("empty paired alphabet");
}

PairedAlphabet PairedAlphabet::ab_cd() { return PairedAlphabet({{'a', 'b'}, {'c', 'd'}}); }

bool PairedAlphabet::is_opening(char x) const {
    return std::any_of(pairs_.begin(), pairs_.end(), [x](auto p) { return p.first == x; });
}

bool PairedAlphabet::is_closing(char x) const {
    return std::any_of(pairs_.begin(), pairs_.end(), [x](auto p) { return p.second == x; });
}

char PairedAlphabet::closer_of(char open) const {
    for (const auto& [o, c] : pairs_)
        if (o == open) return c;
    throw AlphabetError(std::string("'") + open + "' is not an opening letter");
}

std::string dyck_reduce(const PairedAlphabet& alphabet, const std::string& word) {
    std::string stack;
    for (char x : word) {
        if (!alphabet.contains(x))
            throw AlphabetError(std::string("letter '") + x + "' outside the paired alphabet");
        if (!stack.empty() && alphabet.is_closing(x) && alphabet.is_opening(stack.back()) &&
            alphabet.closer_of(stack.back()) == x) {
            stack.pop_back();
        } else {
            stack.push_back(x);
        }
    }
    return stack;
}

bool is_dyck(const PairedAlphabet& alphabet, const std::string& word) {
    return dyck_reduce(alphabet, word).empty();
}

bool dyck_congruent(const PairedAlphabet& alphabet, const std::string& u,
                    const std::string& v) {
    return dyck_reduce(alphabet, u) == dyck_reduce(alphabet, v);
}

std::string reversed(const std::string& word) { return {word.rbegin(), word.rend()}; }

std::string exponent_compressed(const std::string& word) {
    std::string out;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (!out.empty()) out += ' ';
        out += word[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace cftlab
