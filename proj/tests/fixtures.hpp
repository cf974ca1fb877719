#ifndef CFTLAB_TESTS_FIXTURES_HPP
#define CFTLAB_TESTS_FIXTURES_HPP

#include <random>
#include <string>

#include "cftlab/grammar.hpp"
#include "cftlab/grammar_io.hpp"
#include "cftlab/tree.hpp"

namespace fixtures {

using namespace cftlab;

inline const char* kGexText =
    "terminals delta1/2 delta2/2 #/0 a/1 b/1 c/1 d/1\n"
    "nonterminals A/3\n"
    "axiom delta1(#,A(c(#),d(#),delta2(#,#)))\n"
    "rule A(x1,x2,x3) -> A(a(x1),b(x2),x3)\n"
    "rule A(x1,x2,x3) -> A(c(c(x1)),d(#),A(c(#),d(d(x2)),x3))\n"
    "rule A(x1,x2,x3) -> delta2(c(x1),delta1(d(x2),x3))\n";

inline Cftg gex() { return parse_grammar(kGexText); }

inline const char* kHexText =
    "hom h_ex\n"
    "source sigma/3 #/0 a/1 b/1 c/1 d/1\n"
    "target delta1/2 delta2/2 #/0 a/1 b/1 c/1 d/1\n"
    "map sigma -> delta1(x1,delta2(x2,x3))\n"
    "map # -> #\n"
    "map a -> a(x1)\n"
    "map b -> b(x1)\n"
    "map c -> c(x1)\n"
    "map d -> d(x1)\n";

/// Chain word over # leaf: chain("cac") = c(a(c(#))).
inline Tree chain(const std::string& word) {
    return word_to_chain(word, Tree::make("#"));
}

/// The tree from the worked example: sigma spine with chains
/// u1 = caccaac, v1 = dbd, u2 = caac, v2 = dbbddbbd.
inline Tree example_preimage_tree() {
    return Tree::make(
        "sigma",
        {Tree::make("#"), chain("caccaac"),
         Tree::make("sigma", {chain("dbd"), chain("caac"),
                              Tree::make("sigma", {chain("dbbddbbd"), Tree::make("#"),
                                                   Tree::make("#")})})});
}

/// Its image: the final sentential form of the worked derivation.
inline Tree example_image_tree() {
    Tree t = Tree::make("delta2", {Tree::make("#"), Tree::make("#")});
    t = Tree::make("delta1", {chain("dbbddbbd"), t});
    t = Tree::make("delta2", {chain("caac"), t});
    t = Tree::make("delta1", {chain("dbd"), t});
    t = Tree::make("delta2", {chain("caccaac"), t});
    return Tree::make("delta1", {Tree::make("#"), t});
}

/// Seeded random tree over an alphabet with variables in X_k.
inline Tree random_tree(std::mt19937& rng, const RankedAlphabet& alphabet, int k,
                        int max_depth) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1 + k);
    while (true) {
        int choice = pick(rng);
        if (choice >= static_cast<int>(alphabet.size())) {
            if (k == 0) continue;
            return Tree::variable(choice - static_cast<int>(alphabet.size()) + 1);
        }
        const auto& [name, rank] = alphabet.entries()[choice];
        if (max_depth <= 1 && rank > 0) continue;
        std::vector<Tree> kids;
        for (int i = 0; i < rank; ++i) kids.push_back(random_tree(rng, alphabet, k, max_depth - 1));
        return Tree::make(name, std::move(kids));
    }
}

} // namespace fixtures

#endif
