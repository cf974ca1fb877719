#ifndef CFTLAB_TREE_HPP
#define CFTLAB_TREE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cftlab/alphabet.hpp"

namespace cftlab {

/// Gorn address: sequence of 1-based child indices; empty = root.
using Position = std::vector<int>;

std::string position_to_string(const Position& p);

/// An immutable ranked tree. A node is either a variable x_i (i >= 1) or a
/// named symbol with children. Copies are cheap (shared structure); all
/// editing operations return fresh trees.
class Tree {
public:
    /// Variable x_i.
    static Tree variable(int index);
    /// Symbol node; rank is fixed by the child count.
    static Tree make(std::string label, std::vector<Tree> children = {});

    Tree() : Tree(variable(1)) {}

    bool is_variable() const { return node_->var != 0; }
    int var_index() const { return node_->var; }
    const std::string& label() const { return node_->label; }
    const std::vector<Tree>& children() const { return node_->children; }

    /// Number of symbol occurrences |t| (variables do not count).
    int size() const { return node_->size; }
    /// Largest variable index occurring in the tree, 0 if none.
    int max_variable() const { return node_->max_var; }
    std::size_t hash() const { return node_->hash; }

    bool operator==(const Tree& other) const;
    bool operator!=(const Tree& other) const { return !(*this == other); }
    bool operator<(const Tree& other) const { return compare(other) < 0; }
    int compare(const Tree& other) const;

    /// All positions in preorder (symbol and variable nodes alike).
    std::vector<Position> positions() const;
    bool has_position(const Position& p) const;
    /// Subtree at p; throws PositionError if invalid.
    Tree subtree(const Position& p) const;
    /// Label at p ("x<i>" for variables).
    std::string label_at(const Position& p) const;
    /// Replace the subtree at p by s.
    Tree replace(const Position& p, const Tree& s) const;

    /// Number of occurrences of the symbol with the given name.
    int count_symbol(const std::string& name) const;

    /// Simultaneous substitution of args[i-1] for x_i. Variables above
    /// args.size() are an IndexError.
    Tree substitute(const std::vector<Tree>& args) const;

    /// Checks symbol ranks against the alphabet and that all variables lie in
    /// [1, max_var]; throws AlphabetError / IndexError.
    void check_ranked(const RankedAlphabet& alphabet, int max_var) const;
    /// True iff every symbol is from the alphabet (variables allowed).
    bool over_alphabet(const RankedAlphabet& alphabet) const;

    std::string to_string() const;
    static Tree parse(const std::string& text);

private:
    struct Node {
        int var = 0;
        std::string label;
        std::vector<Tree> children;
        std::size_t hash = 0;
        int size = 0;
        int max_var = 0;
    };
    explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct TreeHash {
    std::size_t operator()(const Tree& t) const { return t.hash(); }
};

/// Monadic tree <-> word conversions. A chain is a path of unary symbols
/// ending in a leaf (nullary symbol or variable). The word reads root to leaf.
bool is_chain(const Tree& t);
/// Splits a chain into its unary word and the leaf; throws ScopeError if the
/// tree is not a chain.
std::pair<std::string, Tree> chain_to_word(const Tree& t);
/// Builds the chain word[0](word[1](...(leaf))) from single-letter symbols.
Tree word_to_chain(const std::string& word, const Tree& leaf);

} // namespace cftlab

#endif
