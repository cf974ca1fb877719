#ifndef CFTLAB_GRAMMAR_HPP
#define CFTLAB_GRAMMAR_HPP

#include <set>
#include <string>
#include <vector>

#include "cftlab/tree.hpp"
#include "cftlab/tuple.hpp"

namespace cftlab {

/// A production A(x_1..x_k) -> t with t over N u Sigma u X_k.
struct Production {
    std::string lhs;
    int rank = 0;
    Tree rhs;

    bool operator==(const Production& other) const {
        return lhs == other.lhs && rank == other.rank && rhs == other.rhs;
    }
    bool operator<(const Production& other) const;
    std::string to_string() const;
};

/// A context-free tree grammar (N, Sigma, axiom, P). The axiom is a
/// variable-free tree over N u Sigma.
class Cftg {
public:
    Cftg(RankedAlphabet nonterminals, RankedAlphabet terminals, Tree axiom,
         std::vector<Production> productions);

    const RankedAlphabet& nonterminals() const { return nonterminals_; }
    const RankedAlphabet& terminals() const { return terminals_; }
    const Tree& axiom() const { return axiom_; }
    const std::vector<Production>& productions() const { return productions_; }

    bool is_nonterminal(const std::string& name) const { return nonterminals_.contains(name); }
    RankedAlphabet combined() const { return RankedAlphabet::merged(nonterminals_, terminals_); }

    /// Productions with the given left-hand side, by index into productions().
    std::vector<int> productions_of(const std::string& lhs) const;

    bool operator==(const Cftg& other) const;

private:
    RankedAlphabet nonterminals_, terminals_;
    Tree axiom_;
    std::vector<Production> productions_;
};

struct GrammarClassification {
    bool linear = false;      // every rhs uses each variable at most once
    bool nondeleting = false; // ... at least once
    bool simple = false;      // both
    bool monadic = false;     // nonterminal ranks <= 1
    bool regular = false;     // nonterminal ranks == 0
};
GrammarClassification classify_grammar(const Cftg& g);

/// Nonterminal positions of a sentential form (tree over N u Sigma u X).
std::vector<Position> nonterminal_positions(const Cftg& g, const Tree& form);
/// Those nonterminal positions with no nonterminal strictly above them.
std::vector<Position> outermost_nonterminal_positions(const Cftg& g, const Tree& form);
bool is_terminal_form(const Cftg& g, const Tree& form);

enum class DeriveMode { Unrestricted, OI };

/// One derivation step: rewrites the nonterminal at `at` with the production.
/// In OI mode every proper ancestor of `at` must be terminal.
Tree derive_step(const Cftg& g, const Tree& form, const Position& at, const Production& prod,
                 DeriveMode mode);

struct Limits {
    int max_steps = 12;
    int max_size = 64;       // output filter and pruning bound for forms
    long max_forms = 200000; // explored sentential forms
    long max_trees = 100000;
    bool operator==(const Limits&) const = default;
};

struct EnumerationResult {
    std::set<Tree> trees;
    bool truncated = false;
    long forms_explored = 0;
};

enum class SearchStyle {
    LeftmostOI,      // canonical: one redex per form (complete for terminal trees)
    AnyOI,           // all outermost redexes
    AnyUnrestricted  // all nonterminal redexes
};

/// All terminal trees derivable from the start form within the limits,
/// breadth-first with deduplication. The result set is deterministic; the
/// truncated flag reports whether any search frontier was cut.
EnumerationResult enumerate_bounded(const Cftg& g, const Tree& start, const Limits& limits,
                                    SearchStyle style = SearchStyle::LeftmostOI);
/// Convenience: from the axiom.
EnumerationResult enumerate_bounded(const Cftg& g, const Limits& limits,
                                    SearchStyle style = SearchStyle::LeftmostOI);

/// Tuple-level variant (components derive independently).
struct TupleEnumerationResult {
    std::set<Tuple> tuples;
    bool truncated = false;
};
TupleEnumerationResult enumerate_bounded_tuples(const Cftg& g, const Tuple& start,
                                                const Limits& limits,
                                                SearchStyle style = SearchStyle::LeftmostOI);

/// Sets of tuples reachable in exactly 0, 1, ..., max_steps leftmost-OI
/// steps (terminal or not). Layer k of the result is index k.
std::vector<std::set<Tuple>> derivation_layers(const Cftg& g, const Tuple& start, int max_steps,
                                               long max_forms, bool* truncated = nullptr);

enum class Membership { Yes, NoWithinLimits };

/// Bounded membership: Yes iff a derivation of t from the axiom is found
/// within the limits. For nondeleting grammars the search prunes forms whose
/// terminal content already exceeds t's.
Membership member_bounded(const Cftg& g, const Tree& t, const Limits& limits);

struct ProductivityInfo {
    std::set<std::string> productive;
    std::set<std::string> reachable;
};

/// Least-fixpoint productivity (a nonterminal is productive iff some
/// production's rhs uses only productive nonterminals; exact for nondeleting
/// grammars) and reachability from the axiom.
ProductivityInfo productive_and_reachable(const Cftg& g);
bool is_total(const Cftg& g);

/// Removes productions mentioning non-productive nonterminals and productions
/// of unreachable nonterminals. Refuses deleting grammars (PreconditionError).
Cftg remove_useless(const Cftg& g);

/// Drops nonterminals not reachable from the axiom together with their
/// productions; always language-preserving.
Cftg prune_unreachable(const Cftg& g);

/// Checks the step-counting decomposition of an OI derivation
/// eta . kappa =>^n t: searches for (u~, theta, v) with t = u~ . v,
/// eta =>^k u~ . theta, theta . kappa =>^m v, k + m = n. The claimed
/// derivation is re-verified first (ClaimError if not reproducible).
bool verify_oi_decomposition(const Cftg& g, const Tuple& eta, const Tuple& kappa,
                             const Tuple& t, int n, long max_forms = 200000);

} // namespace cftlab

#endif
