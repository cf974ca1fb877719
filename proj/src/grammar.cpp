#include "cftlab/grammar.hpp"

#include <algorithm>

#include "cftlab/errors.hpp"

namespace cftlab {

bool Production::operator<(const Production& other) const {
    if (lhs != other.lhs) return lhs < other.lhs;
    if (rank != other.rank) return rank < other.rank;
    return rhs < other.rhs;
}

std::string Production::to_string() const {
    std::string out = lhs;
    if (rank > 0) {
        out += '(';
        for (int i = 1; i <= rank; ++i) {
            if (i > 1) out += ',';
            out += "x" + std::to_string(i);
        }
        out += ')';
    }
    out += " -> " + rhs.to_string();
    return out;
}

Cftg::Cftg(RankedAlphabet nonterminals, RankedAlphabet terminals, Tree axiom,
           std::vector<Production> productions)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)),
      axiom_(std::move(axiom)), productions_(std::move(productions)) {
    if (!nonterminals_.disjoint_with(terminals_))
        throw AlphabetError("nonterminal and terminal alphabets overlap");
    RankedAlphabet all = combined();
    axiom_.check_ranked(all, 0);
    for (const Production& p : productions_) {
        if (!nonterminals_.contains(p.lhs))
            throw AlphabetError("production lhs '" + p.lhs + "' is not a nonterminal");
        if (nonterminals_.rank(p.lhs) != p.rank)
            throw AlphabetError("production lhs '" + p.lhs + "' has rank " +
                                std::to_string(nonterminals_.rank(p.lhs)) + ", declared " +
                                std::to_string(p.rank));
        p.rhs.check_ranked(all, p.rank);
    }
}

std::vector<int> Cftg::productions_of(const std::string& lhs) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < productions_.size(); ++i)
        if (productions_[i].lhs == lhs) out.push_back(static_cast<int>(i));
    return out;
}

bool Cftg::operator==(const Cftg& other) const {
    return nonterminals_ == other.nonterminals_ && terminals_ == other.terminals_ &&
           axiom_ == other.axiom_ && productions_ == other.productions_;
}

namespace {

void count_vars(const Tree& t, std::vector<int>& counts) {
    if (t.is_variable()) {
        if (t.var_index() <= static_cast<int>(counts.size()) - 1) ++counts[t.var_index()];
        return;
    }
    for (const Tree& c : t.children()) count_vars(c, counts);
}

} // namespace

GrammarClassification classify_grammar(const Cftg& g) {
    GrammarClassification out;
    out.linear = out.nondeleting = true;
    for (const Production& p : g.productions()) {
        std::vector<int> counts(p.rank + 1, 0);
        count_vars(p.rhs, counts);
        for (int i = 1; i <= p.rank; ++i) {
            if (counts[i] > 1) out.linear = false;
            if (counts[i] < 1) out.nondeleting = false;
        }
    }
    out.simple = out.linear && out.nondeleting;
    out.monadic = true;
    out.regular = true;
    for (const auto& [name, rank] : g.nonterminals().entries()) {
        if (rank > 1) out.monadic = false;
        if (rank > 0) out.regular = false;
    }
    return out;
}

std::vector<Position> nonterminal_positions(const Cftg& g, const Tree& form) {
    std::vector<Position> out;
    Position cur;
    auto walk = [&](auto&& self, const Tree& t) -> void {
        if (!t.is_variable()) {
            if (g.is_nonterminal(t.label())) out.push_back(cur);
            for (std::size_t i = 0; i < t.children().size(); ++i) {
                cur.push_back(static_cast<int>(i) + 1);
                self(self, t.children()[i]);
                cur.pop_back();
            }
        }
    };
    walk(walk, form);
    return out;
}

std::vector<Position> outermost_nonterminal_positions(const Cftg& g, const Tree& form) {
    std::vector<Position> out;
    Position cur;
    auto walk = [&](auto&& self, const Tree& t) -> void {
        if (t.is_variable()) return;
        if (g.is_nonterminal(t.label())) {
            out.push_back(cur);
            return;  // nothing below an outermost nonterminal counts
        }
        for (std::size_t i = 0; i < t.children().size(); ++i) {
            cur.push_back(static_cast<int>(i) + 1);
            self(self, t.children()[i]);
            cur.pop_back();
        }
    };
    walk(walk, form);
    return out;
}

bool is_terminal_form(const Cftg& g, const Tree& form) {
    if (form.is_variable()) return true;
    if (g.is_nonterminal(form.label())) return false;
    for (const Tree& c : form.children())
        if (!is_terminal_form(g, c)) return false;
    return true;
}

Tree derive_step(const Cftg& g, const Tree& form, const Position& at, const Production& prod,
                 DeriveMode mode) {
    if (!form.has_position(at))
        throw PositionError("no node at position " + position_to_string(at));
    Tree sub = form.subtree(at);
    if (sub.is_variable() || sub.label() != prod.lhs)
        throw ProductionError("node at " + position_to_string(at) + " is labeled '" +
                              form.label_at(at) + "', production rewrites '" + prod.lhs + "'");
    if (mode == DeriveMode::OI) {
        Position prefix;
        const Tree* cur = &form;
        for (int step : at) {
            if (g.is_nonterminal(cur->label()))
                throw ModeError("OI violated: nonterminal '" + cur->label() +
                                "' above position " + position_to_string(at));
            cur = &cur->children()[step - 1];
            prefix.push_back(step);
        }
    }
    Tree replacement = prod.rhs.substitute(sub.children());
    return form.replace(at, replacement);
}

} // namespace cftlab
