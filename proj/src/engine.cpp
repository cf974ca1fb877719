#include <deque>
#include <unordered_set>

#include "cftlab/errors.hpp"
#include "cftlab/grammar.hpp"

namespace cftlab {

namespace {

int tuple_size(const Tuple& t) {
    int s = 0;
    for (const Tree& c : t.components()) s += c.size();
    return s;
}

bool tuple_terminal(const Cftg& g, const Tuple& t) {
    for (const Tree& c : t.components())
        if (!is_terminal_form(g, c)) return false;
    return true;
}

/// Redex positions of a tuple form as (component, position) pairs.
std::vector<std::pair<int, Position>> redexes(const Cftg& g, const Tuple& form,
                                              SearchStyle style) {
    std::vector<std::pair<int, Position>> out;
    for (int i = 1; i <= form.arity(); ++i) {
        const Tree& comp = form.component(i);
        std::vector<Position> ps;
        switch (style) {
            case SearchStyle::AnyUnrestricted:
                ps = nonterminal_positions(g, comp);
                break;
            case SearchStyle::AnyOI:
            case SearchStyle::LeftmostOI:
                ps = outermost_nonterminal_positions(g, comp);
                break;
        }
        if (style == SearchStyle::LeftmostOI && !ps.empty()) {
            out.emplace_back(i, ps.front());
            return out;  // single canonical redex
        }
        for (Position& p : ps) out.emplace_back(i, std::move(p));
    }
    return out;
}

std::vector<Tuple> successors(const Cftg& g, const Tuple& form, SearchStyle style) {
    std::vector<Tuple> out;
    for (const auto& [ci, pos] : redexes(g, form, style)) {
        const Tree& comp = form.component(ci);
        const std::string nt = comp.label_at(pos);
        for (int pi : g.productions_of(nt)) {
            Tree next = derive_step(g, comp, pos, g.productions()[pi],
                                    style == SearchStyle::AnyUnrestricted
                                        ? DeriveMode::Unrestricted
                                        : DeriveMode::OI);
            std::vector<Tree> comps = form.components();
            comps[ci - 1] = next;
            out.emplace_back(std::move(comps), form.bound());
        }
    }
    return out;
}

} // namespace

TupleEnumerationResult enumerate_bounded_tuples(const Cftg& g, const Tuple& start,
                                                const Limits& limits, SearchStyle style) {
    TupleEnumerationResult res;
    std::unordered_set<Tuple, TupleHash> visited;
    std::deque<Tuple> frontier;
    long collected = 0;

    auto admit = [&](const Tuple& t, bool initial) {
        if (tuple_size(t) > limits.max_size) {
            res.truncated = true;
            return;
        }
        if (visited.count(t)) {
            if (!initial) res.truncated = true;  // revisit: completeness no longer claimed
            return;
        }
        if (static_cast<long>(visited.size()) >= limits.max_forms) {
            res.truncated = true;
            return;
        }
        visited.insert(t);
        if (tuple_terminal(g, t)) {
            if (collected >= limits.max_trees) {
                res.truncated = true;
                return;
            }
            res.tuples.insert(t);
            ++collected;
            return;  // terminal forms have no successors
        }
        frontier.push_back(t);
    };

    admit(start, true);
    for (int step = 0; step < limits.max_steps && !frontier.empty(); ++step) {
        std::deque<Tuple> layer;
        layer.swap(frontier);
        for (const Tuple& form : layer)
            for (Tuple& next : successors(g, form, style)) admit(next, false);
    }
    if (!frontier.empty()) res.truncated = true;  // live forms when steps ran out
    return res;
}

EnumerationResult enumerate_bounded(const Cftg& g, const Tree& start, const Limits& limits,
                                    SearchStyle style) {
    TupleEnumerationResult raw =
        enumerate_bounded_tuples(g, Tuple(start, start.max_variable()), limits, style);
    EnumerationResult res;
    res.truncated = raw.truncated;
    for (const Tuple& t : raw.tuples) res.trees.insert(t.component(1));
    return res;
}

EnumerationResult enumerate_bounded(const Cftg& g, const Limits& limits, SearchStyle style) {
    return enumerate_bounded(g, g.axiom(), limits, style);
}

std::vector<std::set<Tuple>> derivation_layers(const Cftg& g, const Tuple& start, int max_steps,
                                               long max_forms, bool* truncated) {
    std::vector<std::set<Tuple>> layers;
    layers.push_back({start});
    long total = 1;
    bool cut = false;
    for (int k = 0; k < max_steps; ++k) {
        std::set<Tuple> next;
        for (const Tuple& form : layers[k]) {
            if (tuple_terminal(g, form)) continue;
            for (Tuple& s : successors(g, form, SearchStyle::LeftmostOI)) {
                if (total >= max_forms) { cut = true; break; }
                if (next.insert(std::move(s)).second) ++total;
            }
            if (cut) break;
        }
        layers.push_back(std::move(next));
        if (cut) break;
    }
    while (static_cast<int>(layers.size()) <= max_steps) layers.push_back({});
    if (truncated) *truncated = cut;
    return layers;
}

Membership member_bounded(const Cftg& g, const Tree& t, const Limits& limits) {
    if (!is_terminal_form(g, t) || t.max_variable() != 0)
        throw PreconditionError("membership target must be a variable-free terminal tree");
    const bool prune = classify_grammar(g).nondeleting;
    std::vector<std::pair<std::string, int>> targets;
    for (const auto& [sym, rank] : g.terminals().entries())
        targets.emplace_back(sym, t.count_symbol(sym));

    auto excessive = [&](const Tree& form) {
        if (!prune) return false;
        for (const auto& [sym, cnt] : targets)
            if (form.count_symbol(sym) > cnt) return true;
        return false;
    };

    std::unordered_set<Tree, TreeHash> visited;
    std::deque<Tree> frontier;
    auto admit = [&](const Tree& form) {
        if (form.size() > limits.max_size + t.size()) return;
        if (excessive(form)) return;
        if (visited.count(form)) return;
        if (static_cast<long>(visited.size()) >= limits.max_forms) return;
        visited.insert(form);
        frontier.push_back(form);
    };
    admit(g.axiom());
    for (int step = 0; step <= limits.max_steps && !frontier.empty(); ++step) {
        std::deque<Tree> layer;
        layer.swap(frontier);
        for (const Tree& form : layer) {
            if (form == t) return Membership::Yes;
            if (step == limits.max_steps) continue;
            if (is_terminal_form(g, form)) continue;
            for (const auto& [ci, pos] :
                 redexes(g, Tuple(form, 0), SearchStyle::LeftmostOI)) {
                const std::string nt = form.label_at(pos);
                for (int pi : g.productions_of(nt))
                    admit(derive_step(g, form, pos, g.productions()[pi], DeriveMode::OI));
            }
        }
    }
    return Membership::NoWithinLimits;
}

namespace {

void collect_nts(const Cftg& g, const Tree& t, std::set<std::string>& out) {
    if (t.is_variable()) return;
    if (g.is_nonterminal(t.label())) out.insert(t.label());
    for (const Tree& c : t.children()) collect_nts(g, c, out);
}

} // namespace

ProductivityInfo productive_and_reachable(const Cftg& g) {
    ProductivityInfo info;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions()) {
            if (info.productive.count(p.lhs)) continue;
            std::set<std::string> used;
            collect_nts(g, p.rhs, used);
            bool ok = true;
            for (const std::string& nt : used)
                if (!info.productive.count(nt)) { ok = false; break; }
            if (ok) {
                info.productive.insert(p.lhs);
                changed = true;
            }
        }
    }
    collect_nts(g, g.axiom(), info.reachable);
    changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions()) {
            if (!info.reachable.count(p.lhs)) continue;
            std::set<std::string> used;
            collect_nts(g, p.rhs, used);
            for (const std::string& nt : used)
                if (info.reachable.insert(nt).second) changed = true;
        }
    }
    return info;
}

bool is_total(const Cftg& g) {
    ProductivityInfo info = productive_and_reachable(g);
    for (const auto& [name, rank] : g.nonterminals().entries())
        if (!info.productive.count(name)) return false;
    return true;
}

namespace {

Cftg rebuild_with(const Cftg& g, std::vector<Production> kept) {
    RankedAlphabet n;
    std::set<std::string> referenced;
    collect_nts(g, g.axiom(), referenced);
    for (const Production& p : kept) {
        referenced.insert(p.lhs);
        collect_nts(g, p.rhs, referenced);
    }
    for (const auto& [name, rank] : g.nonterminals().entries())
        if (referenced.count(name)) n.add(name, rank);
    if (n.empty())
        n.add(g.nonterminals().entries().front().first,
              g.nonterminals().entries().front().second);
    return Cftg(std::move(n), g.terminals(), g.axiom(), std::move(kept));
}

} // namespace

Cftg remove_useless(const Cftg& g) {
    if (!classify_grammar(g).nondeleting)
        throw PreconditionError("remove_useless is only sound for nondeleting grammars");
    ProductivityInfo info = productive_and_reachable(g);
    std::vector<Production> kept;
    for (const Production& p : g.productions()) {
        std::set<std::string> used;
        collect_nts(g, p.rhs, used);
        used.insert(p.lhs);
        bool ok = true;
        for (const std::string& nt : used)
            if (!info.productive.count(nt)) { ok = false; break; }
        if (ok) kept.push_back(p);
    }
    // reachability on the pruned production set
    Cftg pruned = rebuild_with(g, std::move(kept));
    return prune_unreachable(pruned);
}

Cftg prune_unreachable(const Cftg& g) {
    ProductivityInfo info = productive_and_reachable(g);
    std::vector<Production> kept;
    for (const Production& p : g.productions())
        if (info.reachable.count(p.lhs)) kept.push_back(p);
    return rebuild_with(g, std::move(kept));
}

bool verify_oi_decomposition(const Cftg& g, const Tuple& eta, const Tuple& kappa,
                             const Tuple& t, int n, long max_forms) {
    if (eta.bound() != kappa.arity())
        throw DimensionError("eta's bound must equal kappa's arity");
    if (!tuple_terminal(g, t))
        throw PreconditionError("decomposition target must be terminal");

    // reproduce the claim eta . kappa =>^n t
    Tuple start = compose(eta, kappa);
    bool cut = false;
    auto layers = derivation_layers(g, start, n, max_forms, &cut);
    if (!layers[n].count(t)) {
        if (cut) throw ClaimError("claimed derivation not reproducible within the form budget");
        throw ClaimError("claimed derivation eta.kappa =>^" + std::to_string(n) +
                         " t does not exist");
    }

    auto eta_layers = derivation_layers(g, eta, n, max_forms, &cut);
    for (int k = 0; k <= n; ++k) {
        int m = n - k;
        for (const Tuple& w : eta_layers[k]) {
            if (!tuple_terminal(g, w)) continue;
            auto [u, theta] = lin(w);
            Tuple mid = compose(theta, kappa);
            auto mid_layers = derivation_layers(g, mid, m, max_forms, &cut);
            for (const Tuple& v : mid_layers[m]) {
                if (!tuple_terminal(g, v)) continue;
                if (compose(u, v) == t) return true;
            }
        }
    }
    return false;
}

} // namespace cftlab
