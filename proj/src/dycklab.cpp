#include "cftlab/dycklab.hpp"

#include <algorithm>

#include "cftlab/errors.hpp"

namespace cftlab {

Fixtures build_fixtures() {
    RankedAlphabet delta{{"delta1", 2}, {"delta2", 2}, {"#", 0},
                         {"a", 1},      {"b", 1},      {"c", 1},      {"d", 1}};
    RankedAlphabet sigma{{"sigma", 3}, {"#", 0}, {"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
    RankedAlphabet n{{"A", 3}};

    auto hash = Tree::make("#");
    Tree axiom = Tree::parse("delta1(#,A(c(#),d(#),delta2(#,#)))");
    std::vector<Production> prods = {
        {"A", 3, Tree::parse("A(a(x1),b(x2),x3)")},
        {"A", 3, Tree::parse("A(c(c(x1)),d(#),A(c(#),d(d(x2)),x3))")},
        {"A", 3, Tree::parse("delta2(c(x1),delta1(d(x2),x3))")},
    };
    Cftg gex(n, delta, axiom, std::move(prods));

    std::map<std::string, Tree> images;
    images.emplace("sigma", Tree::parse("delta1(x1,delta2(x2,x3))"));
    for (const char* sym : {"#", "a", "b", "c", "d"}) {
        if (std::string(sym) == "#")
            images.emplace(sym, hash);
        else
            images.emplace(sym, Tree::make(sym, {Tree::variable(1)}));
    }
    TreeHomomorphism hex("h_ex", sigma, delta, std::move(images));
    return Fixtures{std::move(gex), std::move(hex)};
}

std::string DyckParams::alpha(int i) const {
    return "c" + std::string(static_cast<std::size_t>(i) * e, 'a') + "c";
}

std::string DyckParams::beta(int i) const {
    return "d" + std::string(static_cast<std::size_t>(i) * e, 'b') + "d";
}

namespace {

[[noreturn]] void shape_error(const std::string& what) {
    throw ScopeError("shape violation: " + what);
}

/// Word of a chain over # (root to leaf); nullopt-like failure via throw.
std::string chain_word(const Tree& t) {
    auto [word, leaf] = chain_to_word(t);
    if (leaf.is_variable() || leaf.label() != "#")
        shape_error("chain does not end in #");
    return word;
}

bool block_shaped(const std::string& word, char open, char inner) {
    // (open inner* open)+
    std::size_t i = 0;
    if (word.empty()) return false;
    while (i < word.size()) {
        if (word[i] != open) return false;
        ++i;
        while (i < word.size() && word[i] == inner) ++i;
        if (i >= word.size() || word[i] != open) return false;
        ++i;
    }
    return true;
}

struct SpineNode {
    std::string left, right;  // chain words; empty allowed where the shape says so
};

/// Decomposes a spine tree into its nodes; enforces left chains in (db*d)+,
/// right chains in (ca*c)+, with the first left and the last right possibly
/// empty. The tail must be # or a variable.
std::vector<SpineNode> spine_nodes(const Tree& t) {
    std::vector<SpineNode> nodes;
    const Tree* cur = &t;
    while (true) {
        if (cur->is_variable()) break;
        if (cur->label() == "#") break;
        if (cur->label() != "sigma" || cur->children().size() != 3)
            shape_error("expected a sigma spine node, got '" + cur->label() + "'");
        SpineNode n;
        const Tree& l = cur->children()[0];
        const Tree& r = cur->children()[1];
        if (!(l.is_variable()) && l.label() == "#" && l.children().empty())
            n.left = "";
        else
            n.left = chain_word(l);
        if (!(r.is_variable()) && r.label() == "#" && r.children().empty())
            n.right = "";
        else
            n.right = chain_word(r);
        nodes.push_back(std::move(n));
        cur = &cur->children()[2];
    }
    if (nodes.empty()) shape_error("no sigma node");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const SpineNode& n = nodes[k];
        if (n.left.empty()) {
            if (k != 0) shape_error("inner left chain empty");
        } else if (!block_shaped(n.left, 'd', 'b')) {
            shape_error("left chain '" + n.left + "' not in (db*d)+");
        }
        if (n.right.empty()) {
            if (k + 1 != nodes.size()) shape_error("inner right chain empty");
        } else if (!block_shaped(n.right, 'c', 'a')) {
            shape_error("right chain '" + n.right + "' not in (ca*c)+");
        }
    }
    return nodes;
}

} // namespace

std::string iota(const Tree& t) {
    std::string out;
    for (const SpineNode& n : spine_nodes(t)) {
        out += n.left;
        out += reversed(n.right);
    }
    return out;
}

std::string iota_sentential(const Tree& form) {
    if (form.is_variable()) return "";
    if (form.label() == "#") return "";
    if (form.label() == "delta1" && form.children().size() == 2)
        return chain_word(form.children()[0]) + iota_sentential(form.children()[1]);
    if (form.label() == "delta2" && form.children().size() == 2)
        return reversed(chain_word(form.children()[0])) + iota_sentential(form.children()[1]);
    if (form.label() == "A" && form.children().size() == 3)
        return chain_word(form.children()[0]) + reversed(chain_word(form.children()[1])) +
               iota_sentential(form.children()[2]);
    shape_error("unexpected node '" + form.label() + "' in sentential form");
}

MembershipReport membership_props(const Tree& t, const Limits& limits) {
    MembershipReport rep;
    Fixtures fx = build_fixtures();
    try {
        auto nodes = spine_nodes(t);
        rep.shape_ok = t.max_variable() == 0 && nodes.size() >= 2 && nodes.front().left.empty() &&
                       nodes.back().right.empty();
        for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
            if (nodes[k].right.empty()) rep.shape_ok = false;
        for (std::size_t k = 1; k < nodes.size(); ++k)
            if (nodes[k].left.empty()) rep.shape_ok = false;
    } catch (const ScopeError&) {
        rep.shape_ok = false;
    }
    int ns = t.count_symbol("sigma");
    rep.counts_ok = t.count_symbol("c") == 4 * ns - 6 && t.count_symbol("d") == 4 * ns - 6;
    if (rep.shape_ok) {
        rep.dyck_ok = is_dyck(PairedAlphabet::ab_cd(), iota(t));
    }
    if (t.max_variable() == 0 && t.over_alphabet(fx.hex.source()))
        rep.gex_member = member_bounded(fx.gex, apply_hom(fx.hex, t), limits);
    return rep;
}

bool sentential_counts_ok(const Tree& form) {
    int c = form.count_symbol("c"), d = form.count_symbol("d");
    int rhs = 2 * form.count_symbol("delta1") + 2 * form.count_symbol("delta2") +
              3 * form.count_symbol("A") - 6;
    return c == rhs && d == rhs;
}

namespace {

void find_variables(const Tree& t, Position& cur, std::vector<Position>& out) {
    if (t.is_variable()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        cur.push_back(static_cast<int>(i) + 1);
        find_variables(t.children()[i], cur, out);
        cur.pop_back();
    }
}

/// Enumerates all words with the given multiset of letters.
void arrangements(std::string prefix, int n1, char c1, int n2, char c2,
                  std::vector<std::string>& out) {
    if (n1 == 0 && n2 == 0) {
        out.push_back(std::move(prefix));
        return;
    }
    if (n1 > 0) arrangements(prefix + c1, n1 - 1, c1, n2, c2, out);
    if (n2 > 0) arrangements(prefix + c2, n1, c1, n2 - 1, c2, out);
}

} // namespace

Tree complete_chain(const Tree& holed) {
    std::vector<Position> holes;
    Position cur;
    find_variables(holed, cur, holes);
    if (holes.size() != 1)
        throw PreconditionError("expected exactly one hole, found " +
                                std::to_string(holes.size()));
    const Position& at = holes[0];

    // the hole must hang off a chain or a chain slot, not the spine tail
    char side = 0;  // 'a', 'b', or 0 for undetermined
    for (std::size_t k = 0; k < at.size(); ++k) {
        Position prefix(at.begin(), at.begin() + k);
        Tree node = holed.subtree(prefix);
        if (node.label() == "sigma") {
            int child = at[k];
            if (child == 1) side = 'b';
            else if (child == 2) side = 'a';
            else side = 0;  // spine tail: only # can complete
        } else if (!node.is_variable() && node.children().size() == 1) {
            char l = node.label()[0];
            if (l == 'a' || l == 'c') side = 'a';
            if (l == 'b' || l == 'd') side = 'b';
        }
    }

    int ns = holed.count_symbol("sigma");
    int expected = 4 * ns - 6;
    int c_missing = expected - holed.count_symbol("c");
    int d_missing = expected - holed.count_symbol("d");
    int a_missing = holed.count_symbol("b") - holed.count_symbol("a");
    int b_missing = holed.count_symbol("a") - holed.count_symbol("b");

    std::vector<std::string> candidates;
    if (side == 'a' || side == 0) {
        if (c_missing >= 0 && a_missing >= 0 && d_missing == 0 && b_missing <= 0)
            arrangements("", a_missing, 'a', c_missing, 'c', candidates);
    }
    if (side == 'b' || side == 0) {
        if (d_missing >= 0 && b_missing >= 0 && c_missing == 0 && a_missing <= 0)
            arrangements("", b_missing, 'b', d_missing, 'd', candidates);
    }

    std::vector<Tree> matches;
    PairedAlphabet gamma = PairedAlphabet::ab_cd();
    for (const std::string& w : candidates) {
        Tree completion = word_to_chain(w, Tree::make("#"));
        Tree full = holed.replace(at, completion);
        try {
            auto nodes = spine_nodes(full);
            bool shape = nodes.size() >= 2 && nodes.front().left.empty() &&
                         nodes.back().right.empty();
            for (std::size_t k = 0; k + 1 < nodes.size() && shape; ++k)
                if (nodes[k].right.empty()) shape = false;
            for (std::size_t k = 1; k < nodes.size() && shape; ++k)
                if (nodes[k].left.empty()) shape = false;
            if (shape && is_dyck(gamma, iota(full))) matches.push_back(completion);
        } catch (const ScopeError&) {
            continue;
        }
    }
    std::sort(matches.begin(), matches.end());
    matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
    if (matches.empty())
        throw CompletionError("no chain completion satisfies the shape and balance rules");
    if (matches.size() > 1)
        throw InternalError("chain completion is not unique (" +
                            std::to_string(matches.size()) + " candidates)");
    return matches.front();
}

namespace {

struct BlockRef {
    bool alpha;  // alpha block or beta block
    int index;
};

std::vector<BlockRef> u_items(int i) {
    if (i == 1) return {{true, 1}, {false, 1}};
    std::vector<BlockRef> inner = u_items(i - 1);
    std::vector<BlockRef> out;
    out.push_back({true, i});
    out.insert(out.end(), inner.begin(), inner.end());
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back({false, i});
    return out;
}

std::string block_word(const BlockRef& b, const DyckParams& params) {
    return b.alpha ? params.alpha(b.index) : params.beta(b.index);
}

std::string items_word(const std::vector<BlockRef>& items, const DyckParams& params) {
    std::string out;
    for (const BlockRef& b : items) out += block_word(b, params);
    return out;
}

/// Maximal same-kind runs as (kind, first item, last item) with 1-based
/// per-kind ordinals.
struct ChainRun {
    bool alpha;
    int begin, end;  // item index range [begin, end)
    int ordinal;     // per kind
};

std::vector<ChainRun> chain_runs(const std::vector<BlockRef>& items) {
    std::vector<ChainRun> out;
    int na = 0, nb = 0;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        while (j < items.size() && items[j].alpha == items[i].alpha) ++j;
        ChainRun run{items[i].alpha, static_cast<int>(i), static_cast<int>(j), 0};
        run.ordinal = items[i].alpha ? ++na : ++nb;
        out.push_back(run);
        i = j;
    }
    return out;
}

} // namespace

std::string gen_U(int i, const DyckParams& params) {
    if (i < 1) throw IndexError("sequence index must be >= 1");
    return items_word(u_items(i), params);
}

std::vector<std::string> chains_Z(int i, const DyckParams& params) {
    std::vector<BlockRef> items = u_items(i);
    std::vector<std::string> out;
    for (const ChainRun& run : chain_runs(items)) {
        std::string w;
        for (int k = run.begin; k < run.end; ++k) w += block_word(items[k], params);
        out.push_back(run.alpha ? reversed(w) : w);
    }
    return out;
}

std::string Defect::word(const DyckParams& params) const {
    std::string out;
    for (int k = lo; k <= hi; ++k) out += a_kind ? params.alpha(k) : params.beta(k);
    return out;
}

Factorization factorize(int i, int j, const DyckParams& params) {
    if (i < 1) throw IndexError("sequence index must be >= 1");
    if (j < 1 || j > (1 << (i - 1)))
        throw IndexError("cut index " + std::to_string(j) + " out of range [1," +
                         std::to_string(1 << (i - 1)) + "]");
    Factorization f;
    f.i = i;
    f.j = j;

    // descend the recurrence: the cut lands in the first or second copy
    f.v_is_U.assign(i - 1, false);
    f.w_is_U.assign(i - 1, false);
    int jj = j;
    for (int l = i - 1; l >= 1; --l) {
        int half = 1 << (l - 1);
        if (jj <= half) {
            f.w_is_U[l - 1] = true;
        } else {
            f.v_is_U[l - 1] = true;
            jj -= half;
        }
    }

    // item-level cut after the j-th a-chain
    std::vector<BlockRef> items = u_items(i);
    std::vector<ChainRun> runs = chain_runs(items);
    int cut = -1;
    for (const ChainRun& run : runs)
        if (run.alpha && run.ordinal == j) cut = run.end;
    f.P = items_word({items.begin(), items.begin() + cut}, params);
    f.S = items_word({items.begin() + cut, items.end()}, params);

    // the $-marked word and the defects
    f.D = "$";
    {
        // prefix side: alpha_i V'_{i-1} alpha_{i-1} ... V'_1 alpha_1 $
        int run_hi = i;
        int item_pos = 1;  // position of alpha_i in the item list is 0; we track P positions
        // Recompute positions: walk the P structure to attach owning chains.
        // P items: alpha_i, [U_{i-1} items], alpha_{i-1}, ... ; we track the
        // item index of each explicit alpha to find its chain ordinal.
        std::vector<int> explicit_pos(i + 1, -1);
        int pos = 0;
        explicit_pos[i] = pos++;
        f.D += params.alpha(i);
        for (int l = i - 1; l >= 1; --l) {
            if (f.v_is_U[l - 1]) {
                f.D += "$";
                pos += static_cast<int>(u_items(l).size());
                // close the current defect run
                Defect d{true, l + 1, run_hi, 0};
                // chain of the defect: the run containing alpha_{run_hi}
                for (const ChainRun& run : runs)
                    if (run.alpha && run.begin <= explicit_pos[run_hi] &&
                        explicit_pos[run_hi] < run.end)
                        d.chain = run.ordinal;
                std::swap(d.lo, d.hi);
                d.lo = l + 1;
                d.hi = run_hi;
                f.defects.push_back(d);
                run_hi = l;
            }
            explicit_pos[l] = pos++;
            f.D += params.alpha(l);
        }
        Defect d{true, 1, run_hi, 0};
        for (const ChainRun& run : runs)
            if (run.alpha && run.begin <= explicit_pos[run_hi] &&
                explicit_pos[run_hi] < run.end)
                d.chain = run.ordinal;
        f.defects.push_back(d);
        (void)item_pos;
    }
    f.D += "$";
    {
        // suffix side: beta_1 W'_1 ... beta_{i-1} W'_{i-1} beta_i $
        int run_lo = 1;
        int pos = cut;  // S items start at the cut
        std::vector<int> explicit_pos(i + 1, -1);
        explicit_pos[1] = pos++;
        f.D += params.beta(1);
        for (int l = 1; l <= i - 1; ++l) {
            if (f.w_is_U[l - 1]) {
                f.D += "$";
                pos += static_cast<int>(u_items(l).size());
                Defect d{false, run_lo, l, 0};
                for (const ChainRun& run : runs)
                    if (!run.alpha && run.begin <= explicit_pos[run_lo] &&
                        explicit_pos[run_lo] < run.end)
                        d.chain = run.ordinal;
                f.defects.push_back(d);
                run_lo = l + 1;
            }
            explicit_pos[l + 1] = pos++;
            f.D += params.beta(l + 1);
        }
        Defect d{false, run_lo, i, 0};
        for (const ChainRun& run : runs)
            if (!run.alpha && run.begin <= explicit_pos[run_lo] && explicit_pos[run_lo] < run.end)
            d.chain = run.ordinal;
        f.defects.push_back(d);
    }
    f.D += "$";

    // invariants of the type
    if (f.P + f.S != gen_U(i, params))
        throw InternalError("factorization does not partition the word");
    for (int l = 1; l <= i - 1; ++l)
        if (f.v_is_U[l - 1] == f.w_is_U[l - 1])
            throw InternalError("prefix/suffix flags must differ at every level");
    if (static_cast<int>(f.defects.size()) != i + 1)
        throw InternalError("defect count is not i+1");
    return f;
}

std::vector<int> a_run_exponents(const std::string& word) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < word.size()) {
        if (word[i] == 'a') {
            std::size_t j = i;
            while (j < word.size() && word[j] == 'a') ++j;
            out.push_back(static_cast<int>(j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

std::string apply_perturbation(const std::string& word, const std::vector<int>& exponents) {
    std::string out;
    std::size_t run = 0, i = 0;
    while (i < word.size()) {
        if (word[i] == 'a') {
            std::size_t j = i;
            while (j < word.size() && word[j] == 'a') ++j;
            if (run >= exponents.size())
                throw DimensionError("perturbation vector too short");
            out += std::string(static_cast<std::size_t>(exponents[run++]), 'a');
            i = j;
        } else {
            out += word[i++];
        }
    }
    if (run != exponents.size())
        throw DimensionError("perturbation vector has " + std::to_string(exponents.size()) +
                             " entries, word has " + std::to_string(run) + " a-runs");
    return out;
}

bool perturb_check(int i, int j, const std::vector<int>& exponents, const DyckParams& params) {
    Factorization f = factorize(i, j, params);
    std::string perturbed = apply_perturbation(f.P, exponents);
    return dyck_congruent(PairedAlphabet::ab_cd(), perturbed, f.P);
}

namespace {

/// Structure of P_{i,j} as segments: an explicit alpha block of the given
/// index, or a whole inner copy of U_l.
struct Segment {
    bool explicit_alpha;
    int index;       // block index or copy level
    int a_runs;      // a-runs contributed
};

std::vector<Segment> prefix_segments(const Factorization& f) {
    std::vector<Segment> out;
    out.push_back({true, f.i, 1});
    for (int l = f.i - 1; l >= 1; --l) {
        if (f.v_is_U[l - 1]) out.push_back({false, l, (1 << l) - 1});
        out.push_back({true, l, 1});
    }
    return out;
}

} // namespace

KeyLemmaReport check_key_lemma(int i, int exp_bound, const DyckParams& params) {
    KeyLemmaReport rep;
    PairedAlphabet gamma = PairedAlphabet::ab_cd();

    for (int j = 1; j <= (1 << (i - 1)); ++j) {
        Factorization f = factorize(i, j, params);
        std::vector<Segment> segs = prefix_segments(f);
        int total_runs = 0;
        for (const Segment& s : segs) total_runs += s.a_runs;
        if (total_runs != static_cast<int>(a_run_exponents(f.P).size()))
            throw InternalError("segment a-run count mismatch");

        std::vector<int> vec(total_runs, 0);
        while (true) {
            bool congruent = perturb_check(i, j, vec, params);
            bool expected = true;
            int pos = 0;
            for (const Segment& s : segs) {
                if (s.explicit_alpha) {
                    if (vec[pos] != s.index * params.e) expected = false;
                    pos += 1;
                } else {
                    std::vector<int> sub(vec.begin() + pos, vec.begin() + pos + s.a_runs);
                    std::string inner =
                        apply_perturbation(gen_U(s.index, params), sub);
                    if (!is_dyck(gamma, inner)) expected = false;
                    pos += s.a_runs;
                }
            }
            ++rep.cases;
            if (congruent != expected) ++rep.counterexamples;

            int k = total_runs - 1;
            while (k >= 0 && vec[k] == exp_bound) vec[k--] = 0;
            if (k < 0) break;
            ++vec[k];
        }
    }

    // structural claim: a perturbed copy reduces to nothing or to c...d
    for (int l = 1; l <= i; ++l) {
        std::string u = gen_U(l, params);
        int runs = static_cast<int>(a_run_exponents(u).size());
        std::vector<int> vec(runs, 0);
        while (true) {
            std::string r = dyck_reduce(gamma, apply_perturbation(u, vec));
            ++rep.structural_cases;
            if (!r.empty() && !(r.front() == 'c' && r.back() == 'd')) ++rep.structural_failures;
            int k = runs - 1;
            while (k >= 0 && vec[k] == exp_bound) vec[k--] = 0;
            if (k < 0) break;
            ++vec[k];
        }
    }
    return rep;
}

} // namespace cftlab
