#include "cftlab/hom.hpp"

#include <algorithm>

#include "cftlab/errors.hpp"

namespace cftlab {

TreeHomomorphism::TreeHomomorphism(std::string name, RankedAlphabet source,
                                   RankedAlphabet target, std::map<std::string, Tree> images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
    for (const auto& [sym, rank] : source_.entries()) {
        auto it = images_.find(sym);
        if (it == images_.end())
            throw CompletenessError("homomorphism '" + name_ + "' misses an image for '" +
                                    sym + "'");
        it->second.check_ranked(target_, rank);
    }
    for (const auto& [sym, img] : images_)
        if (!source_.contains(sym))
            throw AlphabetError("image given for '" + sym + "' which is not a source symbol");
}

TreeHomomorphism TreeHomomorphism::identity(const RankedAlphabet& alphabet, std::string name) {
    std::map<std::string, Tree> images;
    for (const auto& [sym, rank] : alphabet.entries()) {
        std::vector<Tree> vars;
        for (int i = 1; i <= rank; ++i) vars.push_back(Tree::variable(i));
        images.emplace(sym, Tree::make(sym, std::move(vars)));
    }
    return TreeHomomorphism(std::move(name), alphabet, alphabet, std::move(images));
}

const Tree& TreeHomomorphism::image(const std::string& symbol) const {
    auto it = images_.find(symbol);
    if (it == images_.end())
        throw AlphabetError("symbol '" + symbol + "' has no image under '" + name_ + "'");
    return it->second;
}

bool TreeHomomorphism::operator==(const TreeHomomorphism& other) const {
    return source_ == other.source_ && target_ == other.target_ && images_ == other.images_;
}

Tree apply_hom(const TreeHomomorphism& h, const Tree& t) {
    if (t.is_variable()) return t;
    std::vector<Tree> mapped;
    mapped.reserve(t.children().size());
    for (const Tree& c : t.children()) mapped.push_back(apply_hom(h, c));
    return h.image(t.label()).substitute(mapped);
}

namespace {

/// True iff t = sym(x_1,...,x_rank) for its own rank.
bool is_identity_image(const Tree& t, int rank) {
    if (t.is_variable() || static_cast<int>(t.children().size()) != rank) return false;
    for (int i = 0; i < rank; ++i) {
        const Tree& c = t.children()[i];
        if (!c.is_variable() || c.var_index() != i + 1) return false;
    }
    return true;
}

/// Matches delta1(x_1..x_{l-1}, delta2(x_l..x_{l+k-1}), x_{l+k}..x_n).
std::optional<ElementaryShape> match_two_level(const std::string& sigma, const Tree& img,
                                               int n) {
    if (img.is_variable()) return std::nullopt;
    int l = 0, k = -1;
    std::string delta2;
    int expect = 1;
    for (std::size_t c = 0; c < img.children().size(); ++c) {
        const Tree& child = img.children()[c];
        if (child.is_variable()) {
            if (child.var_index() != expect) return std::nullopt;
            ++expect;
        } else {
            if (l != 0) return std::nullopt;  // two inner nodes
            l = expect;
            delta2 = child.label();
            k = static_cast<int>(child.children().size());
            for (const Tree& g : child.children()) {
                if (!g.is_variable() || g.var_index() != expect) return std::nullopt;
                ++expect;
            }
        }
    }
    if (l == 0 || expect != n + 1) return std::nullopt;
    ElementaryShape s;
    s.sigma = sigma;
    s.delta1 = img.label();
    s.delta2 = delta2;
    s.n = n;
    s.k = k;
    s.l = l;
    return s;
}

} // namespace

HomClassification classify_hom(const TreeHomomorphism& h) {
    HomClassification out;
    out.linear = out.nondeleting = out.alphabetic = true;
    int expanding = 0;
    std::optional<ElementaryShape> shape;
    for (const auto& [sym, rank] : h.source().entries()) {
        const Tree& img = h.image(sym);
        auto [tilde, theta] = lin(Tuple(img, rank));
        if (!theta.injective()) out.linear = false;
        if (!theta.surjective()) out.nondeleting = false;
        const Tree& t = tilde.component(1);
        bool single = t.is_variable() ||
                      std::all_of(t.children().begin(), t.children().end(),
                                  [](const Tree& c) { return c.is_variable(); });
        if (!single) out.alphabetic = false;

        if (is_identity_image(img, rank)) continue;
        auto two = match_two_level(sym, img, rank);
        if (two) {
            ++expanding;
            shape = two;
        } else {
            expanding += 2;  // disqualifies elementary ordered
        }
    }
    out.simple = out.linear && out.nondeleting;
    out.elementary_ordered = (expanding == 1);
    if (out.elementary_ordered) out.expanding_symbol = shape->sigma;
    return out;
}

std::optional<ElementaryShape> elementary_shape(const TreeHomomorphism& h) {
    if (!classify_hom(h).elementary_ordered) return std::nullopt;
    for (const auto& [sym, rank] : h.source().entries()) {
        if (is_identity_image(h.image(sym), rank)) continue;
        return match_two_level(sym, h.image(sym), rank);
    }
    return std::nullopt;
}

namespace {

/// Picks a name not present in either alphabet by appending primes.
std::string fresh_name(std::string base, const RankedAlphabet& a, const RankedAlphabet& b) {
    while (a.contains(base) || b.contains(base)) base += "'";
    return base;
}

} // namespace

HomDecomposition decompose_hom(const TreeHomomorphism& h) {
    HomClassification cls = classify_hom(h);
    if (!cls.linear)
        throw ClassificationError("decompose_hom requires a linear homomorphism");

    // Torsion-free image shapes; symbols whose shape has more than one node
    // are built by elementary steps from a placeholder introduced by phi.
    struct Pending {
        std::string source_symbol;
        std::string placeholder;
        Tree shape;  // torsion-free, over the target alphabet
    };
    std::vector<Pending> pending;
    RankedAlphabet omega;  // target alphabet of phi
    std::map<std::string, Tree> phi_images;

    for (const auto& [sym, rank] : h.source().entries()) {
        auto [tilde, theta] = lin(Tuple(h.image(sym), rank));
        Tree shape = tilde.component(1);
        Tuple torsion_tuple = theta.as_tuple();
        if (shape.is_variable()) {
            phi_images.emplace(sym, Tree::variable(theta(1)));
            continue;
        }
        if (shape.size() == 1) {
            // single node: phi relabels directly
            omega.add(shape.label(), static_cast<int>(shape.children().size()));
            phi_images.emplace(sym, compose(Tuple(shape, tilde.bound()), torsion_tuple).component(1));
            continue;
        }
        // placeholder of the shape's slot count; reuse the source name when free
        std::string ph = fresh_name(sym, h.target(), RankedAlphabet{});
        omega.add(ph, tilde.bound());
        std::vector<Tree> args;
        for (int i = 1; i <= theta.arity(); ++i) args.push_back(Tree::variable(theta(i)));
        phi_images.emplace(sym, Tree::make(ph, std::move(args)));
        pending.push_back({sym, ph, shape});
    }

    // Symbols of the target that pass through untouched must exist in every
    // intermediate alphabet.
    for (const auto& [sym, rank] : h.target().entries()) omega.add(sym, rank);

    TreeHomomorphism phi("phi_" + h.name(), h.source(), omega, std::move(phi_images));

    // Elementary steps: peel the lowest leftmost all-variable node of each
    // remaining shape, one node per step.
    std::vector<TreeHomomorphism> steps;
    RankedAlphabet current = omega;
    for (auto& p : pending) {
        Tree shape = p.shape;
        std::string holder = p.placeholder;
        int step_no = 1;
        while (shape.size() > 1) {
            // find the first position (preorder) whose node has only variable children
            Position peel;
            bool found = false;
            auto walk = [&](auto&& self, const Tree& t, Position& cur) -> void {
                if (found || t.is_variable()) return;
                bool all_vars = std::all_of(t.children().begin(), t.children().end(),
                                            [](const Tree& c) { return c.is_variable(); });
                // prefer deeper nodes: recurse first
                for (std::size_t i = 0; i < t.children().size() && !found; ++i) {
                    cur.push_back(static_cast<int>(i) + 1);
                    self(self, t.children()[i], cur);
                    cur.pop_back();
                }
                if (!found && all_vars && !cur.empty()) {
                    peel = cur;
                    found = true;
                }
            };
            Position cur;
            walk(walk, shape, cur);
            if (!found)
                throw InternalError("decompose_hom: no peelable node in " + shape.to_string());

            Tree sub = shape.subtree(peel);
            int k = static_cast<int>(sub.children().size());
            int l = sub.children().empty() ? 0 : sub.children()[0].var_index();
            // collapse the peeled node to a fresh slot and renumber
            int slot_count_before = shape.max_variable();
            Tree collapsed = shape.replace(peel, Tree::variable(l == 0 ? slot_count_before + 1 : l));
            auto [norm, _] = lin(Tuple(collapsed, slot_count_before + 1));
            Tree upper_shape = norm.component(1);
            int m2 = upper_shape.max_variable();

            // the slot index of the peeled block within the collapsed shape
            int block_slot;
            {
                Tree marker = shape.replace(peel, Tree::variable(slot_count_before + 2));
                std::vector<int> seq;
                auto collect = [&](auto&& self, const Tree& t) -> void {
                    if (t.is_variable()) { seq.push_back(t.var_index()); return; }
                    for (const Tree& c : t.children()) self(self, c);
                };
                collect(collect, marker);
                block_slot = 1 + static_cast<int>(std::find(seq.begin(), seq.end(),
                                                            slot_count_before + 2) - seq.begin());
            }

            bool last = upper_shape.size() == 1;
            std::string next_holder;
            RankedAlphabet next = h.target();
            for (const auto& q : pending)
                if (q.source_symbol != p.source_symbol || !last) {
                    // placeholders of other symbols (and ours unless finished) persist
                }
            // rebuild 'next' alphabet: target symbols plus all still-pending placeholders
            next = RankedAlphabet{};
            for (const auto& [sym, rank] : current.entries()) {
                if (sym == holder) continue;
                next.add(sym, rank);
            }
            if (!last) {
                next_holder = fresh_name(p.source_symbol + "_step" + std::to_string(step_no),
                                         next, RankedAlphabet{});
                next.add(next_holder, m2);
            }

            // psi: holder |-> upper(x..., peeled(x-block), ...x); identity elsewhere
            std::map<std::string, Tree> images;
            for (const auto& [sym, rank] : current.entries()) {
                if (sym == holder) continue;
                std::vector<Tree> vars;
                for (int i = 1; i <= rank; ++i) vars.push_back(Tree::variable(i));
                images.emplace(sym, Tree::make(sym, std::move(vars)));
            }
            std::string upper_name = last ? upper_shape.label() : next_holder;
            std::vector<Tree> pattern_args;
            int v = 1;
            for (int i = 1; i <= m2; ++i) {
                if (i == block_slot) {
                    std::vector<Tree> block;
                    for (int g = 0; g < k; ++g) block.push_back(Tree::variable(v++));
                    pattern_args.push_back(Tree::make(sub.label(), std::move(block)));
                } else {
                    pattern_args.push_back(Tree::variable(v++));
                }
            }
            images.emplace(holder, Tree::make(upper_name, std::move(pattern_args)));
            steps.emplace_back("psi_" + p.source_symbol + "_" + std::to_string(step_no),
                               current, next, std::move(images));

            current = next;
            holder = next_holder;
            shape = upper_shape;
            ++step_no;
        }
    }

    return HomDecomposition{std::move(phi), std::move(steps)};
}

Tree apply_decomposition(const HomDecomposition& d, const Tree& t) {
    Tree out = apply_hom(d.alphabetic, t);
    for (const TreeHomomorphism& psi : d.elementary) out = apply_hom(psi, out);
    return out;
}

std::vector<Tree> enumerate_trees(const RankedAlphabet& alphabet, int size_bound) {
    // by_size[s] = all trees of size exactly s
    std::vector<std::vector<Tree>> by_size(size_bound + 1);
    for (int s = 1; s <= size_bound; ++s) {
        for (const auto& [sym, rank] : alphabet.entries()) {
            if (rank == 0) {
                if (s == 1) by_size[s].push_back(Tree::make(sym));
                continue;
            }
            // distribute s-1 over rank children, each >= 1
            std::vector<int> sizes(rank, 1);
            int rest = s - 1 - rank;
            if (rest < 0) continue;
            std::vector<Tree> kids(rank, Tree::variable(1));
            auto rec = [&](auto&& self, int child, int remaining) -> void {
                if (child == rank - 1) {
                    for (const Tree& t : by_size[1 + remaining]) {
                        kids[child] = t;
                        std::vector<Tree> copy(kids.begin(), kids.end());
                        by_size[s].push_back(Tree::make(sym, std::move(copy)));
                    }
                    return;
                }
                for (int take = 0; take <= remaining; ++take) {
                    for (const Tree& t : by_size[1 + take]) {
                        kids[child] = t;
                        self(self, child + 1, remaining - take);
                    }
                }
            };
            if (rank > 0) rec(rec, 0, rest);
        }
    }
    std::vector<Tree> out;
    for (int s = 1; s <= size_bound; ++s)
        out.insert(out.end(), by_size[s].begin(), by_size[s].end());
    return out;
}

std::set<Tree> preimage_bounded(const TreeHomomorphism& h, const std::set<Tree>& target_set,
                                int size_bound) {
    std::set<Tree> out;
    for (const Tree& t : enumerate_trees(h.source(), size_bound))
        if (target_set.count(apply_hom(h, t))) out.insert(t);
    return out;
}

} // namespace cftlab
