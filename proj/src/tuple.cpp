#include "cftlab/tuple.hpp"

#include <algorithm>

#include "cftlab/errors.hpp"

namespace cftlab {

Tuple::Tuple(std::vector<Tree> components, int bound) : components_(std::move(components)), bound_(bound) {
    if (bound_ < 0) throw DimensionError("negative tuple bound");
    for (const Tree& t : components_)
        if (t.max_variable() > bound_)
            throw DimensionError("component " + t.to_string() + " uses x" +
                                 std::to_string(t.max_variable()) + " above the bound " +
                                 std::to_string(bound_));
}

const Tree& Tuple::component(int i) const {
    if (i < 1 || i > arity())
        throw IndexError("component index " + std::to_string(i) + " out of range [1," +
                         std::to_string(arity()) + "]");
    return components_[i - 1];
}

Tuple Tuple::identity(int n) {
    std::vector<Tree> comps;
    comps.reserve(n);
    for (int i = 1; i <= n; ++i) comps.push_back(Tree::variable(i));
    return Tuple(std::move(comps), n);
}

Tuple Tuple::projection(int i, int k) {
    if (i < 1 || i > k)
        throw IndexError("projection index " + std::to_string(i) + " out of range [1," +
                         std::to_string(k) + "]");
    return Tuple(Tree::variable(i), k);
}

Tuple Tuple::weakened(int new_bound) const {
    if (new_bound < bound_)
        throw DimensionError("cannot shrink tuple bound from " + std::to_string(bound_) +
                             " to " + std::to_string(new_bound));
    return Tuple(components_, new_bound);
}

std::size_t Tuple::hash() const {
    std::size_t h = static_cast<std::size_t>(bound_) * 1000003u + components_.size();
    for (const Tree& t : components_)
        h = h * 31 + t.hash();
    return h;
}

bool Tuple::operator==(const Tuple& other) const {
    return bound_ == other.bound_ && components_ == other.components_;
}

bool Tuple::operator<(const Tuple& other) const {
    if (bound_ != other.bound_) return bound_ < other.bound_;
    if (components_.size() != other.components_.size())
        return components_.size() < other.components_.size();
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (int c = components_[i].compare(other.components_[i]); c != 0) return c < 0;
    return false;
}

std::string Tuple::to_string() const {
    std::string out = "<";
    for (int i = 0; i < arity(); ++i) {
        if (i) out += ',';
        out += components_[i].to_string();
    }
    out += "> over ";
    out += std::to_string(bound_);
    return out;
}

Torsion::Torsion(std::vector<int> map, int bound) : map_(std::move(map)), bound_(bound) {
    if (bound_ < 0) throw DimensionError("negative torsion bound");
    for (int v : map_)
        if (v < 1 || v > bound_)
            throw DimensionError("torsion value " + std::to_string(v) + " out of range [1," +
                                 std::to_string(bound_) + "]");
}

Torsion Torsion::identity(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i + 1;
    return Torsion(std::move(m), n);
}

int Torsion::operator()(int i) const {
    if (i < 1 || i > arity())
        throw IndexError("torsion index " + std::to_string(i) + " out of range");
    return map_[i - 1];
}

bool Torsion::injective() const {
    std::vector<int> seen(bound_ + 1, 0);
    for (int v : map_)
        if (seen[v]++) return false;
    return true;
}

bool Torsion::surjective() const {
    std::vector<int> seen(bound_ + 1, 0);
    for (int v : map_) seen[v] = 1;
    for (int i = 1; i <= bound_; ++i)
        if (!seen[i]) return false;
    return true;
}

Tuple Torsion::as_tuple() const {
    std::vector<Tree> comps;
    comps.reserve(map_.size());
    for (int v : map_) comps.push_back(Tree::variable(v));
    return Tuple(std::move(comps), bound_);
}

bool Torsion::operator<(const Torsion& other) const {
    if (bound_ != other.bound_) return bound_ < other.bound_;
    return map_ < other.map_;
}

std::string Torsion::to_string() const {
    std::string out = "<";
    for (int i = 0; i < arity(); ++i) {
        if (i) out += ',';
        out += "x" + std::to_string(map_[i]);
    }
    out += ">";
    return out;
}

Tuple compose(const Tuple& u, const Tuple& v) {
    if (u.bound() != v.arity())
        throw DimensionError("compose: left bound " + std::to_string(u.bound()) +
                             " != right arity " + std::to_string(v.arity()));
    std::vector<Tree> comps;
    comps.reserve(u.arity());
    for (const Tree& t : u.components()) comps.push_back(t.substitute(v.components()));
    return Tuple(std::move(comps), v.bound());
}

Tuple compose(const Torsion& u, const Tuple& v) { return compose(u.as_tuple(), v); }
Tuple compose(const Tuple& u, const Torsion& v) { return compose(u, v.as_tuple()); }

Torsion compose(const Torsion& u, const Torsion& v) {
    if (u.bound() != v.arity())
        throw DimensionError("compose: left bound " + std::to_string(u.bound()) +
                             " != right arity " + std::to_string(v.arity()));
    std::vector<int> m;
    m.reserve(u.arity());
    for (int i = 1; i <= u.arity(); ++i) m.push_back(v(u(i)));
    return Torsion(std::move(m), v.bound());
}

Tuple concat(const Tuple& u, const Tuple& v) {
    if (u.bound() != v.bound())
        throw DimensionError("concat: bounds differ (" + std::to_string(u.bound()) + " vs " +
                             std::to_string(v.bound()) + ")");
    std::vector<Tree> comps = u.components();
    comps.insert(comps.end(), v.components().begin(), v.components().end());
    return Tuple(std::move(comps), u.bound());
}

Tuple power(const Tuple& u, int j) {
    if (u.arity() != u.bound())
        throw DimensionError("power of a non-square tuple");
    if (j < 0) throw IndexError("negative tuple power");
    Tuple acc = Tuple::identity(u.arity());
    for (int i = 0; i < j; ++i) acc = compose(u, acc);
    return acc;
}

Tuple spine_compose(const Tuple& s, const Tuple& t) {
    if (s.arity() != 1 || t.arity() != 1)
        throw DimensionError("spine composition needs single trees");
    if (s.bound() < 1)
        throw DimensionError("spine composition: left tuple has bound 0");
    int n = s.bound() - 1;
    int nb = std::max(n, t.bound());
    Tuple right = concat(Tuple::identity(n).weakened(nb), t.weakened(nb));
    return compose(s, right);
}

namespace {

void variable_sequence(const Tree& t, std::vector<int>& out) {
    if (t.is_variable()) {
        out.push_back(t.var_index());
        return;
    }
    for (const Tree& c : t.children()) variable_sequence(c, out);
}

Tree renumber(const Tree& t, int& next) {
    if (t.is_variable()) return Tree::variable(next++);
    if (t.max_variable() == 0) return t;
    std::vector<Tree> kids;
    kids.reserve(t.children().size());
    for (const Tree& c : t.children()) kids.push_back(renumber(c, next));
    return Tree::make(t.label(), std::move(kids));
}

} // namespace

bool is_torsion_free(const Tuple& u) {
    std::vector<int> seq;
    for (const Tree& t : u.components()) variable_sequence(t, seq);
    if (static_cast<int>(seq.size()) != u.bound()) return false;
    for (int i = 0; i < u.bound(); ++i)
        if (seq[i] != i + 1) return false;
    return true;
}

std::pair<Tuple, Torsion> lin(const Tuple& u) {
    std::vector<int> seq;
    for (const Tree& t : u.components()) variable_sequence(t, seq);
    int next = 1;
    std::vector<Tree> comps;
    comps.reserve(u.arity());
    for (const Tree& t : u.components()) comps.push_back(renumber(t, next));
    int m = static_cast<int>(seq.size());
    return {Tuple(std::move(comps), m), Torsion(std::move(seq), u.bound())};
}

bool is_spine(const Tuple& u) {
    if (u.arity() < 1 || u.bound() < 1) return false;
    int top = u.bound();
    const Tree& last = u.components().back();
    if (!last.is_variable() || last.var_index() != top) return false;
    for (int i = 1; i < u.arity(); ++i) {
        std::vector<int> seq;
        variable_sequence(u.component(i), seq);
        for (int v : seq)
            if (v == top) return false;
    }
    return true;
}

bool is_torsion_free_spine(const Tuple& u) {
    return is_spine(u) && is_torsion_free(u);
}

bool is_spine(const Torsion& t) {
    if (t.arity() != t.bound() || t.arity() < 1) return false;
    int top = t.arity();
    if (t(top) != top) return false;
    for (int i = 1; i < top; ++i)
        if (t(i) == top) return false;
    return true;
}

std::vector<Torsion> all_spine_torsions(int n) {
    std::vector<Torsion> out;
    std::vector<int> m(n + 1, 1);
    m[n] = n + 1;
    while (true) {
        out.push_back(Torsion(m, n + 1));
        int i = n - 1;
        while (i >= 0 && m[i] == n) { m[i] = 1; --i; }
        if (i < 0) break;
        ++m[i];
    }
    return out;
}

} // namespace cftlab
