#ifndef CFTLAB_TUPLE_HPP
#define CFTLAB_TUPLE_HPP

#include <utility>
#include <vector>

#include "cftlab/tree.hpp"

namespace cftlab {

class Torsion;

/// An n-tuple of trees over variables x_1..x_k, with explicit bound k.
/// The magmoid composition u . v substitutes v's components for u's
/// variables.
class Tuple {
public:
    Tuple(std::vector<Tree> components, int bound);
    /// Single-component tuple.
    Tuple(const Tree& t, int bound) : Tuple(std::vector<Tree>{t}, bound) {}

    int arity() const { return static_cast<int>(components_.size()); }
    int bound() const { return bound_; }
    const std::vector<Tree>& components() const { return components_; }
    /// 1-based component access.
    const Tree& component(int i) const;

    /// Id_n: <x1,...,xn> over bound n.
    static Tuple identity(int n);
    /// pi_i over bound k.
    static Tuple projection(int i, int k);

    /// Same components, larger bound; new_bound must be >= bound().
    Tuple weakened(int new_bound) const;

    std::size_t hash() const;
    bool operator==(const Tuple& other) const;
    bool operator!=(const Tuple& other) const { return !(*this == other); }
    bool operator<(const Tuple& other) const;

    std::string to_string() const;

private:
    std::vector<Tree> components_;
    int bound_;
};

struct TupleHash {
    std::size_t operator()(const Tuple& t) const { return t.hash(); }
};

/// A torsion: a total map [n] -> [k], i.e. a tuple of bare variables.
class Torsion {
public:
    Torsion(std::vector<int> map, int bound);
    static Torsion identity(int n);

    int arity() const { return static_cast<int>(map_.size()); }
    int bound() const { return bound_; }
    /// 1-based application.
    int operator()(int i) const;
    const std::vector<int>& map() const { return map_; }

    bool injective() const;
    bool surjective() const;
    Tuple as_tuple() const;

    bool operator==(const Torsion& other) const {
        return bound_ == other.bound_ && map_ == other.map_;
    }
    bool operator!=(const Torsion& other) const { return !(*this == other); }
    bool operator<(const Torsion& other) const;

    std::string to_string() const;

private:
    std::vector<int> map_;
    int bound_;
};

/// u . v; requires u.bound() == v.arity().
Tuple compose(const Tuple& u, const Tuple& v);
Tuple compose(const Torsion& u, const Tuple& v);
Tuple compose(const Tuple& u, const Torsion& v);
Torsion compose(const Torsion& u, const Torsion& v);

/// [u, v]: concatenation; bounds must agree.
Tuple concat(const Tuple& u, const Tuple& v);

/// u^j for square tuples.
Tuple power(const Tuple& u, int j);

/// s -o t = s . [Id_n, t] where s has bound n+1. The result bound is
/// max(n, t.bound()).
Tuple spine_compose(const Tuple& s, const Tuple& t);

/// True iff the left-to-right variable sequence of u is exactly x_1..x_k,
/// each once (u is torsion-free with full bound use).
bool is_torsion_free(const Tuple& u);

/// lin(u): the unique (v, theta) with v torsion-free and u = v . theta.
std::pair<Tuple, Torsion> lin(const Tuple& u);

/// Spine predicates. A spine tuple of arity n over bound k is an (n+1)-tuple
/// over bound k+1 whose last component is x_{k+1} and whose first n
/// components avoid x_{k+1}.
bool is_spine(const Tuple& u);
/// Spine and torsion-free.
bool is_torsion_free_spine(const Tuple& u);
bool is_spine(const Torsion& t);

/// All spine torsions of tuple arity n+1 (free on [n], fixing n+1), in
/// lexicographic order.
std::vector<Torsion> all_spine_torsions(int n);

} // namespace cftlab

#endif
