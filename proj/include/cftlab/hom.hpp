#ifndef CFTLAB_HOM_HPP
#define CFTLAB_HOM_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cftlab/tree.hpp"
#include "cftlab/tuple.hpp"

namespace cftlab {

/// A tree homomorphism: every source symbol of rank k maps to a tree over the
/// target alphabet with variables in X_k.
class TreeHomomorphism {
public:
    TreeHomomorphism(std::string name, RankedAlphabet source, RankedAlphabet target,
                     std::map<std::string, Tree> images);

    /// Identity homomorphism on an alphabet.
    static TreeHomomorphism identity(const RankedAlphabet& alphabet,
                                     std::string name = "identity");

    const std::string& name() const { return name_; }
    const RankedAlphabet& source() const { return source_; }
    const RankedAlphabet& target() const { return target_; }
    const Tree& image(const std::string& symbol) const;
    const std::map<std::string, Tree>& images() const { return images_; }

    bool operator==(const TreeHomomorphism& other) const;

private:
    std::string name_;
    RankedAlphabet source_, target_;
    std::map<std::string, Tree> images_;
};

/// Homomorphic image of t; variables map to themselves.
Tree apply_hom(const TreeHomomorphism& h, const Tree& t);

struct HomClassification {
    bool linear = false;
    bool nondeleting = false;
    bool simple = false;
    bool alphabetic = false;
    bool elementary_ordered = false;
    /// The expanding symbol when elementary_ordered.
    std::optional<std::string> expanding_symbol;
};

/// Classifies via lin(h(sigma)) per symbol: linear iff every torsion is
/// injective, nondeleting iff surjective; alphabetic iff every torsion-free
/// part is a single symbol or a variable; elementary ordered iff exactly one
/// symbol expands into a two-level pattern and the rest are identities.
HomClassification classify_hom(const TreeHomomorphism& h);

/// Shape data of an elementary ordered homomorphism:
/// sigma |-> delta1(x_1..x_{l-1}, delta2(x_l..x_{l+k-1}), x_{l+k}..x_n).
struct ElementaryShape {
    std::string sigma;
    std::string delta1, delta2;
    int n = 0;  // rank of sigma
    int k = 0;  // rank of delta2
    int l = 1;  // 1-based position of the delta2 block
};
std::optional<ElementaryShape> elementary_shape(const TreeHomomorphism& h);

struct HomDecomposition {
    TreeHomomorphism alphabetic;
    std::vector<TreeHomomorphism> elementary;  // apply alphabetic first, then these in order
};

/// Factors a linear homomorphism into an alphabetic map followed by a chain
/// of elementary ordered expansions. Equality h = psi_k o ... o psi_1 o phi
/// holds on every tree; throws ClassificationError if h is not linear.
HomDecomposition decompose_hom(const TreeHomomorphism& h);

/// Applies a decomposition: phi first, then each elementary factor.
Tree apply_decomposition(const HomDecomposition& d, const Tree& t);

/// All trees over the alphabet with size <= size_bound and no variables.
std::vector<Tree> enumerate_trees(const RankedAlphabet& alphabet, int size_bound);

/// Brute-force preimage: every source tree t with |t| <= size_bound and
/// apply_hom(h, t) in target_set.
std::set<Tree> preimage_bounded(const TreeHomomorphism& h, const std::set<Tree>& target_set,
                                int size_bound);

} // namespace cftlab

#endif
