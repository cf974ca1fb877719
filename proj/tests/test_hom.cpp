#include <random>

#include "doctest.h"

#include "cftlab/errors.hpp"
#include "cftlab/grammar_io.hpp"
#include "cftlab/hom.hpp"

#include "fixtures.hpp"

using namespace cftlab;

namespace {

TreeHomomorphism hex() { return parse_hom(fixtures::kHexText); }

TreeHomomorphism deleting_unary() {
    RankedAlphabet src{{"f", 1}, {"alpha", 0}};
    std::map<std::string, Tree> images;
    images.emplace("f", Tree::variable(1));
    images.emplace("alpha", Tree::make("alpha"));
    return TreeHomomorphism("proj", src, RankedAlphabet{{"alpha", 0}}, images);
}

/// Random linear homomorphism with images of bounded depth.
TreeHomomorphism random_linear_hom(std::mt19937& rng, int id) {
    RankedAlphabet src{{"s", static_cast<int>(rng() % 4) + 1},
                       {"u", 1},
                       {"k", 0}};
    RankedAlphabet tgt{{"p", 2}, {"q", 3}, {"w", 1}, {"z", 0}};
    std::map<std::string, Tree> images;
    for (const auto& [sym, rank] : src.entries()) {
        // a linear image: random shape, then attach a random subset of
        // variables in random slots
        std::vector<int> vars(rank);
        for (int i = 0; i < rank; ++i) vars[i] = i + 1;
        std::shuffle(vars.begin(), vars.end(), rng);
        int used = rank == 0 ? 0 : static_cast<int>(rng() % (rank + 1));
        std::vector<Tree> leaves;
        for (int i = 0; i < used; ++i) leaves.push_back(Tree::variable(vars[i]));
        // build upward until a single tree remains
        leaves.push_back(Tree::make("z"));
        std::vector<Tree> pool = leaves;
        while (pool.size() > 1) {
            Tree b = pool.back(); pool.pop_back();
            Tree a = pool.back(); pool.pop_back();
            if (rng() % 2)
                pool.push_back(Tree::make("p", {a, b}));
            else
                pool.push_back(Tree::make("q", {a, Tree::make("z"), b}));
        }
        Tree img = pool.front();
        if (rng() % 2) img = Tree::make("w", {img});
        images.emplace(sym, img);
    }
    return TreeHomomorphism("rand" + std::to_string(id), src, tgt, images);
}

} // namespace

TEST_CASE("apply_hom") {
    TreeHomomorphism h = hex();
    CHECK(apply_hom(h, Tree::parse("sigma(#,#,#)")) == Tree::parse("delta1(#,delta2(#,#))"));
    CHECK(apply_hom(h, fixtures::example_preimage_tree()) == fixtures::example_image_tree());
    TreeHomomorphism id = TreeHomomorphism::identity(h.source());
    CHECK(apply_hom(id, fixtures::example_preimage_tree()) == fixtures::example_preimage_tree());
    CHECK(apply_hom(h, Tree::variable(2)) == Tree::variable(2));
    RankedAlphabet other{{"zz", 0}};
    CHECK_THROWS_AS(apply_hom(h, Tree::make("zz")), AlphabetError);
}

TEST_CASE("classify_hom") {
    HomClassification ch = classify_hom(hex());
    CHECK(ch.linear);
    CHECK(ch.nondeleting);
    CHECK(ch.simple);
    CHECK_FALSE(ch.alphabetic);
    CHECK(ch.elementary_ordered);
    CHECK(*ch.expanding_symbol == "sigma");

    HomClassification ci = classify_hom(TreeHomomorphism::identity(hex().source()));
    CHECK(ci.linear);
    CHECK(ci.nondeleting);
    CHECK(ci.simple);
    CHECK(ci.alphabetic);
    CHECK_FALSE(ci.elementary_ordered);

    HomClassification cd = classify_hom(deleting_unary());
    CHECK(cd.linear);
    CHECK(cd.nondeleting);  // x1 appears exactly once
    CHECK(cd.alphabetic);
    CHECK_FALSE(cd.elementary_ordered);
}

TEST_CASE("decompose_hom on h_ex is a single elementary step") {
    TreeHomomorphism h = hex();
    HomDecomposition d = decompose_hom(h);
    CHECK(classify_hom(d.alphabetic).alphabetic);
    CHECK(d.elementary.size() == 1);
    CHECK(classify_hom(d.elementary[0]).elementary_ordered);
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        Tree t = fixtures::random_tree(rng, h.source(), 0, 4);
        CHECK(apply_decomposition(d, t) == apply_hom(h, t));
    }
}

TEST_CASE("decompose_hom trivial cases") {
    TreeHomomorphism id = TreeHomomorphism::identity(hex().source());
    HomDecomposition d = decompose_hom(id);
    CHECK(d.elementary.empty());
    CHECK(classify_hom(d.alphabetic).alphabetic);

    // pure relabel with permutation stays alphabetic, no elementary factors
    RankedAlphabet src{{"s", 2}, {"e", 0}};
    RankedAlphabet tgt{{"d", 2}, {"e", 0}};
    std::map<std::string, Tree> images;
    images.emplace("s", Tree::parse("d(x2,x1)"));
    images.emplace("e", Tree::make("e"));
    TreeHomomorphism swap("swap", src, tgt, images);
    HomDecomposition ds = decompose_hom(swap);
    CHECK(ds.elementary.empty());
    CHECK(classify_hom(ds.alphabetic).alphabetic);
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        Tree t = fixtures::random_tree(rng, src, 0, 4);
        CHECK(apply_decomposition(ds, t) == apply_hom(swap, t));
    }
}

TEST_CASE("decompose_hom soundness on random linear homomorphisms") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        TreeHomomorphism h = random_linear_hom(rng, i);
        REQUIRE(classify_hom(h).linear);
        HomDecomposition d = decompose_hom(h);
        CHECK(classify_hom(d.alphabetic).alphabetic);
        for (const TreeHomomorphism& psi : d.elementary)
            CHECK(classify_hom(psi).elementary_ordered);
        for (int r = 0; r < 50; ++r) {
            Tree t = fixtures::random_tree(rng, h.source(), 0, 3);
            CHECK(apply_decomposition(d, t) == apply_hom(h, t));
        }
    }
}

TEST_CASE("decompose_hom rejects nonlinear input") {
    RankedAlphabet src{{"f", 1}, {"e", 0}};
    RankedAlphabet tgt{{"p", 2}, {"e", 0}};
    std::map<std::string, Tree> images;
    images.emplace("f", Tree::parse("p(x1,x1)"));
    images.emplace("e", Tree::make("e"));
    CHECK_THROWS_AS(decompose_hom(TreeHomomorphism("copy", src, tgt, images)),
                    ClassificationError);
}

TEST_CASE("preimage_bounded") {
    TreeHomomorphism h = hex();
    std::set<Tree> target = {Tree::parse("delta1(#,delta2(#,#))")};
    std::set<Tree> pre = preimage_bounded(h, target, 5);
    CHECK(pre == std::set<Tree>{Tree::parse("sigma(#,#,#)")});

    TreeHomomorphism del = deleting_unary();
    std::set<Tree> alpha = {Tree::make("alpha")};
    std::set<Tree> pre2 = preimage_bounded(del, alpha, 4);
    CHECK(pre2 == std::set<Tree>{Tree::parse("alpha"), Tree::parse("f(alpha)"),
                                 Tree::parse("f(f(alpha))"), Tree::parse("f(f(f(alpha)))")});

    // identity: preimage is the set itself, size filtered
    TreeHomomorphism id = TreeHomomorphism::identity(RankedAlphabet{{"g", 1}, {"e", 0}});
    std::set<Tree> s = {Tree::parse("e"), Tree::parse("g(g(e))")};
    CHECK(preimage_bounded(id, s, 2) == std::set<Tree>{Tree::parse("e")});

    // membership agreement with direct filtering
    for (const Tree& t : enumerate_trees(h.source(), 4)) {
        bool in = pre.count(t) != 0;
        CHECK(in == (t.size() <= 5 && target.count(apply_hom(h, t)) != 0));
    }
}
