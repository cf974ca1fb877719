#include "doctest.h"

#include "cftlab/errors.hpp"
#include "cftlab/tree.hpp"

#include "fixtures.hpp"

using namespace cftlab;

TEST_CASE("tree parse and print round-trip") {
    for (const char* text : {"#", "x1", "x42", "f(a,b)", "sigma(#,c(#),x3)",
                             "delta1(#,A(c(#),d(#),delta2(#,#)))"}) {
        Tree t = Tree::parse(text);
        CHECK(t.to_string() == text);
        CHECK(Tree::parse(t.to_string()) == t);
    }
    CHECK(Tree::parse("  f ( a , b )  ") == Tree::parse("f(a,b)"));
}

TEST_CASE("tree parse errors") {
    CHECK_THROWS_AS(Tree::parse("f(a"), ParseError);
    CHECK_THROWS_AS(Tree::parse("f(a,)"), ParseError);
    CHECK_THROWS_AS(Tree::parse(""), ParseError);
    CHECK_THROWS_AS(Tree::parse("f(a) b"), ParseError);
    CHECK_THROWS_AS(Tree::parse("x1(a)"), ParseError);
}

TEST_CASE("navigate and replace") {
    Tree t = Tree::parse("sigma(#,c(#),#)");
    CHECK(t.label_at({}) == "sigma");
    CHECK(t.subtree({}) == t);
    CHECK(t.label_at({2, 1}) == "#");
    CHECK(t.subtree({2, 1}) == Tree::make("#"));
    CHECK(t.replace({1}, Tree::parse("c(#)")) == Tree::parse("sigma(c(#),c(#),#)"));
    CHECK_THROWS_AS(t.subtree({4}), PositionError);
    CHECK_THROWS_AS(t.replace({1, 1}, t), PositionError);
    CHECK(t.positions().size() == 5);
}

TEST_CASE("count and size") {
    Tree t = Tree::parse("sigma(#,#,#)");
    CHECK(t.count_symbol("#") == 3);
    CHECK(t.size() == 4);
    Tree ex = fixtures::example_preimage_tree();
    CHECK(ex.count_symbol("sigma") == 3);
    CHECK(ex.count_symbol("c") == 6);
    CHECK(ex.count_symbol("d") == 6);
    CHECK(Tree::variable(2).size() == 0);
}

TEST_CASE("substitute") {
    CHECK(Tree::variable(1).substitute({Tree::parse("a(#)")}) == Tree::parse("a(#)"));
    CHECK(Tree::parse("sigma(x1,x2,x3)").substitute(
              {Tree::parse("#"), Tree::parse("c(#)"), Tree::parse("#")}) ==
          Tree::parse("sigma(#,c(#),#)"));
    CHECK(Tree::parse("g(x1)").substitute({Tree::parse("g(x1)")}) == Tree::parse("g(g(x1))"));
    CHECK_THROWS_AS(Tree::variable(2).substitute({Tree::make("#")}), IndexError);
}

TEST_CASE("ranked checking") {
    RankedAlphabet sigma{{"f", 2}, {"a", 0}};
    Tree ok = Tree::parse("f(a,x1)");
    ok.check_ranked(sigma, 1);
    CHECK_THROWS_AS(Tree::parse("f(a)").check_ranked(sigma, 0), AlphabetError);
    CHECK_THROWS_AS(Tree::parse("g(a)").check_ranked(sigma, 0), AlphabetError);
    CHECK_THROWS_AS(ok.check_ranked(sigma, 0), IndexError);
    CHECK(ok.over_alphabet(sigma));
    CHECK_FALSE(Tree::parse("f(a)").over_alphabet(sigma));
}

TEST_CASE("chains and words") {
    Tree c = fixtures::chain("caac");
    CHECK(c == Tree::parse("c(a(a(c(#))))"));
    CHECK(is_chain(c));
    auto [word, leaf] = chain_to_word(c);
    CHECK(word == "caac");
    CHECK(leaf == Tree::make("#"));
    CHECK(word_to_chain("", Tree::variable(1)) == Tree::variable(1));
    CHECK_FALSE(is_chain(Tree::parse("f(a,b)")));
    CHECK_THROWS_AS(chain_to_word(Tree::parse("f(a,b)")), ScopeError);
}
