#include <random>

#include "doctest.h"

#include "cftlab/errors.hpp"
#include "cftlab/grammar.hpp"
#include "cftlab/grammar_io.hpp"

#include "fixtures.hpp"

using namespace cftlab;
using fixtures::gex;

namespace {

Cftg toy_rtg() {
    return parse_grammar("terminals #/0\nnonterminals S/0\naxiom S\nrule S -> #\n");
}

Cftg loop_grammar() {
    return parse_grammar("terminals #/0\nnonterminals S/0\naxiom S\nrule S -> S\n");
}

} // namespace

TEST_CASE("classify_grammar") {
    GrammarClassification c = classify_grammar(gex());
    CHECK(c.linear);
    CHECK(c.nondeleting);
    CHECK(c.simple);
    CHECK_FALSE(c.monadic);
    CHECK_FALSE(c.regular);
    GrammarClassification r = classify_grammar(toy_rtg());
    CHECK(r.monadic);
    CHECK(r.regular);
}

TEST_CASE("derive_step follows the worked derivation") {
    Cftg g = gex();
    const Production& grow = g.productions()[0];
    const Production& split = g.productions()[1];
    const Production& finish = g.productions()[2];

    // the written-out derivation uses the unrestricted relation: the inner
    // spine nonterminal is rewritten while the outer one is still present
    Tree form = g.axiom();
    form = derive_step(g, form, {2}, grow, DeriveMode::Unrestricted);
    CHECK(form == Tree::parse("delta1(#,A(a(c(#)),b(d(#)),delta2(#,#)))"));
    form = derive_step(g, form, {2}, grow, DeriveMode::Unrestricted);
    form = derive_step(g, form, {2}, split, DeriveMode::Unrestricted);
    CHECK(form ==
          Tree::parse("delta1(#,A(c(c(a(a(c(#))))),d(#),A(c(#),d(d(b(b(d(#))))),delta2(#,#))))"));
    form = derive_step(g, form, {2}, grow, DeriveMode::Unrestricted);
    form = derive_step(g, form, {2, 3}, grow, DeriveMode::Unrestricted);
    form = derive_step(g, form, {2, 3}, grow, DeriveMode::Unrestricted);
    form = derive_step(g, form, {2}, finish, DeriveMode::Unrestricted);
    form = derive_step(g, form, {2, 2, 2}, finish, DeriveMode::Unrestricted);
    CHECK(form == fixtures::example_image_tree());
}

TEST_CASE("derive_step direct application and errors") {
    Cftg g = gex();
    Tree direct = derive_step(g, g.axiom(), {2}, g.productions()[2], DeriveMode::OI);
    CHECK(direct == Tree::parse("delta1(#,delta2(c(c(#)),delta1(d(d(#)),delta2(#,#))))"));

    CHECK_THROWS_AS(derive_step(g, g.axiom(), {1}, g.productions()[0], DeriveMode::OI),
                    ProductionError);

    // OI violation: the inner A below an outer A
    Tree nested = derive_step(g, g.axiom(), {2}, g.productions()[1], DeriveMode::OI);
    CHECK_THROWS_AS(derive_step(g, nested, {2, 3}, g.productions()[0], DeriveMode::OI),
                    ModeError);
    CHECK_NOTHROW(derive_step(g, nested, {2, 3}, g.productions()[0],
                              DeriveMode::Unrestricted));

    // rank-0 nonterminal at the root
    Cftg r = toy_rtg();
    CHECK(derive_step(r, r.axiom(), {}, r.productions()[0], DeriveMode::OI) ==
          Tree::parse("#"));
}

TEST_CASE("derive_step locality") {
    Cftg g = gex();
    Tree nested = derive_step(g, g.axiom(), {2}, g.productions()[1], DeriveMode::OI);
    Tree after = derive_step(g, nested, {2, 3}, g.productions()[0], DeriveMode::Unrestricted);
    for (const Position& p : nested.positions()) {
        bool below = p.size() >= 2 && p[0] == 2 && p[1] == 3;
        if (!below) CHECK(after.label_at(p) == nested.label_at(p));
    }
}

TEST_CASE("enumerate_bounded basics") {
    Cftg g = gex();
    Limits one_step{1, 64, 10000, 1000};
    EnumerationResult r = enumerate_bounded(g, one_step);
    CHECK(r.trees == std::set<Tree>{
                         Tree::parse("delta1(#,delta2(c(c(#)),delta1(d(d(#)),delta2(#,#))))")});

    EnumerationResult loop = enumerate_bounded(loop_grammar(), Limits{10, 64, 1000, 1000});
    CHECK(loop.trees.empty());
    CHECK(loop.truncated);

    EnumerationResult rtg = enumerate_bounded(toy_rtg(), Limits{3, 64, 1000, 1000});
    CHECK(rtg.trees == std::set<Tree>{Tree::parse("#")});
    CHECK_FALSE(rtg.truncated);
}

TEST_CASE("OI and unrestricted enumeration agree") {
    Cftg g = gex();
    Limits limits{6, 40, 200000, 100000};
    EnumerationResult a = enumerate_bounded(g, limits, SearchStyle::LeftmostOI);
    EnumerationResult b = enumerate_bounded(g, limits, SearchStyle::AnyOI);
    EnumerationResult c = enumerate_bounded(g, limits, SearchStyle::AnyUnrestricted);
    CHECK(a.trees == b.trees);
    CHECK(a.trees == c.trees);
    CHECK(!a.trees.empty());
}

TEST_CASE("member_bounded") {
    Cftg g = gex();
    Limits limits{10, 80, 500000, 100000};
    CHECK(member_bounded(g, fixtures::example_image_tree(), limits) == Membership::Yes);
    CHECK(member_bounded(g, Tree::parse("#"), limits) == Membership::NoWithinLimits);
    CHECK(member_bounded(toy_rtg(), Tree::parse("#"), Limits{2, 8, 100, 100}) ==
          Membership::Yes);
}

TEST_CASE("productive_and_reachable") {
    Cftg g = parse_grammar(
        "terminals #/0 g/1\n"
        "nonterminals S/0 A/1 B/0\n"
        "axiom S\n"
        "rule S -> #\n"
        "rule A(x1) -> A(x1)\n"
        "rule B -> g(#)\n");
    ProductivityInfo info = productive_and_reachable(g);
    CHECK(info.productive == std::set<std::string>{"S", "B"});
    CHECK(info.reachable == std::set<std::string>{"S"});
    CHECK_FALSE(is_total(g));

    ProductivityInfo gi = productive_and_reachable(gex());
    CHECK(gi.productive == std::set<std::string>{"A"});
    CHECK(gi.reachable == std::set<std::string>{"A"});
    CHECK(is_total(gex()));
}

TEST_CASE("remove_useless") {
    Cftg g = parse_grammar(
        "terminals alpha/0 beta/0 g/1\n"
        "nonterminals S/0 A/0 B/0\n"
        "axiom S\n"
        "rule S -> alpha\n"
        "rule S -> g(A)\n"
        "rule A -> A\n"
        "rule B -> beta\n");
    Cftg clean = remove_useless(g);
    CHECK(clean.productions().size() == 1);
    CHECK(clean.productions()[0].to_string() == "S -> alpha");
    Limits limits{8, 20, 10000, 1000};
    CHECK(enumerate_bounded(g, limits).trees == enumerate_bounded(clean, limits).trees);

    CHECK(remove_useless(gex()) == gex());

    Cftg deleting = parse_grammar(
        "terminals #/0\nnonterminals S/0 K/1\naxiom S\nrule S -> K(#)\nrule K(x1) -> #\n");
    CHECK_THROWS_AS(remove_useless(deleting), PreconditionError);
}

TEST_CASE("verify_oi_decomposition") {
    Cftg g = toy_rtg();
    // trivial: eta already terminal, n = 0
    Tuple eta(Tree::parse("#"), 1);
    Tuple kappa(Tree::parse("#"), 0);
    CHECK(verify_oi_decomposition(g, eta, kappa, compose(eta, kappa), 0));

    // one-step case on a two-production toy grammar
    Cftg two = parse_grammar(
        "terminals #/0 g/1\nnonterminals S/0\naxiom S\nrule S -> g(#)\nrule S -> #\n");
    Tuple eta2(Tree::parse("S"), 0);
    Tuple kappa2(std::vector<Tree>{}, 0);
    Tuple t2(Tree::parse("g(#)"), 0);
    CHECK(verify_oi_decomposition(two, eta2, kappa2, t2, 1));

    // adversarial wrong step count
    CHECK_THROWS_AS(verify_oi_decomposition(two, eta2, kappa2, t2, 3), ClaimError);
}

TEST_CASE("verify_oi_decomposition on engine-generated instances") {
    Cftg g = parse_grammar(
        "terminals #/0 g/1 f/2\n"
        "nonterminals S/0 U/1\n"
        "axiom S\n"
        "rule S -> U(#)\n"
        "rule S -> #\n"
        "rule U(x1) -> g(x1)\n"
        "rule U(x1) -> f(x1,#)\n");
    std::mt19937 rng(77);
    RankedAlphabet all = g.combined();
    int verified = 0;
    for (int round = 0; round < 400 && verified < 100; ++round) {
        int p = 1 + static_cast<int>(rng() % 2);
        int q = 1 + static_cast<int>(rng() % 2);
        int r = static_cast<int>(rng() % 3);
        std::vector<Tree> ec, kc;
        for (int i = 0; i < p; ++i) ec.push_back(fixtures::random_tree(rng, all, q, 2));
        for (int i = 0; i < q; ++i) kc.push_back(fixtures::random_tree(rng, all, r, 2));
        Tuple eta(std::move(ec), q), kappa(std::move(kc), r);
        Tuple start = compose(eta, kappa);
        auto layers = derivation_layers(g, start, 4, 100000);
        for (int n = 0; n <= 4 && verified < 100; ++n) {
            for (const Tuple& t : layers[n]) {
                bool terminal = true;
                for (const Tree& c : t.components())
                    if (!is_terminal_form(g, c)) { terminal = false; break; }
                if (!terminal) continue;
                CHECK(verify_oi_decomposition(g, eta, kappa, t, n));
                ++verified;
                break;
            }
        }
    }
    CHECK(verified >= 100);
}
