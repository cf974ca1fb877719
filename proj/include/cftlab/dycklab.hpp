#ifndef CFTLAB_DYCKLAB_HPP
#define CFTLAB_DYCKLAB_HPP

#include <string>
#include <vector>

#include "cftlab/dyck.hpp"
#include "cftlab/grammar.hpp"
#include "cftlab/hom.hpp"

namespace cftlab {

struct Fixtures {
    Cftg gex;
    TreeHomomorphism hex;
};

/// The spine grammar over delta1/delta2 and its preimage homomorphism
/// sigma |-> delta1(x1, delta2(x2, x3)).
Fixtures build_fixtures();

/// Parameters of the Dyck word sequence. alpha_i = c a^{i*e} c and
/// beta_i = d b^{i*e} d; e is a scale unit standing in for the full-size
/// exponent factor.
struct DyckParams {
    int p = 1;
    int e = 1;

    int q() const { return 2 * p; }
    long m() const { return (1L << (q() - 1)) + 1; }
    std::string alpha(int i) const;
    std::string beta(int i) const;
};

/// iota of a spine tree sigma(v1#,u1#,.) -o ... : per spine node the left
/// chain word followed by the reversed right chain word. The first left
/// chain and the last right chain may be empty (#). Shape violations raise
/// ScopeError.
std::string iota(const Tree& t);

/// iota' for sentential forms over delta1/delta2/A: delta1(v#, eta) |-> v .
/// iota'(eta), delta2(u#, eta) |-> u^R . iota'(eta), A(v#, u#, eta) |->
/// v . u^R . iota'(eta).
std::string iota_sentential(const Tree& form);

struct MembershipReport {
    bool shape_ok = false;
    bool counts_ok = false;
    bool dyck_ok = false;
    Membership gex_member = Membership::NoWithinLimits;
    bool necessary_ok() const { return shape_ok && counts_ok && dyck_ok; }
};

/// Necessary-condition flags for membership in the preimage language, plus a
/// bounded membership check of the image in the spine grammar.
MembershipReport membership_props(const Tree& t, const Limits& limits);

/// The count identity along sentential forms of the spine grammar.
bool sentential_counts_ok(const Tree& form);

/// Unique monadic completion of a tree with a single chain hole (variable
/// x1): the returned chain makes the block shapes legal and iota balanced.
/// CompletionError if none exists; uniqueness is asserted by bounded search.
Tree complete_chain(const Tree& holed);

/// Word of the i-th Dyck sequence element.
std::string gen_U(int i, const DyckParams& params);

/// The chain tuple of U_i: alternating reversed a-chains and b-chains,
/// 2^{i-1} pairs.
std::vector<std::string> chains_Z(int i, const DyckParams& params);

struct Defect {
    bool a_kind = true;  // a-defect (alpha blocks) or b-defect (beta blocks)
    int lo = 0, hi = 0;  // block indices lo..hi, ascending
    int chain = 0;       // owning chain ordinal among chains of the same kind (1-based)
    std::string word(const DyckParams& params) const;
    bool operator==(const Defect&) const = default;
};

/// A cut of U_i after the j-th a-chain.
struct Factorization {
    int i = 0, j = 0;
    std::string P, S;            // P + S == U_i
    std::vector<bool> v_is_U;    // V_l == U_l, index l-1, l in [i-1]
    std::vector<bool> w_is_U;    // W_l == U_l
    std::string D;               // $-marked word
    std::vector<Defect> defects; // i+1 of them
};

Factorization factorize(int i, int j, const DyckParams& params);

/// Exponents of the maximal a-runs of a word, left to right.
std::vector<int> a_run_exponents(const std::string& word);
/// Rewrites the a-run exponents (0 deletes a run); vector length must match.
std::string apply_perturbation(const std::string& word, const std::vector<int>& exponents);

/// True iff the perturbed prefix P'_{i,j} is congruent to P_{i,j}.
bool perturb_check(int i, int j, const std::vector<int>& exponents, const DyckParams& params);

struct KeyLemmaReport {
    long cases = 0;
    long counterexamples = 0;
    long structural_cases = 0;
    long structural_failures = 0;
    bool ok() const { return counterexamples == 0 && structural_failures == 0; }
};

/// Exhaustive check over all j and all perturbation vectors with exponents
/// <= exp_bound: congruence holds iff every inner block perturbation reduces
/// to the empty word and every explicit alpha exponent is unchanged. Also
/// checks that a perturbed U_l reduces to the empty word or to c...d.
KeyLemmaReport check_key_lemma(int i, int exp_bound, const DyckParams& params);

} // namespace cftlab

#endif
