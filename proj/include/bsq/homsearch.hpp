#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsq/bs.hpp"
#include "bsq/quandle.hpp"
#include "bsq/word.hpp"

namespace bsq {

/// Permutation of {0..d-1} as an image vector; composition follows the
/// function convention (f g)(x) = f(g(x)).
using Permutation = std::vector<int>;

Permutation perm_identity(int degree);
Permutation perm_compose(const Permutation& f, const Permutation& g);
Permutation perm_inverse(const Permutation& f);
Permutation perm_power(const Permutation& f, std::int64_t k);

/// One-line notation, 1-based: "2 3 1".
std::string render_perm(const Permutation& f);

bool satisfies_bs_relation(const Permutation& alpha, const Permutation& beta,
                           const BsPresentation& p);

/// Images of a and b in Sym(degree) satisfying b^-1 a^m b = a^n; the relation
/// is checked at construction.
struct PermutationPair {
  int degree;
  Permutation alpha;
  Permutation beta;
  PermutationPair(Permutation a, Permutation b, const BsPresentation& p);
};

struct SearchLimits {
  int max_degree = 7;  // d!^2 enumeration; keep d small
};

/// All pairs (alpha, beta) of degree-d permutations satisfying the defining
/// relation, in lexicographic order of their one-line notations, stopping at
/// `limit`. A cycle-type prefilter on alpha^m vs alpha^n prunes the beta scan.
std::vector<PermutationPair> find_perm_quotients(const BsPresentation& p,
                                                 int degree,
                                                 std::size_t limit = SIZE_MAX,
                                                 const SearchLimits& limits = {});

/// Substitutes alpha for a and beta for b; homomorphic, so
/// eval(uv) = eval(u) composed with eval(v).
Permutation eval_word_perm(const GroupWord& w, const PermutationPair& pp);

/// First quotient (by degree, then enumeration order) whose evaluations of u
/// and v differ. Requires u != v in BS(m,n) and throws std::invalid_argument
/// otherwise.
std::optional<PermutationPair> separate(const GroupWord& u, const GroupWord& v,
                                        const BsPresentation& p, int dmax,
                                        const SearchLimits& limits = {});

/// Backtracking enumeration of generator-image assignments into a finite
/// quandle under which every relation term pair evaluates equal; exhaustive
/// in lexicographic order up to `limit`. Soundness of the relation sample is
/// the caller's concern.
std::vector<std::vector<int>> quandle_homs(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<QuandleTerm, QuandleTerm>>& relations,
    const FiniteQuandle& target, std::size_t limit);

enum class WitnessCase { Case1, Case2, ConjZ };

struct SurjectivityEvidence {
  int depth = 0;
  std::vector<std::string> images;     // rendered image words
  std::vector<std::string> recovered;  // rendered generators to recover
  bool pass = false;
};

struct NonInjectivityEvidence {
  std::string lhs_term;
  std::string rhs_term;
  std::string lhs_word;
  std::string rhs_word;
  std::string image_word;  // common image, reduced
  bool images_equal = false;
  bool preimages_distinct = false;
  bool pass() const { return images_equal && preimages_distinct; }
};

struct ConsistencySummary {
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool pass() const { return failed == 0; }
};

struct PrintedInequality {
  std::string lhs;
  std::string rhs;
  bool distinct = false;
};

/// Machine-checked evidence for one non-injective surjective endomorphism:
/// generator recovery at bounded depth, an equal-image pair with distinct
/// preimages, and sampled homomorphism identities.
struct WitnessReport {
  WitnessCase case_id;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t window = 0;  // ConjZ only
  bool mirrored = false;    // Case2 with the divisor on the other side
  std::vector<std::pair<std::string, std::string>> generator_map;
  SurjectivityEvidence surjectivity;
  NonInjectivityEvidence noninjectivity;
  ConsistencySummary consistency;
  std::optional<PrintedInequality> printed_inequality;
  std::vector<std::pair<std::string, std::string>> extra;  // case-specific lines

  bool pass() const {
    return surjectivity.pass && noninjectivity.pass() && consistency.pass();
  }
  /// Stable key=value rendering for golden-file comparisons.
  std::string render() const;
};

/// a -> a^m, b -> b, a^m -> a on the Dehn generators {a, b, a^m}.
/// Precondition: |m| != 1 != |n| and the prime supports differ.
WitnessReport verify_case1_witness(const BsPresentation& p);

/// a -> a, b -> b, a^m -> a^m * b (mirrored to a^n -> a^n *^-1 b when the
/// divisibility runs the other way). Precondition: |m| != 1 != |n|, equal
/// prime supports, and one exponent properly divides the other.
WitnessReport verify_case2_witness(const BsPresentation& p);

/// The shift-toward-zero self-map of Conj(Z) on exponents.
std::int64_t conj_z_shift(std::int64_t k);

/// Trivial-quandle demonstration on exponents [-window, window]: the shift
/// map is a surjective-on-the-window homomorphism identifying 0 and 1.
WitnessReport conj_z_demo(std::int64_t window);

}  // namespace bsq
