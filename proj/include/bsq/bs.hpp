#pragma once

#include <cstdint>

#include "bsq/rational.hpp"
#include "bsq/word.hpp"

namespace bsq {

/// The one-relator presentation < a, b | b^-1 a^m b = a^n >.
struct BsPresentation {
  std::int64_t m;
  std::int64_t n;
  BsPresentation(std::int64_t m_, std::int64_t n_) : m(m_), n(n_) {
    if (m == 0 || n == 0)
      throw std::invalid_argument("presentation parameters must be nonzero");
  }
};

enum class PinchOrder { LeftmostFirst, RightmostFirst };

struct ReduceLimits {
  // Any exponent magnitude beyond this aborts with LimitError; pinches can
  // grow exponents by a factor of |n/m| each.
  std::int64_t max_exponent = std::int64_t{1} << 62;
};

/// Removes every pinch b^-1 a^(qm) b -> a^(qn) and b a^(qn) b^-1 -> a^(qm),
/// free-reducing after each rewrite. The result represents the same group
/// element and contains no pinch. The scan restarts from the chosen end
/// after every rewrite; the verdict of is_identity does not depend on the
/// order.
GroupWord pinch_reduce(const GroupWord& w, const BsPresentation& p,
                       PinchOrder order = PinchOrder::LeftmostFirst,
                       const ReduceLimits& limits = {});

/// Word problem: a pinch-free word with a b-syllable is nontrivial, and a
/// power a^k is trivial iff k == 0.
bool is_identity(const GroupWord& w, const BsPresentation& p,
                 PinchOrder order = PinchOrder::LeftmostFirst,
                 const ReduceLimits& limits = {});

/// equal(u, v) = is_identity(u v^-1).
bool equal(const GroupWord& u, const GroupWord& v, const BsPresentation& p,
           PinchOrder order = PinchOrder::LeftmostFirst,
           const ReduceLimits& limits = {});

/// Image in the abelianization: the a-component lives in Z/|n-m| (plain Z
/// when n == m, encoded as modulus 0), the b-component in Z.
struct AbelianImage {
  std::int64_t modulus;
  std::int64_t a;
  std::int64_t b;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

AbelianImage abelian_image(const GroupWord& w, const BsPresentation& p);

/// Distinct abelianization images certify non-conjugacy; matching images
/// say nothing.
enum class ConjugacyVerdict { DistinctByAbelianization, Inconclusive };

ConjugacyVerdict conjugacy_obstruction(const GroupWord& u, const GroupWord& v,
                                       const BsPresentation& p);

/// Affine map x -> scale * x + offset with exact rational coefficients.
struct AffineMap {
  Rational scale{1};
  Rational offset{0};

  /// Composition "apply *this first, then g".
  AffineMap then(const AffineMap& g) const {
    return {g.scale * scale, g.scale * offset + g.offset};
  }
  bool is_identity() const { return scale == Rational{1} && offset == Rational{0}; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Evaluates w under a -> x + 1, b -> n * x, composing the syllables left to
/// right as actions. For m = 1 and |n| >= 2 this action is faithful, so the
/// result is the identity map iff w = 1 in BS(1, n); for |n| = 1 the action
/// collapses b and the equivalence fails.
AffineMap affine_eval(const GroupWord& w, std::int64_t n);

}  // namespace bsq
