#include "bsq/bs.hpp"

#include <cstdlib>

namespace bsq {

namespace {

void enforce_exponent_limit(const GroupWord& w, const ReduceLimits& limits) {
  for (const auto& s : w) {
    std::int64_t mag = s.exp == INT64_MIN ? INT64_MAX : std::abs(s.exp);
    if (mag > limits.max_exponent)
      throw LimitError("exponent magnitude exceeds the configured limit");
  }
}

// A pinch sits at syllables (i, i+1, i+2) = (b^p, a^j, b^q) where the letters
// adjacent to a^j have opposite signs. Writes the rewritten a-exponent and
// returns true when the divisibility test passes.
bool pinch_at(const GroupWord& w, std::size_t i, const BsPresentation& p,
              std::int64_t* new_exp) {
  if (i + 2 >= w.size()) return false;
  const Syllable& l = w[i];
  const Syllable& mid = w[i + 1];
  const Syllable& r = w[i + 2];
  if (l.gen != Gen::B || mid.gen != Gen::A || r.gen != Gen::B) return false;
  if (l.exp < 0 && r.exp > 0) {  // b^-1 a^j b with m | j
    if (mid.exp % p.m != 0) return false;
    *new_exp = checked_mul(mid.exp / p.m, p.n);
    return true;
  }
  if (l.exp > 0 && r.exp < 0) {  // b a^j b^-1 with n | j
    if (mid.exp % p.n != 0) return false;
    *new_exp = checked_mul(mid.exp / p.n, p.m);
    return true;
  }
  return false;
}

GroupWord apply_pinch(const GroupWord& w, std::size_t i, std::int64_t new_exp) {
  GroupWord next;
  next.reserve(w.size());
  next.insert(next.end(), w.begin(), w.begin() + i);
  std::int64_t l = w[i].exp + (w[i].exp < 0 ? 1 : -1);
  std::int64_t r = w[i + 2].exp + (w[i + 2].exp < 0 ? 1 : -1);
  next.push_back({Gen::B, l});
  next.push_back({Gen::A, new_exp});
  next.push_back({Gen::B, r});
  next.insert(next.end(), w.begin() + i + 3, w.end());
  return free_reduce(next);
}

}  // namespace

GroupWord pinch_reduce(const GroupWord& w, const BsPresentation& p,
                       PinchOrder order, const ReduceLimits& limits) {
  GroupWord cur = free_reduce(w);
  enforce_exponent_limit(cur, limits);
  for (;;) {
    bool found = false;
    std::size_t site = 0;
    std::int64_t new_exp = 0;
    if (order == PinchOrder::LeftmostFirst) {
      for (std::size_t i = 0; i + 2 < cur.size(); ++i)
        if (pinch_at(cur, i, p, &new_exp)) {
          site = i;
          found = true;
          break;
        }
    } else {
      for (std::size_t i = cur.size(); i-- > 0;) {
        if (i + 2 >= cur.size()) continue;
        if (pinch_at(cur, i, p, &new_exp)) {
          site = i;
          found = true;
          break;
        }
      }
    }
    if (!found) return cur;
    cur = apply_pinch(cur, site, new_exp);
    enforce_exponent_limit(cur, limits);
  }
}

bool is_identity(const GroupWord& w, const BsPresentation& p, PinchOrder order,
                 const ReduceLimits& limits) {
  GroupWord r = pinch_reduce(w, p, order, limits);
  for (const auto& s : r)
    if (s.gen == Gen::B) return false;
  return r.empty();
}

bool equal(const GroupWord& u, const GroupWord& v, const BsPresentation& p,
           PinchOrder order, const ReduceLimits& limits) {
  return is_identity(concat(u, invert(v)), p, order, limits);
}

AbelianImage abelian_image(const GroupWord& w, const BsPresentation& p) {
  std::int64_t a_sum = 0;
  std::int64_t b_sum = 0;
  for (const auto& s : free_reduce(w)) {
    if (s.gen == Gen::A)
      a_sum = checked_add(a_sum, s.exp);
    else
      b_sum = checked_add(b_sum, s.exp);
  }
  std::int64_t modulus = checked_abs(checked_sub(p.n, p.m));
  if (modulus > 0) a_sum = ((a_sum % modulus) + modulus) % modulus;
  return {modulus, a_sum, b_sum};
}

ConjugacyVerdict conjugacy_obstruction(const GroupWord& u, const GroupWord& v,
                                       const BsPresentation& p) {
  return abelian_image(u, p) == abelian_image(v, p)
             ? ConjugacyVerdict::Inconclusive
             : ConjugacyVerdict::DistinctByAbelianization;
}

namespace {

// n^k as an exact rational, k of either sign. |n| = 1 is special-cased so
// huge exponents cannot loop.
Rational scale_power(std::int64_t n, std::int64_t k) {
  if (n == 1) return Rational{1};
  if (n == -1) return Rational{(k % 2 == 0) ? 1 : -1};
  bool recip = k < 0;
  std::int64_t e = recip ? checked_neg(k) : k;
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < e; ++i) acc = checked_mul(acc, n);
  return recip ? Rational{1, acc} : Rational{acc};
}

}  // namespace

AffineMap affine_eval(const GroupWord& w, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("n must be nonzero");
  AffineMap acc;
  for (const auto& s : free_reduce(w)) {
    AffineMap step;
    if (s.gen == Gen::A)
      step = {Rational{1}, Rational{s.exp}};
    else
      step = {scale_power(n, s.exp), Rational{0}};
    acc = acc.then(step);
  }
  return acc;
}

}  // namespace bsq
