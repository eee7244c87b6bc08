#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bsq/errors.hpp"

namespace bsq {

enum class Gen : std::uint8_t { A, B };

inline char gen_char(Gen g) { return g == Gen::A ? 'a' : 'b'; }

struct Syllable {
  Gen gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Free-group word over {a, b} in run-length syllable form. The reduced
/// invariant (no zero exponents, no adjacent syllables with the same
/// generator) is established by free_reduce; every exported operation
/// returns reduced words. The empty word is the identity.
using GroupWord = std::vector<Syllable>;

namespace detail {

// Run-length free reduction; works for any syllable type with .gen/.exp.
template <class Syl>
std::vector<Syl> merge_reduce(const std::vector<Syl>& w) {
  std::vector<Syl> out;
  out.reserve(w.size());
  for (const auto& s : w) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp = checked_add(out.back().exp, s.exp);
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace detail

GroupWord free_reduce(const GroupWord& w);
GroupWord invert(const GroupWord& w);
GroupWord concat(const GroupWord& u, const GroupWord& v);

/// g^k as a reduced word; the identity when k == 0.
GroupWord gen_power(Gen g, std::int64_t k);

/// conjugate(x, y, +1) = y^-1 x y and conjugate(x, y, -1) = y x y^-1.
GroupWord conjugate(const GroupWord& x, const GroupWord& y, int sign);

/// Grammar: word := "1" | (atom exp?)* with atom "a"|"b", exp "^" ["-"] digits.
/// Whitespace is insignificant. Zero exponents parse and reduce away.
GroupWord parse_word(std::string_view text);

/// Inverse of parse_word on reduced words; the identity renders as "1".
std::string render_word(const GroupWord& w);

/// One signed operand of a left-associated quandle term.
struct TermFactor {
  std::string atom;
  int sign;  // +1 for *, -1 for *^-1
  friend bool operator==(const TermFactor&, const TermFactor&) = default;
};

/// x1 *^e1 x2 *^e2 ... *^e(k-1) xk, always stored left-associated: a head
/// atom plus an ordered list of signed atom operands. An empty tail is a
/// bare atom.
struct QuandleTerm {
  std::string head;
  std::vector<TermFactor> tail;
  friend bool operator==(const QuandleTerm&, const QuandleTerm&) = default;
};

/// Grammar: term := operand (op operand)* with op "*" | "*^-1" | "*-1" and
/// operand := atom | "(" term ")". Atom names are bare identifiers and may
/// be multi-character ("a^m" is a single atom). Parenthesized right operands
/// are renormalized into left-associated form via
///   x *^e (h *^d1 o1 ... *^dk ok)
///     = x *^-dk ok ... *^-d1 o1 *^e h *^d1 o1 ... *^dk ok.
QuandleTerm parse_term(std::string_view text);

/// Canonical rendering: " * " and " *^-1 " separators.
std::string render_term(const QuandleTerm& t);

/// lhs *^sign rhs, renormalized so the result is left-associated again.
QuandleTerm apply_term_operand(QuandleTerm lhs, const QuandleTerm& rhs, int sign);

using AtomAssignment = std::map<std::string, GroupWord>;
using TermSubstitution = std::map<std::string, QuandleTerm>;

/// Conjugation-quandle expansion: folds u * v -> v^-1 u v (and
/// u *^-1 v -> v u v^-1) left to right; the result is free-reduced.
/// Throws std::invalid_argument on an atom missing from sigma.
GroupWord expand_term(const QuandleTerm& t, const AtomAssignment& sigma);

/// Atom-wise substitution; atoms absent from phi are kept. The result is
/// renormalized to left-associated form.
QuandleTerm substitute(const QuandleTerm& t, const TermSubstitution& phi);

}  // namespace bsq
