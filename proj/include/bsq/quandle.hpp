#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bsq/bs.hpp"
#include "bsq/word.hpp"

namespace bsq {

/// Finite quandle as an n x n operation table over elements 0..n-1,
/// row-major: table[x * size + y] = x * y.
struct FiniteQuandle {
  int size = 0;
  std::vector<int> table;

  int at(int x, int y) const { return table[static_cast<std::size_t>(x) * size + y]; }
  int& at(int x, int y) { return table[static_cast<std::size_t>(x) * size + y]; }
  friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;
};

/// axiom 1: x witnesses x * x != x.
/// axiom 2: (x, y, z) witnesses the column collision x * z == y * z, x != y.
/// axiom 3: (x, y, z) witnesses (x*y)*z != (x*z)*(y*z).
struct AxiomFailure {
  int axiom;
  int x = -1;
  int y = -1;
  int z = -1;
  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;
  bool pass() const { return failures.empty(); }
};

/// Exhaustive check of the three quandle axioms; reports every violation.
/// Throws std::invalid_argument on a table entry outside [0, size).
AxiomReport check_axioms(const FiniteQuandle& q);

FiniteQuandle trivial_quandle(int k);

/// Finite group by multiplication table; identity and inverses are derived
/// and all group laws are verified at construction.
struct FiniteGroupTable {
  int size = 0;
  std::vector<int> product;  // row-major
  std::vector<int> inverse;
  int identity = 0;

  int mul(int x, int y) const { return product[static_cast<std::size_t>(x) * size + y]; }
  int inv(int x) const { return inverse[x]; }
};

FiniteGroupTable make_group(int size, std::vector<int> product);
FiniteGroupTable cyclic_group(int k);
/// Permutations of {0..degree-1} in lexicographic one-line order; composition
/// is (f g)(x) = f(g(x)). Degree is capped at 5 to keep tables small.
FiniteGroupTable symmetric_group(int degree);

/// x * y = y^-1 x y over a finite group.
FiniteQuandle conj_quandle(const FiniteGroupTable& g);

/// Table of the inverse operation: entry (x, y) is the unique z with
/// z * y = x. Satisfies (x * y) *^-1 y = x = (x *^-1 y) * y.
FiniteQuandle inverse_table(const FiniteQuandle& q);

struct DehnQuandle {
  FiniteQuandle quandle;
  std::vector<int> carrier;  // quandle index -> group element, ascending
};

/// Conjugation quandle restricted to the closure of xs under conjugation by
/// every group element (a union of conjugacy classes).
DehnQuandle dehn_quandle_finite(const FiniteGroupTable& g,
                                const std::vector<int>& xs);

/// Smallest superset of seed closed under * and *^-1; sorted ascending.
std::vector<int> subquandle_closure(const FiniteQuandle& q,
                                    const std::vector<int>& seed);

/// Reindexes q onto the given subset; throws if the subset is not closed.
FiniteQuandle restrict_to(const FiniteQuandle& q, const std::vector<int>& subset);

/// Free words over an arbitrary atom alphabet (run-length form, reduced by
/// reduce_atom_word). Used as conjugators of free-quandle elements.
struct AtomSyllable {
  std::string gen;
  std::int64_t exp;
  friend bool operator==(const AtomSyllable&, const AtomSyllable&) = default;
};
using AtomWord = std::vector<AtomSyllable>;

AtomWord reduce_atom_word(const AtomWord& w);
AtomWord invert_atom_word(const AtomWord& w);
AtomWord concat_atom_word(const AtomWord& u, const AtomWord& v);

/// An element w^-1 x w of the free quandle, canonical when the conjugator is
/// reduced and does not begin with a power of the element's own atom. Two
/// elements are equal iff their canonical forms match exactly.
struct FreeQuandleElement {
  std::string atom;
  AtomWord conjugator;
  friend bool operator==(const FreeQuandleElement&, const FreeQuandleElement&) = default;
};

FreeQuandleElement free_quandle_canonical(std::string atom, AtomWord conjugator);

struct ClosureLimits {
  int max_depth = 4;
  std::size_t max_elements = 4096;
  ReduceLimits reduce;
};

/// Elements of Conj(BS(m,n)) reachable from the generators by at most
/// `depth` applications of * and *^-1 with operands drawn from the generator
/// list. Each element is pinch-reduced; deduplication uses bs equality.
std::vector<GroupWord> bounded_closure_bs(const BsPresentation& p,
                                          const std::vector<GroupWord>& generators,
                                          int depth,
                                          const ClosureLimits& limits = {});

// File format: line 1 = n, then n rows of n space-separated 0-based entries.
// The group format appends one line holding the identity index.
FiniteQuandle read_quandle(std::istream& in);
void write_quandle(std::ostream& out, const FiniteQuandle& q);
FiniteGroupTable read_group(std::istream& in);
void write_group(std::ostream& out, const FiniteGroupTable& g);

}  // namespace bsq
