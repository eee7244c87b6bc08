#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsq {

/// Sorted prime divisors of |k|; empty for k = +-1. Throws on k = 0.
std::vector<std::int64_t> prime_support(std::int64_t k);

/// |m| = 1 or |n| = 1 or |m| = |n|.
bool bs_residually_finite(std::int64_t m, std::int64_t n);

/// Residually finite, or equal prime supports.
bool bs_hopfian(std::int64_t m, std::int64_t n);

/// Same predicate as bs_residually_finite; kept separate because the quandle
/// statement is its own result.
bool conj_bs_residually_finite(std::int64_t m, std::int64_t n);

/// NonHopfian exactly when the group is non-Hopfian; every other case is
/// left open (no positive verdict exists to report).
enum class HopfVerdict { NonHopfian, Open };

HopfVerdict conj_bs_hopf_status(std::int64_t m, std::int64_t n);

enum class CaseRoute { RF, Case1, Case2, Case3 };

struct RouteResult {
  CaseRoute route;
  // Case3 only: (m/k, n/k) with k = gcd(|m|, |n|); always re-routes to Case1.
  std::optional<std::pair<std::int64_t, std::int64_t>> reduced;
};

RouteResult route_case(std::int64_t m, std::int64_t n);

struct Classification {
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool group_rf = false;
  bool group_hopf = false;
  bool conj_rf = false;
  HopfVerdict conj_hopf = HopfVerdict::Open;
  int open_question = 0;  // 1 or 2 when conj_hopf == Open, else 0
  CaseRoute route = CaseRoute::RF;
  std::optional<std::pair<std::int64_t, std::int64_t>> reduced;
  bool conj_infinitely_generated = true;  // holds for every presentation
};

Classification classify(std::int64_t m, std::int64_t n);

std::string route_name(CaseRoute r);

/// Stable key=value lines for golden-file comparisons.
std::string render_classification(const Classification& c);

}  // namespace bsq
