#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "bsq/classify.hpp"

using namespace bsq;

namespace {

// Closed-form predicates recomputed from scratch for grid comparisons.
std::set<std::int64_t> pi(std::int64_t k) {
  std::set<std::int64_t> out;
  k = k < 0 ? -k : k;
  for (std::int64_t d = 2; d <= k; ++d)
    while (k % d == 0) {
      out.insert(d);
      k /= d;
    }
  return out;
}

std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

TEST_CASE("prime_support") {
  CHECK(prime_support(12) == std::vector<std::int64_t>{2, 3});
  CHECK(prime_support(-1).empty());
  CHECK(prime_support(1).empty());
  CHECK(prime_support(18) == std::vector<std::int64_t>{2, 3});
  CHECK(prime_support(-97) == std::vector<std::int64_t>{97});
  CHECK_THROWS_AS(prime_support(0), std::invalid_argument);
}

TEST_CASE("bs_residually_finite") {
  CHECK(bs_residually_finite(1, 5));
  CHECK(bs_residually_finite(3, -3));
  CHECK_FALSE(bs_residually_finite(2, 3));
  CHECK_THROWS_AS(bs_residually_finite(0, 1), std::invalid_argument);
}

TEST_CASE("bs_hopfian") {
  CHECK(bs_hopfian(2, 4));
  CHECK_FALSE(bs_hopfian(2, 3));
  CHECK(bs_hopfian(1, 7));
}

TEST_CASE("conj_bs_residually_finite") {
  CHECK_FALSE(conj_bs_residually_finite(2, 3));
  CHECK(conj_bs_residually_finite(-4, 4));
  CHECK(conj_bs_residually_finite(1, 1000));
}

TEST_CASE("conj_bs_hopf_status") {
  CHECK(conj_bs_hopf_status(2, 3) == HopfVerdict::NonHopfian);
  CHECK(conj_bs_hopf_status(2, 4) == HopfVerdict::Open);
  CHECK(conj_bs_hopf_status(1, 2) == HopfVerdict::Open);
}

TEST_CASE("route_case") {
  CHECK(route_case(2, 3).route == CaseRoute::Case1);
  CHECK(route_case(2, 4).route == CaseRoute::Case2);
  RouteResult r = route_case(12, 18);
  CHECK(r.route == CaseRoute::Case3);
  REQUIRE(r.reduced.has_value());
  CHECK(*r.reduced == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(route_case(2, 6).route == CaseRoute::Case1);
  CHECK(route_case(3, 3).route == CaseRoute::RF);
  CHECK(route_case(-12, 18).reduced ==
        std::pair<std::int64_t, std::int64_t>{-2, 3});
}

TEST_CASE("classify examples") {
  Classification c23 = classify(2, 3);
  CHECK_FALSE(c23.group_rf);
  CHECK_FALSE(c23.group_hopf);
  CHECK_FALSE(c23.conj_rf);
  CHECK(c23.conj_hopf == HopfVerdict::NonHopfian);
  CHECK(c23.route == CaseRoute::Case1);
  CHECK(c23.conj_infinitely_generated);

  Classification c33 = classify(3, 3);
  CHECK(c33.group_rf);
  CHECK(c33.group_hopf);
  CHECK(c33.conj_rf);
  CHECK(c33.conj_hopf == HopfVerdict::Open);
  CHECK(c33.open_question == 1);
  CHECK(c33.route == CaseRoute::RF);

  CHECK(classify(4, 6).route == CaseRoute::Case1);  // pi(4)={2}, pi(6)={2,3}
  CHECK(classify(2, 4).open_question == 2);
  CHECK_THROWS_AS(classify(0, 4), std::invalid_argument);
}

TEST_CASE("render_classification is stable") {
  CHECK(render_classification(classify(2, 3)) ==
        "m=2\n"
        "n=3\n"
        "group_rf=false\n"
        "group_hopf=false\n"
        "conj_rf=false\n"
        "conj_hopf=NonHopfian\n"
        "conj_infinitely_generated=true\n"
        "route=Case1\n");
  CHECK(render_classification(classify(12, 18)) ==
        "m=12\n"
        "n=18\n"
        "group_rf=false\n"
        "group_hopf=true\n"
        "conj_rf=false\n"
        "conj_hopf=Open(Q2)\n"
        "conj_infinitely_generated=true\n"
        "route=Case3\n"
        "reduced=(2,3)\n");
}

TEST_CASE("quandle and group criteria coincide on the grid") {
  for (std::int64_t m = -8; m <= 8; ++m)
    for (std::int64_t n = -8; n <= 8; ++n) {
      if (m == 0 || n == 0) continue;
      CHECK(conj_bs_residually_finite(m, n) == bs_residually_finite(m, n));
      Classification c = classify(m, n);
      CHECK(c.conj_rf == (c.route == CaseRoute::RF));
    }
}

TEST_CASE("residual finiteness implies the Hopf property") {
  for (std::int64_t m = -8; m <= 8; ++m)
    for (std::int64_t n = -8; n <= 8; ++n) {
      if (m == 0 || n == 0) continue;
      if (bs_residually_finite(m, n)) CHECK(bs_hopfian(m, n));
    }
}

TEST_CASE("NonHopfian exactly mirrors the group verdict") {
  for (std::int64_t m = -8; m <= 8; ++m)
    for (std::int64_t n = -8; n <= 8; ++n) {
      if (m == 0 || n == 0) continue;
      CHECK((conj_bs_hopf_status(m, n) == HopfVerdict::NonHopfian) ==
            !bs_hopfian(m, n));
    }
}

TEST_CASE("routes are total, exclusive, and match the closed forms") {
  for (std::int64_t m = -8; m <= 8; ++m)
    for (std::int64_t n = -8; n <= 8; ++n) {
      if (m == 0 || n == 0) continue;
      bool rf = magnitude(m) == 1 || magnitude(n) == 1 ||
                magnitude(m) == magnitude(n);
      bool divides = magnitude(n) % magnitude(m) == 0 ||
                     magnitude(m) % magnitude(n) == 0;
      CaseRoute expected;
      if (rf)
        expected = CaseRoute::RF;
      else if (pi(m) != pi(n))
        expected = CaseRoute::Case1;
      else if (divides)
        expected = CaseRoute::Case2;
      else
        expected = CaseRoute::Case3;
      CHECK(route_case(m, n).route == expected);
    }
}

TEST_CASE("case-3 reduction always lands in case 1") {
  for (std::int64_t m = -30; m <= 30; ++m)
    for (std::int64_t n = -30; n <= 30; ++n) {
      if (m == 0 || n == 0) continue;
      RouteResult r = route_case(m, n);
      if (r.route != CaseRoute::Case3) continue;
      REQUIRE(r.reduced.has_value());
      auto [rm, rn] = *r.reduced;
      CHECK(route_case(rm, rn).route == CaseRoute::Case1);
      std::int64_t k = std::gcd(magnitude(m), magnitude(n));
      CHECK(k > 1);
      CHECK(rm * k == m);
      CHECK(rn * k == n);
    }
}

TEST_CASE("verdicts are sign-insensitive") {
  for (std::int64_t m = 1; m <= 8; ++m)
    for (std::int64_t n = 1; n <= 8; ++n)
      for (std::int64_t sm : {1, -1})
        for (std::int64_t sn : {1, -1}) {
          Classification base = classify(m, n);
          Classification flipped = classify(sm * m, sn * n);
          CHECK(base.group_rf == flipped.group_rf);
          CHECK(base.group_hopf == flipped.group_hopf);
          CHECK(base.conj_rf == flipped.conj_rf);
          CHECK(base.conj_hopf == flipped.conj_hopf);
          CHECK(base.open_question == flipped.open_question);
          CHECK(base.route == flipped.route);
        }
}
