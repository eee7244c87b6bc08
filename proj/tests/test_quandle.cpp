#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "bsq/quandle.hpp"
#include "oracles.hpp"

using namespace bsq;

// symmetric_group(3) orders elements lexicographically by one-line notation:
// 0 = id, 1 = (1 2), 2 = (0 1), 3 = (0 1 2), 4 = (0 2 1), 5 = (0 2).
namespace {
const std::vector<int> kS3Transpositions{1, 2, 5};
const std::vector<int> kS3ThreeCycles{3, 4};
}  // namespace

TEST_CASE("trivial quandles satisfy the axioms") {
  for (int k : {1, 2, 3, 4}) {
    FiniteQuandle q = trivial_quandle(k);
    CHECK(check_axioms(q).pass());
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) CHECK(q.at(x, y) == x);
  }
}

TEST_CASE("conjugation quandle of S3 passes the axioms") {
  CHECK(check_axioms(conj_quandle(symmetric_group(3))).pass());
}

TEST_CASE("mutating a diagonal breaks idempotence with the right witness") {
  FiniteQuandle q = trivial_quandle(3);
  q.at(1, 1) = 2;
  AxiomReport report = check_axioms(q);
  CHECK_FALSE(report.pass());
  CHECK(std::count(report.failures.begin(), report.failures.end(),
                   AxiomFailure{1, 1, -1, -1}) == 1);
  // the same mutation collides in column 1
  bool column_collision = false;
  for (const auto& f : report.failures)
    column_collision = column_collision || (f.axiom == 2 && f.z == 1);
  CHECK(column_collision);
}

TEST_CASE("check_axioms rejects out-of-range entries") {
  FiniteQuandle q{2, {0, 3, 1, 1}};
  CHECK_THROWS_AS(check_axioms(q), std::invalid_argument);
}

TEST_CASE("conj_quandle of abelian groups is trivial") {
  CHECK(conj_quandle(cyclic_group(5)) == trivial_quandle(5));
  CHECK(conj_quandle(cyclic_group(1)) == trivial_quandle(1));
}

TEST_CASE("conj_quandle of S3: transpositions form a subquandle") {
  FiniteQuandle q = conj_quandle(symmetric_group(3));
  CHECK(q.size == 6);
  for (int x : kS3Transpositions)
    for (int y : kS3Transpositions)
      CHECK(std::count(kS3Transpositions.begin(), kS3Transpositions.end(),
                       q.at(x, y)) == 1);
  CHECK(check_axioms(restrict_to(q, kS3Transpositions)).pass());
}

TEST_CASE("inverse_table identities") {
  FiniteQuandle triv = trivial_quandle(4);
  CHECK(inverse_table(triv) == triv);

  FiniteGroupTable s3 = symmetric_group(3);
  FiniteQuandle q = conj_quandle(s3);
  FiniteQuandle inv = inverse_table(q);
  // x *^-1 y is conjugation by y^-1
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y)
      CHECK(inv.at(x, y) == s3.mul(s3.mul(y, x), s3.inv(y)));
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y) {
      CHECK(inv.at(q.at(x, y), y) == x);
      CHECK(q.at(inv.at(x, y), y) == x);
    }
  CHECK(inverse_table(inv) == q);
}

TEST_CASE("dehn_quandle_finite carriers") {
  FiniteGroupTable s3 = symmetric_group(3);
  DehnQuandle d = dehn_quandle_finite(s3, {kS3Transpositions[0]});
  CHECK(d.carrier == kS3Transpositions);
  CHECK(d.quandle.size == 3);
  CHECK(check_axioms(d.quandle).pass());

  DehnQuandle identity_only = dehn_quandle_finite(s3, {s3.identity});
  CHECK(identity_only.carrier == std::vector<int>{s3.identity});
  CHECK(identity_only.quandle.size == 1);

  FiniteGroupTable c4 = cyclic_group(4);
  DehnQuandle gen = dehn_quandle_finite(c4, {1});
  CHECK(gen.carrier == std::vector<int>{1});
}

TEST_CASE("dehn carrier is a union of conjugacy classes") {
  FiniteGroupTable s4 = symmetric_group(4);
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<int> xs{static_cast<int>(rng() % s4.size)};
    if (rng() % 2) xs.push_back(static_cast<int>(rng() % s4.size));
    DehnQuandle d = dehn_quandle_finite(s4, xs);
    std::set<int> expected;
    for (int x : xs) {
      auto cls = oracle::conjugacy_class(s4, x);
      expected.insert(cls.begin(), cls.end());
    }
    CHECK(d.carrier == std::vector<int>(expected.begin(), expected.end()));
    CHECK(check_axioms(d.quandle).pass());
  }
}

TEST_CASE("subquandle_closure examples") {
  FiniteQuandle triv = trivial_quandle(5);
  CHECK(subquandle_closure(triv, {2, 4}) == std::vector<int>{2, 4});

  FiniteQuandle q = conj_quandle(symmetric_group(3));
  CHECK(subquandle_closure(q, {kS3Transpositions[0], kS3ThreeCycles[0]}) ==
        std::vector<int>{1, 2, 3, 4, 5});

  std::vector<int> everything(q.size);
  for (int i = 0; i < q.size; ++i) everything[i] = i;
  CHECK(subquandle_closure(q, everything) == everything);
}

TEST_CASE("subquandle_closure is monotone and idempotent") {
  FiniteQuandle q = conj_quandle(symmetric_group(4));
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<int> seed{static_cast<int>(rng() % q.size)};
    if (rng() % 2) seed.push_back(static_cast<int>(rng() % q.size));
    std::vector<int> closed = subquandle_closure(q, seed);
    for (int s : seed)
      CHECK(std::count(closed.begin(), closed.end(), s) == 1);
    CHECK(subquandle_closure(q, closed) == closed);
    CHECK(check_axioms(restrict_to(q, closed)).pass());
    std::vector<int> bigger = seed;
    bigger.push_back(static_cast<int>(rng() % q.size));
    std::vector<int> closed_bigger = subquandle_closure(q, bigger);
    CHECK(std::includes(closed_bigger.begin(), closed_bigger.end(),
                        closed.begin(), closed.end()));
  }
}

TEST_CASE("free_quandle_canonical strips leading own-atom powers") {
  AtomWord x3y{{"x", 3}, {"y", 1}};
  CHECK(free_quandle_canonical("x", x3y) ==
        FreeQuandleElement{"x", {{"y", 1}}});
  AtomWord y{{"y", 1}};
  CHECK(free_quandle_canonical("x", y) == FreeQuandleElement{"x", y});
  AtomWord yx2{{"y", 1}, {"x", 2}};
  CHECK(free_quandle_canonical("x", yx2) == FreeQuandleElement{"x", yx2});
  AtomWord cancels{{"x", 2}, {"x", -2}, {"y", 1}};
  CHECK(free_quandle_canonical("x", cancels) ==
        FreeQuandleElement{"x", {{"y", 1}}});
}

TEST_CASE("free-quandle equality matches conjugate equality in the free group") {
  // brute force over every reduced conjugator of length <= 6 on two atoms
  std::vector<std::string> words = oracle::reduced_letter_words(6);
  auto to_atom_word = [](const std::string& letters) {
    AtomWord w;
    for (char c : letters) {
      std::string atom(1, std::tolower(static_cast<unsigned char>(c)));
      w.push_back({atom, std::isupper(static_cast<unsigned char>(c)) ? -1 : +1});
    }
    return reduce_atom_word(w);
  };
  auto is_power_of = [](const std::string& letters, char atom) {
    for (char c : letters)
      if (std::tolower(static_cast<unsigned char>(c)) != atom) return false;
    return true;
  };
  std::vector<FreeQuandleElement> canon;
  canon.reserve(words.size());
  for (const auto& w : words) canon.push_back(free_quandle_canonical("x", to_atom_word(w)));
  std::size_t agreements = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      bool same_element = is_power_of(
          oracle::reduce_letters(words[i] + oracle::invert_letters(words[j])), 'x');
      REQUIRE((canon[i] == canon[j]) == same_element);
      ++agreements;
    }
  CHECK(agreements == words.size() * (words.size() + 1) / 2);
  // different atoms never coincide
  CHECK(free_quandle_canonical("x", {}) != free_quandle_canonical("y", {}));
}

TEST_CASE("bounded_closure_bs examples") {
  ClosureLimits limits;
  auto contains = [](const std::vector<GroupWord>& elems, const GroupWord& w,
                     const BsPresentation& p) {
    for (const auto& e : elems)
      if (equal(e, w, p)) return true;
    return false;
  };

  BsPresentation p23(2, 3);
  auto depth0 = bounded_closure_bs(p23, {parse_word("a")}, 0, limits);
  CHECK(depth0.size() == 1);
  CHECK(depth0[0] == parse_word("a"));

  BsPresentation p24(2, 4);
  auto closure24 = bounded_closure_bs(
      p24, {parse_word("a"), parse_word("b"), parse_word("a^4")}, 1, limits);
  CHECK(contains(closure24, parse_word("a^2"), p24));

  auto closure23 = bounded_closure_bs(
      p23, {parse_word("a"), parse_word("b"), parse_word("a^2")}, 1, limits);
  CHECK(contains(closure23, parse_word("a^3"), p23));
}

TEST_CASE("bounded_closure_bs respects its limits") {
  BsPresentation p(2, 3);
  ClosureLimits limits;
  limits.max_depth = 2;
  CHECK_THROWS_AS(bounded_closure_bs(p, {parse_word("a")}, 3, limits),
                  std::invalid_argument);
  CHECK_THROWS_AS(bounded_closure_bs(p, {}, 1, limits), std::invalid_argument);
  limits.max_depth = 4;
  limits.max_elements = 4;
  CHECK_THROWS_AS(
      bounded_closure_bs(p, {parse_word("a"), parse_word("b")}, 3, limits),
      LimitError);
}

TEST_CASE("closure elements are pairwise distinct under bs equality") {
  BsPresentation p(2, 4);
  auto elems = bounded_closure_bs(
      p, {parse_word("a"), parse_word("b"), parse_word("a^4")}, 2);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      CHECK_FALSE(equal(elems[i], elems[j], p));
}

TEST_CASE("quandle file round trip is bit-exact") {
  FiniteQuandle q = conj_quandle(symmetric_group(3));
  std::ostringstream out;
  write_quandle(out, q);
  std::istringstream in(out.str());
  CHECK(read_quandle(in) == q);

  std::istringstream golden("2\n0 0\n1 1\n");
  CHECK(read_quandle(golden) == trivial_quandle(2));
  std::ostringstream rewritten;
  write_quandle(rewritten, trivial_quandle(2));
  CHECK(rewritten.str() == "2\n0 0\n1 1\n");
}

TEST_CASE("group file round trip and validation") {
  FiniteGroupTable g = symmetric_group(3);
  std::ostringstream out;
  write_group(out, g);
  std::istringstream in(out.str());
  FiniteGroupTable back = read_group(in);
  CHECK(back.product == g.product);
  CHECK(back.identity == g.identity);
  CHECK(back.inverse == g.inverse);
}

TEST_CASE("malformed table files are rejected") {
  std::istringstream short_row("2\n0 0\n1\n");
  CHECK_THROWS_AS(read_quandle(short_row), ParseError);
  std::istringstream out_of_range("2\n0 2\n1 1\n");
  CHECK_THROWS_AS(read_quandle(out_of_range), ParseError);
  std::istringstream bad_size("0\n");
  CHECK_THROWS_AS(read_quandle(bad_size), ParseError);
  std::istringstream not_a_group("2\n0 0\n0 0\n0\n");
  CHECK_THROWS_AS(read_group(not_a_group), std::invalid_argument);
}

TEST_CASE("make_group rejects broken tables") {
  // v * w = v has no identity
  CHECK_THROWS_AS(make_group(2, {0, 0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_group(2, {0, 1, 1, 2}), std::invalid_argument);
}
