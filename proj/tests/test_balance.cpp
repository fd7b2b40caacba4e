#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "onerel/balance.hpp"
#include "onerel/text.hpp"

using namespace onerel;

namespace {

Word W(const char* text) { return parse_word(text); }

Word random_reduced_word(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> ls;
  while (static_cast<int>(ls.size()) < len) {
    const int c = pick(rng);
    const Letter l{c < 2 ? Gen::A : Gen::B, (c & 1) != 0};
    if (!ls.empty() && ls.back() == l.inverse()) continue;
    ls.push_back(l);
  }
  return Word::from_letters(ls);
}

// Whitehead's algorithm in rank two: a word is primitive iff the twelve
// type-II Whitehead automorphisms greedily reduce its cyclic length to one.
bool whitehead_primitive(const Word& w) {
  std::vector<GenMap> moves;
  for (const long long e : {1LL, -1LL}) {
    // multiplier a^e, acting on b
    moves.push_back({W("a"), Word::b() * Word::a(e), std::monostate{}});
    moves.push_back({W("a"), Word::a(-e) * Word::b(), std::monostate{}});
    moves.push_back(
        {W("a"), Word::a(-e) * Word::b() * Word::a(e), std::monostate{}});
    // multiplier b^e, acting on a
    moves.push_back({Word::a() * Word::b(e), W("b"), std::monostate{}});
    moves.push_back({Word::b(-e) * Word::a(), W("b"), std::monostate{}});
    moves.push_back(
        {Word::b(-e) * Word::a() * Word::b(e), W("b"), std::monostate{}});
  }
  Word cur = cyclic_reduce(w).core;
  for (;;) {
    if (cur.length() <= 1) return cur.length() == 1;
    bool improved = false;
    for (const auto& m : moves) {
      const Word image = cyclic_reduce(apply(m, cur)).core;
      if (image.length() < cur.length()) {
        cur = image;
        improved = true;
        break;
      }
    }
    if (!improved) return false;
  }
}

}  // namespace

TEST_CASE("balancing worked examples") {
  SUBCASE("a^2 b^2") {
    const auto bp = balance_relator(W("a^2 b^2"), 2);
    CHECK(bp.s == W("b A b a"));
    CHECK(exponent_sum(bp.s, Gen::A) == 0);
    CHECK(exponent_sum(bp.s, Gen::B) == 2);
    CHECK_FALSE(bp.primitive);
    CHECK_FALSE(bp.in_derived);
  }
  SUBCASE("already balanced input is untouched") {
    const auto bp = balance_relator(W("a b A b^2"), 2);
    CHECK(bp.s == W("a b A b^2"));
    CHECK(bp.basis_change == identity_map());
  }
  SUBCASE("primitive relator normalises to b") {
    const auto bp = balance_relator(W("a^2 b a b"), 2);
    CHECK(bp.primitive);
    CHECK(bp.s == W("b"));
  }
  SUBCASE("commutator lands in the derived branch") {
    const auto bp = balance_relator(W("a b A B"), 2);
    CHECK(bp.in_derived);
    CHECK(bp.basis_change == identity_map());
    CHECK(detect_branch(bp) == Branch::Derived);
  }
  SUBCASE("branch routing") {
    CHECK(detect_branch(balance_relator(W("b"), 3)) == Branch::Primitive);
    CHECK(detect_branch(balance_relator(W("a b A b^2"), 2)) ==
          Branch::Generic);
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(balance_relator(Word(), 2), std::invalid_argument);
    CHECK_THROWS_AS(balance_relator(W("a b a b"), 2), std::invalid_argument);
    CHECK_THROWS_AS(balance_relator(W("a b"), 1), std::invalid_argument);
  }
}

TEST_CASE("balancing contract on random relators") {
  std::mt19937_64 rng(61);
  int seen = 0;
  for (int attempt = 0; seen < 1000; ++attempt) {
    const Word r = random_reduced_word(rng, 1 + attempt % 40);
    if (is_proper_power(r).is_proper) continue;
    ++seen;
    const long long p = exponent_sum(r, Gen::A);
    const long long q = exponent_sum(r, Gen::B);
    const auto bp = balance_relator(r, 2);

    CHECK(exponent_sum(bp.s, Gen::A) == 0);
    CHECK(std::abs(exponent_sum(bp.s, Gen::B)) ==
          std::gcd(std::abs(p), std::abs(q)));
    CHECK(std::abs(abel_matrix(bp.basis_change).det()) == 1);
    CHECK(bp.in_derived == (p == 0 && q == 0));

    // Replaying the recorded basis change reproduces s up to rotation or
    // inversion.
    const Word replay = cyclic_reduce(apply(bp.basis_change, r)).core;
    const CyclicWord got(replay);
    CHECK((got == CyclicWord(bp.s) || got == CyclicWord(bp.s.inverse())));

    // Re-balancing the output changes nothing.
    const auto again = balance_relator(bp.s, 2);
    CHECK(again.s == bp.s);
    CHECK(again.basis_change == identity_map());
  }
}

TEST_CASE("primitivity detection") {
  SUBCASE("known primitives and non-primitives") {
    CHECK(whitehead_primitive(W("a")));
    CHECK(whitehead_primitive(W("b")));
    CHECK(whitehead_primitive(W("a b")));
    CHECK(whitehead_primitive(W("b^2 a B")));
    CHECK(whitehead_primitive(W("a b a b A")));  // conjugate of ab
    CHECK_FALSE(whitehead_primitive(W("a^2")));
    CHECK_FALSE(whitehead_primitive(W("a b A B")));
    CHECK_FALSE(whitehead_primitive(W("a b A b^2")));
    CHECK_FALSE(whitehead_primitive(W("a^2 b^2")));

    CHECK(balance_relator(W("a"), 2).primitive);
    CHECK(balance_relator(W("a b"), 2).primitive);
    CHECK(balance_relator(W("b^2 a B"), 2).primitive);
    CHECK(balance_relator(W("a b a b A"), 2).primitive);
  }
  SUBCASE("agrees with the Whitehead oracle on short words") {
    std::mt19937_64 rng(67);
    int seen = 0;
    for (int attempt = 0; seen < 400; ++attempt) {
      const Word r = random_reduced_word(rng, 1 + attempt % 12);
      if (is_proper_power(r).is_proper) continue;
      ++seen;
      CHECK(balance_relator(r, 2).primitive == whitehead_primitive(r));
    }
  }
}
