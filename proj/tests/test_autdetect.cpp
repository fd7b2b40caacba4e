#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "onerel/aut_check.hpp"
#include "onerel/text.hpp"

using namespace onerel;

namespace {

Word W(const char* text) { return parse_word(text); }

Word random_cyclic_relator(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 3);
  for (;;) {
    std::vector<Letter> ls;
    while (static_cast<int>(ls.size()) < len) {
      const int c = pick(rng);
      const Letter l{c < 2 ? Gen::A : Gen::B, (c & 1) != 0};
      if (!ls.empty() && ls.back() == l.inverse()) continue;
      ls.push_back(l);
    }
    const Word core = cyclic_reduce(Word::from_letters(ls)).core;
    if (!core.empty() && !is_proper_power(core).is_proper) return core;
  }
}

}  // namespace

TEST_CASE("worked verdicts") {
  CHECK(is_relator_auto(W("a b A b^2"), family(Family::Delta, 1)) ==
        AutVerdict::FixesRelator);
  CHECK(is_relator_auto(W("a b A b^2"), family(Family::Beta, 0)) ==
        AutVerdict::InvertsRelator);
  CHECK(is_relator_auto(W("a b A b^2"), family(Family::Alpha, 0)) ==
        AutVerdict::NotAut);
  CHECK(is_relator_auto(W("a b A b^2"), family(Family::Zeta, 0)) ==
        AutVerdict::NotAut);
  CHECK(is_relator_auto(W("a b A b"), family(Family::Zeta, 0)) ==
        AutVerdict::InvertsRelator);
  // a^-1 b a b is itself a rotation of a b a^-1 b, so alpha_0 fixes it.
  CHECK(is_relator_auto(W("a b A b"), family(Family::Alpha, 0)) ==
        AutVerdict::FixesRelator);
  CHECK(is_relator_auto(W("a b A b"), family(Family::Beta, 0)) ==
        AutVerdict::InvertsRelator);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(is_relator_auto(W("a b A"), identity_map()),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_relator_auto(W("a b a b"), identity_map()),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      is_relator_auto(W("a b A b^2"), GenMap{W("a^2"), W("b"), {}}),
      std::invalid_argument);
}

TEST_CASE("identity fixes every relator") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const Word s = random_cyclic_relator(rng, 2 + trial % 20);
    CHECK(is_relator_auto(s, identity_map()) == AutVerdict::FixesRelator);
  }
}

TEST_CASE("verdict invariance under rotation and inversion") {
  std::mt19937_64 rng(73);
  const GenMap maps[] = {family(Family::Alpha, 0), family(Family::Beta, 0),
                         family(Family::Zeta, 0), family(Family::Delta, 1)};
  for (int trial = 0; trial < 200; ++trial) {
    const Word s = random_cyclic_relator(rng, 2 + trial % 16);
    for (const auto& m : maps) {
      const AutVerdict base = is_relator_auto(s, m);

      auto ls = s.letters();
      std::rotate(ls.begin(), ls.begin() + static_cast<long>(trial % ls.size()),
                  ls.end());
      CHECK(is_relator_auto(Word::from_letters(ls), m) == base);

      const AutVerdict inv = is_relator_auto(s.inverse(), m);
      switch (base) {
        case AutVerdict::NotAut: CHECK(inv == AutVerdict::NotAut); break;
        case AutVerdict::FixesRelator:
          CHECK(inv == AutVerdict::FixesRelator);
          break;
        case AutVerdict::InvertsRelator:
          CHECK(inv == AutVerdict::InvertsRelator);
          break;
      }
    }
  }
}

TEST_CASE("automorphisms are closed under composition") {
  std::mt19937_64 rng(79);
  const GenMap maps[] = {family(Family::Alpha, 0), family(Family::Beta, 0),
                         family(Family::Zeta, 0), family(Family::Delta, 1),
                         family(Family::Delta, -2)};
  for (int trial = 0; trial < 400; ++trial) {
    const Word s = random_cyclic_relator(rng, 2 + trial % 14);
    for (const auto& m1 : maps)
      for (const auto& m2 : maps) {
        if (is_relator_auto(s, m1) == AutVerdict::NotAut) continue;
        if (is_relator_auto(s, m2) == AutVerdict::NotAut) continue;
        CHECK(is_relator_auto(s, compose(m1, m2)) != AutVerdict::NotAut);
      }
  }
}

TEST_CASE("the length-preserving trio") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const Word s = random_cyclic_relator(rng, 2 + trial % 20);
    for (const Family f : {Family::Alpha, Family::Beta, Family::Zeta})
      CHECK(apply(family(f, 0), s).length() == s.length());
  }
}
