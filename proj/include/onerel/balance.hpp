#ifndef ONEREL_BALANCE_HPP
#define ONEREL_BALANCE_HPP

#include <cstdlib>
#include <stdexcept>

#include "onerel/genmap.hpp"
#include "onerel/word.hpp"

namespace onerel {

// A presentation <a, b; s^n> equivalent to the input one, rewritten so the
// relator has a-exponent sum zero.  basis_change is the automorphism of
// F(a, b) that was applied to the original relator.
struct BalancedPresentation {
  Word s;  // cyclically reduced, sigma_a(s) = 0
  long long n = 2;
  GenMap basis_change;
  bool primitive = false;   // s was b^+-1, stored normalised to b
  bool in_derived = false;  // sigma_b(s) = 0 as well
};

enum class Branch { Derived, Primitive, Generic };

namespace detail {

// Nearest integer to p/q, ties broken toward zero.
inline long long rounded_quotient(long long p, long long q) {
  const long long quot = p / q;
  const long long rem = p % q;
  if (std::abs(rem) * 2 > std::abs(q))
    return quot + ((p < 0) != (q < 0) ? -1 : 1);
  return quot;
}

}  // namespace detail

// Euclidean descent on the exponent-sum vector: alternately apply
// a -> a b^t and b -> b a^t until one exponent sum vanishes, then swap the
// generators if needed so that the a-sum is the one equal to zero.
inline BalancedPresentation balance_relator(const Word& r, long long n) {
  if (r.empty()) throw std::invalid_argument("balance_relator: empty relator");
  if (n <= 1) throw std::invalid_argument("balance_relator: n must exceed 1");
  if (is_proper_power(r).is_proper)
    throw std::invalid_argument("balance_relator: relator is a proper power");

  BalancedPresentation out;
  out.n = n;
  out.basis_change = identity_map();

  long long p = exponent_sum(r, Gen::A);
  long long q = exponent_sum(r, Gen::B);
  Word w = r;

  if (p == 0 && q == 0) {
    out.in_derived = true;
    out.s = cyclic_reduce(w).core;
    return out;
  }

  auto step = [&](const GenMap& m) {
    w = apply(m, w);
    out.basis_change = compose(out.basis_change, m);
  };

  while (p != 0 && q != 0) {
    if (std::abs(q) >= std::abs(p)) {
      const long long t = -detail::rounded_quotient(q, p);
      step(family(Family::Delta, t));  // a -> a b^t: q += t p
      q += t * p;
    } else {
      const long long t = -detail::rounded_quotient(p, q);
      step(GenMap{Word::a(), Word::b() * Word::a(t), std::monostate{}});
      p += t * q;  // b -> b a^t
    }
  }
  if (q == 0) step(GenMap{Word::b(), Word::a(), std::monostate{}});  // swap

  out.s = cyclic_reduce(w).core;
  if (out.s.length() == 1 && out.s.syllables()[0].gen == Gen::B) {
    out.primitive = true;
    if (out.s.syllables()[0].exp < 0) {
      step(GenMap{Word::a(), Word::b(-1), std::monostate{}});
      out.s = Word::b();
    }
  }
  return out;
}

inline Branch detect_branch(const BalancedPresentation& bp) {
  if (bp.in_derived) return Branch::Derived;
  if (bp.primitive) return Branch::Primitive;
  return Branch::Generic;
}

}  // namespace onerel

#endif  // ONEREL_BALANCE_HPP
