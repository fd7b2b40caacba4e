#ifndef ONEREL_AUT_CHECK_HPP
#define ONEREL_AUT_CHECK_HPP

#include <stdexcept>

#include "onerel/genmap.hpp"
#include "onerel/word.hpp"

namespace onerel {

enum class AutVerdict { NotAut, FixesRelator, InvertsRelator };

// Relator-conjugacy criterion for G = <a, b; s^n>: a Nielsen transformation
// m defines an automorphism of G exactly when it carries the relator to a
// free conjugate of itself or of its inverse.  Roots are unique up to
// conjugacy, so testing the root s decides the criterion for s^n as well.
inline AutVerdict is_relator_auto(const Word& s, const GenMap& m) {
  if (s.empty())
    throw std::invalid_argument("is_relator_auto: empty relator");
  {
    const auto cr = cyclic_reduce(s);
    if (!cr.conjugator.empty())
      throw std::invalid_argument(
          "is_relator_auto: relator must be cyclically reduced");
  }
  if (is_proper_power(s).is_proper)
    throw std::invalid_argument(
        "is_relator_auto: relator must not be a proper power");
  if (!is_basis_pair(m))
    throw std::invalid_argument(
        "is_relator_auto: map is not a Nielsen transformation");

  const CyclicWord image(apply(m, s));
  const CyclicWord relator(s);
  if (image == relator) return AutVerdict::FixesRelator;
  if (image == relator.inverse()) return AutVerdict::InvertsRelator;
  return AutVerdict::NotAut;
}

}  // namespace onerel

#endif  // ONEREL_AUT_CHECK_HPP
