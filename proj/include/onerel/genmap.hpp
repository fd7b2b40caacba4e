#ifndef ONEREL_GENMAP_HPP
#define ONEREL_GENMAP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "onerel/word.hpp"

namespace onerel {

// The parametric Nielsen map families.  Composition is written postfix
// throughout: w * (m1 m2) means apply m1 first, then m2.
enum class Family : std::uint8_t { Alpha, Beta, Zeta, Delta, Psi };

struct FamilyTag {
  Family fam;
  long long k;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

struct ConjTag {
  Word by;

  friend bool operator==(const ConjTag&, const ConjTag&) = default;
};

// monostate = untagged/custom endomorphism.
using MapTag = std::variant<std::monostate, FamilyTag, ConjTag>;

// An endomorphism of F(a, b) given by the images of a and b.
struct GenMap {
  Word image_a;
  Word image_b;
  MapTag tag;

  friend bool operator==(const GenMap& l, const GenMap& r) {
    return l.image_a == r.image_a && l.image_b == r.image_b;
  }
};

inline GenMap identity_map() {
  return {Word::a(), Word::b(), FamilyTag{Family::Delta, 0}};
}

// alpha_k: a -> a^-1 b^k, b -> b        beta_k: a -> a b^k, b -> b^-1
// zeta_k:  a -> a^-1 b^k, b -> b^-1     delta_k: a -> a b^k, b -> b
// psi_k:   a -> a,        b -> b^k      (k != 0)
inline GenMap family(Family fam, long long k) {
  Word ia, ib;
  switch (fam) {
    case Family::Alpha:
      ia = Word::a(-1) * Word::b(k);
      ib = Word::b();
      break;
    case Family::Beta:
      ia = Word::a() * Word::b(k);
      ib = Word::b(-1);
      break;
    case Family::Zeta:
      ia = Word::a(-1) * Word::b(k);
      ib = Word::b(-1);
      break;
    case Family::Delta:
      ia = Word::a() * Word::b(k);
      ib = Word::b();
      break;
    case Family::Psi:
      if (k == 0) throw std::invalid_argument("family: psi_0 is not injective");
      ia = Word::a();
      ib = Word::b(k);
      break;
  }
  return {std::move(ia), std::move(ib), FamilyTag{fam, k}};
}

// gamma_w: x -> w^-1 x w.
inline GenMap conjugation(const Word& w) {
  return {w.inverse() * Word::a() * w, w.inverse() * Word::b() * w,
          ConjTag{w}};
}

inline Word apply(const GenMap& m, const Word& w) {
  Word out;
  for (const auto& syl : w.syllables()) {
    const Word& image = syl.gen == Gen::A ? m.image_a : m.image_b;
    out.append(image.pow(syl.exp));
  }
  return out;
}

namespace detail {

inline std::optional<FamilyTag> match_family(const Word& ia, const Word& ib) {
  // b-image must be b^e, e = +-1 for the four transversal families, or the
  // a-image must be a for a psi map.
  const auto& sb = ib.syllables();
  const auto& sa = ia.syllables();
  if (sb.size() == 1 && sb[0].gen == Gen::B) {
    const long long e1 = sb[0].exp;
    long long eps0 = 0, k = 0;
    if (sa.size() == 1 && sa[0].gen == Gen::A &&
        (sa[0].exp == 1 || sa[0].exp == -1)) {
      eps0 = sa[0].exp;
    } else if (sa.size() == 2 && sa[0].gen == Gen::A &&
               (sa[0].exp == 1 || sa[0].exp == -1) && sa[1].gen == Gen::B) {
      eps0 = sa[0].exp;
      k = sa[1].exp;
    }
    if (eps0 != 0 && (e1 == 1 || e1 == -1)) {
      if (eps0 == 1 && e1 == 1) return FamilyTag{Family::Delta, k};
      if (eps0 == -1 && e1 == 1) return FamilyTag{Family::Alpha, k};
      if (eps0 == 1 && e1 == -1) return FamilyTag{Family::Beta, k};
      return FamilyTag{Family::Zeta, k};
    }
    if (sa.size() == 1 && sa[0].gen == Gen::A && sa[0].exp == 1 && e1 != 0)
      return FamilyTag{Family::Psi, e1};
  }
  return std::nullopt;
}

}  // namespace detail

// Postfix composition: apply(compose(m1, m2), w) == apply(m2, apply(m1, w)).
inline GenMap compose(const GenMap& m1, const GenMap& m2) {
  GenMap out{apply(m2, m1.image_a), apply(m2, m1.image_b), std::monostate{}};
  if (auto tag = detail::match_family(out.image_a, out.image_b)) out.tag = *tag;
  return out;
}

// Rows are the exponent-sum vectors of the generator images.
struct AbelMatrix {
  std::array<std::array<long long, 2>, 2> m;

  [[nodiscard]] long long det() const {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  }

  friend bool operator==(const AbelMatrix&, const AbelMatrix&) = default;

  friend AbelMatrix operator*(const AbelMatrix& l, const AbelMatrix& r) {
    AbelMatrix p{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        p.m[i][j] = l.m[i][0] * r.m[0][j] + l.m[i][1] * r.m[1][j];
    return p;
  }
};

inline AbelMatrix abel_matrix(const GenMap& g) {
  return {{{{exponent_sum(g.image_a, Gen::A), exponent_sum(g.image_a, Gen::B)},
            {exponent_sum(g.image_b, Gen::A),
             exponent_sum(g.image_b, Gen::B)}}}};
}

// One elementary Nielsen move: replace element `target` (0 or 1) by the
// product with the other element on the given side, optionally inverted.
struct NielsenMove {
  int target;
  bool left;      // true: x -> y^e x, false: x -> x y^e
  bool inverted;  // e = -1 when true

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

struct NielsenResult {
  bool is_basis;
  Word first;
  Word second;
  std::vector<NielsenMove> trace;
};

// Greedy length reduction by the eight signed product moves.  A generating
// pair of F(a, b) always admits a strictly shortening move until it reaches
// total length two, so the terminal pair is {x^+-1, y^+-1} with distinct
// generators exactly when the input pair is a basis.
inline NielsenResult nielsen_reduce_pair(Word u, Word v) {
  std::vector<NielsenMove> trace;
  for (;;) {
    const long long total = u.length() + v.length();
    long long best = total;
    NielsenMove best_move{};
    Word best_first, best_second;
    for (int target = 0; target < 2; ++target) {
      const Word& x = target == 0 ? u : v;
      const Word& y = target == 0 ? v : u;
      for (const bool left : {false, true}) {
        for (const bool inverted : {false, true}) {
          const Word factor = inverted ? y.inverse() : y;
          const Word candidate = left ? factor * x : x * factor;
          const long long len =
              candidate.length() + (target == 0 ? v.length() : u.length());
          if (len < best) {
            best = len;
            best_move = {target, left, inverted};
            best_first = target == 0 ? candidate : u;
            best_second = target == 0 ? v : candidate;
          }
        }
      }
    }
    if (best == total) break;
    u = std::move(best_first);
    v = std::move(best_second);
    trace.push_back(best_move);
  }
  const bool basis = u.length() == 1 && v.length() == 1 &&
                     u.syllables()[0].gen != v.syllables()[0].gen;
  return {basis, std::move(u), std::move(v), std::move(trace)};
}

inline bool is_basis_pair(const GenMap& m) {
  return nielsen_reduce_pair(m.image_a, m.image_b).is_basis;
}

// Decides whether m2 = gamma_w o m1 ... i.e. whether some w conjugates both
// images of m1 onto those of m2 simultaneously in F(a, b).  Returns a
// witness with m2.image = w^-1 * m1.image * w.
//
// The solution set of the a-image conjugacy is a coset rho^t * w0 of the
// cyclic centraliser, so only a bounded window of t can keep the conjugated
// b-image short enough to match.
inline std::optional<Word> mod_inn_equal(const GenMap& m1, const GenMap& m2) {
  if (m1.image_a.empty() || m1.image_b.empty() || m2.image_a.empty() ||
      m2.image_b.empty())
    throw std::invalid_argument("mod_inn_equal: trivial image");

  const auto [core1, conj1] = cyclic_reduce(m1.image_a);
  const auto [core2, conj2] = cyclic_reduce(m2.image_a);
  const auto ring1 = core1.letters();
  const auto ring2 = core2.letters();
  if (ring1.size() != ring2.size()) return std::nullopt;

  // Find one rotation offset aligning the cores.
  std::optional<std::size_t> offset;
  for (std::size_t r = 0; r < ring1.size() && !offset; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < ring1.size() && match; ++i)
      match = ring1[(r + i) % ring1.size()] == ring2[i];
    if (match) offset = r;
  }
  if (!offset) return std::nullopt;

  const Word rotator = Word::from_letters(std::vector<Letter>(
      ring1.begin(), ring1.begin() + static_cast<long>(*offset)));
  const Word w0 = conj1 * rotator * conj2.inverse();

  const auto root = is_proper_power(core1);
  const Word rho = conj1 * root.root * conj1.inverse();

  const long long window =
      2 * (m1.image_b.length() + m2.image_b.length() + w0.length()) + 8;
  for (long long t = 0; t <= window; ++t) {
    for (const long long signed_t : {t, -t}) {
      const Word w = rho.pow(signed_t) * w0;
      if (w.inverse() * m1.image_b * w == m2.image_b) return w;
      if (t == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace onerel

#endif  // ONEREL_GENMAP_HPP
