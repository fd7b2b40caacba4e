#ifndef ONEREL_CLASSIFY_HPP
#define ONEREL_CLASSIFY_HPP

#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "onerel/aut_check.hpp"
#include "onerel/balance.hpp"
#include "onerel/genmap.hpp"
#include "onerel/text.hpp"
#include "onerel/word.hpp"

namespace onerel {

// Raised when a witness combination excluded by the classification theory
// shows up; it indicates an implementation bug, not bad input.
class theory_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct OutClass {
  enum class Kind {
    Trivial,
    C2,
    C2xC2,
    Z,
    ZxC2,
    Dinf,
    DinfxC2,
    PrimitiveDnAutCn,
    DerivedCommutator,
    DerivedUnclassified,
  };

  Kind kind = Kind::Trivial;
  long long n = 0;  // set for PrimitiveDnAutCn

  friend bool operator==(const OutClass&, const OutClass&) = default;
};

inline std::string to_string(OutClass::Kind k) {
  switch (k) {
    case OutClass::Kind::Trivial: return "Trivial";
    case OutClass::Kind::C2: return "C2";
    case OutClass::Kind::C2xC2: return "C2xC2";
    case OutClass::Kind::Z: return "Z";
    case OutClass::Kind::ZxC2: return "ZxC2";
    case OutClass::Kind::Dinf: return "Dinf";
    case OutClass::Kind::DinfxC2: return "DinfxC2";
    case OutClass::Kind::PrimitiveDnAutCn: return "PrimitiveDnAutCn";
    case OutClass::Kind::DerivedCommutator: return "DerivedCommutator";
    case OutClass::Kind::DerivedUnclassified: return "DerivedUnclassified";
  }
  return "?";
}

inline std::string to_string(const OutClass& c) {
  if (c.kind == OutClass::Kind::PrimitiveDnAutCn)
    return "PrimitiveDnAutCn(" + std::to_string(c.n) + ")";
  return to_string(c.kind);
}

// Which of the transversal maps passed the relator criterion.
struct Witnesses {
  bool delta_in = false;
  std::set<long long> alpha_ks;
  std::set<long long> beta_ks;
  bool zeta0_in = false;

  friend bool operator==(const Witnesses&, const Witnesses&) = default;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relators;
  std::string iso_label;

  [[nodiscard]] std::string to_text() const {
    std::string out = "⟨ ";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out += ", ";
      out += generators[i];
    }
    out += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (i) out += ", ";
      out += relators[i];
    }
    out += " ⟩";
    return out;
  }
};

struct ClassificationReport {
  OutClass out_class;
  Witnesses witnesses;
  BalancedPresentation balanced;
  std::optional<ScanStats> scan;
  GroupPresentation out_presentation;
  std::optional<GroupPresentation> aut_presentation;
  std::vector<std::string> trace;
};

// Candidate exponents for the finite branch, read off the scan extremes:
// alpha_k can pass only for k = -(max+ + min+) or
// min- - min+ <= k <= max- - max+, and beta_k mirrors it.
inline std::set<long long> alpha_candidate_ks(const ScanStats& st) {
  std::set<long long> ks;
  ks.insert(-(*st.max_plus + *st.min_plus));
  for (long long k = *st.min_minus - *st.min_plus;
       k <= *st.max_minus - *st.max_plus; ++k)
    ks.insert(k);
  return ks;
}

inline std::set<long long> beta_candidate_ks(const ScanStats& st) {
  std::set<long long> ks;
  ks.insert(*st.max_plus + *st.min_plus);
  for (long long k = *st.max_plus - *st.max_minus;
       k <= *st.min_plus - *st.min_minus; ++k)
    ks.insert(k);
  return ks;
}

inline long long euler_totient(long long n) {
  long long count = 0;
  for (long long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

inline long long primitive_out_order(long long n) {
  if (n <= 1) throw std::invalid_argument("primitive_out_order: n must exceed 1");
  return 2 * n * euler_totient(n);
}

namespace detail {

inline std::string join_tokens(std::initializer_list<std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (t.empty() || t == "1") continue;
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out.empty() ? "1" : out;
}

inline std::string power_relator(const Word& s, long long n) {
  if (s.length() == 1) {
    Word powered = s;
    powered.push(s.syllables()[0].gen, s.syllables()[0].exp * (n - 1));
    return format_word(powered);
  }
  return "(" + format_word(s) + ")^" + std::to_string(n);
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Alpha: return "alpha";
    case Family::Beta: return "beta";
    case Family::Zeta: return "zeta";
    case Family::Delta: return "delta";
    case Family::Psi: return "psi";
  }
  return "?";
}

// Conjugation-action relators x^phi = image for x in {a, b}.
inline void push_action_relators(std::vector<std::string>& rels,
                                 const std::string& name, const GenMap& map) {
  rels.push_back(join_tokens(
      {name + "^-1", "a", name, format_word(map.image_a.inverse())}));
  rels.push_back(join_tokens(
      {name + "^-1", "b", name, format_word(map.image_b.inverse())}));
}

}  // namespace detail

inline GroupPresentation emit_out_presentation(const OutClass& c,
                                               const Witnesses& w) {
  using Kind = OutClass::Kind;
  GroupPresentation p;
  switch (c.kind) {
    case Kind::Trivial:
      p.iso_label = "trivial group";
      break;
    case Kind::C2: {
      std::string g = "zeta";
      if (!w.alpha_ks.empty()) g = "alpha";
      if (!w.beta_ks.empty()) g = "beta";
      p.generators = {g};
      p.relators = {g + "^2"};
      p.iso_label = "C2";
      break;
    }
    case Kind::C2xC2:
      p.generators = {"alpha", "beta"};
      p.relators = {"alpha^2", "beta^2", "alpha^-1 beta^-1 alpha beta"};
      p.iso_label = "C2 x C2";
      break;
    case Kind::Z:
      p.generators = {"delta"};
      p.iso_label = "Z";
      break;
    case Kind::ZxC2:
      p.generators = {"delta", "zeta"};
      p.relators = {"zeta^2", "delta^-1 zeta^-1 delta zeta"};
      p.iso_label = "Z x C2";
      break;
    case Kind::Dinf: {
      const std::string g = w.beta_ks.empty() ? "alpha" : "beta";
      p.generators = {"delta", g};
      p.relators = {g + "^2", g + " delta " + g + " delta"};
      p.iso_label = "Dinf";
      break;
    }
    case Kind::DinfxC2:
      p.generators = {"alpha", "delta", "zeta"};
      p.relators = {"alpha^2", "zeta^2", "alpha delta alpha delta",
                    "alpha^-1 zeta^-1 alpha zeta",
                    "delta^-1 zeta^-1 delta zeta"};
      p.iso_label = "Dinf x C2";
      break;
    case Kind::PrimitiveDnAutCn: {
      const long long n = c.n;
      p.generators = {"alpha", "delta"};
      p.relators = {"alpha^2", "delta^" + std::to_string(n),
                    "alpha delta alpha delta"};
      for (long long i = 2; i < n; ++i) {
        if (std::gcd(i, n) != 1) continue;
        p.generators.push_back("psi_" + std::to_string(i));
      }
      for (long long i = 2; i < n; ++i) {
        if (std::gcd(i, n) != 1) continue;
        const std::string pi = "psi_" + std::to_string(i);
        p.relators.push_back(pi + "^-1 delta " + pi + " delta^-" +
                             std::to_string(i));
        p.relators.push_back("alpha^-1 " + pi + "^-1 alpha " + pi);
      }
      for (long long i = 2; i < n; ++i) {
        if (std::gcd(i, n) != 1) continue;
        for (long long j = 2; j < n; ++j) {
          if (std::gcd(j, n) != 1) continue;
          const long long m = (i * j) % n;
          std::string rel =
              "psi_" + std::to_string(i) + " psi_" + std::to_string(j);
          if (m != 1) rel += " psi_" + std::to_string(m) + "^-1";
          p.relators.push_back(rel);
        }
      }
      p.iso_label = n == 2 ? "D_2 ⋊ Aut(C_2) = C2 x C2"
                           : "D_" + std::to_string(n) + " ⋊ Aut(C_" +
                                 std::to_string(n) + ")";
      break;
    }
    case Kind::DerivedCommutator:
      p.iso_label = "Out(F(a,b))";
      break;
    case Kind::DerivedUnclassified:
      throw std::invalid_argument(
          "emit_out_presentation: no presentation for the unclassified "
          "derived branch");
  }
  return p;
}

// The Aut(G) presentations: generators a, b acting as the inner
// automorphisms together with the witnessed transversal maps, a relator
// gamma_{S^n} = 1, the conjugation actions of each outer generator, and the
// multiplication rules the witnesses satisfy.
inline GroupPresentation emit_aut_presentation(
    const OutClass& out_class, const Witnesses& w,
    const BalancedPresentation& bp) {
  using detail::join_tokens;
  using Kind = OutClass::Kind;
  if (bp.in_derived)
    throw std::invalid_argument(
        "emit_aut_presentation: derived-branch relator");

  GroupPresentation p;
  std::vector<std::pair<std::string, GenMap>> outer;
  std::vector<std::string> extra;
  const auto b_power = [](long long e) { return format_word(Word::b(e)); };
  const auto b_power_inv = [&](long long e) { return b_power(-e); };

  switch (out_class.kind) {
    case Kind::Trivial:
      p.iso_label = "G";
      break;
    case Kind::C2: {
      if (!w.alpha_ks.empty()) {
        const long long i = *w.alpha_ks.begin();
        outer.emplace_back("alpha", family(Family::Alpha, i));
        extra = {join_tokens({"alpha^2", b_power_inv(i)})};
      } else if (!w.beta_ks.empty()) {
        const long long i = *w.beta_ks.begin();
        outer.emplace_back("beta", family(Family::Beta, i));
        extra = {"beta^2"};
        p.iso_label = "G ⋊ C2";
      } else {
        outer.emplace_back("zeta", family(Family::Zeta, 0));
        extra = {"zeta^2"};
        p.iso_label = "G ⋊ C2";
      }
      break;
    }
    case Kind::C2xC2: {
      const long long i = *w.alpha_ks.begin();
      outer.emplace_back("alpha", family(Family::Alpha, i));
      outer.emplace_back("beta", family(Family::Beta, -i));
      outer.emplace_back("zeta", family(Family::Zeta, 0));
      extra = {join_tokens({"alpha^2", b_power_inv(i)}),
               "beta^2",
               "zeta^2",
               join_tokens({"alpha beta", b_power(i), "zeta^-1"}),
               join_tokens({"alpha zeta", b_power(i), "alpha^-1 zeta^-1"}),
               "beta alpha zeta^-1",
               join_tokens({"zeta beta", b_power(i), "alpha^-1"})};
      break;
    }
    case Kind::Z:
      outer.emplace_back("delta", family(Family::Delta, 1));
      p.iso_label = "G ⋊ Z";
      break;
    case Kind::ZxC2:
      outer.emplace_back("zeta", family(Family::Zeta, 0));
      outer.emplace_back("delta", family(Family::Delta, 1));
      extra = {"zeta^2", "zeta^-1 delta zeta b delta^-1"};
      break;
    case Kind::Dinf:
      if (!w.alpha_ks.empty()) {
        outer.emplace_back("alpha", family(Family::Alpha, 0));
        outer.emplace_back("delta", family(Family::Delta, 1));
        extra = {"alpha^2", "alpha^-1 delta alpha B delta"};
      } else {
        outer.emplace_back("beta", family(Family::Beta, 0));
        outer.emplace_back("delta", family(Family::Delta, 1));
        extra = {"beta^2", "beta^-1 delta beta delta"};
        p.iso_label = "G ⋊ Dinf";
      }
      break;
    case Kind::DinfxC2:
    case Kind::PrimitiveDnAutCn:
      outer.emplace_back("alpha", family(Family::Alpha, 0));
      outer.emplace_back("beta", family(Family::Beta, 0));
      outer.emplace_back("delta", family(Family::Delta, 1));
      extra = {"alpha^2", "beta^2", "alpha^-1 beta^-1 alpha beta",
               "alpha^-1 delta alpha B delta", "beta^-1 delta beta delta"};
      if (out_class.kind == Kind::PrimitiveDnAutCn)
        extra.push_back("delta^" + std::to_string(bp.n));
      break;
    case Kind::DerivedCommutator:
    case Kind::DerivedUnclassified:
      throw std::invalid_argument(
          "emit_aut_presentation: derived-branch relator");
  }

  for (const auto& [name, map] : outer) p.generators.push_back(name);
  p.generators.push_back("a");
  p.generators.push_back("b");
  p.relators.push_back(detail::power_relator(bp.s, bp.n));
  for (const auto& [name, map] : outer)
    detail::push_action_relators(p.relators, name, map);
  p.relators.insert(p.relators.end(), extra.begin(), extra.end());
  return p;
}

namespace detail {

inline void validate_finite_witnesses(const Witnesses& w) {
  if (w.alpha_ks.size() > 1 || w.beta_ks.size() > 1)
    throw theory_violation(
        "finite branch found two distinct parameters in one family");
  if (w.alpha_ks.size() == 1 && w.beta_ks.size() == 1) {
    if (*w.alpha_ks.begin() != -*w.beta_ks.begin())
      throw theory_violation("alpha_k and beta_j passed with j != -k");
    if (!w.zeta0_in)
      throw theory_violation("alpha_k and beta_-k passed without zeta_0");
  }
  if (w.zeta0_in && w.alpha_ks.size() != w.beta_ks.size())
    throw theory_violation(
        "zeta_0 and a lone alpha/beta witness are not closed under "
        "composition");
}

inline void validate_infinite_witnesses(const Witnesses& w) {
  const int count = static_cast<int>(!w.alpha_ks.empty()) +
                    static_cast<int>(!w.beta_ks.empty()) +
                    static_cast<int>(w.zeta0_in);
  if (count == 2)
    throw theory_violation(
        "infinite branch witness set is not closed under composition");
}

}  // namespace detail

inline ClassificationReport classify_out(const Word& r, long long n) {
  ClassificationReport rep;
  rep.balanced = balance_relator(r, n);
  const Word& s = rep.balanced.s;
  rep.trace.push_back("balanced relator: " + format_word(s));

  switch (detect_branch(rep.balanced)) {
    case Branch::Derived: {
      rep.trace.push_back("both exponent sums vanish: derived-subgroup branch");
      const Word commutator =
          Word::a() * Word::b() * Word::a(-1) * Word::b(-1);
      const CyclicWord core(s);
      if (core == CyclicWord(commutator) ||
          core == CyclicWord(commutator.inverse())) {
        rep.out_class = {OutClass::Kind::DerivedCommutator, 0};
        rep.out_presentation = emit_out_presentation(rep.out_class, {});
        rep.trace.push_back(
            "relator is the commutator: Out(G) = Out(F(a,b)) = GL(2,Z)");
      } else {
        rep.out_class = {OutClass::Kind::DerivedUnclassified, 0};
        rep.out_presentation.iso_label =
            "unclassified: Out(G) embeds into Out(F(a,b))";
        rep.trace.push_back(
            "Out(G) embeds into Out(F(a,b)) canonically and is residually "
            "finite; no further classification for this branch");
      }
      return rep;
    }
    case Branch::Primitive: {
      rep.trace.push_back("relator rewrites to b: primitive branch");
      rep.out_class = {OutClass::Kind::PrimitiveDnAutCn, n};
      rep.out_presentation =
          emit_out_presentation(rep.out_class, rep.witnesses);
      rep.aut_presentation =
          emit_aut_presentation(rep.out_class, rep.witnesses, rep.balanced);
      rep.trace.push_back("Out(G) has order " +
                          std::to_string(primitive_out_order(n)));
      return rep;
    }
    case Branch::Generic: break;
  }

  // The transvection a -> ab fixes every word of the positive cone letter
  // for letter and acts as conjugation by b on the negative cone, so two
  // literal comparisons decide whether Out(G) is infinite.
  const Word delta_image = apply(family(Family::Delta, 1), s);
  const bool fixed = delta_image == s;
  const bool conjugated = delta_image == Word::b(-1) * s * Word::b(1);
  if (fixed || conjugated) {
    rep.trace.push_back(fixed ? "delta fixes the relator: Out(G) is infinite"
                              : "delta conjugates the relator by b: Out(G) "
                                "is infinite");
    rep.witnesses.delta_in = true;
    const bool alpha_in =
        is_relator_auto(s, family(Family::Alpha, 0)) != AutVerdict::NotAut;
    const bool beta_in =
        is_relator_auto(s, family(Family::Beta, 0)) != AutVerdict::NotAut;
    rep.witnesses.zeta0_in =
        is_relator_auto(s, family(Family::Zeta, 0)) != AutVerdict::NotAut;
    if (alpha_in) rep.witnesses.alpha_ks.insert(0);
    if (beta_in) rep.witnesses.beta_ks.insert(0);
    detail::validate_infinite_witnesses(rep.witnesses);

    using Kind = OutClass::Kind;
    if (alpha_in && beta_in && rep.witnesses.zeta0_in)
      rep.out_class = {Kind::DinfxC2, 0};
    else if (alpha_in || beta_in)
      rep.out_class = {Kind::Dinf, 0};
    else if (rep.witnesses.zeta0_in)
      rep.out_class = {Kind::ZxC2, 0};
    else
      rep.out_class = {Kind::Z, 0};
  } else {
    rep.trace.push_back("delta moves the relator: Out(G) is finite");
    const ScanStats stats = scan_extremes(CyclicWord(s));
    rep.scan = stats;
    for (const long long k : alpha_candidate_ks(stats))
      if (is_relator_auto(s, family(Family::Alpha, k)) != AutVerdict::NotAut)
        rep.witnesses.alpha_ks.insert(k);
    for (const long long k : beta_candidate_ks(stats))
      if (is_relator_auto(s, family(Family::Beta, k)) != AutVerdict::NotAut)
        rep.witnesses.beta_ks.insert(k);
    rep.witnesses.zeta0_in =
        is_relator_auto(s, family(Family::Zeta, 0)) != AutVerdict::NotAut;
    detail::validate_finite_witnesses(rep.witnesses);

    using Kind = OutClass::Kind;
    const int count = static_cast<int>(!rep.witnesses.alpha_ks.empty()) +
                      static_cast<int>(!rep.witnesses.beta_ks.empty()) +
                      static_cast<int>(rep.witnesses.zeta0_in);
    if (count == 3)
      rep.out_class = {Kind::C2xC2, 0};
    else if (count == 1)
      rep.out_class = {Kind::C2, 0};
    else
      rep.out_class = {Kind::Trivial, 0};
  }

  rep.trace.push_back("witnesses: alpha x" +
                      std::to_string(rep.witnesses.alpha_ks.size()) +
                      ", beta x" +
                      std::to_string(rep.witnesses.beta_ks.size()) +
                      std::string(rep.witnesses.zeta0_in ? ", zeta_0" : "") +
                      std::string(rep.witnesses.delta_in ? ", delta" : ""));
  rep.out_presentation = emit_out_presentation(rep.out_class, rep.witnesses);
  rep.aut_presentation =
      emit_aut_presentation(rep.out_class, rep.witnesses, rep.balanced);
  rep.trace.push_back("Out(G) = " + to_string(rep.out_class));
  return rep;
}

// --- The primitive case as an explicit finite group -----------------------

// Normal form of an automorphism of <a, b; b^n>: a |-> a^eps b^shift,
// b |-> b^unit, with shift mod n and unit a unit mod n.
struct PrimitiveOutElement {
  int eps;          // +1 or -1
  long long shift;  // 0 <= shift < n
  long long unit;   // 0 < unit < n, gcd(unit, n) = 1

  friend bool operator==(const PrimitiveOutElement&,
                         const PrimitiveOutElement&) = default;
};

struct PrimitiveOutGroup {
  long long n = 2;
  std::vector<PrimitiveOutElement> elements;
  std::vector<std::vector<std::size_t>> table;  // postfix product indices
  std::size_t identity_index = 0;

  [[nodiscard]] std::size_t index_of(const PrimitiveOutElement& e) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == e) return i;
    throw std::logic_error("primitive out group: element not in normal form");
  }
};

inline GenMap primitive_element_map(const PrimitiveOutElement& e) {
  return {Word::a(e.eps) * Word::b(e.shift), Word::b(e.unit),
          std::monostate{}};
}

namespace detail {

// Reads b^p a^eps b^q off the composed a-image and folds the b-power
// conjugation into the shift.
inline PrimitiveOutElement normalize_primitive(const GenMap& m, long long n) {
  const auto& sa = m.image_a.syllables();
  long long p = 0, q = 0;
  int eps = 0;
  std::size_t i = 0;
  if (i < sa.size() && sa[i].gen == Gen::B) p = sa[i++].exp;
  if (i < sa.size() && sa[i].gen == Gen::A &&
      (sa[i].exp == 1 || sa[i].exp == -1))
    eps = static_cast<int>(sa[i++].exp);
  if (i < sa.size() && sa[i].gen == Gen::B) q = sa[i++].exp;
  if (eps == 0 || i != sa.size())
    throw std::logic_error("primitive out group: unexpected image shape");
  const long long unit_raw = exponent_sum(m.image_b, Gen::B);
  const auto mod = [n](long long v) { return ((v % n) + n) % n; };
  return {eps, mod(p + q), mod(unit_raw)};
}

}  // namespace detail

inline PrimitiveOutGroup realize_primitive_out(long long n) {
  if (n <= 1)
    throw std::invalid_argument("realize_primitive_out: n must exceed 1");
  PrimitiveOutGroup g;
  g.n = n;
  for (const int eps : {1, -1})
    for (long long shift = 0; shift < n; ++shift)
      for (long long unit = 1; unit < n; ++unit) {
        if (std::gcd(unit, n) != 1) continue;
        g.elements.push_back({eps, shift, unit});
      }
  g.identity_index = g.index_of({1, 0, 1});
  g.table.assign(g.elements.size(),
                 std::vector<std::size_t>(g.elements.size()));
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (std::size_t j = 0; j < g.elements.size(); ++j) {
      const GenMap prod = compose(primitive_element_map(g.elements[i]),
                                  primitive_element_map(g.elements[j]));
      g.table[i][j] = g.index_of(detail::normalize_primitive(prod, n));
    }
  return g;
}

}  // namespace onerel

#endif  // ONEREL_CLASSIFY_HPP
