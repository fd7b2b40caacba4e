#ifndef ONEREL_SMALL_CANCELLATION_HPP
#define ONEREL_SMALL_CANCELLATION_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onerel/classify.hpp"
#include "onerel/text.hpp"
#include "onerel/word.hpp"

namespace onerel {

// All cyclic shifts of all relators and their inverses, deduplicated and
// sorted; the ground set for piece computations and Dehn reduction.
struct SymmetrizedSet {
  std::vector<std::vector<Letter>> members;
};

struct MultiRelatorPresentation {
  std::vector<Word> relators;
  std::optional<long long> b_order;  // absent = infinite/unknown
};

// File format: optional header `b_order = <n|infinite>`, then one relator
// per line in word syntax.  Blank lines and '#' comments are skipped.
inline MultiRelatorPresentation parse_presentation(std::string_view text) {
  MultiRelatorPresentation p;
  std::size_t pos = 0;
  bool saw_relator = false;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    while (!line.empty() &&
           std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    while (!line.empty() &&
           std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (pos > text.size()) break;
      continue;
    }
    if (!saw_relator && line.rfind("b_order", 0) == 0) {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos)
        throw parse_error("presentation header: expected b_order = <n>", 0);
      std::string value(line.substr(eq + 1));
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t") + 1);
      if (value != "infinite") {
        try {
          p.b_order = std::stoll(value);
        } catch (const std::exception&) {
          throw parse_error("presentation header: bad b_order value", 0);
        }
        if (*p.b_order <= 0)
          throw parse_error("presentation header: b_order must be positive",
                            0);
      }
    } else {
      p.relators.push_back(parse_word(line));
      saw_relator = true;
    }
    if (pos > text.size()) break;
  }
  if (p.relators.empty())
    throw parse_error("presentation: no relators given", 0);
  return p;
}

inline SymmetrizedSet symmetrize(const std::vector<Word>& relators) {
  if (relators.empty())
    throw std::invalid_argument("symmetrize: no relators");
  std::set<std::vector<Letter>> members;
  for (const Word& r : relators) {
    const Word core = cyclic_reduce(r).core;
    if (core.empty())
      throw std::invalid_argument("symmetrize: trivial relator");
    for (const Word& base : {core, core.inverse()}) {
      auto ls = base.letters();
      for (std::size_t i = 0; i < ls.size(); ++i) {
        members.insert(ls);
        std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      }
    }
  }
  return {{members.begin(), members.end()}};
}

namespace detail {

inline std::size_t common_prefix(const std::vector<Letter>& u,
                                 const std::vector<Letter>& v) {
  const std::size_t n = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < n && u[i] == v[i]) ++i;
  return i;
}

}  // namespace detail

// Longest common prefix of two distinct members.  The members are sorted,
// so the maximum is attained by a neighbouring pair.
inline long long max_piece_length(const SymmetrizedSet& ss) {
  if (ss.members.size() < 2)
    throw std::invalid_argument("max_piece_length: fewer than two members");
  std::size_t best = 0;
  for (std::size_t i = 0; i + 1 < ss.members.size(); ++i)
    best = std::max(best,
                    detail::common_prefix(ss.members[i], ss.members[i + 1]));
  return static_cast<long long>(best);
}

// Strict metric condition C'(lambda), lambda = num/den: every piece u that
// is a prefix of a member w satisfies |u| < lambda |w|.
inline bool satisfies_metric(const MultiRelatorPresentation& p, long long num,
                             long long den) {
  const SymmetrizedSet ss = symmetrize(p.relators);
  if (ss.members.size() < 2) return true;
  for (std::size_t i = 0; i < ss.members.size(); ++i) {
    std::size_t lcp = 0;
    if (i > 0)
      lcp = std::max(lcp, detail::common_prefix(ss.members[i],
                                                ss.members[i - 1]));
    if (i + 1 < ss.members.size())
      lcp = std::max(lcp, detail::common_prefix(ss.members[i],
                                                ss.members[i + 1]));
    if (static_cast<long long>(lcp) * den >=
        static_cast<long long>(ss.members[i].size()) * num)
      return false;
  }
  return true;
}

// One pass of Dehn's algorithm: replace the leftmost (then longest) subword
// that makes up more than half of a symmetrized relator by the inverse of
// the remainder, freely reduce, and repeat to the fixed point.
inline Word dehn_reduce(const Word& w, const SymmetrizedSet& ss) {
  std::vector<Letter> cur = w.letters();
  for (;;) {
    bool replaced = false;
    for (std::size_t pos = 0; pos < cur.size() && !replaced; ++pos) {
      std::size_t best_len = 0;
      const std::vector<Letter>* best_member = nullptr;
      for (const auto& member : ss.members) {
        std::size_t match = 0;
        while (match < member.size() && pos + match < cur.size() &&
               cur[pos + match] == member[match])
          ++match;
        if (2 * match > member.size() && match > best_len) {
          best_len = match;
          best_member = &member;
        }
      }
      if (best_member == nullptr) continue;
      // member = u v with u matched; u =_G v^-1, so splice in v^-1.
      std::vector<Letter> next(cur.begin(),
                               cur.begin() + static_cast<long>(pos));
      for (std::size_t i = best_member->size(); i > best_len; --i)
        next.push_back((*best_member)[i - 1].inverse());
      next.insert(next.end(), cur.begin() + static_cast<long>(pos + best_len),
                  cur.end());
      cur = Word::from_letters(next).letters();
      replaced = true;
    }
    if (!replaced) return Word::from_letters(cur);
  }
}

inline bool is_trivial_word(const Word& w, const SymmetrizedSet& ss) {
  return dehn_reduce(w, ss).empty();
}

// Syntactic order detection: a relator whose cyclic core is a pure b-power
// pins the order of b.
inline std::optional<long long> detect_b_order(
    const MultiRelatorPresentation& p) {
  if (p.b_order) return p.b_order;
  for (const Word& r : p.relators) {
    const Word core = cyclic_reduce(r).core;
    const auto& sylls = core.syllables();
    if (sylls.size() == 1 && sylls[0].gen == Gen::B)
      return std::abs(sylls[0].exp);
  }
  return std::nullopt;
}

struct ScOutReport {
  bool hypotheses_ok = false;
  std::vector<std::string> failed_hypotheses;
  std::optional<OutClass> out_class;  // set in the infinite-b-order branch
  bool delta_holds = false;
  std::optional<bool> alpha_witnessed, beta_witnessed, zeta_witnessed;
  std::optional<long long> b_order;
  std::string summary;
};

namespace detail {

// Sufficient condition: gamma carries every relator to a free conjugate of
// a symmetrized member, i.e. the image core is a rotation of some relator
// core or inverse.
inline bool sc_witnessed(const GenMap& m,
                         const std::vector<CyclicWord>& cores) {
  for (const auto& core : cores) {
    const CyclicWord image(apply(m, core.core()));
    bool hit = false;
    for (const auto& other : cores)
      hit = hit || image == other || image == other.inverse();
    if (!hit) return false;
  }
  return true;
}

}  // namespace detail

// Classification for presentations <a, b; r> with r* satisfying C'(1/24),
// every relator a proper power lying in one of the two cones, and all
// a-exponent sums zero.
inline ScOutReport classify_sc_out(const MultiRelatorPresentation& p) {
  ScOutReport rep;
  if (p.relators.empty()) {
    rep.failed_hypotheses.push_back("no relators given");
    rep.summary = "hypotheses not met";
    return rep;
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    const std::string label = "relator " + std::to_string(i + 1);
    if (r.empty()) {
      rep.failed_hypotheses.push_back(label + " is trivial");
      continue;
    }
    if (exponent_sum(r, Gen::A) != 0) {
      rep.failed_hypotheses.push_back(label +
                                      " has nonzero a-exponent sum");
      continue;
    }
    if (!is_proper_power(r).is_proper)
      rep.failed_hypotheses.push_back(label + " is not a proper power");
    if (height_membership(r) == Cone::Neither)
      rep.failed_hypotheses.push_back(
          label + " lies in neither height-bounded subgroup");
  }
  if (rep.failed_hypotheses.empty() && !satisfies_metric(p, 1, 24))
    rep.failed_hypotheses.push_back(
        "symmetrized relators do not satisfy C'(1/24)");
  if (!rep.failed_hypotheses.empty()) {
    rep.summary = "hypotheses not met";
    return rep;
  }
  rep.hypotheses_ok = true;

  bool outside_derived = false;
  for (const Word& r : p.relators)
    outside_derived = outside_derived || exponent_sum(r, Gen::B) != 0;
  if (!outside_derived) {
    rep.summary =
        "all relators lie in the derived subgroup: Out(G) is residually "
        "finite (no classification)";
    return rep;
  }

  rep.b_order = detect_b_order(p);
  if (rep.b_order) {
    const long long n = *rep.b_order;
    rep.summary = "b has order " + std::to_string(n) +
                  ": Out(G) embeds into Out(<a, b; b^" + std::to_string(n) +
                  ">) of order " + std::to_string(primitive_out_order(n)) +
                  ", and " + std::to_string(n) + " divides |Out(G)|";
    return rep;
  }

  // b has infinite order: the cone hypothesis makes the transvection an
  // automorphism, so Out(G) is infinite and the witnessed maps decide the
  // class among Z, Z x C2, Dinf, Dinf x C2.
  rep.delta_holds = true;
  std::vector<CyclicWord> cores;
  cores.reserve(p.relators.size());
  for (const Word& r : p.relators) cores.emplace_back(r);
  rep.alpha_witnessed =
      detail::sc_witnessed(family(Family::Alpha, 0), cores);
  rep.beta_witnessed = detail::sc_witnessed(family(Family::Beta, 0), cores);
  rep.zeta_witnessed = detail::sc_witnessed(family(Family::Zeta, 0), cores);

  const bool a = *rep.alpha_witnessed, b = *rep.beta_witnessed,
             z = *rep.zeta_witnessed;
  using Kind = OutClass::Kind;
  if (a && b && z)
    rep.out_class = OutClass{Kind::DinfxC2, 0};
  else if (a || b)
    rep.out_class = OutClass{Kind::Dinf, 0};
  else if (z)
    rep.out_class = OutClass{Kind::ZxC2, 0};
  else
    rep.out_class = OutClass{Kind::Z, 0};
  rep.summary = "Out(G) = " + to_string(*rep.out_class) +
                " (witness tests are sufficient conditions; unwitnessed maps "
                "are reported as not witnessed)";
  return rep;
}

}  // namespace onerel

#endif  // ONEREL_SMALL_CANCELLATION_HPP
