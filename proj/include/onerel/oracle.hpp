#ifndef ONEREL_ORACLE_HPP
#define ONEREL_ORACLE_HPP

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>

#include "onerel/aut_check.hpp"
#include "onerel/classify.hpp"
#include "onerel/word.hpp"

namespace onerel {

struct OracleConfig {
  long long k_window = 10;   // half-width for widened scans
  int max_word_len = 40;
  int sample_count = 200;
  std::uint64_t rng_seed = 1;
};

// Every family member that passes the relator criterion in a k-window,
// found by direct enumeration, independent of the candidate-range shortcut.
struct FamilyWitnessTable {
  std::set<long long> alpha_ks, beta_ks, zeta_ks, delta_ks;

  friend bool operator==(const FamilyWitnessTable&,
                         const FamilyWitnessTable&) = default;
};

inline FamilyWitnessTable enumerate_family_auts(const Word& s, long long lo,
                                                long long hi) {
  FamilyWitnessTable table;
  for (long long k = lo; k <= hi; ++k) {
    if (is_relator_auto(s, family(Family::Alpha, k)) != AutVerdict::NotAut)
      table.alpha_ks.insert(k);
    if (is_relator_auto(s, family(Family::Beta, k)) != AutVerdict::NotAut)
      table.beta_ks.insert(k);
    if (is_relator_auto(s, family(Family::Zeta, k)) != AutVerdict::NotAut)
      table.zeta_ks.insert(k);
    if (is_relator_auto(s, family(Family::Delta, k)) != AutVerdict::NotAut)
      table.delta_ks.insert(k);
  }
  return table;
}

// Window outside which images are too long to be conjugate to s, making the
// enumeration exhaustive rather than heuristic.
inline FamilyWitnessTable enumerate_family_auts(const Word& s) {
  const long long w = s.length() + 5;
  return enumerate_family_auts(s, -w, w);
}

// Checks that every alpha/beta pass found by plain enumeration over the
// candidate ranges widened by +-widen already lies inside the candidate
// sets read off the scan extremes.
inline bool verify_finite_candidate_ranges(const Word& s, long long widen) {
  if (height_membership(s) != Cone::Neither)
    throw std::invalid_argument(
        "verify_finite_candidate_ranges: relator is not in the finite "
        "branch");
  const ScanStats stats = scan_extremes(CyclicWord(s));
  const auto alpha_ok = alpha_candidate_ks(stats);
  const auto beta_ok = beta_candidate_ks(stats);

  long long lo = *alpha_ok.begin(), hi = *alpha_ok.rbegin();
  lo = std::min(lo, *beta_ok.begin());
  hi = std::max(hi, *beta_ok.rbegin());
  const auto found = enumerate_family_auts(s, lo - widen, hi + widen);

  for (const long long k : found.alpha_ks)
    if (!alpha_ok.count(k)) return false;
  for (const long long k : found.beta_ks)
    if (!beta_ok.count(k)) return false;
  return true;
}

// Literal rescan of the squared relator: every rotation of the letter ring
// of s^2 is checked for a leading a^e b^i a^e block.  Validates that
// scanning the cyclic word s is equivalent to scanning cyclic shifts of
// s^n, n >= 2.
inline bool scan_power_crosscheck(const Word& s) {
  const ScanStats direct = scan_extremes(CyclicWord(s));

  const auto ring = CyclicWord(s.pow(2)).ring();
  ScanStats literal;
  auto record = [](std::optional<long long>& mn, std::optional<long long>& mx,
                   long long i) {
    if (!mn || i < *mn) mn = i;
    if (!mx || i > *mx) mx = i;
  };
  const std::size_t n = ring.size();
  for (std::size_t start = 0; start < n; ++start) {
    if (ring[start].gen != Gen::A) continue;
    long long run = 0;
    for (std::size_t off = 1; off < n; ++off) {
      const Letter l = ring[(start + off) % n];
      if (l.gen == Gen::B) {
        run += l.neg ? -1 : 1;
        continue;
      }
      if (l.neg == ring[start].neg) {
        if (ring[start].neg)
          record(literal.min_minus, literal.max_minus, run);
        else
          record(literal.min_plus, literal.max_plus, run);
      }
      break;
    }
  }
  return direct == literal;
}

// Direct check of the criterion against the full power s^n, bypassing the
// root-level shortcut.
inline bool relator_auto_power_crosscheck(const Word& s, const GenMap& m,
                                          long long n) {
  const Word power = s.pow(n);
  const CyclicWord image(apply(m, power));
  const bool direct = image == CyclicWord(power) ||
                      image == CyclicWord(power.inverse());
  return direct == (is_relator_auto(s, m) != AutVerdict::NotAut);
}

struct RelatorConstraints {
  bool balanced = false;        // sigma_a = 0 and sigma_b != 0
  bool finite_branch = false;   // additionally outside both cones
  bool infinite_branch = false; // additionally inside a cone
};

// Seeded sampler for cyclically reduced relators; never returns proper
// powers or b^+-1.  Cone words are built from the subgroup generators, since
// rejection alone would almost never land inside a cone.
class RelatorSampler {
 public:
  explicit RelatorSampler(const OracleConfig& cfg)
      : cfg_(cfg), rng_(cfg.rng_seed) {}

  Word next(const RelatorConstraints& c) {
    for (int attempt = 0; attempt < 200000; ++attempt) {
      const Word w = c.infinite_branch ? sample_cone() : sample_plain();
      if (w.empty() || w.length() > cfg_.max_word_len) continue;
      const auto core = cyclic_reduce(w).core;
      if (core.length() != w.length()) continue;
      if (core.length() == 1 && core.syllables()[0].gen == Gen::B) continue;
      if (is_proper_power(core).is_proper) continue;
      if (c.balanced || c.finite_branch || c.infinite_branch) {
        if (exponent_sum(core, Gen::A) != 0) continue;
        if (exponent_sum(core, Gen::B) == 0) continue;
      }
      if (c.finite_branch && height_membership(core) != Cone::Neither)
        continue;
      if (c.infinite_branch && height_membership(core) == Cone::Neither)
        continue;
      return core;
    }
    throw std::runtime_error(
        "random_relator: rejection sampling failed to meet the constraints");
  }

 private:
  Word sample_plain() {
    std::uniform_int_distribution<int> len_dist(2, cfg_.max_word_len);
    std::uniform_int_distribution<int> pick(0, 3);
    const int len = len_dist(rng_);
    std::vector<Letter> ls;
    while (static_cast<int>(ls.size()) < len) {
      const int c = pick(rng_);
      const Letter l{c < 2 ? Gen::A : Gen::B, (c & 1) != 0};
      if (!ls.empty() && ls.back() == l.inverse()) continue;
      ls.push_back(l);
    }
    return Word::from_letters(ls);
  }

  // Random product over the basis {a^e b a^-e, b} of a cone subgroup.
  Word sample_cone() {
    std::uniform_int_distribution<int> blocks_dist(1, cfg_.max_word_len / 4);
    std::uniform_int_distribution<int> run_dist(-3, 3);
    std::uniform_int_distribution<int> kind(0, 1);
    const long long e = kind(rng_) ? 1 : -1;
    Word w;
    for (int i = 0, blocks = blocks_dist(rng_); i < blocks; ++i) {
      const long long inner = run_dist(rng_);
      const long long outer = run_dist(rng_);
      if (inner != 0) {
        w.push(Gen::A, e);
        w.push(Gen::B, inner);
        w.push(Gen::A, -e);
      }
      w.push(Gen::B, outer);
    }
    return w;
  }

  OracleConfig cfg_;
  std::mt19937_64 rng_;
};

inline Word random_relator(RelatorSampler& sampler,
                           const RelatorConstraints& constraints) {
  return sampler.next(constraints);
}

}  // namespace onerel

#endif  // ONEREL_ORACLE_HPP
