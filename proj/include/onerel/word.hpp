#ifndef ONEREL_WORD_HPP
#define ONEREL_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace onerel {

// The two generators of the rank-2 free group.
enum class Gen : std::uint8_t { A, B };

// A single signed letter, one of a, a^-1, b, b^-1.
struct Letter {
  Gen gen;
  bool neg;

  [[nodiscard]] Letter inverse() const { return {gen, !neg}; }

  // Total order used for canonical rotations: a < A < b < B.
  [[nodiscard]] int code() const {
    return (gen == Gen::A ? 0 : 2) + (neg ? 1 : 0);
  }

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter l, Letter r) { return l.code() <=> r.code(); }
};

// Maximal run of one generator. exp is never zero.
struct Syllable {
  Gen gen;
  long long exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A freely reduced word in F(a, b), stored as syllable runs.
// Adjacent syllables always use distinct generators; the empty word is the
// identity.
class Word {
 public:
  Word() = default;

  static Word generator(Gen g, long long exp = 1) {
    Word w;
    w.push(g, exp);
    return w;
  }

  static Word a(long long exp = 1) { return generator(Gen::A, exp); }
  static Word b(long long exp = 1) { return generator(Gen::B, exp); }

  template <typename Range>
  static Word from_letters(const Range& letters) {
    Word w;
    for (const Letter& l : letters) w.push(l.gen, l.neg ? -1 : 1);
    return w;
  }

  [[nodiscard]] const std::vector<Syllable>& syllables() const {
    return sylls_;
  }
  [[nodiscard]] bool empty() const { return sylls_.empty(); }

  // Word length: sum of absolute exponents.
  [[nodiscard]] long long length() const {
    long long n = 0;
    for (const auto& s : sylls_) n += s.exp < 0 ? -s.exp : s.exp;
    return n;
  }

  [[nodiscard]] std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const auto& s : sylls_) {
      const Letter l{s.gen, s.exp < 0};
      for (long long i = 0, n = s.exp < 0 ? -s.exp : s.exp; i < n; ++i)
        out.push_back(l);
    }
    return out;
  }

  // Appends one run, cancelling against the tail.  Keeps the word reduced.
  void push(Gen g, long long exp) {
    if (exp == 0) return;
    if (!sylls_.empty() && sylls_.back().gen == g) {
      sylls_.back().exp += exp;
      if (sylls_.back().exp == 0) sylls_.pop_back();
      return;
    }
    sylls_.push_back({g, exp});
  }

  void append(const Word& w) {
    for (const auto& s : w.sylls_) push(s.gen, s.exp);
  }

  [[nodiscard]] Word inverse() const {
    Word w;
    w.sylls_.reserve(sylls_.size());
    for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
      w.sylls_.push_back({it->gen, -it->exp});
    return w;
  }

  [[nodiscard]] Word pow(long long n) const {
    const Word& base = n < 0 ? inverse() : *this;
    Word out;
    for (long long i = 0, m = n < 0 ? -n : n; i < m; ++i) out.append(base);
    return out;
  }

  friend Word operator*(const Word& u, const Word& v) {
    Word w = u;
    w.append(v);
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> sylls_;
};

// free_reduce: the unique reduced form of an arbitrary letter sequence.
inline Word free_reduce(const std::vector<Letter>& letters) {
  return Word::from_letters(letters);
}

inline long long exponent_sum(const Word& w, Gen g) {
  long long sum = 0;
  for (const auto& s : w.syllables())
    if (s.gen == g) sum += s.exp;
  return sum;
}

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // input = conjugator * core * conjugator^-1
};

inline CyclicReduction cyclic_reduce(const Word& w) {
  auto ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  Word conj = Word::from_letters(
      std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(i)));
  Word core = Word::from_letters(std::vector<Letter>(
      ls.begin() + static_cast<long>(i), ls.begin() + static_cast<long>(j)));
  return {std::move(core), std::move(conj)};
}

struct PowerDecomposition {
  bool is_proper;    // exponent > 1
  Word root;         // input = root^exponent freely
  long long exponent;
};

// Maximal root/exponent of a nonempty word, taken on the cyclic core and
// recombined with the conjugator.
inline PowerDecomposition is_proper_power(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_proper_power: empty word");
  auto [core, conj] = cyclic_reduce(w);
  const auto ls = core.letters();
  const std::size_t n = ls.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = ls[i] == ls[i - d];
    if (periodic) {
      Word base = Word::from_letters(
          std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(d)));
      Word root = conj * base * conj.inverse();
      return {true, std::move(root), static_cast<long long>(n / d)};
    }
  }
  return {false, w, 1};
}

namespace detail {

// Booth's least-rotation algorithm; returns the starting index of the
// lexicographically least rotation.
inline std::size_t least_rotation_index(const std::vector<Letter>& v) {
  const std::size_t n = v.size();
  if (n <= 1) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = v[j % n].code();
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != v[(k + static_cast<std::size_t>(i) + 1) % n].code()) {
      if (sj < v[(k + static_cast<std::size_t>(i) + 1) % n].code())
        k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != v[k % n].code()) {
      if (sj < v[k % n].code()) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

}  // namespace detail

// A cyclically reduced word considered up to rotation of its letter ring.
// Construction cyclically reduces the input; two CyclicWords compare equal
// exactly when their rings are rotations of one another (canonical least
// rotation, computed once).
class CyclicWord {
 public:
  CyclicWord() = default;

  explicit CyclicWord(const Word& w) {
    core_ = cyclic_reduce(w).core;
    ring_ = core_.letters();
    canonical_ = ring_;
    const std::size_t k = detail::least_rotation_index(ring_);
    std::rotate(canonical_.begin(),
                canonical_.begin() + static_cast<long>(k), canonical_.end());
  }

  [[nodiscard]] const Word& core() const { return core_; }
  [[nodiscard]] const std::vector<Letter>& ring() const { return ring_; }
  [[nodiscard]] const std::vector<Letter>& canonical() const {
    return canonical_;
  }
  [[nodiscard]] std::size_t size() const { return ring_.size(); }

  [[nodiscard]] CyclicWord inverse() const {
    return CyclicWord(core_.inverse());
  }

  friend bool operator==(const CyclicWord& u, const CyclicWord& v) {
    return u.canonical_ == v.canonical_;
  }

 private:
  Word core_;
  std::vector<Letter> ring_;
  std::vector<Letter> canonical_;
};

inline bool cyclically_equal(const CyclicWord& u, const CyclicWord& v) {
  return u == v;
}

// Extremes of the b-runs between cyclically adjacent same-sign a-letters.
// A run may be empty (i = 0): "aa" counts as a b^0 a.
struct ScanStats {
  std::optional<long long> min_plus, max_plus, min_minus, max_minus;

  [[nodiscard]] bool all_absent() const {
    return !min_plus && !max_plus && !min_minus && !max_minus;
  }

  friend bool operator==(const ScanStats&, const ScanStats&) = default;
};

inline ScanStats scan_extremes(const CyclicWord& s) {
  if (exponent_sum(s.core(), Gen::A) != 0)
    throw std::invalid_argument("scan_extremes: a-exponent sum must be zero");
  const auto& ring = s.ring();
  std::vector<std::size_t> a_pos;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring[i].gen == Gen::A) a_pos.push_back(i);
  if (a_pos.empty())
    throw std::invalid_argument("scan_extremes: word has no a-letters");

  ScanStats stats;
  auto record = [](std::optional<long long>& mn, std::optional<long long>& mx,
                   long long i) {
    if (!mn || i < *mn) mn = i;
    if (!mx || i > *mx) mx = i;
  };
  const std::size_t m = a_pos.size();
  for (std::size_t p = 0; p < m; ++p) {
    const Letter first = ring[a_pos[p]];
    const Letter second = ring[a_pos[(p + 1) % m]];
    if (first.neg != second.neg) continue;
    long long run = 0;
    for (std::size_t q = (a_pos[p] + 1) % ring.size(); q != a_pos[(p + 1) % m];
         q = (q + 1) % ring.size())
      run += ring[q].neg ? -1 : 1;
    if (first.neg)
      record(stats.min_minus, stats.max_minus, run);
    else
      record(stats.min_plus, stats.max_plus, run);
  }
  return stats;
}

// Membership in the two height-bounded subgroups that control when the
// transvection a -> ab defines an automorphism.
enum class Cone { PositiveCone, NegativeCone, Neither };

// PositiveCone: all running a-prefix heights lie in {0, 1}, i.e. membership
// in <aba^-1, b>.  NegativeCone mirrors it with <a^-1ba, b>.
inline Cone height_membership(const Word& s) {
  if (exponent_sum(s, Gen::A) != 0)
    throw std::invalid_argument(
        "height_membership: a-exponent sum must be zero");
  long long h = 0, min_h = 0, max_h = 0;
  for (const auto& syl : s.syllables()) {
    if (syl.gen != Gen::A) continue;
    // Heights within a run a^e sweep monotonically from h to h + e.
    h += syl.exp;
    min_h = std::min(min_h, h);
    max_h = std::max(max_h, h);
  }
  if (min_h >= 0 && max_h <= 1) return Cone::PositiveCone;
  if (min_h >= -1 && max_h <= 0) return Cone::NegativeCone;
  return Cone::Neither;
}

}  // namespace onerel

#endif  // ONEREL_WORD_HPP
