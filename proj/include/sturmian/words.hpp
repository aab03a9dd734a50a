#pragma once

// Binary words over {0,1} and their generation from exact rotation data.
//
// The lower word of slope alpha and intercept rho reads letter 0 at step n
// iff {n*alpha + rho} < 1 - alpha; the upper word reads 0 iff
// 0 < {n*alpha + rho} <= 1 - alpha.  Both rules are evaluated without any
// rounding: the fractional part is carried as a QuadraticReal and updated by
// one exact addition per letter.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sturmian/error.hpp"
#include "sturmian/exact.hpp"

namespace sturmian {

class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::string_view letters) : s_(letters) {
    for (const char ch : s_) {
      if (ch != '0' && ch != '1')
        throw error(errc::alphabet_mismatch, std::string("letter '") + ch + "' is not 0 or 1");
      ones_ += ch == '1';
    }
  }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  std::size_t ones() const { return ones_; }
  std::size_t zeros() const { return s_.size() - ones_; }
  std::pair<std::size_t, std::size_t> parikh() const { return {zeros(), ones_}; }

  char operator[](std::size_t i) const { return s_[i]; }
  const std::string& str() const { return s_; }
  std::string_view view() const { return s_; }

  void push_back(char ch) {
    if (ch != '0' && ch != '1')
      throw error(errc::alphabet_mismatch, std::string("letter '") + ch + "' is not 0 or 1");
    s_.push_back(ch);
    ones_ += ch == '1';
  }

  void append(const BinaryWord& w) {
    s_ += w.s_;
    ones_ += w.ones_;
  }

  friend BinaryWord operator+(const BinaryWord& x, const BinaryWord& y) {
    BinaryWord r = x;
    r.append(y);
    return r;
  }

  BinaryWord substr(std::size_t pos, std::size_t len = std::string::npos) const {
    BinaryWord r;
    r.s_ = s_.substr(pos, len);
    for (const char ch : r.s_) r.ones_ += ch == '1';
    return r;
  }

  BinaryWord prefix(std::size_t len) const { return substr(0, len); }

  BinaryWord reversed() const {
    BinaryWord r;
    r.s_.assign(s_.rbegin(), s_.rend());
    r.ones_ = ones_;
    return r;
  }

  bool is_palindrome() const {
    for (std::size_t i = 0, j = s_.size(); i + 1 < j; ++i, --j)
      if (s_[i] != s_[j - 1]) return false;
    return true;
  }

  bool starts_with(const BinaryWord& p) const {
    return s_.compare(0, p.s_.size(), p.s_) == 0;
  }

  bool ends_with(const BinaryWord& p) const {
    return p.s_.size() <= s_.size() &&
           s_.compare(s_.size() - p.s_.size(), p.s_.size(), p.s_) == 0;
  }

  friend bool operator==(const BinaryWord& x, const BinaryWord& y) { return x.s_ == y.s_; }
  friend auto operator<=>(const BinaryWord& x, const BinaryWord& y) { return x.s_ <=> y.s_; }

 private:
  std::string s_;
  std::size_t ones_ = 0;
};

// Orders by length first, then lexicographically; used for alphabet listings.
struct LengthLexLess {
  bool operator()(const BinaryWord& x, const BinaryWord& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.str() < y.str();
  }
};

enum class WordKind { lower, upper };

inline const char* word_kind_name(WordKind k) { return k == WordKind::lower ? "lower" : "upper"; }

class MechanicalSpec {
 public:
  MechanicalSpec(QuadraticReal slope, QuadraticReal intercept, WordKind kind)
      : slope_(std::move(slope)), intercept_(std::move(intercept)), kind_(kind) {
    const QuadraticReal zero;
    const QuadraticReal one = QuadraticReal::from_int(1);
    if (!(slope_ > zero) || !(slope_ < one))
      throw error(errc::invalid_spec, "slope must lie strictly between 0 and 1");
    if (intercept_ < zero || !(intercept_ < one))
      throw error(errc::invalid_spec, "intercept must lie in [0, 1)");
    if (!slope_.is_rational() && !intercept_.is_rational() &&
        slope_.radicand() != intercept_.radicand())
      throw error(errc::mixed_radicands, "slope and intercept must share one quadratic field");
  }

  const QuadraticReal& slope() const { return slope_; }
  const QuadraticReal& intercept() const { return intercept_; }
  WordKind kind() const { return kind_; }

 private:
  QuadraticReal slope_, intercept_;
  WordKind kind_;
};

inline BinaryWord mechanical_prefix(const MechanicalSpec& spec, std::size_t n) {
  if (spec.slope().is_rational())
    throw error(errc::rational_slope, "aperiodic generation needs an irrational slope");
  const QuadraticReal one = QuadraticReal::from_int(1);
  const QuadraticReal threshold = one - spec.slope();
  QuadraticReal phi = spec.intercept();
  BinaryWord out;
  for (std::size_t i = 0; i < n; ++i) {
    bool zero_letter;
    if (spec.kind() == WordKind::lower)
      zero_letter = phi < threshold;
    else
      zero_letter = phi.sign() > 0 && !(phi > threshold);
    out.push_back(zero_letter ? '0' : '1');
    phi = phi + spec.slope();
    if (!(phi < one)) phi = phi - one;
  }
  return out;
}

// Characteristic word: intercept equal to the slope.  Both the lower and the
// upper rule generate it; the agreement is asserted letter by letter.
inline BinaryWord characteristic_prefix(const QuadraticReal& slope, std::size_t n) {
  const BinaryWord lo = mechanical_prefix(MechanicalSpec(slope, slope, WordKind::lower), n);
  const BinaryWord up = mechanical_prefix(MechanicalSpec(slope, slope, WordKind::upper), n);
  if (!(lo == up))
    throw error(errc::invalid_spec, "lower and upper characteristic prefixes disagree");
  return lo;
}

enum class SingularVariant { plain_zero, plain_one, zero_one, one_zero };

// Prefixes of 0c, 1c, reverse(p)01c, reverse(p)10c for a palindromic prefix p
// of the characteristic word c.
inline BinaryWord singular_prefix(const QuadraticReal& slope, std::size_t palindromic_prefix_length,
                                  SingularVariant variant, std::size_t n) {
  const bool plain =
      variant == SingularVariant::plain_zero || variant == SingularVariant::plain_one;
  const BinaryWord c = characteristic_prefix(slope, n + (plain ? 0 : palindromic_prefix_length));
  BinaryWord w;
  switch (variant) {
    case SingularVariant::plain_zero: w = BinaryWord("0"); break;
    case SingularVariant::plain_one: w = BinaryWord("1"); break;
    case SingularVariant::zero_one:
    case SingularVariant::one_zero: {
      const BinaryWord p = c.prefix(palindromic_prefix_length);
      if (!p.is_palindrome())
        throw error(errc::not_palindromic_prefix,
                    "prefix '" + p.str() + "' of the characteristic word is not a palindrome");
      w = p.reversed() + BinaryWord(variant == SingularVariant::zero_one ? "01" : "10");
      break;
    }
  }
  w.append(c);
  return w.prefix(n);
}

struct BalanceReport {
  bool balanced = true;
  std::size_t window = 0;   // length at which the violation was found
  BinaryWord low_factor, high_factor;
};

// Checks |#1(x) - #1(y)| <= 1 over all factor pairs of equal length up to
// max_window, by sliding-window extremes.
inline BalanceReport is_balanced(const BinaryWord& w, std::size_t max_window) {
  BalanceReport report;
  const std::string_view s = w.view();
  for (std::size_t m = 1; m <= max_window && m <= s.size(); ++m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < m; ++i) count += s[i] == '1';
    std::size_t lo = count, hi = count, lo_at = 0, hi_at = 0;
    for (std::size_t i = m; i < s.size(); ++i) {
      count += (s[i] == '1') - (s[i - m] == '1');
      if (count < lo) { lo = count; lo_at = i - m + 1; }
      if (count > hi) { hi = count; hi_at = i - m + 1; }
    }
    if (hi - lo > 1) {
      report.balanced = false;
      report.window = m;
      report.low_factor = w.substr(lo_at, m);
      report.high_factor = w.substr(hi_at, m);
      return report;
    }
  }
  return report;
}

inline std::size_t factor_complexity(const BinaryWord& w, std::size_t n) {
  if (n == 0) return 1;
  if (n > w.size()) return 0;
  const std::string_view s = w.view();
  std::unordered_set<std::string_view> factors;
  for (std::size_t i = 0; i + n <= s.size(); ++i) factors.insert(s.substr(i, n));
  return factors.size();
}

enum class Verdict { pass, fail, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct PrefixCheckReport {
  Verdict verdict = Verdict::pass;
  std::vector<std::size_t> complexity;           // complexity[n] for n = 0..max_n
  BalanceReport balance;
  std::optional<std::size_t> first_bad_n;        // complexity deviation witness
};

// Evidence check for Sturmian-ness of a finite prefix: complexity n+1 for all
// n <= max_n plus balance.  Excess complexity or imbalance refutes; a deficit
// refutes only when the 10n data floor is met, otherwise it is inconclusive.
inline PrefixCheckReport sturmian_prefix_check(const BinaryWord& w, std::size_t max_n) {
  if (w.size() < 10 * max_n)
    throw error(errc::insufficient_length,
                "need at least " + std::to_string(10 * max_n) + " letters, have " +
                    std::to_string(w.size()));
  PrefixCheckReport report;
  report.complexity.resize(max_n + 1);
  report.complexity[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t c = factor_complexity(w, n);
    report.complexity[n] = c;
    if (c == n + 1 || report.verdict != Verdict::pass) continue;
    report.first_bad_n = n;
    report.verdict = (c > n + 1 || w.size() >= 10 * n) ? Verdict::fail : Verdict::inconclusive;
  }
  report.balance = is_balanced(w, max_n);
  if (!report.balance.balanced) report.verdict = Verdict::fail;
  return report;
}

} // namespace sturmian
