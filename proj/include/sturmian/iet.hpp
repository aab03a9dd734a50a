#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/error.hpp"
#include "sturmian/exact.hpp"
#include "sturmian/morphisms.hpp"
#include "sturmian/rcfact.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

// Exchange of the three intervals [0, alpha), [alpha, alpha+beta) and
// [alpha+beta, ell), reassembled in reverse order.
struct IETParams {
  QuadraticReal alpha, beta, ell, rho;

  IETParams(QuadraticReal alpha_, QuadraticReal beta_, QuadraticReal ell_, QuadraticReal rho_)
      : alpha(std::move(alpha_)), beta(std::move(beta_)), ell(std::move(ell_)),
        rho(std::move(rho_)) {
    const QuadraticReal zero = QuadraticReal::from_int(0);
    if (!(zero < alpha) || !(zero < beta) || !(alpha + beta < ell))
      throw error(errc::invalid_spec,
                  "need 0 < alpha, 0 < beta and alpha + beta < ell");
    if (rho < zero || !(rho < ell))
      throw error(errc::invalid_spec, "starting point must lie in [0, ell)");
  }

  QuadraticReal shift_a() const { return ell - alpha; }
  QuadraticReal shift_b() const { return ell - alpha - alpha - beta; }
  QuadraticReal shift_c() const { return -(alpha + beta); }
};

inline std::pair<QuadraticReal, char> iet_step(const IETParams& p, const QuadraticReal& xi) {
  if (xi < QuadraticReal::from_int(0) || !(xi < p.ell))
    throw error(errc::out_of_domain, "point " + xi.str() + " lies outside [0, ell)");
  if (xi < p.alpha) return {xi + p.shift_a(), 'a'};
  if (xi < p.alpha + p.beta) return {xi + p.shift_b(), 'b'};
  return {xi + p.shift_c(), 'c'};
}

// Coding of the forward orbit of rho: letter k names the interval containing
// the k-th iterate.
inline std::string iet_word(const IETParams& p, std::size_t n) {
  std::string out;
  out.reserve(n);
  QuadraticReal xi = p.rho;
  for (std::size_t k = 0; k < n; ++k) {
    auto [next, letter] = iet_step(p, xi);
    out.push_back(letter);
    xi = std::move(next);
  }
  return out;
}

struct Verify3IETReport {
  Verdict sigma_verdict = Verdict::inconclusive;
  Verdict sigma_prime_verdict = Verdict::inconclusive;
  Verdict combined = Verdict::inconclusive;
  PrefixCheckReport sigma_report, sigma_prime_report;
  std::size_t max_n = 0;
};

// A ternary word is an aperiodic 3-iet word exactly when both binary codings
// sigma (b -> 01) and sigma-prime (b -> 10) are Sturmian; this runs the
// finite-prefix proxy for that criterion on both images.
inline Verify3IETReport verify_3iet(const std::string& u, std::size_t max_n = 0) {
  std::map<char, std::size_t> counts;
  for (char ch : u) ++counts[ch];
  for (char letter : {'a', 'b', 'c'})
    if (counts[letter] < 2)
      throw error(errc::missing_letter, std::string("letter '") + letter + "' occurs " +
                                            std::to_string(counts[letter]) +
                                            " times; need at least 2");

  const BinaryWord sigma_image = TernaryMorphism::sigma().apply(u);
  const BinaryWord sigma_prime_image = TernaryMorphism::sigma_prime().apply(u);
  Verify3IETReport r;
  r.max_n = max_n != 0 ? max_n : std::min<std::size_t>(20, sigma_image.size() / 10);
  if (r.max_n == 0)
    throw error(errc::insufficient_length,
                "images of " + std::to_string(sigma_image.size()) + " letters are too short");
  r.sigma_report = sturmian_prefix_check(sigma_image, r.max_n);
  r.sigma_prime_report = sturmian_prefix_check(sigma_prime_image, r.max_n);
  r.sigma_verdict = r.sigma_report.verdict;
  r.sigma_prime_verdict = r.sigma_prime_report.verdict;
  if (r.sigma_verdict == Verdict::fail || r.sigma_prime_verdict == Verdict::fail)
    r.combined = Verdict::fail;
  else if (r.sigma_verdict == Verdict::pass && r.sigma_prime_verdict == Verdict::pass)
    r.combined = Verdict::pass;
  else
    r.combined = Verdict::inconclusive;
  return r;
}

struct GapReport {
  std::vector<std::size_t> hits;           // n in [0, N) with {n*alpha} < beta
  std::map<std::size_t, std::size_t> gaps; // distinct hit differences -> count
  bool sum_property = true;                // at three values: largest = sum of other two
};

// Visits of the rotation orbit {n*alpha} to the window [0, beta), computed
// exactly; the successive visit gaps take at most three values.
inline GapReport three_gap(const QuadraticReal& alpha, const QuadraticReal& beta, std::size_t N) {
  const QuadraticReal zero = QuadraticReal::from_int(0);
  const QuadraticReal one = QuadraticReal::from_int(1);
  if (alpha.is_rational()) throw error(errc::rational_slope, "rotation angle must be irrational");
  if (!(zero < alpha) || !(alpha < one))
    throw error(errc::invalid_spec, "rotation angle must lie in (0, 1)");
  if (!(zero < beta) || !(beta + beta < one))
    throw error(errc::invalid_spec, "window must lie in (0, 1/2)");
  if (N < 2) throw error(errc::invalid_spec, "need at least 2 orbit points");

  GapReport r;
  QuadraticReal acc = zero;  // {n * alpha}
  for (std::size_t n = 0; n < N; ++n) {
    if (acc < beta) r.hits.push_back(n);
    acc = acc + alpha;
    if (!(acc < one)) acc = acc - one;
  }
  if (r.hits.size() < 2)
    throw error(errc::no_hits, "only " + std::to_string(r.hits.size()) +
                                   " orbit points fall in the window; need at least 2");
  for (std::size_t i = 0; i + 1 < r.hits.size(); ++i) ++r.gaps[r.hits[i + 1] - r.hits[i]];
  if (r.gaps.size() == 3) {
    auto it = r.gaps.begin();
    const std::size_t g1 = (it++)->first;
    const std::size_t g2 = (it++)->first;
    const std::size_t g3 = it->first;
    r.sum_property = g1 + g2 == g3;
  }
  return r;
}

struct RCAs3IETReport {
  std::string ternary;  // terms coded a (short part), b (merged pair), c (long part)
  Verify3IETReport iet;
  bool sigma_identity = false;        // sigma(ternary) equals the refined coding
  bool sigma_prime_identity = false;  // sigma-prime(ternary) equals the partner's
};

// Reads a three-term-alphabet factorization as a 3-iet word: code the terms
// u -> a, z -> b, v -> c (z = uv), check the word through the two-coding
// criterion, and confirm the codings coincide with the refinements of the
// factorization and of its partner.
inline RCAs3IETReport rc_as_3iet(const RCFactorization& f) {
  if (f.alphabet.size() != 3)
    throw error(errc::not_ternary, "need a three-element alphabet, have " +
                                       std::to_string(f.alphabet.size()));
  const auto split = longest_term_split(f.alphabet);
  if (!split)
    throw error(errc::invalid_spec,
                "longest term '" + f.alphabet.back().word.str() +
                    "' is not a concatenation of the other two alphabet elements");
  const BinaryWord& u = split->first.word;
  const BinaryWord& z = f.alphabet.back().word;

  std::map<std::string, std::size_t> occurrences;
  for (const ChristoffelWord& t : f.terms) ++occurrences[t.word.str()];
  for (const ChristoffelWord& t : f.alphabet)
    if (occurrences[t.word.str()] < 2)
      throw error(errc::rare_term, "term '" + t.word.str() + "' occurs only " +
                                       std::to_string(occurrences[t.word.str()]) +
                                       " times; need at least 2");

  RCAs3IETReport r;
  r.ternary.reserve(f.terms.size());
  for (const ChristoffelWord& t : f.terms)
    r.ternary.push_back(t.word == u ? 'a' : (t.word == z ? 'b' : 'c'));

  r.iet = verify_3iet(r.ternary);
  r.sigma_identity = TernaryMorphism::sigma().apply(r.ternary) == refine(f).coded;

  std::vector<ChristoffelWord> reversed_terms;
  for (const ChristoffelWord& t : f.terms)
    reversed_terms.push_back(*classify_christoffel(t.word.reversed()));
  const RCFactorization partner = from_terms(reversed_terms);
  r.sigma_prime_identity =
      TernaryMorphism::sigma_prime().apply(r.ternary) == refine(partner, u.reversed()).coded;
  return r;
}

} // namespace sturmian
