#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "sturmian/rcfact.hpp"

using namespace sturmian;

namespace {

QuadraticReal golden_slope() { return QuadraticReal::make(3, -1, 2, 5); }
QuadraticReal pell_slope() { return QuadraticReal::make(-1, 1, 1, 2); }

BinaryWord fibonacci_prefix(std::size_t n) { return characteristic_prefix(golden_slope(), n); }

auto throws_code(errc c) {
  return Catch::Matchers::Predicate<error>([c](const error& e) { return e.code() == c; });
}

const std::vector<std::string> kGoldenTerms = {"01", "0",  "01", "01", "0",  "01", "001",
                                               "01", "0",  "01", "01", "0",  "01", "0",
                                               "01", "01", "0",  "01", "001", "01"};

std::vector<ChristoffelWord> words_to_terms(const std::vector<std::string>& words) {
  std::vector<ChristoffelWord> terms;
  for (const std::string& s : words) terms.push_back(*classify_christoffel(BinaryWord(s)));
  return terms;
}

std::vector<std::string> term_strings(const RCFactorization& f, std::size_t limit = SIZE_MAX) {
  std::vector<std::string> out;
  for (const ChristoffelWord& t : f.terms) {
    if (out.size() == limit) break;
    out.push_back(t.word.str());
  }
  return out;
}

// Independent cut finder: recounts the 1s of both prefixes from scratch at
// every position instead of tracking a running difference.
std::vector<std::size_t> rescan_cuts(const BinaryWord& w, const BinaryWord& w2) {
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const auto ones = [i](const BinaryWord& x) {
      std::size_t n = 0;
      for (std::size_t j = 0; j < i; ++j) n += x[j] == '1';
      return n;
    };
    if (ones(w) == ones(w2)) cuts.push_back(i);
  }
  return cuts;
}

bool zeros_then_one(const std::string& s) {
  const std::size_t first_one = s.find('1');
  return s == "0" || (first_one == s.size() - 1);
}

} // namespace

TEST_CASE("comparison of the golden pair") {
  const RCFactorization f = compare_mechanical(golden_slope(), golden_slope(),
                                               QuadraticReal::from_ratio(4, 5), 200);

  CHECK(f.word == fibonacci_prefix(200));
  CHECK(term_strings(f, 20) == kGoldenTerms);
  CHECK(f.kind == FactorizationKind::all_lower);
  CHECK(f.beta == QuadraticReal::make(-7, 5, 10, 5));

  SECTION("term reversals tile the partner word") {
    std::size_t at = 0;
    for (const ChristoffelWord& t : f.terms) {
      CHECK(f.partner.substr(at, t.word.size()) == t.word.reversed());
      at += t.word.size();
    }
    CHECK(at == f.covered);
    CHECK(reconstruct_partner(f) == f.partner.prefix(f.covered));
  }

  SECTION("cut positions match a naive rescan") {
    const BinaryWord w = f.word;
    const BinaryWord w2 = f.partner;
    std::vector<std::size_t> boundaries;
    std::size_t at = 0;
    for (const ChristoffelWord& t : f.terms) boundaries.push_back(at += t.word.size());
    std::vector<std::size_t> expected = rescan_cuts(w, w2);
    // The factorization drops cuts after the last one it can close.
    expected.resize(boundaries.size());
    CHECK(boundaries == expected);
  }

  SECTION("coverage bookkeeping") {
    std::size_t total = 0;
    for (const ChristoffelWord& t : f.terms) total += t.word.size();
    CHECK(total == f.covered);
    CHECK(f.truncated == (f.covered != f.word.size()));
  }
}

TEST_CASE("comparison edge cases") {
  SECTION("a word against itself factors into letters") {
    const BinaryWord w = fibonacci_prefix(300);
    const RCFactorization f = abelian_compare(w, w);
    CHECK(f.terms.size() == 300);
    CHECK(f.kind == FactorizationKind::letters_only);
    CHECK(f.covered == 300);
    CHECK_FALSE(f.truncated);
    CHECK(reconstruct_partner(f) == w);
    const TheoremMainReport r = verify_theorem_main(f);
    CHECK(r.alphabet_size == 2);
    CHECK(r.verdict == Verdict::pass);
  }

  SECTION("the two one-sided extensions of a characteristic word are incomparable") {
    const BinaryWord c = fibonacci_prefix(9999);
    const BinaryWord zc = BinaryWord("0") + c;
    const BinaryWord oc = BinaryWord("1") + c;
    CHECK_THROWS_MATCHES(abelian_compare(zc, oc), error,
                         throws_code(errc::abelian_incomparable));
  }

  SECTION("the two-letter extensions compare with a three-word alphabet") {
    const BinaryWord c = fibonacci_prefix(998);
    const RCFactorization f = abelian_compare(BinaryWord("01") + c, BinaryWord("10") + c);
    const TheoremMainReport r = verify_theorem_main(f);
    CHECK(r.alphabet_size == 3);
    // The pair term occurs exactly once, so the size claim stays open.
    CHECK(r.occurrences.at("01") == 1);
    CHECK_FALSE(r.conclusive);
    CHECK(r.verdict == Verdict::inconclusive);
    CHECK(r.longest_is_concatenation);
    CHECK(r.concat_witness == "01=0*1");
    CHECK(r.reversal_ok);
  }

  SECTION("input validation") {
    CHECK_THROWS_MATCHES(abelian_compare(BinaryWord("01"), BinaryWord("011")), error,
                         throws_code(errc::invalid_spec));
    CHECK_THROWS_MATCHES(abelian_compare(BinaryWord(""), BinaryWord("")), error,
                         throws_code(errc::invalid_spec));
  }

  SECTION("non-mirrored segments are rejected") {
    CHECK_THROWS_MATCHES(abelian_compare(BinaryWord("00111"), BinaryWord("10101")), error,
                         throws_code(errc::reversal_mismatch));
  }

  SECTION("segments that are not Christoffel words are rejected") {
    CHECK_THROWS_MATCHES(abelian_compare(BinaryWord("110100"), BinaryWord("001011")), error,
                         throws_code(errc::not_christoffel));
  }

  SECTION("mixed lower and upper terms are a hard error") {
    CHECK_THROWS_MATCHES(abelian_compare(BinaryWord("0110"), BinaryWord("1001")), error,
                         throws_code(errc::mixed_kind));
    CHECK_THROWS_MATCHES(from_terms(words_to_terms({"01", "10"})), error,
                         throws_code(errc::mixed_kind));
  }
}

TEST_CASE("structure theorem verification") {
  const RCFactorization f = compare_mechanical(golden_slope(), golden_slope(),
                                               QuadraticReal::from_ratio(4, 5), 10000);
  const TheoremMainReport r = verify_theorem_main(f);
  CHECK(r.alphabet_size == 3);
  CHECK(r.conclusive);
  CHECK(r.size_ok);
  CHECK(r.longest_is_concatenation);
  CHECK(r.concat_witness == "001=0*01");
  CHECK(r.reversal_ok);
  CHECK(r.kind_uniform);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.occurrences.at("0") > 3);

  SECTION("short factorizations stay inconclusive") {
    const RCFactorization tiny = from_terms(words_to_terms({"01", "0", "01", "01", "0", "001"}));
    const TheoremMainReport rt = verify_theorem_main(tiny);
    CHECK_FALSE(rt.conclusive);
    CHECK(rt.verdict == Verdict::inconclusive);
  }

  SECTION("narrow alphabets have term lengths differing by one") {
    std::size_t applied = 0;
    for (const auto& [slope, rho2] :
         {std::make_pair(golden_slope(), QuadraticReal::from_ratio(4, 5)),
          std::make_pair(pell_slope(), QuadraticReal::from_ratio(1, 3))}) {
      const RCFactorization g = compare_mechanical(slope, slope, rho2, 10000);
      const bool narrow =
          std::all_of(g.alphabet.begin(), g.alphabet.end(),
                      [](const ChristoffelWord& t) { return zeros_then_one(t.word.str()); });
      if (!narrow || g.alphabet.size() != 3) continue;
      ++applied;
      const std::size_t a = g.alphabet[1].word.size();
      const std::size_t b = g.alphabet[2].word.size();
      CHECK(b - a == 1);
    }
    CHECK(applied >= 1);
  }
}

TEST_CASE("refinement") {
  const RCFactorization f20 = from_terms(words_to_terms(kGoldenTerms));

  SECTION("golden twenty-term factorization") {
    const RefineResult r = refine(f20);
    CHECK(r.coded == BinaryWord("1011010110110101101011"));
    REQUIRE(r.fact.alphabet.size() == 2);
    CHECK(r.fact.alphabet[0].word == BinaryWord("0"));
    CHECK(r.fact.alphabet[1].word == BinaryWord("01"));
    CHECK(r.fact.word == f20.word);
    CHECK(reconstruct_partner(r.fact) == r.fact.partner);
  }

  SECTION("naming the other part flips the coding") {
    const RefineResult r = refine(f20, BinaryWord("01"));
    BinaryWord flipped;
    for (std::size_t i = 0; i < r.coded.size(); ++i)
      flipped.push_back(r.coded[i] == '0' ? '1' : '0');
    CHECK(flipped == refine(f20).coded);
  }

  SECTION("full-scale refinement codes a Sturmian word") {
    const RCFactorization f = compare_mechanical(golden_slope(), golden_slope(),
                                                 QuadraticReal::from_ratio(4, 5), 10000);
    const RefineResult r = refine(f);
    CHECK(r.coded.prefix(22) == BinaryWord("1011010110110101101011"));
    CHECK(r.fact.word == f.word.prefix(f.covered));
    CHECK(sturmian_prefix_check(r.coded, 15).verdict == Verdict::pass);
  }

  SECTION("errors") {
    const RefineResult r = refine(f20);
    CHECK_THROWS_MATCHES(refine(r.fact), error, throws_code(errc::not_ternary));
    CHECK_THROWS_MATCHES(refine(f20, BinaryWord("11")), error, throws_code(errc::invalid_spec));
  }
}

TEST_CASE("coarsening") {
  const RCFactorization f20 = from_terms(words_to_terms(kGoldenTerms));

  SECTION("merging the refined golden factorization") {
    const CoarsenResult c = coarsen(refine(f20).fact);
    CHECK(term_strings(c.fact) ==
          std::vector<std::string>{"01", "001", "01", "001", "001", "01", "001", "01", "001",
                                   "001", "01", "001", "001", "01"});
    CHECK(c.coded == BinaryWord("10100101001001"));
    REQUIRE(c.fact.alphabet.size() == 2);
    CHECK(c.fact.alphabet[0].word == BinaryWord("01"));
    CHECK(c.fact.alphabet[1].word == BinaryWord("001"));
    CHECK(c.fact.word == f20.word);
    CHECK_FALSE(c.fact.truncated);
  }

  SECTION("letter factorizations coarsen to the substitution preimage") {
    const BinaryWord w = fibonacci_prefix(300);
    const CoarsenResult c = coarsen(abelian_compare(w, w));
    for (const ChristoffelWord& t : c.fact.alphabet)
      CHECK((t.word == BinaryWord("01") || t.word == BinaryWord("0")));
    CHECK(w.starts_with(c.fact.word));
    CHECK(w.size() - c.fact.word.size() <= 1);
    // The coding inverts the substitution 0 -> 01, 1 -> 0, so it recovers the
    // fixed point itself.
    CHECK(c.coded == w.prefix(c.coded.size()));
    CHECK(sturmian_prefix_check(c.coded, 10).verdict == Verdict::pass);
  }

  SECTION("full-scale round trip preserves the word") {
    const RCFactorization f = compare_mechanical(golden_slope(), golden_slope(),
                                                 QuadraticReal::from_ratio(4, 5), 10000);
    const RefineResult r = refine(f);
    const CoarsenResult c = coarsen(r.fact);
    CHECK(c.fact.word == r.fact.word);
    CHECK(sturmian_prefix_check(c.coded, 15).verdict == Verdict::pass);
  }

  SECTION("a leading unmergeable second component is an error") {
    CHECK_THROWS_MATCHES(coarsen(from_terms(words_to_terms({"01", "0", "0", "01", "0", "0", "01"}))),
                         error, throws_code(errc::first_term_is_v));
  }

  SECTION("no adjacency, two-element alphabet") {
    CHECK_THROWS_MATCHES(coarsen(from_terms(words_to_terms({"011", "01"}))), error,
                         throws_code(errc::no_adjacent_pair));
  }

  SECTION("no adjacency, three-element alphabet") {
    CHECK_THROWS_MATCHES(coarsen(from_terms(words_to_terms({"001", "0", "001", "01"}))), error,
                         throws_code(errc::no_adjacent_pair));
  }

  SECTION("interior strands of both components are rejected") {
    CHECK_THROWS_MATCHES(coarsen(from_terms(words_to_terms({"0", "0", "01", "01"}))), error,
                         throws_code(errc::invalid_spec));
  }

  SECTION("a trailing stranded first component is dropped as truncation debris") {
    const CoarsenResult c = coarsen(from_terms(words_to_terms({"01", "0", "01", "0"})));
    CHECK(term_strings(c.fact) == std::vector<std::string>{"01", "001"});
    CHECK(c.coded == BinaryWord("10"));
    CHECK(c.fact.truncated);
  }

  SECTION("strict alternation merges completely") {
    const CoarsenResult c = coarsen(from_terms(words_to_terms({"0", "01", "0", "01"})));
    CHECK(term_strings(c.fact) == std::vector<std::string>{"001", "001"});
    CHECK(c.coded == BinaryWord("00"));
  }
}

TEST_CASE("proximality") {
  const BinaryWord c = fibonacci_prefix(10000);
  CHECK(proximality_check(c, c) == 0);
  CHECK(proximality_check(BinaryWord("01") + c, BinaryWord("10") + c) == 2);

  const BinaryWord other = mechanical_prefix(
      MechanicalSpec(golden_slope(), QuadraticReal::from_ratio(4, 5), WordKind::lower), 10000);
  CHECK_FALSE(proximality_check(c, other).has_value());

  CHECK_THROWS_MATCHES(proximality_check(c, BinaryWord("0")), error,
                       throws_code(errc::invalid_spec));
}

TEST_CASE("sweeps") {
  const QuadraticReal alpha = golden_slope();
  const std::vector<std::pair<QuadraticReal, QuadraticReal>> pairs = {
      {alpha, QuadraticReal::from_ratio(4, 5)},
      {QuadraticReal::from_int(0), QuadraticReal::from_int(0)},
      {QuadraticReal::from_ratio(1, 3), QuadraticReal::from_ratio(1, 3)},
      {QuadraticReal::sqrt_of(2) - QuadraticReal::from_int(1), QuadraticReal::from_ratio(1, 7)},
  };
  const SweepSummary s = rc_sweep(alpha, pairs, 2000);
  REQUIRE(s.items.size() == 4);
  CHECK(s.pass == 3);
  CHECK(s.errored == 1);
  CHECK(s.items[0].report->alphabet_size == 3);
  CHECK(s.items[1].report->alphabet_size == 2);
  CHECK(s.items[3].error_name == std::string("mixed-radicands"));

  CHECK(rc_sweep(alpha, {}, 100).items.empty());
}
