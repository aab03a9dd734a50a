#pragma once

// Command-line front end.  run() drives every subcommand against a pair of
// output streams so the binary and the tests share one entry point.
// Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage error or a
// rejected precondition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sturmian/christoffel.hpp"
#include "sturmian/exact.hpp"
#include "sturmian/iet.hpp"
#include "sturmian/morphisms.hpp"
#include "sturmian/rcfact.hpp"
#include "sturmian/sampling.hpp"
#include "sturmian/words.hpp"

namespace sturmian::cli {

namespace detail {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string slope, intercept, intercept1, intercept2;
  std::string kind = "lower";
  std::size_t length = 0;
  std::string word;
  std::size_t depth = 0;
  std::string map;
  std::size_t prefix_len = 0;
  std::size_t host_length = 10000;
  std::string alpha, beta, ell = "rat:1/1", rho = "rat:0/1";
  std::size_t gap_count = 0;
  bool check = false;
  std::size_t sweep_count = 50, sweep_length = 10000;
  bool include_incomparable = false;

  bool json_format() const { return format == "json"; }
};

inline QuadraticReal parse_value(const char* flag, const std::string& text) {
  try {
    return QuadraticReal::parse(text);
  } catch (const error& e) {
    throw error(errc::usage, std::string(flag) + ": " + e.what());
  }
}

// "0:<image>,1:<image>" in either order
inline BinaryMorphism parse_map(const char* flag, const std::string& text) {
  const auto comma = text.find(',');
  std::optional<BinaryWord> images[2];
  for (const std::string& part :
       {text.substr(0, comma), comma == std::string::npos ? std::string() : text.substr(comma + 1)}) {
    if (part.size() < 3 || part[1] != ':' || (part[0] != '0' && part[0] != '1'))
      throw error(errc::usage, std::string(flag) + ": expected \"0:<image>,1:<image>\"");
    images[part[0] - '0'] = BinaryWord(std::string_view(part).substr(2));
  }
  if (!images[0] || !images[1])
    throw error(errc::usage, std::string(flag) + ": both letters 0 and 1 need an image");
  return {*images[0], *images[1]};
}

inline void emit(const Options& o, std::ostream& out, const json& j,
                 const std::vector<std::string>& text_lines) {
  if (o.json_format()) {
    out << j.dump(2) << '\n';
  } else {
    for (const std::string& line : text_lines) out << line << '\n';
  }
}

inline std::string joined(const std::vector<ChristoffelWord>& words) {
  std::string s;
  for (const ChristoffelWord& w : words) {
    if (!s.empty()) s += ' ';
    s += w.word.str();
  }
  return s;
}

inline std::vector<std::string> word_strings(const std::vector<ChristoffelWord>& words) {
  std::vector<std::string> v;
  v.reserve(words.size());
  for (const ChristoffelWord& w : words) v.push_back(w.word.str());
  return v;
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline int cmd_generate(const Options& o, std::ostream& out) {
  const QuadraticReal slope = parse_value("--slope", o.slope);
  const QuadraticReal intercept =
      o.intercept.empty() ? slope : parse_value("--intercept", o.intercept);
  const WordKind kind = o.kind == "upper" ? WordKind::upper : WordKind::lower;
  const BinaryWord w = mechanical_prefix(MechanicalSpec(slope, intercept, kind), o.length);
  emit(o, out, json{{"word", w.str()}, {"length", w.size()}}, {w.str()});
  return 0;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  const auto c = classify_christoffel(BinaryWord(o.word));
  if (!c) {
    emit(o, out, json{{"christoffel", false}}, {"not a Christoffel word"});
    return 1;
  }
  emit(o, out,
       json{{"christoffel", true},
            {"kind", christoffel_kind_name(c->kind)},
            {"ones", c->ones},
            {"zeros", c->zeros}},
       {std::string("kind: ") + christoffel_kind_name(c->kind),
        "slope: " + std::to_string(c->ones) + "/" + std::to_string(c->zeros)});
  return 0;
}

inline int cmd_tree(const Options& o, std::ostream& out) {
  const ChristoffelTree t(o.depth);
  json nodes = json::array();
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const ChristoffelPair& p = t.node(i);
    nodes.push_back({p.left.word.str(), p.right.word.str()});
    lines.push_back("(" + p.left.word.str() + "," + p.right.word.str() + ")");
  }
  emit(o, out, json{{"depth", o.depth}, {"nodes", nodes}}, lines);
  return 0;
}

inline RCFactorization comparison_from(const Options& o) {
  return compare_mechanical(parse_value("--slope", o.slope),
                            parse_value("--intercept1", o.intercept1),
                            parse_value("--intercept2", o.intercept2), o.length);
}

inline int cmd_compare(const Options& o, std::ostream& out) {
  RCFactorization f;
  try {
    f = comparison_from(o);
  } catch (const error& e) {
    if (e.code() != errc::abelian_incomparable) throw;
    emit(o, out,
         json{{"slope", parse_value("--slope", o.slope).str()}, {"incomparable", true}},
         {"incomparable: no cut found in the scanned prefix"});
    return 0;
  }
  const TheoremMainReport r = verify_theorem_main(f);

  json tm;
  tm["size"] = r.alphabet_size;
  tm["concat"] = r.concat_witness;
  tm["verdict"] = verdict_name(r.verdict);
  json j;
  j["slope"] = parse_value("--slope", o.slope).str();
  j["terms"] = word_strings(f.terms);
  j["alphabet"] = word_strings(f.alphabet);
  j["kind"] = factorization_kind_name(f.kind);
  j["truncated"] = f.truncated;
  j["theorem_main"] = tm;

  emit(o, out, j,
       {std::string("kind: ") + factorization_kind_name(f.kind),
        std::string("truncated: ") + yesno(f.truncated), "terms: " + joined(f.terms),
        "alphabet: " + joined(f.alphabet),
        std::string("theorem: size=") + std::to_string(r.alphabet_size) +
            " verdict=" + verdict_name(r.verdict) +
            (r.concat_witness.empty() ? "" : " concat=" + r.concat_witness)});
  return r.verdict == Verdict::fail ? 1 : 0;
}

inline int cmd_refine(const Options& o, std::ostream& out) {
  const RCFactorization f = comparison_from(o);
  const RefineResult r = refine(f);
  const auto split = longest_term_split(f.alphabet);
  const bool preserved = r.fact.word == f.word.prefix(f.covered);
  emit(o, out,
       json{{"coded", r.coded.str()},
            {"zero", split->first.word.str()},
            {"one", split->second.word.str()},
            {"terms", r.fact.terms.size()},
            {"preserved", preserved}},
       {"coded: " + r.coded.str(), "zero: " + split->first.word.str(),
        "one: " + split->second.word.str(), std::string("preserved: ") + yesno(preserved)});
  return preserved ? 0 : 1;
}

inline int cmd_coarsen(const Options& o, std::ostream& out) {
  const RCFactorization f = comparison_from(o);
  const RCFactorization base = f.alphabet.size() == 3 ? refine(f).fact : f;
  const CoarsenResult c = coarsen(base);
  const bool preserved = base.word.starts_with(c.fact.word);
  emit(o, out,
       json{{"coded", c.coded.str()},
            {"alphabet", word_strings(c.fact.alphabet)},
            {"terms", c.fact.terms.size()},
            {"truncated", c.fact.truncated},
            {"preserved", preserved}},
       {"coded: " + c.coded.str(), "alphabet: " + joined(c.fact.alphabet),
        std::string("truncated: ") + yesno(c.fact.truncated),
        std::string("preserved: ") + yesno(preserved)});
  return preserved ? 0 : 1;
}

inline int cmd_morphism_apply(const Options& o, std::ostream& out) {
  const BinaryWord image = parse_map("--map", o.map).apply(BinaryWord(o.word));
  emit(o, out, json{{"word", image.str()}, {"length", image.size()}}, {image.str()});
  return 0;
}

inline int cmd_morphism_check(const Options& o, std::ostream& out) {
  const SturmianMorphismReport r = is_sturmian_morphism(parse_map("--map", o.map));
  std::vector<std::string> lines{std::string("sturmian: ") + yesno(r.sturmian)};
  if (!r.sturmian)
    lines.push_back("witness: the image of " + r.test_word.str() + " is " + r.image.str() +
                    ", which has no Christoffel conjugate");
  emit(o, out,
       json{{"sturmian", r.sturmian},
            {"witness_word", r.test_word.str()},
            {"witness_image", r.image.str()}},
       lines);
  return r.sturmian ? 0 : 1;
}

inline int cmd_returns(const Options& o, std::ostream& out) {
  if (o.prefix_len == 0 || o.prefix_len >= o.host_length)
    throw error(errc::usage, "--prefix-len must be positive and smaller than --length");
  const BinaryWord w = characteristic_prefix(parse_value("--slope", o.slope), o.host_length);
  const BinaryWord p = w.prefix(o.prefix_len);
  const std::vector<BinaryWord> returns = return_words(w, p);
  const DerivedWord d = derived_word(w, p);
  std::vector<std::string> names;
  for (const BinaryWord& r : returns) names.push_back(r.str());
  const BinaryWord head = d.coded.prefix(std::min<std::size_t>(40, d.coded.size()));
  emit(o, out,
       json{{"prefix", p.str()},
            {"returns", names},
            {"derived_prefix", head.str()},
            {"covered", d.covered}},
       {"prefix: " + p.str(), "returns: " + names[0] + " " + names[1],
        "derived: " + head.str(), "covered: " + std::to_string(d.covered)});
  return 0;
}

inline IETParams iet_params_from(const Options& o) {
  return IETParams(parse_value("--alpha", o.alpha), parse_value("--beta", o.beta),
                   parse_value("--ell", o.ell), parse_value("--rho", o.rho));
}

inline int cmd_iet_run(const Options& o, std::ostream& out) {
  const std::string w = iet_word(iet_params_from(o), o.length);
  json j{{"word", w}, {"length", w.size()}};
  std::vector<std::string> lines{w};
  int rc = 0;
  if (o.check) {
    const Verify3IETReport r = verify_3iet(w);
    j["check"] = json{{"sigma", verdict_name(r.sigma_verdict)},
                      {"sigma_prime", verdict_name(r.sigma_prime_verdict)},
                      {"combined", verdict_name(r.combined)}};
    lines.push_back(std::string("sigma: ") + verdict_name(r.sigma_verdict));
    lines.push_back(std::string("sigma-prime: ") + verdict_name(r.sigma_prime_verdict));
    lines.push_back(std::string("combined: ") + verdict_name(r.combined));
    rc = r.combined == Verdict::fail ? 1 : 0;
  }
  emit(o, out, j, lines);
  return rc;
}

inline int cmd_gaps(const Options& o, std::ostream& out) {
  const GapReport g =
      three_gap(parse_value("--alpha", o.alpha), parse_value("--beta", o.beta), o.gap_count);
  json gaps = json::object();
  std::vector<std::string> lines;
  for (const auto& [value, count] : g.gaps) {
    gaps[std::to_string(value)] = count;
    lines.push_back("gap " + std::to_string(value) + ": " + std::to_string(count));
  }
  lines.push_back(std::string("sum-property: ") + yesno(g.sum_property));
  emit(o, out, json{{"gaps", gaps}, {"sum_property", g.sum_property}}, lines);
  return g.sum_property ? 0 : 1;
}

inline int cmd_verify_sweep(const Options& o, std::ostream& out) {
  Sampler sampler(o.seed);
  std::size_t pass = 0, fail = 0, inconclusive = 0, incomparable = 0, errored = 0;
  for (std::size_t i = 0; i < o.sweep_count; ++i) {
    const QuadraticReal slope = sampler.unit_irrational();
    const SweepSummary s =
        rc_sweep(slope, {{sampler.intercept_for(slope), sampler.intercept_for(slope)}},
                 o.sweep_length);
    pass += s.pass;
    fail += s.fail;
    inconclusive += s.inconclusive;
    for (const SweepItem& item : s.items)
      if (!item.error_name.empty())
        item.error_name == "abelian-incomparable" ? ++incomparable : ++errored;
  }

  std::size_t expected_incomparable = 0;
  if (o.include_incomparable) {
    // One pair is known to defeat the comparison: prepend the two different
    // letters to the same characteristic word and no cut ever appears.
    const BinaryWord c =
        characteristic_prefix(QuadraticReal::make(3, -1, 2, 5), o.sweep_length - 1);
    try {
      abelian_compare(BinaryWord("0") + c, BinaryWord("1") + c);
      ++fail;
    } catch (const error& e) {
      e.code() == errc::abelian_incomparable ? ++expected_incomparable : ++errored;
    }
  }

  emit(o, out,
       json{{"pairs", o.sweep_count},
            {"pass", pass},
            {"fail", fail},
            {"inconclusive", inconclusive},
            {"incomparable", incomparable},
            {"errored", errored},
            {"expected_incomparable", expected_incomparable}},
       {"pairs: " + std::to_string(o.sweep_count), "pass: " + std::to_string(pass),
        "fail: " + std::to_string(fail), "inconclusive: " + std::to_string(inconclusive),
        "incomparable: " + std::to_string(incomparable), "errored: " + std::to_string(errored),
        "expected-incomparable: " + std::to_string(expected_incomparable)});
  return fail > 0 ? 1 : 0;
}

} // namespace detail

// args holds everything after the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Sturmian words, Christoffel factorizations, interval exchanges",
               "sturmian"};
  app.require_subcommand(1);

  detail::Options o;
  int code = 0;

  app.add_option("--format", o.format, "output format")
      ->envname("STURMIAN_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized sweeps");

  const auto sub = [&](CLI::App* parent, const char* name, const char* help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  CLI::App* generate = sub(&app, "generate", "print a mechanical word prefix");
  generate->add_option("--slope", o.slope, "slope, qr:a,b,c,d or rat:p/q")->required();
  generate->add_option("--intercept", o.intercept, "intercept (defaults to the slope)");
  generate->add_option("--kind", o.kind, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}));
  generate->add_option("--length", o.length, "prefix length")->required();
  generate->callback([&] { code = detail::cmd_generate(o, out); });

  CLI::App* classify = sub(&app, "classify", "test whether a word is a Christoffel word");
  classify->add_option("word", o.word, "word over 0/1")->required();
  classify->callback([&] { code = detail::cmd_classify(o, out); });

  CLI::App* tree = sub(&app, "tree", "print the Christoffel tree");
  tree->add_option("--depth", o.depth, "tree depth")->required();
  tree->callback([&] { code = detail::cmd_tree(o, out); });

  const auto comparison_flags = [&](CLI::App* s) {
    s->add_option("--slope", o.slope, "common slope")->required();
    s->add_option("--intercept1", o.intercept1, "first intercept")->required();
    s->add_option("--intercept2", o.intercept2, "second intercept")->required();
    s->add_option("--length", o.length, "prefix length")->required();
  };

  CLI::App* compare = sub(&app, "compare", "factor two same-slope words against each other");
  comparison_flags(compare);
  compare->callback([&] { code = detail::cmd_compare(o, out); });

  CLI::App* refine_cmd = sub(&app, "refine", "split the longest element of a comparison");
  comparison_flags(refine_cmd);
  refine_cmd->callback([&] { code = detail::cmd_refine(o, out); });

  CLI::App* coarsen_cmd = sub(&app, "coarsen", "merge adjacent elements of a comparison");
  comparison_flags(coarsen_cmd);
  coarsen_cmd->callback([&] { code = detail::cmd_coarsen(o, out); });

  CLI::App* morphism = sub(&app, "morphism", "binary morphisms");
  morphism->require_subcommand(1);
  CLI::App* m_apply = sub(morphism, "apply", "apply a morphism to a word");
  m_apply->add_option("--map", o.map, "images, e.g. 0:01,1:0")->required();
  m_apply->add_option("--word", o.word, "word over 0/1")->required();
  m_apply->callback([&] { code = detail::cmd_morphism_apply(o, out); });
  CLI::App* m_check = sub(morphism, "check", "test whether a morphism preserves Sturmian words");
  m_check->add_option("--map", o.map, "images, e.g. 0:01,1:0")->required();
  m_check->callback([&] { code = detail::cmd_morphism_check(o, out); });

  const auto returns_flags = [&](CLI::App* s) {
    s->add_option("--slope", o.slope, "slope of the characteristic word")->required();
    s->add_option("--prefix-len", o.prefix_len, "prefix whose returns are listed")->required();
    s->add_option("--length", o.host_length, "length of the scanned word");
  };
  CLI::App* m_returns = sub(morphism, "returns", "return words of a characteristic prefix");
  returns_flags(m_returns);
  m_returns->callback([&] { code = detail::cmd_returns(o, out); });
  CLI::App* returns = sub(&app, "returns", "return words of a characteristic prefix");
  returns_flags(returns);
  returns->callback([&] { code = detail::cmd_returns(o, out); });

  CLI::App* iet = sub(&app, "iet", "three-interval exchanges");
  iet->require_subcommand(1);
  CLI::App* iet_run = sub(iet, "run", "code an exchange orbit");
  iet_run->add_option("--alpha", o.alpha, "first interval length")->required();
  iet_run->add_option("--beta", o.beta, "second interval length")->required();
  iet_run->add_option("--ell", o.ell, "total length (default 1)");
  iet_run->add_option("--rho", o.rho, "starting point (default 0)");
  iet_run->add_option("--length", o.length, "orbit length")->required();
  iet_run->add_flag("--check", o.check, "also run the two-coding criterion");
  iet_run->callback([&] { code = detail::cmd_iet_run(o, out); });

  const auto gaps_flags = [&](CLI::App* s) {
    s->add_option("--alpha", o.alpha, "rotation angle")->required();
    s->add_option("--beta", o.beta, "target interval length")->required();
    s->add_option("-N,--count", o.gap_count, "orbit points scanned")->required();
  };
  CLI::App* iet_gaps = sub(iet, "gaps", "gap statistics of a rotation orbit");
  gaps_flags(iet_gaps);
  iet_gaps->callback([&] { code = detail::cmd_gaps(o, out); });
  CLI::App* gaps = sub(&app, "gaps", "gap statistics of a rotation orbit");
  gaps_flags(gaps);
  gaps->callback([&] { code = detail::cmd_gaps(o, out); });

  CLI::App* sweep = sub(&app, "verify-sweep", "seeded verification sweep");
  sweep->add_option("--count", o.sweep_count, "sampled slope/intercept triples");
  sweep->add_option("--length", o.sweep_length, "prefix length per pair");
  sweep->add_flag("--include-incomparable", o.include_incomparable,
                  "also run the known incomparable pair");
  sweep->callback([&] { code = detail::cmd_verify_sweep(o, out); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e, out, err);
    return cli_code == 0 ? 0 : 2;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}

} // namespace sturmian::cli
