#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bglab/analysis.hpp"
#include "bglab/checker.hpp"
#include "bglab/constructions.hpp"
#include "bglab/errors.hpp"
#include "bglab/group.hpp"
#include "bglab/io.hpp"
#include "bglab/parser.hpp"
#include "bglab/suite.hpp"
#include "bglab/terms.hpp"
#include "bglab/validate.hpp"

namespace {

  using namespace bglab;

  // exit codes
  constexpr int kOk       = 0;
  constexpr int kSemantic = 1;
  constexpr int kInput    = 2;

  struct InputError : Error {
    using Error::Error;
  };

  std::vector<std::string> split_labels(std::string const& text) {
    std::vector<std::string> out;
    std::stringstream        in(text);
    std::string              item;
    while (std::getline(in, item, ',')) {
      auto const b = item.find_first_not_of(" \t");
      auto const e = item.find_last_not_of(" \t");
      if (b != std::string::npos) {
        out.push_back(item.substr(b, e - b + 1));
      }
    }
    return out;
  }

  ElementSet labels_to_set(FiniteAlgebra const& alg, std::string const& text) {
    ElementSet out;
    for (auto const& l : split_labels(text)) {
      out.push_back(alg.at(l));
    }
    return normalized(std::move(out));
  }

  void emit_algebra(FiniteAlgebra const& alg, std::string const& out) {
    if (out.empty() || out == "-") {
      std::cout << dump_algebra(alg);
      std::cerr << "size " << alg.size() << '\n';
    } else {
      save_algebra(out, alg);
      std::cout << "size " << alg.size() << '\n';
    }
  }

  FiniteAlgebra load_valid(std::string const& path) {
    auto alg = load_algebra(path);
    if (auto v = validate(alg)) {
      throw InputError(path + ": " + describe(alg, *v));
    }
    return alg;
  }

  // build ---------------------------------------------------------------------------

  struct BuildArgs {
    std::string out;
    std::string group     = "S3";
    unsigned    index     = 2;
    bool        nonempty  = false;
    unsigned    n         = 2;
    unsigned    h         = 1;
    bool        no_star   = false;
    std::string subgroup  = "e,(12)";
    std::string g         = "(13)";
    std::string from;
    std::string label;
    std::string ideal;
    std::string from_meta;
  };

  void setup_build(CLI::App& app, BuildArgs& a, std::optional<FiniteAlgebra>& result) {
    auto* build = app.add_subcommand("build", "Construct an algebra and write it as JSON");
    build->add_option("--from-meta", a.from_meta,
                      "Rebuild the algebra recorded in the meta block of FILE");
    build->add_option("-o,--output", a.out, "Output file (.gz compresses); stdout if omitted");
    build->require_subcommand(0, 1);

    auto sub = [&](char const* name, char const* help) {
      auto* s = build->add_subcommand(name, help);
      s->add_option("-o,--output", a.out, "Output file (.gz compresses); stdout if omitted");
      return s;
    };
    auto group_opt = [&](CLI::App* s) {
      s->add_option("--group", a.group, "Group: Cn, Zn, Sn (n <= 5), Dn or Q8")
          ->capture_default_str();
    };

    auto* grp = sub("group", "A concrete group with star = inverse");
    group_opt(grp);
    grp->callback([&] { result = make_group(GroupSpec::parse(a.group)); });

    auto* brandt = sub("brandt", "Brandt semigroup B(G, I)");
    group_opt(brandt);
    brandt->add_option("--index", a.index, "Size of the index set I")->capture_default_str();
    brandt->callback(
        [&] { result = brandt_semigroup(make_group(GroupSpec::parse(a.group)), a.index); });

    sub("b21", "The six-element Brandt monoid with + and transpose")->callback([&] {
      result = brandt_monoid_b21();
    });

    auto* ps = sub("power-semiring", "(P(G), union, product)");
    group_opt(ps);
    ps->add_flag("--nonempty", a.nonempty, "Leave out the empty set");
    ps->callback([&] {
      result = power_semiring(make_group(GroupSpec::parse(a.group)), a.nonempty);
    });

    auto* ip = sub("involution-power", "(P(G), product, elementwise inverse)");
    group_opt(ip);
    ip->callback([&] { result = involution_power(make_group(GroupSpec::parse(a.group))); });

    auto* hall = sub("hall", "Hall relations on n points");
    hall->add_option("--n", a.n, "Number of points")->capture_default_str();
    hall->add_flag("--no-star", a.no_star, "Omit the transpose");
    hall->callback([&] { result = hall_semiring(a.n, !a.no_star); });

    auto* kad = sub("kadourek", "Inverse semigroup generated by the maps read off w[n,h]");
    kad->set_help_flag("--help", "Print this help message and exit");
    kad->add_option("--n", a.n, "n >= 2")->capture_default_str();
    kad->add_option("--h", a.h, "h >= 1")->capture_default_str();
    kad->callback([&] { result = kadourek_semigroup(a.n, a.h).algebra; });

    auto* sb = sub("subset-b", "The subsemiring {E, H, g'H, Hg, g'Hg} u J of P(G)");
    group_opt(sb);
    sb->add_option("--subgroup", a.subgroup, "Comma-separated labels of H")
        ->capture_default_str();
    sb->add_option("--g", a.g, "Label of g")->capture_default_str();
    sb->callback([&] {
      auto const grp_alg = make_group(GroupSpec::parse(a.group));
      auto const h       = labels_to_set(grp_alg, a.subgroup);
      result = subset_b_algebra(grp_alg, subset_b(grp_alg, mask_of(h), grp_alg.at(a.g)));
    });

    auto* az = sub("adjoin-zero", "Adjoin a new zero to the algebra in FILE");
    az->add_option("--from", a.from, "Input algebra file")->required();
    az->add_option("--label", a.label, "Label of the new element");
    az->callback([&] {
      result = adjoin_zero(load_valid(a.from), a.label.empty() ? "0" : a.label);
    });

    auto* ai = sub("adjoin-identity", "Adjoin a new identity to the algebra in FILE");
    ai->add_option("--from", a.from, "Input algebra file")->required();
    ai->add_option("--label", a.label, "Label of the new element");
    ai->callback([&] {
      result = adjoin_identity(load_valid(a.from), a.label.empty() ? "1" : a.label);
    });

    auto* rq = sub("rees-quotient", "Collapse an ideal of the algebra in FILE to a zero");
    rq->add_option("--from", a.from, "Input algebra file")->required();
    rq->add_option("--ideal", a.ideal, "Comma-separated labels of the ideal")->required();
    rq->callback([&] {
      auto const base = load_valid(a.from);
      result          = rees_quotient(base, labels_to_set(base, a.ideal));
    });

    build->final_callback([&] {
      if (!a.from_meta.empty()) {
        if (result) {
          throw InputError("--from-meta cannot be combined with a construction");
        }
        result = rebuild_from_meta(load_algebra(a.from_meta).meta());
      }
      if (!result) {
        throw InputError("build needs a construction or --from-meta");
      }
      emit_algebra(*result, a.out);
    });
  }

  // analyze --------------------------------------------------------------------------

  int run_analyze(std::string const& path, std::string const& out) {
    auto const alg = load_algebra(path);
    if (auto v = validate(alg)) {
      nlohmann::json err = {{"error", "axiom violation"},
                            {"law", v->law},
                            {"witness", v->witness},
                            {"description", describe(alg, *v)}};
      std::cout << err.dump(2) << '\n';
      return kInput;
    }
    auto const text = analysis_report(alg).dump(2) + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      write_text(out, text);
    }
    return kOk;
  }

  // words ----------------------------------------------------------------------------

  struct WordsArgs {
    std::string   family;
    unsigned      n = 2;
    unsigned      k = 1;
    std::uint64_t m = 1;
    unsigned      h = 1;
    unsigned      r = 1;
    std::string   expr;
    std::string   format = "dsl";
  };

  int run_words(WordsArgs const& a) {
    Term t;
    if (!a.expr.empty()) {
      t = parse_term(a.expr);
    } else if (a.family == "v") {
      t = v_word(a.n, a.m, a.h).flatten(default_budgets().word_length);
    } else if (a.family == "u") {
      t = u_word(a.n, a.k, a.m);
    } else if (a.family == "w") {
      t = w_word(a.n, a.h);
    } else if (a.family == "zeta") {
      t = zeta_expand(a.n, a.m, a.h, a.r);
    } else {
      throw InputError("words needs --expr or a family (v, u, w, zeta)");
    }
    if (a.format == "dsl") {
      std::cout << format_term(t) << '\n';
      return kOk;
    }
    nlohmann::json alphabet = nlohmann::json::array();
    for (auto const& v : t.alphabet()) {
      alphabet.push_back(v.name());
    }
    nlohmann::json letters = nlohmann::json::array();
    for (auto const& l : t.letters()) {
      letters.push_back({{"indices", l.var.index}, {"exp", l.inverse ? -1 : 1}});
    }
    std::cout << nlohmann::json{{"alphabet", alphabet}, {"letters", letters}}.dump() << '\n';
    return kOk;
  }

  // check ----------------------------------------------------------------------------

  struct CheckArgs {
    std::string              algebra;
    std::string              identity;
    std::string              mode = "exhaustive";
    std::optional<std::uint64_t> budget;
    std::uint64_t            samples = 100'000;
    std::uint64_t            seed    = 1;
    std::vector<std::string> domains;
    unsigned                 workers = 0;
  };

  int run_check(CheckArgs const& a) {
    auto const alg = load_valid(a.algebra);
    auto const id  = parse_identity(a.identity);
    CheckOptions opts;
    opts.workers = a.workers;
    if (a.budget) {
      opts.budget = *a.budget;
    }
    for (auto const& d : a.domains) {
      auto const eq = d.find('=');
      if (eq == std::string::npos) {
        throw InputError("--domain expects VAR=SETFILE, got '" + d + "'");
      }
      auto const var = parse_expr(d.substr(0, eq));
      if (var.kind() != Expr::Kind::letter || var.letter().inverse) {
        throw InputError("--domain: '" + d.substr(0, eq) + "' is not a variable");
      }
      opts.domains[var.letter().var] =
          element_set_from_json(alg, nlohmann::json::parse(read_text(d.substr(eq + 1))));
    }

    CheckVerdict v;
    if (a.mode == "exhaustive") {
      v = check_identity_exhaustive(alg, id, opts);
    } else if (a.mode == "sampled") {
      v = check_identity_sampled(alg, id, a.samples, a.seed, opts);
    } else if (a.mode == "block") {
      v = check_identity_block(alg, id, opts);
    } else {
      throw InputError("unknown mode '" + a.mode + "'");
    }
    auto j        = v.to_json(alg);
    j["identity"] = id.to_string();
    std::cout << j.dump(2) << '\n';
    switch (v.status) {
      case CheckStatus::holds:
      case CheckStatus::no_counterexample_found:
        return kOk;
      case CheckStatus::counterexample:
        return kSemantic;
      case CheckStatus::budget_exceeded:
        return kInput;
    }
    return kInput;
  }

  // verify-suite ---------------------------------------------------------------------

  int run_suite_cmd(std::string const& profile, unsigned workers, std::uint64_t seed,
                    std::string const& out) {
    auto const report = run_suite(profile_from_string(profile), workers, seed);
    for (auto const& e : report.entries) {
      std::cerr << (e.passed ? "pass " : "FAIL ") << e.id << "  (" << e.seconds << " s)";
      if (!e.passed) {
        std::cerr << "  " << e.detail;
      }
      std::cerr << '\n';
    }
    auto const text = report.to_json().dump(2) + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      write_text(out, text);
    }
    return report.passed ? kOk : kSemantic;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, ai-semirings and identity checking"};
  app.require_subcommand(1);

  BuildArgs                    build_args;
  std::optional<FiniteAlgebra> built;
  setup_build(app, build_args, built);

  std::string analyze_path, analyze_out;
  auto*       analyze = app.add_subcommand("analyze", "Structure report of an algebra file");
  analyze->add_option("file", analyze_path, "Algebra file")->required();
  analyze->add_option("-o,--output", analyze_out, "Write the report to a file");

  WordsArgs wa;
  auto*     words = app.add_subcommand("words", "Print a member of a word family");
  words->set_help_flag("--help", "Print this help message and exit");
  words->add_option("family", wa.family, "v, u, w or zeta");
  words->add_option("--expr", wa.expr, "Any term in the identity language");
  words->add_option("--n", wa.n)->capture_default_str();
  words->add_option("--k", wa.k)->capture_default_str();
  words->add_option("--m", wa.m)->capture_default_str();
  words->add_option("--h", wa.h)->capture_default_str();
  words->add_option("--r", wa.r)->capture_default_str();
  words->add_option("--format", wa.format, "dsl or json")
      ->check(CLI::IsMember({"dsl", "json"}))
      ->capture_default_str();

  CheckArgs ca;
  auto*     check = app.add_subcommand("check", "Check an identity in an algebra");
  check->add_option("--algebra", ca.algebra, "Algebra file")->required();
  check->add_option("--identity", ca.identity, "\"LHS = RHS\"")->required();
  check->add_option("--mode", ca.mode, "exhaustive, sampled or block")
      ->check(CLI::IsMember({"exhaustive", "sampled", "block"}))
      ->capture_default_str();
  check->add_option("--budget", ca.budget, "Evaluation budget");
  check->add_option("--samples", ca.samples)->capture_default_str();
  check->add_option("--seed", ca.seed)->capture_default_str();
  check->add_option("--domain", ca.domains, "VAR=SETFILE, a JSON array of labels or indices");
  check->add_option("--workers", ca.workers, "Threads (0 = all cores)")->capture_default_str();

  std::string   profile = "quick", suite_out;
  unsigned      suite_workers = 0;
  std::uint64_t suite_seed    = 1;
  auto*         suite = app.add_subcommand("verify-suite", "Run every verification check");
  suite->add_option("--profile", profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  suite->add_option("--workers", suite_workers)->capture_default_str();
  suite->add_option("--seed", suite_seed)->capture_default_str();
  suite->add_option("-o,--output", suite_out, "Write the JSON report to a file");

  try {
    app.parse(argc, argv);
    if (*analyze) {
      return run_analyze(analyze_path, analyze_out);
    }
    if (*words) {
      return run_words(wa);
    }
    if (*check) {
      return run_check(ca);
    }
    if (*suite) {
      return run_suite_cmd(profile, suite_workers, suite_seed, suite_out);
    }
    return kOk;
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? kOk : kInput;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}
