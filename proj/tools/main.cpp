// Command-line front end: parses one subcommand per invocation, runs the
// matching library operation, and emits a deterministic JSON-lines report.
//
// Exit codes: 0 all verdicts pass, 1 a verification failed, 2 a search
// budget was exhausted, 3 invalid input.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zariski/zariski.hpp"

namespace {

using namespace zariski;

struct CommonOpts {
  std::string out_path;  // empty: stdout
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--out", common.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--seed", common.seed, "Random seed recorded in the report (default 0)");
}

int finish(const Report& report, const CommonOpts& common) {
  if (common.out_path.empty())
    std::cout << report.to_string();
  else
    report.write_file(common.out_path);
  return report.fail() > 0 ? 1 : 0;
}

/// Family input shared by several commands: a family file (with a backend
/// header) or an explicit backend plus inline monomials.
struct FamilyOpts {
  std::string family_path;
  std::string backend_text;
  std::vector<std::string> monomial_texts;
};

void add_family(CLI::App* cmd, FamilyOpts& fo) {
  cmd->add_option("--family", fo.family_path,
                  "Witness-family file (header line \"backend: ...\", one monomial per line)");
  cmd->add_option("--backend", fo.backend_text,
                  "Backend descriptor: free:<r>|free:w|abelian:[m,...]|abelian:<k>|abelian:w|tree-sd");
  cmd->add_option("--monomial", fo.monomial_texts, "Inline monomial literal (repeatable)");
}

AnyBackend resolve_backend(const FamilyOpts& fo) {
  if (!fo.family_path.empty()) {
    FamilyFile file = load_family_file(fo.family_path);
    if (!fo.backend_text.empty()) {
      AnyBackend flag = parse_backend(fo.backend_text);
      if (backend_descriptor(flag) != backend_descriptor(file.backend))
        throw parse_error("--backend disagrees with the family file header");
    }
    return file.backend;
  }
  if (fo.backend_text.empty()) throw parse_error("need --backend or --family");
  return parse_backend(fo.backend_text);
}

template <GroupBackend G>
WitnessFamily<G> resolve_family(const G& backend, const FamilyOpts& fo) {
  std::vector<std::string> lines = fo.monomial_texts;
  if (!fo.family_path.empty()) {
    FamilyFile file = load_family_file(fo.family_path);
    lines.insert(lines.begin(), file.monomial_lines.begin(), file.monomial_lines.end());
  }
  return family_from_lines(backend, lines);
}

// ---------------------------------------------------------------- eval ---

struct EvalOpts {
  FamilyOpts fam;  // backend + --monomial reused; exactly one monomial
  std::string at_text;
  CommonOpts common;
  bool cozero = false;
};

int run_eval(const EvalOpts& o) {
  AnyBackend backend = resolve_backend(o.fam);
  return std::visit(
      [&](const auto& b) {
        auto fam = resolve_family(b, o.fam);
        if (fam.monomials.size() != 1)
          throw parse_error("eval/cozero expect exactly one --monomial");
        const auto& m = fam.monomials[0];
        auto at = b.parse_element(o.at_text);
        Report report(o.cozero ? "cozero" : "eval",
                      {{"backend", b.descriptor()},
                       {"family", o.fam.family_path},
                       {"monomial", format_monomial(m)},
                       {"at", b.format_element(at)},
                       {"seed", o.common.seed}});
        if (o.cozero) {
          bool contains = cozero_contains(m, at);
          report.add_checked_item({{"input", format_monomial(m)},
                                   {"at", b.format_element(at)},
                                   {"contains", contains}},
                                  true);
        } else {
          auto value = eval_monomial(m, at);
          report.add_checked_item({{"input", format_monomial(m)},
                                   {"at", b.format_element(at)},
                                   {"value", b.format_element(value)}},
                                  true);
        }
        return finish(report, o.common);
      },
      backend);
}

// ----------------------------------------------------------- monomials ---

struct MonomialsOpts {
  std::string backend_text = "free:2";
  std::string coeffs_text = "1";
  std::uint64_t degree = 1;
  CommonOpts common;
};

int run_monomials(const MonomialsOpts& o) {
  AnyBackend backend = parse_backend(o.backend_text);
  return std::visit(
      [&](const auto& b) {
        auto A = parse_element_list(b, o.coeffs_text);
        Report report("monomials", {{"backend", b.descriptor()},
                                    {"A", o.coeffs_text},
                                    {"n", o.degree},
                                    {"seed", o.common.seed}});
        for (const auto& m : monomials_over(b, A, o.degree))
          report.add_checked_item({{"monomial", format_monomial(m)}}, true);
        return finish(report, o.common);
      },
      backend);
}

// ------------------------------------------------------------ separate ---

struct SeparateOpts {
  FamilyOpts fam;
  std::string exclude_text;
  std::uint64_t budget = 10000;
  CommonOpts common;
};

int run_separate(const SeparateOpts& o) {
  AnyBackend backend = resolve_backend(o.fam);
  return std::visit(
      [&](const auto& b) {
        auto fam = resolve_family(b, o.fam);
        auto exclude = parse_element_list(b, o.exclude_text);
        Report report("separate", {{"backend", b.descriptor()},
                                   {"family", o.fam.family_path},
                                   {"family_size", fam.monomials.size()},
                                   {"exclude", o.exclude_text},
                                   {"budget", o.budget},
                                   {"seed", o.common.seed}});
        auto x = separation_witness(fam, exclude, o.budget);
        bool ok = !b.is_identity(x) && intersection_member(fam, x);
        report.add_checked_item({{"witness", b.format_element(x)}}, ok);
        return finish(report, o.common);
      },
      backend);
}

// ---------------------------------------------------------- ex1-verify ---

struct SdVerifyOpts {
  std::uint64_t pairs = 64;
  std::uint64_t xs = 500;
  CommonOpts common;
};

int run_sd_verify(const SdVerifyOpts& o) {
  SeparatingPairs pairs = build_separating_pairs(o.pairs);
  SdWitnessReport rep = verify_sd_witnesses(pairs, o.xs);
  TreeSdGroup sd;
  TreeWordGroup ft;
  Report report("ex1-verify",
                {{"backend", sd.descriptor()}, {"pairs", o.pairs}, {"xs", o.xs}, {"seed", o.common.seed}});
  for (const auto& item : rep.items) {
    json fields{{"x", sd.format_element(item.x)},
                {"a", ft.format_element(item.a)},
                {"b", ft.format_element(item.b)}};
    if (!item.ok) {  // failure records carry both sides of the equation
      fields["lhs"] = sd.format_element(item.conjugate);
      fields["rhs"] = sd.format_element(sd.embed_word(item.b));
    }
    report.add_checked_item(std::move(fields), item.ok);
  }
  // pass/fail counts track the verified elements; the disjointness check
  // only weighs in when it breaks
  report.add_item({{"check", "prefixes-disjoint"}, {"ok", rep.prefixes_disjoint}});
  if (!rep.prefixes_disjoint) report.count_fail();
  return finish(report, o.common);
}

// ------------------------------------------------------------------ t2 ---

struct T2Opts {
  FamilyOpts fam;
  std::uint64_t samples = 200;
  CommonOpts common;
};

json subalphabet_json(const SubAlphabet& sub) {
  json j;
  j["excluded"] = sub.excluded;
  if (sub.universe_rank)
    j["rank"] = *sub.universe_rank;
  else
    j["rank"] = "w";
  return j;
}

int run_t2(const T2Opts& o) {
  AnyBackend backend = resolve_backend(o.fam);
  return std::visit(
      [&](const auto& b) -> int {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::same_as<B, TreeSdGroup>) {
          throw parse_error("t2 supports abelian and free backends only");
        } else {
          auto fam = resolve_family(b, o.fam);
          Report report("t2", {{"backend", b.descriptor()},
                               {"family", o.fam.family_path},
                               {"family_size", fam.monomials.size()},
                               {"samples", o.samples},
                               {"seed", o.common.seed}});
          SubAlphabet sub;
          if constexpr (std::same_as<B, AbelianGroup>)
            sub = abelian_cozero_subalphabet(fam);
          else
            sub = free_cozero_subalphabet(fam);
          json sj = subalphabet_json(sub);
          sj["kind"] = "subalphabet";
          report.add_checked_item(std::move(sj), true);
          Rng rng(o.common.seed);
          for (std::uint64_t i = 0; i < o.samples; ++i) {
            typename B::element_type h;
            if constexpr (std::same_as<B, AbelianGroup>)
              h = random_subalphabet_abelian(rng, b, sub, 3, 3, 8);
            else
              h = random_subalphabet_word(rng, sub, 4, 8);
            json fields{{"h", b.format_element(h)}};
            bool ok = true;
            for (const auto& m : fam.monomials) {
              if (!cozero_contains(m, h)) {
                ok = false;
                fields["violated"] = format_monomial(m);
                fields["lhs"] = b.format_element(eval_monomial(m, h));
                fields["rhs"] = "1";
                break;
              }
            }
            report.add_checked_item(std::move(fields), ok);
          }
          return finish(report, o.common);
        }
      },
      backend);
}

// ----------------------------------------------------------- p1-member ---

struct P1Opts {
  FamilyOpts fam;
  std::string alist_text;
  std::string y_text;
  std::uint64_t count = 0;
  std::uint64_t budget = 100000;
  CommonOpts common;
};

int run_p1(const P1Opts& o) {
  AnyBackend backend = resolve_backend(o.fam);
  const FreeGroup* free_b = std::get_if<FreeGroup>(&backend);
  if (!free_b) throw parse_error("p1-member supports free backends only");
  const FreeGroup& b = *free_b;
  auto fam = resolve_family(b, o.fam);
  auto a_list = parse_element_list(b, o.alist_text);
  AvoidanceContext ctx = build_avoidance_context(b, a_list, fam);

  Report report("p1-member", {{"backend", b.descriptor()},
                              {"alist", o.alist_text},
                              {"family", o.fam.family_path},
                              {"family_size", fam.monomials.size()},
                              {"y", o.y_text},
                              {"count", o.count},
                              {"budget", o.budget},
                              {"seed", o.common.seed}});
  json chain = json::array();
  for (const auto& sub : ctx.chain)
    chain.push_back(sub.cyclic_root ? "<" + b.format_element(*sub.cyclic_root) + ">" : "whole");
  json cosets = json::array();
  for (const auto& c : ctx.cosets) {
    json cj;
    cj["a"] = b.format_element(ctx.a_list[c.a_index]);
    cj["d"] = b.format_element(c.d);
    cj["representative"] = c.representative ? b.format_element(*c.representative) : "none";
    cosets.push_back(std::move(cj));
  }
  report.add_checked_item({{"kind", "context"},
                           {"chain", chain},
                           {"collapsed_steps", ctx.collapsed_steps},
                           {"cosets", cosets}},
                          true);

  auto check_member = [&](const Word& y) {
    bool member = avoidance_member(ctx, y);
    json fields{{"y", b.format_element(y)}, {"member", member}};
    bool evals_ok = true;
    for (const auto& m : fam.monomials) {
      if (!cozero_contains(m, y)) {
        evals_ok = false;
        fields["violated"] = format_monomial(m);
        fields["lhs"] = b.format_element(eval_monomial(m, y));
        fields["rhs"] = "1";
        break;
      }
    }
    fields["evals_nonvanishing"] = evals_ok;
    bool symmetric = member == avoidance_member(ctx, inv(y));
    // membership must force every constraint away from the identity
    bool ok = symmetric && (!member || evals_ok);
    report.add_checked_item(std::move(fields), ok);
  };

  if (!o.y_text.empty()) check_member(b.parse_element(o.y_text));
  if (o.count > 0)
    for (const Word& y : avoidance_members(ctx, o.count, o.budget)) check_member(y);
  return finish(report, o.common);
}

// --------------------------------------------------------------- avoid ---

struct AvoidOpts {
  std::string backend_text;
  std::string a_text, b_text;
  std::string a_file, b_file;
  std::uint64_t count = 1;
  std::uint64_t budget = 100000;
  CommonOpts common;
};

int run_avoid(const AvoidOpts& o) {
  AnyBackend backend = parse_backend(o.backend_text);
  return std::visit(
      [&](const auto& b) {
        auto A = parse_element_list(b, o.a_text);
        auto B = parse_element_list(b, o.b_text);
        if (!o.a_file.empty()) {
          auto more = load_set_file(b, o.a_file);
          A.insert(A.end(), more.begin(), more.end());
        }
        if (!o.b_file.empty()) {
          auto more = load_set_file(b, o.b_file);
          B.insert(B.end(), more.begin(), more.end());
        }
        Report report("avoid", {{"backend", b.descriptor()},
                                {"A", o.a_text},
                                {"B", o.b_text},
                                {"A_file", o.a_file},
                                {"B_file", o.b_file},
                                {"A_size", A.size()},
                                {"B_size", B.size()},
                                {"count", o.count},
                                {"budget", o.budget},
                                {"seed", o.common.seed}});
        auto xs = find_avoiders(b, A, B, o.count, o.budget);
        for (const auto& x : xs) {
          bool ok = true;
          auto xi = b.inv(x);
          for (const auto& a : A) {
            auto conj = b.mul(b.mul(x, a), xi);
            for (const auto& bb : B) ok = ok && !b.eq(conj, bb);
          }
          report.add_checked_item({{"x", b.format_element(x)}}, ok);
        }
        return finish(report, o.common);
      },
      backend);
}

// ------------------------------------------------------- symmetric-set ---

struct SymmetricOpts {
  std::string backend_text;
  std::vector<std::string> set_texts;
  std::vector<std::string> set_files;
  std::uint64_t count = 6;
  std::uint64_t budget = 10000;
  CommonOpts common;
};

int run_symmetric(const SymmetricOpts& o) {
  AnyBackend backend = parse_backend(o.backend_text);
  return std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        std::vector<std::vector<typename B::element_type>> sets;
        for (const auto& t : o.set_texts) sets.push_back(parse_element_list(b, t));
        for (const auto& f : o.set_files) sets.push_back(load_set_file(b, f));
        Report report("symmetric-set", {{"backend", b.descriptor()},
                                        {"sets", json(o.set_texts)},
                                        {"set_files", json(o.set_files)},
                                        {"set_count", sets.size()},
                                        {"count", o.count},
                                        {"budget", o.budget},
                                        {"seed", o.common.seed}});
        auto st = build_symmetric_set(b, sets, o.count, o.budget);
        for (const auto& x : st.points)
          report.add_checked_item({{"x", b.format_element(x)}}, true);
        auto failure = verify_symmetric_set(b, sets, st);
        json final_item{{"check", "product-avoids-identity"},
                        {"path", st.fresh_path ? "fresh-generator" : "generic"}};
        if (failure) final_item["offending_product"] = failure->product;
        report.add_checked_item(std::move(final_item), !failure.has_value());
        return finish(report, o.common);
      },
      backend);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic computation over groups: monomial evaluation, co-zero "
               "witnesses, and the constructive searches built on them"};
  app.require_subcommand(1);

  EvalOpts eval_opts, cozero_opts;
  cozero_opts.cozero = true;
  MonomialsOpts monomials_opts;
  SeparateOpts separate_opts;
  SdVerifyOpts sd_opts, sd_opts_alias;
  T2Opts t2_opts;
  P1Opts p1_opts;
  AvoidOpts avoid_opts;
  SymmetricOpts symmetric_opts;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a monomial at a group element");
  add_family(eval_cmd, eval_opts.fam);
  eval_cmd->add_option("--at", eval_opts.at_text, "Element substituted for the variable")->required();
  add_common(eval_cmd, eval_opts.common);

  auto* cozero_cmd = app.add_subcommand("cozero", "Test membership in a monomial's co-zero set");
  add_family(cozero_cmd, cozero_opts.fam);
  cozero_cmd->add_option("--at", cozero_opts.at_text, "Element to test")->required();
  add_common(cozero_cmd, cozero_opts.common);

  auto* mono_cmd = app.add_subcommand("monomials", "List the monomials of degree <= n over a coefficient set");
  mono_cmd->add_option("--backend", monomials_opts.backend_text, "Backend descriptor (default free:2)");
  mono_cmd->add_option("--A", monomials_opts.coeffs_text, "Comma-separated coefficient elements")->required();
  mono_cmd->add_option("--n", monomials_opts.degree, "Degree bound")->required();
  add_common(mono_cmd, monomials_opts.common);

  auto* sep_cmd = app.add_subcommand("separate", "Find a nontrivial common co-zero point of a family");
  add_family(sep_cmd, separate_opts.fam);
  sep_cmd->add_option("--exclude", separate_opts.exclude_text, "Comma-separated elements to avoid");
  sep_cmd->add_option("--budget", separate_opts.budget, "Enumeration budget (default 10000)")
      ->check(CLI::PositiveNumber);
  add_common(sep_cmd, separate_opts.common);

  auto* sd_cmd = app.add_subcommand(
      "ex1-verify", "Build separating pairs over the tree group and verify conjugation witnesses");
  sd_cmd->add_option("--pairs", sd_opts.pairs, "Pairs to construct up front (default 64)")
      ->check(CLI::PositiveNumber);
  sd_cmd->add_option("--xs", sd_opts.xs, "Elements of the semidirect product to verify (default 500)")
      ->check(CLI::PositiveNumber);
  add_common(sd_cmd, sd_opts.common);

  // spelled as two words it is the same command
  auto* sd_alias_parent = app.add_subcommand("ex1", "Alias for ex1-verify");
  auto* sd_alias = sd_alias_parent->add_subcommand("verify", "Alias for ex1-verify");
  sd_alias->add_option("--pairs", sd_opts_alias.pairs, "Pairs to construct up front (default 64)")
      ->check(CLI::PositiveNumber);
  sd_alias->add_option("--xs", sd_opts_alias.xs, "Elements to verify (default 500)")
      ->check(CLI::PositiveNumber);
  add_common(sd_alias, sd_opts_alias.common);
  sd_alias_parent->require_subcommand(1);

  auto* t2_cmd = app.add_subcommand(
      "t2", "Extract a subgroup inside the intersection of a family's co-zero sets, then sample it");
  add_family(t2_cmd, t2_opts.fam);
  t2_cmd->add_option("--samples", t2_opts.samples, "Sampled subgroup elements to verify (default 200)")
      ->check(CLI::PositiveNumber);
  add_common(t2_cmd, t2_opts.common);

  auto* p1_cmd = app.add_subcommand(
      "p1-member", "Build the conjugation-avoidance set for a constraint family and test membership");
  add_family(p1_cmd, p1_opts.fam);
  p1_cmd->add_option("--alist", p1_opts.alist_text, "Comma-separated conjugated elements")->required();
  p1_cmd->add_option("--y", p1_opts.y_text, "Element to test");
  p1_cmd->add_option("--count", p1_opts.count, "Emit this many members of the set");
  p1_cmd->add_option("--budget", p1_opts.budget, "Member scan budget (default 100000)")
      ->check(CLI::PositiveNumber);
  add_common(p1_cmd, p1_opts.common);

  auto* avoid_cmd = app.add_subcommand(
      "avoid", "Find elements whose conjugation action keeps A away from B");
  avoid_cmd->add_option("--backend", avoid_opts.backend_text, "Backend descriptor")->required();
  avoid_cmd->add_option("--A", avoid_opts.a_text, "Comma-separated elements of A");
  avoid_cmd->add_option("--B", avoid_opts.b_text, "Comma-separated elements of B");
  avoid_cmd->add_option("--A-file", avoid_opts.a_file, "Set file for A (one literal per line)");
  avoid_cmd->add_option("--B-file", avoid_opts.b_file, "Set file for B");
  avoid_cmd->add_option("--count", avoid_opts.count, "How many avoiders to find (default 1)")
      ->check(CLI::PositiveNumber);
  avoid_cmd->add_option("--budget", avoid_opts.budget, "Enumeration budget (default 100000)")
      ->check(CLI::PositiveNumber);
  add_common(avoid_cmd, avoid_opts.common);

  auto* sym_cmd = app.add_subcommand(
      "symmetric-set", "Build a symmetric family X with 1 not in A0 X A1 X ... X An");
  sym_cmd->add_option("--backend", symmetric_opts.backend_text, "Backend descriptor")->required();
  sym_cmd->add_option("--set", symmetric_opts.set_texts,
                      "Comma-separated elements of the next coefficient set (repeat per set)");
  sym_cmd->add_option("--set-file", symmetric_opts.set_files, "Set file for the next coefficient set");
  sym_cmd->add_option("--count", symmetric_opts.count, "Points to construct (default 6)")
      ->check(CLI::PositiveNumber);
  sym_cmd->add_option("--budget", symmetric_opts.budget, "Witness budget per step (default 10000)")
      ->check(CLI::PositiveNumber);
  add_common(sym_cmd, symmetric_opts.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  auto started = std::chrono::steady_clock::now();
  int code = 3;
  try {
    if (eval_cmd->parsed()) code = run_eval(eval_opts);
    if (cozero_cmd->parsed()) code = run_eval(cozero_opts);
    if (mono_cmd->parsed()) code = run_monomials(monomials_opts);
    if (sep_cmd->parsed()) code = run_separate(separate_opts);
    if (sd_cmd->parsed()) code = run_sd_verify(sd_opts);
    if (sd_alias_parent->parsed()) code = run_sd_verify(sd_opts_alias);
    if (t2_cmd->parsed()) code = run_t2(t2_opts);
    if (p1_cmd->parsed()) code = run_p1(p1_opts);
    if (avoid_cmd->parsed()) code = run_avoid(avoid_opts);
    if (sym_cmd->parsed()) code = run_symmetric(symmetric_opts);
  } catch (const budget_exhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // parse, mismatch, precondition
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "wall_ms=" << elapsed.count() << "\n";
  return code;
}
