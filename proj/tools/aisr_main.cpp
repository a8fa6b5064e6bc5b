#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aisr/catalog.hpp"
#include "aisr/derivation.hpp"
#include "aisr/enumerate.hpp"
#include "aisr/oracles.hpp"
#include "aisr/satisfaction.hpp"
#include "aisr/suite.hpp"

namespace {

// Exit codes: 0 success, 1 failed verification, 2 usage or data errors.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

aisr::Registry load_or_builtin(const std::string& catalog_path) {
  if (!catalog_path.empty()) return aisr::load_registry(catalog_path);
  if (const char* env = std::getenv("AISR_CATALOG"); env && *env)
    return aisr::load_registry(env);
  return aisr::Registry::builtin();
}

void print_table(const char* label, const aisr::CayleyTable& t) {
  std::cout << label << ":\n";
  for (const auto& row : t.rows()) {
    std::cout << " ";
    for (int v : row) std::cout << " " << v;
    std::cout << "\n";
  }
}

int cmd_validate(const std::string& catalog_path) {
  aisr::Registry reg = load_or_builtin(catalog_path);
  int bad = 0;
  for (const auto& entry : reg.entries()) {
    aisr::ValidationReport r = aisr::validate_axioms(entry.semiring);
    if (r.ok) {
      std::cout << "ok   " << entry.semiring.name << "\n";
    } else {
      ++bad;
      std::cout << "FAIL " << entry.semiring.name << ": " << r.message() << "\n";
    }
  }
  std::cout << reg.entries().size() - bad << " of " << reg.entries().size()
            << " entries satisfy every axiom\n";
  return bad == 0 ? kOk : kVerificationFailed;
}

int cmd_show(const std::string& catalog_path, const std::string& name) {
  aisr::Registry reg = load_or_builtin(catalog_path);
  const aisr::Semiring& s = reg.get(name);
  std::string provenance;
  for (const auto& entry : reg.entries())
    if (entry.semiring.name == name) provenance = entry.provenance;
  std::cout << name << " (order " << s.order() << ")\n";
  std::cout << "provenance: " << provenance << "\n";
  print_table("add", s.add);
  print_table("mul", s.mul);
  aisr::ValidationReport r = aisr::validate_axioms(s);
  std::cout << "axioms: " << (r.ok ? "ok" : r.message()) << "\n";
  return r.ok ? kOk : kVerificationFailed;
}

int cmd_check(const std::string& catalog_path, const std::string& name,
              const std::string& identity_text, const std::string& optional_csv) {
  aisr::Registry reg = load_or_builtin(catalog_path);
  const aisr::Semiring& s = reg.get(name);
  std::vector<aisr::Identity> instances;
  if (optional_csv.empty()) {
    instances.push_back(aisr::parse_identity(identity_text));
  } else {
    std::vector<aisr::Var> optional;
    std::stringstream ss(optional_csv);
    std::string var;
    while (std::getline(ss, var, ',')) optional.push_back(var);
    instances = aisr::expand_scheme(aisr::parse_scheme(identity_text, optional));
  }
  int failures = 0;
  for (const auto& id : instances) {
    aisr::Verdict v = aisr::satisfies(s, id);
    if (v.holds) {
      std::cout << aisr::format_identity(id) << ": holds\n";
    } else {
      ++failures;
      std::cout << aisr::format_identity(id) << ": fails ("
                << v.counterexample->to_string() << ")\n";
    }
  }
  if (instances.size() > 1)
    std::cout << instances.size() - failures << " of " << instances.size()
              << " instances hold in " << name << "\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

int cmd_oracle(const std::string& lemma_text, const std::string& identity_text) {
  auto lemma = aisr::lemma_from_name(lemma_text);
  if (!lemma) throw aisr::DataError("unknown oracle: " + lemma_text);
  aisr::Identity id = aisr::parse_identity(identity_text);
  std::cout << (aisr::lemma_is_exact(*lemma) ? "exact oracle " : "necessity oracle ")
            << aisr::lemma_name(*lemma) << "\n";
  for (const auto& [u, q] : aisr::inclusion_decomposition(id)) {
    aisr::OracleVerdict v = aisr::inclusion_oracle(*lemma, u, q);
    const char* word = v.result == aisr::OracleResult::Holds    ? "holds"
                       : v.result == aisr::OracleResult::Fails  ? "fails"
                                                                : "passes";
    std::cout << "  " << aisr::format_term(u) << " >= " << aisr::format_word(q) << ": " << word
              << " [" << v.clause << "]\n";
  }
  aisr::OracleVerdict overall = aisr::identity_oracle(*lemma, id);
  switch (overall.result) {
    case aisr::OracleResult::Holds:
      std::cout << "identity holds [" << overall.clause << "]\n";
      return kOk;
    case aisr::OracleResult::Fails:
      std::cout << "identity fails [" << overall.clause << "]\n";
      return kVerificationFailed;
    case aisr::OracleResult::NecessaryPassed:
      std::cout << "not refuted [" << overall.clause << "]\n";
      return kOk;
  }
  return kUsageError;
}

int cmd_enumerate(int order, int semilattice, bool figure) {
  if (figure) {
    auto classes = aisr::enumerate_ai_semirings(aisr::figure_add());
    std::cout << "shared order-4 additive table: " << classes.size() << " classes\n";
    aisr::Registry reg = aisr::Registry::builtin();
    aisr::MatchReport mr = aisr::match_catalog(classes, aisr::figure_add(), reg);
    std::cout << mr.matches.size() << " classes matched to catalog names";
    if (mr.perfect())
      std::cout << " (perfect 1:1 match)\n";
    else
      std::cout << "; " << mr.unmatched_classes.size() << " classes and "
                << mr.unmatched_names.size() << " names unmatched\n";
    return mr.perfect() ? kOk : kVerificationFailed;
  }
  auto lattices = aisr::enumerate_semilattices(order);
  std::cout << "order " << order << ": " << lattices.size() << " semilattices\n";
  std::size_t total = 0;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    if (semilattice > 0 && static_cast<std::size_t>(semilattice) != i + 1) continue;
    auto classes = aisr::enumerate_ai_semirings(lattices[i]);
    total += classes.size();
    std::cout << "  semilattice " << i + 1 << ": " << classes.size() << " classes\n";
  }
  if (semilattice <= 0) std::cout << "total: " << total << " classes\n";
  return kOk;
}

int cmd_derive(const std::string& catalog_path, const std::string& chains_path) {
  aisr::Registry reg = load_or_builtin(catalog_path);
  std::vector<aisr::ProofChain> chains =
      chains_path.empty() ? aisr::builtin_proof_corpus() : aisr::load_chains(chains_path);
  int failures = 0;
  for (const auto& chain : chains) {
    aisr::ChainReport r = aisr::check_chain(chain, reg);
    if (r.ok) {
      std::cout << "PASS " << chain.name << " (" << r.steps.size() << " steps)\n";
    } else {
      ++failures;
      std::cout << "FAIL " << chain.name << ": " << r.detail << "\n";
    }
  }
  std::cout << chains.size() - failures << " of " << chains.size() << " chains verified\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

int cmd_verify(const std::string& catalog_path, const aisr::SuiteOptions& options, bool json) {
  aisr::Registry reg = load_or_builtin(catalog_path);
  aisr::SuiteReport report = aisr::verify_claims(reg, options);
  std::cout << (json ? report.to_json() + "\n" : report.to_text());
  return report.ok ? kOk : kVerificationFailed;
}

int cmd_export(const std::string& out_path) {
  aisr::save_registry(aisr::Registry::builtin(), out_path);
  std::cout << "wrote " << aisr::Registry::builtin().entries().size() << " entries to "
            << out_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for finite additively idempotent semirings"};
  app.require_subcommand(1);

  std::string catalog_path;
  app.add_option("--catalog", catalog_path,
                 "Catalog JSON file (default: $AISR_CATALOG or the builtin catalog)");

  auto* validate = app.add_subcommand("validate", "Check every catalog entry against the axioms");

  std::string show_name;
  auto* show = app.add_subcommand("show", "Print a catalog entry's tables");
  show->add_option("name", show_name, "Entry name, e.g. S_(4,277)")->required();

  std::string check_semiring, check_identity, check_optional;
  auto* check = app.add_subcommand("check", "Decide whether an identity holds in an algebra");
  check->add_option("--semiring", check_semiring, "Algebra name")->required();
  check->add_option("--identity", check_identity, "Identity, e.g. \"xy = yx\"")->required();
  check->add_option("--optional", check_optional,
                    "Comma-separated variables that may be uniformly deleted");

  std::string oracle_lemma, oracle_identity;
  auto* oracle = app.add_subcommand("oracle", "Run a syntactic oracle on an identity");
  oracle->add_option("--lemma", oracle_lemma, "Oracle name: s2, s4, s10, s44, ... s60")
      ->required();
  oracle->add_option("--identity", oracle_identity, "Identity to decompose and test")->required();

  int enum_order = 0, enum_semilattice = 0;
  bool enum_figure = false;
  auto* enumerate = app.add_subcommand("enumerate", "Count isomorphism classes of semirings");
  enumerate->add_option("--order", enum_order, "Carrier size (2..4)")
      ->check(CLI::Range(2, 4));
  enumerate->add_option("--semilattice", enum_semilattice,
                        "Restrict to the k-th semilattice of that order (1-based)");
  enumerate->add_flag("--figure", enum_figure,
                      "Enumerate over the shared order-4 additive table and match the catalog");

  std::string chains_path;
  auto* derive = app.add_subcommand("derive-catalog", "Verify the bundled derivation chains");
  derive->add_option("--chains", chains_path, "Chain JSON file (default: bundled corpus)");

  aisr::SuiteOptions suite_options;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify-paper", "Run the full battery of checkable claims");
  verify->add_option("--only", suite_options.only, "Restrict to one claim group");
  verify->add_option("--seed", suite_options.seed, "Seed for the randomized spot checks");
  verify->add_option("--jobs", suite_options.jobs, "Worker threads (default: all cores)");
  verify->add_flag("--full-866", suite_options.full_enumeration,
                   "Also count classes over every order-4 semilattice");
  verify->add_flag("--json", verify_json, "Emit the report as JSON");

  std::string export_path;
  auto* exporter = app.add_subcommand("export", "Write the builtin catalog as JSON");
  exporter->add_option("--out", export_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(catalog_path);
    if (show->parsed()) return cmd_show(catalog_path, show_name);
    if (check->parsed())
      return cmd_check(catalog_path, check_semiring, check_identity, check_optional);
    if (oracle->parsed()) return cmd_oracle(oracle_lemma, oracle_identity);
    if (enumerate->parsed()) {
      if (!enum_figure && enum_order == 0)
        throw aisr::DataError("enumerate needs --order or --figure");
      return cmd_enumerate(enum_order, enum_semilattice, enum_figure);
    }
    if (derive->parsed()) return cmd_derive(catalog_path, chains_path);
    if (verify->parsed()) return cmd_verify(catalog_path, suite_options, verify_json);
    if (exporter->parsed()) return cmd_export(export_path);
  } catch (const aisr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const aisr::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const aisr::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
