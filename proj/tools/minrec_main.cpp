#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "minrec/classes.hpp"
#include "minrec/equalizing.hpp"
#include "minrec/fn.hpp"
#include "minrec/gallery.hpp"
#include "minrec/json_io.hpp"
#include "minrec/recon.hpp"
#include "minrec/suites.hpp"
#include "minrec/text_io.hpp"

namespace {

using minrec::Json;

struct GlobalFlags {
  bool json = false;
  std::uint64_t seed = 12345;
  std::uint64_t budget = 1ull << 28;
  int threads = 1;
};

void print_suite_report(const minrec::SuiteReport& report, bool json) {
  if (json) {
    std::cout << minrec::to_json(report).dump(2) << '\n';
    return;
  }
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
    if (!check.details.empty()) std::cout << "  (" << check.details << ")";
    std::cout << '\n';
  }
  std::cout << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "  ("
            << report.elapsed_seconds << " s)\n";
}

int cmd_deck(const std::string& path, const GlobalFlags& flags) {
  minrec::FiniteFunction f = minrec::load_function_file(path);
  minrec::Deck d = minrec::deck(f);
  bool unique = d.distinct_cards() == 1;
  if (flags.json) {
    Json out = minrec::to_json(d);
    out["unique_identification_minor"] = unique;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "deck of " << path << ": " << d.distinct_cards() << " distinct card(s), "
            << d.total_multiplicity() << " total\n";
  for (const auto& [table, multiplicity] : d.cards) {
    std::cout << "  x" << multiplicity << " :";
    for (std::uint8_t v : table) std::cout << ' ' << d.labels[v];
    std::cout << '\n';
  }
  std::cout << "unique identification minor: " << (unique ? "yes" : "no") << '\n';
  return 0;
}

int cmd_classify(const std::string& path, const GlobalFlags& flags) {
  minrec::FiniteFunction f = minrec::load_function_file(path);
  const std::vector<std::pair<std::string, minrec::ClassKind>> kinds = {
      {"supp", minrec::ClassKind::supp},
      {"oddsupp", minrec::ClassKind::oddsupp},
      {"totally-symmetric", minrec::ClassKind::msupp},
      {"ofo", minrec::ClassKind::ofo},
      {"weakly-ofo", minrec::ClassKind::weakly_ofo},
      {"pr-supp", minrec::ClassKind::pr_supp}};
  Json out;
  for (const auto& [name, kind] : kinds) {
    std::string verdict;
    std::optional<minrec::ClassWitness> witness;
    try {
      witness = minrec::recognize(f, kind);
      verdict = witness ? "accepted" : "rejected";
    } catch (const std::invalid_argument& e) {
      verdict = std::string("bound exceeded: ") + e.what();
    }
    if (flags.json) {
      Json entry;
      entry["verdict"] = verdict;
      if (witness) entry["witness"] = minrec::to_json(*witness);
      out[name] = entry;
    } else {
      std::cout << name << ": " << verdict << '\n';
    }
  }
  if (flags.json) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_equiv(const std::string& path1, const std::string& path2, const GlobalFlags& flags) {
  minrec::FiniteFunction f = minrec::load_function_file(path1);
  minrec::FiniteFunction g = minrec::load_function_file(path2);
  bool equivalent = minrec::is_equivalent(f, g);
  bool same_deck = minrec::decks_equal(f, g);
  if (flags.json) {
    Json out;
    out["equivalent"] = equivalent;
    out["decks_equal"] = same_deck;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "equivalent: " << (equivalent ? "true" : "false") << '\n';
    std::cout << "decks equal (reconstructions of each other): "
              << (same_deck ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_minor(const std::string& path, int i, int j) {
  minrec::FiniteFunction f = minrec::load_function_file(path);
  minrec::FiniteFunction minor =
      minrec::identification_minor(f, minrec::Couple::from_one_based(i, j));
  std::cout << minrec::format_function(minor);
  return 0;
}

int cmd_equalizing(int n, int k, bool oracle, const GlobalFlags& flags) {
  bool closed = minrec::is_equalizing_couple(n, k);
  Json out;
  out["n"] = n;
  out["k"] = k;
  out["verdict"] = closed;
  bool agree = true;
  if (oracle) {
    bool brute = minrec::is_equalizing_couple_oracle(n, k, flags.budget, flags.threads);
    agree = brute == closed;
    out["oracle"] = brute;
    out["agreement"] = agree;
  }
  if (flags.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "(" << n << "," << k << ") equalizing: " << (closed ? "true" : "false")
              << '\n';
    if (oracle)
      std::cout << "oracle: " << (out["oracle"].get<bool>() ? "true" : "false")
                << ", agreement: " << (agree ? "yes" : "NO") << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_k_equalizing(const std::string& sigma_text, int n, int k, bool oracle,
                     const GlobalFlags& flags) {
  minrec::Permutation sigma = minrec::parse_permutation(sigma_text, n);
  minrec::EqualizingAnalysis analysis = minrec::analyze_k_equalizing(sigma, k);
  Json out = minrec::to_json(analysis);
  bool agree = true;
  if (oracle) {
    bool brute = minrec::is_k_equalizing_oracle(sigma, k, flags.budget);
    agree = brute == analysis.verdict;
    out["oracle"] = brute;
    out["agreement"] = agree;
  }
  if (flags.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "sigma = " << sigma.oneline_text() << ", k = " << k
              << ": k-equalizing = " << (analysis.verdict ? "true" : "false") << "  (|U|="
              << analysis.u.size() << ", |Delta|=" << analysis.delta.size()
              << ", |G|=" << analysis.group.size() << ")\n";
    if (!analysis.verdict)
      std::cout << "parity separator applies: "
                << (analysis.parity_separator ? "yes" : "no") << '\n';
    if (oracle)
      std::cout << "oracle: " << (out["oracle"].get<bool>() ? "true" : "false")
                << ", agreement: " << (agree ? "yes" : "NO") << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_gallery(const std::string& name, int k, const GlobalFlags& flags) {
  minrec::GalleryResult result = minrec::run_gallery(name, k);
  if (flags.json) {
    Json out;
    out["name"] = name;
    out["k"] = k;
    Json functions = Json::array();
    for (const auto& [tag, f] : result.functions) {
      Json entry;
      entry["tag"] = tag;
      entry["text"] = minrec::format_function(f);
      functions.push_back(entry);
    }
    out["functions"] = functions;
    out["verification"] = minrec::to_json(result.report);
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& [tag, f] : result.functions) {
      std::cout << "# " << tag << '\n' << minrec::format_function(f) << '\n';
    }
    print_suite_report(result.report, false);
  }
  return result.report.passed() ? 0 : 1;
}

int cmd_recon_sweep(int k, int n, int labels, const std::string& report_path,
                    const GlobalFlags& flags) {
  minrec::SweepReport report =
      minrec::recon_sweep(k, n, labels, flags.budget, flags.threads);
  Json out = minrec::to_json(report);
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) throw std::invalid_argument("cannot write report: " + report_path);
    file << out.dump(2) << '\n';
  }
  if (flags.json || report_path.empty()) std::cout << out.dump(2) << '\n';
  if (!flags.json && !report_path.empty())
    std::cout << "sweep (" << k << "," << n << "," << labels << "): " << report.bucket_count
              << " buckets, " << report.class_count << " classes, "
              << report.nonreconstructible_class_count
              << " nonreconstructible classes; report written to " << report_path << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, const GlobalFlags& flags) {
  minrec::SuiteOptions options;
  options.seed = flags.seed;
  options.budget = flags.budget;
  options.threads = flags.threads;
  minrec::SuiteReport report = minrec::run_suite(suite, options);
  print_suite_report(report, flags.json);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"identification minors, decks, and reconstruction experiments"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "machine-readable output")->configurable(false);
  app.add_option("--seed", flags.seed, "seed for randomized property suites");
  app.add_option("--budget", flags.budget, "budget for exhaustive oracles");
  app.add_option("--threads", flags.threads, "worker threads for sweeps");
  app.fallthrough();

  std::string file, file2, sigma_text, name = "a_plus_1", report_path, suite = "all";
  int n = 0, k = 0, labels = 2, couple_i = 0, couple_j = 0;
  bool oracle = false;

  auto* deck_cmd = app.add_subcommand("deck", "deck summary of a function file");
  deck_cmd->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "class memberships with witnesses");
  classify_cmd->add_option("file", file)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "equivalence and deck equality of two functions");
  equiv_cmd->add_option("file1", file)->required();
  equiv_cmd->add_option("file2", file2)->required();

  auto* minor_cmd = app.add_subcommand("minor", "identification minor at a couple");
  minor_cmd->add_option("file", file)->required();
  minor_cmd->add_option("-i", couple_i, "first position (1-based)")->required();
  minor_cmd->add_option("-j", couple_j, "second position (1-based)")->required();

  auto* eq_cmd = app.add_subcommand("equalizing", "equalizing-couple verdict for (n,k)");
  eq_cmd->add_option("--n", n)->required();
  eq_cmd->add_option("--k", k)->required();
  eq_cmd->add_flag("--oracle", oracle, "also run the brute-force oracle");

  auto* keq_cmd = app.add_subcommand("k-equalizing", "k-equalizing analysis of a permutation");
  keq_cmd->add_option("--sigma", sigma_text, "one-line (a1,a2,...) or cycles (c1 c2 ...)")
      ->required();
  keq_cmd->add_option("--n", n, "degree of sigma")->required();
  keq_cmd->add_option("--k", k)->required();
  keq_cmd->add_flag("--oracle", oracle, "also run the brute-force oracle");

  auto* gallery_cmd = app.add_subcommand("gallery", "named constructions with verification");
  gallery_cmd->add_option("--name", name, "a_plus_1 | cyclic | theta | symmofo | boolean_quadratic");
  gallery_cmd->add_option("--k", k);

  auto* recon_cmd = app.add_subcommand("recon", "exhaustive reconstruction experiments");
  auto* sweep_cmd = recon_cmd->add_subcommand("sweep", "deck-index sweep over all functions");
  sweep_cmd->add_option("--k", k)->required();
  sweep_cmd->add_option("--n", n)->required();
  sweep_cmd->add_option("--labels", labels, "codomain size");
  sweep_cmd->add_option("--report", report_path, "write the JSON report here");

  auto* verify_cmd = app.add_subcommand("verify", "run a named acceptance suite");
  verify_cmd->add_option("suite", suite, "suite id or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*deck_cmd) return cmd_deck(file, flags);
    if (*classify_cmd) return cmd_classify(file, flags);
    if (*equiv_cmd) return cmd_equiv(file, file2, flags);
    if (*minor_cmd) return cmd_minor(file, couple_i, couple_j);
    if (*eq_cmd) return cmd_equalizing(n, k, oracle, flags);
    if (*keq_cmd) return cmd_k_equalizing(sigma_text, n, k, oracle, flags);
    if (*gallery_cmd) {
      if (k == 0) k = (name == "cyclic" || name == "theta") ? 3 : 2;
      return cmd_gallery(name, k, flags);
    }
    if (*sweep_cmd) return cmd_recon_sweep(k, n, labels, report_path, flags);
    if (*verify_cmd) return cmd_verify(suite, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
