#include <chrono>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "modlex/errors.hpp"

namespace {

using modlex::cli::Json;
using modlex::cli::Options;
using modlex::cli::Outcome;

enum ExitCode { kOk = 0, kFalse = 1, kUsage = 2, kPrecondition = 3, kBudget = 4 };

struct Common {
  bool pretty = false;
  std::int64_t time_budget_ms = -1;
  std::uint64_t max_subset_size = 0;
};

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--dataset", o.source.dataset, "bundled dataset (fig1, fig2, fig3, fig3-quotient)");
  sub->add_option("--input", o.source.input, "edge-list file, '-' for stdin");
}

void add_common(CLI::App* sub, Options& o, Common& c) {
  sub->add_option("--time-budget-ms", c.time_budget_ms,
                  "wall-clock limit for searches; overrides MODLEX_BUDGET_MS");
  sub->add_option("--max-subset-size", c.max_subset_size,
                  "cap on vertex subsets examined by one search");
  sub->add_flag("--pretty", c.pretty, "indent the JSON output");
  sub->add_flag("--raw", o.raw, "print plain text (edge list or DOT) instead of JSON where available");
}

int emit(const Outcome& outcome, const Common& c, const Options& o, double elapsed_ms) {
  if (o.raw && !outcome.text.empty()) {
    std::cout << outcome.text;
  } else {
    Json body = outcome.body;
    if (!outcome.warnings.empty()) body["warnings"] = outcome.warnings;
    body["timing"] = {{"elapsed_ms", elapsed_ms}};
    std::cout << body.dump(c.pretty ? 2 : -1) << '\n';
  }
  for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
  return outcome.exit_code;
}

int fail(int code, const std::string& kind, const std::string& message, const Common& c,
         double elapsed_ms) {
  Json body = {{"result", nullptr}};
  if (code == kBudget) {
    body["indeterminate"] = {{"reason", message}};
  } else {
    body["error"] = {{"kind", kind}, {"message", message}};
  }
  body["timing"] = {{"elapsed_ms", elapsed_ms}};
  std::cout << body.dump(c.pretty ? 2 : -1) << '\n';
  std::cerr << "modlex: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-preserving subgraphs, modular decomposition and graph products"};
  app.require_subcommand(1);
  Options o;
  Common c;

  using Runner = std::function<Outcome(const Options&)>;
  std::map<CLI::App*, Runner> runners;
  auto command = [&](const char* name, const char* help, Runner run, bool with_source = true) {
    auto* sub = app.add_subcommand(name, help);
    if (with_source) add_source(sub, o);
    add_common(sub, o, c);
    runners[sub] = std::move(run);
    return sub;
  };

  auto* check_dp = command("check-dp", "decide whether the graph is distance preserving",
                           modlex::cli::run_check_dp);
  check_dp->add_option("--method", o.method, "auto, direct or decomposition")
      ->check(CLI::IsMember({"auto", "direct", "decomposition"}));
  command("check-sdp", "search for a sequential deletion order", modlex::cli::run_check_sdp);
  command("ndp", "orders without an isometric subgraph", modlex::cli::run_ndp);
  command("modules", "maximal modular partition", modlex::cli::run_modules);
  auto* quotient = command("quotient", "quotient by a modular partition", modlex::cli::run_quotient);
  quotient->add_option("--partition", o.partition, "parts as '0,1|2|3,4' (default: maximal)");
  command("minquotient", "minimal quotient graph", modlex::cli::run_minquotient);
  auto* lexprod = command("lexprod", "generalized lexicographic product over the input graph",
                          modlex::cli::run_lexprod);
  lexprod->add_option("--component", o.components,
                      "one component for all base vertices, or one per base vertex "
                      "(Kn, Pn, Cn, En, dataset or file)");
  auto* cartprod = command("cartprod", "Cartesian product of the input graph with a factor",
                           modlex::cli::run_cartprod);
  cartprod->add_option("--factor", o.factor, "right factor (Kn, Pn, Cn, En, dataset or file)");
  cartprod->add_flag("--certify", o.certify,
                     "build a dp certificate from a deletion order of the input and a dp "
                     "certificate of the factor");
  auto* transfer = command("transfer-check",
                           "decide isometry of a product subset through its projection",
                           modlex::cli::run_transfer_check);
  transfer->add_option("--component", o.components, "as for lexprod");
  transfer->add_option("--subset", o.subset, "product vertex ids as '0,3,4'");
  auto* verify = command("verify", "check a certificate produced by check-dp or check-sdp",
                         modlex::cli::run_verify);
  verify->add_option("--certificate", o.certificate_path, "JSON file");
  verify->add_flag("--conjecture-cartesian-dp", o.conjecture_cartesian_dp,
                   "search small dp factor pairs for a non-dp Cartesian product");
  verify->add_option("--max-factor-order", o.max_factor_order, "factor order limit for the search")
      ->check(CLI::Range(1, 6));
  auto* dot = command("export-dot", "render the graph as DOT", modlex::cli::run_export_dot);
  dot->add_option("--partition", o.partition, "clusters as '0,1|2|3,4'");
  dot->add_flag("--maximal-partition", o.maximal_partition, "cluster by the maximal modular partition");
  dot->add_flag("--quotient", o.quotient, "render the minimal quotient instead");
  dot->add_option("--component", o.components, "render a lexicographic product instead");
  dot->add_option("--output", o.output_path, "also write the DOT text to this file");
  auto* dataset = command("dataset", "list or print bundled datasets", modlex::cli::run_dataset,
                          false);
  dataset->add_option("name", o.dataset_name, "dataset to print");
  dataset->add_flag("--list", o.list, "list dataset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, "usage", e.what(), c, 0.0);
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    o.budget = modlex::SearchBudget::from_environment();
    if (c.time_budget_ms >= 0) o.budget.time_limit = std::chrono::milliseconds(c.time_budget_ms);
    if (c.max_subset_size > 0) o.budget.max_steps = c.max_subset_size;
    for (auto& [sub, run] : runners) {
      if (sub->parsed()) {
        const Outcome outcome = run(o);
        return emit(outcome, c, o, elapsed());
      }
    }
    return fail(kUsage, "usage", "no subcommand given", c, elapsed());
  } catch (const modlex::ParseError& e) {
    return fail(kUsage, "parse", e.what(), c, elapsed());
  } catch (const modlex::PreconditionError& e) {
    return fail(kPrecondition, "precondition", e.what(), c, elapsed());
  } catch (const modlex::BudgetExceeded& e) {
    return fail(kBudget, "budget", e.what(), c, elapsed());
  } catch (const modlex::CertificateError& e) {
    return fail(kFalse, "certificate", e.what(), c, elapsed());
  } catch (const modlex::Error& e) {
    return fail(kPrecondition, "error", e.what(), c, elapsed());
  }
}
