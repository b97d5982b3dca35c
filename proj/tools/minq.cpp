// Command-line front end: build minuscule Schubert quivers, list and classify
// them, and report divisor, model and stringy invariants.

#include "minq/acceptance.hpp"
#include "minq/chow.hpp"
#include "minq/models.hpp"
#include "minq/report.hpp"
#include "minq/stringy.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitSelftest = 3;

struct SystemOptions {
  std::string family;
  int rank = 0;
  int weight = 0;
};

struct RefOptions {
  SystemOptions sys;
  std::optional<std::string> word;
  std::optional<std::string> antichain;
  std::optional<int> index;
};

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void add_system_options(CLI::App* cmd, SystemOptions& opts) {
  cmd->add_option("--family", opts.family, "root system family (A, D or E)")->required();
  cmd->add_option("--rank", opts.rank, "root system rank")->required();
  cmd->add_option("--weight", opts.weight, "minuscule weight index (Bourbaki)")->required();
}

void add_ref_options(CLI::App* cmd, RefOptions& opts) {
  add_system_options(cmd, opts.sys);
  auto* word = cmd->add_option("--word", opts.word,
                               "comma-separated reduced word, left to right");
  auto* antichain = cmd->add_option(
      "--antichain", opts.antichain,
      "comma-separated ambient vertex ids (empty for the full ambient quiver)");
  auto* index = cmd->add_option("--index", opts.index, "1-based id from the list command");
  word->excludes(antichain)->excludes(index);
  antichain->excludes(index);
}

minq::RootSystemId parse_sys(const SystemOptions& opts) {
  auto sys = minq::parse_system(opts.family, opts.rank);
  minq::require_minuscule(sys, opts.weight);
  return sys;
}

minq::Quiver resolve_ref(const RefOptions& opts) {
  auto sys = parse_sys(opts.sys);
  int given = (opts.word ? 1 : 0) + (opts.antichain ? 1 : 0) + (opts.index ? 1 : 0);
  if (given != 1)
    throw CLI::ValidationError("exactly one of --word, --antichain, --index is required");
  if (opts.word) {
    minq::CosetWord word{sys, opts.sys.weight, parse_csv(*opts.word)};
    auto check = minq::validate_coset_word(word);
    if (!check.valid)
      throw std::invalid_argument("invalid word: InvalidAt(" +
                                  std::to_string(check.position) + ")");
    return minq::Quiver::from_word(word);
  }
  auto ambient = minq::Quiver::ambient_quiver(sys, opts.sys.weight);
  if (opts.antichain) {
    auto ids = parse_csv(*opts.antichain);
    if (!minq::is_antichain(ambient, ids))
      throw std::invalid_argument("not an antichain of the ambient quiver");
    return minq::schubert_from_antichain(ambient, ids);
  }
  if (sys.rank > 12)
    throw std::invalid_argument("--index resolves through the full enumeration, capped at "
                                "rank 12; use --word or --antichain instead");
  auto all = minq::enumerate_schubert(sys, opts.sys.weight);
  if (*opts.index < 1 || *opts.index > static_cast<int>(all.size()))
    throw std::invalid_argument("index out of range: the enumeration has " +
                                std::to_string(all.size()) + " quivers");
  return all[*opts.index - 1];
}

void enforce_cell_cap(const minq::RootSystemId& sys, int weight, std::uint64_t max_cells,
                      bool cap_given) {
  if (sys.rank > 12 && !cap_given)
    throw std::invalid_argument("rank " + std::to_string(sys.rank) +
                                " exceeds the default cap of 12; pass --max-cells to confirm");
  auto cells = minq::count_schubert(sys, weight);
  if (cells > max_cells)
    throw std::invalid_argument("enumeration would produce " + std::to_string(cells) +
                                " quivers (> --max-cells " + std::to_string(max_cells) + ")");
}

void emit(const std::string& text) { std::cout << text; }

void emit_json(const minq::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minuscule Schubert variety quiver toolkit"};
  app.require_subcommand(1);

  RefOptions quiver_ref, invariants_ref, models_ref, smooth_ref, stringy_ref, export_ref;
  SystemOptions list_sys, classify_sys;
  std::string quiver_format = "table", list_format = "table", invariants_format = "table";
  std::string models_format = "table", smooth_format = "table", stringy_format = "table";
  std::string classify_format = "table", export_format = "json";
  std::uint64_t list_max_cells = 100000, classify_max_cells = 100000;

  auto* cmd_quiver = app.add_subcommand("quiver", "build one quiver and render it");
  add_ref_options(cmd_quiver, quiver_ref);
  cmd_quiver->add_option("--format", quiver_format, "json | dot | table")
      ->check(CLI::IsMember({"json", "dot", "table"}));

  auto* cmd_list = app.add_subcommand("list", "enumerate all Schubert quivers");
  add_system_options(cmd_list, list_sys);
  auto* list_cap =
      cmd_list->add_option("--max-cells", list_max_cells, "abort above this many quivers");
  cmd_list->add_option("--format", list_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_invariants = app.add_subcommand("invariants", "divisor and Chow-group data");
  add_ref_options(cmd_invariants, invariants_ref);
  cmd_invariants->add_option("--format", invariants_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_models = app.add_subcommand("models", "relative minimal models and flops");
  add_ref_options(cmd_models, models_ref);
  cmd_models->add_option("--format", models_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_smooth = app.add_subcommand("smooth", "smoothness and IH-small verdicts");
  add_ref_options(cmd_smooth, smooth_ref);
  cmd_smooth->add_option("--format", smooth_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_stringy = app.add_subcommand("stringy", "stringy Euler number (Gorenstein)");
  add_ref_options(cmd_stringy, stringy_ref);
  cmd_stringy->add_option("--format", stringy_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_classify = app.add_subcommand("classify", "summary counts over the enumeration");
  add_system_options(cmd_classify, classify_sys);
  auto* classify_cap = cmd_classify->add_option("--max-cells", classify_max_cells,
                                                "abort above this many quivers");
  cmd_classify->add_option("--format", classify_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_export = app.add_subcommand("export", "full machine-readable report");
  add_ref_options(cmd_export, export_ref);
  cmd_export->add_option("--format", export_format, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_quiver->parsed()) {
      auto q = resolve_ref(quiver_ref);
      if (quiver_format == "json")
        emit_json(q.to_json());
      else if (quiver_format == "dot")
        emit(q.to_dot());
      else
        emit(minq::quiver_table(q));
    } else if (cmd_list->parsed()) {
      auto sys = parse_sys(list_sys);
      enforce_cell_cap(sys, list_sys.weight, list_max_cells, list_cap->count() > 0);
      auto quivers = minq::enumerate_schubert(sys, list_sys.weight);
      if (list_format == "json")
        emit_json(minq::list_json(sys, list_sys.weight, quivers));
      else
        emit(minq::list_table(sys, list_sys.weight, quivers));
    } else if (cmd_invariants->parsed()) {
      auto q = resolve_ref(invariants_ref);
      if (invariants_format == "json")
        emit_json(minq::invariants_json(q));
      else
        emit(minq::invariants_table(q));
    } else if (cmd_models->parsed()) {
      auto q = resolve_ref(models_ref);
      if (models_format == "json")
        emit_json(minq::models_json(q));
      else
        emit(minq::models_table(q));
    } else if (cmd_smooth->parsed()) {
      auto q = resolve_ref(smooth_ref);
      if (smooth_format == "json")
        emit_json(minq::smooth_json(q));
      else
        emit(minq::smooth_table(q));
    } else if (cmd_stringy->parsed()) {
      auto q = resolve_ref(stringy_ref);
      if (stringy_format == "json")
        emit_json(minq::stringy_json(q));
      else
        emit(minq::stringy_table(q));
    } else if (cmd_classify->parsed()) {
      auto sys = parse_sys(classify_sys);
      enforce_cell_cap(sys, classify_sys.weight, classify_max_cells,
                       classify_cap->count() > 0);
      auto quivers = minq::enumerate_schubert(sys, classify_sys.weight);
      auto summary = minq::classify_summary(quivers);
      if (classify_format == "json")
        emit_json(minq::classify_json(sys, classify_sys.weight, summary));
      else
        emit(minq::classify_table(sys, classify_sys.weight, summary));
    } else if (cmd_export->parsed()) {
      auto q = resolve_ref(export_ref);
      if (export_format == "dot")
        emit(q.to_dot());
      else
        emit_json(minq::full_report_json(q));
    } else if (cmd_selftest->parsed()) {
      int failures = minq::acceptance::run_and_print(std::cout);
      return failures == 0 ? kExitOk : kExitSelftest;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
