#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncnn/bijection.hpp"
#include "ncnn/json_io.hpp"
#include "ncnn/parallel.hpp"
#include "ncnn/render.hpp"
#include "ncnn/verify.hpp"

namespace {

using namespace ncnn;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

Mode parse_mode(const std::string& s) {
  if (s == "nn") return Mode::NN;
  if (s == "nc") return Mode::NC;
  throw CLI::ValidationError("--mode/--from must be nn or nc");
}

GroupFamily parse_group(const std::string& fam, int rank) {
  try {
    return GroupFamily(family_from_letter(fam.empty() ? '?' : fam[0]), rank);
  } catch (const Error& e) {
    throw CLI::ValidationError(e.what());
  }
}

int default_jobs() {
  if (const char* env = std::getenv("NCNN_JOBS")) {
    int v = std::atoi(env);
    if (v >= 0) return v;
  }
  return 1;
}

// Apply fn to each nonempty stdin line; I/O and JSON failures name the line.
int for_each_line(const std::function<void(const json&, int)>& fn) {
  std::string line;
  int lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(parse_json_line(line), lineno);
    } catch (const ParseError& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      return kExitIo;
    }
  }
  return 0;
}

std::string table_row(const GroupFamily& g, const ClassicalPartition& p) {
  std::ostringstream os;
  for (const auto& b : p.representatives()) {
    os << "{";
    for (size_t t = 0; t < b.size(); ++t) os << (t ? "," : "") << b[t];
    os << "}";
  }
  os << " zero={";
  bool first = true;
  for (int e : p.zero_block())
    if (e > 0) {
      os << (first ? "" : ",") << e;
      first = false;
    }
  os << "}";
  (void)g;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncrossing/nonnesting partitions for the classical "
               "reflection groups"};
  app.require_subcommand(1);

  std::string family, mode_str = "nn", from_str = "nn", format = "json";
  std::string checks_str = "counts,roundtrip,type,uniform,central,carter";
  int rank = 0, max_rank = 4, jobs = default_jobs();
  bool uniform = false, force = false;

  auto add_group_opts = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "group family: A, B, C or D")
        ->required();
    cmd->add_option("--rank", rank, "Coxeter rank")->required();
  };

  CLI::App* count = app.add_subcommand("count", "count partitions");
  add_group_opts(count);
  count->add_option("--mode", mode_str, "nn or nc")->required();
  count->add_flag("--uniform", uniform,
                  "count on the uniform side (antichains / interval)");
  count->add_flag("--force", force, "ignore the rank guardrail");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list partitions");
  add_group_opts(enumerate);
  enumerate->add_option("--mode", mode_str, "nn or nc")->required();
  enumerate->add_option("--format", format, "json or table");

  CLI::App* convert_cmd =
      app.add_subcommand("convert", "convert partitions between nn and nc "
                                    "(one JSON per input line)");
  add_group_opts(convert_cmd);
  convert_cmd->add_option("--from", from_str, "source mode: nn or nc")
      ->required();

  CLI::App* stats = app.add_subcommand(
      "stats", "extract statistic bundles (one partition JSON per line)");
  add_group_opts(stats);
  stats->add_option("--mode", mode_str, "nn or nc")->required();

  CLI::App* validate = app.add_subcommand(
      "validate", "run the characterisation validators on statistics JSON");
  add_group_opts(validate);
  validate->add_option("--mode", mode_str, "nn or nc")->required();

  CLI::App* verify = app.add_subcommand("verify", "exhaustive verification");
  verify->add_option("--max-rank", max_rank, "largest rank per family");
  verify->add_option("--checks", checks_str, "comma-separated check list");
  verify->add_option("--jobs", jobs, "worker threads (0 = all)");

  CLI::App* render = app.add_subcommand(
      "render", "draw the bump diagram of one partition JSON from stdin");
  add_group_opts(render);
  render->add_option("--mode", mode_str, "nn or nc")->required();
  render->add_option("--format", format, "ascii or svg")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      GroupFamily g = parse_group(family, rank);
      Mode mode = parse_mode(mode_str);
      int cap = g.family == Family::A ? 7 : 6;
      if (uniform && g.rank > cap && !force) {
        std::cerr << "rank " << g.rank << " exceeds the --uniform guardrail ("
                  << cap << " for " << family_letter(g.family)
                  << "); pass --force to override\n";
        return kExitUsage;
      }
      long long n = 0;
      if (!uniform) {
        for_each_classical(g, mode, [&](const ClassicalPartition&) { ++n; });
      } else if (mode == Mode::NN) {
        n = count_antichains(g);
      } else {
        n = static_cast<long long>(uniform_noncrossing(g, jobs).size());
      }
      std::cout << n << "\n";
      return 0;
    }

    if (enumerate->parsed()) {
      GroupFamily g = parse_group(family, rank);
      Mode mode = parse_mode(mode_str);
      if (format != "json" && format != "table") {
        std::cerr << "--format must be json or table\n";
        return kExitUsage;
      }
      for (const auto& p : enumerate_classical(g, mode)) {
        if (format == "json")
          std::cout << partition_to_json(g, p).dump() << "\n";
        else
          std::cout << table_row(g, p) << "\n";
      }
      return 0;
    }

    if (convert_cmd->parsed()) {
      GroupFamily g = parse_group(family, rank);
      Mode from = parse_mode(from_str);
      Direction dir =
          from == Mode::NN ? Direction::NNtoNC : Direction::NCtoNN;
      return for_each_line([&](const json& j, int lineno) {
        auto [pg, p] = partition_from_json(j);
        if (!(pg == g))
          throw ParseError("partition group does not match the command line");
        try {
          std::cout << partition_to_json(g, convert(g, dir, p)).dump() << "\n";
        } catch (const PredicateViolation& e) {
          throw ParseError(std::string(e.what()) + " (line " +
                           std::to_string(lineno) + ")");
        }
      });
    }

    if (stats->parsed()) {
      GroupFamily g = parse_group(family, rank);
      Mode mode = parse_mode(mode_str);
      return for_each_line([&](const json& j, int) {
        auto [pg, p] = partition_from_json(j);
        if (!(pg == g))
          throw ParseError("partition group does not match the command line");
        try {
          std::cout << bundle_to_json(extract_statistics(g, mode, p)).dump()
                    << "\n";
        } catch (const PredicateViolation& e) {
          throw ParseError(e.what());
        }
      });
    }

    if (validate->parsed()) {
      GroupFamily g = parse_group(family, rank);
      Mode mode = parse_mode(mode_str);
      bool all_ok = true;
      int rc = for_each_line([&](const json& j, int) {
        ValidationResult res =
            validate_statistics(g, g.ambient_dim(), bundle_from_json(j), mode);
        all_ok = all_ok && res.ok;
        std::cout << json{{"valid", res.ok}, {"violations", res.violations}}
                         .dump()
                  << "\n";
      });
      if (rc != 0) return rc;
      return all_ok ? 0 : kExitVerifyFail;
    }

    if (verify->parsed()) {
      std::set<std::string> selected;
      std::stringstream ss(checks_str);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) selected.insert(item);
      for (const auto& c : selected)
        if (!kAllChecks.count(c)) {
          std::cerr << "unknown check: " << c << "\n";
          return kExitUsage;
        }
      VerificationReport report = run_verification(max_rank, selected, jobs);
      std::cout << report.to_json().dump(2) << "\n";
      return report.all_pass() ? 0 : kExitVerifyFail;
    }

    if (render->parsed()) {
      GroupFamily g = parse_group(family, rank);
      Mode mode = parse_mode(mode_str);
      DiagramFormat fmt;
      if (format == "ascii") fmt = DiagramFormat::Ascii;
      else if (format == "svg") fmt = DiagramFormat::Svg;
      else {
        std::cerr << "--format must be ascii or svg\n";
        return kExitUsage;
      }
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cerr << "render expects one partition JSON on stdin\n";
        return kExitIo;
      }
      try {
        auto [pg, p] = partition_from_json(parse_json_line(line));
        if (!(pg == g)) {
          std::cerr << "line 1: partition group does not match\n";
          return kExitIo;
        }
        std::cout << emit(layout_diagram(g, mode, p), fmt);
      } catch (const ParseError& e) {
        std::cerr << "line 1: " << e.what() << "\n";
        return kExitIo;
      } catch (const UnsupportedCombination& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      } catch (const PredicateViolation& e) {
        std::cerr << "line 1: " << e.what() << "\n";
        return kExitIo;
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
