// Command-line surface for the harmonia library: construct symmetric
// harmonious sequences, verify sequence properties, run exhaustive
// searches, form quotients, and normalize Cayley tables.
//
// Exit codes: 0 = success / property holds; 1 = property fails or an
// exhaustive search came back empty; 2 = input or format error.

#include <array>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmonia/construct.hpp"
#include "harmonia/group.hpp"
#include "harmonia/oracle.hpp"
#include "harmonia/seqcheck.hpp"
#include "harmonia/textio.hpp"

namespace {

using harmonia::Element;
using harmonia::FiniteGroup;
using harmonia::GroupSequence;

bool looks_like_builtin_spec(const std::string& s) {
  static const std::array<std::string, 6> kinds = {
      "cyclic", "abelian", "frobenius", "heisenberg", "dihedral", "elementary2"};
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos) return false;
  const std::string head = s.substr(0, colon);
  for (const auto& kind : kinds)
    if (head == kind) return true;
  return false;
}

FiniteGroup load_group(const std::string& spec_or_path) {
  if (looks_like_builtin_spec(spec_or_path)) return harmonia::make_builtin(spec_or_path);
  return harmonia::read_group_file(spec_or_path);
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path);
  if (!out) throw harmonia::InputError("cannot write file '" + path + "'");
  out << payload;
}

std::vector<Element> bind_sequence(const FiniteGroup& g, const std::string& path) {
  std::vector<Element> entries = harmonia::read_sequence_file(path);
  if (static_cast<int>(entries.size()) != g.order()) {
    throw harmonia::InputError("sequence length " + std::to_string(entries.size()) +
                               " does not match group order " + std::to_string(g.order()));
  }
  return entries;
}

std::string sequence_line(std::span<const Element> entries) {
  std::string line;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) line += ' ';
    line += std::to_string(entries[i]);
  }
  return line;
}

int cmd_construct(const std::string& group_spec, const std::string& output_path) {
  const FiniteGroup g = load_group(group_spec);
  const GroupSequence seq = harmonia::synthesize(g);
  const std::string payload = harmonia::serialize_sequence(seq.entries);
  std::cout << payload;
  if (!output_path.empty()) write_file(output_path, payload);

  const auto report = harmonia::verify_symmetric_harmonious(seq);
  std::cerr << "order " << g.order() << ": symmetric harmonious sequence "
            << (report.verdict ? "verified" : "FAILED VERIFICATION") << '\n';
  return report.verdict ? 0 : 1;
}

int cmd_verify(const std::string& group_spec, const std::string& sequence_path,
               const std::string& property) {
  const FiniteGroup g = load_group(group_spec);
  const std::vector<Element> entries = bind_sequence(g, sequence_path);

  if (property == "complete-mapping") {
    const bool ok = harmonia::is_complete_mapping(g, entries);
    std::cout << (ok ? "ok" : "fail") << " complete-mapping\n";
    return ok ? 0 : 1;
  }

  const GroupSequence seq{&g, entries};
  harmonia::VerificationReport report;
  if (property == "harmonious") {
    report = harmonia::verify_harmonious(seq);
  } else if (property == "symmetric") {
    report = harmonia::verify_symmetric_harmonious(seq);
  } else if (property == "r") {
    report = harmonia::verify_r_sequence(seq);
  } else if (property == "rstar") {
    report = harmonia::verify_r_star(seq);
  } else {
    throw harmonia::InputError("unknown property '" + property + "'");
  }

  if (report.verdict) {
    std::cout << "ok " << property << '\n';
    return 0;
  }
  std::cout << "fail " << harmonia::to_string(*report.failed_check) << " witness "
            << report.witness->first << ' ' << report.witness->second << '\n';
  return 1;
}

int cmd_search(const std::string& group_spec, const std::string& property,
               std::size_t limit, bool allow_large) {
  const FiniteGroup g = load_group(group_spec);
  harmonia::SearchOptions options;
  options.max_results = limit;
  options.allow_large = allow_large;

  harmonia::SearchOutcome outcome;
  if (property == "symmetric") {
    outcome = harmonia::search_symmetric_harmonious(g, options);
  } else if (property == "harmonious") {
    outcome = harmonia::search_harmonious(g, options);
  } else if (property == "rstar") {
    outcome = harmonia::search_r_star(g, options);
  } else {
    throw harmonia::InputError("unknown search property '" + property + "'");
  }

  std::cerr << "found " << outcome.found.size() << ", exhausted "
            << (outcome.exhausted ? "yes" : "no") << ", nodes visited "
            << outcome.nodes_visited << '\n';
  if (outcome.found.empty() && outcome.exhausted) {
    std::cout << "exhausted: none\n";
    return 1;
  }
  for (const auto& seq : outcome.found) std::cout << sequence_line(seq.entries) << '\n';
  return 0;
}

int cmd_quotient(const std::string& group_spec, const std::vector<Element>& generators) {
  const FiniteGroup g = load_group(group_spec);
  for (Element x : generators) {
    if (x < 0 || x >= g.order())
      throw harmonia::InputError("generator index " + std::to_string(x) + " out of range");
  }
  const harmonia::SubgroupView h = harmonia::subgroup_closure(g, generators);
  std::cout << "subgroup: " << sequence_line(h.members) << '\n';

  if (!h.is_normal) {
    const auto witness = harmonia::normality_witness(g, h.members);
    std::cout << "normal: no\n";
    std::cout << "witness: " << (*witness)[0] << " * " << (*witness)[1] << " * "
              << (*witness)[0] << "^-1 = " << (*witness)[2] << '\n';
    return 1;
  }

  std::cout << "normal: yes\n";
  const harmonia::QuotientData q = harmonia::quotient(g, h);
  std::cout << "quotient:\n" << harmonia::serialize_group(q.quotient);
  std::cout << "cosets:\n";
  for (const auto& coset : q.cosets) std::cout << sequence_line(coset) << '\n';
  return 0;
}

int cmd_normalize(const std::string& table_path, const std::string& output_path) {
  const auto raw = harmonia::read_raw_table_file(table_path);
  const auto normalized = harmonia::normalize_table(raw);
  harmonia::from_cayley_table(normalized);  // full validation
  const std::string payload = harmonia::serialize_raw_table(normalized);
  std::cout << payload;
  if (!output_path.empty()) write_file(output_path, payload);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group sequencing toolkit"};
  app.require_subcommand(1);

  std::string group_spec;
  std::string sequence_path;
  std::string property;
  std::string output_path;
  std::size_t limit = 0;
  bool allow_large = false;
  std::vector<Element> generators;

  auto* construct = app.add_subcommand(
      "construct", "build a symmetric harmonious sequence for an odd-order group");
  construct->add_option("--group", group_spec, "builtin spec or Cayley-table file")->required();
  construct->add_option("--output", output_path, "also write the sequence to this file");

  auto* verify = app.add_subcommand("verify", "check a sequence property");
  verify->add_option("--group", group_spec, "builtin spec or Cayley-table file")->required();
  verify->add_option("--sequence", sequence_path, "sequence file")->required();
  verify->add_option("--property", property,
                     "harmonious | symmetric | r | rstar | complete-mapping")
      ->required();

  auto* search = app.add_subcommand("search", "exhaustive backtracking search");
  search->add_option("--group", group_spec, "builtin spec or Cayley-table file")->required();
  search->add_option("--property", property, "harmonious | symmetric | rstar")->required();
  search->add_option("--limit", limit, "stop after this many results");
  search->add_flag("--allow-large", allow_large, "override the exhaustive search cap");

  auto* quot = app.add_subcommand("quotient", "subgroup closure, cosets, quotient table");
  quot->add_option("--group", group_spec, "builtin spec or Cayley-table file")->required();
  quot->add_option("generators", generators, "subgroup generator indices");

  auto* normalize = app.add_subcommand("normalize", "reindex a table so the identity is element 0");
  normalize->add_option("--group", group_spec, "Cayley-table file")->required();
  normalize->add_option("--output", output_path, "also write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(construct)) return cmd_construct(group_spec, output_path);
    if (app.got_subcommand(verify)) return cmd_verify(group_spec, sequence_path, property);
    if (app.got_subcommand(search)) return cmd_search(group_spec, property, limit, allow_large);
    if (app.got_subcommand(quot)) return cmd_quotient(group_spec, generators);
    if (app.got_subcommand(normalize)) return cmd_normalize(group_spec, output_path);
  } catch (const harmonia::ParityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const harmonia::NormalityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const harmonia::NonSolvabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const harmonia::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
