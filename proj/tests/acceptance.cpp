// Acceptance suite: runs every top-level correctness criterion and prints
// one pass/fail line per criterion. Exits with the number of failures.

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "harmonia/construct.hpp"
#include "harmonia/oracle.hpp"
#include "harmonia/seqcheck.hpp"
#include "lift_checks.hpp"
#include "support.hpp"

using namespace harmonia;

namespace {

struct CorpusEntry {
  std::string name;
  const FiniteGroup* group;
  std::vector<Element> sequence;  // filled by criterion 1
  std::vector<LiftRecord> trace;  // filled by criterion 1
};

std::deque<FiniteGroup> g_groups;  // stable storage for group references
std::vector<CorpusEntry> g_corpus;

void build_corpus() {
  auto add = [&](std::string name, FiniteGroup g) {
    g_groups.push_back(std::move(g));
    g_corpus.push_back({std::move(name), &g_groups.back(), {}, {}});
  };
  for (int n = 1; n <= 81; n += 2) add("cyclic:" + std::to_string(n), make_cyclic(n));
  for (const char* spec :
       {"abelian:3,3", "abelian:3,9", "abelian:3,3,3", "abelian:5,5", "abelian:3,5",
        "frobenius:7:3", "heisenberg:3", "frobenius:13:3", "frobenius:31:5"}) {
    add(spec, make_builtin(spec));
  }
  add("cyclic:3 x frobenius:7:3",
      make_direct_product(make_cyclic(3), make_builtin("frobenius:7:3")));
}

// 1. Existence: synthesize verifies on every odd corpus group.
bool criterion_existence(std::ostream& log) {
  bool ok = true;
  for (auto& entry : g_corpus) {
    GroupSequence s = synthesize(*entry.group, &entry.trace);
    if (!verify_symmetric_harmonious(s).verdict) {
      log << "  " << entry.name << ": synthesized sequence failed verification\n";
      ok = false;
    }
    entry.sequence = std::move(s.entries);
  }
  return ok;
}

// 2. Non-existence: exhaustive symmetric search is empty for every
//    even-order group of order <= 8.
bool criterion_nonexistence(std::ostream& log) {
  bool ok = true;
  for (const char* spec : {"cyclic:2", "cyclic:4", "elementary2:2", "cyclic:6",
                           "dihedral:3", "cyclic:8", "dihedral:4", "elementary2:3"}) {
    const FiniteGroup g = make_builtin(spec);
    const SearchOutcome outcome = search_symmetric_harmonious(g);
    if (!outcome.exhausted || !outcome.found.empty()) {
      log << "  " << spec << ": expected exhausted+empty, got found="
          << outcome.found.size() << " exhausted=" << outcome.exhausted << '\n';
      ok = false;
    }
  }
  return ok;
}

// 3. Lifting internals: every lift performed in criterion 1 satisfies the
//    suffix-product laws, the case identities, the pairing, and coset
//    membership.
bool criterion_lift_internals(std::ostream& log) {
  bool ok = true;
  std::size_t lifts = 0;
  for (const auto& entry : g_corpus) {
    for (const auto& record : entry.trace) {
      ++lifts;
      if (const auto failure = test::check_lift_record(record)) {
        log << "  " << entry.name << ": " << *failure << '\n';
        ok = false;
      }
    }
  }
  if (lifts == 0) {
    log << "  no lifts were performed\n";
    ok = false;
  }
  return ok;
}

// 4. Oracle/construction agreement on odd orders <= 9.
bool criterion_oracle_agreement(std::ostream& log) {
  bool ok = true;
  for (const auto& entry : g_corpus) {
    if (entry.group->order() > 9) continue;
    const SearchOutcome outcome = search_symmetric_harmonious(*entry.group);
    bool member = false;
    for (const auto& s : outcome.found) member = member || s.entries == entry.sequence;
    if (!outcome.exhausted || !member) {
      log << "  " << entry.name << ": synthesized sequence "
          << (member ? "found" : "missing") << " in exhaustive set of "
          << outcome.found.size() << '\n';
      ok = false;
    }
  }
  return ok;
}

// 5. Complete-mapping correspondence for every constructed sequence.
bool criterion_complete_mapping(std::ostream& log) {
  bool ok = true;
  for (const auto& entry : g_corpus) {
    const GroupSequence s{entry.group, entry.sequence};
    const auto phi = harmonious_to_complete_mapping(s);
    bool pass = is_complete_mapping(*entry.group, phi) && mapping_cycle_count(phi) == 1;
    if (pass) {
      Element x = entry.sequence[0];
      for (int i = 0; i < entry.group->order(); ++i) {
        if (entry.sequence[i] != x) {
          pass = false;
          break;
        }
        x = phi[x];
      }
    }
    if (!pass) {
      log << "  " << entry.name << ": complete-mapping correspondence failed\n";
      ok = false;
    }
  }
  return ok;
}

// 6. Elementary 2-groups admit no harmonious sequence (orders 2, 4, 8).
bool criterion_elementary2(std::ostream& log) {
  bool ok = true;
  for (const char* spec : {"elementary2:1", "elementary2:2", "elementary2:3"}) {
    const FiniteGroup g = make_builtin(spec);
    const SearchOutcome outcome = search_harmonious(g);
    if (!outcome.exhausted || !outcome.found.empty()) {
      log << "  " << spec << ": expected exhausted+empty\n";
      ok = false;
    }
  }
  return ok;
}

// 7. Hall-Paige checker agrees with brute-force Sylow-2 enumeration on all
//    corpus groups of order <= 48.
bool criterion_hall_paige(std::ostream& log) {
  bool ok = true;
  for (const auto& spec : test::corpus_specs()) {
    const FiniteGroup g = make_builtin(spec);
    if (g.order() > 48) continue;
    if (hall_paige_condition(g) != test::hall_paige_bruteforce(g)) {
      log << "  " << spec << ": checker disagrees with brute force\n";
      ok = false;
    }
  }
  return ok;
}

// 8. Identity anchor: constructed and oracle-found symmetric harmonious
//    sequences on odd-order groups start at the identity.
bool criterion_identity_anchor(std::ostream& log) {
  bool ok = true;
  for (const auto& entry : g_corpus) {
    if (entry.sequence.empty() || entry.sequence[0] != 0) {
      log << "  " << entry.name << ": constructed sequence not anchored\n";
      ok = false;
    }
  }
  for (const auto& entry : g_corpus) {
    if (entry.group->order() > 9) continue;
    for (const auto& s : search_symmetric_harmonious(*entry.group).found) {
      if (s.entries[0] != 0) {
        log << "  " << entry.name << ": oracle sequence not anchored\n";
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  build_corpus();

  struct Criterion {
    int index;
    const char* name;
    std::function<bool(std::ostream&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "existence: synthesize verifies on the odd corpus", criterion_existence},
      {2, "non-existence: even orders <= 8 exhaust empty", criterion_nonexistence},
      {3, "lifting-step internals", criterion_lift_internals},
      {4, "oracle/construction agreement on odd orders <= 9", criterion_oracle_agreement},
      {5, "complete-mapping correspondence", criterion_complete_mapping},
      {6, "elementary 2-groups are not harmonious", criterion_elementary2},
      {7, "Hall-Paige checker vs Sylow brute force", criterion_hall_paige},
      {8, "identity anchor on odd orders", criterion_identity_anchor},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    bool pass = false;
    try {
      pass = criterion.fn(log);
    } catch (const std::exception& e) {
      log << "  exception: " << e.what() << '\n';
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.index
              << " (" << criterion.name << ") — " << elapsed << " ms\n";
    if (!pass) {
      std::cout << log.str();
      ++failures;
    }
  }
  return failures;
}
