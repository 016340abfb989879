#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urset/naturals.hpp"
#include "urset/object.hpp"
#include "urset/ordinals.hpp"

namespace urset::check {

// Bounds of the enumerated universe: all canonical objects over the atoms
// with nesting depth ≤ max_rank and set width ≤ max_width.
struct UniverseSpec {
  std::vector<std::string> atoms = {"p", "q"};
  int max_rank = 3;
  int max_width = 4;
  std::uint64_t budget = 1'000'000;  // cap on candidate canonical forms
};

// Deterministic (canonical order) enumeration, atoms included. Throws
// invalid_universe for malformed bounds and budget_exceeded when the
// candidate count would pass the cap.
std::vector<Obj> enumerate_objects(const UniverseSpec& spec);

enum class Suite { all, peano, theorems, arith, ordinal };

std::optional<Suite> suite_from_name(std::string_view name);
const char* suite_name(Suite suite);

struct Obligation {
  std::string id;
  std::string anchor;       // the law being checked, in logical notation
  std::string description;  // quantifier domains and bounds actually used
  std::uint64_t instances = 0;
  bool passed = false;
  std::optional<std::string> counterexample;
};

struct Report {
  std::string suite;
  UniverseSpec bounds;
  int max_n = 10;
  std::vector<Obligation> obligations;
  std::int64_t elapsed_ms = 0;

  bool all_passed() const;
  std::uint64_t total_instances() const;
  std::size_t passed_count() const;
};

// Fault-injection points. Tests install broken variants to prove the suites
// catch violations; the defaults are the real kernel operations.
struct KernelHooks {
  std::function<bool(const Obj&, const Obj&)> equal;
  std::function<Obj(const Obj&)> successor;  // x ∪ {x}
  std::function<Obj(const Obj&, const Predicate&)> specification;

  static KernelHooks standard();
};

// Runs every obligation of the suite, instantiating each quantifier
// exhaustively over the enumerated universe or over the numbers 0..max_n.
// max_n is capped at 14 (representation growth guard). A nonzero seed
// shuffles the order in which instances are visited; results are unaffected
// except for which counterexample a failing obligation reports first.
Report run_suite(Suite suite, const UniverseSpec& spec, int max_n,
                 const KernelHooks& hooks = KernelHooks::standard(),
                 std::uint64_t seed = 0);

// The report in the stable JSON schema consumed by CI:
// {"suite", "bounds": {"atoms", "max_rank", "max_width", "max_n"},
//  "obligations": [{"id", "anchor", "instances", "status", "counterexample"}],
//  "elapsed_ms"}
std::string to_json_string(const Report& report, int indent = -1);

// Human-readable per-obligation lines plus a summary.
std::string format_report(const Report& report);

// One deterministic summary line, e.g. "peano: 5/5 obligations passed, 191
// instances".
std::string summary_line(const Report& report);

}  // namespace urset::check
