#include "urset/checker.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace urset::check {

namespace {

void validate(const UniverseSpec& spec) {
  if (spec.atoms.size() < 2)
    fail(errc::invalid_universe, "a universe needs at least two atoms");
  for (std::size_t i = 0; i < spec.atoms.size(); ++i)
    for (std::size_t j = i + 1; j < spec.atoms.size(); ++j)
      if (spec.atoms[i] == spec.atoms[j])
        fail(errc::invalid_universe, "duplicate atom '" + spec.atoms[i] + "'");
  if (spec.max_rank < 1) fail(errc::invalid_universe, "max_rank must be at least 1");
  if (spec.max_width < 1) fail(errc::invalid_universe, "max_width must be at least 1");
}

// Number of nonempty subsets of a pool of n objects with at most w elements,
// saturating well above any sane budget.
std::uint64_t candidate_count(std::uint64_t n, std::uint64_t w) {
  constexpr std::uint64_t kSaturate = 1ull << 62;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (std::uint64_t k = 1; k <= std::min(n, w); ++k) {
    if (binom > kSaturate / (n - k + 1)) return kSaturate;
    binom = binom * (n - k + 1) / k;
    if (total > kSaturate - binom) return kSaturate;
    total += binom;
  }
  return total;
}

}  // namespace

std::vector<Obj> enumerate_objects(const UniverseSpec& spec) {
  validate(spec);
  std::vector<Obj> universe;
  std::unordered_set<const void*> seen;
  auto remember = [&](const Obj& o) {
    if (seen.insert(o.id()).second) universe.push_back(o);
  };
  for (const std::string& name : spec.atoms) remember(mk_individual(name));

  std::uint64_t spent = universe.size();
  const std::uint64_t width = static_cast<std::uint64_t>(spec.max_width);
  for (int rank = 1; rank <= spec.max_rank; ++rank) {
    const std::vector<Obj> pool = universe;  // everything of lower rank
    std::uint64_t candidates = candidate_count(pool.size(), width);
    if (candidates > spec.budget - std::min(spent, spec.budget))
      fail(errc::budget_exceeded,
           "enumeration at rank " + std::to_string(rank) + " needs " +
               std::to_string(candidates) + " candidates; budget is " +
               std::to_string(spec.budget));
    spent += candidates;
    // Every nonempty subset of the pool with at most max_width elements,
    // in place via a combination walk over pool indices.
    std::vector<std::size_t> idx;
    std::vector<Obj> elems;
    for (std::size_t k = 1; k <= std::min<std::size_t>(pool.size(), width); ++k) {
      idx.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        elems.clear();
        for (std::size_t i : idx) elems.push_back(pool[i]);
        remember(mk_set(elems));  // {atom} collapses onto the atom, already seen
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  std::sort(universe.begin(), universe.end(), CanonicalLess{});
  return universe;
}

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "peano") return Suite::peano;
  if (name == "theorems") return Suite::theorems;
  if (name == "arith") return Suite::arith;
  if (name == "ordinal") return Suite::ordinal;
  return std::nullopt;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::peano: return "peano";
    case Suite::theorems: return "theorems";
    case Suite::arith: return "arith";
    case Suite::ordinal: return "ordinal";
  }
  return "?";
}

bool Report::all_passed() const {
  return std::all_of(obligations.begin(), obligations.end(),
                     [](const Obligation& o) { return o.passed; });
}

std::uint64_t Report::total_instances() const {
  std::uint64_t total = 0;
  for (const Obligation& o : obligations) total += o.instances;
  return total;
}

std::size_t Report::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(obligations.begin(), obligations.end(),
                    [](const Obligation& o) { return o.passed; }));
}

KernelHooks KernelHooks::standard() {
  KernelHooks hooks;
  hooks.equal = [](const Obj& a, const Obj& b) { return urset::equal(a, b); };
  hooks.successor = [](const Obj& x) { return cup(x, singleton(x)); };
  hooks.specification = [](const Obj& s, const Predicate& phi) {
    return urset::specification(s, phi);
  };
  return hooks;
}

std::string to_json_string(const Report& report, int indent) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["bounds"] = {{"atoms", report.bounds.atoms},
                 {"max_rank", report.bounds.max_rank},
                 {"max_width", report.bounds.max_width},
                 {"max_n", report.max_n}};
  j["obligations"] = nlohmann::json::array();
  for (const Obligation& o : report.obligations) {
    nlohmann::json jo;
    jo["id"] = o.id;
    jo["anchor"] = o.anchor;
    jo["instances"] = o.instances;
    jo["status"] = o.passed ? "pass" : "fail";
    jo["counterexample"] = o.counterexample ? nlohmann::json(*o.counterexample)
                                            : nlohmann::json(nullptr);
    j["obligations"].push_back(std::move(jo));
  }
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(indent);
}

std::string format_report(const Report& report) {
  std::ostringstream out;
  for (const Obligation& o : report.obligations) {
    out << (o.passed ? "[PASS] " : "[FAIL] ") << report.suite << "/" << o.id << " — "
        << o.instances << " instances";
    if (!o.passed && o.counterexample) out << "\n       counterexample: " << *o.counterexample;
    out << "\n";
  }
  out << summary_line(report) << " (" << report.elapsed_ms << " ms)";
  return out.str();
}

std::string summary_line(const Report& report) {
  std::ostringstream out;
  out << report.suite << ": " << report.passed_count() << "/" << report.obligations.size()
      << " obligations passed, " << report.total_instances() << " instances";
  return out.str();
}

// The obligation catalogue lives in obligations.cpp.
std::vector<Obligation> peano_obligations(const UniverseSpec&, int max_n,
                                          const KernelHooks&, std::uint64_t seed);
std::vector<Obligation> theorems_obligations(const UniverseSpec&, int max_n,
                                             const KernelHooks&, std::uint64_t seed);
std::vector<Obligation> arith_obligations(const UniverseSpec&, int max_n,
                                          const KernelHooks&, std::uint64_t seed);
std::vector<Obligation> ordinal_obligations(const UniverseSpec&, int max_n,
                                            const KernelHooks&, std::uint64_t seed);

Report run_suite(Suite suite, const UniverseSpec& spec, int max_n,
                 const KernelHooks& hooks, std::uint64_t seed) {
  validate(spec);
  if (max_n < 1 || max_n > 14)
    fail(errc::precondition_failed,
         "max_n must lie in 1..14 (set representations grow too fast beyond)");
  auto started = std::chrono::steady_clock::now();
  Report report;
  report.suite = suite_name(suite);
  report.bounds = spec;
  report.max_n = max_n;
  auto append = [&](std::vector<Obligation> v) {
    for (Obligation& o : v) report.obligations.push_back(std::move(o));
  };
  if (suite == Suite::peano || suite == Suite::all)
    append(peano_obligations(spec, max_n, hooks, seed));
  if (suite == Suite::theorems || suite == Suite::all)
    append(theorems_obligations(spec, max_n, hooks, seed));
  if (suite == Suite::arith || suite == Suite::all)
    append(arith_obligations(spec, max_n, hooks, seed));
  if (suite == Suite::ordinal || suite == Suite::all)
    append(ordinal_obligations(spec, max_n, hooks, seed));
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace urset::check
