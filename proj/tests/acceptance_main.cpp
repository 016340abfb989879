// Acceptance suite: one pass/fail line per criterion. Usage:
//   urset_acceptance <path-to-urset-cli> <golden-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "urset/checker.hpp"
#include "urset/fault_injection.hpp"
#include "urset/repl.hpp"

using namespace urset;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<void(std::vector<std::string>&)> run;  // push complaints
};

Alpha default_alpha() {
  return first_number(mk_individual("p"), mk_individual("q"));
}

std::string run_cli(const std::string& cli, const std::string& args, int& exit_code) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return "";
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string read_file(const std::string& path, std::vector<std::string>& problems) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    problems.push_back("cannot open " + path);
    return "";
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_peano(std::vector<std::string>& problems) {
  auto t0 = std::chrono::steady_clock::now();
  check::Report r = check::run_suite(check::Suite::peano, check::UniverseSpec{}, 10);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (r.obligations.size() != 5)
    problems.push_back("expected 5 obligations, got " + std::to_string(r.obligations.size()));
  for (const auto& o : r.obligations) {
    if (!o.passed) problems.push_back(o.id + " failed");
    if (o.instances < 10)
      problems.push_back(o.id + " has only " + std::to_string(o.instances) + " instances");
  }
  if (ms >= 5000) problems.push_back("took " + std::to_string(ms) + " ms (budget 5 s)");
}

void criterion_recognizer(std::vector<std::string>& problems) {
  check::UniverseSpec spec;
  std::vector<Obj> universe = check::enumerate_objects(spec);
  Alpha a = default_alpha();
  // independent oracle: iterate the successor construction while in bounds
  std::vector<Obj> chain;
  Obj x = a.value();
  while (x.depth() <= static_cast<std::size_t>(spec.max_rank) &&
         x.width() <= static_cast<std::size_t>(spec.max_width)) {
    chain.push_back(x);
    x = cup(x, singleton(x));
  }
  if (chain.size() != 3) problems.push_back("expected the chain 0,1,2 in bounds");
  std::size_t accepted = 0;
  for (const Obj& o : universe) {
    bool in_chain = std::find(chain.begin(), chain.end(), o) != chain.end();
    if (is_number(o, a) != in_chain)
      problems.push_back("mismatch at " + to_string(o));
    if (is_number(o, a)) ++accepted;
  }
  if (accepted != chain.size()) problems.push_back("recognizer count drifted");
}

void criterion_arithmetic(std::vector<std::string>& problems) {
  auto t0 = std::chrono::steady_clock::now();
  Alpha a = default_alpha();
  for (std::uint64_t j = 0; j <= 8; ++j) {
    for (std::uint64_t k = 0; k <= 8; ++k) {
      Nat x = from_int(j, a), y = from_int(k, a);
      if (to_int(add(x, y)) != j + k)
        problems.push_back("add broke at " + std::to_string(j) + "+" + std::to_string(k));
      if (to_int(mul(x, y)) != j * k)
        problems.push_back("mul broke at " + std::to_string(j) + "*" + std::to_string(k));
    }
  }
  if (!(add(from_int(0, a), from_int(1, a)) == from_int(1, a)))
    problems.push_back("0+1 is not 1");
  for (std::uint64_t j = 0; j <= 8; ++j) {
    Nat x = from_int(j, a);
    if (!(add(x, from_int(0, a)) == x)) problems.push_back("a+0 is not a");
    if (!(mul(x, from_int(1, a)) == add(from_int(0, a), x)))
      problems.push_back("a*1 is not 0+a");
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (ms >= 10000) problems.push_back("took " + std::to_string(ms) + " ms (budget 10 s)");
}

void criterion_trichotomy(std::vector<std::string>& problems) {
  Alpha a = default_alpha();
  for (std::uint64_t j = 0; j <= 12; ++j)
    for (std::uint64_t k = 0; k <= 12; ++k) {
      Nat x = from_int(j, a), y = from_int(k, a);
      int holds = (lt(x, y) ? 1 : 0) + (x == y ? 1 : 0) + (lt(y, x) ? 1 : 0);
      if (holds != 1)
        problems.push_back("not exactly one relation at " + std::to_string(j) + "," +
                           std::to_string(k));
      Cmp expected = j < k ? Cmp::less : j == k ? Cmp::equal : Cmp::greater;
      if (compare(x, y) != expected)
        problems.push_back("compare disagrees with the integers at " + std::to_string(j) + "," +
                           std::to_string(k));
    }
}

void criterion_structure(std::vector<std::string>& problems) {
  Alpha a = default_alpha();
  for (std::uint64_t n = 0; n <= 12; ++n) {
    Nat s = from_int(n, a);
    if (s.value().width() != n + 2)
      problems.push_back("member count of " + std::to_string(n) + " is " +
                         std::to_string(s.value().width()));
    if (!is_transitive(s.value()))
      problems.push_back(std::to_string(n) + " is not transitive");
    for (const Obj& x : s.value().members())
      if (!is_transitive(x))
        problems.push_back("member " + to_string(x) + " of " + std::to_string(n) +
                           " is not transitive");
  }
}

void criterion_regularity(std::vector<std::string>& problems) {
  std::vector<Obj> universe = check::enumerate_objects(check::UniverseSpec{});
  for (const Obj& s : universe) {
    if (s.is_individual()) continue;
    bool has_set = false;
    for (const Obj& v : s.members())
      if (v.is_set()) { has_set = true; break; }
    if (!has_set) continue;
    if (is_transitive(s)) {
      bool found = false;
      for (const Obj& w : s.members()) {
        if (!w.is_set()) continue;
        bool all_individuals = true;
        for (const Obj& z : w.members())
          if (!member(z, z)) { all_individuals = false; break; }
        if (all_individuals) { found = true; break; }
      }
      if (!found) problems.push_back("no set of individuals inside " + to_string(s));
    }
    Obj v = regularity_witness(s);
    if (!member(v, s) || !v.is_set())
      problems.push_back("witness of " + to_string(s) + " is not a set member");
    for (const Obj& u : s.members())
      if (u.is_set() && member(u, v))
        problems.push_back("witness of " + to_string(s) + " is not minimal");
  }
}

void criterion_ordinals(std::vector<std::string>& problems) {
  for (std::uint64_t k = 1; k <= 10; ++k) {
    if (!(add_nat_ord(k, omega()) == omega()))
      problems.push_back("absorption failed at " + std::to_string(k));
    SymOrd right = add_ord_nat(omega(), k);
    if (!(right == SymOrd{1, k}) || right == omega())
      problems.push_back("right addition failed at " + std::to_string(k));
    if (add_nat_ord(k, omega()) == add_ord_nat(omega(), k))
      problems.push_back("commutativity appeared at " + std::to_string(k));
  }
  for (std::uint64_t m = 0; m <= 3; ++m)
    for (std::uint64_t n = 0; n <= 10; ++n)
      if (is_ordinal_first_omega(SymOrd{m, n}) != (m == 1))
        problems.push_back("recognizer wrong at ω·" + std::to_string(m) + "+" +
                           std::to_string(n));
}

void criterion_dsl(const std::string& cli, const std::string& golden_dir,
                   std::vector<std::string>& problems) {
  std::string input = read_file(golden_dir + "/repl_session.in", problems);
  std::string expected = read_file(golden_dir + "/repl_session.expected", problems);
  if (!problems.empty()) return;
  dsl::Session session = dsl::Session::make_default();
  std::string replayed;
  std::istringstream lines(input);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    dsl::StepResult step = dsl::repl_step(session, line);
    replayed += step.output;
    replayed += "\n";
    if (step.quit) break;
  }
  if (count < 20) problems.push_back("transcript has fewer than 20 lines");
  if (replayed != expected) {
    problems.push_back("transcript drifted from the golden file");
    std::istringstream got(replayed), want(expected);
    std::string g, w;
    std::size_t lineno = 0;
    while (true) {
      bool has_g = static_cast<bool>(std::getline(got, g));
      bool has_w = static_cast<bool>(std::getline(want, w));
      ++lineno;
      if (!has_g && !has_w) break;
      if (g != w) {
        problems.push_back("first difference at line " + std::to_string(lineno) + ": got \"" +
                           g + "\", want \"" + w + "\"");
        break;
      }
    }
  }
  int code = 0;
  std::string out = run_cli(cli, "eval -e \"0 + 1\"", code);
  if (out != "1\n" || code != 0)
    problems.push_back("CLI eval printed \"" + out + "\" with exit " + std::to_string(code));
  out = run_cli(cli, "eval -e \"{}\"", code);
  if (code != 1) problems.push_back("empty set literal did not exit 1");
  try {
    dsl::parse(dsl::tokenize("{}"), {"p", "q"});
    problems.push_back("empty set literal parsed");
  } catch (const dsl::parse_error&) {
  }
}

void criterion_mutation(std::vector<std::string>& problems) {
  {
    Alpha a = default_alpha();
    Obj zero = a.value();
    Obj one = cup(zero, singleton(zero));
    check::KernelHooks hooks = check::KernelHooks::standard();
    hooks.successor = [zero, one](const Obj& x) {
      Obj base = (x == zero) ? one : x;
      return cup(base, singleton(base));
    };
    check::Report r = check::run_suite(check::Suite::peano, check::UniverseSpec{}, 10, hooks);
    bool caught = false;
    for (const auto& o : r.obligations)
      if (o.id == "successor_injective" && !o.passed && o.counterexample.has_value())
        caught = true;
    if (!caught) problems.push_back("broken successor injectivity went unnoticed");
  }
  {
    check::KernelHooks hooks = check::KernelHooks::standard();
    hooks.specification = [](const Obj& s, const Predicate& phi) {
      std::vector<Obj> kept;
      for (const Obj& u : s.members())
        if (phi(u)) kept.push_back(u);
      if (kept.empty()) return fault::unsafe_empty_set();
      return mk_set(kept);
    };
    check::Report r = check::run_suite(check::Suite::theorems, check::UniverseSpec{}, 6, hooks);
    bool caught = false;
    for (const auto& o : r.obligations)
      if (o.id == "axiom_specification" && !o.passed && o.counterexample.has_value())
        caught = true;
    if (!caught) problems.push_back("disabled no-empty-set guard went unnoticed");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: urset_acceptance <path-to-urset-cli> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  std::vector<Criterion> criteria = {
      {1, "peano suite: 5 obligations, >= 10 instances each, under 5 s", criterion_peano},
      {2, "recognizer equals the iterated-successor oracle on the default universe",
       criterion_recognizer},
      {3, "arithmetic: integer homomorphism over 0..8 plus the defining identities",
       criterion_arithmetic},
      {4, "trichotomy over 0..12 agrees with integer comparison", criterion_trichotomy},
      {5, "numbers: member count n+2, transitive sets of transitive members",
       criterion_structure},
      {6, "transitive sets contain a set of individuals; regularity witnesses are minimal",
       criterion_regularity},
      {7, "ordinals: absorption, right addition, exact first-number-omega recognition",
       criterion_ordinals},
      {8, "dsl: golden transcript replays byte-identically; CLI prints 1 for 0 + 1",
       [&](std::vector<std::string>& p) { criterion_dsl(cli, golden, p); }},
      {9, "mutations: broken successor and broken no-empty-set guard are caught",
       criterion_mutation},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::vector<std::string> problems;
    try {
      c.run(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    if (problems.empty()) {
      std::cout << "PASS  criterion " << c.id << ": " << c.title << "\n";
    } else {
      ++failures;
      std::cout << "FAIL  criterion " << c.id << ": " << c.title << "\n";
      for (const std::string& p : problems) std::cout << "      - " << p << "\n";
    }
  }
  if (failures == 0)
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " of " << criteria.size() << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
