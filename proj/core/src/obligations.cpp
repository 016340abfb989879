#include <algorithm>
#include <random>
#include <sstream>

#include "urset/checker.hpp"

namespace urset::check {

namespace {

// Shared context for one suite run: the enumerated universe (optionally
// shuffled by the seed), the first number, and the numbers 0..max_n.
struct Ctx {
  const KernelHooks& hooks;
  int max_n;
  std::vector<Obj> universe;
  std::vector<Obj> sets;
  std::vector<Obj> individuals;
  Alpha alpha;
  std::vector<Nat> nats;

  Ctx(const UniverseSpec& spec, int n, const KernelHooks& h, std::uint64_t seed)
      : hooks(h),
        max_n(n),
        universe(enumerate_objects(spec)),
        alpha(first_number(mk_individual(spec.atoms[0]), mk_individual(spec.atoms[1]))) {
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::shuffle(universe.begin(), universe.end(), rng);
    }
    for (const Obj& o : universe) (o.is_set() ? sets : individuals).push_back(o);
    nats.reserve(static_cast<std::size_t>(max_n) + 1);
    nats.push_back(from_int(0, alpha));
    for (int k = 1; k <= max_n; ++k) nats.push_back(succ(nats.back()));
  }

  const Obj& nat(int k) const { return nats[static_cast<std::size_t>(k)].value(); }
};

// Accumulates one obligation: counts instances and keeps the first
// counterexample. Checking stops once a counterexample is recorded.
class Check {
public:
  Check(std::string id, std::string anchor, std::string description)
      : ob_{std::move(id), std::move(anchor), std::move(description), 0, true, std::nullopt} {}

  bool ok() const { return ob_.passed; }

  template <typename Witness>
  void instance(bool holds, Witness&& witness) {
    if (!ob_.passed) return;
    ++ob_.instances;
    if (!holds) {
      ob_.passed = false;
      ob_.counterexample = witness();
    }
  }

  Obligation take() { return std::move(ob_); }

private:
  Obligation ob_;
};

// -------------------------------------------------------------------------
// peano

std::vector<Obligation> induction_battery(const Ctx& c, const char* id) {
  struct Case {
    const char* label;
    int start;  // S; T ranges over start+1 .. max_n
    Predicate phi;
  };
  const Alpha& a = c.alpha;
  std::vector<Case> battery;
  battery.push_back({"X is a number", 0, [a](const Obj& x) { return is_number(x, a); }});
  battery.push_back({"α ∈ X", 1, [a](const Obj& x) { return member(a.value(), x); }});
  battery.push_back({"X has at least four members", 2,
                     [](const Obj& x) { return x.is_set() && x.width() >= 4; }});
  battery.push_back({"X is transitive", 0, [](const Obj& x) { return is_transitive(x); }});

  Check check(id,
              "Φ(S) ∧ ∀X(X ∉ S ∧ X ∈ T ∧ Φ(X) → Φ(X∪{X})) → Φ(T)",
              "battery of formulas with S < T ≤ max_n for which both premises hold");
  for (const Case& cs : battery) {
    for (int t = cs.start + 1; t <= c.max_n && check.ok(); ++t) {
      std::string note;
      bool holds = true;
      try {
        InductionReport r = induction_check(c.nats[static_cast<std::size_t>(cs.start)],
                                            c.nats[static_cast<std::size_t>(t)], cs.phi);
        if (r.theorem_violation) {
          holds = false;
          note = "premises hold but the conclusion fails";
        }
      } catch (const kernel_error& ke) {
        holds = false;
        note = ke.what();
      }
      check.instance(holds, [&] {
        return std::string("Φ = \"") + cs.label + "\", S = " + std::to_string(cs.start) +
               ", T = " + std::to_string(t) + ": " + note;
      });
    }
  }
  std::vector<Obligation> out;
  out.push_back(check.take());
  return out;
}

}  // namespace

std::vector<Obligation> peano_obligations(const UniverseSpec& spec, int max_n,
                                          const KernelHooks& hooks, std::uint64_t seed) {
  Ctx c(spec, max_n, hooks, seed);
  std::vector<Obligation> out;

  {
    Check check("first_number", "α is a number, and α ∈ S for every number S ≠ α",
                "S ranges over the numbers 1..max_n");
    check.instance(is_number(c.alpha.value(), c.alpha),
                   [&] { return "α = " + to_string(c.alpha.value()) + " fails the recognizer"; });
    for (int k = 1; k <= c.max_n && check.ok(); ++k)
      check.instance(member(c.alpha.value(), c.nat(k)),
                     [&] { return "α ∉ S for S = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("successor_closure", "the successor S ∪ {S} of a number is a number",
                "S ranges over the numbers 0..max_n");
    for (int k = 0; k <= c.max_n && check.ok(); ++k)
      check.instance(is_number(c.hooks.successor(c.nat(k)), c.alpha),
                     [&] { return "S = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("first_not_successor", "S ∪ {S} ≠ α for every number S",
                "S ranges over the numbers 0..max_n");
    for (int k = 0; k <= c.max_n && check.ok(); ++k)
      check.instance(!c.hooks.equal(c.hooks.successor(c.nat(k)), c.alpha.value()),
                     [&] { return "S = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("successor_injective", "S ∪ {S} = U ∪ {U} → S = U",
                "S, U range over the numbers 0..max_n");
    for (int j = 0; j <= c.max_n && check.ok(); ++j)
      for (int k = 0; k <= c.max_n && check.ok(); ++k)
        check.instance(!c.hooks.equal(c.hooks.successor(c.nat(j)), c.hooks.successor(c.nat(k))) ||
                           c.hooks.equal(c.nat(j), c.nat(k)),
                       [&] {
                         return "S = " + std::to_string(j) + ", U = " + std::to_string(k) +
                                " share a successor";
                       });
    out.push_back(check.take());
  }
  for (Obligation& o : induction_battery(c, "induction")) out.push_back(std::move(o));
  return out;
}

// -------------------------------------------------------------------------
// theorems

std::vector<Obligation> theorems_obligations(const UniverseSpec& spec, int max_n,
                                             const KernelHooks& hooks, std::uint64_t seed) {
  Ctx c(spec, max_n, hooks, seed);
  std::vector<Obligation> out;
  const std::vector<Obj>& U = c.universe;

  {
    Check check("no_empty_object", "∀t ∃u: u ∈ t", "t ranges over the enumerated universe");
    for (const Obj& t : U) {
      if (!check.ok()) break;
      bool found = false;
      for (const Obj& u : U)
        if (member(u, t)) { found = true; break; }
      check.instance(found, [&] { return "t = " + to_string(t) + " has no member"; });
    }
    out.push_back(check.take());
  }
  {
    Check check("axiom_individuals", "s ∈ p ∧ p ∈ p → s = p",
                "p, s range over the enumerated universe");
    for (const Obj& p : U) {
      if (!check.ok()) break;
      bool self = member(p, p);
      for (const Obj& s : U) {
        if (!check.ok()) break;
        check.instance(!(self && member(s, p)) || c.hooks.equal(s, p), [&] {
          return "s = " + to_string(s) + ", p = " + to_string(p);
        });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("axiom_substitution", "s = t ∧ t ∈ v → s ∈ v",
                "s, t, v range over the enumerated universe");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      for (const Obj& t : U) {
        if (!check.ok()) break;
        bool eq = c.hooks.equal(s, t);
        for (const Obj& v : U) {
          if (!check.ok()) break;
          check.instance(!(eq && member(t, v)) || member(s, v), [&] {
            return "s = " + to_string(s) + ", t = " + to_string(t) + ", v = " + to_string(v);
          });
        }
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("axiom_pairs", "∀u: u ∈ {s,t} ↔ u = s ∨ u = t",
                "s, t range over the universe; u over the universe inside each instance");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      for (const Obj& t : U) {
        if (!check.ok()) break;
        Obj v = pair(s, t);
        const Obj* bad = nullptr;
        for (const Obj& u : U) {
          bool lhs = member(u, v);
          bool rhs = c.hooks.equal(u, s) || c.hooks.equal(u, t);
          if (lhs != rhs) { bad = &u; break; }
        }
        check.instance(bad == nullptr, [&] {
          return "s = " + to_string(s) + ", t = " + to_string(t) + ", u = " + to_string(*bad);
        });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("axiom_union", "∀u: u ∈ ⋃s ↔ ∃z(z ∈ s ∧ u ∈ z)",
                "s ranges over the universe; u over the universe inside each instance");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      Obj v = union_of(s);
      const Obj* bad = nullptr;
      for (const Obj& u : U) {
        bool lhs = member(u, v);
        bool rhs = false;
        if (s.is_individual()) {
          rhs = member(u, s);  // the only z ∈ p is p itself
        } else {
          for (const Obj& z : s.members())
            if (member(u, z)) { rhs = true; break; }
        }
        if (lhs != rhs) { bad = &u; break; }
      }
      check.instance(bad == nullptr,
                     [&] { return "s = " + to_string(s) + ", u = " + to_string(*bad); });
    }
    out.push_back(check.take());
  }
  {
    Check check("cup_members", "u ∈ s ∪ t ↔ u ∈ s ∨ u ∈ t",
                "s, t range over the universe; u over the universe inside each instance");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      for (const Obj& t : U) {
        if (!check.ok()) break;
        Obj v = cup(s, t);
        const Obj* bad = nullptr;
        for (const Obj& u : U)
          if (member(u, v) != (member(u, s) || member(u, t))) { bad = &u; break; }
        check.instance(bad == nullptr, [&] {
          return "s = " + to_string(s) + ", t = " + to_string(t) + ", u = " + to_string(*bad);
        });
      }
    }
    out.push_back(check.take());
  }
  {
    struct NamedPred {
      const char* label;
      Predicate phi;
    };
    std::vector<NamedPred> battery = {
        {"u is a set", [](const Obj& u) { return u.is_set(); }},
        {"u is an individual", [](const Obj& u) { return u.is_individual(); }},
        {"u is transitive", [](const Obj& u) { return is_transitive(u); }},
        {"always true", [](const Obj&) { return true; }},
        {"u has at least two members", [](const Obj& u) { return u.width() >= 2; }},
    };
    Check check("axiom_specification",
                "∃u(u ∈ s ∧ Φ(u)) → ∃v ∀u(u ∈ v ↔ u ∈ s ∧ Φ(u))",
                "s ranges over the enumerated sets, Φ over a fixed battery of five formulas");
    for (const Obj& s : c.sets) {
      if (!check.ok()) break;
      for (const NamedPred& np : battery) {
        if (!check.ok()) break;
        bool witness = false;
        for (const Obj& u : s.members())
          if (np.phi(u)) { witness = true; break; }
        std::string note;
        bool holds = true;
        try {
          Obj v = c.hooks.specification(s, np.phi);
          if (!witness) {
            holds = false;
            note = "returned " + to_string(v) + " although no member satisfies Φ";
          } else if (v.is_set() && v.members().empty()) {
            holds = false;
            note = "returned an empty set";
          } else {
            for (const Obj& u : U) {
              bool lhs = member(u, v);
              bool rhs = member(u, s) && np.phi(u);
              if (lhs != rhs) {
                holds = false;
                note = "membership differs at u = " + to_string(u);
                break;
              }
            }
          }
        } catch (const kernel_error& ke) {
          if (ke.code() != errc::no_witness) {
            holds = false;
            note = std::string("unexpected error: ") + ke.what();
          } else if (witness) {
            holds = false;
            note = "NoWitness although a member satisfies Φ";
          }
        }
        check.instance(holds, [&] {
          return "s = " + to_string(s) + ", Φ = \"" + np.label + "\": " + note;
        });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("axiom_regularity",
                "∃v(v ∈ s ∧ v ∉ v) → ∃v(v ∈ s ∧ v ∉ v ∧ ∀u(u ∈ s ∧ u ∉ u → u ∉ v))",
                "s ranges over the enumerated sets; sets without set members must refuse");
    for (const Obj& s : c.sets) {
      if (!check.ok()) break;
      bool has_set_member = false;
      for (const Obj& u : s.members())
        if (u.is_set()) { has_set_member = true; break; }
      std::string note;
      bool holds = true;
      try {
        Obj v = regularity_witness(s);
        if (!has_set_member) {
          holds = false;
          note = "produced a witness although every member is an individual";
        } else if (!member(v, s) || !v.is_set()) {
          holds = false;
          note = "witness " + to_string(v) + " is not a set member of s";
        } else {
          for (const Obj& u : s.members()) {
            if (u.is_set() && member(u, v)) {
              holds = false;
              note = "witness " + to_string(v) + " contains the set member " + to_string(u);
              break;
            }
          }
        }
      } catch (const kernel_error& ke) {
        if (ke.code() != errc::no_set_member) {
          holds = false;
          note = std::string("unexpected error: ") + ke.what();
        } else if (has_set_member) {
          holds = false;
          note = "NoSetMember although s has a set member";
        }
      }
      check.instance(holds, [&] { return "s = " + to_string(s) + ": " + note; });
    }
    out.push_back(check.take());
  }
  {
    Check check("prop_individual_vs_set", "p ∈ p ∧ s ∉ s → p ≠ s ∧ s ∉ p",
                "p, s range over the enumerated universe");
    for (const Obj& p : U) {
      if (!check.ok()) break;
      bool self = member(p, p);
      for (const Obj& s : U) {
        if (!check.ok()) break;
        bool premise = self && !member(s, s);
        check.instance(!premise || (!c.hooks.equal(p, s) && !member(s, p)), [&] {
          return "p = " + to_string(p) + ", s = " + to_string(s);
        });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("prop_sole_member", "p ∈ p ∧ ∀u(u ∈ v → u = p) → v = p",
                "p ranges over the individuals, v over the universe; u over the universe");
    for (const Obj& p : c.individuals) {
      if (!check.ok()) break;
      for (const Obj& v : U) {
        if (!check.ok()) break;
        bool all_members_p = true;
        for (const Obj& u : U)
          if (member(u, v) && !c.hooks.equal(u, p)) { all_members_p = false; break; }
        check.instance(!(member(p, p) && all_members_p) || c.hooks.equal(v, p), [&] {
          return "p = " + to_string(p) + ", v = " + to_string(v);
        });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("prop_pair_distinct", "u = {s,t} ∧ s ≠ t → u ∉ u",
                "s, t range over the enumerated universe");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      for (const Obj& t : U) {
        if (!check.ok()) break;
        Obj u = pair(s, t);
        check.instance(s == t || !member(u, u),
                       [&] { return "s = " + to_string(s) + ", t = " + to_string(t); });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("prop_individual_closure", "p ∈ p → p ⊆ p ∧ ⋃p = p ∧ {p} = p",
                "p ranges over the enumerated universe");
    for (const Obj& p : U) {
      if (!check.ok()) break;
      bool holds = !member(p, p) ||
                   (subset(p, p) && union_of(p) == p && singleton(p) == p);
      check.instance(holds, [&] { return "p = " + to_string(p); });
    }
    out.push_back(check.take());
  }
  {
    Check check("prop_set_closure", "s ∉ s → s ⊆ s ∧ ⋃s ∉ ⋃s ∧ {s} ∉ {s}",
                "s ranges over the enumerated universe");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      bool holds = true;
      if (!member(s, s)) {
        Obj u = union_of(s);
        Obj g = singleton(s);
        holds = subset(s, s) && !member(u, u) && !member(g, g);
      }
      check.instance(holds, [&] { return "s = " + to_string(s); });
    }
    out.push_back(check.take());
  }
  {
    Check check("transitive_pair_of_atoms", "p ∈ p ∧ q ∈ q → {p,q} is transitive",
                "p, q range over the individuals");
    for (const Obj& p : c.individuals) {
      if (!check.ok()) break;
      for (const Obj& q : c.individuals) {
        if (!check.ok()) break;
        check.instance(is_transitive(pair(p, q)),
                       [&] { return "p = " + to_string(p) + ", q = " + to_string(q); });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("singleton_of_set_not_transitive", "v ∉ v → {v} is not transitive",
                "v ranges over the enumerated sets");
    for (const Obj& v : c.sets) {
      if (!check.ok()) break;
      check.instance(!is_transitive(singleton(v)), [&] { return "v = " + to_string(v); });
    }
    out.push_back(check.take());
  }
  {
    Check check("equality_extensional", "s = t ↔ ∀u(u ∈ s ↔ u ∈ t)",
                "s, t range over the universe; u over the universe inside each instance");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      for (const Obj& t : U) {
        if (!check.ok()) break;
        bool same_members = true;
        for (const Obj& u : U)
          if (member(u, s) != member(u, t)) { same_members = false; break; }
        check.instance(c.hooks.equal(s, t) == same_members,
                       [&] { return "s = " + to_string(s) + ", t = " + to_string(t); });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("equality_equivalence", "s = s; s = t → t = s; s = t ∧ t = v → s = v",
                "s, t range over the universe; v joins when the premises hold");
    for (const Obj& s : U) {
      if (!check.ok()) break;
      check.instance(c.hooks.equal(s, s), [&] { return "s = " + to_string(s); });
    }
    for (const Obj& s : U) {
      if (!check.ok()) break;
      for (const Obj& t : U) {
        if (!check.ok()) break;
        bool st = c.hooks.equal(s, t);
        check.instance(!st || c.hooks.equal(t, s),
                       [&] { return "s = " + to_string(s) + ", t = " + to_string(t); });
        if (!st || !check.ok()) continue;
        for (const Obj& v : U) {
          if (!check.ok()) break;
          check.instance(!c.hooks.equal(t, v) || c.hooks.equal(s, v), [&] {
            return "s = " + to_string(s) + ", t = " + to_string(t) + ", v = " + to_string(v);
          });
        }
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("set_of_individuals_member",
                "v ∈ s ∧ v ∉ v ∧ ⋃s ⊆ s → ∃w(w ∈ s ∧ w ∉ w ∧ ∀z(z ∈ w → z ∈ z))",
                "s ranges over the enumerated transitive sets containing a set");
    for (const Obj& s : c.sets) {
      if (!check.ok()) break;
      bool has_set = false;
      for (const Obj& v : s.members())
        if (v.is_set()) { has_set = true; break; }
      if (!has_set || !is_transitive(s)) continue;
      bool found = false;
      for (const Obj& w : s.members()) {
        if (!w.is_set()) continue;
        bool all_individuals = true;
        for (const Obj& z : w.members())
          if (!member(z, z)) { all_individuals = false; break; }
        if (all_individuals) { found = true; break; }
      }
      check.instance(found, [&] { return "s = " + to_string(s); });
    }
    out.push_back(check.take());
  }
  {
    Check check("successor_of_number", "the successor S ∪ {S} of a number is a number",
                "S ranges over the numbers 0..max_n");
    for (int k = 0; k <= c.max_n && check.ok(); ++k)
      check.instance(is_number(c.hooks.successor(c.nat(k)), c.alpha),
                     [&] { return "S = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("members_are_numbers", "X ∈ S ∧ X ∉ α → X is a number",
                "S ranges over the numbers 0..max_n, X over the members of S");
    for (int k = 0; k <= c.max_n && check.ok(); ++k) {
      for (const Obj& x : c.nat(k).members()) {
        if (!check.ok()) break;
        check.instance(member(x, c.alpha.value()) || is_number(x, c.alpha), [&] {
          return "S = " + std::to_string(k) + ", X = " + to_string(x);
        });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("subset_dichotomy", "S ⊆ T → S ∈ T ∨ S = T",
                "S, T range over the numbers 0..max_n");
    for (int j = 0; j <= c.max_n && check.ok(); ++j)
      for (int k = 0; k <= c.max_n && check.ok(); ++k) {
        bool holds = !subset(c.nat(j), c.nat(k)) || member(c.nat(j), c.nat(k)) ||
                     c.hooks.equal(c.nat(j), c.nat(k));
        check.instance(holds,
                       [&] { return "S = " + std::to_string(j) + ", T = " + std::to_string(k); });
      }
    out.push_back(check.take());
  }
  {
    Check check("trichotomy", "exactly one of S ∈ T, S = T, T ∈ S",
                "S, T range over the numbers 0..max_n");
    for (int j = 0; j <= c.max_n && check.ok(); ++j)
      for (int k = 0; k <= c.max_n && check.ok(); ++k) {
        int holds = (member(c.nat(j), c.nat(k)) ? 1 : 0) +
                    (c.hooks.equal(c.nat(j), c.nat(k)) ? 1 : 0) +
                    (member(c.nat(k), c.nat(j)) ? 1 : 0);
        check.instance(holds == 1,
                       [&] { return "S = " + std::to_string(j) + ", T = " + std::to_string(k); });
      }
    out.push_back(check.take());
  }
  {
    Check check("union_is_greatest", "a number ∈ V ∧ V ⊆ S → ⋃V is the greatest number in V",
                "V ranges over the nonempty subsets of the members of S = max_n that contain a number");
    const Obj& s_max = c.nat(c.max_n);
    std::span<const Obj> pool = s_max.members();
    const std::size_t n = pool.size();
    for (std::uint64_t mask = 1; mask < (1ull << n) && check.ok(); ++mask) {
      std::vector<Obj> elems;
      bool has_number = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1ull << i)) {
          elems.push_back(pool[i]);
          if (pool[i].is_set()) has_number = true;  // set members of S are numbers
        }
      }
      if (!has_number) continue;
      Obj v = mk_set(elems);
      Obj z = union_of(v);
      bool holds = member(z, v);
      if (holds)
        for (const Obj& u : v.members())
          if (member(z, u)) { holds = false; break; }
      if (holds) holds = greatest_number(v, c.alpha).value() == z;
      check.instance(holds, [&] { return "V = " + to_string(v); });
    }
    out.push_back(check.take());
  }
  for (Obligation& o : induction_battery(c, "induction_principle")) out.push_back(std::move(o));
  {
    Check check("addition_closure", "a + b is a number",
                "a, b range over the numbers 0..max_n");
    for (int j = 0; j <= c.max_n && check.ok(); ++j)
      for (int k = 0; k <= c.max_n && check.ok(); ++k) {
        Obj sum = add(c.nats[static_cast<std::size_t>(j)], c.nats[static_cast<std::size_t>(k)]).value();
        check.instance(is_number(sum, c.alpha),
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
      }
    out.push_back(check.take());
  }
  {
    Check check("monotone_successor", "X ∈ S → X ∪ {X} ∈ S ∪ {S}",
                "S ranges over the numbers 0..max_n, X over the members of S");
    for (int k = 0; k <= c.max_n && check.ok(); ++k) {
      Obj succ_s = c.hooks.successor(c.nat(k));
      for (const Obj& x : c.nat(k).members()) {
        if (!check.ok()) break;
        check.instance(member(c.hooks.successor(x), succ_s), [&] {
          return "S = " + std::to_string(k) + ", X = " + to_string(x);
        });
      }
    }
    out.push_back(check.take());
  }
  {
    Check check("recognizer_extension",
                "the recognizer accepts exactly the iterated successors of α within bounds",
                "oracle: the successor chain from α while depth and width stay in bounds; "
                "compared against is_number over the whole universe");
    std::vector<Obj> chain;
    Obj x = c.alpha.value();
    while (x.depth() <= static_cast<std::size_t>(spec.max_rank) &&
           x.width() <= static_cast<std::size_t>(spec.max_width)) {
      chain.push_back(x);
      x = cup(x, singleton(x));
    }
    for (const Obj& o : U) {
      if (!check.ok()) break;
      bool in_chain = std::find(chain.begin(), chain.end(), o) != chain.end();
      check.instance(is_number(o, c.alpha) == in_chain, [&] {
        return "object " + to_string(o) + (in_chain ? " rejected" : " accepted");
      });
    }
    out.push_back(check.take());
  }
  return out;
}

// -------------------------------------------------------------------------
// arith

std::vector<Obligation> arith_obligations(const UniverseSpec& spec, int max_n,
                                          const KernelHooks& hooks, std::uint64_t seed) {
  Ctx c(spec, max_n, hooks, seed);
  std::vector<Obligation> out;
  auto nat = [&](int k) -> const Nat& { return c.nats[static_cast<std::size_t>(k)]; };
  const int n = c.max_n;

  {
    Check check("first_is_least", "α < b for every number b ≠ α",
                "b ranges over the numbers 1..max_n");
    for (int k = 1; k <= n && check.ok(); ++k)
      check.instance(lt(nat(0), nat(k)) && !lt(nat(k), nat(0)),
                     [&] { return "b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("leq_consistency", "a ≤ b ↔ a < b ∨ a = b",
                "a, b range over the numbers 0..max_n");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k)
        check.instance(leq(nat(j), nat(k)) == (lt(nat(j), nat(k)) || nat(j) == nat(k)),
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("trichotomy_law", "exactly one of a < b, a = b, b < a",
                "a, b range over the numbers 0..max_n; compare must agree");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k) {
        int count = (lt(nat(j), nat(k)) ? 1 : 0) + (nat(j) == nat(k) ? 1 : 0) +
                    (lt(nat(k), nat(j)) ? 1 : 0);
        Cmp cmp = compare(nat(j), nat(k));
        bool agrees = (cmp == Cmp::less) == lt(nat(j), nat(k)) &&
                      (cmp == Cmp::equal) == (nat(j) == nat(k)) &&
                      (cmp == Cmp::greater) == lt(nat(k), nat(j));
        check.instance(count == 1 && agrees,
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
      }
    out.push_back(check.take());
  }
  {
    Check check("add_zero", "a + 0 = a", "a ranges over the numbers 0..max_n");
    for (int k = 0; k <= n && check.ok(); ++k)
      check.instance(add(nat(k), nat(0)) == nat(k), [&] { return "a = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("zero_plus_one", "0 + 1 = 1", "single instance");
    check.instance(add(nat(0), nat(1)) == nat(1), [&] { return std::string("0 + 1 ≠ 1"); });
    out.push_back(check.take());
  }
  {
    Check check("succ_is_plus_one", "a + 1 = a ∪ {a}", "a ranges over the numbers 0..max_n");
    for (int k = 0; k <= n && check.ok(); ++k)
      check.instance(add(nat(k), nat(1)).value() == cup(nat(k).value(), singleton(nat(k).value())),
                     [&] { return "a = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("mul_one", "a · 1 = 0 + a", "a ranges over the numbers 0..max_n");
    for (int k = 0; k <= n && check.ok(); ++k)
      check.instance(mul(nat(k), nat(1)) == add(nat(0), nat(k)),
                     [&] { return "a = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("zero_comm", "0 + b = b + 0", "b ranges over the numbers 0..max_n");
    for (int k = 0; k <= n && check.ok(); ++k)
      check.instance(add(nat(0), nat(k)) == add(nat(k), nat(0)),
                     [&] { return "b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("multiplication_closure", "a · b is a number",
                "a, b range over the numbers 0..max_n");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k)
        check.instance(is_number(mul(nat(j), nat(k)).value(), c.alpha),
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("add_int_oracle", "to_int(a + b) = to_int(a) + to_int(b)",
                "oracle cross-check over a, b in 0..max_n");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k)
        check.instance(to_int(add(nat(j), nat(k))) == static_cast<std::uint64_t>(j + k),
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("mul_int_oracle", "to_int(a · b) = to_int(a) · to_int(b)",
                "oracle cross-check over a, b in 0..max_n");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k)
        check.instance(to_int(mul(nat(j), nat(k))) == static_cast<std::uint64_t>(j * k),
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("add_assoc", "(a + b) + c = a + (b + c)",
                "bounded interpretation; a, b, c range over 0..max_n");
    for (int i = 0; i <= n && check.ok(); ++i)
      for (int j = 0; j <= n && check.ok(); ++j)
        for (int k = 0; k <= n && check.ok(); ++k)
          check.instance(add(add(nat(i), nat(j)), nat(k)) == add(nat(i), add(nat(j), nat(k))),
                         [&] {
                           return "a = " + std::to_string(i) + ", b = " + std::to_string(j) +
                                  ", c = " + std::to_string(k);
                         });
    out.push_back(check.take());
  }
  {
    Check check("add_comm", "a + b = b + a",
                "bounded interpretation; a, b range over 0..max_n");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k)
        check.instance(add(nat(j), nat(k)) == add(nat(k), nat(j)),
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    const int m = std::min(n, 8);
    Check check("mul_comm", "a · b = b · a",
                "bounded interpretation; a, b range over 0..min(max_n, 8)");
    for (int j = 0; j <= m && check.ok(); ++j)
      for (int k = 0; k <= m && check.ok(); ++k)
        check.instance(mul(nat(j), nat(k)) == mul(nat(k), nat(j)),
                       [&] { return "a = " + std::to_string(j) + ", b = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    const int m = std::min(n, 5);
    Check check("mul_assoc", "(a · b) · c = a · (b · c)",
                "bounded interpretation; a, b, c range over 0..min(max_n, 5)");
    for (int i = 0; i <= m && check.ok(); ++i)
      for (int j = 0; j <= m && check.ok(); ++j)
        for (int k = 0; k <= m && check.ok(); ++k)
          check.instance(mul(mul(nat(i), nat(j)), nat(k)) == mul(nat(i), mul(nat(j), nat(k))),
                         [&] {
                           return "a = " + std::to_string(i) + ", b = " + std::to_string(j) +
                                  ", c = " + std::to_string(k);
                         });
    out.push_back(check.take());
  }
  {
    const int m = std::min(n, 5);
    Check check("distributivity", "a · (b + c) = a·b + a·c",
                "bounded interpretation; a, b, c range over 0..min(max_n, 5)");
    for (int i = 0; i <= m && check.ok(); ++i)
      for (int j = 0; j <= m && check.ok(); ++j)
        for (int k = 0; k <= m && check.ok(); ++k)
          check.instance(mul(nat(i), add(nat(j), nat(k))) ==
                             add(mul(nat(i), nat(j)), mul(nat(i), nat(k))),
                         [&] {
                           return "a = " + std::to_string(i) + ", b = " + std::to_string(j) +
                                  ", c = " + std::to_string(k);
                         });
    out.push_back(check.take());
  }
  return out;
}

// -------------------------------------------------------------------------
// ordinal

std::vector<Obligation> ordinal_obligations(const UniverseSpec& spec, int max_n,
                                            const KernelHooks& hooks, std::uint64_t seed) {
  Ctx c(spec, max_n, hooks, seed);
  std::vector<Obligation> out;
  const int n = c.max_n;
  auto ord = [](std::uint64_t m, std::uint64_t off) { return SymOrd{m, off}; };

  {
    Check check("omega_is_first", "ω is an ordinal with first number ω, and ω = level 1",
                "the postulated ω itself");
    check.instance(is_ordinal_first_omega(omega()), [] { return std::string("ω rejected"); });
    check.instance(omega() == first_number_level(1),
                   [] { return std::string("ω differs from level 1"); });
    out.push_back(check.take());
  }
  {
    Check check("absorption", "n + β = β for transfinite β",
                "n ranges over 0..max_n, β over ω·m+j with m in 1..3, j in 0..max_n");
    for (int k = 0; k <= n && check.ok(); ++k)
      for (std::uint64_t m = 1; m <= 3 && check.ok(); ++m)
        for (int j = 0; j <= n && check.ok(); ++j) {
          SymOrd b = ord(m, static_cast<std::uint64_t>(j));
          check.instance(add_nat_ord(static_cast<std::uint64_t>(k), b) == b, [&] {
            return "n = " + std::to_string(k) + ", β = " + to_string(b);
          });
        }
    out.push_back(check.take());
  }
  {
    Check check("right_add_unfolds", "β + 0 = β and β + (n+1) = (β + n) + 1",
                "β ranges over ω·m+j with m in 1..3, j in 0..max_n; n over 0..max_n");
    for (std::uint64_t m = 1; m <= 3 && check.ok(); ++m)
      for (int j = 0; j <= n && check.ok(); ++j) {
        SymOrd b = ord(m, static_cast<std::uint64_t>(j));
        SymOrd folded = b;
        for (int k = 0; k <= n && check.ok(); ++k) {
          check.instance(add_ord_nat(b, static_cast<std::uint64_t>(k)) == folded, [&] {
            return "β = " + to_string(b) + ", n = " + std::to_string(k);
          });
          folded = succ_ord(folded);
        }
      }
    out.push_back(check.take());
  }
  {
    Check check("non_commutative", "n ≠ 0 → n + ω ≠ ω + n", "n ranges over 1..max_n");
    for (int k = 1; k <= n && check.ok(); ++k)
      check.instance(!(add_nat_ord(static_cast<std::uint64_t>(k), omega()) ==
                       add_ord_nat(omega(), static_cast<std::uint64_t>(k))),
                     [&] { return "n = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("omega_plus_n_is_ordinal", "ω + n is an ordinal number with first number ω",
                "n ranges over 0..max_n");
    for (int k = 0; k <= n && check.ok(); ++k)
      check.instance(is_ordinal_first_omega(add_ord_nat(omega(), static_cast<std::uint64_t>(k))),
                     [&] { return "n = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    Check check("first_omega_exactly",
                "β is an ordinal with first number ω ↔ β = ω + n for a natural n",
                "β ranges over ω·m+j with m in 0..3, j in 0..max_n");
    for (std::uint64_t m = 0; m <= 3 && check.ok(); ++m)
      for (int j = 0; j <= n && check.ok(); ++j) {
        SymOrd b = ord(m, static_cast<std::uint64_t>(j));
        bool reachable = b == add_ord_nat(omega(), b.offset);
        check.instance(is_ordinal_first_omega(b) == reachable,
                       [&] { return "β = " + to_string(b); });
      }
    out.push_back(check.take());
  }
  {
    Check check("embedding_coherence", "finite ordinals mirror the naturals",
                "j, k range over 0..max_n; addition and successor compared via the embedding");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k) {
        const Nat& a = c.nats[static_cast<std::size_t>(j)];
        const Nat& b = c.nats[static_cast<std::size_t>(k)];
        bool holds = add_nat_ord(a, from_nat(b)) == from_nat(add(a, b)) &&
                     succ_ord(from_nat(b)) == from_nat(succ(b));
        check.instance(holds,
                       [&] { return "j = " + std::to_string(j) + ", k = " + std::to_string(k); });
      }
    out.push_back(check.take());
  }
  {
    Check check("succ_injective_level1", "succ β = succ χ → β = χ at first number ω",
                "β, χ range over ω+j with j in 0..max_n");
    for (int j = 0; j <= n && check.ok(); ++j)
      for (int k = 0; k <= n && check.ok(); ++k) {
        SymOrd bj = add_ord_nat(omega(), static_cast<std::uint64_t>(j));
        SymOrd bk = add_ord_nat(omega(), static_cast<std::uint64_t>(k));
        check.instance(!(succ_ord(bj) == succ_ord(bk)) || bj == bk,
                       [&] { return "j = " + std::to_string(j) + ", k = " + std::to_string(k); });
      }
    out.push_back(check.take());
  }
  {
    Check check("omega_no_predecessor", "ω is not the successor of an ordinal with first number ω",
                "candidates ω+k with k in 0..max_n");
    for (int k = 0; k <= n && check.ok(); ++k)
      check.instance(!(succ_ord(add_ord_nat(omega(), static_cast<std::uint64_t>(k))) == omega()),
                     [&] { return "k = " + std::to_string(k); });
    out.push_back(check.take());
  }
  {
    struct OrdPred {
      const char* label;
      bool (*phi)(SymOrd);
    };
    const OrdPred battery[] = {
        {"has first number ω", [](SymOrd b) { return is_ordinal_first_omega(b); }},
        {"absorbs 5 on the left", [](SymOrd b) { return add_nat_ord(5, b) == b; }},
        {"successor stays at first number ω",
         [](SymOrd b) { return is_ordinal_first_omega(succ_ord(b)); }},
    };
    Check check("induction_transfer",
                "Φ(ω) ∧ ∀k<T(Φ(ω+k) → Φ(ω+k+1)) → Φ(ω+T), offsets bounded",
                "battery of three formulas; T ranges over 1..max_n");
    for (const OrdPred& p : battery) {
      for (int t = 1; t <= n && check.ok(); ++t) {
        bool base = p.phi(omega());
        bool steps = true;
        for (int k = 0; k < t && steps; ++k)
          steps = !p.phi(add_ord_nat(omega(), static_cast<std::uint64_t>(k))) ||
                  p.phi(add_ord_nat(omega(), static_cast<std::uint64_t>(k + 1)));
        bool conclusion = p.phi(add_ord_nat(omega(), static_cast<std::uint64_t>(t)));
        check.instance(!(base && steps) || conclusion, [&] {
          return std::string("Φ = \"") + p.label + "\", T = " + std::to_string(t);
        });
      }
    }
    out.push_back(check.take());
  }
  return out;
}

}  // namespace urset::check
