#include "urset/object.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "urset/fault_injection.hpp"

namespace urset {

namespace detail {

struct Node {
  bool individual = false;
  std::string name;          // individuals only
  std::vector<Obj> members;  // sets only, canonical order
  std::size_t depth = 0;
};

namespace {

struct SetKey {
  std::vector<const Node*> members;
  bool operator==(const SetKey&) const = default;
};

struct SetKeyHash {
  std::size_t operator()(const SetKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Node* m : k.members) {
      h ^= std::hash<const void*>{}(m);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// All canonical forms live here for the lifetime of the process; equal
// objects are represented exactly once, making equality pointer identity.
struct Interner {
  std::mutex mu;
  std::unordered_map<std::string, Obj> individuals;
  std::unordered_map<SetKey, Obj, SetKeyHash> sets;
};

Interner& interner() {
  static Interner table;
  return table;
}

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

struct Access {
  static Obj wrap(std::shared_ptr<const Node> node) { return Obj(std::move(node)); }

  static Obj intern_individual(std::string name) {
    Interner& t = interner();
    std::lock_guard lock(t.mu);
    auto it = t.individuals.find(name);
    if (it != t.individuals.end()) return it->second;
    auto node = std::make_shared<Node>();
    node->individual = true;
    node->name = name;
    node->depth = 0;
    Obj obj = wrap(std::move(node));
    t.individuals.emplace(std::move(name), obj);
    return obj;
  }

  // Members must already be sorted, deduplicated, and nonempty (the
  // fault-injection empty set is the one deliberate exception).
  static Obj intern_set(std::vector<Obj> members) {
    SetKey key;
    key.members.reserve(members.size());
    for (const Obj& m : members)
      key.members.push_back(static_cast<const Node*>(m.id()));
    Interner& t = interner();
    std::lock_guard lock(t.mu);
    auto it = t.sets.find(key);
    if (it != t.sets.end()) return it->second;
    auto node = std::make_shared<Node>();
    node->individual = false;
    std::size_t depth = 0;
    for (const Obj& m : members) depth = std::max(depth, m.depth() + 1);
    node->depth = std::max<std::size_t>(depth, 1);
    node->members = std::move(members);
    Obj obj = wrap(std::move(node));
    t.sets.emplace(std::move(key), obj);
    return obj;
  }

  static const Node& node(const Obj& o) { return *o.node_; }
};

}  // namespace detail

using detail::Access;

Obj::Obj(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

bool Obj::is_individual() const noexcept { return node_->individual; }

const std::string& Obj::name() const { return node_->name; }

std::span<const Obj> Obj::members() const { return node_->members; }

std::size_t Obj::width() const noexcept {
  return node_->individual ? 1 : node_->members.size();
}

std::size_t Obj::depth() const noexcept { return node_->depth; }

void fail(errc code, const std::string& what) { throw kernel_error(code, what); }

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_name: return "InvalidName";
    case errc::empty_set: return "EmptySet";
    case errc::no_witness: return "NoWitness";
    case errc::not_a_set: return "NotASet";
    case errc::no_set_member: return "NoSetMember";
    case errc::not_individuals: return "NotIndividuals";
    case errc::equal_atoms: return "EqualAtoms";
    case errc::not_a_number: return "NotANumber";
    case errc::first_number: return "FirstNumber";
    case errc::mixed_alpha: return "MixedAlpha";
    case errc::no_number_member: return "NoNumberMember";
    case errc::non_number_set_member: return "NonNumberSetMember";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::not_finite: return "NotFinite";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::invalid_universe: return "InvalidUniverse";
  }
  return "Unknown";
}

std::strong_ordering canonical_order(const Obj& a, const Obj& b) noexcept {
  if (a == b) return std::strong_ordering::equal;
  if (a.is_individual() != b.is_individual())
    return a.is_individual() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_individual()) return a.name() <=> b.name();
  auto ma = a.members();
  auto mb = b.members();
  if (ma.size() != mb.size()) return ma.size() <=> mb.size();
  for (std::size_t i = 0; i < ma.size(); ++i) {
    auto c = canonical_order(ma[i], mb[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Obj mk_individual(std::string_view name) {
  if (!detail::valid_identifier(name))
    fail(errc::invalid_name, "'" + std::string(name) + "' is not a valid atom name");
  return Access::intern_individual(std::string(name));
}

Obj mk_set(std::span<const Obj> elems) {
  if (elems.empty()) fail(errc::empty_set, "a set needs at least one member");
  std::vector<Obj> ms(elems.begin(), elems.end());
  std::sort(ms.begin(), ms.end(), CanonicalLess{});
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  if (ms.size() == 1 && ms.front().is_individual()) return ms.front();  // {p} = p
  return Access::intern_set(std::move(ms));
}

Obj mk_set(std::initializer_list<Obj> elems) {
  return mk_set(std::span<const Obj>(elems.begin(), elems.size()));
}

bool member(const Obj& u, const Obj& t) {
  if (t.is_individual()) return u == t;
  auto ms = t.members();
  auto it = std::lower_bound(ms.begin(), ms.end(), u, CanonicalLess{});
  return it != ms.end() && *it == u;
}

bool equal(const Obj& s, const Obj& t) noexcept { return s == t; }

bool subset(const Obj& s, const Obj& t) {
  if (s.is_individual()) return member(s, t);
  for (const Obj& u : s.members())
    if (!member(u, t)) return false;
  return true;
}

Obj pair(const Obj& s, const Obj& t) { return mk_set({s, t}); }

Obj singleton(const Obj& s) { return pair(s, s); }

Obj union_of(const Obj& s) {
  if (s.is_individual()) return s;  // ⋃p = p
  std::vector<Obj> out;
  for (const Obj& z : s.members()) {
    if (z.is_individual())
      out.push_back(z);
    else
      out.insert(out.end(), z.members().begin(), z.members().end());
  }
  return mk_set(out);
}

Obj cup(const Obj& s, const Obj& t) { return union_of(pair(s, t)); }

bool is_transitive(const Obj& s) { return subset(union_of(s), s); }

Obj specification(const Obj& s, const Predicate& phi) {
  if (s.is_individual())
    fail(errc::not_a_set, "specification applies to sets, not to the individual " + to_string(s));
  std::vector<Obj> kept;
  for (const Obj& u : s.members())
    if (phi(u)) kept.push_back(u);
  if (kept.empty())
    fail(errc::no_witness, "no member of " + to_string(s) + " satisfies the predicate");
  return mk_set(kept);
}

Obj regularity_witness(const Obj& s) {
  if (s.is_individual())
    fail(errc::not_a_set, "regularity applies to sets, not to the individual " + to_string(s));
  std::vector<Obj> candidates;
  for (const Obj& u : s.members())
    if (u.is_set()) candidates.push_back(u);
  if (candidates.empty())
    fail(errc::no_set_member, "every member of " + to_string(s) + " is an individual");
  // Descending walk: while some set member of s belongs to v, replace v by
  // it. Membership between canonical sets strictly decreases depth, so the
  // walk terminates.
  Obj v = candidates.front();
  for (;;) {
    const Obj* next = nullptr;
    for (const Obj& u : candidates) {
      if (member(u, v)) {
        next = &u;
        break;
      }
    }
    if (next == nullptr) return v;
    v = *next;
  }
}

std::string to_string(const Obj& o) {
  if (o.is_individual()) return o.name();
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Obj& m : o.members()) {
    if (!first) out << ", ";
    out << to_string(m);
    first = false;
  }
  out << '}';
  return out.str();
}

namespace fault {

Obj unsafe_empty_set() { return Access::intern_set({}); }

}  // namespace fault

}  // namespace urset
