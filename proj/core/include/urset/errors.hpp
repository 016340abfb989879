#pragma once

#include <stdexcept>
#include <string>

namespace urset {

// Failure modes of kernel operations. Each corresponds to a clause of the
// theory (no empty set, specification needs a witness, the first number has
// no predecessor, ...) or to an input contract of the artifact.
enum class errc {
  invalid_name,           // empty or malformed atom identifier
  empty_set,              // attempt to build a set with no members
  no_witness,             // specification with no member satisfying the predicate
  not_a_set,              // set operation applied to an individual
  no_set_member,          // regularity asked of a set whose members are all individuals
  not_individuals,        // first number built from non-atoms
  equal_atoms,            // first number built from one atom ({p,p} = p)
  not_a_number,           // object fails the ordinal-number recognizer
  first_number,           // predecessor of the first number
  mixed_alpha,            // numbers from different atom universes combined
  no_number_member,       // smallest/greatest asked of a set without numbers
  non_number_set_member,  // smallest/greatest asked of a set with a non-number set member
  precondition_failed,    // an operation's stated premise does not hold
  not_finite,             // a transfinite ordinal where a natural was required
  budget_exceeded,        // enumeration would exceed the configured cap
  invalid_universe,       // malformed universe bounds
};

const char* errc_name(errc code) noexcept;

class kernel_error : public std::runtime_error {
public:
  kernel_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

}  // namespace urset
