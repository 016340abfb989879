#pragma once

#include "urset/object.hpp"

namespace urset::fault {

// Deliberately violates the no-empty-set invariant. Exists so the checker's
// mutation tests can prove that a broken guard is caught; never use it in
// product code paths.
Obj unsafe_empty_set();

}  // namespace urset::fault
