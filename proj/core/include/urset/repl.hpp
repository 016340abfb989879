#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "urset/dsl.hpp"

namespace urset::dsl {

// One interactive session: declared atoms, the first number built from the
// first two of them, name bindings, and the render mode.
struct Session {
  std::vector<std::string> atoms;
  Alpha alpha;
  Env env;
  RenderMode mode = RenderMode::abbreviated;

  static Session make_default();  // atoms {p, q}
};

struct StepResult {
  std::string output;  // no trailing newline; may itself contain newlines
  bool quit = false;
};

// Processes one line: an expression, `let name = expr`, or one of the
// commands :atoms, :mode, :check, :quit. Errors are reported in the output
// with a caret under the offending position; the session is left unchanged.
StepResult repl_step(Session& session, std::string_view line);

}  // namespace urset::dsl
