#include "urset/repl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "urset/checker.hpp"

namespace urset::dsl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::string caret_block(std::string_view line, std::size_t column, const std::string& message) {
  std::ostringstream out;
  out << "error: " << message << "\n";
  out << "  " << line << "\n";
  out << "  " << std::string(std::min(column, line.size()), ' ') << "^";
  return out.str();
}

std::string command(Session& session, std::string_view line) {
  std::vector<std::string> words = split_words(line);
  const std::string& cmd = words.front();
  if (cmd == ":quit") return "";
  if (cmd == ":mode") {
    if (words.size() == 2 && words[1] == "raw") {
      session.mode = RenderMode::raw;
      return "mode: raw";
    }
    if (words.size() == 2 && words[1] == "abbr") {
      session.mode = RenderMode::abbreviated;
      return "mode: abbr";
    }
    return "error: usage: :mode raw|abbr";
  }
  if (cmd == ":atoms") {
    if (words.size() == 1) {
      std::string out = "atoms:";
      for (const std::string& a : session.atoms) out += " " + a;
      return out;
    }
    std::vector<std::string> names(words.begin() + 1, words.end());
    if (names.size() < 2) return "error: declare at least two atoms";
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) return "error: duplicate atom '" + names[i] + "'";
    try {
      Alpha alpha = first_number(mk_individual(names[0]), mk_individual(names[1]));
      session.atoms = names;
      session.alpha = alpha;
      session.env.clear();
    } catch (const kernel_error& ke) {
      return std::string("error: ") + ke.what();
    }
    std::string out = "atoms:";
    for (const std::string& a : session.atoms) out += " " + a;
    return out;
  }
  if (cmd == ":check") {
    if (words.size() != 2) return "error: usage: :check all|peano|theorems|arith|ordinal";
    auto suite = check::suite_from_name(words[1]);
    if (!suite) return "error: unknown suite '" + words[1] + "'";
    check::UniverseSpec spec;
    spec.atoms = session.atoms;
    try {
      check::Report report = check::run_suite(*suite, spec, 10);
      return check::summary_line(report);
    } catch (const kernel_error& ke) {
      return std::string("error: ") + errc_name(ke.code()) + ": " + ke.what();
    }
  }
  return "error: unknown command '" + cmd + "'";
}

}  // namespace

Session Session::make_default() {
  Obj p = mk_individual("p");
  Obj q = mk_individual("q");
  return Session{{"p", "q"}, first_number(p, q), {}, RenderMode::abbreviated};
}

StepResult repl_step(Session& session, std::string_view line) {
  std::string_view body = trim(line);
  if (body.empty() || body.front() == '#') return {"", false};
  if (body.front() == ':') {
    if (split_words(body).front() == ":quit") return {"", true};
    return {command(session, body), false};
  }
  try {
    std::vector<Token> tokens = tokenize(line);
    ExprPtr statement = parse_statement(tokens, session.atoms);
    Value value = eval(statement, session.env, session.alpha);
    if (const Let* let = std::get_if<Let>(&statement->node)) {
      session.env.insert_or_assign(let->name, value);
      return {let->name + " = " + render(value, session.mode, session.alpha), false};
    }
    return {render(value, session.mode, session.alpha), false};
  } catch (const dsl_error& de) {
    return {caret_block(line, de.span().begin, de.what()), false};
  } catch (const kernel_error& ke) {
    return {std::string("error: ") + errc_name(ke.code()) + ": " + ke.what(), false};
  }
}

}  // namespace urset::dsl
