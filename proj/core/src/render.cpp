#include <sstream>

#include "urset/dsl.hpp"

namespace urset::dsl {

namespace {

std::string render_ord_abbreviated(SymOrd b) {
  if (b.omega_coeff == 0) return std::to_string(b.offset);
  std::string out = "ω";
  if (b.omega_coeff > 1) out += "·" + std::to_string(b.omega_coeff);
  if (b.offset > 0) out += "+" + std::to_string(b.offset);
  return out;
}

std::string render_obj_abbreviated(const Obj& o, const Alpha& alpha) {
  if (is_number(o, alpha)) return std::to_string(o.width() - 2);
  if (o.is_individual()) return o.name();
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Obj& m : o.members()) {
    if (!first) out << ", ";
    out << render_obj_abbreviated(m, alpha);
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::string render(const Value& v, RenderMode mode, const Alpha& alpha) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const SymOrd* s = std::get_if<SymOrd>(&v))
    return mode == RenderMode::raw ? urset::to_string(*s) : render_ord_abbreviated(*s);
  const Obj& o = std::get<Obj>(v);
  return mode == RenderMode::raw ? urset::to_string(o) : render_obj_abbreviated(o, alpha);
}

}  // namespace urset::dsl
