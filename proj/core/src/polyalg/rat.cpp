#include "steinberg/polyalg/rat.hpp"

#include "steinberg/errors.hpp"

namespace steinberg::polyalg {

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace steinberg::polyalg
