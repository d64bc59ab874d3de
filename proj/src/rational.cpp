#include "dvis/rational.hpp"

#include <stdexcept>

namespace dvis {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace dvis
