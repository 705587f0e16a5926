#include "pixcat/rational.hpp"

#include <sstream>

namespace pixcat {

Rat parse_rat(const std::string& s) {
  auto bad = [&] { return input_error("bad rational literal: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rat(num, den);
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string fmt_rat(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

std::string fmt_ext(const ExtRat& e) {
  switch (e.kind) {
    case ExtRat::Kind::NegInf: return "-inf";
    case ExtRat::Kind::PosInf: return "+inf";
    default: return fmt_rat(e.value);
  }
}

std::string fmt_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += fmt_rat(p[i]);
  }
  return out + ")";
}

}  // namespace pixcat
