#include "angw/tseries.hpp"

#include <sstream>

namespace angw {

std::string exponent_string(const Expo& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << ")";
  return os.str();
}

std::string TSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (int j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      os << "*t" << j;
      if (e[j] > 1) os << "^" << e[j];
    }
  }
  return os.str();
}

std::string ULaurent::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (p != 0) os << "*u^" << p;
  }
  return os.str();
}

}  // namespace angw
