#include "angw/chains.hpp"

#include <sstream>

namespace angw {

std::string word_string(const BarWord& w) {
  std::ostringstream os;
  os << (w.head == Head::One ? "1" : "eps");
  os << "|eps^" << w.tail;
  return os.str();
}

std::string UChain::dump() const {
  std::ostringstream os;
  for (const auto& [k, c] : terms_)
    os << word_string(k.word) << " u^" << k.upow << " : " << c.to_string() << "\n";
  return os.str();
}

}  // namespace angw
