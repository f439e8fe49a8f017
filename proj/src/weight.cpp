#include "sphecke/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace sphecke {

Weight parse_weight(const std::string& text) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight '" + text + "'");
    }
    for (std::size_t k = used; k < item.size(); ++k)
      if (item[k] != ' ') throw std::invalid_argument("bad weight '" + text + "'");
    c.push_back(x);
  }
  if (c.empty()) throw std::invalid_argument("empty weight");
  return Weight(std::move(c));
}

}  // namespace sphecke
