#include "sabotage/names.hpp"

namespace sabotage {

void NameGenerator::reserve(const std::string& name) { used_.insert(name); }

std::string NameGenerator::fresh() {
  std::string name;
  do {
    name = "i" + std::to_string(next_++);
  } while (used_.contains(name));
  used_.insert(name);
  issued_.push_back(name);
  return name;
}

}  // namespace sabotage
