#pragma once

#include <set>
#include <string>
#include <vector>

namespace sabotage {

/// Issues nominal names i0, i1, ... skipping anything already reserved.
///
/// A generator is owned by a single run and is not thread-safe.
class NameGenerator {
 public:
  NameGenerator() = default;

  void reserve(const std::string& name);
  template <typename Range>
  void reserve_all(const Range& names) {
    for (const auto& n : names) reserve(n);
  }

  std::string fresh();

  bool is_used(const std::string& name) const { return used_.contains(name); }
  /// Names handed out by fresh(), in issue order.
  const std::vector<std::string>& issued() const { return issued_; }

 private:
  std::set<std::string> used_;
  std::vector<std::string> issued_;
  unsigned long next_ = 0;
};

}  // namespace sabotage
