#ifndef HZETA_CHECK_HPP
#define HZETA_CHECK_HPP

#include <string>
#include <vector>

namespace hzeta {

// Outcome of one exact identity verified over a range of indices.
struct CheckReport {
  struct Item {
    long index;
    bool pass;
  };

  std::string name;
  std::vector<Item> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  std::vector<long> failures() const {
    std::vector<long> out;
    for (const auto& it : items)
      if (!it.pass) out.push_back(it.index);
    return out;
  }
};

}  // namespace hzeta

#endif
