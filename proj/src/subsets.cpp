#include "flagpoly/subsets.hpp"

namespace flagpoly {

std::vector<int> elements_of(Subset a) {
  std::vector<int> out;
  for (int e = 0; a >> e; ++e)
    if ((a >> e) & 1u) out.push_back(e);
  return out;
}

Subset subset_of(const std::vector<int>& elems) {
  Subset a = 0;
  for (int e : elems) a |= Subset(1) << e;
  return a;
}

std::string subset_to_string(Subset a) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(a)) {
    if (!first) s += ",";
    s += std::to_string(e + 1);
    first = false;
  }
  s += "}";
  return s;
}

}  // namespace flagpoly
