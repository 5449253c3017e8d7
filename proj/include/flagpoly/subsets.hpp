#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace flagpoly {

// Subsets of a ground set {0, ..., n-1} are bitmasks; element i is bit (1 << i).
using Subset = std::uint32_t;

inline int popcount(Subset a) { return std::popcount(a); }
inline bool contains(Subset a, int e) { return (a >> e) & 1u; }
inline Subset full_set(int n) { return n == 32 ? ~Subset(0) : ((Subset(1) << n) - 1); }
inline Subset with(Subset a, int e) { return a | (Subset(1) << e); }
inline Subset without(Subset a, int e) { return a & ~(Subset(1) << e); }

std::vector<int> elements_of(Subset a);
Subset subset_of(const std::vector<int>& elems);

// Iterates all subsets of `mask` (including 0 and mask itself) in increasing
// numeric order, calling fn(sub).
template <typename Fn>
void for_each_subset_of(Subset mask, Fn fn) {
  Subset sub = 0;
  while (true) {
    fn(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

// "{1,3,4}" with 1-based elements; "{}" for the empty set.
std::string subset_to_string(Subset a);

}  // namespace flagpoly
