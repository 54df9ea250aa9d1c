#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace aaco {

// Subsets of the ground set {1..n} as bit masks: bit (i-1) <=> position i.
// The canonical order of subsets is the numeric order of the masks.
using Mask = std::uint32_t;

inline constexpr int kDefaultGroundSetCap = 24;

// Current ground-set cap. Reads AACO_SUBSET_CAP from the environment on
// first use; set_ground_set_cap overrides it for the process.
int ground_set_cap();
void set_ground_set_cap(int cap);

inline int set_size(Mask x) { return std::popcount(x); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool contains(Mask x, int pos) { return (x >> (pos - 1)) & 1u; }

inline Mask with_element(Mask x, int pos) { return x | (Mask{1} << (pos - 1)); }

inline Mask without_element(Mask x, int pos) { return x & ~(Mask{1} << (pos - 1)); }

inline Mask singleton(int pos) { return Mask{1} << (pos - 1); }

// 1-based positions of the set bits, ascending.
std::vector<int> elements(Mask x);

// "{1,3}" rendering; "{}" for the empty set.
std::string mask_to_string(Mask x);

// Visits every subset of x (including 0 and x itself) in ascending mask
// order. f may return void or bool; returning false stops the walk.
template <typename F>
void for_each_subset(Mask x, F&& f) {
  Mask s = 0;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(Mask{})), bool>) {
      if (!f(s)) return;
    } else {
      f(s);
    }
    if (s == x) return;
    s = (s - x) & x;
  }
}

// Visits every size-k index combination out of {0..n-1} in lexicographic
// order. f receives a const std::vector<int>&. Returning false stops.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(idx)), bool>) {
      if (!f(idx)) return;
    } else {
      f(idx);
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// C(n, k) saturated at `cap` so callers can budget-check without overflow.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

}  // namespace aaco
