#include "aaco/subsets.hpp"

#include <atomic>
#include <cstdlib>

namespace aaco {

namespace {

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap = [] {
    if (const char* env = std::getenv("AACO_SUBSET_CAP")) {
      int v = std::atoi(env);
      if (v >= 1 && v <= 31) return v;
    }
    return kDefaultGroundSetCap;
  }();
  return cap;
}

}  // namespace

int ground_set_cap() { return cap_storage().load(); }

void set_ground_set_cap(int cap) { cap_storage().store(cap); }

std::vector<int> elements(Mask x) {
  std::vector<int> out;
  out.reserve(set_size(x));
  for (int pos = 1; x != 0; ++pos, x >>= 1) {
    if (x & 1u) out.push_back(pos);
  }
  return out;
}

std::string mask_to_string(Mask x) {
  std::string out = "{";
  bool first = true;
  for (int pos : elements(x)) {
    if (!first) out += ',';
    out += std::to_string(pos);
    first = false;
  }
  out += '}';
  return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is exactly divisible by i; stays below cap * n
    result = result * (n - k + i) / i;
    if (result >= cap) return cap;
  }
  return result;
}

}  // namespace aaco
