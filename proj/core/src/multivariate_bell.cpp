#include "dobinski/multivariate_bell.hpp"

#include <algorithm>
#include <functional>

namespace dobinski {

unsigned MultiplicityVector::total() const {
  unsigned s = 0;
  for (std::size_t j = 0; j < nu.size(); ++j) s += static_cast<unsigned>(j + 1) * nu[j];
  return s;
}

unsigned MultiplicityVector::parts() const {
  unsigned s = 0;
  for (unsigned v : nu) s += v;
  return s;
}

std::vector<MultiplicityVector> partitions_n_into_k(unsigned n, unsigned k) {
  if (k == 0 || k > n) throw std::invalid_argument("partitions_n_into_k: requires 1 <= k <= n");
  std::vector<MultiplicityVector> out;
  MultiplicityVector current{std::vector<unsigned>(n, 0)};

  // Place the k parts in nonincreasing order, largest part size first.
  std::function<void(unsigned, unsigned, unsigned)> place = [&](unsigned remaining, unsigned parts_left,
                                                                unsigned max_part) {
    if (parts_left == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    // Each remaining part is at least 1 and at most max_part.
    if (remaining < parts_left || remaining > parts_left * max_part) return;
    for (unsigned part = std::min(max_part, remaining - (parts_left - 1)); part >= 1; --part) {
      ++current.nu[part - 1];
      place(remaining - part, parts_left - 1, part);
      --current.nu[part - 1];
    }
  };
  place(n, k, n);
  std::sort(out.begin(), out.end());
  return out;
}

Integer partition_weight(const MultiplicityVector& mv) {
  Integer denom(1);
  for (std::size_t j = 0; j < mv.nu.size(); ++j) {
    if (mv.nu[j] == 0) continue;
    denom *= factorial(mv.nu[j]) * ipow(factorial(static_cast<unsigned>(j + 1)), mv.nu[j]);
  }
  return factorial(mv.total()) / denom;
}

}  // namespace dobinski
