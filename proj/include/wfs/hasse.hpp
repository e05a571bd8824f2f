#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace wfs {

/// Cover relation of the finite poset (elements, leq): pairs (i, j) with
/// i < j strictly and nothing strictly between. `leq` must be a partial order.
template <class T, class Leq>
std::vector<std::pair<std::size_t, std::size_t>> cover_edges(const std::vector<T>& elements, Leq leq) {
  const auto n = elements.size();
  auto lt = [&](std::size_t i, std::size_t j) { return i != j && leq(elements[i], elements[j]) && !leq(elements[j], elements[i]); };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (lt(i, k) && lt(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace wfs
