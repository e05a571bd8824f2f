#pragma once

#include <string>
#include <vector>

namespace wfs {

/// A total function between the canonical finite sets {0..a-1} and {0..b-1}.
struct SetFunction {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<int> values;

  static SetFunction identity(int n) {
    SetFunction f{n, n, std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) f.values[static_cast<std::size_t>(i)] = i;
    return f;
  }

  int operator()(int x) const { return values[static_cast<std::size_t>(x)]; }

  bool well_formed() const;
  bool injective() const;
  bool surjective() const;
  bool domain_empty() const { return domain_size == 0; }

  /// `next` after this function; requires codomain_size == next.domain_size.
  SetFunction then(const SetFunction& next) const;

  /// e.g. "[0,0]:2->1"
  std::string name() const;

  friend bool operator==(const SetFunction&, const SetFunction&) = default;
  friend auto operator<=>(const SetFunction&, const SetFunction&) = default;
};

/// All functions {0..a-1} -> {0..b-1} in lexicographic order of the value vector.
std::vector<SetFunction> all_functions(int domain_size, int codomain_size);

}  // namespace wfs
