#include "wfs/set_function.hpp"

#include <stdexcept>

namespace wfs {

bool SetFunction::well_formed() const {
  if (domain_size < 0 || codomain_size < 0) return false;
  if (values.size() != static_cast<std::size_t>(domain_size)) return false;
  for (int v : values)
    if (v < 0 || v >= codomain_size) return false;
  return true;
}

bool SetFunction::injective() const {
  std::vector<bool> hit(static_cast<std::size_t>(codomain_size), false);
  for (int v : values) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool SetFunction::surjective() const {
  std::vector<bool> hit(static_cast<std::size_t>(codomain_size), false);
  int covered = 0;
  for (int v : values)
    if (!hit[static_cast<std::size_t>(v)]) {
      hit[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
  return covered == codomain_size;
}

SetFunction SetFunction::then(const SetFunction& next) const {
  if (codomain_size != next.domain_size) throw std::invalid_argument("SetFunction::then: endpoints do not match");
  SetFunction out{domain_size, next.codomain_size, {}};
  out.values.reserve(values.size());
  for (int v : values) out.values.push_back(next(v));
  return out;
}

std::string SetFunction::name() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  s += "]:" + std::to_string(domain_size) + "->" + std::to_string(codomain_size);
  return s;
}

std::vector<SetFunction> all_functions(int domain_size, int codomain_size) {
  std::vector<SetFunction> out;
  if (codomain_size == 0 && domain_size > 0) return out;
  std::vector<int> v(static_cast<std::size_t>(domain_size), 0);
  while (true) {
    out.push_back(SetFunction{domain_size, codomain_size, v});
    int i = domain_size - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == codomain_size - 1) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace wfs
