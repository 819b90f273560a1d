#include "ccs/seed.hpp"

namespace ccs {

Vars seed_vars(const DynkinType& type, const std::vector<std::string>& frozen_names) {
  std::vector<std::string> names;
  names.reserve(type.rank + frozen_names.size());
  for (int i = 1; i <= type.rank; ++i) names.push_back("x" + std::to_string(i));
  for (const auto& f : frozen_names) names.push_back(f);
  return make_vars(std::move(names));
}

std::vector<std::string> principal_frozen_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

Seed initial_seed(ExchangeMatrix m, const std::vector<std::string>& frozen_names) {
  if (static_cast<int>(frozen_names.size()) != m.m())
    throw InternalError("initial_seed: frozen name count != coefficient rows");
  Seed s{std::move(m), {}, {}};
  Vars vars = seed_vars(s.matrix.type, frozen_names);
  for (int i = 0; i < s.matrix.n(); ++i) {
    s.cluster.push_back(Laurent::variable(vars, static_cast<size_t>(i)));
    s.labels.push_back(Label{0, i});
  }
  return s;
}

Seed Seed::mutated(int k) const {
  const int n = matrix.n(), m = matrix.m();
  const Vars& vars = cluster[0].vars();
  Laurent pos = Laurent::one(vars), neg = Laurent::one(vars);
  for (int i = 0; i < n + m; ++i) {
    int64_t e = matrix.entry(i, k);
    if (e == 0) continue;
    Laurent f = i < n ? cluster[i] : Laurent::variable(vars, static_cast<size_t>(i));
    if (e > 0)
      pos = pos * f.pow(static_cast<uint32_t>(e));
    else
      neg = neg * f.pow(static_cast<uint32_t>(-e));
  }
  Seed r = *this;
  r.matrix = matrix.mutated(k);
  r.cluster[k] = Laurent::divide_exact(pos + neg, cluster[k]);
  r.labels[k] = Label{-1, -1};
  return r;
}

}  // namespace ccs
