#pragma once

#include <memory>
#include <vector>

#include "anyon/builtin.hpp"
#include "anyon/dimer.hpp"
#include "support.hpp"

namespace testing {

using anyon::Category;
using anyon::DimerState;

inline std::vector<std::shared_ptr<const Category>> builtin_zoo() {
  std::vector<std::shared_ptr<const Category>> zoo;
  for (int nu : {1, 3, 5, 7, 9, 11, 13, 15}) zoo.push_back(std::make_shared<const Category>(anyon::ising(nu)));
  zoo.push_back(std::make_shared<const Category>(anyon::fibonacci()));
  for (int k : {2, 3, 4, 5, 6, 10}) zoo.push_back(std::make_shared<const Category>(anyon::su2_k(k)));
  zoo.push_back(std::make_shared<const Category>(anyon::su3_3_subtheory()));
  return zoo;
}

// Random valid dimer on a random pair (a, b) of non-vacuum labels: random
// channel weights and random full-rank blocks on multiplicity channels.
inline DimerState random_dimer(const std::shared_ptr<const Category>& cat, int a, int b) {
  std::vector<int> ch = cat->channels(a, b);
  std::vector<double> w(ch.size());
  double total = 0;
  for (double& x : w) total += (x = uniform(0.01, 1.0));
  std::map<int, CMatrix> blocks;
  for (std::size_t i = 0; i < ch.size(); ++i)
    blocks[ch[i]] = random_psd(cat->N(a, b, ch[i]), w[i] / total);
  return DimerState::make(cat, a, b, std::move(blocks));
}

inline DimerState random_dimer(const std::shared_ptr<const Category>& cat) {
  const int n = cat->size();
  int a = 1 + static_cast<int>(uniform() * (n - 1)), b = 1 + static_cast<int>(uniform() * (n - 1));
  a = std::min(a, n - 1);
  b = std::min(b, n - 1);
  return random_dimer(cat, a, b);
}

}  // namespace testing
