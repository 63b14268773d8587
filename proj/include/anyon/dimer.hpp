#pragma once

#include <map>
#include <memory>

#include "anyon/category.hpp"

namespace anyon {

enum class Side { A, B };

// Two anyons a, b with total-charge coefficient matrices [p^f], one per fusion
// channel f, each of shape N_ab^f x N_ab^f.
class DimerState {
 public:
  // Validates channels, shapes, Hermiticity, positivity and normalization.
  // A total trace within 1e-6 of one is rescaled to exactly one.
  static DimerState make(std::shared_ptr<const Category> cat, int a, int b, std::map<int, CMatrix> p);

  // Scalar channel weights promoted to 1x1 blocks.
  static DimerState from_weights(std::shared_ptr<const Category> cat, int a, int b,
                                 const std::map<int, double>& weights);

  const Category& category() const { return *cat_; }
  const std::shared_ptr<const Category>& category_ptr() const { return cat_; }
  int a() const { return a_; }
  int b() const { return b_; }
  const std::map<int, CMatrix>& blocks() const { return p_; }

  // Tr [p^f]; zero for channels absent from the map.
  double weight(int f) const;
  // N_ab^f <= 1 for every channel of a x b.
  bool multiplicity_free() const;

 private:
  DimerState() = default;
  std::shared_ptr<const Category> cat_;
  int a_ = 0;
  int b_ = 0;
  std::map<int, CMatrix> p_;
};

double aee(const DimerState& s);
double renyi_entropy(const DimerState& s, double n);
double reduced_entropy(const DimerState& s, Side side);
double mutual_information(const DimerState& s);
// Charge-line entanglement entropy; throws Unsupported with multiplicities.
double ace(const DimerState& s);

}  // namespace anyon
