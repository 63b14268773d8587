#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "anyon/category.hpp"

namespace anyon {

// Quantum-group arithmetic at level k, q = exp(2 pi i/(k+2)).
class QContext {
 public:
  explicit QContext(int k);

  int k() const { return k_; }
  cplx q() const;
  // [n]_q = sin(n pi/(k+2)) / sin(pi/(k+2)); real for integer n.
  double qnumber(int n) const;
  long double qnumber_ld(int n) const { return qnum_.at(n); }
  long double qfactorial(int n) const { return qfact_.at(n); }

 private:
  int k_;
  std::vector<long double> qnum_;
  std::vector<long double> qfact_;
};

// Spins are passed doubled (2j). True when (a,b,c) is an admissible triple at
// level k: parity, triangle inequality and a+b+c <= 2k.
bool su2_admissible(int k, int a, int b, int c);

// q-deformed Racah 6j symbol {j1 j2 j12; j3 j j23}_q, doubled spins.
double q_6j(const QContext& ctx, int j1, int j2, int j12, int j3, int j, int j23);

Category ising(int nu);
Category fibonacci();
Category su2_k(int k);
Category su3_3_subtheory();

// Display name of doubled spin a: "0", "1/2", "1", ...
std::string spin_name(int twice_spin);

// Builtin by name ("ising", "fibonacci", "su2", "su3_3"); nu and k are used
// by the families that need them. "su2_K" selects level K directly.
Category builtin(const std::string& name, int nu = 1, int k = 2);

std::vector<std::string> builtin_names();

}  // namespace anyon
