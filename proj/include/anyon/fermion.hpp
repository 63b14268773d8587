#pragma once

#include <set>
#include <vector>

#include "anyon/linalg.hpp"

namespace anyon {

constexpr int kMaxModes = 6;

// Operator on the N-mode Fock space in the occupation basis |n_1 ... n_N>,
// with mode 1 as the most significant bit of the basis index.
struct FockOperator {
  int n_modes = 0;
  CMatrix m;
};

FockOperator fock_identity(int n_modes);

// Jordan-Wigner Majoranas c_{2j-1} = f_j^dag + f_j, c_{2j} = i(f_j - f_j^dag),
// index in 1..2N.
FockOperator majorana(int n_modes, int index);

// Coefficients x_S of op = sum_S x_S c_S, where S is a bitmask over the 2N
// Majoranas (bit p-1 for c_p) and c_S is the ascending product.
std::vector<cplx> majorana_expansion(const FockOperator& op);
FockOperator from_majorana_expansion(int n_modes, const std::vector<cplx>& coeffs);

// Multiplies each monomial by i^{k}, k the number of its Majoranas on modes
// in A (1-based mode numbers).
FockOperator fermionic_pt_a(const FockOperator& op, const std::set<int>& modes_a);

// ln ||rho^{T_A}||_1 for a Hermitian, unit-trace, parity-even rho.
double fermionic_ln(const FockOperator& rho, const std::set<int>& modes_a);

// (1 - c_i c_j)/sqrt(2), which maps c_i -> c_j and c_j -> -c_i under conjugation.
FockOperator vortex_exchange(int n_modes, int i, int j);

// (1 + i c_2 c_3)/4 on two modes: a unit-trace Majorana dimer.
FockOperator majorana_dimer();

}  // namespace anyon
