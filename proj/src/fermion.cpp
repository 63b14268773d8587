#include "anyon/fermion.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "anyon/errors.hpp"

namespace anyon {

namespace {

void check_modes(int n_modes) {
  if (n_modes < 1 || n_modes > kMaxModes)
    throw InvalidInput("mode count must be in 1.." + std::to_string(kMaxModes) + ", got " + std::to_string(n_modes));
}

// Action of c_p on basis state s: returns the new state and writes the phase.
std::size_t apply_majorana(int n_modes, int p, std::size_t s, cplx& phase) {
  const int mode = (p + 1) / 2;  // 1-based
  const int bit = n_modes - mode;
  const std::size_t higher = s >> (bit + 1);  // occupations of modes before this one
  const bool odd = std::popcount(higher) % 2 == 1;
  const bool occupied = (s >> bit) & 1u;
  cplx ph = odd ? -1.0 : 1.0;
  if (p % 2 == 0) ph *= occupied ? cplx(0, 1) : cplx(0, -1);
  phase *= ph;
  return s ^ (std::size_t{1} << bit);
}

// c_S as a generalized permutation: column s has its single entry at row
// target[s] with value phase[s].
struct Monomial {
  std::vector<std::size_t> target;
  std::vector<cplx> phase;
};

Monomial monomial(int n_modes, unsigned mask) {
  const std::size_t dim = std::size_t{1} << n_modes;
  Monomial m{std::vector<std::size_t>(dim), std::vector<cplx>(dim)};
  for (std::size_t s = 0; s < dim; ++s) {
    std::size_t t = s;
    cplx ph = 1.0;
    // Rightmost factor acts first.
    for (int p = 2 * n_modes; p >= 1; --p)
      if (mask >> (p - 1) & 1u) t = apply_majorana(n_modes, p, t, ph);
    m.target[s] = t;
    m.phase[s] = ph;
  }
  return m;
}

bool parity_even(const FockOperator& op) {
  for (std::size_t i = 0; i < op.m.rows(); ++i)
    for (std::size_t j = 0; j < op.m.cols(); ++j)
      if (std::popcount(i ^ j) % 2 == 1 && std::abs(op.m(i, j)) > 1e-12) return false;
  return true;
}

}  // namespace

FockOperator fock_identity(int n_modes) {
  check_modes(n_modes);
  return {n_modes, CMatrix::identity(std::size_t{1} << n_modes)};
}

FockOperator majorana(int n_modes, int index) {
  check_modes(n_modes);
  if (index < 1 || index > 2 * n_modes)
    throw InvalidInput("Majorana index " + std::to_string(index) + " out of range 1.." + std::to_string(2 * n_modes));
  const std::size_t dim = std::size_t{1} << n_modes;
  FockOperator op{n_modes, CMatrix(dim, dim)};
  for (std::size_t s = 0; s < dim; ++s) {
    cplx ph = 1.0;
    std::size_t t = apply_majorana(n_modes, index, s, ph);
    op.m(t, s) = ph;
  }
  return op;
}

std::vector<cplx> majorana_expansion(const FockOperator& op) {
  check_modes(op.n_modes);
  const std::size_t dim = std::size_t{1} << op.n_modes;
  if (op.m.rows() != dim || op.m.cols() != dim) throw InvalidInput("Fock operator has the wrong dimension");
  const unsigned count = 1u << (2 * op.n_modes);
  std::vector<cplx> x(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    Monomial mo = monomial(op.n_modes, mask);
    cplx tr = 0;  // Tr(c_S^dag op)
    for (std::size_t s = 0; s < dim; ++s) tr += std::conj(mo.phase[s]) * op.m(mo.target[s], s);
    x[mask] = tr / static_cast<double>(dim);
  }
  return x;
}

FockOperator from_majorana_expansion(int n_modes, const std::vector<cplx>& coeffs) {
  check_modes(n_modes);
  const std::size_t dim = std::size_t{1} << n_modes;
  if (coeffs.size() != (std::size_t{1} << (2 * n_modes))) throw InvalidInput("wrong Majorana coefficient count");
  FockOperator op{n_modes, CMatrix(dim, dim)};
  for (unsigned mask = 0; mask < coeffs.size(); ++mask) {
    if (coeffs[mask] == cplx(0)) continue;
    Monomial mo = monomial(n_modes, mask);
    for (std::size_t s = 0; s < dim; ++s) op.m(mo.target[s], s) += coeffs[mask] * mo.phase[s];
  }
  return op;
}

FockOperator fermionic_pt_a(const FockOperator& op, const std::set<int>& modes_a) {
  for (int j : modes_a)
    if (j < 1 || j > op.n_modes) throw InvalidInput("mode " + std::to_string(j) + " is not in the Fock space");
  unsigned a_mask = 0;
  for (int j : modes_a) a_mask |= 3u << (2 * (j - 1));
  std::vector<cplx> x = majorana_expansion(op);
  static const cplx ipow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  for (unsigned mask = 0; mask < x.size(); ++mask) x[mask] *= ipow[std::popcount(mask & a_mask) % 4];
  return from_majorana_expansion(op.n_modes, x);
}

double fermionic_ln(const FockOperator& rho, const std::set<int>& modes_a) {
  if (!rho.m.is_hermitian()) throw InvalidInput("fermionic_ln: density matrix is not Hermitian");
  if (std::abs(rho.m.trace() - 1.0) > 1e-10) throw InvalidInput("fermionic_ln: density matrix trace differs from 1");
  if (!parity_even(rho)) throw InvalidInput("fermionic_ln: density matrix is not parity even");
  return std::log(trace_norm(fermionic_pt_a(rho, modes_a).m));
}

FockOperator vortex_exchange(int n_modes, int i, int j) {
  if (i == j) throw InvalidInput("vortex_exchange needs two distinct Majoranas");
  FockOperator gi = majorana(n_modes, i), gj = majorana(n_modes, j);
  CMatrix t = CMatrix::identity(gi.m.rows()) - gi.m * gj.m;
  return {n_modes, (1.0 / std::sqrt(2.0)) * t};
}

FockOperator majorana_dimer() {
  FockOperator c2 = majorana(2, 2), c3 = majorana(2, 3);
  CMatrix m = CMatrix::identity(4) + cplx(0, 1) * (c2.m * c3.m);
  return {2, 0.25 * m};
}

}  // namespace anyon
