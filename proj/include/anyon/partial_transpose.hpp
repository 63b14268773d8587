#pragma once

#include <map>

#include "anyon/dimer.hpp"

namespace anyon {

// Partially transposed dimer: channel c -> [M^c]. Side A results live on
// channels of abar x b and are weighted by d_c/d_b; side B results live on
// channels of a x bbar and are weighted by d_c/d_a.
struct PTResult {
  Side side = Side::A;
  std::map<int, CMatrix> m;
  std::map<int, double> weight;

  // sum_c w_c ||M^c||_1
  double trace_norm() const;
  // sum_c w_c Tr M^c
  cplx quantum_trace() const;
  std::map<int, double> channel_norms() const;
  // ln trace_norm(), with round-off below zero clamped.
  double aln() const;
};

// Half-braids anyon a around b. The braid runs clockwise, i.e. it uses
// (R^{yx}_z)^{-1} where the counterclockwise exchange would use R^{xy}_z; with
// this choice the quantum trace of the result is theta_a.
PTResult partial_transpose_a(const DimerState& s);

// The same construction applied to anyon b in the mirror-image category.
PTResult partial_transpose_b(const DimerState& s);

double aln(const DimerState& s);

// Closed form for multiplicity-free data; Unsupported otherwise.
double aln_multiplicity_free(const DimerState& s);

// ln d_a for a state in one Abelian channel, 0 when a or b is Abelian;
// Unsupported otherwise.
double aln_abelian_channel(const DimerState& s);

// ln(1/2 + p0 + |1/2 - p0|), the two-spin Werner reference curve.
double werner_ln(double p0);

}  // namespace anyon
