#include "anyon/partial_transpose.hpp"

#include <cmath>

#include "anyon/errors.hpp"

namespace anyon {

double PTResult::trace_norm() const {
  double s = 0;
  for (const auto& [c, mc] : m) s += weight.at(c) * anyon::trace_norm(mc);
  return s;
}

cplx PTResult::quantum_trace() const {
  cplx s = 0;
  for (const auto& [c, mc] : m) s += weight.at(c) * mc.trace();
  return s;
}

std::map<int, double> PTResult::channel_norms() const {
  std::map<int, double> out;
  for (const auto& [c, mc] : m) out[c] = anyon::trace_norm(mc);
  return out;
}

double PTResult::aln() const {
  double e = std::log(trace_norm());
  return (e < 0 && e >= -1e-10) ? 0.0 : e;
}

namespace {

// Clockwise half-braid: (R^{yx}_z)^{-1}, rows N_xy^z and columns N_yx^z.
CMatrix cw(const Category& cat, int x, int y, int z) { return cat.r(y, x, z).adjoint(); }

// [M^c]_{nu nu'} = sum p^f_{mu mu'} A^{ab}_f[mu,delta] conj(A^{ab}_f[mu',delta'])
//   B^{f abar}_b[delta,sigma] conj(F^{abar f abar}_c[(b,sigma,nu),(b,delta',sigma')])
//   conj(B^{abar b}_c[sigma',nu'])
// with B the clockwise half-braid.
PTResult contract(const Category& cat, int a, int b, const std::map<int, CMatrix>& p) {
  const FusionRules& N = cat.fusion();
  const int abar = cat.dual(a);
  PTResult out;
  for (int c : cat.channels(abar, b)) {
    const int nc = N(b, abar, c);
    out.m.emplace(c, CMatrix(nc, nc));
    out.weight[c] = cat.qdim(c) / cat.qdim(b);
  }
  for (const auto& [f, pf] : p) {
    const CMatrix& A = cat.a_symbol(a, b, f);
    // Q = A^T p conj(A), indexed by the (abar f -> b) vertex on both sides.
    const CMatrix Q = A.transpose() * pf * A.conj();
    const CMatrix Y = cw(cat, f, abar, b).transpose() * Q;
    for (auto& [c, mc] : out.m) {
      if (N(abar, f, b) == 0 || N(b, abar, c) == 0) continue;
      const CMatrix& F = cat.f(abar, f, abar, c);
      const FOffsets rows = FOffsets::rows(N, abar, f, abar, c);
      const FOffsets cols = FOffsets::cols(N, abar, f, abar, c);
      const CMatrix braid = cw(cat, abar, b, c).conj();
      const int n_sig = N(abar, f, b), n_dp = N(f, abar, b), n_sp = N(abar, b, c), nc = N(b, abar, c);
      for (int nu = 0; nu < nc; ++nu)
        for (int nup = 0; nup < nc; ++nup) {
          cplx acc = 0;
          for (int si = 0; si < n_sig; ++si)
            for (int dp = 0; dp < n_dp; ++dp) {
              const cplx y = Y(si, dp);
              if (y == cplx(0)) continue;
              for (int sp = 0; sp < n_sp; ++sp)
                acc += y * std::conj(F(rows.at(b, si, nu), cols.at(b, dp, sp))) * braid(sp, nup);
            }
          mc(nu, nup) += acc;
        }
    }
  }
  return out;
}

}  // namespace

PTResult partial_transpose_a(const DimerState& s) {
  PTResult r = contract(s.category(), s.a(), s.b(), s.blocks());
  r.side = Side::A;
  return r;
}

PTResult partial_transpose_b(const DimerState& s) {
  // N_ab^f = N_ba^f, so the same coefficient blocks describe the swapped pair.
  PTResult r = contract(s.category().mirrored(), s.b(), s.a(), s.blocks());
  r.side = Side::B;
  return r;
}

double aln(const DimerState& s) { return partial_transpose_a(s).aln(); }

double aln_multiplicity_free(const DimerState& s) {
  const Category& cat = s.category();
  const int a = s.a(), b = s.b(), abar = cat.dual(a);
  if (!s.multiplicity_free()) throw Unsupported("aln_multiplicity_free: a x b has fusion multiplicities");
  for (int c : cat.channels(abar, b))
    if (cat.N(abar, b, c) > 1) throw Unsupported("aln_multiplicity_free: abar x b has fusion multiplicities");
  const FusionRules& N = cat.fusion();
  double total = 0;
  for (int c : cat.channels(abar, b)) {
    cplx sum = 0;
    for (const auto& [f, pf] : s.blocks()) {
      const CMatrix& F = cat.f(abar, f, abar, c);
      const int i = FOffsets::rows(N, abar, f, abar, c).at(b, 0, 0);
      const int j = FOffsets::cols(N, abar, f, abar, c).at(b, 0, 0);
      sum += pf(0, 0) * cat.r(f, abar, b)(0, 0) * std::conj(F(i, j));
    }
    total += cat.qdim(c) / cat.qdim(b) * std::abs(sum);
  }
  double e = std::log(total);
  return (e < 0 && e >= -1e-10) ? 0.0 : e;
}

double aln_abelian_channel(const DimerState& s) {
  const Category& cat = s.category();
  if (cat.abelian(s.a()) || cat.abelian(s.b())) return 0.0;
  int support = -1;
  for (const auto& [f, pf] : s.blocks()) {
    if (pf.trace().real() <= 1e-14) continue;
    if (support >= 0) throw Unsupported("aln_abelian_channel: state occupies more than one channel");
    support = f;
  }
  if (support < 0 || !cat.abelian(support))
    throw Unsupported("aln_abelian_channel: the occupied channel is not Abelian");
  return std::log(cat.qdim(s.a()));
}

double werner_ln(double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw InvalidInput("werner_ln: p0 must lie in [0,1]");
  return std::log(0.5 + p0 + std::abs(0.5 - p0));
}

}  // namespace anyon
