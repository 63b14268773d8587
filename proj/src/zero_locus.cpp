#include "anyon/zero_locus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "anyon/dimer.hpp"
#include "anyon/errors.hpp"
#include "anyon/partial_transpose.hpp"

namespace anyon {

std::vector<cplx> DeltaMatrix::apply(const std::vector<double>& p) const {
  if (p.size() != cols.size()) throw InvalidInput("probability vector length does not match the channel count");
  std::vector<cplx> m(rows.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m[i] += delta(i, j) * p[j];
  return m;
}

double DeltaMatrix::aln(const std::vector<double>& p) const {
  double s = 0;
  for (const cplx& v : apply(p)) s += std::abs(v);
  double e = std::log(s);
  return (e < 0 && e >= -1e-10) ? 0.0 : e;
}

DeltaMatrix delta_matrix(const Category& cat, int a, int b, double rank_tol) {
  const int abar = cat.dual(a);
  DeltaMatrix d;
  d.cols = cat.channels(a, b);
  d.rows = cat.channels(abar, b);
  for (int f : d.cols)
    if (cat.N(a, b, f) > 1) throw Unsupported("delta_matrix: a x b has fusion multiplicities");
  for (int c : d.rows)
    if (cat.N(abar, b, c) > 1) throw Unsupported("delta_matrix: abar x b has fusion multiplicities");
  const FusionRules& N = cat.fusion();
  const cplx theta_bar = std::conj(cat.twist(a));
  d.delta = CMatrix(d.rows.size(), d.cols.size());
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    const int c = d.rows[i];
    // Clockwise braid on the outgoing leg: conj of (R^{b abar}_c)^{-1}.
    const cplx out_leg = cat.r(b, abar, c)(0, 0);
    for (std::size_t j = 0; j < d.cols.size(); ++j) {
      const int f = d.cols[j];
      const CMatrix& F = cat.f(abar, f, abar, c);
      const int r = FOffsets::rows(N, abar, f, abar, c).at(b, 0, 0);
      const int k = FOffsets::cols(N, abar, f, abar, c).at(b, 0, 0);
      const cplx in_leg = std::conj(cat.r(abar, f, b)(0, 0));
      d.delta(i, j) = theta_bar * (cat.qdim(c) / cat.qdim(b)) * in_leg * std::conj(F(r, k)) * out_leg;
    }
  }
  // Relative to the size of delta itself: an imaginary part that is pure
  // round-off must count as rank zero.
  const double cut = rank_tol * std::max(1.0, d.delta.max_abs());
  d.im_rank = 0;
  for (double sv : singular_values(d.delta.imag_part()))
    if (sv > cut) ++d.im_rank;
  d.r0 = static_cast<int>(d.cols.size()) - 1 - static_cast<int>(d.im_rank);
  return d;
}

std::map<int, double> separable_point(const Category& cat, int a, int b) {
  std::map<int, double> p;
  const double dadb = cat.qdim(a) * cat.qdim(b);
  for (int f : cat.channels(a, b)) p[f] = cat.N(a, b, f) * cat.qdim(f) / dadb;
  return p;
}

int sweep_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("ANYON_NEG_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

double aln_at(const std::shared_ptr<const Category>& cat, int a, int b, const std::vector<int>& channels,
              const std::vector<double>& p) {
  std::map<int, CMatrix> blocks;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const int n = cat->N(a, b, channels[i]);
    // Channels with multiplicity get the weight spread evenly over the diagonal.
    blocks.emplace(channels[i], std::max(0.0, p[i]) / n * CMatrix::identity(n));
  }
  return aln(DimerState::make(cat, a, b, std::move(blocks)));
}

SweepGrid sweep(std::shared_ptr<const Category> cat, int a, int b, int resolution, int threads) {
  if (resolution < 1) throw InvalidInput("sweep resolution must be positive");
  SweepGrid g;
  g.cat = cat;
  g.a = a;
  g.b = b;
  g.resolution = resolution;
  g.channels = cat->channels(a, b);
  const std::size_t n = g.channels.size();
  if (n > 3) throw Unsupported("sweep supports at most three fusion channels, got " + std::to_string(n));

  const double res = resolution;
  if (n == 1) {
    g.records.push_back({{1.0}, 0});
  } else if (n == 2) {
    for (int i = 0; i <= resolution; ++i) g.records.push_back({{i / res, (resolution - i) / res}, 0});
  } else {
    for (int i = 0; i <= resolution; ++i)
      for (int j = 0; j <= resolution - i; ++j)
        g.records.push_back({{i / res, j / res, (resolution - i - j) / res}, 0});
  }

  int nt = threads > 0 ? threads : sweep_threads();
  nt = std::max(1, std::min<int>(nt, static_cast<int>(g.records.size())));
  auto work = [&](int t) {
    for (std::size_t r = t; r < g.records.size(); r += nt) g.records[r].aln = aln_at(cat, a, b, g.channels, g.records[r].p);
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return g;
}

namespace {

// Golden-section minimum of a unimodal function on [lo, hi].
std::pair<double, double> golden_min(const std::function<double(double)>& f, double lo, double hi) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 90 && hi - lo > 1e-15; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Nearest point to p with Im(delta) p = 0 and sum p = 1. The minimizer above
// only resolves a quadratic zero to about sqrt(eps); this closes the gap.
std::vector<double> project_onto_zero_plane(const DeltaMatrix& d, std::vector<double> p) {
  const std::size_t m = d.rows.size() + 1, n = p.size();
  std::vector<std::vector<double>> A(m, std::vector<double>(n, 1.0));
  std::vector<double> r(m, 0.0);
  for (std::size_t i = 0; i < d.rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = d.delta(i, j).imag();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i] += A[i][j] * p[j];
    if (i + 1 == m) r[i] -= 1.0;
  }
  CMatrix G(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j) G(i, k) += A[i][j] * A[k][j];
  HermitianEigen e = hermitian_eigen(G);
  const double cut = 1e-12 * std::max(1.0, e.values.back());
  std::vector<double> y(m, 0.0);
  for (std::size_t t = 0; t < m; ++t) {
    if (e.values[t] <= cut) continue;
    cplx proj = 0;
    for (std::size_t i = 0; i < m; ++i) proj += std::conj(e.vectors(i, t)) * r[i];
    for (std::size_t i = 0; i < m; ++i) y[i] += (proj * e.vectors(i, t)).real() / e.values[t];
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) p[j] -= A[i][j] * y[i];
  return p;
}

}  // namespace

std::vector<ZeroPoint> zero_set(const SweepGrid& grid, double tol) {
  std::vector<ZeroPoint> out;
  const std::size_t n = grid.channels.size();
  const int res = grid.resolution;
  for (const auto& rec : grid.records)
    if (rec.aln <= tol) out.push_back({rec.p, rec.aln, false});
  if (n < 2) return out;

  // Index grid records by their integer coordinates.
  auto key = [&](int i, int j) -> long { return static_cast<long>(i) * (res + 1) + j; };
  std::map<long, std::size_t> at;
  for (std::size_t r = 0; r < grid.records.size(); ++r) {
    int i = static_cast<int>(std::lround(grid.records[r].p[0] * res));
    int j = n == 3 ? static_cast<int>(std::lround(grid.records[r].p[1] * res)) : 0;
    at[key(i, j)] = r;
  }

  auto near_existing = [&](const std::vector<double>& p) {
    for (const auto& z : out) {
      double d = 0;
      for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(z.p[k] - p[k]));
      if (d < 1.0 / res) return true;
    }
    return false;
  };

  const double h = 1.0 / res;
  std::optional<DeltaMatrix> delta;
  try {
    delta = delta_matrix(*grid.cat, grid.a, grid.b);
  } catch (const Unsupported&) {
  }
  for (const auto& [kk, r] : at) {
    const auto& rec = grid.records[r];
    if (rec.aln <= tol) continue;
    const int i = static_cast<int>(kk / (res + 1)), j = static_cast<int>(kk % (res + 1));
    bool local_min = true;
    const int di[6] = {1, -1, 0, 0, 1, -1}, dj[6] = {0, 0, 1, -1, -1, 1};
    for (int t = 0; t < (n == 3 ? 6 : 2) && local_min; ++t) {
      auto it = at.find(key(i + di[t], j + dj[t]));
      if (it != at.end() && grid.records[it->second].aln < rec.aln) local_min = false;
    }
    if (!local_min) continue;

    std::vector<double> best;
    double best_val = 0;
    if (n == 2) {
      auto f = [&](double x) { return aln_at(grid.cat, grid.a, grid.b, grid.channels, {x, 1.0 - x}); };
      auto [x, v] = golden_min(f, std::max(0.0, (i - 1) * h), std::min(1.0, (i + 1) * h));
      best = {x, 1.0 - x};
      best_val = v;
    } else {
      double lo0 = std::max(0.0, (i - 1) * h), hi0 = std::min(1.0, (i + 1) * h);
      auto inner = [&](double x, double* arg) {
        double lo1 = std::max(0.0, (j - 1) * h), hi1 = std::min(1.0 - x, (j + 1) * h);
        if (hi1 < lo1) hi1 = lo1;
        auto f = [&](double y) {
          return aln_at(grid.cat, grid.a, grid.b, grid.channels, {x, y, std::max(0.0, 1.0 - x - y)});
        };
        auto [y, v] = golden_min(f, lo1, hi1);
        if (arg) *arg = y;
        return v;
      };
      auto [x, v] = golden_min([&](double x) { return inner(x, nullptr); }, lo0, hi0);
      double y = 0;
      inner(x, &y);
      best = {x, y, std::max(0.0, 1.0 - x - y)};
      best_val = v;
    }
    if (delta) {
      std::vector<double> q = project_onto_zero_plane(*delta, best);
      double dist = 0, lowest = 1;
      for (std::size_t k = 0; k < n; ++k) {
        dist = std::max(dist, std::abs(q[k] - best[k]));
        lowest = std::min(lowest, q[k]);
      }
      if (dist < h && lowest >= -1e-12) {
        for (double& v : q) v = std::max(0.0, v);
        const double v = aln_at(grid.cat, grid.a, grid.b, grid.channels, q);
        if (v <= best_val + 1e-14) {
          best = q;
          best_val = v;
        }
      }
    }
    if (best_val <= tol && !near_existing(best)) out.push_back({best, best_val, true});
  }
  return out;
}

}  // namespace anyon
