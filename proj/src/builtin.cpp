#include "anyon/builtin.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "anyon/detail/block_cache.hpp"
#include "anyon/errors.hpp"

namespace anyon {

namespace {

constexpr double kPi = std::numbers::pi;

cplx expi(double x) { return std::polar(1.0, x); }

// Identity blocks for every admissible F and R entry the builder left unset.
void fill_trivial_blocks(TableSymbols& s, const FusionRules& n) {
  const int sz = n.size();
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      for (int c = 0; c < sz; ++c) {
        if (n(a, b, c) > 0 && !s.r.count({a, b, c})) s.r[{a, b, c}] = CMatrix::identity(n(a, b, c));
        for (int d = 0; d < sz; ++d) {
          std::size_t rows = f_row_basis(n, a, b, c, d).size();
          if (rows == 0 || s.f.count({a, b, c, d})) continue;
          s.f[{a, b, c, d}] = CMatrix::identity(rows);
        }
      }
}

Label make_label(int id, std::string name, int dual, double qdim, cplx twist, cplx fs = 1.0) {
  return Label{id, std::move(name), dual, qdim, twist, fs};
}

}  // namespace

// ---------------------------------------------------------------------------
// q-numbers and 6j symbols

QContext::QContext(int k) : k_(k) {
  if (k < 1) throw InvalidInput("level k must be a positive integer, got " + std::to_string(k));
  const long double h = std::numbers::pi_v<long double> / (k + 2);
  const int top = 3 * k + 8;
  qnum_.resize(top + 1);
  qfact_.resize(top + 1);
  qfact_[0] = 1.0L;
  qnum_[0] = 0.0L;
  for (int m = 1; m <= top; ++m) {
    // [k+2] vanishes exactly; keep it an exact zero rather than sin(pi) noise.
    qnum_[m] = (m % (k + 2) == 0) ? 0.0L : std::sin(m * h) / std::sin(h);
    qfact_[m] = qfact_[m - 1] * qnum_[m];
  }
}

cplx QContext::q() const { return expi(2.0 * kPi / (k_ + 2)); }

double QContext::qnumber(int n) const {
  if (n >= 0 && n < static_cast<int>(qnum_.size())) return static_cast<double>(qnum_[n]);
  const double h = kPi / (k_ + 2);
  return std::sin(n * h) / std::sin(h);
}

bool su2_admissible(int k, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  return (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= a + b && a + b + c <= 2 * k;
}

double q_6j(const QContext& ctx, int j1, int j2, int j12, int j3, int j, int j23) {
  const int k = ctx.k();
  if (!su2_admissible(k, j1, j2, j12) || !su2_admissible(k, j12, j3, j) || !su2_admissible(k, j2, j3, j23) ||
      !su2_admissible(k, j1, j23, j))
    throw InvalidInput("q_6j: inadmissible spins at level " + std::to_string(k));
  auto fact = [&](int m) { return ctx.qfactorial(m); };
  auto delta = [&](int a, int b, int c) {
    return std::sqrt(fact((a + b - c) / 2) * fact((a - b + c) / 2) * fact((-a + b + c) / 2) / fact((a + b + c) / 2 + 1));
  };
  const int t[4] = {(j1 + j2 + j12) / 2, (j12 + j3 + j) / 2, (j2 + j3 + j23) / 2, (j1 + j23 + j) / 2};
  const int s[3] = {(j1 + j2 + j3 + j) / 2, (j1 + j12 + j3 + j23) / 2, (j2 + j12 + j + j23) / 2};
  const int zmin = std::max({t[0], t[1], t[2], t[3]});
  const int zmax = std::min({s[0], s[1], s[2]});
  long double sum = 0;
  for (int z = zmin; z <= zmax; ++z) {
    // [z+1]! contains [k+2] = 0 beyond this point.
    if (z + 1 >= k + 2) break;
    long double den = fact(z - t[0]) * fact(z - t[1]) * fact(z - t[2]) * fact(z - t[3]) * fact(s[0] - z) *
                      fact(s[1] - z) * fact(s[2] - z);
    long double term = fact(z + 1) / den;
    sum += (z % 2 == 0) ? term : -term;
  }
  return static_cast<double>(delta(j1, j2, j12) * delta(j12, j3, j) * delta(j2, j3, j23) * delta(j1, j23, j) * sum);
}

std::string spin_name(int twice_spin) {
  if (twice_spin % 2 == 0) return std::to_string(twice_spin / 2);
  return std::to_string(twice_spin) + "/2";
}

// ---------------------------------------------------------------------------
// Ising

Category ising(int nu) {
  if (nu % 2 == 0) throw InvalidInput("Ising nu must be odd, got " + std::to_string(nu));
  nu = ((nu % 16) + 16) % 16;
  constexpr int I = 0, s = 1, p = 2;
  FusionRules n(3);
  for (int a = 0; a < 3; ++a) {
    n.set(I, a, a, 1);
    n.set(a, I, a, 1);
  }
  n.set(s, s, I, 1);
  n.set(s, s, p, 1);
  n.set(s, p, s, 1);
  n.set(p, s, s, 1);
  n.set(p, p, I, 1);

  const double kappa = ((nu * nu - 1) / 8) % 2 == 0 ? 1.0 : -1.0;
  auto sym = std::make_shared<TableSymbols>();
  sym->f[{p, s, p, s}] = CMatrix::scalar(-1.0);
  sym->f[{s, p, s, p}] = CMatrix::scalar(-1.0);
  const double h = kappa / std::sqrt(2.0);
  sym->f[{s, s, s, s}] = CMatrix{{h, h}, {h, -h}};
  const cplx mi_nu = std::pow(cplx(0, -1), nu);
  sym->r[{p, s, s}] = CMatrix::scalar(mi_nu);
  sym->r[{s, p, s}] = CMatrix::scalar(mi_nu);
  sym->r[{s, s, I}] = CMatrix::scalar(kappa * expi(-kPi * nu / 8));
  sym->r[{s, s, p}] = CMatrix::scalar(kappa * expi(3 * kPi * nu / 8));
  sym->r[{p, p, I}] = CMatrix::scalar(-1.0);
  fill_trivial_blocks(*sym, n);

  std::vector<Label> labels = {make_label(I, "I", I, 1.0, 1.0), make_label(s, "sigma", s, std::sqrt(2.0), expi(kPi * nu / 8), kappa),
                               make_label(p, "psi", p, 1.0, -1.0)};
  return Category("ising_nu" + std::to_string(nu), labels, n, sym);
}

// ---------------------------------------------------------------------------
// Fibonacci

Category fibonacci() {
  constexpr int I = 0, t = 1;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  FusionRules n(2);
  n.set(I, I, I, 1);
  n.set(I, t, t, 1);
  n.set(t, I, t, 1);
  n.set(t, t, I, 1);
  n.set(t, t, t, 1);
  auto sym = std::make_shared<TableSymbols>();
  const double ip = 1.0 / phi, isp = 1.0 / std::sqrt(phi);
  sym->f[{t, t, t, t}] = CMatrix{{ip, isp}, {isp, -ip}};
  sym->r[{t, t, I}] = CMatrix::scalar(expi(-4 * kPi / 5));
  sym->r[{t, t, t}] = CMatrix::scalar(expi(3 * kPi / 5));
  fill_trivial_blocks(*sym, n);
  std::vector<Label> labels = {make_label(I, "I", I, 1.0, 1.0), make_label(t, "tau", t, phi, expi(4 * kPi / 5))};
  return Category("fibonacci", labels, n, sym);
}

// ---------------------------------------------------------------------------
// su(2)_k

namespace {

class Su2Symbols : public SymbolSource {
 public:
  explicit Su2Symbols(int k) : ctx_(k), fusion_(k + 1) {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) fusion_.set(a, b, c, su2_admissible(k, a, b, c) ? 1 : 0);
  }

  const FusionRules& fusion() const { return fusion_; }
  const QContext& ctx() const { return ctx_; }

  double f_entry(int a, int b, int c, int d, int e, int f) const {
    const double sign = ((a + b + c + d) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::sqrt(ctx_.qnumber(e + 1) * ctx_.qnumber(f + 1)) * q_6j(ctx_, a, b, e, c, d, f);
  }

  const CMatrix* f_block(int a, int b, int c, int d) const override {
    return f_.get(Key4{a, b, c, d}, [&]() -> std::optional<CMatrix> {
      std::vector<int> es, fs;
      for (int e = 0; e < fusion_.size(); ++e)
        if (fusion_(a, b, e) && fusion_(e, c, d)) es.push_back(e);
      for (int f = 0; f < fusion_.size(); ++f)
        if (fusion_(b, c, f) && fusion_(a, f, d)) fs.push_back(f);
      if (es.empty() || fs.empty()) return std::nullopt;
      CMatrix m(es.size(), fs.size());
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j) m(i, j) = f_entry(a, b, c, d, es[i], fs[j]);
      return m;
    });
  }

  const CMatrix* r_block(int a, int b, int c) const override {
    return r_.get(Key3{a, b, c}, [&]() -> std::optional<CMatrix> {
      if (!fusion_(a, b, c)) return std::nullopt;
      // (-1)^{j-j1-j2} q^{(j(j+1) - j1(j1+1) - j2(j2+1))/2} with doubled spins.
      const double sign = ((c - a - b) / 2) % 2 == 0 ? 1.0 : -1.0;
      const double expo = (c * (c + 2) - a * (a + 2) - b * (b + 2)) / 8.0;
      return CMatrix::scalar(sign * expi(2.0 * kPi / (ctx_.k() + 2) * expo));
    });
  }

 private:
  QContext ctx_;
  FusionRules fusion_;
  detail::BlockCache<Key4> f_;
  detail::BlockCache<Key3> r_;
};

}  // namespace

Category su2_k(int k) {
  if (k < 1) throw InvalidInput("su2 level k must be >= 1, got " + std::to_string(k));
  if (k > 200) throw InvalidInput("su2 level k is capped at 200, got " + std::to_string(k));
  auto sym = std::make_shared<Su2Symbols>(k);
  const QContext& ctx = sym->ctx();
  std::vector<Label> labels;
  for (int a = 0; a <= k; ++a) {
    const double twist_phase = 2.0 * kPi / (k + 2) * (a * (a + 2) / 4.0);
    // Indicator d_a [F^{aaa}_a]_{00} from a single 6j entry.
    const double fs = ctx.qnumber(a + 1) * sym->f_entry(a, a, a, a, 0, 0);
    labels.push_back(make_label(a, spin_name(a), a, ctx.qnumber(a + 1), expi(twist_phase), fs > 0 ? 1.0 : -1.0));
  }
  return Category("su2_" + std::to_string(k), labels, sym->fusion(), sym);
}

// ---------------------------------------------------------------------------
// su(3)_3 subtheory {1, 8, 10, 10bar}

Category su3_3_subtheory() {
  constexpr int one = 0, e8 = 1, t = 2, tb = 3;
  FusionRules n(4);
  for (int a = 0; a < 4; ++a) {
    n.set(one, a, a, 1);
    n.set(a, one, a, 1);
  }
  n.set(e8, e8, one, 1);
  n.set(e8, e8, e8, 2);
  n.set(e8, e8, t, 1);
  n.set(e8, e8, tb, 1);
  for (int x : {t, tb}) {
    n.set(e8, x, e8, 1);
    n.set(x, e8, e8, 1);
  }
  n.set(t, t, tb, 1);
  n.set(tb, tb, t, 1);
  n.set(t, tb, one, 1);
  n.set(tb, t, one, 1);

  auto sym = std::make_shared<TableSymbols>();
  const double s3 = std::sqrt(3.0);
  const CMatrix A{{-0.5, -s3 / 2}, {s3 / 2, -0.5}};
  const CMatrix B = A.transpose();
  for (Key4 key : {Key4{e8, e8, e8, t}, Key4{e8, e8, t, e8}, Key4{e8, tb, e8, e8}, Key4{t, e8, e8, e8}}) sym->f[key] = A;
  for (Key4 key : {Key4{e8, e8, e8, tb}, Key4{e8, e8, tb, e8}, Key4{e8, t, e8, e8}, Key4{tb, e8, e8, e8}}) sym->f[key] = B;
  const double r3 = 1.0 / s3, r12 = 1.0 / std::sqrt(12.0), th = 1.0 / 3.0;
  sym->f[{e8, e8, e8, e8}] = CMatrix{{th, r3, 0, 0, r3, -th, -th},      {r3, -0.5, 0, 0, 0.5, r12, r12},
                                     {0, 0, 0.5, 0.5, 0, 0.5, -0.5},    {0, 0, 0.5, 0.5, 0, -0.5, 0.5},
                                     {r3, 0.5, 0, 0, -0.5, r12, r12},   {-th, r12, -0.5, 0.5, r12, th, th},
                                     {-th, r12, 0.5, -0.5, r12, th, th}};
  // Sign completion of the unprinted one-dimensional blocks; with every
  // other unprinted block equal to 1 this is what the pentagon requires.
  for (int x : {t, tb})
    for (int y : {t, tb})
      for (Key4 key : {Key4{e8, e8, x, y}, Key4{e8, x, y, e8}, Key4{x, e8, e8, y}, Key4{x, y, e8, e8}})
        sym->f[key] = CMatrix::scalar(-1.0);
  for (Key4 key : {Key4{t, t, tb, t}, Key4{t, tb, tb, tb}, Key4{tb, t, t, t}, Key4{tb, tb, t, tb}})
    sym->f[key] = CMatrix::scalar(-1.0);

  for (int c : {one, t, tb}) sym->r[{e8, e8, c}] = CMatrix::scalar(-1.0);
  sym->r[{e8, e8, e8}] = CMatrix::diagonal({cplx(0, -1), cplx(0, 1)});
  fill_trivial_blocks(*sym, n);

  std::vector<Label> labels = {make_label(one, "1", one, 1.0, 1.0), make_label(e8, "8", e8, 3.0, -1.0),
                               make_label(t, "10", tb, 1.0, 1.0), make_label(tb, "10bar", t, 1.0, 1.0)};
  Category draft("su3_3", labels, n, sym);
  for (auto& l : labels) l.fs = fs_from_f(draft, l.id);
  return Category("su3_3", labels, n, sym);
}

// ---------------------------------------------------------------------------

Category builtin(const std::string& name, int nu, int k) {
  if (name == "ising") return ising(nu);
  if (name == "fibonacci" || name == "fib") return fibonacci();
  if (name == "su2") return su2_k(k);
  if (name.rfind("su2_", 0) == 0 && name.size() > 4 &&
      name.find_first_not_of("0123456789", 4) == std::string::npos)
    return su2_k(std::stoi(name.substr(4)));
  if (name == "su3_3" || name == "su3") return su3_3_subtheory();
  throw InvalidInput("unknown builtin category '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"ising", "fibonacci", "su2", "su3_3"}; }

}  // namespace anyon
