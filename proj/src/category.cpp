#include "anyon/category.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include "anyon/errors.hpp"

namespace anyon {

FusionRules::FusionRules(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0) {
  if (n <= 0) throw InvalidInput("fusion rules need at least one label");
}

std::vector<int> FusionRules::channels(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < n_; ++c)
    if ((*this)(a, b, c) > 0) out.push_back(c);
  return out;
}

bool FusionRules::multiplicity_free() const {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v <= 1; });
}

std::vector<FIndex> f_row_basis(const FusionRules& n, int a, int b, int c, int d) {
  std::vector<FIndex> out;
  for (int e = 0; e < n.size(); ++e)
    for (int x = 0; x < n(a, b, e); ++x)
      for (int y = 0; y < n(e, c, d); ++y) out.push_back({e, x, y});
  return out;
}

std::vector<FIndex> f_col_basis(const FusionRules& n, int a, int b, int c, int d) {
  std::vector<FIndex> out;
  for (int f = 0; f < n.size(); ++f)
    for (int x = 0; x < n(b, c, f); ++x)
      for (int y = 0; y < n(a, f, d); ++y) out.push_back({f, x, y});
  return out;
}

FOffsets FOffsets::rows(const FusionRules& n, int a, int b, int c, int d) {
  return FOffsets(n.size(), [&](int e) { return n(a, b, e); }, [&](int e) { return n(e, c, d); });
}

FOffsets FOffsets::cols(const FusionRules& n, int a, int b, int c, int d) {
  return FOffsets(n.size(), [&](int f) { return n(b, c, f); }, [&](int f) { return n(a, f, d); });
}

const CMatrix* TableSymbols::f_block(int a, int b, int c, int d) const {
  auto it = f.find({a, b, c, d});
  return it == f.end() ? nullptr : &it->second;
}

const CMatrix* TableSymbols::r_block(int a, int b, int c) const {
  auto it = r.find({a, b, c});
  return it == r.end() ? nullptr : &it->second;
}

struct Category::MirrorSlot {
  std::once_flag once;
  std::unique_ptr<Category> value;
};

Category::Category(std::string name, std::vector<Label> labels, FusionRules fusion,
                   std::shared_ptr<const SymbolSource> symbols)
    : name_(std::move(name)), labels_(std::move(labels)), fusion_(std::move(fusion)), symbols_(std::move(symbols)) {
  const int n = static_cast<int>(labels_.size());
  if (n == 0) throw InvalidInput("category needs at least one label");
  if (fusion_.size() != n)
    throw InvalidInput("fusion rules cover " + std::to_string(fusion_.size()) + " labels, expected " +
                       std::to_string(n));
  for (int a = 0; a < n; ++a) {
    if (labels_[a].id != a) throw InvalidInput("label ids must be 0..n-1 in order");
    if (labels_[a].dual < 0 || labels_[a].dual >= n)
      throw InvalidInput("label " + labels_[a].name + " has an out-of-range dual");
    if (!(labels_[a].qdim > 0)) throw InvalidInput("label " + labels_[a].name + " has non-positive dimension");
  }
  if (!symbols_) throw InvalidInput("category needs a symbol source");
  mirror_ = std::make_shared<MirrorSlot>();
}

const Category& Category::mirrored() const {
  std::call_once(mirror_->once, [&] { mirror_->value = std::make_unique<Category>(mirror(*this)); });
  return *mirror_->value;
}

bool Category::abelian(int a) const { return std::abs(qdim(a) - 1.0) < 1e-12; }

int Category::find(const std::string& name) const {
  for (const auto& l : labels_)
    if (l.name == name) return l.id;
  throw InvalidInput("unknown label '" + name + "' in " + name_);
}

int Category::f_rows(int a, int b, int c, int d) const {
  int s = 0;
  for (int e = 0; e < size(); ++e) s += N(a, b, e) * N(e, c, d);
  return s;
}

int Category::f_cols(int a, int b, int c, int d) const {
  int s = 0;
  for (int f = 0; f < size(); ++f) s += N(b, c, f) * N(a, f, d);
  return s;
}

namespace {

std::string tuple_name(const Category& cat, std::initializer_list<int> ids) {
  std::string s = "(";
  bool first = true;
  for (int x : ids) {
    if (!first) s += ",";
    s += cat.label(x).name;
    first = false;
  }
  return s + ")";
}

}  // namespace

const CMatrix& Category::f(int a, int b, int c, int d) const {
  const CMatrix* m = symbols_->f_block(a, b, c, d);
  const int rows = f_rows(a, b, c, d), cols = f_cols(a, b, c, d);
  if (!m) throw DataIncomplete("missing F-block F^" + tuple_name(*this, {a, b, c}) + "_" + label(d).name);
  if (static_cast<int>(m->rows()) != rows || static_cast<int>(m->cols()) != cols)
    throw DataIncomplete("F-block F^" + tuple_name(*this, {a, b, c}) + "_" + label(d).name + " has shape " +
                         std::to_string(m->rows()) + "x" + std::to_string(m->cols()) + ", fusion rules need " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  return *m;
}

const CMatrix& Category::r(int a, int b, int c) const {
  const CMatrix* m = symbols_->r_block(a, b, c);
  if (!m) throw DataIncomplete("missing R-block R^" + tuple_name(*this, {a, b}) + "_" + label(c).name);
  if (static_cast<int>(m->rows()) != N(a, b, c) || static_cast<int>(m->cols()) != N(b, a, c))
    throw DataIncomplete("R-block R^" + tuple_name(*this, {a, b}) + "_" + label(c).name + " has wrong shape");
  return *m;
}

CMatrix Category::build_a_symbol(int a, int b, int c) const {
  const int abar = dual(a);
  if (N(a, b, c) == 0 || N(abar, c, b) == 0)
    throw InvalidInput("A-symbol " + tuple_name(*this, {a, b, c}) + " is not admissible");
  const CMatrix& fb = f(abar, a, b, b);
  const FOffsets cols = FOffsets::cols(fusion_, abar, a, b, b);
  const FOffsets rows = FOffsets::rows(fusion_, abar, a, b, b);
  const int vac_row = rows.at(0, 0, 0);
  const double pref = std::sqrt(qdim(a) * qdim(b) / qdim(c));
  const cplx kbar = std::conj(fs(a));
  CMatrix out(N(a, b, c), N(abar, c, b));
  for (int mu = 0; mu < N(a, b, c); ++mu)
    for (int nu = 0; nu < N(abar, c, b); ++nu) out(mu, nu) = pref * kbar * std::conj(fb(vac_row, cols.at(c, mu, nu)));
  return out;
}

const CMatrix& Category::a_symbol(int a, int b, int c) const {
  return *a_cache_->get(Key3{a, b, c}, [&] { return std::optional<CMatrix>(build_a_symbol(a, b, c)); });
}

cplx Category::twist_from_r(int a) const {
  cplx t = 0;
  for (int c : channels(a, a)) t += qdim(c) / qdim(a) * r(a, a, c).trace();
  return t;
}

Category compute_a_symbols(const Category& cat) {
  Category out = cat;
  out.a_cache_ = std::make_shared<detail::BlockCache<Key3>>();
  for (int a = 0; a < cat.size(); ++a)
    for (int b = 0; b < cat.size(); ++b)
      for (int c : cat.channels(a, b)) out.a_symbol(a, b, c);
  return out;
}

cplx fs_from_f(const Category& cat, int a) {
  const int abar = cat.dual(a);
  const CMatrix& fb = cat.f(a, abar, a, a);
  auto rows = FOffsets::rows(cat.fusion(), a, abar, a, a);
  auto cols = FOffsets::cols(cat.fusion(), a, abar, a, a);
  return cat.qdim(a) * fb(rows.at(0, 0, 0), cols.at(0, 0, 0));
}

namespace {

class TransformedSymbols : public SymbolSource {
 public:
  enum class Mode { Reversed, Mirror };
  TransformedSymbols(std::shared_ptr<const SymbolSource> base, Mode mode) : base_(std::move(base)), mode_(mode) {}

  const CMatrix* f_block(int a, int b, int c, int d) const override {
    if (mode_ == Mode::Reversed) return base_->f_block(a, b, c, d);
    return f_.get(Key4{a, b, c, d}, [&]() -> std::optional<CMatrix> {
      const CMatrix* m = base_->f_block(c, b, a, d);
      if (!m) return std::nullopt;
      return m->adjoint();
    });
  }

  const CMatrix* r_block(int a, int b, int c) const override {
    return r_.get(Key3{a, b, c}, [&]() -> std::optional<CMatrix> {
      const CMatrix* m = base_->r_block(b, a, c);
      if (!m) return std::nullopt;
      return mode_ == Mode::Reversed ? m->adjoint() : *m;
    });
  }

 private:
  std::shared_ptr<const SymbolSource> base_;
  Mode mode_;
  detail::BlockCache<Key4> f_;
  detail::BlockCache<Key3> r_;
};

}  // namespace

Category reversed_braiding(const Category& cat) {
  auto labels = cat.labels();
  for (auto& l : labels) l.twist = std::conj(l.twist);
  return Category(cat.name() + "-rev", labels, cat.fusion(),
                  std::make_shared<TransformedSymbols>(cat.symbols(), TransformedSymbols::Mode::Reversed));
}

Category mirror(const Category& cat) {
  auto labels = cat.labels();
  for (auto& l : labels) l.fs = std::conj(l.fs);
  return Category(cat.name() + "-mirror", labels, cat.fusion(),
                  std::make_shared<TransformedSymbols>(cat.symbols(), TransformedSymbols::Mode::Mirror));
}

// ---------------------------------------------------------------------------
// Verifiers

namespace {

class Tracker {
 public:
  Tracker(std::string check, const VerifyOptions& opt) { rep_.check = std::move(check), rep_.tol = opt.tol; }

  void record(double residual, const std::string& where) {
    ++rep_.checked;
    if (std::isnan(residual)) residual = INFINITY;
    if (residual > rep_.max_residual || rep_.worst.empty()) {
      if (residual >= rep_.max_residual) {
        rep_.max_residual = residual;
        rep_.worst = where;
      }
    }
    if (residual > rep_.tol && rep_.first_violation.empty()) rep_.first_violation = where;
  }

  void fail(const std::string& what) {
    rep_.max_residual = INFINITY;
    if (rep_.first_violation.empty()) rep_.first_violation = what;
  }

  CheckReport& report() { return rep_; }

 private:
  CheckReport rep_;
};

template <class Fn>
void guarded(Tracker& t, Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    t.fail(e.what());
  }
}

int pick(std::mt19937_64& rng, const std::vector<int>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int pick(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

// Calls fn(a,b,c) over all triples when n^3 fits the budget, otherwise over a
// seeded random sample. Returns true when sampled.
template <class Fn>
bool over_label_tuples(int n, int arity, const VerifyOptions& opt, Fn fn) {
  double total = std::pow(static_cast<double>(n), arity);
  std::vector<int> t(arity, 0);
  if (total <= static_cast<double>(opt.exhaustive_budget)) {
    for (;;) {
      fn(t);
      int i = arity - 1;
      while (i >= 0 && ++t[i] == n) t[i--] = 0;
      if (i < 0) break;
    }
    return false;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t s = 0; s < opt.samples * 10; ++s) {
    for (auto& x : t) x = pick(rng, n);
    fn(t);
  }
  return true;
}

}  // namespace

CheckReport verify_fusion_axioms(const Category& cat, const VerifyOptions& opt) {
  Tracker t("fusion", opt);
  const int n = cat.size();
  for (int a = 0; a < n; ++a) {
    const int abar = cat.dual(a);
    if (cat.dual(abar) != a) t.fail("dual of dual differs for " + cat.label(a).name);
    for (int b = 0; b < n; ++b) {
      t.record(std::abs(cat.N(0, a, b) - (a == b ? 1 : 0)) + std::abs(cat.N(a, 0, b) - (a == b ? 1 : 0)),
               "vacuum fusion " + tuple_name(cat, {a, b}));
      t.record(std::abs(cat.N(a, b, 0) - (b == abar ? 1 : 0)), "conjugate fusion " + tuple_name(cat, {a, b}));
      for (int c = 0; c < n; ++c) {
        if (cat.N(a, b, c) < 0) t.fail("negative multiplicity at " + tuple_name(cat, {a, b, c}));
        t.record(std::abs(cat.N(a, b, c) - cat.N(b, a, c)), "commutativity " + tuple_name(cat, {a, b, c}));
      }
    }
  }
  return t.report();
}

CheckReport verify_dimension_identity(const Category& cat, const VerifyOptions& opt) {
  Tracker t("dimensions", opt);
  const int n = cat.size();
  for (int a = 0; a < n; ++a) {
    t.record(std::abs(cat.qdim(a) - cat.qdim(cat.dual(a))), "d_a vs d_abar for " + cat.label(a).name);
    for (int b = 0; b < n; ++b) {
      double s = 0;
      for (int c = 0; c < n; ++c) s += cat.N(a, b, c) * cat.qdim(c);
      t.record(std::abs(s - cat.qdim(a) * cat.qdim(b)), "sum_c N d_c at " + tuple_name(cat, {a, b}));
    }
  }
  return t.report();
}

CheckReport verify_perron_dimensions(const Category& cat, const VerifyOptions& opt) {
  Tracker t("perron", opt);
  const int n = cat.size();
  std::vector<int> which(n);
  for (int a = 0; a < n; ++a) which[a] = a;
  if (n > 40) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(which.begin(), which.end(), rng);
    which.resize(6);
    t.report().sampled = true;
  }
  for (int a : which) {
    // The fusion matrices are normal, so the largest eigenvalue of N_a N_a^T is d_a^2.
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int k = 0; k < n; ++k) s += cat.N(a, i, k) * cat.N(a, j, k);
        g(i, j) = s;
      }
    auto ev = hermitian_eigenvalues(g);
    t.record(std::abs(std::sqrt(std::max(0.0, ev.back())) - cat.qdim(a)), "Perron root for " + cat.label(a).name);
  }
  return t.report();
}

CheckReport verify_f_unitarity(const Category& cat, const VerifyOptions& opt) {
  Tracker t("F-unitarity", opt);
  t.report().sampled = over_label_tuples(cat.size(), 4, opt, [&](const std::vector<int>& x) {
    if (cat.f_rows(x[0], x[1], x[2], x[3]) == 0 && cat.f_cols(x[0], x[1], x[2], x[3]) == 0) return;
    guarded(t, [&] {
      const CMatrix& m = cat.f(x[0], x[1], x[2], x[3]);
      t.record(unitarity_residual(m), "F^" + tuple_name(cat, {x[0], x[1], x[2]}) + "_" + cat.label(x[3]).name);
    });
  });
  return t.report();
}

CheckReport verify_r_unitarity(const Category& cat, const VerifyOptions& opt) {
  Tracker t("R-unitarity", opt);
  t.report().sampled = over_label_tuples(cat.size(), 3, opt, [&](const std::vector<int>& x) {
    if (cat.N(x[0], x[1], x[2]) == 0) return;
    guarded(t, [&] {
      t.record(unitarity_residual(cat.r(x[0], x[1], x[2])),
               "R^" + tuple_name(cat, {x[0], x[1]}) + "_" + cat.label(x[2]).name);
    });
  });
  return t.report();
}

CheckReport verify_a_unitarity(const Category& cat, const VerifyOptions& opt) {
  Tracker t("A-unitarity", opt);
  t.report().sampled = over_label_tuples(cat.size(), 3, opt, [&](const std::vector<int>& x) {
    if (cat.N(x[0], x[1], x[2]) == 0) return;
    guarded(t, [&] {
      t.record(unitarity_residual(cat.a_symbol(x[0], x[1], x[2])),
               "A^" + tuple_name(cat, {x[0], x[1]}) + "_" + cat.label(x[2]).name);
    });
  });
  return t.report();
}

namespace {

struct PentagonTuple {
  int a, b, c, d, e, f, g, k, l;
};

double pentagon_residual(const Category& cat, const PentagonTuple& p) {
  const FusionRules& N = cat.fusion();
  const auto [a, b, c, d, e, f, g, k, l] = p;
  const CMatrix& f1 = cat.f(f, c, d, e);
  const CMatrix& f2 = cat.f(a, b, l, e);
  const CMatrix& f3 = cat.f(a, b, c, g);
  const CMatrix& f5 = cat.f(b, c, d, k);
  const FOffsets r1 = FOffsets::rows(N, f, c, d, e), c1 = FOffsets::cols(N, f, c, d, e);
  const FOffsets r2 = FOffsets::rows(N, a, b, l, e), c2 = FOffsets::cols(N, a, b, l, e);
  const FOffsets r3 = FOffsets::rows(N, a, b, c, g), c3 = FOffsets::cols(N, a, b, c, g);
  const FOffsets r5 = FOffsets::rows(N, b, c, d, k), c5 = FOffsets::cols(N, b, c, d, k);

  struct Mid {
    int h;
    const CMatrix* m;
    FOffsets rows, cols;
  };
  std::vector<Mid> mids;
  for (int h : N.channels(b, c))
    if (N(a, h, g) > 0 && N(h, d, k) > 0)
      mids.push_back({h, &cat.f(a, h, d, e), FOffsets::rows(N, a, h, d, e), FOffsets::cols(N, a, h, d, e)});

  double worst = 0;
  for (int al = 0; al < N(a, b, f); ++al)
    for (int be = 0; be < N(f, c, g); ++be)
      for (int ga = 0; ga < N(g, d, e); ++ga)
        for (int de = 0; de < N(c, d, l); ++de)
          for (int la = 0; la < N(b, l, k); ++la)
            for (int mu = 0; mu < N(a, k, e); ++mu) {
              cplx lhs = 0;
              for (int nu = 0; nu < N(f, l, e); ++nu)
                lhs += f1(r1.at(g, be, ga), c1.at(l, de, nu)) * f2(r2.at(f, al, nu), c2.at(k, la, mu));
              cplx rhs = 0;
              for (const Mid& m : mids)
                for (int si = 0; si < N(b, c, m.h); ++si)
                  for (int ps = 0; ps < N(a, m.h, g); ++ps)
                    for (int rh = 0; rh < N(m.h, d, k); ++rh)
                      rhs += f3(r3.at(f, al, be), c3.at(m.h, si, ps)) *
                             (*m.m)(m.rows.at(g, ps, ga), m.cols.at(k, rh, mu)) *
                             f5(r5.at(m.h, si, rh), c5.at(l, de, la));
              worst = std::max(worst, std::abs(lhs - rhs));
            }
  return worst;
}

std::string pentagon_name(const Category& cat, const PentagonTuple& p) {
  return "pentagon a,b,c,d,e=" + tuple_name(cat, {p.a, p.b, p.c, p.d, p.e}) +
         " f,g,k,l=" + tuple_name(cat, {p.f, p.g, p.k, p.l});
}

// Visits every admissible pentagon tuple; stops early when fn returns false.
template <class Fn>
void each_pentagon_tuple(const FusionRules& N, Fn fn) {
  const int n = N.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int f : N.channels(a, b))
            for (int g : N.channels(f, c))
              for (int e : N.channels(g, d))
                for (int l : N.channels(c, d))
                  for (int k : N.channels(b, l))
                    if (N(a, k, e) > 0)
                      if (!fn(PentagonTuple{a, b, c, d, e, f, g, k, l})) return;
}

std::optional<PentagonTuple> sample_pentagon_tuple(const FusionRules& N, std::mt19937_64& rng) {
  const int n = N.size();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int a = pick(rng, n), b = pick(rng, n), c = pick(rng, n), d = pick(rng, n);
    int f = pick(rng, N.channels(a, b));
    int g = pick(rng, N.channels(f, c));
    int e = pick(rng, N.channels(g, d));
    int l = pick(rng, N.channels(c, d));
    std::vector<int> ks;
    for (int k : N.channels(b, l))
      if (N(a, k, e) > 0) ks.push_back(k);
    if (ks.empty()) continue;
    return PentagonTuple{a, b, c, d, e, f, g, pick(rng, ks), l};
  }
  return std::nullopt;
}

struct HexagonTuple {
  int a, b, c, d, e, g;
};

// R-provider used by the hexagon: the braiding itself or its inverse.
const CMatrix& braid(const Category& cat, bool inverse, int x, int y, int z, CMatrix& scratch) {
  if (!inverse) return cat.r(x, y, z);
  scratch = cat.r(y, x, z).adjoint();
  return scratch;
}

double hexagon_residual(const Category& cat, const HexagonTuple& h, bool inverse) {
  const FusionRules& N = cat.fusion();
  const auto [a, b, c, d, e, g] = h;
  CMatrix s1, s2, s3;
  const CMatrix& rca = braid(cat, inverse, c, a, e, s1);
  const CMatrix& rcb = braid(cat, inverse, c, b, g, s2);
  const CMatrix& f1 = cat.f(a, c, b, d);
  const CMatrix& f2 = cat.f(c, a, b, d);
  const CMatrix& f3 = cat.f(a, b, c, d);
  const FOffsets r1 = FOffsets::rows(N, a, c, b, d), c1 = FOffsets::cols(N, a, c, b, d);
  const FOffsets r2 = FOffsets::rows(N, c, a, b, d), c2 = FOffsets::cols(N, c, a, b, d);
  const FOffsets r3 = FOffsets::rows(N, a, b, c, d), c3 = FOffsets::cols(N, a, b, c, d);

  std::vector<std::pair<int, CMatrix>> mids;
  for (int f : N.channels(a, b))
    if (N(c, f, d) > 0) {
      CMatrix s;
      mids.emplace_back(f, braid(cat, inverse, c, f, d, s));
    }

  double worst = 0;
  for (int al = 0; al < N(c, a, e); ++al)
    for (int be = 0; be < N(e, b, d); ++be)
      for (int mu = 0; mu < N(b, c, g); ++mu)
        for (int nu = 0; nu < N(a, g, d); ++nu) {
          cplx lhs = 0;
          for (int la = 0; la < N(a, c, e); ++la)
            for (int ga = 0; ga < N(c, b, g); ++ga)
              lhs += rca(al, la) * f1(r1.at(e, la, be), c1.at(g, ga, nu)) * rcb(ga, mu);
          cplx rhs = 0;
          for (const auto& [f, rcf] : mids)
            for (int de = 0; de < N(a, b, f); ++de)
              for (int si = 0; si < N(c, f, d); ++si)
                for (int ps = 0; ps < N(f, c, d); ++ps)
                  rhs += f2(r2.at(e, al, be), c2.at(f, de, si)) * rcf(si, ps) * f3(r3.at(f, de, ps), c3.at(g, mu, nu));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

}  // namespace

CheckReport verify_pentagon(const Category& cat, const VerifyOptions& opt) {
  Tracker t("pentagon", opt);
  const FusionRules& N = cat.fusion();
  std::size_t count = 0;
  each_pentagon_tuple(N, [&](const PentagonTuple&) { return ++count <= opt.exhaustive_budget; });
  auto check = [&](const PentagonTuple& p) {
    guarded(t, [&] { t.record(pentagon_residual(cat, p), pentagon_name(cat, p)); });
  };
  if (count <= opt.exhaustive_budget) {
    each_pentagon_tuple(N, [&](const PentagonTuple& p) {
      check(p);
      return true;
    });
  } else {
    t.report().sampled = true;
    std::mt19937_64 rng(opt.seed);
    for (std::size_t s = 0; s < opt.samples; ++s)
      if (auto p = sample_pentagon_tuple(N, rng)) check(*p);
  }
  return t.report();
}

CheckReport verify_hexagon(const Category& cat, const VerifyOptions& opt) {
  Tracker t("hexagon", opt);
  const FusionRules& N = cat.fusion();
  const int n = cat.size();
  auto check = [&](const HexagonTuple& h) {
    for (bool inv : {false, true})
      guarded(t, [&] {
        t.record(hexagon_residual(cat, h, inv),
                 std::string(inv ? "inverse " : "") + "hexagon a,b,c,d=" + tuple_name(cat, {h.a, h.b, h.c, h.d}) +
                     " e,g=" + tuple_name(cat, {h.e, h.g}));
      });
  };
  auto each = [&](auto fn) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e : N.channels(c, a))
              if (N(e, b, d) > 0)
                for (int g : N.channels(b, c))
                  if (N(a, g, d) > 0)
                    if (!fn(HexagonTuple{a, b, c, d, e, g})) return;
  };
  std::size_t count = 0;
  each([&](const HexagonTuple&) { return ++count <= opt.exhaustive_budget; });
  if (count <= opt.exhaustive_budget) {
    each([&](const HexagonTuple& h) {
      check(h);
      return true;
    });
  } else {
    t.report().sampled = true;
    std::mt19937_64 rng(opt.seed + 1);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        int a = pick(rng, n), b = pick(rng, n), c = pick(rng, n);
        int e = pick(rng, N.channels(c, a));
        int d = pick(rng, N.channels(e, b));
        std::vector<int> gs;
        for (int g : N.channels(b, c))
          if (N(a, g, d) > 0) gs.push_back(g);
        if (gs.empty()) continue;
        check({a, b, c, d, e, pick(rng, gs)});
        break;
      }
    }
  }
  return t.report();
}

CheckReport verify_twists(const Category& cat, const VerifyOptions& opt) {
  Tracker t("twists", opt);
  for (int a = 0; a < cat.size(); ++a) {
    const std::string& nm = cat.label(a).name;
    t.record(std::abs(std::abs(cat.twist(a)) - 1.0), "|theta| for " + nm);
    t.record(std::abs(cat.twist(a) - cat.twist(cat.dual(a))), "theta_a vs theta_abar for " + nm);
    t.record(std::abs(std::abs(cat.fs(a)) - 1.0), "|fs| for " + nm);
    guarded(t, [&] { t.record(std::abs(cat.twist_from_r(a) - cat.twist(a)), "twist from R for " + nm); });
    if (a == 0) t.record(std::abs(cat.twist(0) - 1.0), "vacuum twist");
  }
  return t.report();
}

std::vector<CheckReport> verify_all(const Category& cat, const VerifyOptions& opt) {
  return {verify_fusion_axioms(cat, opt), verify_dimension_identity(cat, opt), verify_f_unitarity(cat, opt),
          verify_r_unitarity(cat, opt),   verify_a_unitarity(cat, opt),        verify_pentagon(cat, opt),
          verify_hexagon(cat, opt),       verify_twists(cat, opt)};
}

}  // namespace anyon
