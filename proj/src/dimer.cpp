#include "anyon/dimer.hpp"

#include <cmath>

#include "anyon/errors.hpp"

namespace anyon {

namespace {

constexpr double kEigenCutoff = 1e-14;

}  // namespace

DimerState DimerState::make(std::shared_ptr<const Category> cat, int a, int b, std::map<int, CMatrix> p) {
  if (!cat) throw InvalidInput("dimer needs a category");
  const int n = cat->size();
  if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInput("dimer label out of range");
  if (p.empty()) throw InvalidInput("dimer has no channels");
  const std::string where = "dimer (" + cat->label(a).name + "," + cat->label(b).name + ")";
  double total = 0;
  for (const auto& [f, m] : p) {
    if (f < 0 || f >= n) throw InvalidInput(where + ": channel id " + std::to_string(f) + " out of range");
    const std::string& fn = cat->label(f).name;
    const int mult = cat->N(a, b, f);
    if (mult == 0) throw InvalidInput(where + ": channel " + fn + " is not in the fusion product");
    if (static_cast<int>(m.rows()) != mult || static_cast<int>(m.cols()) != mult)
      throw InvalidInput(where + ": block for " + fn + " must be " + std::to_string(mult) + "x" +
                         std::to_string(mult));
    if (!m.all_finite()) throw InvalidInput(where + ": block for " + fn + " has non-finite entries");
    if (!m.is_hermitian()) throw InvalidInput(where + ": block for " + fn + " is not Hermitian");
    auto ev = hermitian_eigenvalues(m);
    if (ev.front() < -1e-10) throw InvalidInput(where + ": block for " + fn + " is not positive semi-definite");
    total += m.trace().real();
  }
  if (std::abs(total - 1.0) > 1e-6)
    throw InvalidInput(where + ": total weight " + std::to_string(total) + " differs from 1");
  for (auto& [f, m] : p) m *= 1.0 / total;

  DimerState s;
  s.cat_ = std::move(cat);
  s.a_ = a;
  s.b_ = b;
  s.p_ = std::move(p);
  return s;
}

DimerState DimerState::from_weights(std::shared_ptr<const Category> cat, int a, int b,
                                    const std::map<int, double>& weights) {
  std::map<int, CMatrix> p;
  for (const auto& [f, w] : weights) p.emplace(f, CMatrix::scalar(w));
  return make(std::move(cat), a, b, std::move(p));
}

double DimerState::weight(int f) const {
  auto it = p_.find(f);
  return it == p_.end() ? 0.0 : it->second.trace().real();
}

bool DimerState::multiplicity_free() const {
  for (int f : cat_->channels(a_, b_))
    if (cat_->N(a_, b_, f) > 1) return false;
  return true;
}

double aee(const DimerState& s) {
  double S = 0;
  for (const auto& [f, m] : s.blocks()) {
    const double df = s.category().qdim(f);
    for (double lam : hermitian_eigenvalues(m))
      if (lam > kEigenCutoff) S -= lam * std::log(lam / df);
  }
  return S;
}

double renyi_entropy(const DimerState& s, double n) {
  if (!(n > 0)) throw InvalidInput("Renyi index must be positive");
  if (std::abs(n - 1.0) < 1e-12) return aee(s);
  double tr = 0;
  for (const auto& [f, m] : s.blocks()) {
    const double df = s.category().qdim(f);
    for (double lam : hermitian_eigenvalues(m))
      if (lam > kEigenCutoff) tr += std::pow(lam, n) * std::pow(df, 1.0 - n);
  }
  return std::log(tr) / (1.0 - n);
}

double reduced_entropy(const DimerState& s, Side side) {
  return std::log(s.category().qdim(side == Side::A ? s.a() : s.b()));
}

double mutual_information(const DimerState& s) {
  return reduced_entropy(s, Side::A) + reduced_entropy(s, Side::B) - aee(s);
}

double ace(const DimerState& s) {
  if (!s.multiplicity_free())
    throw Unsupported("charge-line entropy is only available for multiplicity-free dimers");
  const Category& cat = s.category();
  double S = std::log(cat.qdim(s.a())) + std::log(cat.qdim(s.b()));
  for (const auto& [f, m] : s.blocks()) {
    const double pf = m.trace().real();
    if (pf <= kEigenCutoff) continue;
    S += -pf * std::log(cat.qdim(f)) + pf * std::log(pf);
  }
  return S;
}

}  // namespace anyon
