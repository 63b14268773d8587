#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "anyon/detail/block_cache.hpp"
#include "anyon/linalg.hpp"

namespace anyon {

struct Label {
  int id = 0;
  std::string name;
  int dual = 0;
  double qdim = 1.0;
  cplx twist = 1.0;
  cplx fs = 1.0;  // Frobenius-Schur indicator
};

// N_{ab}^c for labels 0..n-1; label 0 is the vacuum.
class FusionRules {
 public:
  FusionRules() = default;
  explicit FusionRules(int n);

  int size() const { return n_; }
  int operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }
  void set(int a, int b, int c, int multiplicity) { data_[index(a, b, c)] = multiplicity; }

  // Channels c with N_{ab}^c > 0, ascending.
  std::vector<int> channels(int a, int b) const;
  bool multiplicity_free() const;

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }
  int n_ = 0;
  std::vector<int> data_;
};

// One composite index of an F-block: a channel plus the two vertex
// multiplicity indices attached to it.
struct FIndex {
  int label;
  int first;
  int second;
  bool operator==(const FIndex&) const = default;
};

// Rows of F^{abc}_d: (e, alpha in N_ab^e, beta in N_ec^d), lexicographic.
std::vector<FIndex> f_row_basis(const FusionRules& n, int a, int b, int c, int d);
// Columns of F^{abc}_d: (f, mu in N_bc^f, nu in N_af^d), lexicographic.
std::vector<FIndex> f_col_basis(const FusionRules& n, int a, int b, int c, int d);

// Position lookup into a composite basis without a linear search.
class FOffsets {
 public:
  FOffsets() = default;
  // first_mult(x) and second_mult(x) give the two multiplicities for channel x.
  template <class First, class Second>
  FOffsets(int n, First first_mult, Second second_mult) : start_(n + 1, 0), inner_(n, 0) {
    for (int x = 0; x < n; ++x) {
      inner_[x] = second_mult(x);
      start_[x + 1] = start_[x] + first_mult(x) * inner_[x];
    }
  }
  static FOffsets rows(const FusionRules& n, int a, int b, int c, int d);
  static FOffsets cols(const FusionRules& n, int a, int b, int c, int d);

  int at(int label, int first, int second) const { return start_[label] + first * inner_[label] + second; }
  int size() const { return start_.empty() ? 0 : start_.back(); }
  int count(int label) const { return start_[label + 1] - start_[label]; }

 private:
  std::vector<int> start_;
  std::vector<int> inner_;
};

// Provider of F and R blocks. Returned pointers stay valid for the lifetime of
// the source; nullptr means the block is not available.
class SymbolSource {
 public:
  virtual ~SymbolSource() = default;
  virtual const CMatrix* f_block(int a, int b, int c, int d) const = 0;
  virtual const CMatrix* r_block(int a, int b, int c) const = 0;
};

using Key3 = std::array<int, 3>;
using Key4 = std::array<int, 4>;

class TableSymbols : public SymbolSource {
 public:
  std::map<Key4, CMatrix> f;
  std::map<Key3, CMatrix> r;

  const CMatrix* f_block(int a, int b, int c, int d) const override;
  const CMatrix* r_block(int a, int b, int c) const override;
};

class Category {
 public:
  Category() = default;
  Category(std::string name, std::vector<Label> labels, FusionRules fusion,
           std::shared_ptr<const SymbolSource> symbols);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int a) const { return labels_.at(a); }
  int dual(int a) const { return labels_.at(a).dual; }
  double qdim(int a) const { return labels_.at(a).qdim; }
  cplx twist(int a) const { return labels_.at(a).twist; }
  cplx fs(int a) const { return labels_.at(a).fs; }
  bool abelian(int a) const;

  // Label id by display name; throws InvalidInput for unknown names.
  int find(const std::string& name) const;

  const FusionRules& fusion() const { return fusion_; }
  int N(int a, int b, int c) const { return fusion_(a, b, c); }
  std::vector<int> channels(int a, int b) const { return fusion_.channels(a, b); }

  // Block dimensions implied by the fusion rules.
  int f_rows(int a, int b, int c, int d) const;
  int f_cols(int a, int b, int c, int d) const;

  // Throw DataIncomplete naming the block when it is missing or misshapen.
  const CMatrix& f(int a, int b, int c, int d) const;
  const CMatrix& r(int a, int b, int c) const;
  // A^{ab}_c, shape N_ab^c x N_{a-bar c}^b.
  const CMatrix& a_symbol(int a, int b, int c) const;

  const std::shared_ptr<const SymbolSource>& symbols() const { return symbols_; }

  // theta_a = sum_c (d_c/d_a) Tr R^{aa}_c
  cplx twist_from_r(int a) const;

  // mirror(*this), built on first use and shared by copies.
  const Category& mirrored() const;

 private:
  friend Category compute_a_symbols(const Category& cat);
  CMatrix build_a_symbol(int a, int b, int c) const;

  std::string name_;
  std::vector<Label> labels_;
  FusionRules fusion_;
  std::shared_ptr<const SymbolSource> symbols_;
  std::shared_ptr<detail::BlockCache<Key3>> a_cache_ = std::make_shared<detail::BlockCache<Key3>>();
  struct MirrorSlot;
  std::shared_ptr<MirrorSlot> mirror_;
};

// Fresh copy with every admissible A-block materialized.
Category compute_a_symbols(const Category& cat);

// d_a * [F^{a abar a}_a]_{(I),(I)}; used by builders that do not fix the
// indicator independently.
cplx fs_from_f(const Category& cat, int a);

// Same fusion and F data with braiding replaced by its inverse:
// R'^{ab}_c = (R^{ba}_c)^{-1}.
Category reversed_braiding(const Category& cat);

// Mirror image: F'^{abc}_d is the conjugate transpose of F^{cba}_d with
// composite indices matched label by label, and R'^{ab}_c = R^{ba}_c.
Category mirror(const Category& cat);

struct CheckReport {
  std::string check;
  double tol = 1e-8;
  double max_residual = 0;
  std::size_t checked = 0;
  bool sampled = false;
  std::string worst;            // location of max_residual
  std::string first_violation;  // empty when everything is within tol
  bool passed() const { return first_violation.empty() && max_residual <= tol; }
};

struct VerifyOptions {
  double tol = 1e-8;
  // Label tuples to enumerate before switching to random sampling.
  std::size_t exhaustive_budget = 3000000;
  std::size_t samples = 3000;
  std::uint64_t seed = 20240611;
};

CheckReport verify_fusion_axioms(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_dimension_identity(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_perron_dimensions(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_f_unitarity(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_r_unitarity(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_a_unitarity(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_pentagon(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_hexagon(const Category& cat, const VerifyOptions& opt = {});
CheckReport verify_twists(const Category& cat, const VerifyOptions& opt = {});

std::vector<CheckReport> verify_all(const Category& cat, const VerifyOptions& opt = {});

}  // namespace anyon
