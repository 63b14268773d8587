#pragma once

#include <map>
#include <memory>
#include <vector>

#include "anyon/category.hpp"

namespace anyon {

// Linear map from channel probabilities p_f (columns, channels of a x b) to
// the normalized partial-transpose values m_c (rows, channels of abar x b):
// m = delta p, sum_c m_c = 1, and ALN = ln sum_c |m_c|.
struct DeltaMatrix {
  std::vector<int> rows;
  std::vector<int> cols;
  CMatrix delta;
  std::size_t im_rank = 0;
  int r0 = 0;

  std::vector<cplx> apply(const std::vector<double>& p) const;
  double aln(const std::vector<double>& p) const;
};

// Multiplicity-free pairs only; Unsupported otherwise. im_rank counts singular
// values of Im(delta) above rank_tol * max(1, max |delta_ij|).
DeltaMatrix delta_matrix(const Category& cat, int a, int b, double rank_tol = 1e-9);

// p_f = d_f / (d_a d_b) over the channels of a x b.
std::map<int, double> separable_point(const Category& cat, int a, int b);

struct SweepRecord {
  std::vector<double> p;  // aligned with SweepGrid::channels
  double aln = 0;
};

struct SweepGrid {
  std::shared_ptr<const Category> cat;
  int a = 0;
  int b = 0;
  std::vector<int> channels;
  int resolution = 0;
  std::vector<SweepRecord> records;
};

// Uniform barycentric grid over the probability simplex of the channels of
// a x b (at most three). Records are ordered lexicographically by
// (i_0, i_1, ...) in steps of 1/resolution. threads <= 0 means automatic
// (hardware concurrency capped by ANYON_NEG_THREADS).
SweepGrid sweep(std::shared_ptr<const Category> cat, int a, int b, int resolution, int threads = 0);

struct ZeroPoint {
  std::vector<double> p;
  double aln = 0;
  // false: a grid point; true: located by minimizing inside the cell around
  // a grid-local minimum.
  bool refined = false;
};

// Grid points with aln <= tol, plus zeros found off-grid next to local minima.
std::vector<ZeroPoint> zero_set(const SweepGrid& grid, double tol = 1e-8);

// ALN at an arbitrary probability vector aligned with grid channels.
double aln_at(const std::shared_ptr<const Category>& cat, int a, int b, const std::vector<int>& channels,
              const std::vector<double>& p);

int sweep_threads();

}  // namespace anyon
