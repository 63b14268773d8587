#include <doctest.h>

#include <cmath>

#include "anyon/errors.hpp"
#include "anyon/partial_transpose.hpp"
#include "dimers.hpp"

using namespace anyon;
using testing::random_dimer;

namespace {

const double kPi = std::acos(-1.0);
const double kPhi = (1 + std::sqrt(5.0)) / 2;

std::shared_ptr<const Category> share(Category c) { return std::make_shared<const Category>(std::move(c)); }

double ising_closed(double pI) { return 0.5 * std::log(2 * (pI * pI + (1 - pI) * (1 - pI))); }

double fib_closed(double pI) {
  const cplx r = std::polar(1.0, 3 * kPi / 5);
  const double pt = 1 - pI;
  return std::log((std::abs(pI + pt * r) + std::abs(pI * kPhi - pt * r)) / kPhi);
}

double su2_4_closed(double p0, double p1, double p2) {
  const cplx w = std::polar(1.0, -kPi / 3);
  return std::log(0.5 * (std::abs(p0 - p2 + w * p1) + std::abs(p0 - p2 - w * p1)) + std::abs(p0 + p2));
}

// Printed su(3)_3 partial transpose of the two-parameter 8-channel dimer.
struct Su3Closed {
  cplx m1, m10, m10bar;
  CMatrix m8;
};

Su3Closed su3_closed(double p, double qr, double qi) {
  const double s3 = std::sqrt(3.0);
  return {2 * p - 1, cplx(0, 0.5 * (2 * p - 1) + s3 * qr), cplx(0, 0.5 * (2 * p - 1) - s3 * qr),
          CMatrix{{cplx(0, 0.5), qi}, {qi, cplx(0, -0.5)}}};
}

double su3_closed_aln(double p, double qr) {
  const double s3 = std::sqrt(3.0);
  return std::log(1 + std::abs(2 * p - 1) / 3 + (std::abs(2 * p - 1 + 2 * s3 * qr) + std::abs(2 * p - 1 - 2 * s3 * qr)) / 6);
}

}  // namespace

TEST_CASE("Ising sigma-sigma curve") {
  for (int nu : {1, 3, 5, 7, 9, 11, 13, 15}) {
    auto is = share(ising(nu));
    for (int i = 0; i <= 100; ++i) {
      const double pI = i / 100.0;
      DimerState s = DimerState::from_weights(is, 1, 1, {{0, pI}, {2, 1 - pI}});
      CHECK(std::abs(aln(s) - ising_closed(pI)) < 1e-10);
      CHECK(std::abs(aln_multiplicity_free(s) - ising_closed(pI)) < 1e-10);
      CHECK(std::abs(partial_transpose_b(s).aln() - ising_closed(pI)) < 1e-10);
    }
    CHECK(aln(DimerState::from_weights(is, 1, 1, {{0, 0.5}, {2, 0.5}})) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(aln(DimerState::from_weights(is, 1, 1, {{0, 1.0}})) - std::log(std::sqrt(2.0))) < 1e-14);
    CHECK(aln(DimerState::from_weights(is, 1, 2, {{1, 1.0}})) == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("Fibonacci tau-tau curve") {
  auto fib = share(fibonacci());
  for (int i = 0; i <= 100; ++i) {
    const double pI = i / 100.0;
    DimerState s = DimerState::from_weights(fib, 1, 1, {{0, pI}, {1, 1 - pI}});
    CHECK(std::abs(aln(s) - fib_closed(pI)) < 1e-10);
    CHECK(std::abs(aln_multiplicity_free(s) - aln(s)) < 1e-12);
  }
  CHECK(std::abs(aln(DimerState::from_weights(fib, 1, 1, {{0, 1.0}})) - std::log(kPhi)) < 1e-12);
  CHECK(std::abs(aln(DimerState::from_weights(fib, 1, 1, {{1, 1.0}})) - std::log(2 / kPhi)) < 1e-12);
  CHECK(std::abs(aln(DimerState::from_weights(fib, 1, 1, {{0, 1.0}})) - 0.48121182505960347) < 1e-12);
  CHECK(std::abs(aln(DimerState::from_weights(fib, 1, 1, {{1, 1.0}})) - 0.21193535550034176) < 1e-12);
}

TEST_CASE("su(2)_4 spin-1 surface") {
  auto c = share(su2_k(4));
  const int res = 50;
  for (int i = 0; i <= res; ++i)
    for (int j = 0; j <= res - i; ++j) {
      const double p0 = double(i) / res, p1 = double(j) / res, p2 = 1 - p0 - p1;
      DimerState s = DimerState::from_weights(c, 2, 2, {{0, p0}, {2, p1}, {4, std::max(0.0, p2)}});
      CHECK(std::abs(aln(s) - su2_4_closed(p0, p1, std::max(0.0, p2))) < 1e-9);
    }
}

TEST_CASE("su(2)_5 spin-2 endpoints") {
  auto c = share(su2_k(5));
  const int two = c->find("2");
  REQUIRE(c->channels(two, two) == std::vector<int>{0, 2});
  DimerState s = DimerState::from_weights(c, two, two, {{0, 1.0}});
  CHECK(std::abs(aln(s) - std::log(c->qdim(two))) < 1e-12);
  CHECK(std::abs(aln_abelian_channel(s) - std::log(c->qdim(two))) < 1e-12);
  const double d2 = c->qdim(two), d1 = c->qdim(2);
  DimerState sep = DimerState::from_weights(c, two, two, {{0, 1 / (d2 * d2)}, {2, d1 / (d2 * d2)}});
  CHECK(aln(sep) < 1e-9);
}

TEST_CASE("su(2)_2 matches Ising nu=3") {
  auto s2 = share(su2_k(2));
  auto is = share(ising(3));
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    const double a = aln(DimerState::from_weights(s2, 1, 1, {{0, p}, {2, 1 - p}}));
    const double b = aln(DimerState::from_weights(is, 1, 1, {{0, p}, {2, 1 - p}}));
    CHECK(std::abs(a - b) < 1e-9);
  }
}

TEST_CASE("su(3)_3 partial transpose of the 8-channel family") {
  auto c = share(su3_3_subtheory());
  const int one = c->find("1"), eight = c->find("8"), ten = c->find("10"), tenb = c->find("10bar");
  const CMatrix gauge8 = CMatrix::diagonal({cplx(0, 1), cplx(0, -1)});
  for (int rep = 0; rep < 20; ++rep) {
    const double p = testing::uniform(0.05, 0.95);
    const double r = testing::uniform(0, std::sqrt(p * (1 - p)) * 0.99), phase = testing::uniform(0, 2 * kPi);
    const double qr = r * std::cos(phase), qi = r * std::sin(phase);
    DimerState s = DimerState::make(c, eight, eight, {{eight, CMatrix{{p, cplx(qr, qi)}, {cplx(qr, -qi), 1 - p}}}});
    PTResult pt = partial_transpose_a(s);
    Su3Closed e = su3_closed(p, qr, qi);
    // Multiplicity-space gauge relative to the printed matrices.
    CHECK(std::abs(pt.m.at(one)(0, 0) - cplx(0, -1) * e.m1) < 1e-10);
    CHECK(std::abs(pt.m.at(ten)(0, 0) - e.m10) < 1e-10);
    CHECK(std::abs(pt.m.at(tenb)(0, 0) - e.m10bar) < 1e-10);
    CHECK(max_abs_diff(pt.m.at(eight), e.m8 * gauge8) < 1e-10);
    CHECK(std::abs(pt.aln() - su3_closed_aln(p, qr)) < 1e-10);
    CHECK(std::abs(partial_transpose_b(s).aln() - pt.aln()) < 1e-10);
    DimerState s0 = DimerState::make(c, eight, eight, {{eight, CMatrix{{p, qr}, {qr, 1 - p}}}});
    CHECK(std::abs(aln(s0) - pt.aln()) < 1e-10);
  }
  // Zero line p = 1/2, qr = 0.
  for (double qi : {0.0, 0.1, 0.3, 0.49})
    CHECK(aln(DimerState::make(c, eight, eight, {{eight, CMatrix{{0.5, cplx(0, qi)}, {cplx(0, -qi), 0.5}}}})) < 1e-12);
  CHECK(aln(DimerState::make(c, eight, eight, {{eight, CMatrix{{0.6, 0}, {0, 0.4}}}})) > 1e-3);
}

TEST_CASE("structural identities on random dimers") {
  auto zoo = testing::builtin_zoo();
  for (int rep = 0; rep < 120; ++rep) {
    const auto& cat = zoo[rep % zoo.size()];
    DimerState s = random_dimer(cat);
    INFO(cat->name() << " a=" << s.a() << " b=" << s.b());
    PTResult a = partial_transpose_a(s), b = partial_transpose_b(s);
    CHECK(std::abs(a.quantum_trace() - cat->twist(s.a())) < 1e-10);
    CHECK(std::abs(b.quantum_trace() - cat->twist(s.b())) < 1e-10);
    CHECK(a.aln() >= 0.0);
    CHECK(std::abs(a.trace_norm() - b.trace_norm()) < 1e-10);
    if (s.multiplicity_free()) {
      bool abar_b_free = true;
      for (int c : cat->channels(cat->dual(s.a()), s.b())) abar_b_free = abar_b_free && cat->N(cat->dual(s.a()), s.b(), c) == 1;
      if (abar_b_free) CHECK(std::abs(aln_multiplicity_free(s) - a.aln()) < 1e-10);
    }
    if (cat->abelian(s.a()) || cat->abelian(s.b())) CHECK(std::abs(aln_abelian_channel(s)) < 1e-15);
  }
}

TEST_CASE("separable point has zero negativity") {
  for (const auto& cat : testing::builtin_zoo())
    for (int a = 1; a < cat->size(); ++a)
      for (int b = 1; b < cat->size(); ++b) {
        std::map<int, CMatrix> blocks;
        const double dadb = cat->qdim(a) * cat->qdim(b);
        for (int f : cat->channels(a, b))
          blocks[f] = (cat->qdim(f) / dadb) * CMatrix::identity(cat->N(a, b, f));
        CHECK(aln(DimerState::make(cat, a, b, blocks)) < 1e-9);
      }
}

TEST_CASE("Abelian shortcut") {
  auto fib = share(fibonacci());
  DimerState s = DimerState::from_weights(fib, 1, 1, {{0, 1.0}});
  CHECK(std::abs(aln_abelian_channel(s) - aln(s)) < 1e-12);
  CHECK_THROWS_AS(aln_abelian_channel(DimerState::from_weights(fib, 1, 1, {{0, 0.5}, {1, 0.5}})), Unsupported);
  auto su3 = share(su3_3_subtheory());
  const int eight = su3->find("8");
  CHECK_THROWS_AS(aln_multiplicity_free(DimerState::make(su3, eight, eight, {{eight, 0.5 * CMatrix::identity(2)}})),
                  Unsupported);
}

TEST_CASE("additivity under tensor products") {
  auto zoo = testing::builtin_zoo();
  for (int rep = 0; rep < 10; ++rep) {
    DimerState s = random_dimer(zoo[rep % zoo.size()]), t = random_dimer(zoo[(3 * rep + 1) % zoo.size()]);
    PTResult ps = partial_transpose_a(s), pt = partial_transpose_a(t);
    double norm = 0;
    for (const auto& [c, m] : ps.m)
      for (const auto& [c2, m2] : pt.m) norm += ps.weight.at(c) * pt.weight.at(c2) * trace_norm(kron(m, m2));
    CHECK(std::abs(std::log(norm) - (ps.aln() + pt.aln())) < 1e-9);
  }
}

TEST_CASE("Werner reference") {
  CHECK(std::abs(werner_ln(1.0) - std::log(2.0)) < 1e-15);
  CHECK(werner_ln(0.3) == 0.0);
  CHECK(werner_ln(0.5) == 0.0);
  CHECK(std::abs(werner_ln(0.75) - std::log(1.5)) < 1e-15);
  CHECK_THROWS_AS(werner_ln(1.2), InvalidInput);
  CHECK_THROWS_AS(werner_ln(std::nan("")), InvalidInput);
}
