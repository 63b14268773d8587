#include <doctest.h>

#include <cmath>

#include "anyon/errors.hpp"
#include "dimers.hpp"

using namespace anyon;
using testing::random_dimer;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

std::shared_ptr<const Category> share(Category c) { return std::make_shared<const Category>(std::move(c)); }

}  // namespace

TEST_CASE("dimer validation") {
  auto fib = share(fibonacci());
  const int I = 0, t = 1;
  CHECK_NOTHROW(DimerState::from_weights(fib, t, t, {{I, 1.0}}));
  CHECK_THROWS_AS(DimerState::from_weights(fib, I, t, {{I, 1.0}}), InvalidInput);  // inadmissible channel
  CHECK_THROWS_AS(DimerState::from_weights(fib, t, t, {{I, 0.7}}), InvalidInput);  // trace
  CHECK_THROWS_AS(DimerState::from_weights(fib, t, t, {{I, 1.2}, {t, -0.2}}), InvalidInput);  // negative
  CHECK_THROWS_AS(DimerState::make(fib, t, t, {{I, CMatrix::identity(2)}}), InvalidInput);  // shape

  // Small normalization errors are repaired exactly.
  DimerState s = DimerState::from_weights(fib, t, t, {{I, 0.3 + 4e-7}, {t, 0.7}});
  CHECK(std::abs(s.weight(I) + s.weight(t) - 1.0) < 1e-15);

  auto su3 = share(su3_3_subtheory());
  const int eight = su3->find("8");
  CHECK_NOTHROW(DimerState::make(su3, eight, eight, {{eight, CMatrix{{0.3, cplx(0.1, 0.2)}, {cplx(0.1, -0.2), 0.7}}}}));
  // Not Hermitian.
  CHECK_THROWS_AS(DimerState::make(su3, eight, eight, {{eight, CMatrix{{0.3, cplx(0.1, 0.2)}, {cplx(0.1, 0.2), 0.7}}}}),
                  InvalidInput);
  // Hermitian but indefinite.
  CHECK_THROWS_AS(DimerState::make(su3, eight, eight, {{eight, CMatrix{{0.5, 0.9}, {0.9, 0.5}}}}), InvalidInput);
  CHECK_FALSE(DimerState::make(su3, eight, eight, {{eight, CMatrix::identity(2) * 0.5}}).multiplicity_free());

  auto is = share(ising(1));
  CHECK(is->channels(1, 2) == std::vector<int>{1});
}

TEST_CASE("entropies of simple dimers") {
  auto fib = share(fibonacci());
  auto is = share(ising(1));
  auto su3 = share(su3_3_subtheory());
  const int t = 1, s = 1;

  DimerState fib_tau = DimerState::from_weights(fib, t, t, {{t, 1.0}});
  CHECK(std::abs(aee(fib_tau) - std::log(kPhi)) < 1e-14);
  DimerState fib_I = DimerState::from_weights(fib, t, t, {{0, 1.0}});
  CHECK(std::abs(aee(fib_I)) < 1e-15);
  CHECK(std::abs(mutual_information(fib_I) - 2 * std::log(kPhi)) < 1e-14);
  CHECK(std::abs(ace(fib_I) - 2 * std::log(kPhi)) < 1e-14);

  DimerState is_half = DimerState::from_weights(is, s, s, {{0, 0.5}, {2, 0.5}});
  CHECK(std::abs(aee(is_half) - std::log(2.0)) < 1e-14);
  CHECK(std::abs(ace(is_half)) < 1e-14);
  DimerState is_I = DimerState::from_weights(is, s, s, {{0, 1.0}});
  CHECK(std::abs(mutual_information(is_I) - std::log(2.0)) < 1e-14);

  CHECK(std::abs(reduced_entropy(fib_I, Side::A) - std::log(kPhi)) < 1e-15);
  CHECK(std::abs(reduced_entropy(is_I, Side::B) - 0.5 * std::log(2.0)) < 1e-15);
  const int eight = su3->find("8");
  DimerState s8 = DimerState::make(su3, eight, eight, {{eight, 0.5 * CMatrix::identity(2)}});
  CHECK(std::abs(reduced_entropy(s8, Side::A) - std::log(3.0)) < 1e-14);
  CHECK_THROWS_AS(ace(s8), Unsupported);

  // Abelian rank-1: zero entropy.
  DimerState psi = DimerState::from_weights(is, 2, 2, {{0, 1.0}});
  CHECK(aee(psi) == 0.0);
}

TEST_CASE("entropy identities on random dimers") {
  auto zoo = testing::builtin_zoo();
  for (int rep = 0; rep < 60; ++rep) {
    const auto& cat = zoo[rep % zoo.size()];
    DimerState s = random_dimer(cat);
    CHECK(aee(s) >= -1e-12);
    CHECK(std::abs(renyi_entropy(s, 1.0 + 1e-7) - aee(s)) < 1e-5);
    if (s.multiplicity_free()) CHECK(std::abs(mutual_information(s) - ace(s)) < 1e-10);

    // Per-channel unitary rotations leave every measure unchanged.
    std::map<int, CMatrix> rotated;
    for (const auto& [f, m] : s.blocks()) {
      CMatrix u = testing::random_unitary(m.rows());
      rotated[f] = u * m * u.adjoint();
    }
    DimerState r = DimerState::make(cat, s.a(), s.b(), rotated);
    CHECK(std::abs(aee(r) - aee(s)) < 1e-10);
    CHECK(std::abs(mutual_information(r) - mutual_information(s)) < 1e-10);
    CHECK(std::abs(renyi_entropy(r, 2.0) - renyi_entropy(s, 2.0)) < 1e-10);
  }
}

TEST_CASE("identity-channel charge entanglement") {
  for (const auto& cat : testing::builtin_zoo())
    for (int a = 1; a < cat->size(); ++a) {
      const int abar = cat->dual(a);
      DimerState s = DimerState::from_weights(cat, a, abar, {{0, 1.0}});
      if (!s.multiplicity_free()) continue;
      CHECK(std::abs(ace(s) - 2 * std::log(cat->qdim(a))) < 1e-10);
    }
}
