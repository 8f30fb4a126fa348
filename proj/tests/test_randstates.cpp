#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qent/inequalities.hpp"
#include "qent/randstates.hpp"
#include "support.hpp"

using namespace qent;
using testsup::Cmat;

TEST_CASE("generate: identical recipes give bit-identical matrices") {
  const std::vector<StateRecipe> recipes = {
      StateRecipe::ginibre(5, 42),
      StateRecipe::pure(5, 42),
      StateRecipe::dirichlet(5, 42),
      StateRecipe::product({2, 3}, {1, 2}),
  };
  for (const auto& r : recipes) {
    CHECK(testsup::bit_equal(generate(r).matrix(), generate(r).matrix()));
  }
  CHECK_FALSE(testsup::bit_equal(generate(StateRecipe::ginibre(5, 42)).matrix(),
                                 generate(StateRecipe::ginibre(5, 43)).matrix()));
}

TEST_CASE("generate: ginibre construction guarantees") {
  const DensityMatrix<double> rho = generate(StateRecipe::ginibre(5, 42));
  CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-14);
  CHECK(rho.diagnostics().herm_deviation == 0.0);
  CHECK(rho.spectrum().min() > -1e-12);
}

TEST_CASE("generate: pure states have zero entropy") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix<double> rho = generate(StateRecipe::pure(5, seed));
    CHECK(von_neumann_entropy(rho) < 1e-10);
    // rank one: second eigenvalue vanishes
    CHECK(std::abs(rho.spectrum().eigenvalues(0) - 1.0) < 1e-12);
    CHECK(std::abs(rho.spectrum().eigenvalues(1)) < 1e-12);
  }
}

TEST_CASE("generate: dirichlet states are diagonal with unit trace") {
  const DensityMatrix<double> rho = generate(StateRecipe::dirichlet(6, 9));
  const Cmat& m = rho.matrix();
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 6; ++j)
      if (i != j) CHECK(std::abs(m(i, j)) == 0.0);
  CHECK(std::abs(m.trace().real() - 1.0) < 1e-14);
}

TEST_CASE("generate: product of qubit and qutrit factors has zero mutual information") {
  const DensityMatrix<double> rho = generate(StateRecipe::product({2, 3}, {1, 2}));
  REQUIRE(rho.dim() == 6);
  const SubadditivityReport<double> rep =
      check_subadditivity6(rho, PartitionScheme::qubit_qutrit());
  CHECK(std::abs(rep.mutual_info) < 1e-10);
  CHECK(rep.holds);
}

TEST_CASE("generate: every kind passes strict validation over an ensemble") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (const auto& r :
         {StateRecipe::ginibre(5, seed), StateRecipe::pure(4, seed),
          StateRecipe::dirichlet(3, seed), StateRecipe::product({2, 2}, {seed, seed + 1})}) {
      const DensityMatrix<double> rho = generate(r);  // validates at 1e-9 internally
      CHECK(rho.diagnostics().trace_deviation < 1e-12);
    }
  }
}

TEST_CASE("generate: dimension errors") {
  CHECK_THROWS_AS(generate(StateRecipe::ginibre(1, 0)), InvalidDimension);
  CHECK_THROWS_AS(generate(StateRecipe::product({2}, {1})), InvalidDimension);
  CHECK_THROWS_AS(generate(StateRecipe::product({2, 1}, {1, 2})), InvalidDimension);
}

TEST_CASE("gaussian source: deterministic, sane moments") {
  GaussianSource a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.gaussian() == b.gaussian());

  GaussianSource src(123);
  double sum = 0, sumsq = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double g = src.gaussian();
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sumsq / n - 1.0) < 0.05);
}
