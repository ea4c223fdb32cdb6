#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "mgp/errors.hpp"
#include "mgp/model.hpp"
#include "mgp/rng.hpp"

using namespace mgp;
using testing::exchangeable_variogram;
using testing::triangular_matrix;

namespace {

std::vector<FactorFamily> logistic_families(std::size_t r, double alpha = 0.5) {
  return std::vector<FactorFamily>(r, Logistic{alpha});
}

}  // namespace

TEST_CASE("validate: triangular example") {
  const MixtureModel model = testing::triangular_logistic();
  CHECK(model.dim() == 3);
  CHECK(model.factors() == 3);
  const auto sigs = signatures(model);
  REQUIRE(sigs.size() == 3);
  CHECK(sigs[0] == Signature{0, 1, 2});
  CHECK(sigs[1] == Signature{1, 2});
  CHECK(sigs[2] == Signature{2});
  CHECK(sigs[0].to_string() == "{1,2,3}");
  CHECK(model.warnings().empty());
  CHECK(model.masses() == std::vector<double>(3, 1.0 / 3));
  CHECK(extreme_directions(model).size() == 3);
}

TEST_CASE("validate: identity and full-support matrices") {
  const MixtureModel id = testing::independence(3);
  const auto sigs = signatures(id);
  CHECK(sigs[0] == Signature{0});
  CHECK(sigs[1] == Signature{1});
  CHECK(sigs[2] == Signature{2});

  const Matrix full = Matrix::Constant(3, 4, 0.25);
  const MixtureModel dup = validate(full, logistic_families(4));
  for (const auto& s : signatures(dup)) CHECK(s == Signature{0, 1, 2});
  CHECK(extreme_directions(dup) == std::vector<Signature>{Signature{0, 1, 2}});
  CHECK(dup.warnings().size() == 3);
}

TEST_CASE("validate: duplicate signatures deduplicate in extreme_directions") {
  Matrix a(2, 2);
  a << 0.5, 0.5, 0.5, 0.5;
  const MixtureModel model = validate(a, logistic_families(2));
  CHECK(signatures(model).size() == 2);
  CHECK(extreme_directions(model).size() == 1);
  CHECK_FALSE(model.warnings().empty());
}

TEST_CASE("validate: errors") {
  Matrix row(3, 3);
  row << 1, 0, 0, 0.6, 0.6, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3;
  CHECK_THROWS_AS(validate(row, logistic_families(3)), RowSumError);

  Matrix zero_col(2, 2);
  zero_col << 1, 0, 1, 0;
  CHECK_THROWS_AS(validate(zero_col, logistic_families(2)), EmptyColumnError);

  Matrix negative(1, 2);
  negative << 1.5, -0.5;
  CHECK_THROWS_AS(validate(negative, logistic_families(2)), BadCoefficient);

  CHECK_THROWS_AS(validate(triangular_matrix(), logistic_families(3, 1.0)), BadAlpha);
  CHECK_THROWS_AS(validate(triangular_matrix(), logistic_families(3, 0.0)), BadAlpha);
  CHECK_THROWS_AS(validate(triangular_matrix(), logistic_families(2)), ShapeError);

  CHECK_THROWS_AS(validate(triangular_matrix(), logistic_families(3), std::vector<double>{0.5, 0.5, 0.0}),
                  BadMass);
  CHECK_THROWS_AS(validate(triangular_matrix(), logistic_families(3), std::vector<double>{0.5, 0.3, 0.3}),
                  BadMass);

  // Variogram sized for the wrong signature.
  CHECK_THROWS_AS(validate(triangular_matrix(), {HueslerReiss{exchangeable_variogram(2, 1.0)},
                                                 HueslerReiss{exchangeable_variogram(2, 1.0)},
                                                 HueslerReiss{Matrix(0, 0)}}),
                  BadVariogram);
  Matrix not_cnd(2, 2);
  not_cnd << 0, -1, -1, 0;
  CHECK_THROWS_AS(validate(triangular_matrix(), {Logistic{0.5}, HueslerReiss{not_cnd}, Logistic{0.5}}),
                  BadVariogram);
}

TEST_CASE("validate: rows summing to one within 1e-9 relative are accepted") {
  Matrix a(2, 2);
  a << 0.3, 0.7 + 5e-10, 0.5, 0.5;
  CHECK_NOTHROW(validate(a, logistic_families(2)));
  a(0, 1) = 0.7 + 5e-9;
  CHECK_THROWS_AS(validate(a, logistic_families(2)), RowSumError);
}

TEST_CASE("single column model accepts mass 1") {
  const MixtureModel m = validate(Matrix::Ones(3, 1), logistic_families(1));
  CHECK(m.masses() == std::vector<double>{1.0});
  CHECK(m.face_weights().weights[0] == doctest::Approx(1.0));
}

TEST_CASE("chi_positive") {
  const MixtureModel model = testing::triangular_logistic();
  CHECK(chi_positive(model, Signature{1}));
  CHECK(chi_positive(model, Signature{0, 1}));
  CHECK(chi_positive(model, Signature{0, 1, 2}));

  Matrix a(2, 2);
  a << 1, 0, 0, 1;
  const MixtureModel indep = validate(a, logistic_families(2));
  CHECK_FALSE(chi_positive(indep, Signature{0, 1}));
  CHECK(chi_positive(indep, Signature{0}));
}

TEST_CASE("signature properties on random matrices") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = 1 + trial % 5;
    const Eigen::Index r = 1 + (trial / 5) % 4;
    Matrix a(d, r);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < r; ++k)
        a(j, k) = rng.uniform_open() < 0.4 ? 0.0 : rng.uniform_open();
    // Make every row and column nonzero, then normalise rows.
    for (Eigen::Index j = 0; j < d; ++j) a(j, j % r) += 0.1;
    for (Eigen::Index k = 0; k < r; ++k) a(k % d, k) += 0.1;
    for (Eigen::Index j = 0; j < d; ++j) a.row(j) /= a.row(j).sum();

    const MixtureModel model = validate(a, logistic_families(static_cast<std::size_t>(r)));
    const auto sigs = signatures(model);

    // Union of signatures covers every component.
    std::vector<bool> covered(static_cast<std::size_t>(d), false);
    for (const auto& s : sigs)
      for (auto j : s) covered[j] = true;
    CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));

    // Every signature has positive chi and so does each of its subsets.
    for (const auto& s : sigs) {
      CHECK(chi_positive(model, s));
      CHECK(chi_positive(model, Signature{s[0]}));
    }

    // Column permutation permutes signatures.
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    Matrix b(d, r);
    for (Eigen::Index k = 0; k < r; ++k) b.col(k) = a.col(perm[static_cast<std::size_t>(k)]);
    const auto sigs_b = signatures(validate(b, logistic_families(static_cast<std::size_t>(r))));
    for (Eigen::Index k = 0; k < r; ++k)
      CHECK(sigs_b[static_cast<std::size_t>(k)] == sigs[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);

    // Weights are a probability vector.
    double total = 0.0;
    for (double w : model.face_weights().weights) {
      CHECK(w > 0.0);
      total += w;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("chi_positive is monotone under supersets") {
  const MixtureModel model = testing::triangular_logistic();
  // {1,2} is positive and so are all of its subsets; supersets of a negative
  // set stay negative.
  Matrix a(3, 2);
  a << 1, 0, 0.5, 0.5, 0, 1;
  const MixtureModel m2 = validate(a, logistic_families(2));
  CHECK_FALSE(chi_positive(m2, Signature{0, 2}));
  CHECK_FALSE(chi_positive(m2, Signature{0, 1, 2}));
  CHECK(chi_positive(m2, Signature{0, 1}));
  CHECK(chi_positive(m2, Signature{1, 2}));
}
