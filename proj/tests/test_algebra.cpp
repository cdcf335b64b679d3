#include "liestat/lie_algebra.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "liestat/errors.hpp"
#include "liestat/presets.hpp"
#include "test_util.hpp"

namespace liestat {
namespace {

using test::unit;

TEST(Bracket, AbelianVanishes) {
  const LieAlgebra r3 = preset("r3");
  EXPECT_EQ(r3.bracket(unit(3, 0), unit(3, 1)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Bracket, MilnorFrame) {
  const LieAlgebra g = MilnorFrameSpec{1, 3, 1}.algebra();
  // [e2,e3] = c1 e1
  EXPECT_NEAR((g.bracket(unit(3, 1), unit(3, 2)) - unit(3, 0)).cwiseAbs().maxCoeff(), 0, 1e-15);
  // [e3,e1] = c2 e2
  EXPECT_NEAR((g.bracket(unit(3, 2), unit(3, 0)) - 3 * unit(3, 1)).cwiseAbs().maxCoeff(), 0,
              1e-15);
}

TEST(Bracket, NonUnimodularFrame) {
  const LieAlgebra g = NonUnimodularSpec{0, 1}.algebra();
  // [e3,e1] = (1-xi)(eta e2 - e3) = e2 - e3
  const Eigen::VectorXd v = g.bracket(unit(3, 2), unit(3, 0));
  EXPECT_NEAR((v - (unit(3, 1) - unit(3, 2))).cwiseAbs().maxCoeff(), 0, 1e-15);
}

TEST(Bracket, Bilinearity) {
  std::mt19937_64 rng(11);
  const LieAlgebra g = test::random_algebra(rng);
  const Eigen::VectorXd x = Eigen::VectorXd::Random(3), y = Eigen::VectorXd::Random(3),
                        z = Eigen::VectorXd::Random(3);
  const Eigen::VectorXd lhs = g.bracket(x + 2 * z, y);
  const Eigen::VectorXd rhs = g.bracket(x, y) + 2 * g.bracket(z, y);
  EXPECT_NEAR((lhs - rhs).cwiseAbs().maxCoeff(), 0, 1e-12);
  EXPECT_NEAR((g.bracket(x, y) + g.bracket(y, x)).cwiseAbs().maxCoeff(), 0, 1e-12);
}

TEST(Bracket, DimensionMismatchRejected) {
  const LieAlgebra r3 = preset("r3");
  EXPECT_THROW(r3.bracket(Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(3)), ValidationError);
}

TEST(JacobiDefect, PresetsAreValid) {
  for (const char* name : {"r3", "su2", "sl2r", "e2", "e11", "nil3"})
    EXPECT_LE(preset(name).jacobi_defect(), 1e-12) << name;
  EXPECT_LE(preset("milnor", {1, 3, 1}).jacobi_defect(), 1e-12);
  EXPECT_LE(preset("nonuni", {0.5, 0.3}).jacobi_defect(), 1e-12);
  EXPECT_LE(preset("g2d", {std::sqrt(2.0)}).jacobi_defect(), 1e-12);
  EXPECT_LE(preset("product_g2d_r", {0.5}).jacobi_defect(), 1e-12);
  EXPECT_LE(preset("sasaki_g", {-5}).jacobi_defect(), 1e-12);
}

TEST(JacobiDefect, HandBuiltSu2) {
  BilinearMap c(3);
  c.set(2, 0, 1, 1);
  c.set(2, 1, 0, -1);
  c.set(0, 1, 2, 1);
  c.set(0, 2, 1, -1);
  c.set(1, 2, 0, 1);
  c.set(1, 0, 2, -1);
  EXPECT_LE(jacobi_defect(c), 1e-12);
}

TEST(JacobiDefect, CorruptedSu2Detected) {
  BilinearMap c = preset("su2").structure();
  // perturb an off-diagonal slot; diagonal perturbations stay Lie algebras
  c.set(1, 1, 2, c.coeff(1, 1, 2) + 0.1);
  c.set(1, 2, 1, -c.coeff(1, 1, 2));
  EXPECT_GT(jacobi_defect(c), 0.05);
  EXPECT_THROW(LieAlgebra{c}, ValidationError);
}

TEST(JacobiDefect, AntisymmetryRejected) {
  BilinearMap c(2);
  c.set(0, 0, 1, 1.0);  // missing the mirrored entry
  EXPECT_GT(antisymmetry_defect(c), 0.5);
  EXPECT_THROW(LieAlgebra{c}, ValidationError);
}

TEST(UnimodularKernel, MilnorIsUnimodular) {
  const auto uk = unimodular_kernel(MilnorFrameSpec{1, 3, 1}.algebra());
  EXPECT_TRUE(uk.is_unimodular);
  EXPECT_EQ(uk.basis.size(), 3u);
}

TEST(UnimodularKernel, AbelianIsUnimodular) {
  EXPECT_TRUE(unimodular_kernel(preset("r3")).is_unimodular);
}

TEST(UnimodularKernel, NonUnimodularKernelIsSpanE2E3) {
  const auto uk = unimodular_kernel(NonUnimodularSpec{0.5, 0}.algebra());
  EXPECT_FALSE(uk.is_unimodular);
  ASSERT_EQ(uk.basis.size(), 2u);
  for (const auto& v : uk.basis) EXPECT_NEAR(v(0), 0, 1e-12);  // no e1 component
}

TEST(UnimodularKernel, KernelIsBracketClosedIdeal) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const LieAlgebra g = test::random_algebra(rng);
    const auto uk = unimodular_kernel(g);
    if (uk.is_unimodular) continue;
    Eigen::MatrixXd basis(3, uk.basis.size());
    for (size_t c = 0; c < uk.basis.size(); ++c) basis.col(c) = uk.basis[c];
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
    for (int i = 0; i < 3; ++i)
      for (size_t c = 0; c < uk.basis.size(); ++c) {
        const Eigen::VectorXd b = g.bracket(unit(3, i), uk.basis[c]);
        EXPECT_LE((b - basis * qr.solve(b)).cwiseAbs().maxCoeff(), 1e-9);
      }
  }
}

TEST(UnimodularKernel, NonuniKernelIsAbelian) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const LieAlgebra g = test::random_nonuni(rng);
    const auto uk = unimodular_kernel(g);
    ASSERT_EQ(uk.basis.size(), 2u);
    EXPECT_LE(g.bracket(uk.basis[0], uk.basis[1]).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Preset, G2dBracket) {
  const double nu2 = std::sqrt(2.0);
  const LieAlgebra g = preset("g2d", {nu2});
  EXPECT_EQ(g.dim(), 2);
  EXPECT_NEAR((g.bracket(unit(2, 0), unit(2, 1)) + (1 / nu2) * unit(2, 0)).cwiseAbs().maxCoeff(),
              0, 1e-15);
}

TEST(Preset, SasakiG) {
  const LieAlgebra g = preset("sasaki_g", {1});
  // [e2,e3] = ((c+3)/2) e1 = 2 e1, [e1,e2] = 2 e3
  EXPECT_NEAR((g.bracket(unit(3, 1), unit(3, 2)) - 2 * unit(3, 0)).cwiseAbs().maxCoeff(), 0, 1e-15);
  EXPECT_NEAR((g.bracket(unit(3, 0), unit(3, 1)) - 2 * unit(3, 2)).cwiseAbs().maxCoeff(), 0, 1e-15);
}

TEST(Preset, ProductNormalization) {
  // tr of ad(e1) restricted to the kernel equals 1/nu2; the normalized case is nu2 = 1/2
  const LieAlgebra g = preset("product_g2d_r", {0.5});
  EXPECT_NEAR(g.ad(0).trace(), 2.0, 1e-12);
  const auto uk = unimodular_kernel(g);
  EXPECT_FALSE(uk.is_unimodular);
}

TEST(Preset, ErrorsOnBadInput) {
  EXPECT_THROW(preset("no_such_family"), ParseError);
  EXPECT_THROW(preset("milnor", {1, 2}), ParseError);
  EXPECT_THROW(preset("nonuni", {-0.1, 0}), ValidationError);
  EXPECT_THROW(preset("g2d", {0}), ValidationError);
  EXPECT_THROW(preset("g2d", {-1}), ValidationError);
  EXPECT_THROW(preset("product_g2d_r", {0}), ValidationError);
}

TEST(Preset, ClassLabels) {
  EXPECT_EQ(milnor_class_label(1, 1, 1), "su2");
  EXPECT_EQ(milnor_class_label(2, 2, 2), "su2");
  EXPECT_EQ(milnor_class_label(-1, -1, -1), "su2");
  EXPECT_EQ(milnor_class_label(1, -1, -1), "sl2r");
  EXPECT_EQ(milnor_class_label(1, 1, -1), "sl2r");
  EXPECT_EQ(milnor_class_label(1, 1, 0), "e2");
  EXPECT_EQ(milnor_class_label(0, 1, 1), "e2");
  EXPECT_EQ(milnor_class_label(0, 1, -1), "e11");
  EXPECT_EQ(milnor_class_label(1, 0, 0), "nil3");
  EXPECT_EQ(milnor_class_label(0, 0, 0), "r3");
}

TEST(Preset, MilnorInvariant) {
  EXPECT_DOUBLE_EQ(milnor_invariant(0, 1), 2.0);
  EXPECT_DOUBLE_EQ(milnor_invariant(1, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(milnor_invariant(0.5, 0), 0.75);
}

TEST(NonUnimodularSpec, InducedMatrixNormalization) {
  // A = [[1+xi, -(1-xi)eta], [(1+xi)eta, 1-xi]]: trace 2, alpha*gamma + beta*delta = 0
  for (double xi : {0.0, 0.3, 1.0})
    for (double eta : {0.0, 0.7}) {
      const double a = 1 + xi, b = (1 + xi) * eta, g = -(1 - xi) * eta, d = 1 - xi;
      EXPECT_DOUBLE_EQ(a + d, 2.0);
      EXPECT_NEAR(a * g + b * d, 0.0, 1e-15);
      const LieAlgebra alg = NonUnimodularSpec{xi, eta}.algebra();
      // representation matrix of ad(e1) on span{e2,e3}
      EXPECT_NEAR(alg.ad(0)(1, 1), a, 1e-15);
      EXPECT_NEAR(alg.ad(0)(2, 1), b, 1e-15);
      EXPECT_NEAR(alg.ad(0)(1, 2), g, 1e-15);
      EXPECT_NEAR(alg.ad(0)(2, 2), d, 1e-15);
    }
}

TEST(ChangeFrame, PreservesJacobiAndDim) {
  std::mt19937_64 rng(47);
  const LieAlgebra g = test::random_milnor(rng);
  const LieAlgebra h = change_frame(g, test::random_orthogonal(rng, 3));
  EXPECT_EQ(h.dim(), 3);
  EXPECT_LE(h.jacobi_defect(), 1e-12);
}

}  // namespace
}  // namespace liestat
