// Copyright 2026 The seqmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <omp.h>

#include "generators.hpp"
#include "matchers.hpp"
#include "oracles.hpp"
#include "seqmeas/kernels.hpp"
#include "seqmeas/weyl.hpp"

namespace seqmeas {
namespace {

using testing::Gen;

class KernelsTest : public ::testing::Test {
 protected:
  // Force real concurrency even on a single-core runner.
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

std::vector<CMatrix> shifted_densities(Gen& gen, const WeylSystem& ws) {
  const auto mm = gen.measure(ws.group(), true);
  return mm.shifted(ws);
}

TEST_F(KernelsTest, GemmVariantsAgreeBitForBit) {
  Gen gen(1);
  for (auto [r, k, c] : {std::tuple{3, 4, 5}, {40, 40, 40}, {64, 17, 64}, {1, 100, 1}}) {
    const CMatrix a = gen.matrix(r, k), b = gen.matrix(k, c);
    EXPECT_EQ(kernels::serial::gemm(a, b), kernels::parallel::gemm(a, b));
  }
}

TEST_F(KernelsTest, GemmRejectsMismatchedShapes) {
  EXPECT_THROW(kernels::serial::gemm(CMatrix(2, 3), CMatrix(2, 3)), DimensionError);
  EXPECT_THROW(kernels::parallel::gemm(CMatrix(2, 3), CMatrix(2, 3)), DimensionError);
}

TEST_F(KernelsTest, CovariantChoiVariantsAgreeBitForBit) {
  Gen gen(2);
  for (const char* spec : {"2", "3", "2x2", "5", "2x3"}) {
    const WeylSystem ws(Group::parse(spec));
    const auto shifted = shifted_densities(gen, ws);
    EXPECT_EQ(kernels::serial::covariant_choi(shifted, ws.group().tables()),
              kernels::parallel::covariant_choi(shifted, ws.group().tables()))
        << spec;
  }
}

TEST_F(KernelsTest, CovariantChoiMatchesTranslatedProbeSum) {
  Gen gen(3);
  for (const char* spec : {"2", "3", "4", "2x2"}) {
    const Group g = Group::parse(spec);
    const WeylSystem ws(g);
    const testing::Lattice lat(g.moduli());
    const auto mm = gen.measure(g, true);
    const auto chois = kernels::serial::covariant_choi(mm.shifted(ws), g.tables());
    const std::size_t n = g.order();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const CMatrix expect = testing::oracle_covariant_map(lat, mm.densities(), k, CMatrix::unit(n, i, j));
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              EXPECT_NEAR(std::abs(chois[k](a * n + i, b * n + j) - expect(a, b)), 0.0, 1e-12);
        }
  }
}

TEST_F(KernelsTest, CovarianceResidualVariantsAgree) {
  Gen gen(4);
  const WeylSystem ws(Group::parse("3"));
  auto chois = kernels::serial::covariant_choi(shifted_densities(gen, ws), ws.group().tables());
  std::vector<kernels::WeylAction> actions;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t chi = 0; chi < 3; ++chi) actions.push_back({x, ws.weyl_op(x, chi)});
  const double s = kernels::serial::covariance_residual(chois, actions, ws.group().tables());
  const double p = kernels::parallel::covariance_residual(chois, actions, ws.group().tables());
  EXPECT_EQ(s, p);
  EXPECT_LE(s, 1e-12);

  // Breaking one outcome is seen by both.
  chois[1] = chois[1] * Complex(1.5);
  EXPECT_GT(kernels::serial::covariance_residual(chois, actions, ws.group().tables()), 1e-3);
  EXPECT_EQ(kernels::serial::covariance_residual(chois, actions, ws.group().tables()),
            kernels::parallel::covariance_residual(chois, actions, ws.group().tables()));
}

TEST_F(KernelsTest, EmptyShiftedPointsContributeNothing) {
  const WeylSystem ws(Group::parse("2"));
  std::vector<CMatrix> shifted{CMatrix::unit(2, 0, 0), CMatrix{}};
  std::vector<CMatrix> dense{CMatrix::unit(2, 0, 0), CMatrix(2, 2)};
  EXPECT_EQ(kernels::serial::covariant_choi(shifted, ws.group().tables()),
            kernels::serial::covariant_choi(dense, ws.group().tables()));
}

}  // namespace
}  // namespace seqmeas
