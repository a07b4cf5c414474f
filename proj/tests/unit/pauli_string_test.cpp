// Copyright 2026 The sptprobe Authors
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

#include "sptprobe/qsim/pauli_string.hpp"
#include "support/dense_oracle.hpp"
#include "support/generators.hpp"

namespace sptprobe {
namespace {

namespace dense = testing::dense;

TEST(PauliString, ParseAndPrintRoundTrip) {
  for (const char* text : {"+XYZI", "-iZZ", "+iY", "-X_Z"}) {
    const PauliString p = PauliString::parse(text);
    EXPECT_EQ(PauliString::parse(p.str()), p) << text;
  }
  EXPECT_EQ(PauliString::parse("-X_Z").str(), "-XIZ");
  EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(PauliString, SingleSiteProducts) {
  const auto x = PauliString::parse("X");
  const auto y = PauliString::parse("Y");
  const auto z = PauliString::parse("Z");
  EXPECT_EQ(x * y, PauliString::parse("iZ"));
  EXPECT_EQ(y * x, PauliString::parse("-iZ"));
  EXPECT_EQ(z * x, PauliString::parse("iY"));
  EXPECT_EQ(x * z, PauliString::parse("-iY"));
  EXPECT_TRUE((x * x).is_identity());
}

TEST(PauliString, HermiticityFollowsPhase) {
  EXPECT_TRUE(PauliString::parse("-XY").is_hermitian());
  EXPECT_FALSE(PauliString::parse("iXY").is_hermitian());
}

TEST(PauliString, CommutationCountsAnticommutingSites) {
  EXPECT_TRUE(PauliString::parse("XX").commutes_with(PauliString::parse("ZZ")));
  EXPECT_FALSE(PauliString::parse("XI").commutes_with(PauliString::parse("ZZ")));
}

// Property: the algebra agrees with dense matrices for random strings.
TEST(PauliStringProperty, ProductMatchesDenseMatrices) {
  testing::Gen gen(101);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + gen.below(5);
    const PauliString a = gen.pauli(n, false);
    const PauliString b = gen.pauli(n, false);
    const auto lhs = dense::pauli(a * b, n);
    const dense::Mat rhs = dense::pauli(a, n) * dense::pauli(b, n);
    ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << a.str() << " * " << b.str();
    const dense::Mat ab = dense::pauli(a, n) * dense::pauli(b, n);
    const dense::Mat ba = dense::pauli(b, n) * dense::pauli(a, n);
    ASSERT_EQ(a.commutes_with(b), (ab - ba).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST(PauliStringProperty, HermitianSquaresToIdentity) {
  testing::Gen gen(102);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliString p = gen.pauli(1 + gen.below(8), true);
    const PauliString sq = p * p;
    EXPECT_TRUE(sq.is_identity());
    EXPECT_EQ(sq.phase_exponent(), 0u);
  }
}

TEST(PauliStringProperty, MaskActionMatchesDenseMatrix) {
  testing::Gen gen(103);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + gen.below(4);
    const PauliString p = gen.pauli(n, false);
    const auto m = p.mask();
    const auto d = dense::pauli(p, n);
    for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
      const Complex v = (std::popcount(b & m.z) & 1) ? -m.coeff : m.coeff;
      ASSERT_LT(std::abs(d(static_cast<Eigen::Index>(b ^ m.x), static_cast<Eigen::Index>(b)) - v),
                1e-12);
    }
  }
}

TEST(PauliString, ConjugateFlipsYAndImaginaryPhase) {
  const auto p = PauliString::parse("iXY");
  EXPECT_LT((dense::pauli(p.conjugate(), 2) - dense::pauli(p, 2).conjugate()).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(PauliString, EmbeddingAndRestriction) {
  const auto p = PauliString::parse("-ZX");
  const auto e = p.embedded(5, 2);
  EXPECT_EQ(e.str(), "-IIZXI");
  EXPECT_EQ(e.restricted({2, 3}), p);
  EXPECT_EQ(e.support(), (std::vector<unsigned>{2, 3}));
  EXPECT_THROW(p.embedded(2, 1), std::out_of_range);
}

}  // namespace
}  // namespace sptprobe
