#include <gtest/gtest.h>

#include <random>

#include "dhecke/core/errors.hpp"
#include "dhecke/kernel/abelian.hpp"
#include "dhecke/kernel/exterior.hpp"
#include "dhecke/kernel/finite_field.hpp"
#include "dhecke/kernel/fp_matrix.hpp"
#include "dhecke/kernel/lattice.hpp"
#include "dhecke/kernel/poly_fp.hpp"

using namespace dhecke;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  Integer prev = 1;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
  }
  for (Eigen::Index i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i) < 0) return false;
    if (prev == 0 && d(i, i) != 0) return false;
    if (prev != 0 && d(i, i) % prev != 0) return false;
    prev = d(i, i);
  }
  return true;
}

}  // namespace

TEST(SmithNormalForm, SmallExamples) {
  auto s = smith_normal_form(int_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.D, int_matrix({{1, 0}, {0, 6}}));
  auto id = smith_normal_form(int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(id.D, int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(smith_normal_form(int_matrix({{2}})).D, int_matrix({{2}}));
}

TEST(SmithNormalForm, RandomReconstruction) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
    }
    auto s = smith_normal_form(m);
    EXPECT_TRUE(is_diagonal_chain(s.D));
    EXPECT_EQ(abs_value(determinant(s.U)), 1);
    EXPECT_EQ(abs_value(determinant(s.V)), 1);
    IntMatrix prod = s.U * m * s.V;
    EXPECT_EQ(prod, s.D);
  }
}

TEST(HermiteNormalForm, UpperTriangularReduced) {
  // Lattice spanned by (31, 0) and (-8, 1) in coordinates (1, θ).
  IntMatrix gens = int_matrix({{31, -8, 0}, {0, 1, 62}});
  IntMatrix h = hermite_normal_form(gens);
  EXPECT_EQ(h, int_matrix({{31, 23}, {0, 1}}));
  IntMatrix hm = hermite_normal_form(gens, Integer(31));
  EXPECT_EQ(hm, h);
}

TEST(KernelModulo, MatchesBruteForce) {
  // {x in Z^2 : 2 x0 + 3 x1 ≡ 0 mod 6} has index 6 (the map Z^2 -> Z/6 is onto).
  IntMatrix a = int_matrix({{2, 3}});
  IntMatrix k = kernel_modulo(a, {Integer(6)});
  EXPECT_EQ(abs_value(determinant(k)), 6);
  for (long x0 = -6; x0 <= 6; ++x0) {
    for (long x1 = -6; x1 <= 6; ++x1) {
      const bool in_kernel = (2 * x0 + 3 * x1) % 6 == 0;
      // Membership in an upper triangular lattice: solve from the bottom.
      Integer r1 = x1;
      bool member = r1 % k(1, 1) == 0;
      if (member) {
        Integer c1 = r1 / k(1, 1);
        Integer r0 = Integer(x0) - c1 * k(0, 1);
        member = r0 % k(0, 0) == 0;
      }
      EXPECT_EQ(member, in_kernel) << x0 << "," << x1;
    }
  }
}

TEST(AbelianPresentation, CyclicProducts) {
  AbelianPresentation g(int_matrix({{6, 0}, {0, 4}}));
  ASSERT_EQ(g.invariants(), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(g.order(), 24);
  EXPECT_EQ(g.reduce(std::vector<std::int64_t>{6, 4}), g.identity());
  EXPECT_NE(g.reduce(std::vector<std::int64_t>{3, 0}), g.identity());
}

TEST(AbelianPresentation, EnumeratedUnitGroupModFifteen) {
  // (Z/15)^× ≅ Z/2 × Z/4.
  std::vector<std::size_t> candidates;
  for (std::size_t x = 1; x < 15; ++x) {
    if (std::gcd<std::size_t>(x, 15) == 1) candidates.push_back(x);
  }
  auto g = enumerate_abelian_group(15, 8, 1, candidates,
                                   [](std::size_t a, std::size_t b) { return a * b % 15; });
  EXPECT_EQ(g.presentation.invariants(), (std::vector<std::int64_t>{2, 4}));
  for (auto a : candidates) {
    for (auto b : candidates) {
      EXPECT_EQ(g.coordinates[a * b % 15], g.presentation.add(g.coordinates[a], g.coordinates[b]));
    }
  }
}

TEST(FpRankKernel, Examples) {
  EXPECT_EQ(fp_rank(FpMatrix(5, 2, 2)), 0);
  FpEntries a(2, 2);
  a << 1, 2, 2, 4;
  auto rk = fp_rank_kernel(FpMatrix(5, a));
  EXPECT_EQ(rk.rank, 1);
  ASSERT_EQ(rk.kernel_basis.size(), 1U);
  // Kernel is spanned by (3, 1): normalise the basis vector's last entry.
  FpVector v = rk.kernel_basis[0];
  const u64 s = invmod(static_cast<u64>(v(1)), 5);
  EXPECT_EQ(static_cast<u64>(v(0)) * s % 5, 3U);
  FpEntries id = FpEntries::Identity(4, 4);
  EXPECT_EQ(fp_rank(FpMatrix(7, id)), 4);
}

TEST(FpRankKernel, RankNullityAgainstEnumeration) {
  std::mt19937 rng(7);
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    std::uniform_int_distribution<std::int64_t> entry(0, static_cast<std::int64_t>(p) - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const int rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
      FpEntries a(rows, cols);
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a(i, j) = entry(rng);
      }
      FpMatrix m(p, a);
      auto rk = fp_rank_kernel(m);
      EXPECT_EQ(rk.rank + static_cast<Eigen::Index>(rk.kernel_basis.size()), cols);
      for (const auto& v : rk.kernel_basis) EXPECT_TRUE(m.apply(v).isZero());
      // Count kernel vectors directly: must be p^{dim ker}.
      u64 total = 1, count = 0;
      for (int j = 0; j < cols; ++j) total *= p;
      for (u64 code = 0; code < total; ++code) {
        FpVector x(cols);
        u64 rest = code;
        for (int j = 0; j < cols; ++j) {
          x(j) = static_cast<std::int64_t>(rest % p);
          rest /= p;
        }
        if (m.apply(x).isZero()) ++count;
      }
      u64 expected = 1;
      for (std::size_t k = 0; k < rk.kernel_basis.size(); ++k) expected *= p;
      EXPECT_EQ(count, expected);
    }
  }
}

TEST(FpRowSpace, TracksRank) {
  FpRowSpace space(5, 3);
  FpVector a(3), b(3), c(3);
  a << 1, 2, 3;
  b << 2, 4, 6;
  c << 0, 1, 1;
  EXPECT_TRUE(space.insert(a));
  EXPECT_FALSE(space.insert(b));
  EXPECT_TRUE(space.insert(c));
  EXPECT_EQ(space.rank(), 2);
}

TEST(Exterior, ColexIndexing) {
  EXPECT_EQ(colex_rank(0b011), 0U);
  EXPECT_EQ(colex_rank(0b101), 1U);
  EXPECT_EQ(colex_rank(0b110), 2U);
  EXPECT_EQ(colex_rank(0b1001), 3U);
  for (unsigned k = 0; k <= 5; ++k) {
    for (std::uint64_t r = 0; r < binomial(6, k); ++r) EXPECT_EQ(colex_rank(colex_unrank(r, k)), r);
  }
}

TEST(Exterior, WedgeExamples) {
  const auto e1 = MultiVector::basis(5, 3, 0b001);
  const auto e2 = MultiVector::basis(5, 3, 0b010);
  EXPECT_EQ(wedge(e1, e2), MultiVector::basis(5, 3, 0b011));
  EXPECT_TRUE(wedge(e1, e1).is_zero());
  MultiVector sum = e1;
  sum += e2;
  EXPECT_EQ(wedge(sum, e2), MultiVector::basis(5, 3, 0b011));
  EXPECT_EQ(wedge(e2, e1), MultiVector::basis(5, 3, 0b011).scaled(-1));
  const auto top = MultiVector::basis(5, 3, 0b111);
  auto over = wedge(top, e1);
  EXPECT_EQ(over.degree(), 4U);
  EXPECT_TRUE(over.is_zero());
}

TEST(PolyFp, FactorExamples) {
  const std::vector<Integer> f{-2, 0, 1};
  auto f31 = factor_poly_mod_ell(f, 31);
  ASSERT_EQ(f31.size(), 2U);
  EXPECT_EQ(f31[0].first, PolyFp(31, {23, 1}));  // x - 8
  EXPECT_EQ(f31[1].first, PolyFp(31, {8, 1}));   // x + 8
  auto f11 = factor_poly_mod_ell(f, 11);
  ASSERT_EQ(f11.size(), 1U);
  EXPECT_EQ(f11[0].first.degree(), 2);
  EXPECT_EQ(f11[0].second, 1U);
  auto f2 = factor_poly_mod_ell(f, 2);
  ASSERT_EQ(f2.size(), 1U);
  EXPECT_EQ(f2[0].first, PolyFp::x(2));
  EXPECT_EQ(f2[0].second, 2U);
}

TEST(PolyFp, FactorisationReproducesInput) {
  std::mt19937_64 rng(99);
  for (u64 ell : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL, 1000003ULL}) {
    std::uniform_int_distribution<u64> coef(0, ell - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const int deg = 1 + trial % 6;
      std::vector<u64> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = coef(rng);
      c.back() = 1;
      PolyFp f(ell, c);
      // Build in a repeated factor now and then.
      if (trial % 4 == 0) f = f * f;
      auto factors = factor_poly_mod_ell(f);
      PolyFp prod = PolyFp::one(ell);
      for (const auto& [g, m] : factors) {
        EXPECT_TRUE(is_irreducible(g));
        EXPECT_EQ(g.lead(), 1U);
        for (unsigned i = 0; i < m; ++i) prod = prod * g;
      }
      EXPECT_EQ(prod, f);
      for (std::size_t i = 1; i < factors.size(); ++i) {
        EXPECT_TRUE(factor_less(factors[i - 1].first, factors[i].first));
      }
    }
  }
}

TEST(PolyFp, IrreducibilityAgainstRootsForCubics) {
  // A cubic is irreducible iff it has no root.
  for (u64 ell : {2ULL, 3ULL, 5ULL}) {
    for (u64 code = 0; code < ell * ell * ell; ++code) {
      PolyFp f(ell, {code % ell, (code / ell) % ell, code / (ell * ell), 1});
      bool has_root = false;
      for (u64 t = 0; t < ell; ++t) has_root = has_root || f.evaluate(t) == 0;
      EXPECT_EQ(is_irreducible(f), !has_root);
    }
  }
}

TEST(FiniteField, ConwayTableIsPrimitive) {
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    for (unsigned k = 1; k <= 4; ++k) {
      FiniteField f = FiniteField::extension(p, k);
      EXPECT_EQ(f.degree(), k);
      // The class of t must generate the multiplicative group.
      FqElement t = k == 1 ? f.from_int(static_cast<std::int64_t>(p - f.modulus().coeff(0)))
                           : f.from_coords({0, 1});
      EXPECT_TRUE(f.is_generator(t)) << p << "^" << k;
    }
  }
  EXPECT_EQ(FiniteField::extension(11, 2).degree(), 2U);
}

TEST(FiniteField, FieldAxiomsInNineElements) {
  FiniteField f = FiniteField::extension(3, 2);
  for (u64 a = 1; a < 9; ++a) {
    FqElement x = f.from_encoding(a);
    EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    EXPECT_EQ(f.pow(x, 8), f.one());
  }
  EXPECT_EQ(f.find_generator(), f.from_encoding(f.encoding(f.find_generator())));
}

TEST(PthCharacter, Examples) {
  FiniteField f31 = FiniteField::prime_field(31);
  const FqElement g = f31.from_int(3);
  EXPECT_EQ(pth_character(f31, f31.from_int(3), 5, g), 1U);
  EXPECT_EQ(pth_character(f31, f31.from_int(1), 5, g), 0U);
  EXPECT_EQ(pth_character(f31, f31.from_int(19), 5, g), 4U);
  EXPECT_EQ(f31.find_generator(), g);
  EXPECT_THROW(pth_character(f31, f31.from_int(3), 5, f31.from_int(2)), GeneratorError);
  EXPECT_THROW(pth_character(f31, f31.from_int(3), 7, g), CharacterUndefined);
}

TEST(PthCharacter, HomomorphismWithIndexP) {
  FiniteField f = FiniteField::extension(11, 2);  // q = 121, 5 | 120
  const FqElement g = f.find_generator();
  PthCharacter chi(f, 5, g);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> pick(1, 120);
  for (int i = 0; i < 200; ++i) {
    FqElement x = f.from_encoding(pick(rng)), y = f.from_encoding(pick(rng));
    EXPECT_EQ(chi(f.mul(x, y)), (chi(x) + chi(y)) % 5);
  }
  u64 kernel = 0;
  for (u64 code = 1; code < 121; ++code) kernel += chi(f.from_encoding(code)) == 0;
  EXPECT_EQ(kernel, 120U / 5);
}
