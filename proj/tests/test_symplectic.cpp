#include <doctest.h>

#include "ppav/linalg.hpp"
#include "ppav/symplectic.hpp"
#include "test_helpers.hpp"

using namespace ppav;
using ppav::testing::Rng;

TEST_CASE("symplectic membership") {
  for (std::size_t g = 1; g <= 4; ++g) {
    CHECK(is_symplectic(IntegerMatrix::identity(2 * g)));
    CHECK(is_symplectic(standard_symplectic_form(g)));
  }
  IntegerMatrix d = IntegerMatrix::identity(4);
  d(0, 0) = 2;
  CHECK_FALSE(is_symplectic(d));
  CHECK_THROWS_AS(is_symplectic(IntegerMatrix::identity(3)), OddDimension);
}

TEST_CASE("normal forms of the extremal types") {
  InvolutionType minus_id(0, 3, 0);
  InvolutionType plus_id(0, 0, 3);
  CHECK(reiner_normal_form(minus_id).matrix() == -IntegerMatrix::identity(6));
  CHECK(reiner_normal_form(plus_id).matrix() == IntegerMatrix::identity(6));
  CHECK_FALSE(minus_id.is_admissible());
  CHECK_FALSE(plus_id.is_admissible());
  CHECK(InvolutionType(1, 0, 1).is_admissible());
}

TEST_CASE("normal form of type (1,0,1) in genus 3") {
  IntegerMatrix expected{{1, 0, 0, 0, 0, 0},  {1, -1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                         {0, 0, 0, 1, 1, 0},  {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 1}};
  SymplecticInvolution r = reiner_normal_form(InvolutionType(1, 0, 1));
  CHECK(r.matrix() == expected);
  CHECK(r.type() == InvolutionType(1, 0, 1));
}

TEST_CASE("classification of -id") {
  InvolutionType t = classify_involution(-IntegerMatrix::identity(6));
  CHECK(t == InvolutionType(0, 3, 0));
}

TEST_CASE("classification rejects non-involutions and non-symplectic input") {
  CHECK_THROWS_AS(classify_involution(standard_symplectic_form(2)), NotInvolution);
  IntegerMatrix d = IntegerMatrix::identity(4);
  d(0, 0) = 2;
  CHECK_THROWS_AS(classify_involution(d), NotSymplectic);
}

TEST_CASE("classification round trip over all types up to genus 8") {
  for (int g = 1; g <= 8; ++g)
    for (int x = 0; 2 * x <= g; ++x)
      for (int y = 0; y <= g - 2 * x; ++y) {
        InvolutionType t(x, y, g - 2 * x - y);
        SymplecticInvolution r = reiner_normal_form(t);
        CHECK(r.type() == t);
        CHECK(is_symplectic(r.matrix()));
        CHECK(r.matrix() * r.matrix() == IntegerMatrix::identity(2 * g));
        // trace and fixed-lattice rank carry (y, z) and (x, z)
        CHECK(r.matrix().trace() == Integer(2 * (t.z - t.y)));
        IntegerMatrix fixed = integer_kernel(r.matrix() - IntegerMatrix::identity(2 * g));
        CHECK(fixed.cols() == static_cast<std::size_t>(2 * (t.x + t.z)));
      }
}

TEST_CASE("classification is invariant under symplectic conjugation") {
  Rng rng(21);
  for (int g = 2; g <= 5; ++g)
    for (int x = 0; 2 * x <= g; ++x)
      for (int y = 0; y <= g - 2 * x; ++y) {
        InvolutionType t(x, y, g - 2 * x - y);
        IntegerMatrix n = reiner_normal_form(t).matrix();
        for (int trial = 0; trial < 10; ++trial) {
          IntegerMatrix e = random_symplectic(g, rng.next(), 10);
          IntegerMatrix conj = unimodular_inverse(e) * n * e;
          CHECK(classify_involution(conj) == t);
        }
      }
}

TEST_CASE("negation swaps the sign multiplicities") {
  SymplecticInvolution minus_id =
      SymplecticInvolution::from_matrix(-IntegerMatrix::identity(8));
  CHECK(negate(minus_id).type() == InvolutionType(0, 0, 4));

  SymplecticInvolution a = reiner_normal_form(InvolutionType(0, 1, 2));
  CHECK(negate(a).type() == InvolutionType(0, 2, 1));
  SymplecticInvolution b = reiner_normal_form(InvolutionType(1, 0, 1));
  CHECK(negate(b).type() == InvolutionType(1, 1, 0));
  CHECK(negate(negate(b)).matrix() == b.matrix());

  for (int g = 3; g <= 6; ++g)
    for (int x = 0; 2 * x <= g; ++x)
      for (int y = 0; y <= g - 2 * x; ++y) {
        InvolutionType t(x, y, g - 2 * x - y);
        CHECK(negate(reiner_normal_form(t)).type() == t.swapped());
      }
}

TEST_CASE("random symplectic words") {
  CHECK(random_symplectic(3, 7, 0) == IntegerMatrix::identity(6));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    IntegerMatrix m = random_symplectic(2 + seed % 3, seed, 12);
    CHECK(is_symplectic(m));
    CHECK(determinant(m) == 1);
    CHECK(m == random_symplectic(2 + seed % 3, seed, 12));
  }
  CHECK(random_symplectic(2, 5, 9) != random_symplectic(2, 6, 9));
}

TEST_CASE("transposition preserves the type") {
  // tR = J R J^-1 for an involution, so transposing is a symplectic conjugation
  for (int g = 2; g <= 6; ++g)
    for (int x = 0; 2 * x <= g; ++x)
      for (int y = 0; y <= g - 2 * x; ++y) {
        InvolutionType t(x, y, g - 2 * x - y);
        CHECK(classify_involution(reiner_normal_form(t).matrix().transposed()) == t);
      }
}

TEST_CASE("group closure of -id") {
  std::set<IntegerMatrix> group = group_closure({-IntegerMatrix::identity(4)}, 10);
  CHECK(group.size() == 2);
  CHECK(group.count(IntegerMatrix::identity(4)) == 1);
  CHECK(group.count(-IntegerMatrix::identity(4)) == 1);
}

TEST_CASE("group closure of two sign involutions in genus 3") {
  // enumeration gives the klein four-group of coordinate sign patterns
  std::set<IntegerMatrix> group =
      group_closure({reiner_normal_form(InvolutionType(0, 1, 2)).matrix(),
                     reiner_normal_form(InvolutionType(0, 2, 1)).matrix()},
                    100);
  CHECK(group.size() == 4);
  CHECK(group.count(IntegerMatrix::identity(6)) == 1);
}

TEST_CASE("group closure reports the cap with a partial count") {
  // a shear of infinite order generates an unbounded cyclic group
  IntegerMatrix shear = IntegerMatrix::identity(2);
  shear(0, 1) = 1;
  CHECK_THROWS_AS(group_closure({shear}, 50), CapExceeded);
  try {
    group_closure({shear}, 50);
  } catch (const CapExceeded& e) {
    CHECK(e.partial_size > 50);
  }
}
