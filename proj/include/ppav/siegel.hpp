#pragma once

#include <vector>

#include "ppav/matrix.hpp"
#include "ppav/symplectic.hpp"

namespace ppav {

/// A point of the Siegel upper half-space with Gaussian-rational entries:
/// symmetric g x g with exactly positive-definite imaginary part.
class SiegelPoint {
 public:
  static SiegelPoint from_matrix(const GaussianMatrix& z);

  std::size_t g() const { return z_.rows(); }
  const GaussianMatrix& matrix() const { return z_; }

  /// The g x 2g period matrix (I_g  Z).
  GaussianMatrix period_matrix() const;

  friend bool operator==(const SiegelPoint& a, const SiegelPoint& b) { return a.z_ == b.z_; }
  friend bool operator!=(const SiegelPoint& a, const SiegelPoint& b) { return !(a == b); }

 private:
  explicit SiegelPoint(GaussianMatrix z) : z_(std::move(z)) {}
  GaussianMatrix z_;
};

SiegelPoint make_siegel(const GaussianMatrix& z);

/// Modular action of R = (A B; C D) on Z, computed as (A+ZC)^-1 (B+ZD).
/// Right action: acting by R1*R2 equals acting by R1, then by R2.
SiegelPoint act(const IntegerMatrix& r, const SiegelPoint& z);

/// True iff Z is a fixed point of the action of R.
bool is_fixed(const IntegerMatrix& r, const SiegelPoint& z);

/// True iff W Z = Z tW. Equivalent to is_fixed(W (+) tW, Z) for g x g W.
bool commutation_check(const IntegerMatrix& w, const SiegelPoint& z);

/// Free parameters of the fixed-point stratum S(x,y,z): the upper 2x x 2x
/// block is a grid of 2x2 blocks (2a a; a b), bordered by columns (0 c)^t and
/// (2d d)^t, then symmetric tails Zy and Zz with a zero y x z corner.
struct StratumParameters {
  InvolutionType type;
  std::vector<GaussianRational> a;  // x(x+1)/2 entries, grid row-major
  std::vector<GaussianRational> b;  // x(x+1)/2 entries
  std::vector<GaussianRational> c;  // x*y entries
  std::vector<GaussianRational> d;  // x*z entries
  GaussianMatrix Zy;                // y x y symmetric
  GaussianMatrix Zz;                // z x z symmetric

  /// a_j = b_j = i on diagonal grid blocks, all couplings zero, tails i*I.
  static StratumParameters defaults(const InvolutionType& t);

  std::size_t free_parameter_count() const;
};

/// Linear index of grid block (i,j), 0 <= i <= j < x, in the a/b lists.
std::size_t stratum_grid_index(std::size_t x, std::size_t i, std::size_t j);

SiegelPoint stratum_build(const StratumParameters& p);

bool stratum_contains(const InvolutionType& t, const SiegelPoint& z);

/// (Z1 + Z2) / 2; strata are convex, so membership is preserved.
SiegelPoint stratum_midpoint(const SiegelPoint& z1, const SiegelPoint& z2,
                             const InvolutionType& t);

/// True iff M (I Z1) = (I Z2) R, the defining equation of a homomorphism of
/// the corresponding tori in period-matrix coordinates.
bool check_homomorphism(const GaussianMatrix& m, const IntegerMatrix& r, const SiegelPoint& z1,
                        const SiegelPoint& z2);

}  // namespace ppav
