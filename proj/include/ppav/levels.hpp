#pragma once

#include "ppav/matrix.hpp"
#include "ppav/symplectic.hpp"

namespace ppav {

/// An involution on the n-torsion subgroup: a 2g x 2g matrix over Z_n with
/// canonical representatives 0..n-1 squaring to the identity mod n.
class LevelStructure {
 public:
  static LevelStructure from_matrix(const IntegerMatrix& rn, const Integer& n);

  const Integer& n() const { return n_; }
  std::size_t g() const { return rn_.rows() / 2; }
  const IntegerMatrix& matrix() const { return rn_; }

 private:
  LevelStructure(IntegerMatrix rn, Integer n) : rn_(std::move(rn)), n_(std::move(n)) {}
  IntegerMatrix rn_;
  Integer n_;
};

/// Entry-wise reduction of an integral involution mod n >= 2.
LevelStructure reduce_mod(const SymplecticInvolution& r, const Integer& n);

/// Conjugacy over Z_p for an odd prime p. Involutions over a field of odd
/// characteristic are diagonalizable, so equal ranks of R - I decide it.
bool conjugate_mod_p(const LevelStructure& a, const LevelStructure& b, const Integer& p);

/// True iff det(E) is a unit mod n and E Ra = Rb E mod n. Works for any
/// modulus; this is the check half of a conjugacy certificate.
bool conjugacy_certificate_check(const IntegerMatrix& e, const LevelStructure& a,
                                 const LevelStructure& b, const Integer& n);

/// Explicit conjugator in GL(6, Z_p) between the genus-3 normal forms of
/// types (1,0,1) and (0,1,2): block diag(M, tM^-1) with M = (1 -2 0; c 0 0;
/// 0 0 1) and c the solution of -2c = 1 mod p, entries reduced to 0..p-1.
IntegerMatrix g3_conjugator(const Integer& p);

/// Reduces the normal forms of both types mod p and decides conjugacy; true
/// exactly when x_a + z_a = x_b + z_b.
bool same_type_implies_conjugate_mod_p(const InvolutionType& ta, const InvolutionType& tb,
                                       const Integer& p);

}  // namespace ppav
