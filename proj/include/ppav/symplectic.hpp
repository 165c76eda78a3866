#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ppav/linalg.hpp"
#include "ppav/matrix.hpp"

namespace ppav {

/// Type label (x, y, z) of an integral symplectic involution in genus
/// g = 2x + y + z: x counts glued 2x2 shear-block pairs, y and z the -1 and
/// +1 diagonal multiplicities per half.
struct InvolutionType {
  int x = 0;
  int y = 0;
  int z = 0;

  InvolutionType() = default;
  InvolutionType(int x_, int y_, int z_);

  int g() const { return 2 * x + y + z; }
  /// Everything except the identity label (0,0,g) and the -id label (0,g,0).
  bool is_admissible() const { return !(x == 0 && (y == 0 || z == 0)); }
  /// Label of the involution composed with -id.
  InvolutionType swapped() const { return {x, z, y}; }

  friend bool operator==(const InvolutionType& a, const InvolutionType& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const InvolutionType& a, const InvolutionType& b) { return !(a == b); }
  friend bool operator<(const InvolutionType& a, const InvolutionType& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

std::string to_string(const InvolutionType& t);

/// The standard alternating form (0 I; -I 0) on Z^2g.
IntegerMatrix standard_symplectic_form(std::size_t g);

/// True iff tR J R = J. Throws OddDimension for odd-sized input.
bool is_symplectic(const IntegerMatrix& r);

/// The 2x2 unipotent-reflection block (1 0; 1 -1).
IntegerMatrix shear_block();

/// W(x,y,z) = shear ^ x  (+)  -I_y  (+)  I_z, size g x g.
IntegerMatrix type_block(const InvolutionType& t);

class SymplecticInvolution {
 public:
  /// Validates (symplectic, squares to identity) and classifies.
  static SymplecticInvolution from_matrix(const IntegerMatrix& r);

  std::size_t g() const { return g_; }
  const IntegerMatrix& matrix() const { return r_; }
  const InvolutionType& type() const { return type_; }

 private:
  SymplecticInvolution(std::size_t g, IntegerMatrix r, InvolutionType t);

  std::size_t g_;
  IntegerMatrix r_;
  InvolutionType type_;
};

/// W(x,y,z) (+) tW(x,y,z), the conjugacy normal form of its type.
SymplecticInvolution reiner_normal_form(const InvolutionType& t);

/// Classify an integral symplectic involution by the rank of its fixed
/// lattice and the index of (fixed + anti-fixed) in Z^2g, which is 4^x.
InvolutionType classify_involution(const IntegerMatrix& r);

/// Composition with -id; type (x,y,z) becomes (x,z,y).
SymplecticInvolution negate(const SymplecticInvolution& r);

/// Deterministic product of `word_length` elementary symplectic generators.
IntegerMatrix random_symplectic(std::size_t g, std::uint64_t seed, std::size_t word_length);

/// Breadth-first closure of `generators` under products and inverses.
/// Throws CapExceeded (with the partial count) if the group is larger than cap.
std::set<IntegerMatrix> group_closure(const std::vector<IntegerMatrix>& generators,
                                      std::size_t cap);

}  // namespace ppav
