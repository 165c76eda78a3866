#pragma once

#include <vector>

#include "ppav/siegel.hpp"
#include "ppav/symplectic.hpp"

namespace ppav {

/// A component class of the involution locus: the pair {(x,y,z), (x,z,y)}
/// identified by composing with -id, keyed by its lex-smaller member.
struct ComponentClass {
  InvolutionType representative;
  InvolutionType dual;
  long long dimension;
};

/// All (x,y,z) with 2x+y+z = g except (0,0,g) and (0,g,0), lexicographic.
std::vector<InvolutionType> admissible_triples(int g);

/// x^2 + x + xy + xz + (y^2 + y + z^2 + z)/2.
long long component_dimension(const InvolutionType& t);

/// Number of component classes: g(g+6)/8 for even g, (g+5)(g-1)/8 for odd g.
long long component_count_bound(int g);

/// Admissible triples quotiented by the y<->z swap, sorted by representative.
std::vector<ComponentClass> dual_classes(int g);

/// Z = diag(a_1, ..., a_g): the locus of products of g elliptic curves.
SiegelPoint family_f0_witness(int g, const std::vector<GaussianRational>& a);

/// Diagonal involution with -1 at positions 1..y and g+1..g+y; type (0,y,g-y).
/// Fixes every diagonal Siegel point.
SymplecticInvolution sign_involution(int g, int y);

/// Moduli of the family F_x: one (a_j, b_j) pair per grid block of the
/// leading 2x x 2x part, plus g-2x diagonal tail entries.
struct FxParameters {
  std::vector<GaussianRational> a;     // x(x+1)/2
  std::vector<GaussianRational> b;     // x(x+1)/2
  std::vector<GaussianRational> tail;  // g - 2x

  static FxParameters defaults(int g, int x);
};

/// Block matrix Z_1 (+) diag(tail) where Z_1 is the full grid of
/// (2a a; a b) blocks; free parameter count x(x+1) + (g-2x) = x^2 - x + g.
SiegelPoint family_fx_witness(int g, int x, const FxParameters& p);

/// The involution of type (x, y, g-2x-y) fixing every F_x member, built from
/// its action on basis vectors and cross-checked against the W (+) tW
/// assembly (InternalInconsistency if the two constructions disagree).
SymplecticInvolution fx_involution(int g, int x, int y);

struct LinkWitness {
  SiegelPoint witness;
  SymplecticInvolution involution;
};

/// The default F_x witness together with a verified sign involution of type
/// (0, 2x, g-2x). Excluded when g is even and x = g/2.
LinkWitness fx_sign_link(int g, int x);

/// Moduli of the paired-block family: Z = X_1 (+) ... (+) X_{g/2} with
/// X_j = (2a_j a_j; a_j b_j), g even.
struct PairedBlockParameters {
  std::vector<GaussianRational> a;  // g/2
  std::vector<GaussianRational> b;  // g/2

  static PairedBlockParameters defaults(int g);
};

SiegelPoint family_ftilde_witness(int g, const PairedBlockParameters& p);

/// The paired-block witness together with a verified involution of type
/// (0, g/2, g/2). The plain sign involution works when g/2 is even; when g/2
/// is odd it would split a 2x2 block, so a per-block involution with
/// unimodularly split eigenlattices is used instead (valid when a_j = b_j).
LinkWitness ftilde_split_link(int g, const PairedBlockParameters& p);

/// Moduli of the master witness for odd g: (g-1)/2 paired blocks and one
/// elliptic tail modulus.
struct MasterParameters {
  std::vector<GaussianRational> a;  // (g-1)/2
  std::vector<GaussianRational> b;  // (g-1)/2
  GaussianRational e;

  static MasterParameters defaults(int g);
};

struct MasterWitness {
  SiegelPoint witness;
  // one verified involution per admissible triple, aligned with admissible_triples(g)
  std::vector<SymplecticInvolution> involutions;
};

/// For odd g: a single point fixed by a verified involution of every
/// admissible type, assembled from shear, sign and split block patterns.
MasterWitness odd_g_master_witness(int g, const MasterParameters& p);

/// Involution type of the Jacobian of a curve with a genus-i quotient:
/// ((g-1)/2, 0, 1) when i = (g+1)/2 and g odd, else (i, g-2i, 0).
InvolutionType jacobian_type(int i, int g);

struct CertificateEdge {
  std::size_t a;
  std::size_t b;
  SiegelPoint witness;
  SymplecticInvolution inv_a;
  SymplecticInvolution inv_b;
  bool verified;
};

/// Finite proof object for connectedness of the involution locus in genus g:
/// nodes are component classes, each edge carries one exactly-verified
/// period matrix fixed by involutions of both endpoint classes.
struct ConnectivityCertificate {
  int g;
  std::vector<ComponentClass> nodes;
  std::vector<CertificateEdge> edges;
  bool connected;
};

/// Builds and re-verifies the full certificate; VerificationFailed on any
/// failing edge (which would be a bug, not expected behaviour).
ConnectivityCertificate connectivity_certificate(int g);

}  // namespace ppav
