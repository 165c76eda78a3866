#include "ppav/strata.hpp"

#include <algorithm>
#include <numeric>

namespace ppav {

std::vector<InvolutionType> admissible_triples(int g) {
  if (g < 2) throw PreconditionViolated("admissible triples need g >= 2");
  std::vector<InvolutionType> out;
  for (int x = 0; 2 * x <= g; ++x)
    for (int y = 0; y <= g - 2 * x; ++y) {
      InvolutionType t(x, y, g - 2 * x - y);
      if (t.is_admissible()) out.push_back(t);
    }
  return out;
}

long long component_dimension(const InvolutionType& t) {
  long long x = t.x, y = t.y, z = t.z;
  return x * x + x + x * y + x * z + (y * y + y + z * z + z) / 2;
}

long long component_count_bound(int g) {
  if (g < 3) throw PreconditionViolated("component counts are defined for g >= 3");
  long long gg = g;
  return g % 2 == 0 ? gg * (gg + 6) / 8 : (gg + 5) * (gg - 1) / 8;
}

std::vector<ComponentClass> dual_classes(int g) {
  if (g < 3) throw PreconditionViolated("dual classes are defined for g >= 3");
  std::vector<ComponentClass> out;
  for (const InvolutionType& t : admissible_triples(g)) {
    InvolutionType rep = std::min(t, t.swapped());
    if (t != rep) continue;  // triples are enumerated in lex order
    out.push_back({rep, rep.swapped(), component_dimension(rep)});
  }
  std::sort(out.begin(), out.end(), [](const ComponentClass& a, const ComponentClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

SiegelPoint family_f0_witness(int g, const std::vector<GaussianRational>& a) {
  if (static_cast<int>(a.size()) != g)
    throw DimensionMismatch("need exactly g elliptic moduli");
  GaussianMatrix z(g, g);
  for (int j = 0; j < g; ++j) z(j, j) = a[j];
  return SiegelPoint::from_matrix(z);
}

SymplecticInvolution sign_involution(int g, int y) {
  if (y < 1 || y > g - 1) throw IndexOutOfRange("sign involution needs 1 <= y <= g-1");
  IntegerMatrix w = type_block(InvolutionType(0, y, g - y));
  return SymplecticInvolution::from_matrix(IntegerMatrix::block_diag(w, w));
}

FxParameters FxParameters::defaults(int g, int x) {
  FxParameters p;
  std::size_t ux = static_cast<std::size_t>(x);
  p.a.assign(ux * (ux + 1) / 2, GaussianRational());
  p.b.assign(ux * (ux + 1) / 2, GaussianRational());
  for (std::size_t i = 0; i < ux; ++i) {
    std::size_t k = stratum_grid_index(ux, i, i);
    p.a[k] = GaussianRational::i();
    p.b[k] = GaussianRational::i();
  }
  p.tail.assign(static_cast<std::size_t>(g - 2 * x), GaussianRational::i());
  return p;
}

SiegelPoint family_fx_witness(int g, int x, const FxParameters& p) {
  if (x < 1 || 2 * x > g) throw PreconditionViolated("family F_x needs 1 <= x <= g/2");
  const std::size_t ux = static_cast<std::size_t>(x);
  if (p.a.size() != ux * (ux + 1) / 2 || p.b.size() != p.a.size() ||
      p.tail.size() != static_cast<std::size_t>(g - 2 * x))
    throw DimensionMismatch("F_x parameter sizes do not match (g, x)");
  GaussianMatrix z(g, g);
  const GaussianRational two{Rational(2), Rational(0)};
  for (std::size_t i = 0; i < ux; ++i)
    for (std::size_t j = i; j < ux; ++j) {
      std::size_t k = stratum_grid_index(ux, i, j);
      GaussianMatrix block(2, 2);
      block(0, 0) = two * p.a[k];
      block(0, 1) = p.a[k];
      block(1, 0) = p.a[k];
      block(1, 1) = p.b[k];
      z.paste(2 * i, 2 * j, block);
      if (i != j) z.paste(2 * j, 2 * i, block.transposed());
    }
  for (std::size_t k = 0; k < p.tail.size(); ++k) z(2 * ux + k, 2 * ux + k) = p.tail[k];
  return SiegelPoint::from_matrix(z);
}

SymplecticInvolution fx_involution(int g, int x, int y) {
  if (x < 1 || 2 * x > g) throw IndexOutOfRange("F_x involution needs 1 <= x <= g/2");
  if (y < 0 || y > g - 2 * x) throw IndexOutOfRange("F_x involution needs 0 <= y <= g-2x");

  // image of each basis vector, read off the piecewise definition
  const std::size_t n = 2 * static_cast<std::size_t>(g);
  IntegerMatrix from_map(n, n);
  auto set_image = [&](std::size_t l, std::size_t target, int coeff) {
    from_map(target - 1, l - 1) = coeff;  // columns carry images, 1-based l
  };
  for (int u = 1; u <= x; ++u) {
    std::size_t l = 2 * u - 1;
    set_image(l, l, 1);
    set_image(l, l + 1, 1);  // lambda_l + lambda_{l+1}
    set_image(2 * u, 2 * u, -1);
  }
  for (int l = 2 * x + 1; l <= 2 * x + y; ++l) {
    set_image(l, l, -1);
    set_image(l + g, l + g, -1);
  }
  for (int l = 2 * x + y + 1; l <= g; ++l) {
    set_image(l, l, 1);
    set_image(l + g, l + g, 1);
  }
  for (int u = 1; u <= x; ++u) {
    std::size_t l = 2 * u - 1 + g;
    set_image(l, l, 1);
    set_image(2 * u + g, 2 * u + g - 1, 1);  // lambda_{l-1} - lambda_l
    set_image(2 * u + g, 2 * u + g, -1);
  }

  InvolutionType t(x, y, g - 2 * x - y);
  IntegerMatrix w = type_block(t);
  IntegerMatrix assembled = IntegerMatrix::block_diag(w, w.transposed());
  if (from_map != assembled)
    throw InternalInconsistency("basis action and block assembly disagree for " + to_string(t));
  return SymplecticInvolution::from_matrix(assembled);
}

LinkWitness fx_sign_link(int g, int x) {
  if (x < 1 || 2 * x > g) throw PreconditionViolated("link needs 1 <= x <= g/2");
  if (g % 2 == 0 && 2 * x == g)
    throw PreconditionViolated("x = g/2 with even g is handled by the paired-block link");
  SiegelPoint witness = family_fx_witness(g, x, FxParameters::defaults(g, x));
  IntegerMatrix w = type_block(InvolutionType(0, 2 * x, g - 2 * x));
  SymplecticInvolution phi =
      SymplecticInvolution::from_matrix(IntegerMatrix::block_diag(w, w));
  if (!is_fixed(phi.matrix(), witness))
    throw VerificationFailed("sign involution does not fix the F_x witness");
  if (phi.type() != InvolutionType(0, 2 * x, g - 2 * x))
    throw InternalInconsistency("link involution classified to an unexpected type");
  return {witness, phi};
}

PairedBlockParameters PairedBlockParameters::defaults(int g) {
  PairedBlockParameters p;
  p.a.assign(static_cast<std::size_t>(g / 2), GaussianRational::i());
  p.b.assign(static_cast<std::size_t>(g / 2), GaussianRational::i());
  return p;
}

SiegelPoint family_ftilde_witness(int g, const PairedBlockParameters& p) {
  if (g % 2 != 0) throw OddG("the paired-block family needs even g");
  const std::size_t half = static_cast<std::size_t>(g / 2);
  if (p.a.size() != half || p.b.size() != half)
    throw DimensionMismatch("need g/2 block moduli");
  GaussianMatrix z(g, g);
  const GaussianRational two{Rational(2), Rational(0)};
  for (std::size_t j = 0; j < half; ++j) {
    z(2 * j, 2 * j) = two * p.a[j];
    z(2 * j, 2 * j + 1) = p.a[j];
    z(2 * j + 1, 2 * j) = p.a[j];
    z(2 * j + 1, 2 * j + 1) = p.b[j];
  }
  return SiegelPoint::from_matrix(z);
}

namespace {

// 2x2 involution with one +1 and one -1 eigenvector spanning a direct
// summand of Z^2; commutes with (2a a; a b) against its transpose iff a = b.
IntegerMatrix split_involution_block() { return IntegerMatrix{{-1, 2}, {0, 1}}; }

}  // namespace

LinkWitness ftilde_split_link(int g, const PairedBlockParameters& p) {
  if (g % 2 != 0) throw OddG("the paired-block link needs even g");
  SiegelPoint witness = family_ftilde_witness(g, p);
  const int half = g / 2;

  // plain sign involution; valid whenever the sign change does not split a block
  IntegerMatrix w = type_block(InvolutionType(0, half, half));
  SymplecticInvolution signs =
      SymplecticInvolution::from_matrix(IntegerMatrix::block_diag(w, w));
  if (is_fixed(signs.matrix(), witness)) return {witness, signs};

  // per-block split involution, one -1 and one +1 eigenvector each
  IntegerMatrix a(g, g);
  for (int j = 0; j < half; ++j) a.paste(2 * j, 2 * j, split_involution_block());
  SymplecticInvolution split = SymplecticInvolution::from_matrix(
      IntegerMatrix::block_diag(a, a.transposed()));
  if (!is_fixed(split.matrix(), witness))
    throw VerificationFailed("no verified involution of type (0,g/2,g/2) for these moduli");
  if (split.type() != InvolutionType(0, half, half))
    throw InternalInconsistency("split involution classified to an unexpected type");
  return {witness, split};
}

MasterParameters MasterParameters::defaults(int g) {
  MasterParameters p;
  p.a.assign(static_cast<std::size_t>((g - 1) / 2), GaussianRational::i());
  p.b.assign(static_cast<std::size_t>((g - 1) / 2), GaussianRational::i());
  p.e = GaussianRational::i();
  return p;
}

MasterWitness odd_g_master_witness(int g, const MasterParameters& p) {
  if (g % 2 == 0) throw EvenG("the master witness needs odd g");
  if (g < 3) throw PreconditionViolated("the master witness needs g >= 3");
  const std::size_t blocks = static_cast<std::size_t>((g - 1) / 2);
  if (p.a.size() != blocks || p.b.size() != blocks)
    throw DimensionMismatch("need (g-1)/2 block moduli");

  GaussianMatrix z(g, g);
  const GaussianRational two{Rational(2), Rational(0)};
  for (std::size_t j = 0; j < blocks; ++j) {
    z(2 * j, 2 * j) = two * p.a[j];
    z(2 * j, 2 * j + 1) = p.a[j];
    z(2 * j + 1, 2 * j) = p.a[j];
    z(2 * j + 1, 2 * j + 1) = p.b[j];
  }
  z(g - 1, g - 1) = p.e;
  SiegelPoint witness = SiegelPoint::from_matrix(z);

  MasterWitness out{witness, {}};
  for (const InvolutionType& t : admissible_triples(g)) {
    // distribute the type over the diagonal blocks: x shear blocks, then
    // -I_2 / I_2 pairs, with the elliptic coordinate absorbing odd parity
    const int m = static_cast<int>(blocks) - t.x;
    int sign_tail = t.y % 2 == 1 ? -1 : 1;
    int minus_pairs = t.y / 2;
    IntegerMatrix a(g, g);
    int pos_block = 0;
    for (int k = 0; k < t.x; ++k, ++pos_block)
      a.paste(2 * pos_block, 2 * pos_block, shear_block());
    for (int k = 0; k < minus_pairs; ++k, ++pos_block) {
      a(2 * pos_block, 2 * pos_block) = -1;
      a(2 * pos_block + 1, 2 * pos_block + 1) = -1;
    }
    for (int k = 0; k < m - minus_pairs; ++k, ++pos_block) {
      a(2 * pos_block, 2 * pos_block) = 1;
      a(2 * pos_block + 1, 2 * pos_block + 1) = 1;
    }
    a(g - 1, g - 1) = sign_tail;

    SymplecticInvolution r = SymplecticInvolution::from_matrix(
        IntegerMatrix::block_diag(a, a.transposed()));
    if (r.type() != t)
      throw InternalInconsistency("master involution classified to " + to_string(r.type()) +
                                  " instead of " + to_string(t));
    if (!is_fixed(r.matrix(), witness))
      throw VerificationFailed("master involution of type " + to_string(t) +
                               " does not fix the witness");
    out.involutions.push_back(std::move(r));
  }
  return out;
}

InvolutionType jacobian_type(int i, int g) {
  if (i == 0) throw HyperellipticCase("the hyperelliptic action is excluded");
  if (i < 1 || i > (g + 1) / 2) throw PreconditionViolated("need 1 <= i <= (g+1)/2");
  if (g % 2 == 1 && i == (g + 1) / 2) return InvolutionType((g - 1) / 2, 0, 1);
  return InvolutionType(i, g - 2 * i, 0);
}

namespace {

std::size_t node_index(const std::vector<ComponentClass>& nodes, const InvolutionType& t) {
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].representative == t || nodes[k].dual == t) return k;
  throw InternalInconsistency("type " + to_string(t) + " has no node");
}

bool verify_edge(const CertificateEdge& e, const std::vector<ComponentClass>& nodes) {
  auto endpoint_ok = [&](const SymplecticInvolution& inv, std::size_t node) {
    const IntegerMatrix& r = inv.matrix();
    if (!is_symplectic(r)) return false;
    if (r * r != IntegerMatrix::identity(r.rows())) return false;
    if (!is_fixed(r, e.witness)) return false;
    InvolutionType t = classify_involution(r);
    return t == nodes[node].representative || t == nodes[node].dual;
  };
  return endpoint_ok(e.inv_a, e.a) && endpoint_ok(e.inv_b, e.b);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ConnectivityCertificate connectivity_certificate(int g) {
  if (g < 3) throw PreconditionViolated("certificates are defined for g >= 3");
  ConnectivityCertificate cert;
  cert.g = g;
  cert.nodes = dual_classes(g);

  auto add_edge = [&](std::size_t na, std::size_t nb, const SiegelPoint& witness,
                      SymplecticInvolution ia, SymplecticInvolution ib) {
    CertificateEdge e{na, nb, witness, std::move(ia), std::move(ib), false};
    e.verified = verify_edge(e, cert.nodes);
    if (!e.verified)
      throw VerificationFailed("edge " + to_string(cert.nodes[na].representative) + " - " +
                               to_string(cert.nodes[nb].representative) + " failed verification");
    cert.edges.push_back(std::move(e));
  };

  // one shared witness links all classes of equal x pairwise
  std::vector<GaussianRational> diag(static_cast<std::size_t>(g), GaussianRational::i());
  SiegelPoint f0 = family_f0_witness(g, diag);
  std::vector<std::size_t> x0_nodes;
  for (std::size_t k = 0; k < cert.nodes.size(); ++k)
    if (cert.nodes[k].representative.x == 0) x0_nodes.push_back(k);
  for (std::size_t i = 0; i < x0_nodes.size(); ++i)
    for (std::size_t j = i + 1; j < x0_nodes.size(); ++j)
      add_edge(x0_nodes[i], x0_nodes[j], f0,
               sign_involution(g, cert.nodes[x0_nodes[i]].representative.y),
               sign_involution(g, cert.nodes[x0_nodes[j]].representative.y));

  for (int x = 1; 2 * x <= g; ++x) {
    SiegelPoint fx = family_fx_witness(g, x, FxParameters::defaults(g, x));
    std::vector<std::size_t> x_nodes;
    for (std::size_t k = 0; k < cert.nodes.size(); ++k)
      if (cert.nodes[k].representative.x == x) x_nodes.push_back(k);
    for (std::size_t i = 0; i < x_nodes.size(); ++i)
      for (std::size_t j = i + 1; j < x_nodes.size(); ++j)
        add_edge(x_nodes[i], x_nodes[j], fx,
                 fx_involution(g, x, cert.nodes[x_nodes[i]].representative.y),
                 fx_involution(g, x, cert.nodes[x_nodes[j]].representative.y));
  }

  // cross links into the x = 0 cluster
  for (int x = 1; 2 * x <= g; ++x) {
    if (g % 2 == 0 && 2 * x == g) continue;
    LinkWitness link = fx_sign_link(g, x);
    add_edge(node_index(cert.nodes, InvolutionType(x, 0, g - 2 * x)),
             node_index(cert.nodes, InvolutionType(0, 2 * x, g - 2 * x)), link.witness,
             fx_involution(g, x, 0), link.involution);
  }
  if (g % 2 == 0) {
    LinkWitness link = ftilde_split_link(g, PairedBlockParameters::defaults(g));
    add_edge(node_index(cert.nodes, InvolutionType(g / 2, 0, 0)),
             node_index(cert.nodes, InvolutionType(0, g / 2, g / 2)), link.witness,
             reiner_normal_form(InvolutionType(g / 2, 0, 0)), link.involution);
  }

  UnionFind uf(cert.nodes.size());
  for (const CertificateEdge& e : cert.edges)
    if (e.verified) uf.unite(e.a, e.b);
  cert.connected = true;
  for (std::size_t k = 1; k < cert.nodes.size(); ++k)
    if (uf.find(k) != uf.find(0)) cert.connected = false;
  return cert;
}

}  // namespace ppav
