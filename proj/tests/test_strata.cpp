#include <doctest.h>

#include "ppav/serialize.hpp"
#include "ppav/strata.hpp"
#include "test_helpers.hpp"

using namespace ppav;
using ppav::testing::Rng;

TEST_CASE("admissible triples") {
  std::vector<InvolutionType> g3 = admissible_triples(3);
  REQUIRE(g3.size() == 4);
  CHECK(g3[0] == InvolutionType(0, 1, 2));
  CHECK(g3[1] == InvolutionType(0, 2, 1));
  CHECK(g3[2] == InvolutionType(1, 0, 1));
  CHECK(g3[3] == InvolutionType(1, 1, 0));

  CHECK(admissible_triples(4).size() == 7);

  std::vector<InvolutionType> g2 = admissible_triples(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == InvolutionType(0, 1, 1));
  CHECK(g2[1] == InvolutionType(1, 0, 0));

  // every triple sums correctly and the extremal labels are excluded
  for (int g = 2; g <= 20; ++g)
    for (const InvolutionType& t : admissible_triples(g)) {
      CHECK(t.g() == g);
      CHECK(t.is_admissible());
    }
}

TEST_CASE("triple counts against the closed formulas") {
  for (int g = 3; g <= 50; ++g) {
    long long n = g % 2 == 0 ? static_cast<long long>(g + 2) * (g + 2) / 4
                             : static_cast<long long>(g + 1) * (g + 3) / 4;
    CHECK(static_cast<long long>(admissible_triples(g).size()) == n - 2);
  }
}

TEST_CASE("component dimensions") {
  CHECK(component_dimension(InvolutionType(0, 1, 2)) == 4);
  CHECK(component_dimension(InvolutionType(1, 0, 1)) == 4);
  for (int g = 1; g <= 12; ++g)
    CHECK(component_dimension(InvolutionType(0, g, 0)) ==
          static_cast<long long>(g) * (g + 1) / 2);
}

TEST_CASE("component class counts match the closed formula") {
  CHECK(component_count_bound(3) == 2);
  CHECK(component_count_bound(4) == 5);
  CHECK(component_count_bound(5) == 5);
  CHECK(component_count_bound(8) == 14);
  for (int g = 3; g <= 50; ++g)
    CHECK(static_cast<long long>(dual_classes(g).size()) == component_count_bound(g));
}

TEST_CASE("dual classes pair y and z") {
  std::vector<ComponentClass> g3 = dual_classes(3);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0].representative == InvolutionType(0, 1, 2));
  CHECK(g3[0].dual == InvolutionType(0, 2, 1));
  CHECK(g3[0].dimension == 4);
  CHECK(g3[1].representative == InvolutionType(1, 0, 1));
  CHECK(g3[1].dual == InvolutionType(1, 1, 0));
  CHECK(g3[1].dimension == 4);

  for (int g = 3; g <= 12; ++g)
    for (const ComponentClass& c : dual_classes(g)) {
      CHECK(c.dual == c.representative.swapped());
      CHECK(c.dual.swapped() == c.representative);
      CHECK(c.dimension == component_dimension(c.representative));
      CHECK(c.dimension == component_dimension(c.dual));
      // no isolated components: every class has positive dimension, which is
      // why an isolated singular point cannot carry an extra involution
      CHECK(c.dimension >= 1);
    }

  // self-dual classes map to themselves
  std::vector<ComponentClass> g4 = dual_classes(4);
  bool found = false;
  for (const ComponentClass& c : g4)
    if (c.representative == InvolutionType(0, 2, 2)) {
      found = true;
      CHECK(c.dual == c.representative);
    }
  CHECK(found);
}

TEST_CASE("diagonal witnesses and sign involutions") {
  std::vector<GaussianRational> moduli;
  for (int j = 1; j <= 4; ++j) moduli.emplace_back(Rational(0), Rational(j));
  SiegelPoint z = family_f0_witness(4, moduli);
  for (int y = 1; y <= 3; ++y) {
    SymplecticInvolution phi = sign_involution(4, y);
    CHECK(phi.type() == InvolutionType(0, y, 4 - y));
    CHECK(is_fixed(phi.matrix(), z));
  }
  CHECK_THROWS_AS(sign_involution(4, 0), IndexOutOfRange);
  CHECK_THROWS_AS(sign_involution(4, 4), IndexOutOfRange);

  std::vector<GaussianRational> flat(3, GaussianRational(Rational(1), Rational(0)));
  CHECK_THROWS_AS(family_f0_witness(3, flat), ImaginaryPartNotPositiveDefinite);

  for (int g = 3; g <= 8; ++g)
    for (int y = 1; y < g; ++y)
      CHECK(sign_involution(g, y).type() == InvolutionType(0, y, g - y));

  // the sign involution is its own basis-action assembly: diagonal +-1
  SymplecticInvolution phi = sign_involution(5, 4);
  for (int k = 0; k < 10; ++k) {
    Integer expected = (k % 5) < 4 ? -1 : 1;
    CHECK(phi.matrix()(k, k) == expected);
  }
}

TEST_CASE("shear-grid witnesses") {
  // the genus-3 default: (2i i; i i) block plus an elliptic tail
  SiegelPoint z = family_fx_witness(3, 1, FxParameters::defaults(3, 1));
  GaussianMatrix m = z.matrix();
  CHECK(m(0, 0) == GaussianRational(Rational(0), Rational(2)));
  CHECK(m(0, 1) == GaussianRational::i());
  CHECK(m(1, 1) == GaussianRational::i());
  CHECK(m(2, 2) == GaussianRational::i());
  CHECK(m(0, 2).is_zero());
  CHECK(m(1, 2).is_zero());

  // free parameter count x(x+1) + (g-2x) = x^2 - x + g
  FxParameters p52 = FxParameters::defaults(5, 2);
  CHECK(p52.a.size() + p52.b.size() + p52.tail.size() == 2 * 2 - 2 + 5);

  for (int g = 3; g <= 8; ++g)
    for (int x = 1; 2 * x <= g; ++x) {
      SiegelPoint w = family_fx_witness(g, x, FxParameters::defaults(g, x));
      CHECK(is_fixed(reiner_normal_form(InvolutionType(x, 0, g - 2 * x)).matrix(), w));
    }
}

TEST_CASE("the family involutions fix the family") {
  // frozen column images for g=3, x=1, y=0
  SymplecticInvolution phi310 = fx_involution(3, 1, 0);
  IntegerMatrix expected{{1, 0, 0, 0, 0, 0},  {1, -1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                         {0, 0, 0, 1, 1, 0},  {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 1}};
  CHECK(phi310.matrix() == expected);

  for (int g = 3; g <= 8; ++g)
    for (int x = 1; 2 * x <= g; ++x) {
      SiegelPoint w = family_fx_witness(g, x, FxParameters::defaults(g, x));
      for (int y = 0; y <= g - 2 * x; ++y) {
        SymplecticInvolution phi = fx_involution(g, x, y);
        CHECK(phi.type() == InvolutionType(x, y, g - 2 * x - y));
        CHECK(is_fixed(phi.matrix(), w));
      }
    }
  CHECK_THROWS_AS(fx_involution(4, 0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(fx_involution(4, 1, 3), IndexOutOfRange);
}

TEST_CASE("cross links from shear families into sign components") {
  LinkWitness link = fx_sign_link(3, 1);
  CHECK(link.involution.type() == InvolutionType(0, 2, 1));
  CHECK(is_fixed(link.involution.matrix(), link.witness));
  // the same witness carries a type (1,0,1) involution: a nonempty
  // intersection of the two genus-3 component classes
  CHECK(is_fixed(fx_involution(3, 1, 0).matrix(), link.witness));

  for (int g = 3; g <= 8; ++g)
    for (int x = 1; 2 * x <= g; ++x) {
      if (g % 2 == 0 && 2 * x == g) {
        CHECK_THROWS_AS(fx_sign_link(g, x), PreconditionViolated);
        continue;
      }
      LinkWitness l = fx_sign_link(g, x);
      CHECK(l.involution.type() == InvolutionType(0, 2 * x, g - 2 * x));
      CHECK(is_fixed(l.involution.matrix(), l.witness));
    }
}

TEST_CASE("paired-block witnesses and the even-genus split link") {
  SiegelPoint z4 = family_ftilde_witness(4, PairedBlockParameters::defaults(4));
  CHECK(z4.matrix()(0, 0) == GaussianRational(Rational(0), Rational(2)));
  CHECK(z4.matrix()(2, 3) == GaussianRational::i());
  CHECK(z4.matrix()(1, 2).is_zero());
  CHECK_THROWS_AS(family_ftilde_witness(3, PairedBlockParameters::defaults(4)), OddG);

  for (int g = 4; g <= 8; g += 2) {
    PairedBlockParameters p = PairedBlockParameters::defaults(g);
    LinkWitness link = ftilde_split_link(g, p);
    CHECK(link.involution.type() == InvolutionType(0, g / 2, g / 2));
    CHECK(is_fixed(link.involution.matrix(), link.witness));
    // the witness is also fixed by the all-shear normal form
    CHECK(is_fixed(reiner_normal_form(InvolutionType(g / 2, 0, 0)).matrix(), link.witness));
  }

  // when g/2 is even the plain sign involution works for arbitrary moduli
  PairedBlockParameters varied;
  varied.a = {GaussianRational(Rational(1, 2), Rational(1)),
              GaussianRational(Rational(0), Rational(2))};
  varied.b = {GaussianRational(Rational(-1, 3), Rational(3)),
              GaussianRational(Rational(1), Rational(3))};
  LinkWitness l4 = ftilde_split_link(4, varied);
  CHECK(l4.involution.type() == InvolutionType(0, 2, 2));
  CHECK(is_fixed(l4.involution.matrix(), l4.witness));
}

TEST_CASE("split link transforms into normal coordinates") {
  // for g = 6 the sign involution splits a block, so the link uses per-block
  // split involutions; moving to an adapted symplectic basis must land the
  // witness inside the plain S(0,3,3) pattern
  LinkWitness link = ftilde_split_link(6, PairedBlockParameters::defaults(6));
  CHECK(link.involution.type() == InvolutionType(0, 3, 3));

  // per-block change of basis (1 1; 0 1) diagonalizes the split involution
  IntegerMatrix t_block{{1, 1}, {0, 1}};
  IntegerMatrix t_full(6, 6);
  for (int j = 0; j < 3; ++j) t_full.paste(2 * j, 2 * j, t_block);
  // then sort the -1 eigenvectors (odd positions) to the front
  IntegerMatrix perm(6, 6);
  int order[6] = {0, 2, 4, 1, 3, 5};  // columns: images of the new basis
  for (int k = 0; k < 6; ++k) perm(order[k], k) = 1;
  IntegerMatrix a = t_full * perm;
  IntegerMatrix e = IntegerMatrix::block_diag(a, unimodular_inverse(a).transposed());
  REQUIRE(is_symplectic(e));

  IntegerMatrix conjugated =
      unimodular_inverse(e) * link.involution.matrix() * e;
  CHECK(conjugated == reiner_normal_form(InvolutionType(0, 3, 3)).matrix());
  SiegelPoint moved = act(e, link.witness);
  CHECK(stratum_contains(InvolutionType(0, 3, 3), moved));
}

TEST_CASE("master witness for odd genus") {
  for (int g : {3, 5, 7}) {
    MasterWitness mw = odd_g_master_witness(g, MasterParameters::defaults(g));
    std::vector<InvolutionType> types = admissible_triples(g);
    REQUIRE(mw.involutions.size() == types.size());
    for (std::size_t k = 0; k < types.size(); ++k) {
      CHECK(mw.involutions[k].type() == types[k]);
      CHECK(is_fixed(mw.involutions[k].matrix(), mw.witness));
    }
  }
  CHECK_THROWS_AS(odd_g_master_witness(4, MasterParameters::defaults(4)), EvenG);

  // genus 3 frozen witness shape
  MasterWitness g3 = odd_g_master_witness(3, MasterParameters::defaults(3));
  CHECK(g3.witness.matrix()(0, 0) == GaussianRational(Rational(0), Rational(2)));
  CHECK(g3.witness.matrix()(2, 2) == GaussianRational::i());
  CHECK(g3.involutions.size() == 4);
}

TEST_CASE("master witness closures reach the advertised order") {
  for (int g : {3, 5, 7}) {
    MasterWitness mw = odd_g_master_witness(g, MasterParameters::defaults(g));
    std::vector<IntegerMatrix> gens;
    for (const SymplecticInvolution& r : mw.involutions) gens.push_back(r.matrix());
    std::set<IntegerMatrix> group = group_closure(gens, 100000);
    CHECK(group.size() >= static_cast<std::size_t>((g + 1) * (g + 3) / 4));
  }
}

TEST_CASE("jacobian involution types") {
  CHECK(jacobian_type(3, 5) == InvolutionType(2, 0, 1));
  CHECK(jacobian_type(1, 4) == InvolutionType(1, 2, 0));
  CHECK(jacobian_type(2, 4) == InvolutionType(2, 0, 0));
  CHECK(jacobian_type(1, 3) == InvolutionType(1, 1, 0));
  CHECK(jacobian_type(2, 3) == InvolutionType(1, 0, 1));
  CHECK_THROWS_AS(jacobian_type(0, 5), HyperellipticCase);
  CHECK_THROWS_AS(jacobian_type(4, 5), PreconditionViolated);
}

TEST_CASE("connectivity certificates for small genus") {
  ConnectivityCertificate c3 = connectivity_certificate(3);
  CHECK(c3.nodes.size() == 2);
  CHECK(c3.connected);
  REQUIRE(c3.edges.size() >= 1);
  for (const CertificateEdge& e : c3.edges) CHECK(e.verified);

  ConnectivityCertificate c4 = connectivity_certificate(4);
  CHECK(c4.nodes.size() == 5);
  CHECK(c4.connected);

  CHECK_THROWS_AS(connectivity_certificate(2), PreconditionViolated);
}

TEST_CASE("certificates verify and connect through genus 8") {
  for (int g = 3; g <= 8; ++g) {
    ConnectivityCertificate cert = connectivity_certificate(g);
    CHECK(static_cast<long long>(cert.nodes.size()) == component_count_bound(g));
    CHECK(cert.connected);
    for (const CertificateEdge& e : cert.edges) {
      CHECK(e.verified);
      CHECK(e.a < cert.nodes.size());
      CHECK(e.b < cert.nodes.size());
      CHECK(e.a != e.b);
    }
  }
}

TEST_CASE("certificates keep working beyond the acceptance range") {
  // one odd and one doubly-even genus, exercising both link constructions
  for (int g : {9, 12}) {
    ConnectivityCertificate cert = connectivity_certificate(g);
    CHECK(cert.connected);
    CHECK(static_cast<long long>(cert.nodes.size()) == component_count_bound(g));
  }
}

TEST_CASE("certificate edges stay inside their strata patterns") {
  for (int g = 3; g <= 6; ++g) {
    ConnectivityCertificate cert = connectivity_certificate(g);
    for (const CertificateEdge& e : cert.edges) {
      InvolutionType ta = classify_involution(e.inv_a.matrix());
      InvolutionType tb = classify_involution(e.inv_b.matrix());
      // witnesses are constructed in coordinates adapted to both involutions
      // except the paired-block link, whose involution is not in normal form
      if (e.inv_a.matrix() == IntegerMatrix::block_diag(type_block(ta), type_block(ta).transposed()))
        CHECK(stratum_contains(ta, e.witness));
      if (e.inv_b.matrix() == IntegerMatrix::block_diag(type_block(tb), type_block(tb).transposed()))
        CHECK(stratum_contains(tb, e.witness));
    }
  }
}

TEST_CASE("certificate json shape") {
  json j = to_json(connectivity_certificate(3));
  CHECK(j["g"] == 3);
  CHECK(j["connected"] == true);
  REQUIRE(j["nodes"].is_array());
  CHECK(j["nodes"].size() == 2);
  CHECK(j["nodes"][0]["type"] == json::array({0, 1, 2}));
  CHECK(j["nodes"][0]["dual"] == json::array({0, 2, 1}));
  CHECK(j["nodes"][0]["dimension"] == 4);
  REQUIRE(j["edges"].is_array());
  for (const auto& e : j["edges"]) {
    CHECK(e["verified"] == true);
    CHECK(e.contains("witness"));
    CHECK(e.contains("inv_a"));
    CHECK(e.contains("inv_b"));
  }
}
