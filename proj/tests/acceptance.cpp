// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Everything here is exact; there are no tolerances anywhere.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ppav/levels.hpp"
#include "ppav/serialize.hpp"
#include "ppav/strata.hpp"
#include "test_helpers.hpp"

using namespace ppav;
using ppav::testing::Rng;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass) {
  std::printf("criterion %d: %-66s %s\n", number, label.c_str(), pass ? "PASS" : "FAIL");
  if (!pass) ++failures;
}

std::vector<InvolutionType> all_triples(int g) {
  std::vector<InvolutionType> out;
  for (int x = 0; 2 * x <= g; ++x)
    for (int y = 0; y <= g - 2 * x; ++y) out.emplace_back(x, y, g - 2 * x - y);
  return out;
}

bool criterion_roundtrip_classification() {
  Rng rng(101);
  for (int g = 3; g <= 8; ++g)
    for (const InvolutionType& t : all_triples(g)) {
      SymplecticInvolution nf = reiner_normal_form(t);
      if (nf.type() != t) return false;
      for (int trial = 0; trial < 100; ++trial) {
        IntegerMatrix e = random_symplectic(g, rng.next(), 12);
        if (classify_involution(unimodular_inverse(e) * nf.matrix() * e) != t) return false;
      }
    }
  return true;
}

bool criterion_counting_formulas() {
  for (int g = 3; g <= 50; ++g) {
    long long triple_count = g % 2 == 0 ? static_cast<long long>(g + 2) * (g + 2) / 4 - 2
                                        : static_cast<long long>(g + 1) * (g + 3) / 4 - 2;
    if (static_cast<long long>(admissible_triples(g).size()) != triple_count) return false;
    if (static_cast<long long>(dual_classes(g).size()) != component_count_bound(g)) return false;
  }
  return true;
}

bool criterion_dimension_formula() {
  for (int g = 2; g <= 10; ++g)
    for (const InvolutionType& t : all_triples(g)) {
      StratumParameters p = StratumParameters::defaults(t);
      if (static_cast<long long>(p.free_parameter_count()) != component_dimension(t))
        return false;
    }
  for (const ComponentClass& c : dual_classes(3))
    if (c.dimension != 4) return false;
  return true;
}

bool verified_pair(const SymplecticInvolution& r, const SiegelPoint& witness,
                   const InvolutionType& advertised) {
  const IntegerMatrix& m = r.matrix();
  if (!is_symplectic(m)) return false;
  if (m * m != IntegerMatrix::identity(m.rows())) return false;
  if (!is_fixed(m, witness)) return false;
  return classify_involution(m) == advertised;
}

bool criterion_witness_families() {
  for (int g = 3; g <= 8; ++g) {
    std::vector<GaussianRational> diag(static_cast<std::size_t>(g), GaussianRational::i());
    SiegelPoint f0 = family_f0_witness(g, diag);
    for (int y = 1; y <= g - 1; ++y)
      if (!verified_pair(sign_involution(g, y), f0, InvolutionType(0, y, g - y))) return false;

    for (int x = 1; 2 * x <= g; ++x) {
      SiegelPoint fx = family_fx_witness(g, x, FxParameters::defaults(g, x));
      for (int y = 0; y <= g - 2 * x; ++y)
        if (!verified_pair(fx_involution(g, x, y), fx, InvolutionType(x, y, g - 2 * x - y)))
          return false;
      if (!(g % 2 == 0 && 2 * x == g)) {
        LinkWitness link = fx_sign_link(g, x);
        if (!verified_pair(link.involution, link.witness, InvolutionType(0, 2 * x, g - 2 * x)))
          return false;
      }
    }
    if (g % 2 == 0) {
      LinkWitness link = ftilde_split_link(g, PairedBlockParameters::defaults(g));
      if (!verified_pair(link.involution, link.witness, InvolutionType(0, g / 2, g / 2)))
        return false;
      if (!is_fixed(reiner_normal_form(InvolutionType(g / 2, 0, 0)).matrix(), link.witness))
        return false;
    }
  }
  // genus 3: one point carries involutions of both component classes
  LinkWitness dd2 = fx_sign_link(3, 1);
  return verified_pair(fx_involution(3, 1, 0), dd2.witness, InvolutionType(1, 0, 1)) &&
         verified_pair(dd2.involution, dd2.witness, InvolutionType(0, 2, 1));
}

bool criterion_certificates() {
  for (int g = 3; g <= 8; ++g) {
    ConnectivityCertificate cert = connectivity_certificate(g);
    if (!cert.connected) return false;
    if (static_cast<long long>(cert.nodes.size()) != component_count_bound(g)) return false;
    for (const CertificateEdge& e : cert.edges)
      if (!e.verified) return false;
  }
  return true;
}

bool criterion_master_witness() {
  for (int g : {3, 5, 7}) {
    MasterWitness mw = odd_g_master_witness(g, MasterParameters::defaults(g));
    std::vector<InvolutionType> types = admissible_triples(g);
    if (mw.involutions.size() != types.size()) return false;
    std::vector<IntegerMatrix> gens;
    for (std::size_t k = 0; k < types.size(); ++k) {
      if (!verified_pair(mw.involutions[k], mw.witness, types[k])) return false;
      gens.push_back(mw.involutions[k].matrix());
    }
    std::size_t bound = static_cast<std::size_t>((g + 1) * (g + 3) / 4);
    if (group_closure(gens, 1u << 20).size() < bound) return false;
  }
  return true;
}

bool criterion_mod_p_conjugacy() {
  const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  const Integer expected_c[] = {1, 2, 3};
  for (std::size_t k = 0; k < std::size(primes); ++k) {
    int p = primes[k];
    IntegerMatrix e = g3_conjugator(p);
    if (k < 3 && e(1, 0) != expected_c[k]) return false;
    if (mod_floor(Integer(-2) * e(1, 0) - 1, p) != 0) return false;
    LevelStructure a = reduce_mod(reiner_normal_form(InvolutionType(1, 0, 1)), p);
    LevelStructure b = reduce_mod(reiner_normal_form(InvolutionType(0, 1, 2)), p);
    if (!conjugacy_certificate_check(e, a, b, p)) return false;

    // the four genus-3 types collapse into exactly two mod-p classes
    std::vector<InvolutionType> types = admissible_triples(3);
    std::vector<std::vector<InvolutionType>> classes;
    for (const InvolutionType& t : types) {
      bool placed = false;
      for (auto& cls : classes)
        if (same_type_implies_conjugate_mod_p(cls.front(), t, p)) {
          cls.push_back(t);
          placed = true;
          break;
        }
      if (!placed) classes.push_back({t});
    }
    if (classes.size() != 2) return false;
  }
  return true;
}

bool criterion_convexity() {
  Rng rng(108);
  for (int g = 2; g <= 6; ++g)
    for (const InvolutionType& t : admissible_triples(g))
      for (int trial = 0; trial < 100; ++trial) {
        SiegelPoint z1 = testing::random_stratum_point(rng, t);
        SiegelPoint z2 = testing::random_stratum_point(rng, t);
        SiegelPoint sum = make_siegel(z1.matrix() + z2.matrix());  // validates membership of H_g
        if (!stratum_contains(t, sum)) return false;
        GaussianRational lambda{make_rational(Integer(rng.pick(1, 9)), Integer(rng.pick(1, 9))),
                                Rational(0)};
        SiegelPoint scaled = make_siegel(lambda * z1.matrix());
        if (!stratum_contains(t, scaled)) return false;
      }
  return true;
}

}  // namespace

int main() {
  report(1, "classification round trip and conjugation invariance, g = 3..8",
         criterion_roundtrip_classification());
  report(2, "class and triple counting formulas, g = 3..50", criterion_counting_formulas());
  report(3, "dimension formula equals stratum parameter count, g <= 10",
         criterion_dimension_formula());
  report(4, "witness/involution pairs of all families verified, g = 3..8",
         criterion_witness_families());
  report(5, "connectivity certificates verified and connected, g = 3..8",
         criterion_certificates());
  report(6, "master witness realizes every admissible type, g = 3, 5, 7",
         criterion_master_witness());
  report(7, "genus-3 conjugacy certificates mod all odd primes below 50",
         criterion_mod_p_conjugacy());
  report(8, "strata are closed under sums and positive scalings, g <= 6",
         criterion_convexity());
  std::printf(
      "criterion 9: analytic connectedness/irreducibility statements         EXCLUDED (replaced "
      "by the finite checks above)\n");
  if (failures == 0) {
    std::printf("acceptance: all criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
