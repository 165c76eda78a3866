#include "ppav/levels.hpp"

#include "ppav/linalg.hpp"

namespace ppav {

namespace {

IntegerMatrix reduce_entries(const IntegerMatrix& m, const Integer& n) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = mod_floor(m(i, j), n);
  return r;
}

bool congruent_zero(const IntegerMatrix& m, const Integer& n) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (mod_floor(m(i, j), n) != 0) return false;
  return true;
}

void require_odd_prime(const Integer& p) {
  if (p >= 2 && p % 2 == 0)
    throw EvenModulus("modulus 2 is refused: involutions need not diagonalize");
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw NotPrime("modulus must be an odd prime");
}

}  // namespace

LevelStructure LevelStructure::from_matrix(const IntegerMatrix& rn, const Integer& n) {
  if (n < 2) throw PreconditionViolated("level structures need n >= 2");
  if (!rn.is_square() || rn.rows() % 2 != 0)
    throw OddDimension("level structures are square of even size");
  IntegerMatrix reduced = reduce_entries(rn, n);
  if (!congruent_zero(reduced * reduced - IntegerMatrix::identity(rn.rows()), n))
    throw NotInvolution("matrix does not square to the identity mod n");
  return LevelStructure(std::move(reduced), n);
}

LevelStructure reduce_mod(const SymplecticInvolution& r, const Integer& n) {
  return LevelStructure::from_matrix(r.matrix(), n);
}

bool conjugate_mod_p(const LevelStructure& a, const LevelStructure& b, const Integer& p) {
  require_odd_prime(p);
  if (a.g() != b.g()) throw DimensionMismatch("level structures of different genus");
  if (a.n() != p || b.n() != p)
    throw PreconditionViolated("level structures must be reduced mod the same p");
  IntegerMatrix id = IntegerMatrix::identity(a.matrix().rows());
  return rank_mod_p(a.matrix() - id, p) == rank_mod_p(b.matrix() - id, p);
}

bool conjugacy_certificate_check(const IntegerMatrix& e, const LevelStructure& a,
                                 const LevelStructure& b, const Integer& n) {
  if (!e.is_square() || e.rows() != a.matrix().rows() || a.matrix().rows() != b.matrix().rows())
    return false;
  Integer det = mod_floor(determinant(e), n);
  Integer g;
  mpz_gcd(g.get_mpz_t(), det.get_mpz_t(), n.get_mpz_t());
  if (g != 1) return false;
  return congruent_zero(e * a.matrix() - b.matrix() * e, n);
}

IntegerMatrix g3_conjugator(const Integer& p) {
  require_odd_prime(p);
  Integer inv2;
  mpz_invert(inv2.get_mpz_t(), Integer(2).get_mpz_t(), p.get_mpz_t());
  Integer c = mod_floor(-inv2, p);  // the unique solution of -2c = 1 mod p

  IntegerMatrix m(3, 3);
  m(0, 0) = 1;
  m(0, 1) = mod_floor(Integer(-2), p);
  m(1, 0) = c;
  m(2, 2) = 1;

  // mod-p inverse by Gauss-Jordan
  IntegerMatrix work = m;
  IntegerMatrix inv = IntegerMatrix::identity(3);
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && mod_floor(work(pivot, col), p) == 0) ++pivot;
    if (pivot == 3) throw SingularMatrix("conjugator block is singular mod p");
    if (pivot != col) {
      work.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
    }
    Integer d;
    mpz_invert(d.get_mpz_t(), work(col, col).get_mpz_t(), p.get_mpz_t());
    for (std::size_t j = 0; j < 3; ++j) {
      work(col, j) = mod_floor(work(col, j) * d, p);
      inv(col, j) = mod_floor(inv(col, j) * d, p);
    }
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col) continue;
      Integer f = work(r, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        work(r, j) = mod_floor(work(r, j) - f * work(col, j), p);
        inv(r, j) = mod_floor(inv(r, j) - f * inv(col, j), p);
      }
    }
  }
  return IntegerMatrix::block_diag(m, inv.transposed());
}

bool same_type_implies_conjugate_mod_p(const InvolutionType& ta, const InvolutionType& tb,
                                       const Integer& p) {
  if (ta.g() != tb.g()) throw PreconditionViolated("types must share the same g");
  if (!ta.is_admissible() || !tb.is_admissible())
    throw PreconditionViolated("types must be admissible");
  return conjugate_mod_p(reduce_mod(reiner_normal_form(ta), p),
                         reduce_mod(reiner_normal_form(tb), p), p);
}

}  // namespace ppav
