#include "ppav/siegel.hpp"

namespace ppav {

SiegelPoint SiegelPoint::from_matrix(const GaussianMatrix& z) {
  if (!z.is_square()) throw DimensionMismatch("Siegel point must be square");
  if (!z.is_symmetric()) throw NotSymmetric("Siegel point must be symmetric");
  if (!is_positive_definite(imag_part(z)))
    throw ImaginaryPartNotPositiveDefinite("imaginary part is not positive definite");
  return SiegelPoint(z);
}

GaussianMatrix SiegelPoint::period_matrix() const {
  return GaussianMatrix::hstack(to_gaussian(IntegerMatrix::identity(g())), z_);
}

SiegelPoint make_siegel(const GaussianMatrix& z) { return SiegelPoint::from_matrix(z); }

SiegelPoint act(const IntegerMatrix& r, const SiegelPoint& z) {
  if (!is_symplectic(r)) throw NotSymplectic("action requires a symplectic matrix");
  const std::size_t g = z.g();
  if (r.rows() != 2 * g) throw DimensionMismatch("matrix size does not match the point");
  GaussianMatrix a = to_gaussian(r.submatrix(0, 0, g, g));
  GaussianMatrix b = to_gaussian(r.submatrix(0, g, g, g));
  GaussianMatrix c = to_gaussian(r.submatrix(g, 0, g, g));
  GaussianMatrix d = to_gaussian(r.submatrix(g, g, g, g));
  GaussianMatrix factor = a + z.matrix() * c;
  GaussianMatrix inv;
  try {
    inv = inverse(factor);
  } catch (const SingularMatrix&) {
    throw SingularFactor("A + ZC is singular");
  }
  return SiegelPoint::from_matrix(inv * (b + z.matrix() * d));
}

bool is_fixed(const IntegerMatrix& r, const SiegelPoint& z) {
  return act(r, z).matrix() == z.matrix();
}

bool commutation_check(const IntegerMatrix& w, const SiegelPoint& z) {
  if (!w.is_square() || w.rows() != z.g())
    throw DimensionMismatch("commutation check needs a g x g matrix");
  GaussianMatrix wg = to_gaussian(w);
  return wg * z.matrix() == z.matrix() * wg.transposed();
}

std::size_t stratum_grid_index(std::size_t x, std::size_t i, std::size_t j) {
  // row-major over the upper triangle of an x by x grid
  return i * x - i * (i - 1) / 2 + (j - i);
}

StratumParameters StratumParameters::defaults(const InvolutionType& t) {
  const std::size_t x = static_cast<std::size_t>(t.x);
  const std::size_t y = static_cast<std::size_t>(t.y);
  const std::size_t z = static_cast<std::size_t>(t.z);
  StratumParameters p;
  p.type = t;
  p.a.assign(x * (x + 1) / 2, GaussianRational());
  p.b.assign(x * (x + 1) / 2, GaussianRational());
  for (std::size_t i = 0; i < x; ++i) {
    std::size_t k = stratum_grid_index(x, i, i);
    p.a[k] = GaussianRational::i();
    p.b[k] = GaussianRational::i();
  }
  p.c.assign(x * y, GaussianRational());
  p.d.assign(x * z, GaussianRational());
  p.Zy = GaussianMatrix(y, y);
  for (std::size_t i = 0; i < y; ++i) p.Zy(i, i) = GaussianRational::i();
  p.Zz = GaussianMatrix(z, z);
  for (std::size_t i = 0; i < z; ++i) p.Zz(i, i) = GaussianRational::i();
  return p;
}

std::size_t StratumParameters::free_parameter_count() const {
  const std::size_t y = static_cast<std::size_t>(type.y);
  const std::size_t z = static_cast<std::size_t>(type.z);
  return a.size() + b.size() + c.size() + d.size() + y * (y + 1) / 2 + z * (z + 1) / 2;
}

SiegelPoint stratum_build(const StratumParameters& p) {
  const std::size_t x = static_cast<std::size_t>(p.type.x);
  const std::size_t y = static_cast<std::size_t>(p.type.y);
  const std::size_t zc = static_cast<std::size_t>(p.type.z);
  const std::size_t g = static_cast<std::size_t>(p.type.g());
  if (p.a.size() != x * (x + 1) / 2 || p.b.size() != p.a.size() || p.c.size() != x * y ||
      p.d.size() != x * zc)
    throw DimensionMismatch("stratum parameter list sizes do not match the type");
  if (p.Zy.rows() != y || p.Zy.cols() != y || p.Zz.rows() != zc || p.Zz.cols() != zc)
    throw DimensionMismatch("stratum tail sizes do not match the type");
  if (!p.Zy.is_symmetric() || !p.Zz.is_symmetric())
    throw NotSymmetric("stratum tails must be symmetric");

  GaussianMatrix z(g, g);
  // upper triangle of the 2x2-block grid, mirrored for symmetry
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t j = i; j < x; ++j) {
      std::size_t k = stratum_grid_index(x, i, j);
      const GaussianRational& a = p.a[k];
      const GaussianRational& b = p.b[k];
      GaussianMatrix block(2, 2);
      block(0, 0) = GaussianRational(Rational(2)) * a;
      block(0, 1) = a;
      block(1, 0) = a;
      block(1, 1) = b;
      z.paste(2 * i, 2 * j, block);
      if (i != j) z.paste(2 * j, 2 * i, block.transposed());
    }
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t k = 0; k < y; ++k) {
      const GaussianRational& c = p.c[i * y + k];
      z(2 * i + 1, 2 * x + k) = c;
      z(2 * x + k, 2 * i + 1) = c;
    }
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t k = 0; k < zc; ++k) {
      const GaussianRational& d = p.d[i * zc + k];
      z(2 * i, 2 * x + y + k) = GaussianRational(Rational(2)) * d;
      z(2 * i + 1, 2 * x + y + k) = d;
      z(2 * x + y + k, 2 * i) = z(2 * i, 2 * x + y + k);
      z(2 * x + y + k, 2 * i + 1) = d;
    }
  z.paste(2 * x, 2 * x, p.Zy);
  z.paste(2 * x + y, 2 * x + y, p.Zz);
  return SiegelPoint::from_matrix(z);
}

bool stratum_contains(const InvolutionType& t, const SiegelPoint& zp) {
  if (static_cast<std::size_t>(t.g()) != zp.g()) return false;
  const std::size_t x = static_cast<std::size_t>(t.x);
  const std::size_t y = static_cast<std::size_t>(t.y);
  const std::size_t zc = static_cast<std::size_t>(t.z);
  const GaussianMatrix& z = zp.matrix();
  const GaussianRational two{Rational(2), Rational(0)};

  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t j = i; j < x; ++j) {
      if (z(2 * i, 2 * j) != two * z(2 * i, 2 * j + 1)) return false;
      if (z(2 * i, 2 * j + 1) != z(2 * i + 1, 2 * j)) return false;
    }
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t k = 0; k < y; ++k)
      if (!z(2 * i, 2 * x + k).is_zero()) return false;
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t k = 0; k < zc; ++k)
      if (z(2 * i, 2 * x + y + k) != two * z(2 * i + 1, 2 * x + y + k)) return false;
  for (std::size_t p = 0; p < y; ++p)
    for (std::size_t q = 0; q < zc; ++q)
      if (!z(2 * x + p, 2 * x + y + q).is_zero()) return false;
  return true;
}

SiegelPoint stratum_midpoint(const SiegelPoint& z1, const SiegelPoint& z2,
                             const InvolutionType& t) {
  if (!stratum_contains(t, z1) || !stratum_contains(t, z2))
    throw StratumMismatch("both points must lie in the stratum " + to_string(t));
  GaussianRational half{Rational(1, 2), Rational(0)};
  return SiegelPoint::from_matrix(half * (z1.matrix() + z2.matrix()));
}

bool check_homomorphism(const GaussianMatrix& m, const IntegerMatrix& r, const SiegelPoint& z1,
                        const SiegelPoint& z2) {
  const std::size_t g1 = z1.g();
  const std::size_t g2 = z2.g();
  if (m.rows() != g2 || m.cols() != g1)
    throw DimensionMismatch("analytic matrix must be g2 x g1");
  if (r.rows() != 2 * g2 || r.cols() != 2 * g1)
    throw DimensionMismatch("rational matrix must be 2g2 x 2g1");
  return m * z1.period_matrix() == z2.period_matrix() * to_gaussian(r);
}

}  // namespace ppav
