#include "ppav/symplectic.hpp"

#include <deque>

namespace ppav {

InvolutionType::InvolutionType(int x_, int y_, int z_) : x(x_), y(y_), z(z_) {
  if (x < 0 || y < 0 || z < 0) throw PreconditionViolated("type entries must be non-negative");
}

std::string to_string(const InvolutionType& t) {
  return "(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + ")";
}

IntegerMatrix standard_symplectic_form(std::size_t g) {
  IntegerMatrix j(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    j(k, g + k) = 1;
    j(g + k, k) = -1;
  }
  return j;
}

bool is_symplectic(const IntegerMatrix& r) {
  if (!r.is_square()) throw OddDimension("symplectic matrices are square of even size");
  if (r.rows() % 2 != 0) throw OddDimension("symplectic matrices have even size");
  IntegerMatrix j = standard_symplectic_form(r.rows() / 2);
  return r.transposed() * j * r == j;
}

IntegerMatrix shear_block() { return IntegerMatrix{{1, 0}, {1, -1}}; }

IntegerMatrix type_block(const InvolutionType& t) {
  const std::size_t g = static_cast<std::size_t>(t.g());
  IntegerMatrix w(g, g);
  std::size_t pos = 0;
  for (int k = 0; k < t.x; ++k) {
    w.paste(pos, pos, shear_block());
    pos += 2;
  }
  for (int k = 0; k < t.y; ++k) {
    w(pos, pos) = -1;
    ++pos;
  }
  for (int k = 0; k < t.z; ++k) {
    w(pos, pos) = 1;
    ++pos;
  }
  return w;
}

SymplecticInvolution::SymplecticInvolution(std::size_t g, IntegerMatrix r, InvolutionType t)
    : g_(g), r_(std::move(r)), type_(t) {}

SymplecticInvolution SymplecticInvolution::from_matrix(const IntegerMatrix& r) {
  InvolutionType t = classify_involution(r);
  return SymplecticInvolution(r.rows() / 2, r, t);
}

SymplecticInvolution reiner_normal_form(const InvolutionType& t) {
  IntegerMatrix w = type_block(t);
  IntegerMatrix r = IntegerMatrix::block_diag(w, w.transposed());
  return SymplecticInvolution::from_matrix(r);
}

InvolutionType classify_involution(const IntegerMatrix& r) {
  if (!is_symplectic(r)) throw NotSymplectic("matrix does not preserve the symplectic form");
  const std::size_t n = r.rows();
  const std::size_t g = n / 2;
  IntegerMatrix id = IntegerMatrix::identity(n);
  if (r * r != id) throw NotInvolution("matrix does not square to the identity");

  IntegerMatrix fixed = integer_kernel(r - id);      // +1 eigenlattice, saturated
  IntegerMatrix anti = integer_kernel(r + id);       // -1 eigenlattice, saturated
  const std::size_t f = fixed.cols();
  if (f + anti.cols() != n)
    throw InternalInconsistency("eigenlattice ranks do not fill the ambient lattice");

  // [Z^2g : fixed + anti] = 4^x determines x
  Integer index = abs(determinant(IntegerMatrix::hstack(fixed, anti)));
  int x = 0;
  while (index % 4 == 0) {
    index /= 4;
    ++x;
  }
  if (index != 1) throw InternalInconsistency("eigenlattice index is not a power of 4");

  if (f % 2 != 0) throw InternalInconsistency("fixed lattice rank is odd");
  int z = static_cast<int>(f / 2) - x;
  int y = static_cast<int>(g) - 2 * x - z;
  if (y < 0 || z < 0) throw InternalInconsistency("derived type has negative entries");
  if (r.trace() != Integer(2 * (z - y)))
    throw InternalInconsistency("trace does not match derived type");
  return InvolutionType(x, y, z);
}

SymplecticInvolution negate(const SymplecticInvolution& r) {
  return SymplecticInvolution::from_matrix(-r.matrix());
}

namespace {

// splitmix64: fixed, platform-independent stream
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

}  // namespace

IntegerMatrix random_symplectic(std::size_t g, std::uint64_t seed, std::size_t word_length) {
  SplitMix64 rng(seed);
  IntegerMatrix result = IntegerMatrix::identity(2 * g);
  for (std::size_t step = 0; step < word_length; ++step) {
    IntegerMatrix gen = IntegerMatrix::identity(2 * g);
    switch (rng.below(3)) {
      case 0: {
        // (I B; 0 I) with symmetric one-spot B
        std::size_t i = rng.below(g), j = rng.below(g);
        Integer c(rng.below(2) == 0 ? 1 : -1);
        gen(i, g + j) = c;
        gen(j, g + i) = c;
        break;
      }
      case 1: {
        // (A 0; 0 tA^-1) with elementary unimodular A = I + c e_i e_j^t
        if (g == 1) {
          gen(0, 0) = -1;
          gen(1, 1) = -1;
          break;
        }
        std::size_t i = rng.below(g), j = rng.below(g);
        if (i == j) j = (j + 1) % g;
        Integer c(rng.below(2) == 0 ? 1 : -1);
        gen(i, j) = c;
        gen(g + j, g + i) = -c;
        break;
      }
      default:
        gen = standard_symplectic_form(g);
        break;
    }
    result = result * gen;
  }
  return result;
}

std::set<IntegerMatrix> group_closure(const std::vector<IntegerMatrix>& generators,
                                      std::size_t cap) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().rows();
  for (const auto& m : generators)
    if (!m.is_square() || m.rows() != n)
      throw DimensionMismatch("generators must be square of equal size");

  std::vector<IntegerMatrix> gens;
  for (const auto& m : generators) {
    gens.push_back(m);
    gens.push_back(unimodular_inverse(m));
  }

  std::set<IntegerMatrix> seen;
  std::deque<IntegerMatrix> frontier;
  seen.insert(IntegerMatrix::identity(n));
  frontier.push_back(IntegerMatrix::identity(n));
  while (!frontier.empty()) {
    IntegerMatrix current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : gens) {
      IntegerMatrix next = current * gen;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeded cap", seen.size());
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace ppav
