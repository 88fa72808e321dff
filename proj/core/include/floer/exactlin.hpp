#pragma once
// Exact linear algebra over Z and F_p.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "floer/errors.hpp"

namespace floer {

using Int = mpz_class;
using Vec = std::vector<Int>;

// p == 0 is the integers, otherwise the prime field F_p.
struct Ring {
  unsigned long p = 0;

  static Ring Z() { return {}; }
  static Ring F(unsigned long prime) { return Ring{prime}; }

  bool is_field() const { return p != 0; }
  void reduce(Int& x) const;
  Int reduced(Int x) const {
    reduce(x);
    return x;
  }
  Int inverse(const Int& x) const;
  bool operator==(const Ring&) const = default;
  std::string name() const;
};

using Dense = std::vector<std::vector<Int>>;

class IntMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const Dense& d, std::size_t rows, std::size_t cols);
  static IntMatrix diagonal(const Vec& d);
  static IntMatrix column(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }
  const std::map<Key, Int>& entries() const { return e_; }

  Int get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Int& v);
  void add(std::size_t r, std::size_t c, const Int& v);

  Dense to_dense() const;
  Vec col(std::size_t c) const;
  IntMatrix transpose() const;
  IntMatrix reduced(const Ring& R) const;
  IntMatrix scaled(const Int& s) const;
  IntMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const;
  IntMatrix cols_range(std::size_t from, std::size_t to) const;
  IntMatrix rows_range(std::size_t from, std::size_t to) const;
  Vec apply(const Vec& v) const;

  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::map<Key, Int> e_;
};

// Finitely generated abelian group (or F_p vector space when torsion is empty).
struct AbelianGroup {
  std::size_t free_rank = 0;
  Vec torsion;  // d_1 | d_2 | ..., each >= 2

  // Canonical form for Z^free plus the cyclic groups Z/o (orders equal to 1 are dropped).
  static AbelianGroup from_orders(std::size_t free_rank, const Vec& orders);
  static AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::size_t num_generators() const { return free_rank + torsion.size(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string str() const;
};

struct SmithForm {
  Vec factors;  // nonzero diagonal, divisibility chain over Z; all ones over a field
  IntMatrix left, right, left_inv, right_inv;
  std::size_t rank() const { return factors.size(); }
};

// left * M * right is diag(factors) padded with zeros.
SmithForm snf(const IntMatrix& M, const Ring& R = Ring::Z(), bool transforms = true);

AbelianGroup homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out, const Ring& R = Ring::Z());

struct RankKernel {
  std::size_t rank = 0;
  IntMatrix kernel;  // columns form a saturated basis of the kernel
};
RankKernel rank_and_kernel(const IntMatrix& M, const Ring& R = Ring::Z());

// Solves G x = v over the ring; nullopt when no exact solution exists.
class Solver {
 public:
  Solver(const IntMatrix& G, const Ring& R = Ring::Z());
  std::optional<Vec> solve(const Vec& v) const;
  bool contains(const Vec& v) const { return solve(v).has_value(); }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  SmithForm sf_;
};

std::optional<Vec> solve_integer(const IntMatrix& G, const Vec& v, const Ring& R = Ring::Z());

// Subgroup lattices of Z^n, given by generating columns.
bool lattice_contains(const IntMatrix& big, const IntMatrix& small, const Ring& R = Ring::Z());
bool lattice_equal(const IntMatrix& a, const IntMatrix& b, const Ring& R = Ring::Z());

// Homomorphisms between groups presented as Z^g / diag(orders); order 0 means a free summand.
IntMatrix relation_lattice(const Vec& orders);
IntMatrix hom_kernel(const IntMatrix& A, const Vec& src_orders, const Vec& tgt_orders, const Ring& R);
IntMatrix hom_image(const IntMatrix& A, const Vec& tgt_orders);
bool hom_injective(const IntMatrix& A, const Vec& src_orders, const Vec& tgt_orders, const Ring& R);
bool hom_surjective(const IntMatrix& A, const Vec& tgt_orders, const Ring& R);
// ker(beta) == im(alpha) inside the middle group.
bool hom_exact(const IntMatrix& alpha, const IntMatrix& beta, const Vec& src_orders, const Vec& mid_orders,
               const Vec& tgt_orders, const Ring& R);
// Whether the matrix is zero as a map of presented groups.
bool hom_is_zero(const IntMatrix& A, const Vec& tgt_orders, const Ring& R);

Int determinant(const IntMatrix& M);

}  // namespace floer
