#include "floer/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace floer {

void Ring::reduce(Int& x) const {
  if (p == 0) return;
  x %= p;
  if (x < 0) x += p;
}

Int Ring::inverse(const Int& x) const {
  if (p == 0) {
    if (x == 1 || x == -1) return x;
    throw Error("not a unit in Z");
  }
  Int r;
  Int m(p);
  if (mpz_invert(r.get_mpz_t(), reduced(x).get_mpz_t(), m.get_mpz_t()) == 0) throw Error("not a unit in F_p");
  return r;
}

std::string Ring::name() const { return p == 0 ? "Z" : "F" + std::to_string(p); }

// ---- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[{i, i}] = 1;
  return m;
}

IntMatrix IntMatrix::from_dense(const Dense& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (d[i][j] != 0) m.e_[{i, j}] = d[i][j];
  return m;
}

IntMatrix IntMatrix::diagonal(const Vec& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) m.e_[{i, i}] = d[i];
  return m;
}

IntMatrix IntMatrix::column(const Vec& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m.e_[{i, 0}] = v[i];
  return m;
}

Int IntMatrix::get(std::size_t r, std::size_t c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? Int(0) : it->second;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Int& v) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("entry out of bounds");
  if (v == 0)
    e_.erase({r, c});
  else
    e_[{r, c}] = v;
}

void IntMatrix::add(std::size_t r, std::size_t c, const Int& v) {
  if (v == 0) return;
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("entry out of bounds");
  auto [it, fresh] = e_.try_emplace({r, c}, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) e_.erase(it);
  }
}

Dense IntMatrix::to_dense() const {
  Dense d(rows_, Vec(cols_, Int(0)));
  for (const auto& [k, v] : e_) d[k.first][k.second] = v;
  return d;
}

Vec IntMatrix::col(std::size_t c) const {
  Vec v(rows_, Int(0));
  for (const auto& [k, x] : e_)
    if (k.second == c) v[k.first] = x;
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (const auto& [k, v] : e_) t.e_[{k.second, k.first}] = v;
  return t;
}

IntMatrix IntMatrix::reduced(const Ring& R) const {
  if (!R.is_field()) return *this;
  IntMatrix m(rows_, cols_);
  for (const auto& [k, v] : e_) {
    Int x = R.reduced(v);
    if (x != 0) m.e_[k] = x;
  }
  return m;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
  IntMatrix m(rows_, cols_);
  if (s == 0) return m;
  for (const auto& [k, v] : e_) m.e_[k] = v * s;
  return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  IntMatrix m(rs.size(), cs.size());
  if (rs.empty() || cs.empty() || e_.empty()) return m;
  std::map<std::size_t, std::size_t> rpos, cpos;
  for (std::size_t i = 0; i < rs.size(); ++i) rpos[rs[i]] = i;
  for (std::size_t j = 0; j < cs.size(); ++j) cpos[cs[j]] = j;
  for (const auto& [k, v] : e_) {
    auto ri = rpos.find(k.first);
    if (ri == rpos.end()) continue;
    auto ci = cpos.find(k.second);
    if (ci == cpos.end()) continue;
    m.e_[{ri->second, ci->second}] = v;
  }
  return m;
}

IntMatrix IntMatrix::cols_range(std::size_t from, std::size_t to) const {
  IntMatrix m(rows_, to - from);
  for (const auto& [k, v] : e_)
    if (k.second >= from && k.second < to) m.e_[{k.first, k.second - from}] = v;
  return m;
}

IntMatrix IntMatrix::rows_range(std::size_t from, std::size_t to) const {
  IntMatrix m(to - from, cols_);
  for (const auto& [k, v] : e_)
    if (k.first >= from && k.first < to) m.e_[{k.first - from, k.second}] = v;
  return m;
}

Vec IntMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length");
  Vec out(rows_, Int(0));
  for (const auto& [k, x] : e_) out[k.first] += x * v[k.second];
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw DimensionMismatch("hcat rows");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  m.e_ = a.e_;
  for (const auto& [k, v] : b.e_) m.e_[{k.first, k.second + a.cols_}] = v;
  return m;
}

IntMatrix IntMatrix::vcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw DimensionMismatch("vcat cols");
  IntMatrix m(a.rows_ + b.rows_, a.cols_);
  m.e_ = a.e_;
  for (const auto& [k, v] : b.e_) m.e_[{k.first + a.rows_, k.second}] = v;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                                " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  IntMatrix m(rows_, o.cols_);
  if (e_.empty() || o.e_.empty()) return m;
  std::vector<std::vector<std::pair<std::size_t, const Int*>>> orow(o.rows_);
  for (const auto& [k, v] : o.e_) orow[k.first].push_back({k.second, &v});
  for (const auto& [k, v] : e_)
    for (const auto& [j, w] : orow[k.second]) {
      auto [it, fresh] = m.e_.try_emplace({k.first, j}, v * *w);
      if (!fresh) it->second += v * *w;
    }
  std::erase_if(m.e_, [](const auto& kv) { return kv.second == 0; });
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sum shapes");
  IntMatrix m = *this;
  for (const auto& [k, v] : o.e_) m.add(k.first, k.second, v);
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& [k, v] : m.e_) v = -v;
  return m;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " {";
  bool first = true;
  for (const auto& [k, v] : e_) {
    os << (first ? "" : ", ") << "(" << k.first << "," << k.second << ")=" << v.get_str();
    first = false;
  }
  os << "}";
  return os.str();
}

// ---- AbelianGroup

AbelianGroup AbelianGroup::from_orders(std::size_t free_rank, const Vec& orders) {
  AbelianGroup g;
  g.free_rank = free_rank;
  Vec nz;
  for (const auto& o : orders) {
    if (o == 0)
      ++g.free_rank;
    else if (abs(o) != 1)
      nz.push_back(abs(o));
  }
  if (nz.empty()) return g;
  bool chain = true;
  std::sort(nz.begin(), nz.end());
  for (std::size_t i = 1; i < nz.size(); ++i)
    if (nz[i] % nz[i - 1] != 0) chain = false;
  if (!chain) {
    SmithForm sf = snf(IntMatrix::diagonal(nz), Ring::Z(), false);
    nz.clear();
    for (const auto& f : sf.factors)
      if (f != 1) nz.push_back(f);
  }
  g.torsion = nz;
  return g;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  Vec t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  return from_orders(a.free_rank + b.free_rank, t);
}

std::string AbelianGroup::str() const {
  if (trivial()) return "0";
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return s;
}

// ---- homology, kernels, solving

AbelianGroup homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out, const Ring& R) {
  if (d_out.cols() != d_in.rows()) throw DimensionMismatch("homology_of_pair: ambient ranks differ");
  if (!(d_out * d_in).reduced(R).is_zero()) throw CompositionNonzero("d_out * d_in != 0");
  const std::size_t n = d_in.rows();
  const SmithForm in = snf(d_in, R, false);
  const std::size_t r_out = snf(d_out, R, false).rank();
  Vec tors;
  for (const auto& f : in.factors)
    if (f != 1) tors.push_back(f);
  return AbelianGroup::from_orders(n - r_out - in.rank(), tors);
}

RankKernel rank_and_kernel(const IntMatrix& M, const Ring& R) {
  SmithForm sf = snf(M, R, true);
  RankKernel rk;
  rk.rank = sf.rank();
  rk.kernel = sf.right.cols_range(rk.rank, M.cols());
  // sign normalisation: first nonzero entry of each basis column positive
  std::vector<bool> flip(rk.kernel.cols(), false);
  for (std::size_t c = 0; c < rk.kernel.cols(); ++c) {
    Vec col = rk.kernel.col(c);
    for (const auto& x : col)
      if (x != 0) {
        flip[c] = (!R.is_field() && x < 0);
        break;
      }
  }
  IntMatrix k(rk.kernel.rows(), rk.kernel.cols());
  for (const auto& [key, v] : rk.kernel.entries()) k.set(key.first, key.second, flip[key.second] ? Int(-v) : v);
  rk.kernel = k;
  return rk;
}

Solver::Solver(const IntMatrix& G, const Ring& R)
    : ring_(R), rows_(G.rows()), cols_(G.cols()), sf_(snf(G.reduced(R), R, true)) {}

std::optional<Vec> Solver::solve(const Vec& v) const {
  if (v.size() != rows_) throw DimensionMismatch("solve: rhs length");
  Vec w = sf_.left.apply(v);
  for (auto& x : w) ring_.reduce(x);
  Vec y(cols_, Int(0));
  const std::size_t r = sf_.rank();
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < r) {
      const Int& d = sf_.factors[i];
      if (ring_.is_field()) {
        y[i] = ring_.reduced(w[i] * ring_.inverse(d));
      } else {
        if (w[i] % d != 0) return std::nullopt;
        y[i] = w[i] / d;
      }
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  Vec x = sf_.right.apply(y);
  for (auto& e : x) ring_.reduce(e);
  return x;
}

std::optional<Vec> solve_integer(const IntMatrix& G, const Vec& v, const Ring& R) { return Solver(G, R).solve(v); }

bool lattice_contains(const IntMatrix& big, const IntMatrix& small, const Ring& R) {
  if (big.rows() != small.rows()) throw DimensionMismatch("lattice ambient");
  if (small.is_zero()) return true;
  Solver s(big, R);
  for (std::size_t c = 0; c < small.cols(); ++c)
    if (!s.contains(small.col(c))) return false;
  return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b, const Ring& R) {
  return lattice_contains(a, b, R) && lattice_contains(b, a, R);
}

IntMatrix relation_lattice(const Vec& orders) {
  std::size_t k = 0;
  for (const auto& o : orders)
    if (o != 0) ++k;
  IntMatrix m(orders.size(), k);
  std::size_t c = 0;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) m.set(i, c++, orders[i]);
  return m;
}

IntMatrix hom_kernel(const IntMatrix& A, const Vec& src_orders, const Vec& tgt_orders, const Ring& R) {
  (void)src_orders;
  const IntMatrix rel = relation_lattice(tgt_orders);
  const IntMatrix big = IntMatrix::hcat(A, rel);
  const RankKernel rk = rank_and_kernel(big, R);
  return rk.kernel.rows_range(0, A.cols());
}

IntMatrix hom_image(const IntMatrix& A, const Vec& tgt_orders) {
  return IntMatrix::hcat(A, relation_lattice(tgt_orders));
}

bool hom_injective(const IntMatrix& A, const Vec& src_orders, const Vec& tgt_orders, const Ring& R) {
  return lattice_contains(relation_lattice(src_orders), hom_kernel(A, src_orders, tgt_orders, R), R);
}

bool hom_surjective(const IntMatrix& A, const Vec& tgt_orders, const Ring& R) {
  return lattice_contains(hom_image(A, tgt_orders), IntMatrix::identity(tgt_orders.size()), R);
}

bool hom_is_zero(const IntMatrix& A, const Vec& tgt_orders, const Ring& R) {
  return lattice_contains(relation_lattice(tgt_orders), A, R);
}

bool hom_exact(const IntMatrix& alpha, const IntMatrix& beta, const Vec& src_orders, const Vec& mid_orders,
               const Vec& tgt_orders, const Ring& R) {
  const IntMatrix ker = hom_kernel(beta, mid_orders, tgt_orders, R);
  const IntMatrix img = hom_image(alpha, mid_orders);
  (void)src_orders;
  return lattice_equal(IntMatrix::hcat(ker, relation_lattice(mid_orders)), img, R);
}

Int determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  Dense a = M.to_dense();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace floer
