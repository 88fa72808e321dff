// Degreewise homology with explicit generators and coordinate functionals.
//
// At degree j let Z be a saturated kernel basis of d_j, read off the right
// transform of SNF(d_j); the matching rows of its inverse give a left inverse
// L of Z. Boundaries in Z-coordinates are B = L·d_{j+1}; SNF(B) = P·B·Q
// diagonalises them. Columns of Z·P⁻¹ with invariant factor ≠ 1 generate
// homology and P·L gives coordinates of a cycle.

#include "floer/chain.hpp"

namespace floer {

AbelianGroup HomologyTable::at(int j) const {
  auto it = groups.find(j);
  return it == groups.end() ? AbelianGroup{} : it->second;
}

const DegreePresentation& HomologyPresentation::at(int j) const {
  auto it = by_degree.find(j);
  if (it == by_degree.end()) throw Error("no homology presentation at degree " + std::to_string(j));
  return it->second;
}

Vec HomologyPresentation::coordinates(int j, const Vec& cycle) const {
  const DegreePresentation& P = at(j);
  Vec w = P.coords.apply(cycle);
  for (std::size_t i = 0; i < w.size(); ++i) {
    ring.reduce(w[i]);
    if (P.orders[i] != 0) {
      w[i] %= P.orders[i];
      if (w[i] < 0) w[i] += P.orders[i];
    }
  }
  return w;
}

std::set<int> default_degrees(const GradedModule& M) {
  std::vector<int> d = M.degrees();
  return std::set<int>(d.begin(), d.end());
}

std::set<int> window_degrees(int lo, int hi) {
  std::set<int> s;
  for (int j = lo; j <= hi; ++j) s.insert(j);
  return s;
}

Vec restrict_to(const GradedModule& M, int j, const Vec& full) {
  const auto& idx = M.at(j);
  Vec out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = full[idx[i]];
  return out;
}

Vec extend_from(const GradedModule& M, int j, const Vec& local) {
  const auto& idx = M.at(j);
  Vec out(M.size(), Int(0));
  for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = local[i];
  return out;
}

DegreePresentation present_degree(const ChainComplex& C, int j) {
  DegreePresentation P;
  P.basis = C.mod.at(j);
  const std::size_t n = P.basis.size();
  if (n == 0) {
    P.gens = IntMatrix(0, 0);
    P.coords = IntMatrix(0, 0);
    return P;
  }
  const Ring& R = C.ring;
  const IntMatrix d_out = C.d.submatrix(C.mod.at(j - 1), P.basis).reduced(R);
  const IntMatrix d_in = C.d.submatrix(P.basis, C.mod.at(j + 1)).reduced(R);
  const SmithForm so = snf(d_out, R, true);
  const std::size_t r = so.rank();
  const IntMatrix Z = so.right.cols_range(r, n);
  const IntMatrix L = so.right_inv.rows_range(r, n);
  const std::size_t k = n - r;
  const SmithForm sb = snf((L * d_in).reduced(R), R, true);
  const IntMatrix G = (Z * sb.left_inv).reduced(R);
  const IntMatrix W = (sb.left * L).reduced(R);

  std::vector<std::size_t> keep;
  Vec orders;
  for (std::size_t i = 0; i < k; ++i) {
    if (i < sb.rank()) {
      if (sb.factors[i] == 1) continue;
      orders.push_back(sb.factors[i]);
    } else {
      orders.push_back(0);
    }
    keep.push_back(i);
  }
  std::vector<std::size_t> all_n(n), all_k(k);
  for (std::size_t i = 0; i < n; ++i) all_n[i] = i;
  for (std::size_t i = 0; i < k; ++i) all_k[i] = i;
  P.gens = G.submatrix(all_n, keep);
  P.coords = W.submatrix(keep, all_n);
  P.orders = orders;
  P.group = AbelianGroup::from_orders(0, orders);
  return P;
}

HomologyPresentation present(const ChainComplex& C, const std::set<int>& degrees) {
  HomologyPresentation H;
  H.ring = C.ring;
  for (int j : degrees) H.by_degree.emplace(C.mod.norm(j), present_degree(C, C.mod.norm(j)));
  return H;
}

HomologyTable homology(const ChainComplex& C, std::optional<std::pair<int, int>> window) {
  require_valid(C);
  std::set<int> degs = window ? window_degrees(window->first, window->second) : default_degrees(C.mod);
  HomologyTable T;
  for (int j0 : degs) {
    const int j = C.mod.norm(j0);
    if (C.mod.safe(j)) T.safe.insert(j);
    const auto& basis = C.mod.at(j);
    if (basis.empty()) continue;
    const IntMatrix d_out = C.d.submatrix(C.mod.at(j - 1), basis);
    const IntMatrix d_in = C.d.submatrix(basis, C.mod.at(j + 1));
    AbelianGroup g = homology_of_pair(d_in.reduced(C.ring), d_out.reduced(C.ring), C.ring);
    if (!g.trivial()) T.groups[j] = g;
  }
  return T;
}

InducedMap induced_on_homology(const GradedMap& f, const ChainComplex& A, const ChainComplex& B,
                               const HomologyPresentation& PA, const HomologyPresentation& PB,
                               const std::set<int>& src_degrees) {
  InducedMap out;
  const Ring& R = A.ring;
  for (int j0 : src_degrees) {
    const int j = A.mod.norm(j0);
    const int t = B.mod.norm(j + f.degree);
    const DegreePresentation& pa = PA.at(j);
    const DegreePresentation& pb = PB.at(t);
    DegreeMap dm;
    dm.src_degree = j;
    dm.tgt_degree = t;
    dm.matrix = IntMatrix(pb.orders.size(), pa.orders.size());
    for (std::size_t c = 0; c < pa.orders.size(); ++c) {
      Vec image = f.m.apply(extend_from(A.mod, j, pa.gens.col(c)));
      Vec w = PB.coordinates(t, restrict_to(B.mod, t, image));
      for (std::size_t r = 0; r < w.size(); ++r) dm.matrix.set(r, c, w[r]);
    }
    dm.injective = hom_injective(dm.matrix, pa.orders, pb.orders, R);
    dm.surjective = hom_surjective(dm.matrix, pb.orders, R);
    dm.iso = dm.injective && dm.surjective;
    dm.zero = hom_is_zero(dm.matrix, pb.orders, R);
    out.by_degree.emplace(j, std::move(dm));
  }
  return out;
}

InducedMap induced_on_homology(const GradedMap& f, const ChainComplex& A, const ChainComplex& B,
                               const std::set<int>& src_degrees) {
  if (!is_chain_map(f, A, B)) throw NotAChainMap("induced_on_homology");
  std::set<int> tgt;
  for (int j : src_degrees) tgt.insert(j + f.degree);
  return induced_on_homology(f, A, B, present(A, src_degrees), present(B, tgt), src_degrees);
}

}  // namespace floer
