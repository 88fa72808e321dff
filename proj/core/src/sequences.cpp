#include <algorithm>
#include <cstdlib>

#include "floer/chain.hpp"

namespace floer {

namespace {

struct Lazy {
  const ChainComplex* C;
  HomologyPresentation P;
  explicit Lazy(const ChainComplex& c) : C(&c) { P.ring = c.ring; }
  const DegreePresentation& at(int j) {
    j = C->mod.norm(j);
    auto it = P.by_degree.find(j);
    if (it == P.by_degree.end()) it = P.by_degree.emplace(j, present_degree(*C, j)).first;
    return it->second;
  }
};

IntMatrix induced_matrix(const GradedMap& f, const ChainComplex& A, const ChainComplex& B, Lazy& PA, Lazy& PB, int j) {
  const DegreePresentation& pa = PA.at(j);
  const int t = j + f.degree;
  const DegreePresentation& pb = PB.at(t);
  IntMatrix M(pb.orders.size(), pa.orders.size());
  for (std::size_t c = 0; c < pa.orders.size(); ++c) {
    Vec image = f.m.apply(extend_from(A.mod, j, pa.gens.col(c)));
    Vec w = PB.P.coordinates(B.mod.norm(t), restrict_to(B.mod, t, image));
    for (std::size_t r = 0; r < w.size(); ++r) M.set(r, c, w[r]);
  }
  return M;
}

IntMatrix snake(const ShortExact& s, Lazy& PA, Lazy& PC, int j) {
  const Ring& R = s.A.ring;
  const DegreePresentation& pc = PC.at(j);
  const int b = j - s.g.degree;
  const int a = b - 1 - s.f.degree;
  const DegreePresentation& pa = PA.at(a);
  const IntMatrix gblk = s.g.m.submatrix(s.C.mod.at(j), s.B.mod.at(b));
  const IntMatrix fblk = s.f.m.submatrix(s.B.mod.at(b - 1), s.A.mod.at(a));
  Solver lift(gblk, R), pull(fblk, R);
  IntMatrix M(pa.orders.size(), pc.orders.size());
  for (std::size_t c = 0; c < pc.orders.size(); ++c) {
    auto x = lift.solve(pc.gens.col(c));
    if (!x) throw Error(s.tag + ": cycle does not lift through the quotient map");
    Vec db = s.B.d.apply(extend_from(s.B.mod, b, *x));
    auto y = pull.solve(restrict_to(s.B.mod, b - 1, db));
    if (!y) throw Error(s.tag + ": boundary of the lift is not in the image of the inclusion");
    Vec w = PA.P.coordinates(s.A.mod.norm(a), *y);
    for (std::size_t r = 0; r < w.size(); ++r) M.set(r, c, w[r]);
  }
  (void)R;
  return M;
}

bool injective_block(const IntMatrix& M, const Ring& R) { return snf(M, R, false).rank() == M.cols(); }

bool surjective_block(const IntMatrix& M, const Ring& R) {
  SmithForm sf = snf(M, R, false);
  if (sf.rank() != M.rows()) return false;
  return std::all_of(sf.factors.begin(), sf.factors.end(), [](const Int& x) { return x == 1; });
}

}  // namespace

IntMatrix connecting_map(const ShortExact& s, const HomologyPresentation& PA, const HomologyPresentation& PC, int j) {
  Lazy la(s.A), lc(s.C);
  la.P = PA;
  lc.P = PC;
  return snake(s, la, lc, j);
}

bool verify_exact_at(const MapSequence& seq, std::size_t position, const std::set<int>& degrees) {
  if (seq.maps.size() + 1 != seq.complexes.size()) throw DimensionMismatch("map sequence shape");
  if (position >= seq.complexes.size()) throw DimensionMismatch("position out of range");
  const ChainComplex& X = seq.complexes[position];
  const Ring& R = X.ring;
  std::vector<Lazy> lz;
  for (const auto& c : seq.complexes) lz.emplace_back(c);
  for (int j : degrees) {
    const DegreePresentation& px = lz[position].at(j);
    IntMatrix alpha(px.orders.size(), 0);
    Vec src_orders;
    if (position > 0) {
      const GradedMap& f = seq.maps[position - 1];
      const int s = j - f.degree;
      alpha = induced_matrix(f, seq.complexes[position - 1], X, lz[position - 1], lz[position], s);
      src_orders = lz[position - 1].at(s).orders;
    }
    IntMatrix beta(0, px.orders.size());
    Vec tgt_orders;
    if (position + 1 < seq.complexes.size()) {
      const GradedMap& g = seq.maps[position];
      beta = induced_matrix(g, X, seq.complexes[position + 1], lz[position], lz[position + 1], j);
      tgt_orders = lz[position + 1].at(j + g.degree).orders;
    }
    if (!hom_is_zero(beta * alpha, tgt_orders, R)) throw CompositionNonzero("consecutive maps compose to nonzero");
    if (!hom_exact(alpha, beta, src_orders, px.orders, tgt_orders, R)) return false;
  }
  return true;
}

std::size_t LesCertificate::safe_nodes() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const LesNode& n) { return n.safe; }));
}

bool LesCertificate::ok() const {
  if (!chain_level_ok || !composition_ok) return false;
  return std::all_of(nodes.begin(), nodes.end(), [](const LesNode& n) { return !n.safe || n.exact; });
}

LesCertificate certify_les(const ShortExact& s, int lo, int hi) {
  LesCertificate cert;
  cert.tag = s.tag;
  const Ring& R = s.A.ring;
  const int df = s.f.degree, dg = s.g.degree;

  // chain level: 0 → A_{b−df} → B_b → C_{b+dg} → 0
  for (int b = lo; b <= hi; ++b) {
    if (!s.A.mod.complete_at(b - df) || !s.B.mod.complete_at(b) || !s.C.mod.complete_at(b + dg)) continue;
    const IntMatrix fb = s.f.m.submatrix(s.B.mod.at(b), s.A.mod.at(b - df)).reduced(R);
    const IntMatrix gb = s.g.m.submatrix(s.C.mod.at(b + dg), s.B.mod.at(b)).reduced(R);
    bool ok = (gb * fb).reduced(R).is_zero() && injective_block(fb, R) && surjective_block(gb, R);
    if (ok) ok = lattice_equal(rank_and_kernel(gb, R).kernel, fb, R);
    cert.chain_level_checked.push_back(b);
    if (!ok) cert.chain_level_ok = false;
  }
  // without short exactness there is no connecting map to check against
  if (!cert.chain_level_ok) return cert;

  Lazy la(s.A), lb(s.B), lc(s.C);
  const int pad = std::abs(df) + std::abs(dg) + 2;
  for (int a = lo - pad; a <= hi + pad; ++a) {
    const int b = a + df, c = b + dg, a1 = a - 1, b1 = a1 + df;
    // node at B_b
    if (b >= lo && b <= hi) {
      LesNode n{"B", b, s.A.mod.safe(a) && s.B.mod.safe(b) && s.C.mod.safe(c), false};
      if (n.safe) {
        IntMatrix al = induced_matrix(s.f, s.A, s.B, la, lb, a);
        IntMatrix be = induced_matrix(s.g, s.B, s.C, lb, lc, b);
        if (!hom_is_zero(be * al, lc.at(c).orders, R)) cert.composition_ok = false;
        n.exact = hom_exact(al, be, la.at(a).orders, lb.at(b).orders, lc.at(c).orders, R);
      }
      cert.nodes.push_back(n);
    }
    // node at C_c
    if (c >= lo && c <= hi) {
      LesNode n{"C", c, s.B.mod.safe(b) && s.C.mod.safe(c) && s.A.mod.safe(a1), false};
      if (n.safe) {
        IntMatrix al = induced_matrix(s.g, s.B, s.C, lb, lc, b);
        IntMatrix de = snake(s, la, lc, c);
        if (!hom_is_zero(de * al, la.at(a1).orders, R)) cert.composition_ok = false;
        n.exact = hom_exact(al, de, lb.at(b).orders, lc.at(c).orders, la.at(a1).orders, R);
      }
      cert.nodes.push_back(n);
    }
    // node at A_{a−1}
    if (a1 >= lo && a1 <= hi) {
      LesNode n{"A", a1, s.C.mod.safe(c) && s.A.mod.safe(a1) && s.B.mod.safe(b1), false};
      if (n.safe) {
        IntMatrix de = snake(s, la, lc, c);
        IntMatrix be = induced_matrix(s.f, s.A, s.B, la, lb, a1);
        if (!hom_is_zero(be * de, lb.at(b1).orders, R)) cert.composition_ok = false;
        n.exact = hom_exact(de, be, lc.at(c).orders, la.at(a1).orders, lb.at(b1).orders, R);
      }
      cert.nodes.push_back(n);
    }
  }
  return cert;
}

}  // namespace floer
