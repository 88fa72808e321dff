#include "floer/connsum.hpp"

#include <algorithm>

#include "windowing.hpp"

namespace floer {

using detail::ExpRange;

// ---- filtered complexes

void FilteredComplex::add(const std::string& src, const std::string& dst, int exponent, const Int& c) {
  auto s = mod.index(src), t = mod.index(dst);
  if (!s || !t) throw ValidationError("unknown generator in " + src + "->" + dst);
  d[{*s, *t}][exponent] += c;
}

void FilteredComplex::normalize() {
  for (auto it = d.begin(); it != d.end();) {
    auto& poly = it->second;
    for (auto p = poly.begin(); p != poly.end();) {
      ring.reduce(p->second);
      p = p->second == 0 ? poly.erase(p) : std::next(p);
    }
    it = poly.empty() ? d.erase(it) : std::next(it);
  }
}

ValidationReport FilteredComplex::validate() const {
  ValidationReport rep;
  LawResult deg{"degree", true, ""};
  for (const auto& [k, poly] : d) {
    for (const auto& [e, c] : poly) {
      if (ring.reduced(c) == 0) continue;
      if (mod.degree(k.second) != mod.degree(k.first) - 1 + 2 * e) {
        deg.ok = false;
        deg.witness = mod.name(k.first) + "->" + mod.name(k.second) + " U^" + std::to_string(e);
        break;
      }
    }
    if (!deg.ok) break;
  }
  rep.laws.push_back(deg);

  // (src, dst) → exponent → coeff of ∂∘∂
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, Int>> sq;
  for (const auto& [k1, p1] : d)
    for (auto it = d.lower_bound({k1.second, 0}); it != d.end() && it->first.first == k1.second; ++it)
      for (const auto& [e1, c1] : p1)
        for (const auto& [e2, c2] : it->second) sq[{k1.first, it->first.second}][e1 + e2] += c1 * c2;
  LawResult d2{"d2", true, ""};
  for (const auto& [k, poly] : sq) {
    for (const auto& [e, c] : poly)
      if (ring.reduced(c) != 0) {
        d2.ok = false;
        d2.witness = mod.name(k.first) + "->" + mod.name(k.second) + " U^" + std::to_string(e);
        break;
      }
    if (!d2.ok) break;
  }
  rep.laws.push_back(d2);
  return rep;
}

bool check_positivity(const FilteredComplex& F) {
  for (const auto& [k, poly] : F.d)
    for (const auto& [e, c] : poly)
      if (e < 0 && F.ring.reduced(c) != 0) return false;
  return true;
}

std::string cm_name(const std::string& c, int m) { return c + "*U^" + std::to_string(m); }

namespace {

ChainComplex expand(const FilteredComplex& F, const ExpRange& r, const Window& w) {
  auto pairs = detail::windowed_pairs(F.mod, r, w, 0);
  std::vector<Generator> gens;
  std::map<std::pair<std::size_t, int>, std::size_t> pos;
  for (const auto& [i, m] : pairs) {
    pos[{i, m}] = gens.size();
    gens.push_back({cm_name(F.mod.name(i), m), F.mod.degree(i) - 2 * m});
  }
  ChainComplex C(GradedModule(std::move(gens), 0, detail::windowed_completeness(F.mod, r, w, {0})), F.ring);
  C.u = IntMatrix(C.size(), C.size());
  for (const auto& [k, poly] : F.d)
    for (const auto& [e, c] : poly)
      for (const auto& [i, m] : pairs) {
        if (i != k.first) continue;
        auto it = pos.find({k.second, m + e});
        if (it != pos.end()) C.d.add(it->second, pos[{i, m}], c);
      }
  for (const auto& [key, p] : pos) {
    auto it = pos.find({key.first, key.second + 1});
    if (it != pos.end()) C.u->set(it->second, p, 1);
  }
  C.normalize();
  return C;
}

// Identity on names present in both, restricted by the kept exponents.
GradedMap by_name(const ChainComplex& A, const ChainComplex& B) {
  GradedMap f(A.mod, B.mod, 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    if (auto j = B.mod.index(A.mod.name(i))) f.m.set(*j, i, 1);
  return f;
}

}  // namespace

CMFlavors cm_flavors(const FilteredComplex& F, const Window& w) {
  if (!check_positivity(F)) throw PositivityViolated("a differential term has negative U-exponent");
  if (F.mod.modulus() != 0) throw ModulusUnsupported("filtered complexes are Z-graded");
  CMFlavors out;
  out.minus = expand(F, {0, std::nullopt}, w);
  out.infinity = expand(F, {std::nullopt, std::nullopt}, w);
  out.plus = expand(F, {std::nullopt, -1}, w);
  out.hat = expand(F, {0, 0}, w);
  out.u_minus = expand(F, {1, std::nullopt}, w);
  out.first = {"CM-:CMinf:CM+", out.minus, out.infinity, out.plus, by_name(out.minus, out.infinity),
               by_name(out.infinity, out.plus)};
  out.second = {"U.CM-:CM-:CMhat", out.u_minus, out.minus, out.hat, by_name(out.u_minus, out.minus),
                by_name(out.minus, out.hat)};
  out.first_cert = certify_les(out.first, w.lo, w.hi);
  out.second_cert = certify_les(out.second, w.lo, w.hi);
  return out;
}

// ---- product complex

ChainComplex product_complex(const SumInput& s) {
  TensorProduct T = tensor(s.c1, s.c2hat);
  ChainComplex P = T.complex;
  const std::size_t n = P.size();
  P.u = T.u_left.value_or(IntMatrix(n, n)) - T.u_right.value_or(IntMatrix(n, n));
  P.normalize();
  require_valid(P);
  return P;
}

ChainComplex s_u_sum(const ChainComplex& product) { return s_u(product); }

// ---- case 1

ChainComplex case1_model(int N) {
  if (N < 0) throw ValidationError("case-1 truncation must be ≥ 0");
  std::vector<Generator> g;
  for (int a = 0; a <= N; ++a) {
    g.push_back({"u2^" + std::to_string(a), -2 * a});
    g.push_back({"y2*u2^" + std::to_string(a), -2 * a + 1});
  }
  // missing exponents a > N live in degrees ≤ −2N − 1
  Completeness c = Completeness::tabulate(-2 * N - 1, 1, [N](int k) { return k >= -2 * N; }, false, true);
  ChainComplex M(GradedModule(std::move(g), 0, c));
  M.u = IntMatrix(M.size(), M.size());
  for (int a = 0; a < N; ++a) {
    M.u->set(2 * (a + 1), 2 * a, 1);
    M.u->set(2 * (a + 1) + 1, 2 * a + 1, 1);
  }
  return M;
}

ShiftReport case1_check(const ChainComplex& c1, int N, const Window& w) {
  require_valid(c1);
  ChainComplex left = s_u_sum(product_complex({c1, case1_model(N)}));
  ChainComplex y2(GradedModule({{"1", 0}, {"y2", 1}}), c1.ring);
  ChainComplex plain(c1.mod, c1.ring);
  plain.d = c1.d;
  ChainComplex right = tensor(plain, y2).complex;
  const int margin = 8;
  return compare_up_to_shift(homology(left, std::pair{w.lo, w.hi}),
                             homology(right, std::pair{w.lo - margin, w.hi + margin}));
}

// ---- case 2

namespace {

std::string v_name(int n) { return "u1^" + std::to_string(n); }

}  // namespace

ChainComplex case2_left(const ChainComplex& c, Flavor f, const Window& w) {
  if (!c.u) throw MissingUAction("case 2 needs the U-action of C");
  if (c.mod.modulus() != 0) throw ModulusUnsupported("case 2 needs a Z-graded complex");
  const ExpRange r = detail::exponents(f);
  std::vector<Generator> vg;
  if (c.size() > 0) {
    // S_U C occupies degrees [min, max + 1]
    int from = detail::ceil_div(c.mod.min_degree() - w.hi, 2);
    int to = detail::floor_div(c.mod.max_degree() + 1 - w.lo, 2);
    if (r.lo) from = std::max(from, *r.lo);
    if (r.hi) to = std::min(to, *r.hi);
    for (int n = from; n <= to; ++n) vg.push_back({v_name(n), -2 * n});
  }
  ChainComplex V(GradedModule(std::move(vg)), c.ring);
  V.u = IntMatrix(V.size(), V.size());
  for (std::size_t i = 0; i + 1 < V.size(); ++i) V.u->set(i + 1, i, 1);

  ChainComplex full = s_u_sum(product_complex({V, c}));
  std::vector<std::size_t> keep;
  std::vector<Generator> g;
  for (std::size_t i = 0; i < full.size(); ++i)
    if (full.mod.degree(i) >= w.lo && full.mod.degree(i) <= w.hi) {
      keep.push_back(i);
      g.push_back(full.mod.gen(i));
    }
  ChainComplex out(GradedModule(std::move(g)), c.ring);
  out.d = full.d.submatrix(keep, keep);
  return out;
}

bool case2_check(const ChainComplex& c, Flavor f, const Window& w) {
  ChainComplex left = case2_left(c, f, w);
  ChainComplex right = e_y(s_u(c), f, w);
  const std::size_t n = left.size();
  if (n != right.size())
    throw IdentificationFailed("generator counts differ: " + std::to_string(n) + " vs " +
                               std::to_string(right.size()));
  std::vector<std::size_t> to(n);
  std::vector<Int> sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& nm = left.mod.name(i);
    const auto hash = nm.find('#');
    const int e = std::stoi(nm.substr(3, hash - 3));
    const std::string rest = nm.substr(hash + 1);
    const bool y = rest.back() == 'y';
    const std::string target = ey_name(rest, e);
    auto j = right.mod.index(target);
    if (!j) throw IdentificationFailed("no partner for " + nm + " (expected " + target + ")");
    if (right.mod.degree(*j) != left.mod.degree(i)) throw IdentificationFailed("degree differs at " + nm);
    to[i] = *j;
    sign[i] = ((e + (y ? 1 : 0)) % 2 == 0) ? 1 : -1;
  }
  IntMatrix moved(n, n);
  for (const auto& [k, v] : left.d.entries()) moved.add(to[k.first], to[k.second], v * sign[k.first] * sign[k.second]);
  const IntMatrix a = moved.reduced(c.ring), b = right.d.reduced(c.ring);
  if (a == b) return true;
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row)
      if (a.get(row, col) != b.get(row, col))
        throw IdentificationFailed(right.mod.name(col) + "->" + right.mod.name(row) + ": transported " +
                                   a.get(row, col).get_str() + ", expected " + b.get(row, col).get_str());
  return true;
}

// ---- sum maps

namespace {

Check zero_check(const std::string& tag, const IntMatrix& M, const GradedModule& src, const GradedModule& tgt,
                 const Ring& R) {
  const IntMatrix z = M.reduced(R);
  if (z.is_zero()) return {tag, true, ""};
  const auto& [k, v] = *z.entries().begin();
  return {tag, false, src.name(k.second) + "->" + tgt.name(k.first) + " = " + v.get_str()};
}

IntMatrix blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  return IntMatrix::vcat(IntMatrix::hcat(a, b), IntMatrix::hcat(c, d));
}

}  // namespace

CheckReport verify_sum_maps(const ChainComplex& product, const ConnSumMaps& m) {
  if (!product.u) throw MissingUAction("sum maps need U_⊔");
  const ChainComplex& S = m.sharp;
  const std::size_t np = product.size(), ns = S.size();
  auto shape = [](const GradedMap& f, std::size_t r, std::size_t c, const char* what) {
    if (f.m.rows() != r || f.m.cols() != c) throw DimensionMismatch(std::string("sum map ") + what);
  };
  shape(m.v0, np, ns, "V0");
  shape(m.v1, np, ns, "V1");
  shape(m.v0d, ns, np, "V0'");
  shape(m.v1d, ns, np, "V1'");
  shape(m.h_sharp, ns, ns, "H#");
  for (const GradedMap* b : {&m.a, &m.b, &m.c, &m.d}) shape(*b, np, np, "homotopy block");

  CheckReport rep;
  Check par{"parity", true, ""};
  auto parity = [&](const GradedMap& f, bool odd, const char* what) {
    if (!par.ok) return;
    if (auto e = f.inhomogeneous_entry()) {
      par = {"parity", false, std::string(what) + " inhomogeneous at " + *e};
    } else if (((f.degree % 2) != 0) != odd) {
      par = {"parity", false, std::string(what) + (odd ? " should be odd" : " should be even")};
    }
  };
  parity(m.v0, true, "V0");
  parity(m.v1, false, "V1");
  parity(m.v0d, false, "V0'");
  parity(m.v1d, true, "V1'");
  parity(m.h_sharp, true, "H#");
  // M is odd on S_{U_⊔}; the off-diagonal blocks cross the y-shift
  parity(m.a, true, "A");
  parity(m.b, false, "B");
  parity(m.c, false, "C");
  parity(m.d, true, "D");
  rep.checks.push_back(par);

  const Ring& R = product.ring;
  const IntMatrix& dp = product.d;
  const IntMatrix& up = *product.u;
  const IntMatrix& ds = S.d;
  rep.checks.push_back(zero_check("dV0+V0d=0", dp * m.v0.m + m.v0.m * ds, S.mod, product.mod, R));
  rep.checks.push_back(
      zero_check("dV1-V1d-UV0=0", dp * m.v1.m - m.v1.m * ds - up * m.v0.m, S.mod, product.mod, R));
  rep.checks.push_back(zero_check("dV0'-V0'd=0", ds * m.v0d.m - m.v0d.m * dp, product.mod, S.mod, R));
  rep.checks.push_back(
      zero_check("dV1'+V1'd+V0'U=0", ds * m.v1d.m + m.v1d.m * dp + m.v0d.m * up, product.mod, S.mod, R));

  const IntMatrix id_s = IntMatrix::identity(ns);
  rep.checks.push_back(zero_check("V'V=1+[d,H]",
                                  m.v1d.m * m.v0.m + m.v0d.m * m.v1.m - id_s - ds * m.h_sharp.m - m.h_sharp.m * ds,
                                  S.mod, S.mod, R));

  const ChainComplex su = s_u_sum(product);
  const IntMatrix vv = blocks(m.v0.m * m.v1d.m, m.v0.m * m.v0d.m, m.v1.m * m.v1d.m, m.v1.m * m.v0d.m);
  const IntMatrix M = blocks(m.a.m, m.b.m, m.c.m, m.d.m);
  rep.checks.push_back(zero_check("VV'=1+[D,M]", vv - IntMatrix::identity(2 * np) - su.d * M - M * su.d, su.mod,
                                  su.mod, R));
  return rep;
}

ConnSumMaps identity_sum_maps(const ChainComplex& product) {
  const ChainComplex su = s_u_sum(product);
  const std::size_t n = product.size();
  ConnSumMaps m;
  m.sharp = ChainComplex(su.mod.shifted(1), product.ring);
  m.sharp.d = -su.d;
  const GradedModule& P = product.mod;
  const GradedModule& H = m.sharp.mod;
  m.v0 = GradedMap(H, P, -1);
  m.v1 = GradedMap(H, P, -2);
  m.v0d = GradedMap(P, H, 2);
  m.v1d = GradedMap(P, H, 1);
  for (std::size_t i = 0; i < n; ++i) {
    m.v0.m.set(i, i, 1);
    m.v1.m.set(i, n + i, 1);
    m.v0d.m.set(n + i, i, 1);
    m.v1d.m.set(i, i, 1);
  }
  m.h_sharp = GradedMap::zero(H, H, 1);
  m.a = GradedMap::zero(P, P, 1);
  m.b = GradedMap::zero(P, P, 2);
  m.c = GradedMap::zero(P, P, 0);
  m.d = GradedMap::zero(P, P, 1);
  return m;
}

}  // namespace floer
