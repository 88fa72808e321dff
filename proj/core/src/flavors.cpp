#include "floer/flavors.hpp"

#include <algorithm>

namespace floer {

namespace {

// Copies a block into a map between direct sums, matching generators by name.
void put(GradedMap& out, const IntMatrix& blk, const GradedModule& ps, const GradedModule& pt, const Int& sign = 1,
         const std::string& sp = "", const std::string& tp = "") {
  if (blk.rows() != pt.size() || blk.cols() != ps.size()) throw DimensionMismatch("component block shape");
  for (const auto& [k, v] : blk.entries()) out.add(sp + ps.name(k.second), tp + pt.name(k.first), v * sign);
}

void put(GradedMap& out, const GradedMap& piece, const Int& sign = 1, const std::string& sp = "",
         const std::string& tp = "") {
  put(out, piece.m, piece.src, piece.tgt, sign, sp, tp);
}

IntMatrix eye(const GradedModule& M) { return IntMatrix::identity(M.size()); }

bool zero_law(const IntMatrix& M, const Ring& R) { return M.reduced(R).is_zero(); }

Check law(const std::string& tag, const IntMatrix& M, const Ring& R) {
  Check c{tag, zero_law(M, R), ""};
  if (!c.ok) {
    const IntMatrix red = M.reduced(R);
    const auto& [k, v] = *red.entries().begin();
    c.detail = "entry (" + std::to_string(k.first) + "," + std::to_string(k.second) + ") = " + v.get_str();
  }
  return c;
}

Check equal(const std::string& tag, const GradedMap& a, const GradedMap& b, const Ring& R) {
  if (a.degree != b.degree) return {tag, false, "degrees differ"};
  return law(tag, a.m - b.m, R);
}

}  // namespace

BalancedComponents BalancedComponents::zero(GradedModule co, GradedModule cs, GradedModule cu, Ring r) {
  BalancedComponents c;
  const std::size_t o = co.size(), s = cs.size(), u = cu.size();
  c.co = std::move(co);
  c.cs = std::move(cs);
  c.cu = std::move(cu);
  c.ring = r;
  c.d_oo = IntMatrix(o, o);
  c.d_os = IntMatrix(s, o);
  c.d_uo = IntMatrix(o, u);
  c.d_us = IntMatrix(s, u);
  c.db_ss = IntMatrix(s, s);
  c.db_uu = IntMatrix(u, u);
  c.db_su = IntMatrix(u, s);
  c.db_us = IntMatrix(s, u);
  c.u_oo = IntMatrix(o, o);
  c.u_uo = IntMatrix(o, u);
  c.u_os = IntMatrix(s, o);
  c.u_us = IntMatrix(s, u);
  c.ub_su = IntMatrix(u, s);
  c.ub_uu = IntMatrix(u, u);
  c.ub_ss = IntMatrix(s, s);
  c.ub_us = IntMatrix(s, u);
  return c;
}

bool CheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::optional<std::string> CheckReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.tag;
  return std::nullopt;
}

bool CheckReport::passed(const std::string& tag) const {
  for (const auto& c : checks)
    if (c.tag == tag) return c.ok;
  throw Error("no check named " + tag);
}

FlavorBundle build_bundle(const BalancedComponents& c, const AssemblyOptions& opt) {
  const GradedModule& O = c.co;
  const GradedModule& S = c.cs;
  const GradedModule& U = c.cu;
  const GradedModule Ub = U.shifted(-1);
  const Int alt = opt.alternate_check_sign ? 1 : -1;

  FlavorBundle b;
  b.parts = c;
  b.hat = ChainComplex(GradedModule::direct_sum(O, U), c.ring);
  b.bar = ChainComplex(GradedModule::direct_sum(S, Ub), c.ring);
  b.check = ChainComplex(GradedModule::direct_sum(O, S), c.ring);
  const GradedModule &H = b.hat.mod, &B = b.bar.mod, &K = b.check.mod;

  GradedMap dh(H, H, -1), db(B, B, -1), dc(K, K, -1);
  put(dh, c.d_oo, O, O);
  put(dh, c.d_uo, U, O);
  put(dh, c.db_su * c.d_os, O, U, -1);
  put(dh, c.db_uu, U, U, -1);
  put(dh, c.db_su * c.d_us, U, U, -1);

  put(db, c.db_ss, S, S);
  put(db, c.db_us, Ub, S);
  put(db, c.db_su, S, Ub);
  put(db, c.db_uu, Ub, Ub);

  put(dc, c.d_oo, O, O);
  put(dc, c.d_uo * c.db_su, S, O, alt);
  put(dc, c.d_os, O, S);
  put(dc, c.db_ss, S, S);
  put(dc, c.d_us * c.db_su, S, S, alt);

  GradedMap uh(H, H, -2), ub(B, B, -2), uc(K, K, -2);
  put(uh, c.u_oo, O, O);
  put(uh, c.u_uo, U, O);
  put(uh, c.ub_su * c.d_os, O, U);
  put(uh, c.db_su * c.u_os, O, U, -1);
  put(uh, c.ub_uu, U, U);
  put(uh, c.ub_su * c.d_us, U, U);
  put(uh, c.db_su * c.u_us, U, U, -1);

  put(ub, c.ub_ss, S, S);
  put(ub, c.ub_us, Ub, S);
  put(ub, c.ub_su, S, Ub);
  put(ub, c.ub_uu, Ub, Ub);

  put(uc, c.u_oo, O, O);
  put(uc, c.u_uo * c.db_su, S, O, -1);
  put(uc, c.d_uo * c.ub_su, S, O, -1);
  put(uc, c.u_os, O, S);
  put(uc, c.ub_ss, S, S);
  put(uc, c.u_us * c.db_su, S, S, -1);
  put(uc, c.d_us * c.ub_su, S, S, -1);

  b.hat.d = dh.m;
  b.hat.u = uh.m;
  b.bar.d = db.m;
  b.bar.u = ub.m;
  b.check.d = dc.m;
  b.check.u = uc.m;

  b.i = GradedMap(B, K, 0);
  put(b.i, c.d_uo, Ub, O, -1);
  put(b.i, eye(S), S, S);
  put(b.i, c.d_us, Ub, S, -1);

  b.j = GradedMap(K, H, 0);
  put(b.j, eye(O), O, O);
  put(b.j, c.db_su, S, U, -1);

  b.p = GradedMap(H, B, -1);
  put(b.p, c.d_os, O, S);
  put(b.p, c.d_us, U, S);
  put(b.p, eye(U), U, Ub);

  b.k_i = GradedMap(B, K, -1);
  put(b.k_i, c.u_uo, Ub, O, -1);
  put(b.k_i, c.u_us, Ub, S, -1);

  b.k_j = GradedMap(K, H, -1);
  put(b.k_j, c.ub_su, S, U);

  b.k_p = GradedMap(H, B, -2);
  put(b.k_p, c.u_os, O, S);
  put(b.k_p, c.u_us, U, S);

  b.hat.normalize();
  b.bar.normalize();
  b.check.normalize();
  return b;
}

CheckReport check_bundle(const FlavorBundle& b) {
  const Ring& R = b.parts.ring;
  CheckReport rep;
  const IntMatrix &dh = b.hat.d, &db = b.bar.d, &dc = b.check.d;
  const IntMatrix &uh = *b.hat.u, &ub = *b.bar.u, &uc = *b.check.u;

  Check deg{"degree", true, ""};
  auto homog = [&](const std::string& what, const GradedMap& f) {
    if (!deg.ok) return;
    if (auto e = f.inhomogeneous_entry()) deg = {"degree", false, what + " " + *e};
  };
  homog("dhat", b.hat.dmap());
  homog("dbar", b.bar.dmap());
  homog("dcheck", b.check.dmap());
  homog("Uhat", b.hat.umap());
  homog("Ubar", b.bar.umap());
  homog("Ucheck", b.check.umap());
  for (const auto* f : {&b.i, &b.j, &b.p, &b.k_i, &b.k_j, &b.k_p}) homog("map", *f);
  rep.checks.push_back(deg);

  rep.checks.push_back(law("dhat^2", dh * dh, R));
  rep.checks.push_back(law("dbar^2", db * db, R));
  rep.checks.push_back(law("dcheck^2", dc * dc, R));
  rep.checks.push_back(law("[dhat,Uhat]", dh * uh - uh * dh, R));
  rep.checks.push_back(law("[dbar,Ubar]", db * ub - ub * db, R));
  rep.checks.push_back(law("[dcheck,Ucheck]", dc * uc - uc * dc, R));
  rep.checks.push_back(law("chain-i", b.i.m * db - dc * b.i.m, R));
  rep.checks.push_back(law("chain-j", b.j.m * dc - dh * b.j.m, R));
  rep.checks.push_back(law("chain-p", b.p.m * dh + db * b.p.m, R));
  // p-morphism law φU₁ − U₂φ + (−1)^{deg φ} K∂₁ + ∂₂K = 0
  rep.checks.push_back(law("U-i", b.i.m * ub - uc * b.i.m + b.k_i.m * db + dc * b.k_i.m, R));
  rep.checks.push_back(law("U-j", b.j.m * uc - uh * b.j.m + b.k_j.m * dc + dh * b.k_j.m, R));
  rep.checks.push_back(law("U-p", b.p.m * uh - ub * b.p.m - b.k_p.m * dh + db * b.k_p.m, R));
  return rep;
}

FlavorBundle assemble(const BalancedComponents& c, const AssemblyOptions& opt) {
  FlavorBundle b = build_bundle(c, opt);
  CheckReport rep = check_bundle(b);
  for (const auto& ch : rep.checks)
    if (!ch.ok) throw AssemblyInconsistent(ch.tag + (ch.detail.empty() ? "" : ": " + ch.detail));
  return b;
}

// ---- cone

ConeData cone_of(const FlavorBundle& b) {
  const GradedModule &O = b.parts.co, &S = b.parts.cs, &U = b.parts.cu;
  const GradedModule Ub = U.shifted(-1);
  ConeData cd;
  cd.e = cone(b.p, b.hat, b.bar, "h:", "b:");
  const GradedModule& E = cd.e.mod;
  GradedMap ue(E, E, -2);
  put(ue, b.hat.umap(), 1, "h:", "h:");
  put(ue, b.k_p, 1, "h:", "b:");
  put(ue, b.bar.umap(), 1, "b:", "b:");
  cd.e.u = ue.m;

  cd.k = GradedMap(b.check.mod, E, 0);
  put(cd.k, b.j, 1, "", "h:");
  put(cd.k, eye(S), S, S, 1, "", "b:");

  cd.l = GradedMap(E, b.check.mod, 0);
  put(cd.l, eye(O), O, O, 1, "h:", "");
  put(cd.l, b.i, 1, "b:", "");

  cd.ibar = GradedMap(b.bar.mod, E, 0);
  put(cd.ibar, GradedMap::identity(b.bar.mod), 1, "", "b:");
  cd.jbar = GradedMap(E, b.hat.mod, 0);
  put(cd.jbar, GradedMap::identity(b.hat.mod), 1, "h:", "");

  cd.K = GradedMap(E, E, 1);
  put(cd.K, eye(U), Ub, U, -1, "b:", "h:");

  cd.w_k = GradedMap(b.check.mod, E, -1);
  put(cd.w_k, b.k_j, 1, "", "h:");
  cd.w_l = GradedMap(E, b.check.mod, -1);
  put(cd.w_l, b.k_i, 1, "b:", "");
  cd.e.normalize();
  return cd;
}

namespace {

// K ⊗ ȷ on S_U of a module: g.1 ↦ K(g).1, g.y ↦ −K(g).y
GradedMap su_plain(const GradedMap& K) {
  GradedMap out(s_u_module(K.src), s_u_module(K.tgt), K.degree);
  for (const auto& [k, v] : K.m.entries()) {
    out.add(su_name(K.src.name(k.second), false), su_name(K.tgt.name(k.first), false), v);
    out.add(su_name(K.src.name(k.second), true), su_name(K.tgt.name(k.first), true), -v);
  }
  return out;
}

}  // namespace

CheckReport cone_identities(const FlavorBundle& b) {
  ConeData cd;
  try {
    cd = cone_of(b);
  } catch (const Error& e) {
    CheckReport rep;
    rep.checks.push_back({"cone", false, e.what()});
    return rep;
  }
  return cone_identities(b, cd);
}

CheckReport cone_identities(const FlavorBundle& b, const ConeData& cd) {
  const Ring& R = b.parts.ring;
  CheckReport rep;
  const GradedModule &O = b.parts.co, &S = b.parts.cs, &U = b.parts.cu;
  const GradedModule Ub = U.shifted(-1);
  const GradedMap e = cd.e.dmap();
  const GradedMap id_check = GradedMap::identity(b.check.mod), id_e = GradedMap::identity(cd.e.mod);

  rep.checks.push_back(equal("lk=1", cd.l * cd.k, id_check, R));
  rep.checks.push_back(equal("kl=1+eK+Ke", cd.k * cd.l, id_e + e * cd.K + cd.K * e, R));
  rep.checks.push_back(equal("j=jbar.k", b.j, cd.jbar * cd.k, R));
  {
    const GradedMap H = cd.K * cd.ibar;
    rep.checks.push_back(equal("ki-ibar=eH+Hd", cd.k * b.i - cd.ibar, e * H + H * b.bar.dmap(), R));
  }
  rep.checks.push_back({"k-pmorphism", is_pmorphism({cd.k, cd.w_k}, b.check, cd.e), ""});
  rep.checks.push_back({"l-pmorphism", is_pmorphism({cd.l, cd.w_l}, cd.e, b.check), ""});

  // S_U analogues
  try {
    const GradedModule zc = b.check.mod, zb = b.bar.mod, zh = b.hat.mod, ze = cd.e.mod;
    const GradedMap sk = s_u_map({cd.k, cd.w_k}, b.check, cd.e);
    const GradedMap sl = s_u_map({cd.l, cd.w_l}, cd.e, b.check);
    const GradedMap sj = s_u_map({b.j, b.k_j}, b.check, b.hat);
    const GradedMap si = s_u_map({b.i, b.k_i}, b.bar, b.check);
    const GradedMap sib = s_u_map({cd.ibar, GradedMap(zb, ze, -1)}, b.bar, cd.e);
    const GradedMap sjb = s_u_map({cd.jbar, GradedMap(ze, zh, -1)}, cd.e, b.hat);
    const ChainComplex SE = s_u(cd.e);
    const GradedMap D = SE.dmap();
    const GradedMap KJ = su_plain(cd.K);
    rep.checks.push_back(equal("SU:lk=1", sl * sk, GradedMap::identity(s_u_module(zc)), R));
    rep.checks.push_back(equal("SU:j=jbar.k", sj, sjb * sk, R));
    rep.checks.push_back(
        equal("SU:kl=1+DK+KD", sk * sl, GradedMap::identity(SE.mod) + D * KJ + KJ * D, R));
    const GradedMap KK = KJ * sib;
    rep.checks.push_back(equal("SU:ki-ibar=DH+HD", sk * si - sib, D * KK + KK * s_u(b.bar).dmap(), R));
  } catch (const NotAPMorphism& ex) {
    rep.checks.push_back({"SU-lifts", false, ex.what()});
  }

  GradedMap Po(b.hat.mod, b.check.mod, 0), Ps(b.check.mod, b.bar.mod, 0), Pu(b.bar.mod, b.hat.mod, 1);
  put(Po, eye(O), O, O);
  put(Ps, eye(S), S, S);
  put(Pu, eye(U), Ub, U);
  rep.checks.push_back(law("Kj.Po-Pu.Kp=0", (b.k_j * Po - Pu * b.k_p).m, R));
  rep.checks.push_back(law("Ps.Ki+Kp.Pu=0", (Ps * b.k_i + b.k_p * Pu).m, R));
  rep.checks.push_back(
      law("U.Pu-Pu.U+Kj.i+j.Ki=0", (b.hat.umap() * Pu - Pu * b.bar.umap() + b.k_j * b.i + b.j * b.k_i).m, R));
  return rep;
}

// ---- tower

std::string tower_name(const std::string& g, int n) { return g + "*x^" + std::to_string(n); }

BalancedComponents tower_model(const TowerParams& t) {
  require_valid(t.base);
  if (t.base.mod.modulus() != 0) throw ModulusUnsupported("tower base must be Z-graded");
  if (t.N < 2) throw ValidationError("tower truncation N must be at least 2");
  const GradedModule& C = t.base.mod;
  std::vector<Generator> s, u;
  for (int n = -t.N; n <= t.N; ++n)
    for (const auto& g : C.gens()) {
      if (n <= 0)
        s.push_back({tower_name(g.name, n), g.degree - 2 * n});
      else
        u.push_back({tower_name(g.name, n), g.degree - 2 * n + 1});
    }

  Completeness cs = Completeness::full(), cu = Completeness::full();
  if (C.size() > 0) {
    const int lo = C.min_degree(), hi = C.max_degree(), N = t.N;
    auto missing = [&](int k, int shift, bool upper) {
      for (const auto& g : C.gens()) {
        const int d = g.degree + shift;
        if (((k - d) % 2 + 2) % 2 != 0) continue;
        if (upper ? k > d + 2 * N : k < d - 2 * N) return true;
      }
      return false;
    };
    cs = Completeness::tabulate(lo - 1, hi + 2 * N + 1, [&](int k) { return !missing(k, 0, true); }, true, false);
    cu = Completeness::tabulate(lo + 1 - 2 * N - 1, hi + 1, [&](int k) { return !missing(k, 1, false); }, false,
                                true);
  }
  BalancedComponents c = BalancedComponents::zero(GradedModule({}, 0), GradedModule(s, 0, cs),
                                                  GradedModule(u, 0, cu), t.base.ring);

  auto part_of = [&](int n) { return n <= 0; };
  auto idx = [&](std::size_t g, int n) -> std::size_t {
    const std::size_t m = C.size();
    return n <= 0 ? static_cast<std::size_t>(n + t.N) * m + g : static_cast<std::size_t>(n - 1) * m + g;
  };
  auto place = [&](std::size_t gs, int ns, std::size_t gt, int nt, const Int& v, bool ubar) {
    if (nt > t.N || nt < -t.N) return;
    const bool s1 = part_of(ns), s2 = part_of(nt);
    IntMatrix* blk;
    if (ubar)
      blk = s1 ? (s2 ? &c.ub_ss : &c.ub_su) : (s2 ? &c.ub_us : &c.ub_uu);
    else
      blk = s1 ? (s2 ? &c.db_ss : &c.db_su) : (s2 ? &c.db_us : &c.db_uu);
    blk->add(idx(gt, nt), idx(gs, ns), v);
  };
  for (int n = -t.N; n <= t.N; ++n) {
    for (const auto& [k, v] : t.base.d.entries()) place(k.second, n, k.first, n, v, false);
    for (std::size_t g = 0; g < C.size(); ++g) place(g, n, g, n + 1, 1, true);
    for (const auto& term : t.higher) {
      if (term.step < 1) throw ValidationError("tower correction must raise the exponent");
      for (const auto& [k, v] : term.m.entries()) place(k.second, n, k.first, n + term.step, v, true);
    }
  }
  return c;
}

LocalizationReport tower_localization(const FlavorBundle& b) {
  LocalizationReport rep;
  const ChainComplex& C = b.bar;
  std::set<int> degs;
  if (C.size() == 0) return rep;
  for (int j = C.mod.min_degree() - 1; j <= C.mod.max_degree() + 3; ++j)
    if (C.mod.safe(j) && C.mod.safe(j - 2)) degs.insert(j);
  rep.degrees.assign(degs.begin(), degs.end());
  if (degs.empty()) return rep;
  InducedMap im = induced_on_homology(C.umap(), C, C, degs);
  for (const auto& [j, dm] : im.by_degree)
    if (!dm.iso) rep.iso = false;
  return rep;
}

// ---- ladder

bool LadderReport::ok() const {
  if (!cone_les.ok() || !triangle_exact || !squares_commute) return false;
  if (bar_vanishes && !j_iso) return false;
  return std::all_of(std::begin(rows), std::end(rows), [](const LesCertificate& c) { return c.ok(); });
}

namespace {

bool safe_in(const ChainComplex& C, int j, const Window& w) { return j >= w.lo && j <= w.hi && C.mod.safe(j); }

bool square(const GradedMap& a, const GradedMap& b, const GradedMap& c, const GradedMap& d, const Ring& R) {
  return (a * b).equals(c * d, R);
}

// δ_2 ∘ φ_C = φ_A ∘ δ_1 on homology at every degree where both rows are safe.
bool delta_square(const ShortExact& s1, const ShortExact& s2, const GradedMap& phiA, const GradedMap& phiC,
                  const Window& w, std::size_t& count) {
  const Ring& R = s1.A.ring;
  const int shift = -s1.g.degree - 1 - s1.f.degree;
  bool ok = true;
  for (int c = w.lo; c <= w.hi; ++c) {
    const int a = c + shift;
    if (!safe_in(s1.C, c, w) || !safe_in(s2.C, c, w) || !s1.A.mod.safe(a) || !s2.A.mod.safe(a)) continue;
    if (!s1.B.mod.safe(c - s1.g.degree) || !s2.B.mod.safe(c - s2.g.degree)) continue;
    const HomologyPresentation pa1 = present(s1.A, {a}), pc1 = present(s1.C, {c});
    const HomologyPresentation pa2 = present(s2.A, {a}), pc2 = present(s2.C, {c});
    const IntMatrix d1 = connecting_map(s1, pa1, pc1, c);
    const IntMatrix d2 = connecting_map(s2, pa2, pc2, c);
    const IntMatrix fa = induced_on_homology(phiA, s1.A, s2.A, pa1, pa2, {a}).by_degree.at(a).matrix;
    const IntMatrix fc = induced_on_homology(phiC, s1.C, s2.C, pc1, pc2, {c}).by_degree.at(c).matrix;
    if (!hom_is_zero(d2 * fc - fa * d1, pa2.at(a).orders, R)) ok = false;
    ++count;
  }
  return ok;
}

}  // namespace

LadderReport ladder_check(const FlavorBundle& b, const Window& w) {
  LadderReport rep;
  const Ring& R = b.parts.ring;
  const ConeData cd = cone_of(b);
  const ChainComplex sbar = s_u(b.bar), scheck = s_u(b.check), shat = s_u(b.hat), se = s_u(cd.e);
  const GradedMap si = s_u_map({b.i, b.k_i}, b.bar, b.check);
  const GradedMap sj = s_u_map({b.j, b.k_j}, b.check, b.hat);
  const GradedMap sp = s_u_map({b.p, b.k_p}, b.hat, b.bar);
  const GradedMap sib = s_u_map({cd.ibar, GradedMap(b.bar.mod, cd.e.mod, -1)}, b.bar, cd.e);
  const GradedMap sjb = s_u_map({cd.jbar, GradedMap(cd.e.mod, b.hat.mod, -1)}, cd.e, b.hat);

  rep.cone_les = certify_les({"cone", sbar, se, shat, sib, sjb}, w.lo, w.hi);

  // ... Ĉ →p C̄ →i Č →j Ĉ →p C̄ ...
  MapSequence seq{{shat, sbar, scheck, shat, sbar}, {sp, si, sj, sp}};
  for (std::size_t pos = 1; pos <= 3; ++pos) {
    std::set<int> degs;
    const int din = seq.maps[pos - 1].degree, dout = seq.maps[pos].degree;
    for (int j = w.lo; j <= w.hi; ++j)
      if (seq.complexes[pos].mod.safe(j) && seq.complexes[pos - 1].mod.safe(j - din) &&
          seq.complexes[pos + 1].mod.safe(j + dout))
        degs.insert(j);
    rep.triangle_degrees.insert(rep.triangle_degrees.end(), degs.begin(), degs.end());
    try {
      if (!verify_exact_at(seq, pos, degs)) rep.triangle_exact = false;
    } catch (const CompositionNonzero&) {
      rep.triangle_exact = false;
    }
  }

  const HomologyTable hb = homology(sbar, std::make_pair(w.lo, w.hi));
  rep.bar_vanishes = !hb.safe.empty() && std::all_of(hb.safe.begin(), hb.safe.end(), [&](int j) {
    return hb.at(j).trivial();
  });
  if (rep.bar_vanishes) {
    std::set<int> degs;
    for (int j = w.lo; j <= w.hi; ++j)
      if (scheck.mod.safe(j) && shat.mod.safe(j) && hb.safe.count(j) && hb.safe.count(j - 1)) degs.insert(j);
    rep.iso_degrees.assign(degs.begin(), degs.end());
    if (!degs.empty()) {
      InducedMap im = induced_on_homology(sj, scheck, shat, degs);
      for (const auto& [j, dm] : im.by_degree)
        if (!dm.iso) rep.j_iso = false;
    }
  }

  const FundamentalSequences fc = fundamental_sequences(scheck, w), fh = fundamental_sequences(shat, w);
  rep.rows[0] = fc.first_cert;
  rep.rows[1] = fc.second_cert;
  rep.rows[2] = fh.first_cert;
  rep.rows[3] = fh.second_cert;

  const GradedMap em = e_map(sj, fc.minus, fh.minus, Flavor::minus);
  const GradedMap ei = e_map(sj, fc.infinity, fh.infinity, Flavor::infinity);
  const GradedMap ep = e_map(sj, fc.plus, fh.plus, Flavor::plus);
  const GradedMap eh = e_map(sj, fc.hat, fh.hat, Flavor::hat);
  bool sq = square(fh.first.f, em, ei, fc.first.f, R) && square(fh.first.g, ei, ep, fc.first.g, R) &&
            square(fh.second.f, em, em, fc.second.f, R) && square(fh.second.g, em, eh, fc.second.g, R);
  sq = delta_square(fc.first, fh.first, em, ep, w, rep.delta_squares) && sq;
  sq = delta_square(fc.second, fh.second, em, eh, w, rep.delta_squares) && sq;
  rep.squares_commute = sq;
  return rep;
}

// ---- four flavors

const HomologyTable& FourFlavors::table(Flavor f) const {
  switch (f) {
    case Flavor::minus: return minus;
    case Flavor::infinity: return infinity;
    case Flavor::plus: return plus;
    case Flavor::hat: return hat;
  }
  return hat;
}

FourFlavors four_flavors(const ChainComplex& C, const Window& w) {
  require_valid(C);
  const FundamentalSequences fs = fundamental_sequences(s_u(C), w);
  const auto win = std::make_pair(w.lo, w.hi);
  FourFlavors out;
  out.minus = homology(fs.minus, win);
  out.infinity = homology(fs.infinity, win);
  out.plus = homology(fs.plus, win);
  out.hat = homology(fs.hat, win);
  out.first = fs.first_cert;
  out.second = fs.second_cert;
  return out;
}

}  // namespace floer
