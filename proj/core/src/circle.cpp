#include "floer/circle.hpp"

#include "windowing.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

namespace floer {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::minus: return "minus";
    case Flavor::infinity: return "inf";
    case Flavor::plus: return "plus";
    case Flavor::hat: return "hat";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(const std::string& s) {
  if (s == "minus" || s == "-") return Flavor::minus;
  if (s == "inf" || s == "infinity") return Flavor::infinity;
  if (s == "plus" || s == "+") return Flavor::plus;
  if (s == "hat") return Flavor::hat;
  return std::nullopt;
}

Window::Window(int l, int h) : lo(l), hi(h) {
  if (lo > hi) throw ValidationError("window lo > hi");
}

namespace {

using detail::ExpRange;
using detail::exponents;
using detail::windowed_completeness;
using detail::windowed_pairs;


void require_z_graded(const ChainComplex& C) {
  if (C.mod.modulus() != 0) throw ModulusUnsupported("circle functors need a Z-graded complex");
}

}  // namespace

// ---- p-morphisms

bool is_pmorphism(const PMorphism& P, const ChainComplex& C1, const ChainComplex& C2) {
  if (!C1.u || !C2.u) throw MissingUAction("p-morphism between complexes without U");
  if (P.k.degree != P.phi.degree - 1) return false;
  if (!is_chain_map(P.phi, C1, C2)) return false;
  const Int s = P.phi.degree % 2 == 0 ? 1 : -1;
  IntMatrix law = P.phi.m * *C1.u - *C2.u * P.phi.m + (P.k.m * C1.d).scaled(s) + C2.d * P.k.m;
  return law.reduced(C1.ring).is_zero();
}

PMorphism compose(const PMorphism& psi, const PMorphism& phi) {
  const Int s = psi.phi.degree % 2 == 0 ? 1 : -1;
  PMorphism out;
  out.phi = psi.phi * phi.phi;
  out.k = psi.k * phi.phi + (psi.phi * phi.k).scaled(s);
  return out;
}

PMorphism add(const PMorphism& a, const PMorphism& b) { return {a.phi + b.phi, a.k + b.k}; }

// ---- S_U

std::string su_name(const std::string& g, bool y) { return g + (y ? ".y" : ".1"); }
std::string ey_name(const std::string& g, int n) { return g + "*u^" + std::to_string(n); }

GradedModule s_u_module(const GradedModule& M) {
  std::vector<Generator> g;
  for (const auto& x : M.gens()) g.push_back({su_name(x.name, false), x.degree});
  for (const auto& x : M.gens()) g.push_back({su_name(x.name, true), x.degree + 1});
  const Completeness& c = M.completeness();
  return GradedModule(std::move(g), M.modulus(), Completeness::meet(c, c.shifted(1)));
}

ChainComplex s_u(const ChainComplex& C) {
  if (!C.u) throw MissingUAction("S_U needs a U-action");
  require_z_graded(C);
  const std::size_t n = C.size();
  ChainComplex S(s_u_module(C.mod), C.ring);
  for (const auto& [k, v] : C.d.entries()) {
    S.d.set(k.first, k.second, v);
    S.d.set(k.first + n, k.second + n, -v);
  }
  for (const auto& [k, v] : C.u->entries()) S.d.set(k.first + n, k.second, v);
  S.y = IntMatrix(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) S.y->set(i + n, i, 1);
  S.normalize();
  return S;
}

GradedMap s_u_map(const PMorphism& P, const ChainComplex& C1, const ChainComplex& C2) {
  if (!is_pmorphism(P, C1, C2)) throw NotAPMorphism("S_U(Φ) needs a p-morphism");
  const std::size_t n1 = C1.size(), n2 = C2.size();
  const Int s = P.phi.degree % 2 == 0 ? 1 : -1;
  IntMatrix M(2 * n2, 2 * n1);
  for (const auto& [k, v] : P.phi.m.entries()) {
    M.set(k.first, k.second, v);
    M.set(k.first + n2, k.second + n1, v * s);
  }
  for (const auto& [k, v] : P.k.m.entries()) M.set(k.first + n2, k.second, v);
  return GradedMap(s_u_module(C1.mod), s_u_module(C2.mod), P.phi.degree, M);
}

// ---- E_Y

ChainComplex e_y(const ChainComplex& C, Flavor f, const Window& w) {
  if (!C.y) throw MissingYAction("E_Y needs a Y-action");
  require_z_graded(C);
  const ExpRange r = exponents(f);
  auto pairs = windowed_pairs(C.mod, r, w, 0);
  std::vector<Generator> gens;
  for (const auto& [i, n] : pairs) gens.push_back({ey_name(C.mod.name(i), n), C.mod.degree(i) - 2 * n});
  ChainComplex E(GradedModule(std::move(gens), 0, windowed_completeness(C.mod, r, w, {0})), C.ring);
  E.u = IntMatrix(E.size(), E.size());
  std::map<std::pair<std::size_t, int>, std::size_t> pos;
  for (std::size_t p = 0; p < pairs.size(); ++p) pos[pairs[p]] = p;
  auto put = [&](IntMatrix& M, std::size_t col, std::size_t g, int n, const Int& v) {
    auto it = pos.find({g, n});
    if (it != pos.end()) M.add(it->second, col, v);
  };
  std::vector<std::vector<std::pair<std::size_t, Int>>> dcol(C.size()), ycol(C.size());
  for (const auto& [k, v] : C.d.entries()) dcol[k.second].push_back({k.first, v});
  for (const auto& [k, v] : C.y->entries()) ycol[k.second].push_back({k.first, v});
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [g, n] = pairs[p];
    for (const auto& [t, v] : dcol[g]) put(E.d, p, t, n, v);
    for (const auto& [t, v] : ycol[g]) put(E.d, p, t, n + 1, v);
    put(*E.u, p, g, n + 1, 1);
  }
  E.normalize();
  return E;
}

GradedMap e_map(const GradedMap& phi, const ChainComplex& E1, const ChainComplex& E2, Flavor f) {
  (void)f;
  GradedMap out(E1.mod, E2.mod, phi.degree);
  for (const auto& [k, v] : phi.m.entries()) {
    const std::string& from = phi.src.name(k.second);
    const std::string& to = phi.tgt.name(k.first);
    // every exponent present on the source side
    const std::string prefix = from + "*u^";
    for (std::size_t i = 0; i < E1.size(); ++i) {
      const std::string& nm = E1.mod.name(i);
      if (nm.compare(0, prefix.size(), prefix) != 0) continue;
      const std::string exp = nm.substr(prefix.size());
      if (auto j = E2.mod.index(to + "*u^" + exp)) out.m.add(*j, i, v);
    }
  }
  return out;
}

namespace {

GradedMap by_exponent(const ChainComplex& A, const ChainComplex& B, int degree, int shift,
                      const std::function<bool(int)>& keep) {
  GradedMap out(A.mod, B.mod, degree);
  for (std::size_t i = 0; i < A.size(); ++i) {
    const std::string& nm = A.mod.name(i);
    const auto at = nm.rfind("*u^");
    const std::string base = nm.substr(0, at);
    const int n = std::stoi(nm.substr(at + 3));
    if (!keep(n)) continue;
    if (auto j = B.mod.index(ey_name(base, n + shift))) out.m.set(*j, i, 1);
  }
  return out;
}

}  // namespace

FundamentalSequences fundamental_sequences(const ChainComplex& C, const Window& w) {
  FundamentalSequences fs;
  fs.minus = e_y(C, Flavor::minus, w);
  fs.infinity = e_y(C, Flavor::infinity, w);
  fs.plus = e_y(C, Flavor::plus, w);
  fs.hat = e_y(C, Flavor::hat, Window(w.lo, w.hi + 2));
  fs.first = {"minus>inf>plus", fs.minus, fs.infinity, fs.plus,
              by_exponent(fs.minus, fs.infinity, 0, 0, [](int) { return true; }),
              by_exponent(fs.infinity, fs.plus, 0, 0, [](int n) { return n <= 0; })};
  fs.second = {"minus>u>minus>hat", fs.minus, fs.minus, fs.hat,
               by_exponent(fs.minus, fs.minus, -2, 1, [](int) { return true; }),
               by_exponent(fs.minus, fs.hat, 2, -1, [](int n) { return n == 1; })};
  fs.first_cert = certify_les(fs.first, w.lo, w.hi);
  fs.second_cert = certify_les(fs.second, w.lo, w.hi);
  return fs;
}

// ---- E1 page

ChainComplex e1_page(const ChainComplex& C, Flavor f, const Window& w) {
  if (!C.u) throw MissingUAction("E1 page needs a U-action");
  require_z_graded(C);
  const ExpRange r = exponents(f);
  auto quot = windowed_pairs(C.mod, r, w, 0);   // g⊗u^n at deg g − 2n
  auto rel = windowed_pairs(C.mod, r, w, -1);   // relation symbols at deg g − 2n − 1
  std::vector<Generator> gens;
  for (const auto& [i, n] : quot) gens.push_back({ey_name(C.mod.name(i), n), C.mod.degree(i) - 2 * n});
  for (const auto& [i, n] : rel) gens.push_back({ey_name(C.mod.name(i), n) + "~r", C.mod.degree(i) - 2 * n - 1});
  Completeness cq = windowed_completeness(C.mod, r, w, {0, 1});
  ChainComplex E(GradedModule(std::move(gens), 0, cq), C.ring);
  std::map<std::pair<std::size_t, int>, std::size_t> qpos, rpos;
  for (std::size_t p = 0; p < quot.size(); ++p) qpos[quot[p]] = p;
  for (std::size_t p = 0; p < rel.size(); ++p) rpos[rel[p]] = quot.size() + p;
  auto put = [&](const std::map<std::pair<std::size_t, int>, std::size_t>& pos, std::size_t col, std::size_t g, int n,
                 const Int& v) {
    auto it = pos.find({g, n});
    if (it != pos.end()) E.d.add(it->second, col, v);
  };
  std::vector<std::vector<std::pair<std::size_t, Int>>> dcol(C.size()), ucol(C.size());
  for (const auto& [k, v] : C.d.entries()) dcol[k.second].push_back({k.first, v});
  for (const auto& [k, v] : C.u->entries()) ucol[k.second].push_back({k.first, v});
  for (std::size_t p = 0; p < quot.size(); ++p) {
    const auto [g, n] = quot[p];
    for (const auto& [t, v] : dcol[g]) put(qpos, p, t, n, -v);  // d₁ = −∂
  }
  for (std::size_t p = 0; p < rel.size(); ++p) {
    const auto [g, n] = rel[p];
    const std::size_t col = quot.size() + p;
    for (const auto& [t, v] : ucol[g]) put(qpos, col, t, n, v);  // U(g)⊗u^n
    put(qpos, col, g, n + 1, 1);                                 // g⊗u^{n+1}
    for (const auto& [t, v] : dcol[g]) put(rpos, col, t, n, v);
  }
  E.normalize();
  return E;
}

// ---- shift comparison

ShiftReport compare_up_to_shift(const HomologyTable& left, const HomologyTable& right, int search) {
  ShiftReport rep;
  std::vector<int> agreeing;
  for (int s = -search; s <= search; ++s) {
    bool ok = true, seen = false;
    for (int j : left.safe) {
      if (!right.safe.count(j - s)) continue;
      const AbelianGroup a = left.at(j), b = right.at(j - s);
      if (!(a == b)) ok = false;
      if (!a.trivial()) seen = true;
    }
    if (!ok) continue;
    agreeing.push_back(s);
    if (seen) rep.admissible.push_back(s);
  }
  if (rep.admissible.empty()) {
    // nothing nonzero ever lands where both sides are safe
    if (agreeing.empty()) return rep;
    rep.vacuous = true;
    rep.admissible = agreeing;
  }
  int best = rep.admissible.front();
  for (int s : rep.admissible)
    if (std::abs(s) < std::abs(best) || (std::abs(s) == std::abs(best) && s > best)) best = s;
  rep.shift = rep.vacuous && std::count(agreeing.begin(), agreeing.end(), 0) ? 0 : best;
  for (int j : left.safe)
    if (right.safe.count(j - *rep.shift)) rep.per_degree.push_back({j, left.at(j), right.at(j - *rep.shift)});
  return rep;
}

KoszulAReport koszul_a(const ChainComplex& C, Flavor f, const Window& w) {
  require_valid(C);
  KoszulAReport rep;
  rep.flavor = f;
  const ChainComplex S = s_u(C);
  const ChainComplex L = e_y(S, f, w);
  const HomologyTable hl = homology(L, std::make_pair(w.lo, w.hi));
  const ChainComplex R = e1_page(C, f, Window(w.lo - 1, w.hi - 1));
  rep.e1 = compare_up_to_shift(hl, homology(R, std::make_pair(w.lo - 1, w.hi - 1)));
  if (f == Flavor::hat) rep.hat_su = compare_up_to_shift(hl, homology(S, std::make_pair(w.lo, w.hi)));
  return rep;
}

KoszulBReport koszul_b(const ChainComplex& C, const Window& w) {
  require_valid(C);
  if (!C.y) throw MissingYAction("koszul_b needs a Y-action");
  KoszulBReport rep;
  // The cycle map needs g⊗u for every g, and every class of C needs a safe
  // partner, so the window is widened to the degree span of C.
  const Window wide(std::min(w.lo, C.mod.min_degree() - 4), std::max(w.hi, C.mod.max_degree() + 1));
  const ChainComplex E = e_y(C, Flavor::minus, wide);
  const ChainComplex S = s_u(E);
  const HomologyTable hs = homology(S, std::make_pair(wide.lo, wide.hi + 1));
  const HomologyTable hc = homology(C, std::make_pair(C.mod.min_degree() - 1, C.mod.max_degree() + 1));
  rep.report = compare_up_to_shift(hs, hc);

  // z ↦ (Yz)⊗u⊗1 + z⊗u⊗y
  GradedMap phi(C.mod, S.mod, -1);
  bool complete = true;
  for (std::size_t i = 0; i < C.size(); ++i) {
    const std::string& g = C.mod.name(i);
    auto tgt = S.mod.index(su_name(ey_name(g, 1), true));
    if (!tgt) {
      complete = false;
      continue;
    }
    phi.m.add(*tgt, i, 1);
    for (const auto& [k, v] : C.y->entries())
      if (k.second == i) {
        auto t2 = S.mod.index(su_name(ey_name(C.mod.name(k.first), 1), false));
        if (t2) phi.m.add(*t2, i, v);
        else complete = false;
      }
  }
  if (!complete) return rep;
  rep.cycle_map_chain = is_chain_map(phi, C, S);
  rep.cycle_map_y = (phi.m * *C.y - *S.y * phi.m).reduced(C.ring).is_zero();
  std::set<int> degs;
  for (int j : default_degrees(C.mod))
    if (S.mod.safe(j - 1) && j - 1 >= wide.lo && j - 1 <= wide.hi) degs.insert(j);
  rep.cycle_map_iso = true;
  if (rep.cycle_map_chain) {
    InducedMap im = induced_on_homology(phi, C, S, degs);
    for (const auto& [j, dm] : im.by_degree)
      if (!dm.iso) rep.cycle_map_iso = false;
  } else {
    rep.cycle_map_iso = false;
  }
  return rep;
}

}  // namespace floer
