#include "floer/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace floer {

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform: empty range");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(g_() % span);
}

int Rng::nonzero(int bound) {
  const int v = uniform(1, std::max(bound, 1));
  return coin() ? v : -v;
}

namespace {

std::string gname(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

bool bounded(const IntMatrix& M, int bound) {
  for (const auto& [k, v] : M.entries())
    if (abs(v) > bound) return false;
  return true;
}

Int coefficient(Rng& r, const RandomParams& p) {
  Int c = r.nonzero(p.max_entry);
  p.ring.reduce(c);
  return c == 0 ? Int(1) : c;
}

// Random degree-preserving elementary moves g_j ↦ g_j ± g_i, keeping every
// coefficient within the bound. Returns the accumulated change of basis.
IntMatrix conjugate(ChainComplex& C, Rng& r, const RandomParams& p, int rounds) {
  const std::size_t n = C.size();
  IntMatrix G = IntMatrix::identity(n);
  if (n < 2) return G;
  for (int t = 0; t < rounds; ++t) {
    const auto i = static_cast<std::size_t>(r.uniform(0, static_cast<int>(n) - 1));
    const auto j = static_cast<std::size_t>(r.uniform(0, static_cast<int>(n) - 1));
    if (i == j || C.mod.degree(i) != C.mod.degree(j)) continue;
    const int c = r.coin() ? 1 : -1;
    IntMatrix E = IntMatrix::identity(n), Ei = IntMatrix::identity(n);
    E.set(i, j, c);
    Ei.set(i, j, -c);
    auto move = [&](const IntMatrix& M) { return (E * M * Ei).reduced(C.ring); };
    IntMatrix d = move(C.d);
    std::optional<IntMatrix> u, y;
    if (C.u) u = move(*C.u);
    if (C.y) y = move(*C.y);
    if (!bounded(d, p.max_entry) || (u && !bounded(*u, p.max_entry)) || (y && !bounded(*y, p.max_entry))) continue;
    C.d = d;
    C.u = u;
    C.y = y;
    G = (E * G).reduced(C.ring);
  }
  return G;
}

// Degree k for a piece occupying degrees k − span .. k.
int top_degree(Rng& r, const RandomParams& p, int span) {
  return r.uniform(p.min_degree + span, p.max_degree);
}

// A sub-band of the degree range, so pieces share degrees and the
// change of basis has something to mix.
RandomParams narrowed(Rng& r, const RandomParams& p, int width) {
  if (p.max_degree - p.min_degree <= width) return p;
  RandomParams q = p;
  q.min_degree = r.uniform(p.min_degree, p.max_degree - width);
  q.max_degree = q.min_degree + width;
  return q;
}

// Towers over a single generator or a pair, with U = u.
ChainComplex towers(Rng& r, const RandomParams& wide, int max_rank) {
  const RandomParams p = narrowed(r, wide, 6);
  std::vector<Generator> gens;
  std::vector<std::tuple<std::size_t, std::size_t, Int>> d, u;
  const int want = r.uniform(1, std::max(1, max_rank));
  while (static_cast<int>(gens.size()) < want) {
    const int room = want - static_cast<int>(gens.size());
    const bool pair = room >= 2 && r.coin();
    const int width = pair ? 2 : 1;
    const int m = r.uniform(1, std::min(3, room / width));
    const int span = 2 * (m - 1) + (pair ? 1 : 0);
    if (p.max_degree - p.min_degree < span) continue;
    const int k = top_degree(r, p, span);
    const Int c = coefficient(r, p);
    std::size_t prev = 0;
    for (int i = 0; i < m; ++i) {
      const std::size_t a = gens.size();
      gens.push_back({gname("g", a), k - 2 * i});
      if (pair) {
        gens.push_back({gname("g", a + 1), k - 2 * i - 1});
        d.push_back({a, a + 1, c});
      }
      if (i > 0) {
        u.push_back({prev, a, 1});
        if (pair) u.push_back({prev + 1, a + 1, 1});
      }
      prev = a;
    }
  }
  ChainComplex C(GradedModule(std::move(gens)), p.ring);
  C.u = IntMatrix(C.size(), C.size());
  for (const auto& [s, t, v] : d) C.d.set(t, s, v);
  for (const auto& [s, t, v] : u) C.u->set(t, s, v);
  C.normalize();
  return C;
}

IntMatrix random_sparse(Rng& r, const GradedModule& S, const GradedModule& T, int degree, int count) {
  IntMatrix M(T.size(), S.size());
  for (int t = 0; t < count; ++t) {
    if (S.size() == 0) break;
    const auto s = static_cast<std::size_t>(r.uniform(0, static_cast<int>(S.size()) - 1));
    const auto& row = T.at(S.degree(s) + degree);
    if (row.empty()) continue;
    M.add(row[static_cast<std::size_t>(r.uniform(0, static_cast<int>(row.size()) - 1))], s, r.coin() ? 1 : -1);
  }
  return M;
}

IntMatrix uof(const ChainComplex& C) { return C.u ? *C.u : IntMatrix(C.size(), C.size()); }

void require_pmorphism(const PMorphism& P, const ChainComplex& a, const ChainComplex& b, const char* what) {
  if (!is_pmorphism(P, a, b)) throw std::logic_error(std::string("random p-morphism is not one: ") + what);
}

}  // namespace

ChainComplex random_complex(Rng& r, const RandomParams& wide) {
  const RandomParams p = narrowed(r, wide, 3);
  std::vector<Generator> gens;
  std::vector<std::tuple<std::size_t, std::size_t, Int>> d;
  const int want = r.uniform(1, p.max_rank);
  while (static_cast<int>(gens.size()) < want) {
    const std::size_t a = gens.size();
    if (want - static_cast<int>(a) >= 2 && r.coin() && p.max_degree > p.min_degree) {
      const int k = top_degree(r, p, 1);
      gens.push_back({gname("g", a), k});
      gens.push_back({gname("g", a + 1), k - 1});
      d.push_back({a, a + 1, coefficient(r, p)});
    } else {
      gens.push_back({gname("g", a), r.uniform(p.min_degree, p.max_degree)});
    }
  }
  ChainComplex C(GradedModule(std::move(gens)), p.ring);
  for (const auto& [s, t, v] : d) C.d.set(t, s, v);
  C.normalize();
  conjugate(C, r, p, 3 * static_cast<int>(C.size()));
  return C;
}

ChainComplex random_u_complex(Rng& r, const RandomParams& p) {
  ChainComplex C = towers(r, p, p.max_rank);
  conjugate(C, r, p, 3 * static_cast<int>(C.size()));
  return C;
}

ChainComplex random_y_complex(Rng& r, const RandomParams& p) {
  RandomParams half = p;
  half.max_rank = std::max(1, p.max_rank / 2);
  half.max_degree = p.max_degree - 1;
  ChainComplex su = s_u(random_u_complex(r, half));
  const int room = p.max_rank - static_cast<int>(su.size());
  ChainComplex C = su;
  if (room > 0 && r.coin()) {
    RandomParams rest = p;
    rest.max_rank = room;
    ChainComplex flat = random_complex(r, rest);
    flat.y = IntMatrix(flat.size(), flat.size());
    C = direct_sum(su, flat, "", "f:");
  }
  C.u.reset();
  conjugate(C, r, p, 3 * static_cast<int>(C.size()));
  return C;
}

FilteredComplex random_filtered(Rng& r, const RandomParams& wide) {
  const RandomParams p = narrowed(r, wide, 4);
  using Poly = std::map<int, Int>;
  std::vector<Generator> gens;
  std::vector<std::tuple<std::size_t, std::size_t, int, Int>> pieces;
  const int want = r.uniform(1, p.max_rank);
  while (static_cast<int>(gens.size()) < want) {
    const std::size_t a = gens.size();
    if (want - static_cast<int>(a) >= 2 && r.coin() && p.max_degree > p.min_degree) {
      const int e = r.uniform(0, 1);
      // deg b = deg a − 1 + 2e
      const int ka = e == 0 ? top_degree(r, p, 1) : r.uniform(p.min_degree, p.max_degree - 1);
      gens.push_back({gname("c", a), ka});
      gens.push_back({gname("c", a + 1), ka - 1 + 2 * e});
      pieces.push_back({a, a + 1, e, coefficient(r, p)});
    } else {
      gens.push_back({gname("c", a), r.uniform(p.min_degree, p.max_degree)});
    }
  }
  const std::size_t n = gens.size();
  // D[dst][src]
  std::vector<std::vector<Poly>> D(n, std::vector<Poly>(n));
  for (const auto& [s, t, e, c] : pieces) D[t][s][e] = c;
  auto clean = [&](Poly& q) {
    for (auto it = q.begin(); it != q.end();) {
      p.ring.reduce(it->second);
      it = it->second == 0 ? q.erase(it) : std::next(it);
    }
  };
  for (int t = 0; t < 3 * static_cast<int>(n); ++t) {
    const auto i = static_cast<std::size_t>(r.uniform(0, static_cast<int>(n) - 1));
    const auto j = static_cast<std::size_t>(r.uniform(0, static_cast<int>(n) - 1));
    const int gap = gens[i].degree - gens[j].degree;
    if (i == j || gap < 0 || gap % 2 != 0 || gap > 2) continue;
    const int e = gap / 2, c = r.coin() ? 1 : -1;
    // E = 1 + c·U^e·E_ij; D ↦ E D E⁻¹
    auto next = D;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [x, v] : D[j][k]) next[i][k][x + e] += c * v;
    auto mid = next;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [x, v] : mid[k][i]) next[k][j][x + e] -= c * v;
    bool ok = true;
    for (auto& row : next)
      for (auto& q : row) {
        clean(q);
        for (const auto& [x, v] : q) ok = ok && abs(v) <= p.max_entry;
      }
    if (ok) D = std::move(next);
  }
  FilteredComplex F(GradedModule(std::move(gens)), p.ring);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      if (!D[t][s].empty()) F.d[{s, t}] = D[t][s];
  return F;
}

PStep random_pmorphism(Rng& r, const ChainComplex& c, const RandomParams& p) {
  const std::size_t n = c.size();
  const IntMatrix uc = uof(c);
  PStep out;
  out.target = c;
  auto make = [&](const ChainComplex& tgt, int deg, IntMatrix phi, IntMatrix k) {
    out.target = tgt;
    out.map.phi = GradedMap(c.mod, tgt.mod, deg, std::move(phi));
    out.map.k = GradedMap(c.mod, tgt.mod, deg - 1, std::move(k));
  };
  switch (r.uniform(0, 5)) {
    case 0:
      make(c, 0, IntMatrix::identity(n), IntMatrix(n, n));
      break;
    case 1: {
      ChainComplex t = c;
      IntMatrix G = conjugate(t, r, p, 2 * static_cast<int>(n));
      make(t, 0, G, IntMatrix(n, n));
      break;
    }
    case 2: {
      RandomParams small = p;
      small.max_rank = 2;
      ChainComplex t = direct_sum(c, towers(r, small, 2), "", "x" + std::to_string(n) + ":");
      IntMatrix inc(t.size(), n);
      for (std::size_t i = 0; i < n; ++i) inc.set(i, i, 1);
      make(t, 0, inc, IntMatrix(t.size(), n));
      break;
    }
    case 3:
      make(c, -2, uc, IntMatrix(n, n));
      break;
    case 4:
      make(c, -1, c.d, IntMatrix(n, n));
      break;
    default: {
      const IntMatrix h = random_sparse(r, c.mod, c.mod, 1, 2);
      const IntMatrix phi = IntMatrix::identity(n).scaled(r.uniform(-2, 2)) + c.d * h + h * c.d;
      make(c, 0, phi.reduced(c.ring), (uc * h - h * uc).reduced(c.ring));
      break;
    }
  }
  if (r.coin()) {
    // U₂ ↦ U₂ + ∂H + H∂ with K ↦ K + HΦ
    ChainComplex& t = out.target;
    const IntMatrix H = random_sparse(r, t.mod, t.mod, -1, 2);
    t.u = (uof(t) + t.d * H + H * t.d).reduced(t.ring);
    out.map.phi.tgt = t.mod;
    out.map.k.tgt = t.mod;
    out.map.k.m = (out.map.k.m + H * out.map.phi.m).reduced(t.ring);
  }
  require_pmorphism(out.map, c, out.target, "step");
  return out;
}

Composable random_composable(Rng& r, const RandomParams& p) {
  RandomParams small = p;
  small.max_rank = std::min(p.max_rank, 4);
  Composable out;
  ChainComplex a0 = random_u_complex(r, small);
  PStep first;
  if (r.coin()) {
    small.max_rank = 2;
    ChainComplex a = direct_sum(a0, towers(r, small, 2), "", "z:");
    IntMatrix proj(a0.size(), a.size());
    for (std::size_t i = 0; i < a0.size(); ++i) proj.set(i, i, 1);
    out.a = a;
    first.target = a0;
    first.map.phi = GradedMap(a.mod, a0.mod, 0, proj);
    first.map.k = GradedMap(a.mod, a0.mod, -1);
  } else {
    out.a = a0;
    first = random_pmorphism(r, a0, p);
  }
  if (r.coin()) {
    // U₁ ↦ U₁ + ∂H + H∂ with K ↦ K − (−1)^{|Φ|} ΦH
    const IntMatrix H = random_sparse(r, out.a.mod, out.a.mod, -1, 2);
    out.a.u = (uof(out.a) + out.a.d * H + H * out.a.d).reduced(out.a.ring);
    const Int s = first.map.phi.degree % 2 == 0 ? 1 : -1;
    first.map.k.m = (first.map.k.m - (first.map.phi.m * H).scaled(s)).reduced(out.a.ring);
  }
  out.b = first.target;
  out.f = first.map;
  require_pmorphism(out.f, out.a, out.b, "first");
  PStep second = random_pmorphism(r, out.b, p);
  out.c = second.target;
  out.g = second.map;

  const std::size_t n = out.a.size();
  const IntMatrix ua = uof(out.a);
  const IntMatrix h = random_sparse(r, out.a.mod, out.a.mod, 1, 2);
  PMorphism e{GradedMap(out.a.mod, out.a.mod, 0,
                        (IntMatrix::identity(n).scaled(r.uniform(-2, 2)) + out.a.d * h + h * out.a.d).reduced(
                            out.a.ring)),
              GradedMap(out.a.mod, out.a.mod, -1, (ua * h - h * ua).reduced(out.a.ring))};
  require_pmorphism(e, out.a, out.a, "endo");
  out.f2 = compose(out.f, e);
  require_pmorphism(out.f2, out.a, out.b, "second");
  return out;
}

BalancedComponents random_decoupled(Rng& r, const RandomParams& p) {
  RandomParams small = p;
  small.max_rank = std::min(p.max_rank, 3);
  ChainComplex o = random_u_complex(r, small);
  small.max_rank = std::min(p.max_rank, 5);
  ChainComplex bar = random_u_complex(r, small);
  const int t = r.uniform(bar.mod.min_degree(), bar.mod.max_degree() + 1);
  std::vector<Generator> og, sg, ug;
  for (std::size_t i = 0; i < o.size(); ++i) og.push_back({"o" + std::to_string(i), o.mod.degree(i)});
  std::vector<std::pair<char, std::size_t>> where(bar.size());
  for (std::size_t i = 0; i < bar.size(); ++i) {
    const int k = bar.mod.degree(i);
    if (k >= t) {
      where[i] = {'s', sg.size()};
      sg.push_back({"s" + std::to_string(i), k});
    } else {
      where[i] = {'u', ug.size()};
      ug.push_back({"u" + std::to_string(i), k + 1});
    }
  }
  BalancedComponents B =
      BalancedComponents::zero(GradedModule(og), GradedModule(sg), GradedModule(ug), p.ring);
  B.d_oo = o.d;
  B.u_oo = *o.u;
  auto split = [&](const IntMatrix& M, IntMatrix& ss, IntMatrix& uu, IntMatrix& su, IntMatrix& us) {
    for (const auto& [k, v] : M.entries()) {
      const auto [tp, ti] = where[k.first];
      const auto [sp, si] = where[k.second];
      IntMatrix& X = sp == 's' ? (tp == 's' ? ss : su) : (tp == 's' ? us : uu);
      X.set(ti, si, v);
    }
  };
  split(bar.d, B.db_ss, B.db_uu, B.db_su, B.db_us);
  split(*bar.u, B.ub_ss, B.ub_uu, B.ub_su, B.ub_us);
  return B;
}

}  // namespace floer
