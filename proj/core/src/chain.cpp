#include "floer/chain.hpp"

#include <algorithm>
#include <climits>

namespace floer {

// ---- Completeness

Completeness Completeness::tabulate(int lo, int hi, const std::function<bool(int)>& f, bool below, bool above) {
  Completeness c;
  c.lo = lo;
  c.hi = hi;
  c.below = below;
  c.above = above;
  for (int k = lo; k <= hi; ++k) c.inside.push_back(f(k) ? 1 : 0);
  return c;
}

bool Completeness::at(int k) const {
  if (k < lo) return below;
  if (k > hi) return above;
  return inside[static_cast<std::size_t>(k - lo)] != 0;
}

bool Completeness::is_full() const {
  return below && above && std::all_of(inside.begin(), inside.end(), [](char x) { return x != 0; });
}

Completeness Completeness::meet(const Completeness& a, const Completeness& b) {
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  const bool ae = a.lo > a.hi, be = b.lo > b.hi;
  int lo = ae ? b.lo : (be ? a.lo : std::min(a.lo, b.lo));
  int hi = ae ? b.hi : (be ? a.hi : std::max(a.hi, b.hi));
  return tabulate(lo, hi, [&](int k) { return a.at(k) && b.at(k); }, a.below && b.below, a.above && b.above);
}

Completeness Completeness::shifted(int s) const {
  Completeness c = *this;
  c.lo += s;
  c.hi += s;
  return c;
}

// ---- GradedModule

GradedModule::GradedModule(std::vector<Generator> gens, int modulus, Completeness c)
    : gens_(std::move(gens)), modulus_(modulus), complete_(std::move(c)) {
  if (modulus_ < 0 || modulus_ % 2 != 0) throw ValidationError("modulus must be even and nonnegative");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    gens_[i].degree = norm(gens_[i].degree);
    if (!by_name_.emplace(gens_[i].name, i).second) throw ValidationError("duplicate generator name " + gens_[i].name);
    by_degree_[gens_[i].degree].push_back(i);
  }
}

int GradedModule::norm(int degree) const {
  if (modulus_ == 0) return degree;
  int r = degree % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::optional<std::size_t> GradedModule::index(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& GradedModule::at(int degree) const {
  static const std::vector<std::size_t> none;
  auto it = by_degree_.find(norm(degree));
  return it == by_degree_.end() ? none : it->second;
}

std::vector<int> GradedModule::degrees() const {
  std::vector<int> out;
  for (const auto& [d, v] : by_degree_) out.push_back(d);
  return out;
}

int GradedModule::min_degree() const { return by_degree_.empty() ? 0 : by_degree_.begin()->first; }
int GradedModule::max_degree() const { return by_degree_.empty() ? 0 : by_degree_.rbegin()->first; }

GradedModule GradedModule::shifted(int s) const {
  std::vector<Generator> g = gens_;
  for (auto& x : g) x.degree += s;
  return GradedModule(std::move(g), modulus_, complete_.shifted(s));
}

GradedModule GradedModule::renamed(const std::string& prefix) const {
  std::vector<Generator> g = gens_;
  for (auto& x : g) x.name = prefix + x.name;
  return GradedModule(std::move(g), modulus_, complete_);
}

GradedModule GradedModule::direct_sum(const GradedModule& a, const GradedModule& b, const std::string& pa,
                                      const std::string& pb) {
  if (a.modulus_ != b.modulus_) throw DimensionMismatch("direct sum of modules with different moduli");
  std::vector<Generator> g;
  for (const auto& x : a.gens_) g.push_back({pa + x.name, x.degree});
  for (const auto& x : b.gens_) g.push_back({pb + x.name, x.degree});
  return GradedModule(std::move(g), a.modulus_, Completeness::meet(a.complete_, b.complete_));
}

// ---- GradedMap

GradedMap::GradedMap(GradedModule s, GradedModule t, int deg)
    : src(std::move(s)), tgt(std::move(t)), degree(deg), m(tgt.size(), src.size()) {}

GradedMap::GradedMap(GradedModule s, GradedModule t, int deg, IntMatrix mat)
    : src(std::move(s)), tgt(std::move(t)), degree(deg), m(std::move(mat)) {
  if (m.rows() != tgt.size() || m.cols() != src.size()) throw DimensionMismatch("map matrix shape");
}

GradedMap GradedMap::identity(const GradedModule& M) { return GradedMap(M, M, 0, IntMatrix::identity(M.size())); }

GradedMap GradedMap::zero(const GradedModule& s, const GradedModule& t, int deg) { return GradedMap(s, t, deg); }

void GradedMap::add(const std::string& from, const std::string& to, const Int& c) {
  auto i = src.index(from);
  auto j = tgt.index(to);
  if (!i || !j) throw ValidationError("unknown generator in map entry " + from + "->" + to);
  m.add(*j, *i, c);
}

std::optional<std::string> GradedMap::inhomogeneous_entry() const {
  for (const auto& [k, v] : m.entries())
    if (tgt.norm(src.degree(k.second) + degree) != tgt.degree(k.first))
      return src.name(k.second) + "->" + tgt.name(k.first);
  return std::nullopt;
}

IntMatrix GradedMap::block(int src_degree) const {
  return m.submatrix(tgt.at(src_degree + degree), src.at(src_degree));
}

GradedMap GradedMap::operator*(const GradedMap& o) const {
  if (o.tgt.size() != src.size()) throw DimensionMismatch("composition of incompatible maps");
  return GradedMap(o.src, tgt, degree + o.degree, m * o.m);
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  if (degree != o.degree) throw DimensionMismatch("sum of maps of different degrees");
  return GradedMap(src, tgt, degree, m + o.m);
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + (-o); }
GradedMap GradedMap::operator-() const { return GradedMap(src, tgt, degree, -m); }
GradedMap GradedMap::scaled(const Int& s) const { return GradedMap(src, tgt, degree, m.scaled(s)); }

bool GradedMap::equals(const GradedMap& o, const Ring& R) const {
  return degree == o.degree && (m - o.m).reduced(R).is_zero();
}

// ---- ChainComplex

ChainComplex::ChainComplex(GradedModule m, Ring r) : mod(std::move(m)), d(mod.size(), mod.size()), ring(r) {}

GradedMap ChainComplex::umap() const {
  if (!u) throw MissingUAction("complex carries no U-action");
  return GradedMap(mod, mod, -2, *u);
}

GradedMap ChainComplex::ymap() const {
  if (!y) throw MissingYAction("complex carries no Y-action");
  return GradedMap(mod, mod, 1, *y);
}

namespace {
void add_entry(IntMatrix& M, const GradedModule& mod, const std::string& from, const std::string& to, const Int& c) {
  auto i = mod.index(from);
  auto j = mod.index(to);
  if (!i) throw ValidationError("unknown generator " + from);
  if (!j) throw ValidationError("unknown generator " + to);
  M.add(*j, *i, c);
}
}  // namespace

void ChainComplex::add_d(const std::string& from, const std::string& to, const Int& c) {
  add_entry(d, mod, from, to, c);
}
void ChainComplex::add_u(const std::string& from, const std::string& to, const Int& c) {
  if (!u) u = IntMatrix(size(), size());
  add_entry(*u, mod, from, to, c);
}
void ChainComplex::add_y(const std::string& from, const std::string& to, const Int& c) {
  if (!y) y = IntMatrix(size(), size());
  add_entry(*y, mod, from, to, c);
}

void ChainComplex::normalize() {
  d = d.reduced(ring);
  if (u) u = u->reduced(ring);
  if (y) y = y->reduced(ring);
}

// ---- validation

bool ValidationReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.ok; });
}

bool ValidationReport::passed(const std::string& law) const {
  for (const auto& l : laws)
    if (l.law == law) return l.ok;
  return true;
}

std::vector<std::string> ValidationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& l : laws)
    if (!l.ok) out.push_back(l.law);
  return out;
}

namespace {
LawResult zero_law(const std::string& name, const IntMatrix& M, const GradedModule& mod, const Ring& R) {
  LawResult r{name, true, ""};
  IntMatrix z = M.reduced(R);
  if (!z.is_zero()) {
    const auto& k = z.entries().begin()->first;
    r.ok = false;
    r.witness = mod.name(k.second) + "->" + mod.name(k.first);
  }
  return r;
}
}  // namespace

ValidationReport validate(const ChainComplex& C) {
  ValidationReport rep;
  LawResult deg{"degree", true, ""};
  auto check = [&](const IntMatrix& M, int k, const char* what) {
    if (!deg.ok) return;
    if (auto w = GradedMap(C.mod, C.mod, k, M).inhomogeneous_entry()) {
      deg.ok = false;
      deg.witness = std::string(what) + " " + *w;
    }
  };
  check(C.d, -1, "d");
  if (C.u) check(*C.u, -2, "U");
  if (C.y) check(*C.y, 1, "Y");
  rep.laws.push_back(deg);
  rep.laws.push_back(zero_law("d2", C.d * C.d, C.mod, C.ring));
  if (C.u) rep.laws.push_back(zero_law("dU", C.d * *C.u - *C.u * C.d, C.mod, C.ring));
  if (C.y) {
    rep.laws.push_back(zero_law("dY", C.d * *C.y + *C.y * C.d, C.mod, C.ring));
    rep.laws.push_back(zero_law("Y2", *C.y * *C.y, C.mod, C.ring));
  }
  return rep;
}

void require_valid(const ChainComplex& C) {
  ValidationReport r = validate(C);
  for (const auto& l : r.laws)
    if (!l.ok) throw ValidationError(l.law + " fails at " + l.witness);
}

// ---- constructions

bool is_chain_map(const GradedMap& f, const ChainComplex& A, const ChainComplex& B) {
  if (f.src.size() != A.size() || f.tgt.size() != B.size()) throw DimensionMismatch("chain map shape");
  const Int sign = (f.degree % 2 == 0) ? 1 : -1;
  return (f.m * A.d - (B.d * f.m).scaled(sign)).reduced(A.ring).is_zero();
}

ChainComplex direct_sum(const ChainComplex& A, const ChainComplex& B, const std::string& pa, const std::string& pb) {
  if (!(A.ring == B.ring)) throw DimensionMismatch("direct sum over different rings");
  ChainComplex S(GradedModule::direct_sum(A.mod, B.mod, pa, pb), A.ring);
  const std::size_t n = A.size();
  auto embed = [&](const IntMatrix& a, const IntMatrix& b) {
    IntMatrix M(S.size(), S.size());
    for (const auto& [k, v] : a.entries()) M.set(k.first, k.second, v);
    for (const auto& [k, v] : b.entries()) M.set(k.first + n, k.second + n, v);
    return M;
  };
  S.d = embed(A.d, B.d);
  if (A.u || B.u)
    S.u = embed(A.u.value_or(IntMatrix(A.size(), A.size())), B.u.value_or(IntMatrix(B.size(), B.size())));
  if (A.y || B.y)
    S.y = embed(A.y.value_or(IntMatrix(A.size(), A.size())), B.y.value_or(IntMatrix(B.size(), B.size())));
  return S;
}

ChainComplex cone(const GradedMap& f, const ChainComplex& A, const ChainComplex& B, const std::string& pa,
                  const std::string& pb) {
  if (f.degree != -1) throw NotAChainMap("cone expects a map of degree -1");
  if (!is_chain_map(f, A, B)) throw NotAChainMap("cone: f∂ + ∂f != 0");
  ChainComplex E(GradedModule::direct_sum(A.mod, B.mod, pa, pb), A.ring);
  const std::size_t n = A.size();
  for (const auto& [k, v] : A.d.entries()) E.d.set(k.first, k.second, v);
  for (const auto& [k, v] : B.d.entries()) E.d.set(k.first + n, k.second + n, v);
  for (const auto& [k, v] : f.m.entries()) E.d.set(k.first + n, k.second, v);
  return E;
}

namespace {
Completeness tensor_completeness(const GradedModule& a, const GradedModule& b) {
  const Completeness& ca = a.completeness();
  const Completeness& cb = b.completeness();
  if (ca.is_full() && cb.is_full()) return Completeness::full();
  if (a.size() == 0 || b.size() == 0) return Completeness::full();
  if (!ca.is_full() && !cb.is_full()) return Completeness::tabulate(0, -1, [](int) { return false; }, false, false);
  const GradedModule& trunc = ca.is_full() ? b : a;
  const GradedModule& fin = ca.is_full() ? a : b;
  const Completeness& ct = trunc.completeness();
  std::vector<int> fd = fin.degrees();
  int lo = (ct.lo <= ct.hi ? ct.lo : 0) + fd.front();
  int hi = (ct.lo <= ct.hi ? ct.hi : 0) + fd.back();
  return Completeness::tabulate(
      lo - 1, hi + 1,
      [&](int k) {
        for (int e : fd)
          if (!ct.at(k - e)) return false;
        return true;
      },
      ct.below, ct.above);
}
}  // namespace

TensorProduct tensor(const ChainComplex& C1, const ChainComplex& C2) {
  if (C1.mod.modulus() != 0 || C2.mod.modulus() != 0) throw ModulusUnsupported("tensor needs Z-graded inputs");
  if (!(C1.ring == C2.ring)) throw DimensionMismatch("tensor over different rings");
  std::vector<Generator> g;
  const std::size_t n1 = C1.size(), n2 = C2.size();
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      g.push_back({C1.mod.name(a) + "#" + C2.mod.name(b), C1.mod.degree(a) + C2.mod.degree(b)});
  TensorProduct T;
  T.complex = ChainComplex(GradedModule(std::move(g), 0, tensor_completeness(C1.mod, C2.mod)), C1.ring);
  auto idx = [n2](std::size_t a, std::size_t b) { return a * n2 + b; };
  auto sgn = [&](std::size_t a) { return C1.mod.degree(a) % 2 == 0 ? Int(1) : Int(-1); };
  auto left = [&](const IntMatrix& M) {
    IntMatrix out(n1 * n2, n1 * n2);
    for (const auto& [k, v] : M.entries())
      for (std::size_t b = 0; b < n2; ++b) out.set(idx(k.first, b), idx(k.second, b), v);
    return out;
  };
  auto right = [&](const IntMatrix& M, bool signed_) {
    IntMatrix out(n1 * n2, n1 * n2);
    for (std::size_t a = 0; a < n1; ++a)
      for (const auto& [k, v] : M.entries()) out.set(idx(a, k.first), idx(a, k.second), signed_ ? Int(v * sgn(a)) : v);
    return out;
  };
  T.complex.d = left(C1.d) + right(C2.d, true);
  if (C1.u) T.u_left = left(*C1.u);
  if (C2.u) T.u_right = right(*C2.u, false);
  if (C1.y) T.y_left = left(*C1.y);
  if (C2.y) T.y_right = right(*C2.y, true);
  return T;
}

bool verify_homotopy(const GradedMap& f, const GradedMap& g, const GradedMap& K, const ChainComplex& A,
                     const ChainComplex& B) {
  if (f.degree != g.degree || K.degree != f.degree + 1) throw DimensionMismatch("homotopy degrees");
  if (f.m.rows() != B.size() || f.m.cols() != A.size() || g.m.rows() != B.size() || g.m.cols() != A.size() ||
      K.m.rows() != B.size() || K.m.cols() != A.size())
    throw DimensionMismatch("homotopy shapes");
  const Int sign = f.degree % 2 == 0 ? 1 : -1;
  return (f.m - g.m - B.d * K.m - (K.m * A.d).scaled(sign)).reduced(A.ring).is_zero();
}

}  // namespace floer
