#include "floer/textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace floer {

namespace {

struct Line {
  int no = 0;
  std::vector<std::string> tok;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos && (h == 0 || std::isspace(static_cast<unsigned char>(raw[h - 1]))))
      raw.erase(h);
    std::istringstream ls(raw);
    Line l{no, {}};
    for (std::string t; ls >> t;) l.tok.push_back(t);
    if (!l.tok.empty()) out.push_back(std::move(l));
  }
  return out;
}

int to_int(const Line& l, const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(l.no, "expected an integer, got '" + s + "'");
}

Int to_big(const Line& l, const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError(l.no, "expected an integer, got '" + s + "'");
  return v;
}

void arity(const Line& l, std::size_t n) {
  if (l.tok.size() != n) throw ParseError(l.no, "'" + l.tok[0] + "' takes " + std::to_string(n - 1) + " fields");
}

Ring to_ring(const Line& l) {
  arity(l, 2);
  const std::string& s = l.tok[1];
  if (s == "Z") return Ring::Z();
  if (s.size() > 1 && s[0] == 'F') {
    const int p = to_int(l, s.substr(1));
    bool prime = p >= 2;
    for (int q = 2; prime && q * q <= p; ++q) prime = p % q != 0;
    if (prime) return Ring::F(static_cast<unsigned long>(p));
  }
  throw ParseError(l.no, "ring must be Z or F<prime>");
}

std::size_t lookup(const Line& l, const GradedModule& M, const std::string& name) {
  auto i = M.index(name);
  if (!i) throw ParseError(l.no, "unknown generator '" + name + "'");
  return *i;
}

GradedModule make_module(const Line& at, std::vector<Generator> g, int modulus) {
  std::vector<std::string> names;
  for (const auto& x : g) names.push_back(x.name);
  std::sort(names.begin(), names.end());
  if (auto d = std::adjacent_find(names.begin(), names.end()); d != names.end())
    throw ParseError(at.no, "duplicate generator '" + *d + "'");
  return GradedModule(std::move(g), modulus);
}

using Iter = std::vector<Line>::const_iterator;

struct Triple {
  Line line;
  std::string a, b;
  Int c;
  int e = 0;
};

NamedObject parse_complex(Iter& it, Iter end) {
  const Line& head = *it;
  if (head.tok.size() < 2 || head.tok.size() > 3 || (head.tok.size() == 3 && head.tok[2] != "filtered"))
    throw ParseError(head.no, "expected 'complex <name> [filtered]'");
  const std::string name = head.tok[1];
  bool filtered = head.tok.size() == 3;
  Ring ring = Ring::Z();
  int modulus = 0;
  std::vector<Generator> gens;
  std::vector<Triple> d, u, y, du;
  bool has_u = false, has_y = false;
  ++it;
  for (; it != end; ++it) {
    const Line& l = *it;
    const std::string& k = l.tok[0];
    if (k == "end") break;
    if (k == "ring") {
      ring = to_ring(l);
    } else if (k == "mod") {
      arity(l, 2);
      modulus = to_int(l, l.tok[1]);
      if (modulus < 0) throw ParseError(l.no, "mod must be ≥ 0");
    } else if (k == "gen") {
      arity(l, 3);
      gens.push_back({l.tok[1], to_int(l, l.tok[2])});
    } else if ((k == "u" || k == "y") && l.tok.size() == 1) {
      (k == "u" ? has_u : has_y) = true;  // action present, possibly zero
    } else if (k == "d" || k == "u" || k == "y") {
      arity(l, 4);
      (k == "d" ? d : k == "u" ? u : y).push_back({l, l.tok[1], l.tok[2], to_big(l, l.tok[3])});
    } else if (k == "dU") {
      arity(l, 5);
      du.push_back({l, l.tok[1], l.tok[2], to_big(l, l.tok[3]), to_int(l, l.tok[4])});
    } else {
      throw ParseError(l.no, "unexpected '" + k + "' in complex");
    }
  }
  if (it == end) throw ParseError(head.no, "complex '" + name + "' has no 'end'");
  if (!filtered && !du.empty()) throw ParseError(du.front().line.no, "'dU' needs 'complex <name> filtered'");
  GradedModule M = make_module(head, std::move(gens), modulus);

  if (filtered) {
    if (!d.empty() || !u.empty() || !y.empty())
      throw ParseError((d.empty() ? u.empty() ? y : u : d).front().line.no, "filtered complexes take dU entries only");
    if (modulus != 0) throw ParseError(head.no, "filtered complexes are Z-graded");
    FilteredComplex F(M, ring);
    for (const auto& t : du) {
      F.d[{lookup(t.line, M, t.a), lookup(t.line, M, t.b)}][t.e] += t.c;
    }
    F.normalize();
    for (const auto& law : F.validate().laws)
      if (!law.ok) throw ValidationError(law.law + " fails at dU " + law.witness);
    return {name, F};
  }

  ChainComplex C(M, ring);
  for (const auto& t : d) C.d.add(lookup(t.line, M, t.b), lookup(t.line, M, t.a), t.c);
  if (has_u || !u.empty()) {
    C.u = IntMatrix(M.size(), M.size());
    for (const auto& t : u) C.u->add(lookup(t.line, M, t.b), lookup(t.line, M, t.a), t.c);
  }
  if (has_y || !y.empty()) {
    C.y = IntMatrix(M.size(), M.size());
    for (const auto& t : y) C.y->add(lookup(t.line, M, t.b), lookup(t.line, M, t.a), t.c);
  }
  C.normalize();
  for (const auto& law : validate(C).laws)
    if (!law.ok) throw ValidationError(law.law + " fails at " + law.witness);
  return {name, C};
}

// ---- balanced components

struct BlockInfo {
  const char* key;
  IntMatrix BalancedComponents::*field;
  char from, to;
  int base;
  bool reducible;
};

const BlockInfo kBlocks[] = {
    {"d:o->o", &BalancedComponents::d_oo, 'o', 'o', -1, false},
    {"d:o->s", &BalancedComponents::d_os, 'o', 's', -1, false},
    {"d:u->o", &BalancedComponents::d_uo, 'u', 'o', -1, false},
    {"d:u->s", &BalancedComponents::d_us, 'u', 's', -1, false},
    {"db:s->s", &BalancedComponents::db_ss, 's', 's', -1, true},
    {"db:u->u", &BalancedComponents::db_uu, 'u', 'u', -1, true},
    {"db:s->u", &BalancedComponents::db_su, 's', 'u', -1, true},
    {"db:u->s", &BalancedComponents::db_us, 'u', 's', -1, true},
    {"u:o->o", &BalancedComponents::u_oo, 'o', 'o', -2, false},
    {"u:u->o", &BalancedComponents::u_uo, 'u', 'o', -2, false},
    {"u:o->s", &BalancedComponents::u_os, 'o', 's', -2, false},
    {"u:u->s", &BalancedComponents::u_us, 'u', 's', -2, false},
    {"ub:s->u", &BalancedComponents::ub_su, 's', 'u', -2, true},
    {"ub:u->u", &BalancedComponents::ub_uu, 'u', 'u', -2, true},
    {"ub:s->s", &BalancedComponents::ub_ss, 's', 's', -2, true},
    {"ub:u->s", &BalancedComponents::ub_us, 'u', 's', -2, true},
};

const GradedModule& part(const BalancedComponents& B, char p) { return p == 'o' ? B.co : p == 's' ? B.cs : B.cu; }

// Module-degree change of a block; inside C̄ a C^u generator sits one lower.
int block_degree(const BlockInfo& b) {
  if (!b.reducible) return b.base;
  return b.base + (b.to == 'u' ? 1 : 0) - (b.from == 'u' ? 1 : 0);
}

NamedObject parse_balanced(Iter& it, Iter end) {
  const Line& head = *it;
  if (head.tok.size() != 2) throw ParseError(head.no, "expected 'balanced <name>'");
  const std::string name = head.tok[1];
  Ring ring = Ring::Z();
  std::map<char, std::vector<Generator>> gens{{'o', {}}, {'s', {}}, {'u', {}}};
  std::map<std::string, std::vector<Triple>> maps;
  char cur_part = 0;
  std::string cur_map;
  ++it;
  for (; it != end; ++it) {
    const Line& l = *it;
    const std::string& k = l.tok[0];
    if (k == "end") break;
    if (k == "ring") {
      ring = to_ring(l);
    } else if (k == "part") {
      arity(l, 2);
      if (l.tok[1] != "o" && l.tok[1] != "s" && l.tok[1] != "u") throw ParseError(l.no, "part must be o, s or u");
      cur_part = l.tok[1][0];
      cur_map.clear();
    } else if (k == "map") {
      arity(l, 2);
      bool known = false;
      for (const auto& b : kBlocks) known = known || l.tok[1] == b.key;
      if (!known) throw ParseError(l.no, "unknown block '" + l.tok[1] + "'");
      cur_map = l.tok[1];
      cur_part = 0;
      maps[cur_map];
    } else if (k == "gen") {
      if (!cur_part) throw ParseError(l.no, "'gen' outside a part");
      arity(l, 3);
      gens[cur_part].push_back({l.tok[1], to_int(l, l.tok[2])});
    } else if (!cur_map.empty()) {
      arity(l, 3);
      maps[cur_map].push_back({l, l.tok[0], l.tok[1], to_big(l, l.tok[2])});
    } else {
      throw ParseError(l.no, "unexpected '" + k + "' in balanced");
    }
  }
  if (it == end) throw ParseError(head.no, "balanced '" + name + "' has no 'end'");
  std::vector<Generator> all;
  for (auto& [p, g] : gens) all.insert(all.end(), g.begin(), g.end());
  make_module(head, all, 0);
  BalancedComponents B = BalancedComponents::zero(GradedModule(gens['o']), GradedModule(gens['s']),
                                                  GradedModule(gens['u']), ring);
  for (const auto& b : kBlocks) {
    auto mit = maps.find(b.key);
    if (mit == maps.end()) continue;
    const GradedModule& S = part(B, b.from);
    const GradedModule& T = part(B, b.to);
    IntMatrix& M = B.*(b.field);
    for (const auto& t : mit->second) {
      const std::size_t s = lookup(t.line, S, t.a), d = lookup(t.line, T, t.b);
      if (T.degree(d) - S.degree(s) != block_degree(b))
        throw ValidationError(std::string("degree fails at ") + b.key + " " + t.a + "->" + t.b);
      M.add(d, s, t.c);
    }
    M = M.reduced(ring);
  }
  return {name, B};
}

// ---- sum maps

const char* const kSumMaps[] = {"V0", "V1", "V0'", "V1'", "H", "A", "B", "C", "D"};

NamedObject parse_summaps(Iter& it, Iter end) {
  const Line& head = *it;
  if (head.tok.size() != 2) throw ParseError(head.no, "expected 'summaps <name>'");
  const std::string name = head.tok[1];
  Ring ring = Ring::Z();
  std::vector<Generator> gens;
  std::vector<Triple> d;
  SumMapsFile f;
  std::string cur;
  ++it;
  for (; it != end; ++it) {
    const Line& l = *it;
    const std::string& k = l.tok[0];
    if (k == "end") break;
    if (k == "ring") {
      ring = to_ring(l);
    } else if (k == "gen" && cur.empty()) {
      arity(l, 3);
      gens.push_back({l.tok[1], to_int(l, l.tok[2])});
    } else if (k == "d" && cur.empty()) {
      arity(l, 4);
      d.push_back({l, l.tok[1], l.tok[2], to_big(l, l.tok[3])});
    } else if (k == "map") {
      arity(l, 3);
      if (std::find(std::begin(kSumMaps), std::end(kSumMaps), l.tok[1]) == std::end(kSumMaps))
        throw ParseError(l.no, "unknown sum map '" + l.tok[1] + "'");
      cur = l.tok[1];
      if (f.maps.count(cur)) throw ParseError(l.no, "map '" + cur + "' given twice");
      f.maps[cur].degree = to_int(l, l.tok[2]);
    } else if (!cur.empty()) {
      arity(l, 3);
      f.maps[cur].entries.push_back({l.tok[0], l.tok[1], to_big(l, l.tok[2])});
    } else {
      throw ParseError(l.no, "unexpected '" + k + "' in summaps");
    }
  }
  if (it == end) throw ParseError(head.no, "summaps '" + name + "' has no 'end'");
  f.sharp = ChainComplex(make_module(head, std::move(gens), 0), ring);
  for (const auto& t : d) f.sharp.d.add(lookup(t.line, f.sharp.mod, t.b), lookup(t.line, f.sharp.mod, t.a), t.c);
  f.sharp.normalize();
  for (const auto& law : validate(f.sharp).laws)
    if (!law.ok) throw ValidationError(law.law + " fails at " + law.witness);
  return {name, f};
}

// Entries of M sorted by source, then target.
std::vector<std::tuple<std::size_t, std::size_t, Int>> by_source(const IntMatrix& M) {
  std::vector<std::tuple<std::size_t, std::size_t, Int>> out;
  for (const auto& [k, v] : M.entries()) out.push_back({k.second, k.first, v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return out;
}

void put_entries(std::ostream& os, const char* prefix, const IntMatrix& M, const GradedModule& S,
                 const GradedModule& T) {
  for (const auto& [s, t, v] : by_source(M)) os << prefix << S.name(s) << ' ' << T.name(t) << ' ' << v.get_str() << '\n';
}

}  // namespace

std::vector<NamedObject> parse_text(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  std::vector<NamedObject> out;
  for (Iter it = lines.begin(); it != lines.end(); ++it) {
    const std::string& k = it->tok[0];
    if (k == "complex")
      out.push_back(parse_complex(it, lines.end()));
    else if (k == "balanced")
      out.push_back(parse_balanced(it, lines.end()));
    else if (k == "summaps")
      out.push_back(parse_summaps(it, lines.end()));
    else
      throw ParseError(it->no, "expected complex, balanced or summaps, got '" + k + "'");
  }
  return out;
}

std::vector<NamedObject> parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string print(const std::string& name, const ChainComplex& C) {
  std::ostringstream os;
  os << "complex " << name << "\n  ring " << C.ring.name() << '\n';
  if (C.mod.modulus() != 0) os << "  mod " << C.mod.modulus() << '\n';
  for (const auto& g : C.mod.gens()) os << "  gen " << g.name << ' ' << g.degree << '\n';
  put_entries(os, "  d ", C.d, C.mod, C.mod);
  if (C.u) {
    if (C.u->is_zero()) os << "  u\n";
    put_entries(os, "  u ", *C.u, C.mod, C.mod);
  }
  if (C.y) {
    if (C.y->is_zero()) os << "  y\n";
    put_entries(os, "  y ", *C.y, C.mod, C.mod);
  }
  os << "end\n";
  return os.str();
}

std::string print(const std::string& name, const FilteredComplex& F) {
  std::ostringstream os;
  os << "complex " << name << " filtered\n  ring " << F.ring.name() << '\n';
  for (const auto& g : F.mod.gens()) os << "  gen " << g.name << ' ' << g.degree << '\n';
  for (const auto& [k, poly] : F.d)
    for (const auto& [e, c] : poly)
      os << "  dU " << F.mod.name(k.first) << ' ' << F.mod.name(k.second) << ' ' << c.get_str() << ' ' << e << '\n';
  os << "end\n";
  return os.str();
}

std::string print(const std::string& name, const BalancedComponents& B) {
  std::ostringstream os;
  os << "balanced " << name << "\n  ring " << B.ring.name() << '\n';
  for (char p : {'o', 's', 'u'}) {
    os << "  part " << p << '\n';
    for (const auto& g : part(B, p).gens()) os << "    gen " << g.name << ' ' << g.degree << '\n';
  }
  for (const auto& b : kBlocks) {
    const IntMatrix& M = B.*(b.field);
    if (M.is_zero()) continue;
    os << "  map " << b.key << '\n';
    put_entries(os, "    ", M, part(B, b.from), part(B, b.to));
  }
  os << "end\n";
  return os.str();
}

std::string print(const std::string& name, const SumMapsFile& S) {
  std::ostringstream os;
  os << "summaps " << name << "\n  ring " << S.sharp.ring.name() << '\n';
  for (const auto& g : S.sharp.mod.gens()) os << "  gen " << g.name << ' ' << g.degree << '\n';
  put_entries(os, "  d ", S.sharp.d, S.sharp.mod, S.sharp.mod);
  for (const char* key : kSumMaps) {
    auto it = S.maps.find(key);
    if (it == S.maps.end()) continue;
    os << "  map " << key << ' ' << it->second.degree << '\n';
    for (const auto& [a, b, c] : it->second.entries) os << "    " << a << ' ' << b << ' ' << c.get_str() << '\n';
  }
  os << "end\n";
  return os.str();
}

std::string print(const NamedObject& o) {
  return std::visit([&](const auto& x) { return print(o.name, x); }, o.object);
}

std::string print(const std::vector<NamedObject>& objects) {
  std::string out;
  for (std::size_t i = 0; i < objects.size(); ++i) out += (i ? "\n" : "") + print(objects[i]);
  return out;
}

ConnSumMaps resolve(const SumMapsFile& f, const ChainComplex& product) {
  ConnSumMaps m;
  m.sharp = f.sharp;
  const GradedModule& P = product.mod;
  const GradedModule& H = f.sharp.mod;
  auto build = [&](const char* key, const GradedModule& S, const GradedModule& T, int fallback) {
    auto it = f.maps.find(key);
    GradedMap g(S, T, it == f.maps.end() ? fallback : it->second.degree);
    if (it == f.maps.end()) return g;
    for (const auto& [a, b, c] : it->second.entries) {
      auto s = S.index(a), t = T.index(b);
      if (!s || !t) throw ValidationError(std::string("map ") + key + " names unknown generator in " + a + "->" + b);
      g.m.add(*t, *s, c);
    }
    g.m = g.m.reduced(product.ring);
    return g;
  };
  m.v0 = build("V0", H, P, -1);
  m.v1 = build("V1", H, P, 0);
  m.v0d = build("V0'", P, H, 0);
  m.v1d = build("V1'", P, H, 1);
  m.h_sharp = build("H", H, H, 1);
  m.a = build("A", P, P, 1);
  m.b = build("B", P, P, 1);
  m.c = build("C", P, P, 1);
  m.d = build("D", P, P, 1);
  return m;
}

SumMapsFile unresolve(const ConnSumMaps& m) {
  SumMapsFile f;
  f.sharp = m.sharp;
  auto put = [&](const char* key, const GradedMap& g) {
    MapSpec s{g.degree, {}};
    for (const auto& [src, dst, v] : by_source(g.m)) s.entries.push_back({g.src.name(src), g.tgt.name(dst), v});
    f.maps[key] = s;
  };
  put("V0", m.v0);
  put("V1", m.v1);
  put("V0'", m.v0d);
  put("V1'", m.v1d);
  put("H", m.h_sharp);
  put("A", m.a);
  put("B", m.b);
  put("C", m.c);
  put("D", m.d);
  return f;
}

}  // namespace floer
