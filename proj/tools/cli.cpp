#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "floer/connsum.hpp"
#include "floer/random.hpp"
#include "floer/textio.hpp"
#include "report.hpp"

namespace floer::cli {

namespace {

struct Options {
  std::vector<std::string> files;
  std::string window;
  std::string flavor;
  std::string direction = "a";
  std::string format = "text";
  std::string kind = "complex";
  int n = 3;
  std::uint64_t seed = 1;
};

struct UsageError : Error {
  using Error::Error;
};

std::optional<Window> parse_window(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("window must look like lo..hi");
  try {
    std::size_t a = 0, b = 0;
    const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    const int l = std::stoi(lo, &a), h = std::stoi(hi, &b);
    if (a != lo.size() || b != hi.size()) throw UsageError("window must look like lo..hi");
    return Window(l, h);
  } catch (const std::logic_error&) {
    throw UsageError("window must look like lo..hi");
  }
}

std::vector<Flavor> flavors_of(const Options& o) {
  if (o.flavor.empty()) return {std::begin(kAllFlavors), std::end(kAllFlavors)};
  auto f = parse_flavor(o.flavor);
  if (!f) throw UsageError("unknown flavor '" + o.flavor + "'");
  return {*f};
}

std::vector<NamedObject> load(const Options& o) {
  std::vector<NamedObject> all;
  for (const auto& f : o.files) {
    auto objs = parse_file(f);
    all.insert(all.end(), objs.begin(), objs.end());
  }
  return all;
}

template <class T>
std::vector<std::pair<std::string, T>> only(const std::vector<NamedObject>& objs, const char* what) {
  std::vector<std::pair<std::string, T>> out;
  for (const auto& o : objs)
    if (const T* x = std::get_if<T>(&o.object)) out.push_back({o.name, *x});
  if (out.empty()) throw UsageError(std::string("input holds no ") + what);
  return out;
}

Window default_window(const GradedModule& M) {
  if (M.size() == 0) return Window(0, 0);
  return Window(M.min_degree() - 2, M.max_degree() + 2);
}

// Infinite flavor complexes need an explicit window.
Window required_window(const Options& o) {
  if (auto w = parse_window(o.window)) return *w;
  throw UsageError("this command builds infinite flavor complexes; pass --window lo..hi");
}

std::string signed_str(int s) { return (s > 0 ? "+" : "") + std::to_string(s); }

void shift_record(Report& r, const std::string& name, const ShiftReport& s) {
  r.record(name, {{"shift", s.shift ? signed_str(*s.shift) : "none"},
                  {"match", s.matched() ? "yes" : "no"},
                  {"vacuous", s.vacuous ? "yes" : "no"}});
}

void les(Report& r, const std::string& tag, const LesCertificate& c) {
  r.check(tag, c.ok(), std::to_string(c.safe_nodes()) + " safe nodes");
}

void checks(Report& r, const CheckReport& c) {
  for (const auto& ch : c.checks) r.check(ch.tag, ch.ok, ch.detail);
}

// ---- commands

void cmd_verify(const Options& o, Report& r) {
  for (const auto& obj : load(o)) {
    r.section(obj.name);
    if (const auto* C = std::get_if<ChainComplex>(&obj.object)) {
      for (const auto& l : validate(*C).laws) r.check(l.law, l.ok, l.witness);
    } else if (const auto* F = std::get_if<FilteredComplex>(&obj.object)) {
      for (const auto& l : F->validate().laws) r.check(l.law, l.ok, l.witness);
      r.check("positivity", check_positivity(*F));
    } else if (const auto* B = std::get_if<BalancedComponents>(&obj.object)) {
      FlavorBundle b = build_bundle(*B);
      CheckReport rep = check_bundle(b);
      checks(r, rep);
      if (rep.ok()) checks(r, cone_identities(b));
    } else {
      const auto& S = std::get<SumMapsFile>(obj.object);
      for (const auto& l : validate(S.sharp).laws) r.check("sharp:" + l.law, l.ok, l.witness);
    }
  }
}

void cmd_homology(const Options& o, Report& r) {
  for (const auto& [name, C] : only<ChainComplex>(load(o), "chain complex")) {
    const Window w = parse_window(o.window).value_or(default_window(C.mod));
    r.section(name);
    r.table("H", homology(C, std::pair{w.lo, w.hi}), w.lo, w.hi);
  }
}

void cmd_su(const Options& o, Report& r) {
  for (const auto& [name, C] : only<ChainComplex>(load(o), "chain complex")) {
    if (!C.u) throw MissingUAction(name + " has no U-action");
    ChainComplex S = s_u(C);
    const Window w = parse_window(o.window).value_or(default_window(S.mod));
    r.section(name);
    for (const auto& l : validate(S).laws) r.check("SU:" + l.law, l.ok, l.witness);
    r.table("S_U", homology(S, std::pair{w.lo, w.hi}), w.lo, w.hi);
  }
}

void cmd_ey(const Options& o, Report& r) {
  const auto fl = flavors_of(o);
  for (const auto& [name, C] : only<ChainComplex>(load(o), "chain complex")) {
    if (!C.y) throw MissingYAction(name + " has no Y-action");
    r.section(name);
    for (Flavor f : fl) {
      const Window w = f == Flavor::hat ? parse_window(o.window).value_or(default_window(C.mod)) : required_window(o);
      ChainComplex E = e_y(C, f, w);
      r.table("E_" + flavor_name(f), homology(E, std::pair{w.lo, w.hi}), w.lo, w.hi);
    }
  }
}

void cmd_flavors(const Options& o, Report& r) {
  const Window w = required_window(o);
  for (const auto& [name, C] : only<ChainComplex>(load(o), "chain complex")) {
    if (!C.u) throw MissingUAction(name + " has no U-action");
    FourFlavors ff = four_flavors(C, w);
    r.section(name);
    for (Flavor f : kAllFlavors) r.table(flavor_name(f), ff.table(f), w.lo, w.hi);
    les(r, "minus>inf>plus", ff.first);
    les(r, "minus>u>minus>hat", ff.second);
  }
}

void cmd_koszul(const Options& o, Report& r) {
  const Window w = required_window(o);
  for (const auto& [name, C] : only<ChainComplex>(load(o), "chain complex")) {
    r.section(name);
    if (o.direction == "a") {
      if (!C.u) throw MissingUAction(name + " has no U-action");
      for (Flavor f : flavors_of(o)) {
        KoszulAReport k = koszul_a(C, f, w);
        shift_record(r, flavor_name(f), k.e1);
        r.check("koszul-a:" + flavor_name(f), k.e1.matched());
        if (k.hat_su) {
          shift_record(r, "hat-vs-SU", *k.hat_su);
          r.check("koszul-a:hat=SU", k.hat_su->matched() && k.hat_su->shift == 0);
        }
      }
    } else if (o.direction == "b") {
      if (!C.y) throw MissingYAction(name + " has no Y-action");
      KoszulBReport k = koszul_b(C, w);
      shift_record(r, "b", k.report);
      r.check("koszul-b:homology", k.report.matched());
      r.check("koszul-b:cycle-chain", k.cycle_map_chain);
      r.check("koszul-b:cycle-Y", k.cycle_map_y);
      r.check("koszul-b:cycle-iso", k.cycle_map_iso);
    } else {
      throw UsageError("--direction must be a or b");
    }
  }
}

void cmd_ladder(const Options& o, Report& r) {
  const Window w = required_window(o);
  for (const auto& [name, B] : only<BalancedComponents>(load(o), "balanced components")) {
    r.section(name);
    FlavorBundle b = build_bundle(B);
    CheckReport rep = check_bundle(b);
    checks(r, rep);
    if (!rep.ok()) continue;
    LadderReport L = ladder_check(b, w);
    les(r, "cone", L.cone_les);
    r.check("triangle", L.triangle_exact, std::to_string(L.triangle_degrees.size()) + " degrees");
    const char* rows[4] = {"check:minus>inf>plus", "check:minus>u>minus>hat", "hat:minus>inf>plus",
                           "hat:minus>u>minus>hat"};
    for (int i = 0; i < 4; ++i) les(r, rows[i], L.rows[i]);
    r.check("squares", L.squares_commute, std::to_string(L.delta_squares) + " connecting squares");
    r.record("bar", {{"vanishes", L.bar_vanishes ? "yes" : "no"},
                     {"j_iso", L.j_iso ? "yes" : "no"},
                     {"iso_degrees", std::to_string(L.iso_degrees.size())}});
  }
}

ChainComplex point() {
  ChainComplex P(GradedModule({{"e", 0}}));
  return P;
}

void cmd_tower(const Options& o, Report& r) {
  std::vector<std::pair<std::string, ChainComplex>> bases;
  if (o.files.empty())
    bases.push_back({"point", point()});
  else
    bases = only<ChainComplex>(load(o), "chain complex");
  for (auto& [name, base] : bases) {
    base.u.reset();
    base.y.reset();
    r.section(name + " N=" + std::to_string(o.n));
    FlavorBundle b = build_bundle(tower_model({base, o.n, {}}));
    CheckReport rep = check_bundle(b);
    checks(r, rep);
    if (!rep.ok()) continue;
    checks(r, cone_identities(b));
    ChainComplex S = s_u(b.bar);
    const Window w = parse_window(o.window).value_or(default_window(S.mod));
    HomologyTable H = homology(S, std::pair{w.lo, w.hi});
    r.table("S_U(bar)", H, w.lo, w.hi);
    bool vanishes = true;
    std::string edges;
    for (const auto& [j, g] : H.groups) {
      if (H.safe.count(j)) vanishes = false;
      else edges += (edges.empty() ? "" : ",") + std::to_string(j);
    }
    r.check("S_U(bar)=0 at safe degrees", vanishes);
    r.record("edges", {{"degrees", edges.empty() ? "none" : edges}});
    LocalizationReport loc = tower_localization(b);
    r.check("Ubar iso", loc.iso, std::to_string(loc.degrees.size()) + " degrees");
  }
}

void cmd_cmflavors(const Options& o, Report& r) {
  const Window w = required_window(o);
  for (const auto& [name, F] : only<FilteredComplex>(load(o), "filtered complex")) {
    r.section(name);
    const bool pos = check_positivity(F);
    r.check("positivity", pos);
    if (!pos) continue;
    CMFlavors cm = cm_flavors(F, w);
    r.table("CM-", homology(cm.minus, std::pair{w.lo, w.hi}), w.lo, w.hi);
    r.table("CMinf", homology(cm.infinity, std::pair{w.lo, w.hi}), w.lo, w.hi);
    r.table("CM+", homology(cm.plus, std::pair{w.lo, w.hi}), w.lo, w.hi);
    r.table("CMhat", homology(cm.hat, std::pair{w.lo, w.hi}), w.lo, w.hi);
    les(r, cm.first.tag, cm.first_cert);
    les(r, cm.second.tag, cm.second_cert);
  }
}

void cmd_case1(const Options& o, Report& r) {
  for (const auto& [name, C] : only<ChainComplex>(load(o), "chain complex")) {
    ChainComplex c1 = C;
    if (!c1.u) c1.u = IntMatrix(c1.size(), c1.size());
    const Window w = parse_window(o.window).value_or(Window(-2 * o.n + c1.mod.min_degree(), c1.mod.max_degree() + 3));
    r.section(name);
    ShiftReport s = case1_check(c1, o.n, w);
    shift_record(r, "case1", s);
    r.check("case1 shift=+1", s.matched() && s.shift == 1);
  }
}

void cmd_case2(const Options& o, Report& r) {
  const Window w = required_window(o);
  for (const auto& [name, C] : only<ChainComplex>(load(o), "chain complex")) {
    if (!C.u) throw MissingUAction(name + " has no U-action");
    r.section(name);
    for (Flavor f : flavors_of(o)) {
      try {
        r.check("case2:" + flavor_name(f), case2_check(C, f, w));
      } catch (const IdentificationFailed& e) {
        r.check("case2:" + flavor_name(f), false, e.what());
      }
    }
  }
}

void cmd_consum_verify(const Options& o, Report& r) {
  auto objs = load(o);
  auto cs = only<ChainComplex>(objs, "chain complex");
  auto maps = only<SumMapsFile>(objs, "summaps block");
  if (cs.size() != 2) throw UsageError("consum-verify needs exactly two complexes (C1 and C2)");
  ChainComplex P = product_complex({cs[0].second, cs[1].second});
  for (const auto& [name, f] : maps) {
    r.section(name);
    checks(r, verify_sum_maps(P, resolve(f, P)));
  }
}

void cmd_generate(const Options& o, Report&, std::ostream& out) {
  Rng rng(o.seed);
  RandomParams p;
  const std::string name = o.kind + std::to_string(o.seed);
  if (o.kind == "complex")
    out << print(name, random_complex(rng, p));
  else if (o.kind == "u")
    out << print(name, random_u_complex(rng, p));
  else if (o.kind == "y")
    out << print(name, random_y_complex(rng, p));
  else if (o.kind == "filtered")
    out << print(name, random_filtered(rng, p));
  else if (o.kind == "bundle")
    out << print(name, random_decoupled(rng, p));
  else
    throw UsageError("--kind must be complex, u, y, filtered or bundle");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homological algebra for circle-action Floer flavors", "floer"};
  app.require_subcommand(1);
  Options o;

  struct Cmd {
    const char* name;
    const char* help;
    std::function<void(const Options&, Report&)> fn;
  };
  const std::vector<Cmd> cmds = {
      {"verify", "validate every object and run its law suite", cmd_verify},
      {"homology", "homology of each complex", cmd_homology},
      {"su", "homology of S_U", cmd_su},
      {"ey", "homology of E_Y in each flavor", cmd_ey},
      {"flavors", "E(S_U C) in all four flavors with both exact sequences", cmd_flavors},
      {"koszul", "Koszul duality comparisons", cmd_koszul},
      {"ladder", "cone sequence and flavor ladder of a balanced complex", cmd_ladder},
      {"tower", "reducible tower model: vanishing of H(S_U C-bar)", cmd_tower},
      {"cmflavors", "four flavors of a filtered complex", cmd_cmflavors},
      {"consum-case1", "connected sum with the K[u2, y2] model", cmd_case1},
      {"consum-case2", "connected sum with the V(u1) model, entry-exact", cmd_case2},
      {"consum-verify", "chain-map and composite identities of the sum maps", cmd_consum_verify},
  };
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    s->add_option("--window", o.window, "degree window lo..hi");
  };
  for (const auto& c : cmds) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    common(s);
    s->add_option("files", o.files, "input files");
    s->add_option("--flavor", o.flavor, "minus, inf, plus or hat");
    s->add_option("--n", o.n, "truncation N");
    if (std::string(c.name) == "koszul") s->add_option("--direction", o.direction, "a or b");
    if (std::string(c.name) != "tower") s->get_option("files")->required();
    subs.push_back({s, &c});
  }
  CLI::App* gen = app.add_subcommand("generate", "print a random object for the corpus");
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--kind", o.kind, "complex, u, y, filtered or bundle");

  std::vector<const char*> argv{"floer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Report report;
  try {
    if (gen->parsed()) {
      cmd_generate(o, report, out);
      return 0;
    }
    for (const auto& [s, c] : subs)
      if (s->parsed()) c->fn(o, report);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
  report.render(out, o.format == "machine" ? Format::machine : Format::text);
  return report.all_passed() ? 0 : 1;
}

}  // namespace floer::cli
