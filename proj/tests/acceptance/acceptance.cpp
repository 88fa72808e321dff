// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace floer;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const Window kWin(-6, 6);

std::string str(std::size_t n) { return std::to_string(n); }

std::map<int, AbelianGroup> nonzero(const HomologyTable& T, bool safe) {
  std::map<int, AbelianGroup> out;
  for (const auto& [j, g] : T.groups)
    if (!g.trivial() && (T.safe.count(j) > 0) == safe) out[j] = g;
  return out;
}

// ---- 1. law suite

Verdict law_suite() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const std::map<std::string, std::set<std::string>> allowed = {
      {"d", {"d2", "dU", "dY"}}, {"U", {"dU"}}, {"Y", {"dY", "Y2"}}};
  std::map<std::string, int> tried, caught;
  int complexes = 0, inhomogeneous = 0;
  for (std::uint64_t seed = 1; seed <= 240; ++seed) {
    Rng r(seed);
    RandomParams p;
    p.ring = seed % 2 ? Ring::Z() : Ring::F(2);
    const int kind = static_cast<int>(seed % 3);
    ChainComplex C = kind == 0 ? random_complex(r, p) : kind == 1 ? random_u_complex(r, p) : random_y_complex(r, p);
    if (C.size() > 8) v.fail("seed " + std::to_string(seed) + ": rank above 8");
    for (const auto& g : C.mod.gens())
      if (g.degree < -6 || g.degree > 6) v.fail("seed " + std::to_string(seed) + ": degree out of range");
    for (const IntMatrix* M : {&C.d, C.u ? &*C.u : nullptr, C.y ? &*C.y : nullptr})
      if (M)
        for (const auto& [k, x] : M->entries())
          if (abs(x) > 3) v.fail("seed " + std::to_string(seed) + ": entry out of range");
    if (!validate(C).ok() || !oracle::failing_laws(C).empty()) v.fail("seed " + std::to_string(seed) + " invalid");
    ++complexes;

    struct Target {
      std::string name;
      IntMatrix ChainComplex::*plain;
      std::optional<IntMatrix> ChainComplex::*action;
      int degree;
    };
    const std::vector<Target> targets = {{"d", &ChainComplex::d, nullptr, -1},
                                         {"U", nullptr, &ChainComplex::u, -2},
                                         {"Y", nullptr, &ChainComplex::y, 1}};
    for (const auto& t : targets) {
      if (t.action && !(C.*(t.action))) continue;
      const auto slots = fixture::slots(C.mod, t.degree);
      if (slots.empty()) continue;
      ChainComplex P = C;
      IntMatrix& M = t.plain ? P.*(t.plain) : *(P.*(t.action));
      const auto [row, col] = slots[r.uniform(0, static_cast<int>(slots.size()) - 1)];
      M.add(row, col, 1);
      P.normalize();
      const auto f = validate(P).failed();
      const std::set<std::string> got(f.begin(), f.end());
      ++tried[t.name];
      if (got != oracle::failing_laws(P)) v.fail("seed " + std::to_string(seed) + " " + t.name + ": disagrees with oracle");
      for (const auto& law : got)
        if (!allowed.at(t.name).count(law)) v.fail("seed " + std::to_string(seed) + " " + t.name + " tripped " + law);
      if (!got.empty()) ++caught[t.name];
    }
    // an entry of the wrong degree trips the degree law
    if (C.size() >= 2) {
      ChainComplex P = C;
      for (std::size_t s = 0; s < C.size() && P.d == C.d; ++s)
        for (std::size_t t = 0; t < C.size(); ++t)
          if (C.mod.degree(t) != C.mod.degree(s) - 1) {
            P.d.add(t, s, 1);
            break;
          }
      P.normalize();
      if (!(P.d == C.d)) {
        ++inhomogeneous;
        if (validate(P).passed("degree") || oracle::failing_laws(P) != [&] {
              const auto f = validate(P).failed();
              return std::set<std::string>(f.begin(), f.end());
            }())
          v.fail("seed " + std::to_string(seed) + ": degree law missed");
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const char* m : {"d", "U", "Y"})
    if (caught[m] == 0) v.fail(std::string("no perturbation of ") + m + " was caught");
  if (complexes < 200) v.fail("fewer than 200 complexes");
  if (secs >= 60) v.fail("took " + std::to_string(secs) + " s");
  if (v.ok) {
    std::ostringstream os;
    os << complexes << " complexes over Z and F2; caught d " << caught["d"] << "/" << tried["d"] << ", U "
       << caught["U"] << "/" << tried["U"] << ", Y " << caught["Y"] << "/" << tried["Y"] << ", degree "
       << inhomogeneous << "/" << inhomogeneous << "; all agree with the oracle; " << static_cast<int>(secs * 1000)
       << " ms";
    v.detail = os.str();
  }
  return v;
}

// ---- 2. Koszul duality

Verdict koszul() {
  Verdict v;
  // pinned on the single-generator oracle
  const KoszulAReport pa = koszul_a(fixture::point(), Flavor::minus, kWin);
  ChainComplex yp(GradedModule({{"e", 0}}));
  yp.y = IntMatrix(1, 1);
  const KoszulBReport pb = koszul_b(yp, kWin);
  if (pa.e1.shift != 1 || pa.e1.vacuous) v.fail("koszul_a single-generator shift is not +1");
  if (pb.report.shift != -1 || pb.report.vacuous) v.fail("koszul_b single-generator shift is not -1");
  const int shift_a = 1, shift_b = -1;

  std::map<Flavor, int> nonvacuous;
  int a_count = 0, b_count = 0, b_nonvacuous = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng r(seed);
    const ChainComplex C = random_u_complex(r, RandomParams{});
    for (Flavor f : kAllFlavors) {
      const KoszulAReport k = koszul_a(C, f, kWin);
      if (!k.e1.matched()) v.fail("koszul_a " + flavor_name(f) + " seed " + std::to_string(seed) + " no uniform shift");
      else if (!k.e1.vacuous) {
        ++nonvacuous[f];
        if (*k.e1.shift != shift_a) v.fail("koszul_a " + flavor_name(f) + " seed " + std::to_string(seed) + " shift");
      }
      if (f == Flavor::hat) {
        if (!k.hat_su || k.hat_su->shift != 0) v.fail("hat vs S_U shift seed " + std::to_string(seed));
        const HomologyTable E = homology(e_y(s_u(C), Flavor::hat, kWin), std::pair{kWin.lo, kWin.hi});
        const HomologyTable S = homology(s_u(C));
        for (int j : E.safe)
          if (!(E.at(j) == S.at(j))) v.fail("hat group mismatch seed " + std::to_string(seed));
      }
    }
    ++a_count;
    const KoszulBReport kb = koszul_b(random_y_complex(r, RandomParams{}), kWin);
    if (!kb.ok()) v.fail("koszul_b seed " + std::to_string(seed));
    else if (!kb.report.vacuous) {
      ++b_nonvacuous;
      if (kb.report.shift != shift_b) v.fail("koszul_b shift seed " + std::to_string(seed));
    }
    ++b_count;
  }
  for (Flavor f : {Flavor::minus, Flavor::plus, Flavor::hat})
    if (nonvacuous[f] == 0) v.fail("koszul_a " + flavor_name(f) + " never compared anything");
  if (b_nonvacuous == 0) v.fail("koszul_b never compared anything");
  if (v.ok) {
    std::ostringstream os;
    os << "a: " << a_count << " complexes x 4 flavors, shift +1 (non-vacuous minus " << nonvacuous[Flavor::minus]
       << ", inf " << nonvacuous[Flavor::infinity] << ", plus " << nonvacuous[Flavor::plus] << ", hat "
       << nonvacuous[Flavor::hat] << "), hat = S_U with shift 0; b: " << b_count << " complexes, shift -1 ("
       << b_nonvacuous << " non-vacuous)";
    v.detail = os.str();
  }
  return v;
}

// ---- 3. exact sequences

Verdict sequences() {
  Verdict v;
  std::size_t fundamental = 0, filtered = 0, ladders = 0, nodes = 0;
  auto flavors = [&](const ChainComplex& C, const std::string& what) {
    const FourFlavors ff = four_flavors(C, kWin);
    if (!ff.ok()) v.fail("fundamental LES on " + what);
    nodes += ff.first.safe_nodes() + ff.second.safe_nodes();
    ++fundamental;
  };
  auto cm = [&](const FilteredComplex& F, const std::string& what) {
    const CMFlavors c = cm_flavors(F, kWin);
    if (!c.ok()) v.fail("filtered LES on " + what);
    nodes += c.first_cert.safe_nodes() + c.second_cert.safe_nodes();
    ++filtered;
  };
  auto ladder = [&](const BalancedComponents& B, const std::string& what) {
    const LadderReport L = ladder_check(assemble(B), kWin);
    if (!L.ok()) v.fail("ladder on " + what);
    nodes += L.cone_les.safe_nodes();
    ++ladders;
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng r(seed);
    flavors(random_u_complex(r, RandomParams{}), "random u seed " + std::to_string(seed));
    cm(random_filtered(r, RandomParams{}), "random filtered seed " + std::to_string(seed));
    const ChainComplex Y = random_y_complex(r, RandomParams{});
    const FundamentalSequences fs = fundamental_sequences(Y, kWin);
    if (!fs.ok()) v.fail("fundamental LES on random y seed " + std::to_string(seed));
    nodes += fs.first_cert.safe_nodes() + fs.second_cert.safe_nodes();
    ++fundamental;
    if (seed <= 50) ladder(random_decoupled(r, RandomParams{}), "random bundle seed " + std::to_string(seed));
  }
  std::size_t golden = 0;
  for (const auto& file : fixture::corpus_files()) {
    for (const auto& obj : parse_file(file)) {
      if (const auto* C = std::get_if<ChainComplex>(&obj.object)) {
        if (C->u) flavors(*C, obj.name);
        if (C->y) {
          const FundamentalSequences fs = fundamental_sequences(*C, kWin);
          if (!fs.ok()) v.fail("fundamental LES on " + obj.name);
          ++fundamental;
        }
      } else if (const auto* F = std::get_if<FilteredComplex>(&obj.object)) {
        cm(*F, obj.name);
      } else if (const auto* B = std::get_if<BalancedComponents>(&obj.object)) {
        if (check_bundle(build_bundle(*B)).ok()) ladder(*B, obj.name);
      }
      ++golden;
    }
  }
  if (v.ok)
    v.detail = str(fundamental) + " fundamental pairs, " + str(filtered) + " filtered pairs, " + str(ladders) +
               " ladders (" + str(golden) + " golden objects), " + str(nodes) + " safe nodes exact";
  return v;
}

// ---- 4. tower vanishing

Verdict tower() {
  Verdict v;
  std::string edges;
  for (int N = 2; N <= 5; ++N) {
    ChainComplex pt(GradedModule({{"e", 0}}));
    const FlavorBundle b = assemble(tower_model({pt, N, {}}));
    const HomologyTable T = homology(s_u(b.bar));
    if (!nonzero(T, true).empty()) v.fail("N=" + std::to_string(N) + ": nonzero at a safe degree");
    const std::map<int, AbelianGroup> expect{{-2 * N, {1, {}}}, {2 * N + 1, {1, {}}}};
    if (nonzero(T, false) != expect) v.fail("N=" + std::to_string(N) + ": edge classes differ from the oracle");
    edges += (edges.empty() ? "" : ", ") + std::string("N=") + std::to_string(N) + " {" + std::to_string(-2 * N) +
             "," + std::to_string(2 * N + 1) + "}";
  }
  if (v.ok) v.detail = "H(S_U(bar)) = 0 at safe degrees; edge classes " + edges;
  return v;
}

// ---- 5. cone identities

Verdict cone_checks() {
  Verdict v;
  std::size_t decoupled = 0, coupled = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng r(seed);
    const FlavorBundle b = assemble(random_decoupled(r, RandomParams{}));
    const CheckReport rep = cone_identities(b);
    if (!rep.ok()) v.fail("decoupled seed " + std::to_string(seed) + ": " + rep.first_failure().value_or(""));
    ++decoupled;
  }
  std::set<std::string> tags, caught;
  for (const char* f : {"coupled_a.txt", "coupled_b.txt", "coupled_c.txt", "coupled_d.txt"}) {
    const FlavorBundle b = assemble(fixture::load_one<BalancedComponents>(f));
    const ConeData cd = cone_of(b);
    const CheckReport rep = cone_identities(b, cd);
    if (!rep.ok()) v.fail(std::string(f) + ": " + rep.first_failure().value_or(""));
    for (const auto& c : rep.checks) tags.insert(c.tag);
    ++coupled;

    auto record = [&](const CheckReport& r) {
      for (const auto& c : r.checks)
        if (!c.ok) caught.insert(c.tag);
    };
    // doubled cone maps stay p-morphisms but break every identity they enter
    for (const std::function<void(ConeData&)>& edit : std::vector<std::function<void(ConeData&)>>{
             [](ConeData& c) { c.l = c.l.scaled(2), c.w_l = c.w_l.scaled(2); },
             [](ConeData& c) { c.k = c.k.scaled(2), c.w_k = c.w_k.scaled(2); },
             [](ConeData& c) { c.K = c.K.scaled(2); }, [](ConeData& c) { c.jbar = c.jbar.scaled(2); },
             [](ConeData& c) { c.ibar = c.ibar.scaled(2); }}) {
      ConeData c = cd;
      edit(c);
      record(cone_identities(b, c));
    }
    for (GradedMap ConeData::*w : {&ConeData::w_k, &ConeData::w_l})
      for (std::size_t s = 0; s < (cd.*w).src.size(); ++s)
        for (std::size_t t : (cd.*w).tgt.at((cd.*w).src.degree(s) + (cd.*w).degree)) {
          ConeData c = cd;
          (c.*w).m.add(t, s, 1);
          record(cone_identities(b, c));
        }
    for (GradedMap FlavorBundle::*m : {&FlavorBundle::k_i, &FlavorBundle::k_j, &FlavorBundle::k_p})
      for (std::size_t s = 0; s < (b.*m).src.size(); ++s)
        for (std::size_t t : (b.*m).tgt.at((b.*m).src.degree(s) + (b.*m).degree)) {
          FlavorBundle c = b;
          (c.*m).m.add(t, s, 1);
          record(cone_identities(c));
        }
  }
  for (const auto& t : tags)
    if (!caught.count(t)) v.fail("no falsification caught by " + t);
  if (coupled < 3) v.fail("fewer than 3 coupled instances");
  if (v.ok)
    v.detail = str(tags.size()) + " identities hold on " + str(decoupled) + " decoupled and " + str(coupled) +
               " coupled instances; each falsified";
  return v;
}

// ---- 6. connected sum, case 1

Verdict case1() {
  Verdict v;
  auto run = [&](const ChainComplex& C, const std::string& what, bool must_compare) {
    const ShiftReport s = case1_check(C, 4, Window(-8, 8));
    if (!s.matched()) return v.fail(what + ": no uniform shift");
    if (must_compare && s.vacuous) return v.fail(what + ": nothing compared");
    if (!s.vacuous && *s.shift != 1) v.fail(what + ": shift " + std::to_string(*s.shift));
  };
  run(fixture::point(), "point", true);
  run(fixture::arrow(2), "Z->Z coeff 2", true);
  RandomParams p;
  p.max_rank = 4;
  int random = 0, compared = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng r(seed);
    const ChainComplex C = random_u_complex(r, p);
    run(C, "random seed " + std::to_string(seed), false);
    if (!case1_check(C, 4, Window(-8, 8)).vacuous) ++compared;
    ++random;
  }
  if (v.ok)
    v.detail = "point, Z->Z(2) and " + std::to_string(random) + " random rank<=4 (" + std::to_string(compared) +
               " non-vacuous): shift +1, groupwise match";
  return v;
}

// ---- 7. connected sum, case 2

Verdict case2() {
  Verdict v;
  RandomParams p;
  p.max_rank = 4;
  int n = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng r(seed);
    const ChainComplex C = random_u_complex(r, p);
    for (Flavor f : kAllFlavors) {
      try {
        if (!case2_check(C, f, kWin)) v.fail("seed " + std::to_string(seed) + " " + flavor_name(f));
      } catch (const IdentificationFailed& e) {
        v.fail("seed " + std::to_string(seed) + " " + flavor_name(f) + ": " + e.what());
      }
    }
    ++n;
  }
  if (v.ok) v.detail = std::to_string(n) + " random inputs x 4 flavors identified entry-exactly";
  return v;
}

// ---- 8. functoriality

bool injective(const IntMatrix& M) { return snf(M, Ring::Z(), false).rank() == M.cols(); }
bool surjective(const IntMatrix& M) {
  const SmithForm s = snf(M, Ring::Z(), false);
  return s.rank() == M.rows() && std::all_of(s.factors.begin(), s.factors.end(), [](const Int& x) { return x == 1; });
}

Verdict functoriality() {
  Verdict v;
  int n = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng r(seed);
    const Composable c = random_composable(r, RandomParams{});
    const Ring& R = c.a.ring;
    const std::string at = "seed " + std::to_string(seed);
    const GradedMap f = s_u_map(c.f, c.a, c.b), g = s_u_map(c.g, c.b, c.c), f2 = s_u_map(c.f2, c.a, c.b);
    if (!s_u_map(compose(c.g, c.f), c.a, c.c).equals(g * f, R)) v.fail(at + ": S_U composition");
    if (!s_u_map(add(c.f, c.f2), c.a, c.b).equals(f + f2, R)) v.fail(at + ": S_U addition");
    if (!s_u_map({GradedMap::identity(c.a.mod), GradedMap::zero(c.a.mod, c.a.mod, -1)}, c.a, c.a)
             .equals(GradedMap::identity(s_u_module(c.a.mod)), R))
      v.fail(at + ": S_U identity");

    const ChainComplex A = s_u(c.a), B = s_u(c.b), C = s_u(c.c);
    const ChainComplex sum = direct_sum(c.a, c.b);
    GradedMap inc(c.a.mod, sum.mod, 0), proj(sum.mod, c.a.mod, 0);
    for (const auto& gen : c.a.mod.gens()) {
      inc.add(gen.name, "0:" + gen.name, 1);
      proj.add("0:" + gen.name, gen.name, 1);
    }
    const GradedMap si = s_u_map({inc, GradedMap::zero(c.a.mod, sum.mod, -1)}, c.a, sum);
    const GradedMap sp = s_u_map({proj, GradedMap::zero(sum.mod, c.a.mod, -1)}, sum, c.a);
    if (!injective(si.m)) v.fail(at + ": S_U of an injection");
    if (!surjective(sp.m)) v.fail(at + ": S_U of a surjection");
    const ChainComplex SS = s_u(sum);

    for (Flavor fl : kAllFlavors) {
      const ChainComplex EA = e_y(A, fl, kWin), EB = e_y(B, fl, kWin), EC = e_y(C, fl, kWin), ES = e_y(SS, fl, kWin);
      if (!e_map(g * f, EA, EC, fl).equals(e_map(g, EB, EC, fl) * e_map(f, EA, EB, fl), R))
        v.fail(at + ": E composition " + flavor_name(fl));
      if (!e_map(f + f2, EA, EB, fl).equals(e_map(f, EA, EB, fl) + e_map(f2, EA, EB, fl), R))
        v.fail(at + ": E addition " + flavor_name(fl));
      if (!injective(e_map(si, EA, ES, fl).m)) v.fail(at + ": E of an injection " + flavor_name(fl));
      if (!surjective(e_map(sp, ES, EA, fl).m)) v.fail(at + ": E of a surjection " + flavor_name(fl));
    }
    ++n;
  }
  if (v.ok)
    v.detail = std::to_string(n) +
               " composable pairs: S_U and E (4 flavors) preserve composition, sums, identities, injections, surjections";
  return v;
}

// ---- 9. determinism

std::string machine_reports() {
  std::string all;
  auto run = [&](std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("machine");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    all += "exit=" + std::to_string(code) + "\n" + out.str() + err.str();
  };
  for (const auto& file : fixture::corpus_files()) {
    const auto objs = parse_file(file);
    const auto& first = objs.at(0).object;
    run({"verify", file});
    if (std::holds_alternative<SumMapsFile>(objs.back().object)) {
      run({"consum-verify", file});
    } else if (const auto* C = std::get_if<ChainComplex>(&first)) {
      run({"homology", file});
      if (C->u) run({"flavors", file, "--window", "-6..6"});
      if (C->u) run({"koszul", file, "--direction", "a", "--window", "-6..6"});
      if (C->y) run({"koszul", file, "--direction", "b", "--window", "-6..6"});
    } else if (std::holds_alternative<FilteredComplex>(first)) {
      run({"cmflavors", file, "--window", "-6..6"});
    } else {
      run({"ladder", file, "--window", "-6..6"});
    }
  }
  for (int seed = 1; seed <= 5; ++seed)
    for (const char* kind : {"complex", "u", "y", "filtered", "bundle"})
      run({"generate", "--seed", std::to_string(seed), "--kind", kind});
  return all;
}

Verdict determinism() {
  Verdict v;
  const std::string a = machine_reports(), b = machine_reports();
  if (a != b) v.fail("machine reports differ between runs");
  if (a.empty()) v.fail("no output");
  if (v.ok) v.detail = std::to_string(a.size()) + " bytes identical across two runs over " +
                       std::to_string(fixture::corpus_files().size()) + " golden files";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"law suite", law_suite},
      {"koszul duality", koszul},
      {"exact sequences", sequences},
      {"tower vanishing", tower},
      {"cone identities", cone_checks},
      {"connected sum case 1", case1},
      {"connected sum case 2", case2},
      {"functoriality", functoriality},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("threw ") + e.what());
    }
    if (!v.ok) ++failures;
    std::cout << (v.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
