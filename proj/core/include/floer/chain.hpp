#pragma once
// Graded modules, maps and chain complexes with optional U (deg -2) and Y (deg +1) actions.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "floer/exactlin.hpp"

namespace floer {

// Records at which degrees a (possibly truncated) module contains every
// generator of the untruncated object it models. Finite honest complexes
// are complete everywhere.
struct Completeness {
  int lo = 0, hi = -1;
  std::vector<char> inside;  // for degrees lo..hi
  bool below = true, above = true;

  static Completeness full() { return {}; }
  static Completeness tabulate(int lo, int hi, const std::function<bool(int)>& f, bool below, bool above);
  static Completeness meet(const Completeness& a, const Completeness& b);

  bool at(int k) const;
  bool is_full() const;
  Completeness shifted(int s) const;  // the module with every degree raised by s
  bool operator==(const Completeness&) const = default;
};

struct Generator {
  std::string name;
  int degree = 0;
  bool operator==(const Generator&) const = default;
};

class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(std::vector<Generator> gens, int modulus = 0, Completeness c = Completeness::full());

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& gens() const { return gens_; }
  const Generator& gen(std::size_t i) const { return gens_[i]; }
  int degree(std::size_t i) const { return gens_[i].degree; }
  const std::string& name(std::size_t i) const { return gens_[i].name; }
  int modulus() const { return modulus_; }
  const Completeness& completeness() const { return complete_; }
  void set_completeness(Completeness c) { complete_ = std::move(c); }

  std::optional<std::size_t> index(const std::string& name) const;
  const std::vector<std::size_t>& at(int degree) const;
  std::vector<int> degrees() const;  // sorted, with generators
  int norm(int degree) const;        // canonical representative (mod modulus)
  int min_degree() const;
  int max_degree() const;

  bool complete_at(int k) const { return complete_.at(k); }
  bool untruncated_empty(int k) const { return complete_at(k) && at(k).empty(); }
  // Homology at j is determined by the generators of degrees j-1, j, j+1.
  bool safe(int j) const { return complete_at(j - 1) && complete_at(j) && complete_at(j + 1); }

  GradedModule shifted(int s) const;
  GradedModule renamed(const std::string& prefix) const;
  static GradedModule direct_sum(const GradedModule& a, const GradedModule& b, const std::string& pa = "",
                                 const std::string& pb = "");

  bool operator==(const GradedModule& o) const { return gens_ == o.gens_ && modulus_ == o.modulus_; }

 private:
  std::vector<Generator> gens_;
  int modulus_ = 0;
  Completeness complete_;
  std::map<std::string, std::size_t> by_name_;
  std::map<int, std::vector<std::size_t>> by_degree_;
};

// Homogeneous map; coefficient matrix has target rows and source columns.
struct GradedMap {
  GradedModule src, tgt;
  int degree = 0;
  IntMatrix m;

  GradedMap() = default;
  GradedMap(GradedModule s, GradedModule t, int deg);
  GradedMap(GradedModule s, GradedModule t, int deg, IntMatrix mat);

  static GradedMap identity(const GradedModule& M);
  static GradedMap zero(const GradedModule& s, const GradedModule& t, int deg);

  void add(const std::string& from, const std::string& to, const Int& c);
  // First entry violating homogeneity, as "src->tgt".
  std::optional<std::string> inhomogeneous_entry() const;
  IntMatrix block(int src_degree) const;

  GradedMap operator*(const GradedMap& o) const;  // composition this∘o
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap operator-() const;
  GradedMap scaled(const Int& s) const;
  bool equals(const GradedMap& o, const Ring& R) const;
  bool is_zero(const Ring& R) const { return m.reduced(R).is_zero(); }
};

struct ChainComplex {
  GradedModule mod;
  IntMatrix d;
  std::optional<IntMatrix> u, y;
  Ring ring;

  ChainComplex() = default;
  explicit ChainComplex(GradedModule m, Ring r = Ring::Z());

  std::size_t size() const { return mod.size(); }
  GradedMap dmap() const { return GradedMap(mod, mod, -1, d); }
  GradedMap umap() const;
  GradedMap ymap() const;

  void add_d(const std::string& from, const std::string& to, const Int& c);
  void add_u(const std::string& from, const std::string& to, const Int& c);
  void add_y(const std::string& from, const std::string& to, const Int& c);
  void normalize();  // reduce coefficients into the ring
};

struct LawResult {
  std::string law;  // degree, d2, dU, dY, Y2
  bool ok = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<LawResult> laws;
  bool ok() const;
  bool passed(const std::string& law) const;
  std::vector<std::string> failed() const;
};

ValidationReport validate(const ChainComplex& C);
void require_valid(const ChainComplex& C);

struct HomologyTable {
  std::map<int, AbelianGroup> groups;  // absent degrees are trivial
  std::set<int> safe;                  // degrees at which the entry is certified
  AbelianGroup at(int j) const;
  bool operator==(const HomologyTable&) const = default;
};

struct DegreePresentation {
  AbelianGroup group;
  Vec orders;          // per generator: torsion order, 0 for free
  IntMatrix gens;      // columns: cycle representatives in the degree basis
  IntMatrix coords;    // rows: coordinate functionals on cycles
  std::vector<std::size_t> basis;  // module indices of the degree's generators
};

struct HomologyPresentation {
  Ring ring;
  std::map<int, DegreePresentation> by_degree;
  const DegreePresentation& at(int j) const;
  Vec coordinates(int j, const Vec& cycle_in_degree_basis) const;
};

std::set<int> default_degrees(const GradedModule& M);
std::set<int> window_degrees(int lo, int hi);

HomologyTable homology(const ChainComplex& C, std::optional<std::pair<int, int>> window = std::nullopt);
DegreePresentation present_degree(const ChainComplex& C, int j);
HomologyPresentation present(const ChainComplex& C, const std::set<int>& degrees);

// Vector on the degree-j generators, extracted from or embedded into the full module.
Vec restrict_to(const GradedModule& M, int j, const Vec& full);
Vec extend_from(const GradedModule& M, int j, const Vec& local);

struct DegreeMap {
  int src_degree = 0, tgt_degree = 0;
  IntMatrix matrix;  // target homology coordinates x source homology generators
  bool injective = false, surjective = false, iso = false, zero = false;
};

struct InducedMap {
  std::map<int, DegreeMap> by_degree;  // keyed by source degree
};

// Checks that f is a (graded) chain map: f∂₁ − (−1)^{deg f} ∂₂f = 0.
bool is_chain_map(const GradedMap& f, const ChainComplex& A, const ChainComplex& B);
InducedMap induced_on_homology(const GradedMap& f, const ChainComplex& A, const ChainComplex& B,
                               const HomologyPresentation& PA, const HomologyPresentation& PB,
                               const std::set<int>& src_degrees);
InducedMap induced_on_homology(const GradedMap& f, const ChainComplex& A, const ChainComplex& B,
                               const std::set<int>& src_degrees);

ChainComplex direct_sum(const ChainComplex& A, const ChainComplex& B, const std::string& pa = "0:",
                        const std::string& pb = "1:");
// Cone on f : A → B of degree −1: total A ⊕ B with differential [[∂_A, 0], [f, ∂_B]].
ChainComplex cone(const GradedMap& f, const ChainComplex& A, const ChainComplex& B, const std::string& pa = "0:",
                  const std::string& pb = "1:");

struct TensorProduct {
  ChainComplex complex;
  std::optional<IntMatrix> u_left, u_right;  // U₁⊗1 and 1⊗U₂
  std::optional<IntMatrix> y_left, y_right;  // Y₁⊗1 and (−1)^{|a|} 1⊗Y₂
};
TensorProduct tensor(const ChainComplex& C1, const ChainComplex& C2);

// f − g = ∂K + (−1)^{deg f} K∂
bool verify_homotopy(const GradedMap& f, const GradedMap& g, const GradedMap& K, const ChainComplex& A,
                     const ChainComplex& B);

// A sequence of consecutive chain maps C_0 → C_1 → ... ; exactness on homology at
// an interior position, at a given degree of that complex.
struct MapSequence {
  std::vector<ChainComplex> complexes;
  std::vector<GradedMap> maps;  // maps[i] : complexes[i] → complexes[i+1]
};
bool verify_exact_at(const MapSequence& seq, std::size_t position, const std::set<int>& degrees);

// Short exact sequence 0 → A → B → C → 0 and its long exact sequence.
struct ShortExact {
  std::string tag;
  ChainComplex A, B, C;
  GradedMap f, g;
};

struct LesNode {
  std::string where;  // "A", "B" or "C"
  int degree = 0;
  bool safe = false;
  bool exact = false;
};

struct LesCertificate {
  std::string tag;
  std::vector<LesNode> nodes;
  std::vector<int> chain_level_checked;  // B-degrees where 0→A→B→C→0 was verified
  bool chain_level_ok = true;
  bool composition_ok = true;
  std::size_t safe_nodes() const;
  bool ok() const;  // every safe node exact and the chain level verified
};

// Snake-lemma connecting map H_j(C) → H_{j−1−deg f−deg g}(A), as a matrix in presentation coordinates.
IntMatrix connecting_map(const ShortExact& s, const HomologyPresentation& PA, const HomologyPresentation& PC, int j);
LesCertificate certify_les(const ShortExact& s, int lo, int hi);

}  // namespace floer
