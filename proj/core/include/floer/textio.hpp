#pragma once
// Line-oriented text format for complexes, filtered complexes, balanced
// components and connected-sum map files. '#' starts a comment.
//
//   complex <name> [filtered]
//     ring Z | F<p>
//     mod <c>
//     gen <id> <degree>
//     d <src> <dst> <coeff>         (also u, y)
//     u                             (a zero U-action; likewise y)
//     dU <src> <dst> <coeff> <exp>  (filtered only)
//   end
//
//   balanced <name>
//     ring Z
//     part o|s|u
//       gen <id> <degree>
//     map d:o->s                    (d, db, u, ub with o/s/u endpoints)
//       <src> <dst> <coeff>
//   end
//
//   summaps <name>
//     ring Z
//     gen <id> <degree>             (C_#)
//     d <src> <dst> <coeff>
//     map V0 <degree>               (V0 V1 V0' V1' H A B C D)
//       <src> <dst> <coeff>
//   end

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "floer/connsum.hpp"

namespace floer {

struct MapSpec {
  int degree = 0;
  std::vector<std::tuple<std::string, std::string, Int>> entries;  // src, dst, coeff
  bool operator==(const MapSpec&) const = default;
};

// Sum maps before their product-side generator names are resolved.
struct SumMapsFile {
  ChainComplex sharp;
  std::map<std::string, MapSpec> maps;  // keys V0 V1 V0' V1' H A B C D
};

using TextObject = std::variant<ChainComplex, FilteredComplex, BalancedComponents, SumMapsFile>;

struct NamedObject {
  std::string name;
  TextObject object;
};

// Every block in order. Throws ParseError(line) on grammar errors and
// ValidationError naming the generator pair on a degree violation.
std::vector<NamedObject> parse_text(const std::string& text);
std::vector<NamedObject> parse_file(const std::string& path);

std::string print(const std::string& name, const ChainComplex& C);
std::string print(const std::string& name, const FilteredComplex& F);
std::string print(const std::string& name, const BalancedComponents& B);
std::string print(const std::string& name, const SumMapsFile& S);
std::string print(const NamedObject& o);
std::string print(const std::vector<NamedObject>& objects);

// Looks up product-side names; missing ones throw ValidationError.
ConnSumMaps resolve(const SumMapsFile& f, const ChainComplex& product);
SumMapsFile unresolve(const ConnSumMaps& m);

}  // namespace floer
