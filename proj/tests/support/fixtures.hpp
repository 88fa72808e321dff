#pragma once
// Small complexes and helpers shared by the unit and acceptance tests.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "floer/random.hpp"
#include "floer/textio.hpp"

namespace fixture {

using namespace floer;

// one generator in degree 0, ∂ = 0, U = 0
inline ChainComplex point() {
  ChainComplex P(GradedModule({{"e", 0}}));
  P.u = IntMatrix(1, 1);
  return P;
}

// a(1) → b(0) with coefficient c, U = 0
inline ChainComplex arrow(long c) {
  ChainComplex C(GradedModule({{"a", 1}, {"b", 0}}));
  C.add_d("a", "b", c);
  C.u = IntMatrix(2, 2);
  return C;
}

// a(0), b(2), ∂ = 0, U(b) = a
inline ChainComplex u_pair() {
  ChainComplex C(GradedModule({{"a", 0}, {"b", 2}}));
  C.u = IntMatrix(2, 2);
  C.add_u("b", "a", 1);
  return C;
}

// Positions (tgt, src) where an entry of degree k would be homogeneous.
inline std::vector<std::pair<std::size_t, std::size_t>> slots(const GradedModule& M, int k) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < M.size(); ++s)
    for (std::size_t t : M.at(M.degree(s) + k)) out.push_back({t, s});
  return out;
}

// A check tag as a gtest parameter name: letters, digits and underscores only.
inline std::string param_name(const std::string& tag) {
  std::string out;
  for (char c : tag) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (!out.empty() && out.back() != '_') out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

inline std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus(const std::string& file) { return std::string(FLOER_CORPUS_DIR) + "/" + file; }

// Every golden file, sorted by name.
inline std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(FLOER_CORPUS_DIR))
    if (e.path().extension() == ".txt") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
T load_one(const std::string& file) {
  return std::get<T>(parse_file(corpus(file)).at(0).object);
}

}  // namespace fixture
