#pragma once
// Accumulates a command's results and renders them as text or as
// line-oriented key=value records. Ordering is the insertion order.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "floer/chain.hpp"

namespace floer::cli {

enum class Format { text, machine };

class Report {
 public:
  void section(const std::string& name);
  // every degree in [lo, hi], trivial ones included
  void table(const std::string& name, const HomologyTable& T, int lo, int hi);
  void check(const std::string& tag, bool ok, const std::string& detail = "");
  // "name: k=v, k=v" as text, "record=name k=v k=v" as machine output
  void record(const std::string& name, const std::vector<std::pair<std::string, std::string>>& fields);

  bool all_passed() const { return failures_ == 0; }
  void render(std::ostream& os, Format f) const;

 private:
  struct Row {
    enum Kind { section, group, check, record } kind;
    std::string a, b;  // meaning depends on kind
    std::vector<std::pair<std::string, std::string>> fields;
    int degree = 0;
    bool flag = false;
  };
  std::vector<Row> rows_;
  int failures_ = 0;
};

}  // namespace floer::cli
