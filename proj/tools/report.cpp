#include "report.hpp"

namespace floer::cli {

namespace {

std::string compact(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

std::string underscored(std::string s) {
  for (char& c : s)
    if (c == ' ' || c == '\t') c = '_';
  return s;
}

}  // namespace

void Report::section(const std::string& name) { rows_.push_back({Row::section, name, "", {}, 0, false}); }

void Report::table(const std::string& name, const HomologyTable& T, int lo, int hi) {
  for (int j = lo; j <= hi; ++j) rows_.push_back({Row::group, name, T.at(j).str(), {}, j, T.safe.count(j) > 0});
}

void Report::check(const std::string& tag, bool ok, const std::string& detail) {
  rows_.push_back({Row::check, tag, detail, {}, 0, ok});
  if (!ok) ++failures_;
}

void Report::record(const std::string& name, const std::vector<std::pair<std::string, std::string>>& fields) {
  rows_.push_back({Row::record, name, "", fields, 0, false});
}

void Report::render(std::ostream& os, Format f) const {
  for (const Row& r : rows_) {
    switch (r.kind) {
      case Row::section:
        if (f == Format::text)
          os << "[" << r.a << "]\n";
        else
          os << "section=" << r.a << '\n';
        break;
      case Row::group:
        if (f == Format::text)
          os << "  " << r.a << ": H_" << r.degree << " = " << r.b << (r.flag ? "" : "  (unsafe)") << '\n';
        else
          os << "table=" << r.a << " degree=" << r.degree << " group=" << compact(r.b)
             << " safe=" << (r.flag ? "yes" : "no") << '\n';
        break;
      case Row::check:
        if (f == Format::text)
          os << (r.flag ? "PASS " : "FAIL ") << r.a << (r.b.empty() ? "" : ": " + r.b) << '\n';
        else
          os << "check=" << r.a << " result=" << (r.flag ? "pass" : "fail")
             << (r.b.empty() ? "" : " detail=" + underscored(r.b)) << '\n';
        break;
      case Row::record:
        if (f == Format::text) {
          os << r.a << ':';
          for (std::size_t i = 0; i < r.fields.size(); ++i)
            os << (i ? ", " : " ") << r.fields[i].first << '=' << r.fields[i].second;
          os << '\n';
        } else {
          os << "record=" << r.a;
          for (const auto& [k, v] : r.fields) os << ' ' << k << '=' << underscored(v);
          os << '\n';
        }
        break;
    }
  }
  if (f == Format::text)
    os << (failures_ == 0 ? "all checks passed\n" : std::to_string(failures_) + " check(s) failed\n");
  else
    os << "failures=" << failures_ << '\n';
}

}  // namespace floer::cli
