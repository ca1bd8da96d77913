#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "askey/errors.hpp"
#include "askey/report.hpp"

namespace askey {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Drops a trailing "# ..." or "; ..." comment that follows whitespace.
std::string strip_comment(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '#' || s[i] == ';') && (s[i - 1] == ' ' || s[i - 1] == '\t')) return s.substr(0, i);
  }
  return s;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": expected an integer, got '" + text + "'");
  }
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": expected a number, got '" + text + "'");
  }
}

const std::set<std::string>& mutable_constants() {
  static const std::set<std::string> c{"alpha0", "alpha1", "alpha2", "alpha3", "alpha4", "beta", "beta_F", "D"};
  return c;
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s{Suite::Basic,    Suite::Christoffel, Suite::SingleShift, Suite::Operators,
                                    Suite::Theorem4, Suite::Theorem8,    Suite::Numeric};
  return s;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::Basic:
      return "basic";
    case Suite::Christoffel:
      return "christoffel";
    case Suite::SingleShift:
      return "single-shift";
    case Suite::Operators:
      return "operators";
    case Suite::Theorem4:
      return "theorem4";
    case Suite::Theorem8:
      return "theorem8";
    case Suite::Numeric:
      return "numeric";
  }
  return "?";
}

std::vector<Suite> parse_suites(const std::string& text) {
  if (trim(text) == "all") return all_suites();
  std::vector<Suite> out;
  for (const std::string& name : split_list(text)) {
    auto it = std::find_if(all_suites().begin(), all_suites().end(),
                           [&](Suite s) { return name == suite_name(s); });
    if (it == all_suites().end()) throw ConfigError("unknown suite '" + name + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  return out;
}

std::vector<FamilyId> parse_families(const std::string& text) {
  std::vector<FamilyId> out;
  if (trim(text) == "all") {
    for (const FamilyDescriptor& f : catalog()) out.push_back(f.id);
    return out;
  }
  for (const std::string& tag : split_list(text)) out.push_back(family(tag).id);
  return out;
}

Mutation parse_mutation(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("mutation '" + text + "' is not FAMILY:CONSTANT");
  return {family(trim(text.substr(0, colon))).id, trim(text.substr(colon + 1))};
}

SuiteSpec default_spec() {
  SuiteSpec s;
  s.families = parse_families("all");
  s.suites = all_suites();
  return s;
}

void validate(const SuiteSpec& spec) {
  if (spec.suites.empty()) throw ConfigError("no suites selected");
  if (spec.families.empty()) throw ConfigError("no families selected");
  if (spec.n_max < 2) throw ConfigError("n_max must be at least 2");
  numeric::validate(spec.numeric);
  for (const Mutation& m : spec.mutations) {
    const FamilyDescriptor& f = family(m.family);
    if (!mutable_constants().count(m.constant)) throw ConfigError("unknown constant '" + m.constant + "'");
    if (!f.closed_form) throw ConfigError(f.tag + " has no printed constants to mutate");
    if (m.constant.rfind("alpha", 0) == 0 && std::stoi(m.constant.substr(5)) > f.m) {
      throw ConfigError(f.tag + " has no " + m.constant);
    }
  }
}

SuiteSpec parse_config(std::istream& in, const std::string& source) {
  SuiteSpec spec = default_spec();
  bool families_given = false;
  std::vector<FamilyId> sectioned;

  std::string section;
  int section_line = 0;
  std::map<std::string, std::string> slots;
  FamilyId current{};
  auto where = [&](int line) { return source + ":" + std::to_string(line) + ": "; };
  auto flush = [&] {
    if (section.rfind("family.", 0) != 0) return;
    try {
      spec.bindings.push_back(make_binding(current, slots));
    } catch (const Error& e) {
      throw ConfigError(where(section_line) + "[" + section + "]: " + e.what());
    }
    if (std::find(sectioned.begin(), sectioned.end(), current) == sectioned.end()) sectioned.push_back(current);
    slots.clear();
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where(line_no) + "unterminated section header");
      flush();
      section = trim(line.substr(1, line.size() - 2));
      section_line = line_no;
      if (section.rfind("family.", 0) == 0) {
        try {
          current = family(section.substr(7)).id;
        } catch (const Error& e) {
          throw ConfigError(where(line_no) + e.what());
        }
      } else if (section != "suite" && section != "numeric") {
        throw ConfigError(where(line_no) + "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where(line_no) + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (section.empty()) throw ConfigError("key outside a section");
      if (section == "suite") {
        if (key == "families") {
          spec.families = parse_families(value);
          families_given = true;
        } else if (key == "suites") {
          spec.suites = parse_suites(value);
        } else if (key == "n_max") {
          spec.n_max = static_cast<int>(parse_int(value, key));
        } else if (key == "seed") {
          spec.seed = static_cast<std::uint64_t>(parse_int(value, key));
        } else if (key == "jobs") {
          spec.jobs = static_cast<unsigned>(parse_int(value, key));
        } else if (key == "mutate") {
          for (const std::string& m : split_list(value)) spec.mutations.push_back(parse_mutation(m));
        } else {
          throw ConfigError("unknown key '" + key + "' in [suite]");
        }
      } else if (section == "numeric") {
        if (key == "precision") {
          if (value == "double") {
            spec.numeric.precision = numeric::Precision::Double;
          } else if (value == "extended") {
            spec.numeric.precision = numeric::Precision::Extended;
          } else {
            throw ConfigError("precision must be double or extended");
          }
        } else if (key == "qpoch_truncation") {
          spec.numeric.qpoch_truncation = static_cast<int>(parse_int(value, key));
        } else if (key == "quad_points") {
          spec.numeric.quad_points = static_cast<int>(parse_int(value, key));
        } else if (key == "tol_rel") {
          spec.numeric.tol_rel = parse_double(value, key);
        } else {
          throw ConfigError("unknown key '" + key + "' in [numeric]");
        }
      } else {
        if (slots.count(key)) throw ConfigError("duplicate key '" + key + "'");
        slots[key] = value;
      }
    } catch (const Error& e) {
      throw ConfigError(where(line_no) + e.what());
    }
  }
  flush();
  if (!families_given && !sectioned.empty()) spec.families = sectioned;
  try {
    validate(spec);
  } catch (const Error& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return spec;
}

}  // namespace askey
