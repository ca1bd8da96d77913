#include <algorithm>
#include <regex>
#include <sstream>

#include "askey/family/representation.hpp"
#include "common.hpp"

namespace askey {

using detail::S;

const ExactScalar& ParamBinding::at(const std::string& slot) const {
  auto it = values.find(slot);
  if (it == values.end()) {
    throw UnboundParameter(family_tag(family) + ": parameter '" + slot + "' is not bound");
  }
  return it->second;
}

ExactScalar ParamBinding::s() const {
  if (!q_sqrt) throw UnboundParameter(family_tag(family) + ": q is not bound");
  return *q_sqrt;
}

ExactScalar ParamBinding::w() const {
  if (!phi_unit) throw UnboundParameter(family_tag(family) + ": phi is not bound");
  return *phi_unit;
}

std::string ParamBinding::digest() const {
  std::ostringstream out;
  out << family_tag(family) << '{';
  bool first = true;
  for (const auto& [k, v] : values) {
    if (!first) out << ',';
    first = false;
    out << k << '=' << v.to_string();
  }
  if (q_sqrt) out << (first ? "" : ",") << "s=" << q_sqrt->to_string(), first = false;
  if (phi_unit) out << (first ? "" : ",") << "w=" << phi_unit->to_string();
  out << '}';
  return out.str();
}

const std::vector<FamilyDescriptor>& catalog() {
  static const std::vector<FamilyDescriptor> all = [] {
    using namespace detail;
    std::vector<FamilyDescriptor> v{make_cH(),   make_MP(),  make_W(),   make_cdH(), make_AW(),
                                    make_cdqH(), make_ASC(), make_cbqHe(), make_cqHe(), make_cqJ(),
                                    make_cqL(),  make_cqH(), make_qMP(), make_He(),  make_L(),
                                    make_J(),    make_B(),   make_pJ()};
    return v;
  }();
  return all;
}

const FamilyDescriptor& family(FamilyId id) {
  for (const auto& f : catalog()) {
    if (f.id == id) return f;
  }
  throw Error("unknown family id");
}

const FamilyDescriptor& family(std::string_view tag) {
  std::string t(tag);
  // U+1D45E MATHEMATICAL ITALIC SMALL Q
  const std::string italic_q = "\xF0\x9D\x91\x9E";
  for (std::size_t pos; (pos = t.find(italic_q)) != std::string::npos;) t.replace(pos, italic_q.size(), "q");
  for (const auto& f : catalog()) {
    if (f.tag == t) return f;
  }
  throw ConfigError("unknown family '" + std::string(tag) + "'");
}

std::string family_tag(FamilyId id) {
  static const char* tags[] = {"cH",  "MP",  "W",  "cdH", "AW", "cdqH", "ASC", "cbqHe", "cqHe",
                               "cqJ", "cqL", "cqH", "qMP", "He", "L",    "J",   "B",     "pJ"};
  return tags[static_cast<int>(id)];
}

ExactScalar pythagorean_unit(long m, long n) {
  if (m == 0 && n == 0) throw InvalidBinding("Pythagorean pair (0,0)");
  const long d = m * m + n * n;
  return {Rational(m * m - n * n, d) , Rational(2 * m * n, d)};
}

bool conjugation_closed(const std::vector<ExactScalar>& v) {
  std::vector<bool> used(v.size(), false);
  for (const auto& a : v) {
    const ExactScalar c = a.conj();
    bool found = false;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!used[k] && v[k] == c) {
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

Rational exact_sqrt(const Rational& r, const std::string& what) {
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  if (sgn(num) < 0) throw InvalidBinding(what + " is negative");
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (rn * rn != num || rd * rd != den) {
    throw InvalidBinding(what + " is not the square of a rational; give q as s=<rational>");
  }
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

ExactScalar parse_q(const std::string& text) {
  static const std::regex s_form(R"(^\s*s\s*=\s*(.+)$)");
  std::smatch m;
  if (std::regex_match(text, m, s_form)) return ExactScalar::parse(m[1].str());
  const ExactScalar q = ExactScalar::parse(text);
  if (!q.is_real()) throw InvalidBinding("q must be real");
  return ExactScalar(exact_sqrt(q.re(), "q"));
}

ExactScalar parse_phi(const std::string& text) {
  static const std::regex pair(R"(^\s*m\s*=\s*(-?\d+)\s*,\s*n\s*=\s*(-?\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pair)) {
    return pythagorean_unit(std::stol(m[1].str()), std::stol(m[2].str()));
  }
  throw InvalidBinding("phi must be given as m=<int>,n=<int>: '" + text + "'");
}

}  // namespace

ParamBinding make_binding(FamilyId id, const std::map<std::string, std::string>& slots) {
  const FamilyDescriptor& f = family(id);
  ParamBinding p;
  p.family = id;
  for (const auto& [key, value] : slots) {
    if (key == "q") {
      p.q_sqrt = parse_q(value);
    } else if (key == "s") {
      p.q_sqrt = ExactScalar::parse(value);
    } else if (key == "phi") {
      p.phi_unit = parse_phi(value);
    } else if (key == "w") {
      p.phi_unit = ExactScalar::parse(value);
    } else if (std::find(f.slots.begin(), f.slots.end(), key) != f.slots.end()) {
      p.values[key] = ExactScalar::parse(value);
    } else {
      throw InvalidBinding(f.tag + ": unknown parameter '" + key + "'");
    }
  }
  f.validate(p);
  return p;
}

bool leading_coefficient_check(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  const std::vector<ExactScalar> c = to_eta_basis(f, p, f.build(p, n));
  if (c.size() != static_cast<std::size_t>(n) + 1) return false;
  return c.back() == f.leading(p, n);
}

ExactScalar eval_at_special_point(const FamilyDescriptor& f, const ParamBinding& p, int n, int j) {
  const auto zeros = f.zeros(p);
  if (j < 0 || j >= static_cast<int>(zeros.size())) {
    throw IndexOutOfRange(f.tag + ": zero index " + std::to_string(j) + " out of range");
  }
  return eval_rep(f.build(p, n), zeros[static_cast<std::size_t>(j)].rep);
}

}  // namespace askey
