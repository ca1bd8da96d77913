#include <iomanip>
#include <json.hpp>
#include <map>
#include <sstream>

#include "askey/numeric/kernels.hpp"
#include "askey/report.hpp"

namespace askey {

std::string to_structured(const VerificationReport& report) {
  using json = nlohmann::ordered_json;
  const SuiteSpec& s = report.spec;
  json spec;
  spec["families"] = json::array();
  for (FamilyId id : s.families) spec["families"].push_back(family_tag(id));
  spec["suites"] = json::array();
  for (Suite x : s.suites) spec["suites"].push_back(suite_name(x));
  spec["n_max"] = s.n_max;
  spec["seed"] = s.seed;
  spec["numeric"] = {{"precision", s.numeric.precision == numeric::Precision::Double ? "double" : "extended"},
                     {"qpoch_truncation", s.numeric.qpoch_truncation},
                     {"quad_points", s.numeric.quad_points},
                     {"tol_rel", s.numeric.tol_rel}};
  spec["mutations"] = json::array();
  for (const Mutation& m : s.mutations) spec["mutations"].push_back(family_tag(m.family) + ":" + m.constant);

  json runs = json::array();
  for (const RunRecord& r : report.runs) {
    json j;
    j["family"] = family_tag(r.family);
    j["binding"] = r.binding;
    j["suite"] = suite_name(r.suite);
    j["check"] = r.check;
    j["n"] = r.n < 0 ? json(nullptr) : json(r.n);
    j["status"] = status_name(r.status);
    if (r.status == Status::Fail) {
      j["residual"] = r.detail;
    } else if (r.status == Status::Skipped) {
      j["reason"] = r.detail;
    } else if (!r.detail.empty()) {
      j["note"] = r.detail;
    }
    runs.push_back(std::move(j));
  }
  json doc;
  doc["spec"] = std::move(spec);
  doc["summary"] = {{"pass", report.count(Status::Pass)},
                    {"fail", report.count(Status::Fail)},
                    {"skipped", report.count(Status::Skipped)}};
  doc["runs"] = std::move(runs);
  return doc.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  struct Tally {
    std::size_t pass = 0, fail = 0, skipped = 0;
    double seconds = 0;
  };
  std::map<std::pair<FamilyId, Suite>, Tally> tallies;
  for (const RunRecord& r : report.runs) {
    Tally& t = tallies[{r.family, r.suite}];
    t.seconds += r.wall_time;
    if (r.status == Status::Pass) ++t.pass;
    if (r.status == Status::Fail) ++t.fail;
    if (r.status == Status::Skipped) ++t.skipped;
  }
  out << std::left << std::setw(7) << "family" << std::setw(14) << "suite" << std::right << std::setw(7) << "pass"
      << std::setw(7) << "fail" << std::setw(9) << "skipped" << std::setw(11) << "time[s]" << "\n";
  for (const auto& [key, t] : tallies) {
    out << std::left << std::setw(7) << family_tag(key.first) << std::setw(14) << suite_name(key.second) << std::right
        << std::setw(7) << t.pass << std::setw(7) << t.fail << std::setw(9) << t.skipped << std::setw(11)
        << std::fixed << std::setprecision(3) << t.seconds << "\n";
  }
  for (const RunRecord& r : report.runs) {
    if (r.status != Status::Fail) continue;
    out << "FAIL " << family_tag(r.family) << " " << suite_name(r.suite) << " " << r.check;
    if (r.n >= 0) out << " n=" << r.n;
    out << " " << r.binding << "\n     " << r.detail << "\n";
  }
  out << "kernels: " << numeric::isa_name(numeric::active_isa()) << "\n";
  out << "total: " << report.count(Status::Pass) << " pass, " << report.count(Status::Fail) << " fail, "
      << report.count(Status::Skipped) << " skipped\n";
  return out.str();
}

}  // namespace askey
