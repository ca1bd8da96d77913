#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "askey/christoffel.hpp"
#include "askey/errors.hpp"
#include "askey/operators.hpp"
#include "askey/report.hpp"

namespace askey {

namespace {

using Clock = std::chrono::steady_clock;
using Check = std::function<VerificationOutcome(const ParamBinding&)>;

void bump(ClosedForm& cf, const std::string& constant) {
  if (constant == "beta") {
    cf.beta += 1;
  } else if (constant == "beta_F") {
    cf.beta_F += 1;
  } else if (constant == "D") {
    if (cf.D) *cf.D += 1;
  } else {
    const std::size_t k = static_cast<std::size_t>(std::stoi(constant.substr(5)));
    cf.alpha.at(k) += 1;
  }
}

FamilyDescriptor with_mutations(const FamilyDescriptor& base, const std::vector<Mutation>& ms) {
  FamilyDescriptor f = base;
  for (const Mutation& m : ms) {
    if (m.family != f.id) continue;
    auto inner = f.closed_form;
    const std::string c = m.constant;
    f.closed_form = [inner, c](const ParamBinding& p, int n) {
      ClosedForm cf = inner(p, n);
      bump(cf, c);
      return cf;
    };
  }
  return f;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Moves every slot by the same small real rational, which keeps conjugate
/// pairs conjugate.
ParamBinding perturb(const FamilyDescriptor& f, const ParamBinding& p, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const long num = 1 + static_cast<long>(rng() % 97);
    const long den = 1000 + static_cast<long>(rng() % 1000);
    const ExactScalar eps = ExactScalar::frac(num, den);
    ParamBinding out = p;
    for (auto& [slot, v] : out.values) v += eps;
    try {
      f.validate(out);
      return out;
    } catch (const Error&) {
    }
  }
  throw ZeroDenominator("no admissible perturbation of " + p.digest());
}

class TaskRunner {
 public:
  TaskRunner(const FamilyDescriptor& f, std::size_t index, const ParamBinding& p, Suite suite, std::uint64_t seed)
      : f_(f), index_(index), p_(p), suite_(suite), rng_(seed ^ fnv1a(p.digest() + suite_name(suite))) {}

  void add(const std::string& check, int n, const Check& fn) {
    const auto start = Clock::now();
    RunRecord r;
    r.family = f_.id;
    r.binding_index = index_;
    r.binding = p_.digest();
    r.suite = suite_;
    r.check = check;
    r.n = n;
    const VerificationOutcome o = guarded(fn);
    r.status = o.status;
    r.detail = o.detail;
    r.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    records.push_back(std::move(r));
  }

  void skip(const std::string& check, int n, const std::string& why) {
    add(check, n, [why](const ParamBinding&) { return VerificationOutcome::skipped(why); });
  }

  std::vector<RunRecord> records;

 private:
  VerificationOutcome guarded(const Check& fn) {
    ParamBinding current = p_;
    std::string note;
    for (int attempt = 0;; ++attempt) {
      try {
        VerificationOutcome o = fn(current);
        if (!note.empty()) o.detail = note + (o.detail.empty() ? "" : "; " + o.detail);
        return o;
      } catch (const ZeroDenominator& e) {
        if (attempt == 3) return VerificationOutcome::fail(std::string("zero denominator after retries: ") + e.what());
        try {
          current = perturb(f_, current, rng_);
        } catch (const Error& pe) {
          return VerificationOutcome::fail(pe.what());
        }
        note = std::string(e.what()) + "; retried at " + current.digest();
      } catch (const NonPhysicalBinding& e) {
        return VerificationOutcome::skipped(e.what());
      } catch (const NonRealParameter& e) {
        return VerificationOutcome::skipped(e.what());
      } catch (const std::exception& e) {
        return VerificationOutcome::fail(e.what());
      }
    }
  }

  const FamilyDescriptor& f_;
  std::size_t index_;
  ParamBinding p_;
  Suite suite_;
  std::mt19937_64 rng_;
};

VerificationOutcome from_bool(bool ok, const std::string& what) {
  return ok ? VerificationOutcome::pass() : VerificationOutcome::fail(what);
}

void run_basic(TaskRunner& t, const FamilyDescriptor& f, int n_max) {
  t.add(f.trivial_phi() ? "trivial-phi" : "phi", -1, [&](const ParamBinding& p) { return verify_phi(f, p); });
  for (int n = 0; n <= n_max; ++n) {
    t.add("leading", n, [&, n](const ParamBinding& p) {
      return from_bool(leading_coefficient_check(f, p, n), "leading eta coefficient differs from c_n");
    });
    t.add("eigen", n, [&, n](const ParamBinding& p) { return verify_eigen(f, p, n); });
    if (f.trivial_phi()) {
      t.skip("diagonal", n, "trivial Phi = 1");
    } else {
      t.add("diagonal", n, [&, n](const ParamBinding& p) {
        return from_bool(diagonal_nonvanishing(f, p, n), "beta_n alpha_{n,0} = 0");
      });
    }
  }
}

void run_operators(TaskRunner& t, const FamilyDescriptor& f, int n_max) {
  if (f.is_idqm()) {
    t.add("prop3", -1, [&](const ParamBinding& p) { return verify_prop3(f, p, 10); });
  } else {
    t.skip("prop3", -1, "ordinary QM");
  }
  for (int n = 1; n <= n_max; ++n) {
    t.add("shift", n, [&, n](const ParamBinding& p) { return verify_shift_relations(f, p, n); });
  }
  for (int n = 0; n + 2 <= n_max; ++n) {
    t.add("double-forward", n, [&, n](const ParamBinding& p) { return verify_double_forward(f, p, n); });
  }
}

void run_christoffel(TaskRunner& t, const FamilyDescriptor& f, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    if (f.trivial_phi()) {
      t.skip("expansion", n, "trivial Phi = 1");
      t.skip("coefficients", n, "trivial Phi = 1");
      continue;
    }
    t.add("expansion", n, [&, n](const ParamBinding& p) { return verify_expansion(f, p, n); });
    t.add("coefficients", n, [&, n](const ParamBinding& p) { return compare_coefficients(f, p, n); });
  }
}

void run_single_shift(TaskRunner& t, const FamilyDescriptor& f, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    if (f.id != FamilyId::AW) {
      t.skip("single-shift", n, "Askey-Wilson only");
      continue;
    }
    t.add("single-shift", n, [n](const ParamBinding& p) {
      VerificationOutcome acc = VerificationOutcome::skipped("");
      std::string skipped;
      for (int j = 1; j <= 4; ++j) {
        VerificationOutcome o;
        try {
          o = single_shift_aw(p, j, n);
        } catch (const NonRealParameter& e) {
          o = VerificationOutcome::skipped(e.what());
          skipped += (skipped.empty() ? "" : "; ") + std::string(e.what());
        }
        if (o.failed()) o.detail = "j=" + std::to_string(j) + ": " + o.detail;
        merge(acc, o);
      }
      if (acc.status == Status::Skipped) acc.detail = skipped;
      if (acc.passed() && !skipped.empty()) acc.detail = "skipped " + skipped;
      return acc;
    });
    t.add("composition", n, [n](const ParamBinding& p) { return composition_check_aw(p, n); });
  }
}

void run_theorem4(TaskRunner& t, const FamilyDescriptor& f, int n_max) {
  for (int n = 0; n + 2 <= n_max; ++n) {
    t.add("theorem4", n, [&, n](const ParamBinding& p) { return verify_theorem4(f, p, n); });
  }
}

void run_theorem8(TaskRunner& t, const FamilyDescriptor& f, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    t.add("theorem8", n, [&, n](const ParamBinding& p) { return verify_theorem8(f, p, n); });
  }
}

void run_numeric(TaskRunner& t, const FamilyDescriptor& f, int n_max, const numeric::NumericConfig& cfg) {
  t.add("weight-ratio", -1, [&](const ParamBinding& p) {
    return numeric::weight_ratio_check(f, p, numeric::default_samples(f, p), cfg);
  });
  const int top = std::min(4, n_max);
  for (int n = 0; n <= top; ++n) {
    t.add("gram", n, [&, n, top](const ParamBinding& p) {
      VerificationOutcome acc = VerificationOutcome::pass();
      for (int m = 0; m <= top; ++m) merge(acc, numeric::orthogonality_check(f, p, n, m, cfg));
      return acc;
    });
  }
  for (int n = 0; n <= std::min(3, n_max); ++n) {
    t.add("christoffel-gram", n, [&, n](const ParamBinding& p) {
      VerificationOutcome acc = VerificationOutcome::pass();
      for (int m = 0; m <= std::min(3, n_max); ++m) {
        merge(acc, numeric::christoffel_orthogonality_check(f, p, n, m, cfg));
      }
      return acc;
    });
  }
}

struct Task {
  std::size_t family_slot;
  std::size_t binding_index;
  ParamBinding binding;
  Suite suite;
  bool unsupported = false;
};

}  // namespace

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [s](const RunRecord& r) { return r.status == s; }));
}

VerificationReport run(const SuiteSpec& spec) {
  validate(spec);
  std::vector<FamilyId> fams = spec.families;
  std::sort(fams.begin(), fams.end());
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
  std::vector<FamilyDescriptor> descriptors;
  for (FamilyId id : fams) descriptors.push_back(with_mutations(family(id), spec.mutations));

  std::vector<Task> tasks;
  for (std::size_t fi = 0; fi < descriptors.size(); ++fi) {
    const FamilyDescriptor& f = descriptors[fi];
    std::vector<ParamBinding> explicit_bindings;
    for (const ParamBinding& p : spec.bindings) {
      if (p.family == f.id) explicit_bindings.push_back(p);
    }
    for (Suite s : spec.suites) {
      std::vector<ParamBinding> list = explicit_bindings;
      if (list.empty()) list = s == Suite::Numeric ? numeric::numeric_bindings(f.id) : f.default_bindings();
      if (s == Suite::Numeric && !numeric::numeric_supported(f.id)) {
        tasks.push_back({fi, 0, f.default_bindings().front(), s, true});
        continue;
      }
      for (std::size_t bi = 0; bi < list.size(); ++bi) tasks.push_back({fi, bi, list[bi], s, false});
    }
  }

  std::vector<std::vector<RunRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      const FamilyDescriptor& f = descriptors[task.family_slot];
      TaskRunner t(f, task.binding_index, task.binding, task.suite, spec.seed);
      switch (task.suite) {
        case Suite::Basic:
          run_basic(t, f, spec.n_max);
          break;
        case Suite::Christoffel:
          run_christoffel(t, f, spec.n_max);
          break;
        case Suite::SingleShift:
          run_single_shift(t, f, spec.n_max);
          break;
        case Suite::Operators:
          run_operators(t, f, spec.n_max);
          break;
        case Suite::Theorem4:
          run_theorem4(t, f, spec.n_max);
          break;
        case Suite::Theorem8:
          run_theorem8(t, f, spec.n_max);
          break;
        case Suite::Numeric:
          if (task.unsupported) {
            t.skip("numeric", -1, "no numeric weight model for " + f.tag);
          } else {
            run_numeric(t, f, spec.n_max, spec.numeric);
          }
          break;
      }
      results[i] = std::move(t.records);
    }
  };
  unsigned jobs = spec.jobs != 0 ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  VerificationReport report;
  report.spec = spec;
  for (auto& chunk : results) {
    for (auto& r : chunk) report.runs.push_back(std::move(r));
  }
  std::stable_sort(report.runs.begin(), report.runs.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.binding_index < b.binding_index;
  });
  return report;
}

}  // namespace askey
