#include "hcx/runner.hpp"

#include "hcx/errors.hpp"
#include "hcx/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace hcx {
namespace {

constexpr double kCurvatureIdentityTol = 1e-9;
constexpr double kConnectionIdentityTol = 1e-10;
constexpr double kFdTol = 1e-5;
constexpr double kGradStep = 1e-4;
constexpr double kHessStep = 1e-3;

std::string point_text(const Point& p) {
  std::ostringstream os;
  os << '(' << render_value(p[0]) << ", " << render_value(p[1]) << ", " << render_value(p[2]) << ", "
     << render_value(p[3]) << ')';
  return os.str();
}

std::string idx(int a) { return std::to_string(a + 1); }
std::string idx(int a, int b) { return idx(a) + idx(b); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

unsigned worker_count(unsigned requested, std::size_t tasks) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  const unsigned n = worker_count(threads, count);
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

void add_class_fields(Record& rec, const ClassVerdict& v, bool einstein) {
  for (int a = 0; a < 3; ++a) {
    const auto& av = v.alpha[a];
    rec["class.kaehler." + idx(a)] = av.kaehler;
    rec["class.integrable." + idx(a)] = av.integrable;
    rec["class.isotropic_kaehler." + idx(a)] = av.isotropic_kaehler;
    rec["class.main_W." + idx(a)] = av.main_class_W;
    if (av.almost_kaehler) rec["class.almost_kaehler." + idx(a)] = *av.almost_kaehler;
    if (av.norden_W2) rec["class.norden_W2." + idx(a)] = *av.norden_W2;
    if (av.norden_W3) rec["class.norden_W3." + idx(a)] = *av.norden_W3;
  }
  rec["class.in_W"] = v.in_W;
  rec["class.pseudo_hyper_kaehler"] = v.pseudo_hyper_kaehler;
  rec["class.hypercomplex"] = v.hypercomplex;
  rec["class.flat"] = v.flat;
  rec["class.einstein"] = einstein;
}

struct Task {
  std::size_t example = 0;
  std::size_t point = 0;
};

struct TaskOutput {
  std::vector<Record> records;
  std::vector<ClassVerdict> verdicts; // per structure
  std::vector<std::string> errors;
  std::vector<std::string> failures;
};

TaskOutput evaluate_point(const Example& ex, const Point& p, std::size_t point_index, const RunConfig& cfg) {
  TaskOutput out;
  const Tolerances tol = effective_tolerances(ex, cfg);
  const std::string where = ex.id() + " point " + std::to_string(point_index + 1) + " " + point_text(p);
  std::optional<FrameSnapshot> snap;
  try {
    snap = ex.snapshot(p);
  } catch (const Error& e) {
    out.errors.push_back(where + ": " + e.what());
    return out;
  }
  std::optional<FdCheck> fd;
  if (cfg.fd_check && ex.kind() != Construction::Lie) fd = hcx::fd_check(ex, p);

  for (const auto& st : ex.structures()) {
    if (!cfg.structure.empty() && st.name != cfg.structure) continue;
    const std::string swhere = ex.id() + "/" + st.name + " point " + std::to_string(point_index + 1);
    try {
      const PointAnalysis pa = analyze(*snap, st.h, tol.zero);
      const InvariantReport& r = pa.report;
      const ClassVerdict verdict = classify(pa, st.h, tol);
      std::optional<TotallyRealCurvatures> tr;
      try {
        tr = totally_real_curvatures(*snap, st.h, tol.zero);
      } catch (const NoAdmissibleSection&) {
      }

      Record rec;
      rec["example"] = ex.id();
      rec["structure"] = st.name;
      rec["point"] = point_index + 1;
      for (int i = 0; i < kDim; ++i) rec["u" + idx(i)] = p[i];
      rec["signature"] = ex.eps().to_string();
      rec["construction"] = std::string(construction_name(ex.kind()));
      for (int a = 0; a < 3; ++a) rec["norm_nablaJ." + idx(a)] = r.norms.nablaJ[a];
      for (int a = 0; a < 3; ++a) rec["norm_F." + idx(a)] = r.norms.F[a];
      for (int a = 0; a < 3; ++a) rec["norm_N." + idx(a)] = r.norms.N[a];
      for (int a = 0; a < 3; ++a) rec["norm_theta." + idx(a)] = r.norms.theta[a];
      for (int a = 0; a < 3; ++a) rec["max_F." + idx(a)] = r.max_F[a];
      for (int a = 0; a < 3; ++a) rec["max_N." + idx(a)] = r.max_N[a];
      rec["tau"] = r.scalars.tau;
      for (int a = 0; a < 3; ++a) rec["tau_star." + idx(a)] = r.scalars.tau_star[a];
      for (int a = 0; a < 3; ++a) rec["tau_star_hermitian." + idx(a)] = r.scalars.tau_star_hermitian[a];
      for (int a = 0; a < 3; ++a) rec["tau_star_norden." + idx(a)] = r.scalars.tau_star_norden[a];
      for (int a = 0; a < kDim; ++a)
        for (int b = a + 1; b < kDim; ++b)
          for (int c = 0; c < kDim; ++c)
            for (int d = 0; d < c; ++d) {
              if (a * kDim + b > d * kDim + c) continue;
              rec["R." + idx(a, b) + idx(c, d)] = snap->riemann[a][b][c][d];
            }
      for (int a = 0; a < kDim; ++a)
        for (int b = a; b < kDim; ++b) rec["ricci." + idx(a, b)] = r.scalars.ricci[a][b];
      for (int a = 0; a < kDim; ++a)
        for (int b = a + 1; b < kDim; ++b) rec["sectional." + idx(a, b)] = r.sectional[a][b];
      if (r.constant_curvature) rec["constant_curvature"] = *r.constant_curvature;
      if (tr) {
        rec["nu"] = tr->nu;
        rec["nu_star2"] = tr->nu_star2;
        rec["nu_spread"] = tr->spread;
        rec["totally_real_sections"] = tr->sections.size();
        rec["almost_einstein_residual"] = tr->almost_einstein_residual;
      }
      rec["max_riemann"] = r.max_riemann;
      rec["einstein_residual"] = r.einstein_residual;
      rec["residual.antisym_first"] = r.residuals.antisym_first;
      rec["residual.antisym_last"] = r.residuals.antisym_last;
      rec["residual.pair_symmetry"] = r.residuals.pair_symmetry;
      rec["residual.bianchi"] = r.residuals.bianchi;
      rec["residual.metricity"] = r.residuals.metricity;
      rec["residual.torsion"] = r.residuals.torsion;
      rec["residual.form_route"] = pa.tensors.form_route_residual;
      const bool identities =
          std::max({r.residuals.antisym_first, r.residuals.antisym_last, r.residuals.pair_symmetry,
                    r.residuals.bianchi}) <= kCurvatureIdentityTol &&
          std::max({r.residuals.metricity, r.residuals.torsion, r.residuals.bracket_antisym}) <=
              kConnectionIdentityTol;
      rec["pass.identities"] = identities;
      if (!identities) out.failures.push_back(swhere + ": curvature or connection identity residual too large");
      add_class_fields(rec, verdict, r.einstein);

      bool all_pass = identities;
      if (fd) {
        rec["fd.grad"] = fd->grad;
        rec["fd.hess"] = fd->hess;
        const bool ok = fd->grad <= kFdTol && fd->hess <= kFdTol;
        rec["pass.fd"] = ok;
        if (!ok) out.failures.push_back(swhere + ": jets deviate from finite differences");
        all_pass = all_pass && ok;
      }

      if (cfg.compare) {
        for (const auto& e : ex.expectations(st)) {
          const auto target = e.target(cfg.printed);
          if (!target) continue;
          const double want = target->eval(p);
          const double got = lookup_invariant(rec, *snap, e.key);
          const bool ok = values_match(got, want, tol);
          rec["expected." + e.key] = want;
          rec["delta." + e.key] = std::isfinite(got) ? got - want : got;
          rec["pass." + e.key] = ok;
          if (e.erratum && !cfg.printed && e.printed) {
            const double printed = e.printed->eval(p);
            rec["printed." + e.key] = printed;
            rec["printed_holds." + e.key] = values_match(got, printed, tol);
          }
          if (!ok) {
            out.failures.push_back(swhere + ": " + e.key + " = " + render_value(got) + ", expected " +
                                   render_value(want));
            all_pass = false;
          }
        }
        for (const auto& c : ex.class_expectations(st)) {
          if (!known_class(c.key)) throw ValidationError("unknown class key " + c.key);
          const std::string field = "class." + c.key;
          if (!rec.contains(field)) throw ValidationError("class " + c.key + " not defined for this structure");
          const bool got = rec[field].get<bool>();
          rec["expected.class." + c.key] = c.value;
          rec["pass.class." + c.key] = got == c.value;
          if (got != c.value) {
            out.failures.push_back(swhere + ": class " + c.key + " = " + (got ? "true" : "false") + ", expected " +
                                   (c.value ? "true" : "false"));
            all_pass = false;
          }
        }
      }
      rec["pass"] = all_pass;
      out.records.push_back(std::move(rec));
      out.verdicts.push_back(verdict);
    } catch (const Error& e) {
      out.errors.push_back(swhere + " " + point_text(p) + ": " + e.what());
    }
  }
  return out;
}

struct Evaluation {
  RunResult result;
  /// verdicts[example][structure] over all points (structures in order).
  std::vector<std::vector<std::vector<ClassVerdict>>> verdicts;
};

Evaluation evaluate(const std::vector<Example>& examples, const std::vector<std::vector<Point>>& points,
                    const RunConfig& cfg) {
  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return examples[a].id() < examples[b].id(); });
  std::vector<Task> tasks;
  for (std::size_t e : order)
    for (std::size_t k = 0; k < points[e].size(); ++k) tasks.push_back({e, k});

  std::vector<TaskOutput> outputs(tasks.size());
  parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
    const Task& t = tasks[i];
    outputs[i] = evaluate_point(examples[t.example], points[t.example][t.point], t.point, cfg);
  });

  Evaluation ev;
  ev.verdicts.resize(examples.size());
  for (std::size_t e = 0; e < examples.size(); ++e) ev.verdicts[e].resize(examples[e].structures().size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& o = outputs[i];
    const Example& ex = examples[tasks[i].example];
    for (std::size_t r = 0; r < o.records.size(); ++r) {
      const auto name = o.records[r]["structure"].get<std::string>();
      for (std::size_t s = 0; s < ex.structures().size(); ++s)
        if (ex.structures()[s].name == name) ev.verdicts[tasks[i].example][s].push_back(o.verdicts[r]);
      ev.result.records.push_back(std::move(o.records[r]));
    }
    for (auto& e : o.errors) ev.result.errors.push_back(std::move(e));
    for (auto& f : o.failures) ev.result.failures.push_back(std::move(f));
  }
  return ev;
}

std::vector<Example> compile_examples(const RunConfig& cfg, std::vector<std::string>& errors) {
  std::vector<Example> out;
  auto compile_one = [&](auto&& make, const std::string& label) {
    try {
      out.push_back(make());
    } catch (const UnknownExample& e) {
      errors.push_back(e.what());
    } catch (const ParseError& e) {
      errors.push_back(label + ": " + e.what());
    } catch (const Error& e) {
      errors.push_back(e.what());
    }
  };
  if (!cfg.manifold_file.empty()) {
    compile_one(
        [&] {
          std::ifstream in(cfg.manifold_file);
          if (!in) throw ValidationError(cfg.manifold_file + ": cannot open file");
          std::stringstream ss;
          ss << in.rdbuf();
          return Example::compile(parse_manifold(ss.str()));
        },
        cfg.manifold_file);
    return out;
  }
  const auto ids = cfg.examples.empty() ? list() : cfg.examples;
  for (const auto& id : ids) compile_one([&] { return build(id); }, id);
  return out;
}

bool is_digit_run(const std::string& s, std::size_t from, std::size_t n) {
  if (s.size() != from + n) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (s[i] < '1' || s[i] > '4') return false;
  return true;
}

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::string group_of(const std::string& pass_key) {
  const std::string k = pass_key.substr(5); // after "pass."
  if (k == "identities") return "identities";
  if (k == "fd") return "fd";
  if (has_prefix(k, "class.")) return "classes";
  if (has_prefix(k, "norm_")) return "norms";
  if (has_prefix(k, "tau_star")) return "tau_star";
  return "curvature";
}

} // namespace

int RunResult::exit_code() const {
  if (!errors.empty()) return 2;
  if (!failures.empty()) return 1;
  return 0;
}

Tolerances effective_tolerances(const Example& ex, const RunConfig& cfg) {
  Tolerances t = ex.tolerances();
  if (cfg.tol_zero) t.zero = *cfg.tol_zero;
  if (cfg.tol_match) t.match = *cfg.tol_match;
  return t;
}

std::vector<Point> random_points(const Example& ex, int count, std::uint64_t seed) {
  std::vector<Point> out;
  if (count <= 0) return out;
  std::mt19937_64 rng(seed ^ fnv1a(ex.id()));
  const auto box = ex.box();
  constexpr int kMaxAttempts = 100000;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > kMaxAttempts)
      throw DomainError(ex.id() + ": could not sample points satisfying the domain guard");
    Point p{};
    for (int i = 0; i < kDim; ++i) p[i] = box[i].first + (box[i].second - box[i].first) * unit_interval(rng);
    if (ex.in_domain(p)) out.push_back(p);
  }
  return out;
}

std::vector<Point> sample_points(const Example& ex, const RunConfig& cfg) {
  if (!cfg.points.empty()) {
    for (const auto& p : cfg.points) ex.check_domain(p);
    return cfg.points;
  }
  if (cfg.grid > 0) {
    const auto box = ex.box();
    const int n = cfg.grid;
    std::vector<Point> out;
    auto coord = [&](int axis, int k) {
      return n == 1 ? 0.5 * (box[axis].first + box[axis].second)
                    : box[axis].first + (box[axis].second - box[axis].first) * k / (n - 1);
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const Point p{coord(0, i), coord(1, j), coord(2, k), coord(3, l)};
            if (ex.in_domain(p)) out.push_back(p);
          }
    return out;
  }
  if (cfg.random > 0) return random_points(ex, cfg.random, cfg.seed);
  return ex.default_points();
}

FdCheck fd_check(const Example& ex, const Point& p) {
  if (!ex.metric()) return {};
  const auto& g = *ex.metric();
  const JetMatrix jets = g.components(p);
  auto at = [&](const Point& q) { return values(g.components(q)); };
  auto shifted = [&](int i, double hi, int j, double hj) {
    Point q = p;
    q[i] += hi;
    if (j >= 0) q[j] += hj;
    return q;
  };
  // Central differences with one Richardson step (h and h/2) so truncation
  // error stays far below the comparison tolerance even where the metric
  // varies quickly.
  auto gradient = [&](int k, double h) {
    const Mat4 plus = at(shifted(k, h, -1, 0)), minus = at(shifted(k, -h, -1, 0));
    Mat4 d{};
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) d[i][j] = (plus[i][j] - minus[i][j]) / (2 * h);
    return d;
  };
  const Mat4 centre = at(p);
  auto hessian = [&](int k, int l, double h) {
    Mat4 d{};
    if (k == l) {
      const Mat4 plus = at(shifted(k, h, -1, 0)), minus = at(shifted(k, -h, -1, 0));
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) d[i][j] = (plus[i][j] - 2 * centre[i][j] + minus[i][j]) / (h * h);
    } else {
      const Mat4 pp = at(shifted(k, h, l, h)), pm = at(shifted(k, h, l, -h)), mp = at(shifted(k, -h, l, h)),
                 mm = at(shifted(k, -h, l, -h));
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) d[i][j] = (pp[i][j] - pm[i][j] - mp[i][j] + mm[i][j]) / (4 * h * h);
    }
    return d;
  };
  FdCheck out;
  for (int k = 0; k < kDim; ++k) {
    const Mat4 d1 = gradient(k, kGradStep), d2 = gradient(k, kGradStep / 2);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        const double fd = (4 * d2[i][j] - d1[i][j]) / 3;
        out.grad = std::max(out.grad, std::abs(fd - jets[i][j].grad[k]));
      }
    for (int l = k; l < kDim; ++l) {
      const Mat4 h1 = hessian(k, l, kHessStep), h2 = hessian(k, l, kHessStep / 2);
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          const double fd = (4 * h2[i][j] - h1[i][j]) / 3;
          out.hess = std::max(out.hess, std::abs(fd - jets[i][j].hess[k][l]));
        }
    }
  }
  return out;
}

bool known_invariant(const std::string& key) {
  static const std::set<std::string> scalars = {"tau",      "constant_curvature",       "max_riemann",
                                                "nu",       "nu_star2",                 "almost_einstein_residual",
                                                "nu_spread", "einstein_residual"};
  if (scalars.count(key)) return true;
  if (has_prefix(key, "R.")) return is_digit_run(key, 2, 4);
  if (has_prefix(key, "ricci.")) return is_digit_run(key, 6, 2);
  if (has_prefix(key, "sectional.")) return is_digit_run(key, 10, 2) && key[10] != key[11];
  for (const char* p : {"norm_nablaJ.", "norm_F.", "norm_N.", "norm_theta.", "tau_star.", "tau_star_hermitian.",
                        "tau_star_norden.", "max_F.", "max_N."}) {
    const std::string prefix = p;
    if (has_prefix(key, prefix))
      return key.size() == prefix.size() + 1 && key.back() >= '1' && key.back() <= '3';
  }
  return false;
}

bool known_class(const std::string& key) {
  static const std::set<std::string> global = {"in_W", "pseudo_hyper_kaehler", "hypercomplex", "flat", "einstein"};
  if (global.count(key)) return true;
  auto dot = key.rfind('.');
  if (dot == std::string::npos || dot + 2 != key.size() || key.back() < '1' || key.back() > '3') return false;
  const std::string stem = key.substr(0, dot);
  if (stem == "almost_kaehler") return key.back() == '1';
  if (stem == "norden_W2" || stem == "norden_W3") return key.back() != '1';
  return stem == "kaehler" || stem == "integrable" || stem == "isotropic_kaehler" || stem == "main_W";
}

double lookup_invariant(const Record& rec, const FrameSnapshot& snap, const std::string& key) {
  if (!known_invariant(key)) throw ValidationError("unknown invariant key " + key);
  auto digit = [&](std::size_t i) { return key[i] - '1'; };
  if (has_prefix(key, "R.")) return snap.riemann[digit(2)][digit(3)][digit(4)][digit(5)];
  std::string k = key;
  if (has_prefix(key, "ricci.") && digit(6) > digit(7)) k = "ricci." + idx(digit(7), digit(6));
  if (has_prefix(key, "sectional.") && digit(10) > digit(11)) k = "sectional." + idx(digit(11), digit(10));
  if (!rec.contains(k)) return NAN; // e.g. no constant curvature at this point
  return rec[k].get<double>();
}

bool values_match(double computed, double expected, const Tolerances& tol) {
  if (!std::isfinite(computed) || !std::isfinite(expected)) return false;
  return std::abs(computed - expected) <= std::max(tol.zero, tol.match * std::abs(expected));
}

RunResult run(const std::vector<Example>& examples, const RunConfig& cfg) {
  std::vector<std::vector<Point>> points;
  std::vector<std::string> errors;
  std::vector<Example> usable;
  for (const auto& ex : examples) {
    try {
      auto pts = sample_points(ex, cfg);
      usable.push_back(ex);
      points.push_back(std::move(pts));
    } catch (const Error& e) {
      errors.push_back(e.what());
    }
  }
  auto ev = evaluate(usable, points, cfg);
  errors.insert(errors.end(), ev.result.errors.begin(), ev.result.errors.end());
  ev.result.errors = std::move(errors);
  return std::move(ev.result);
}

RunResult run(const RunConfig& cfg) {
  std::vector<std::string> errors;
  auto examples = compile_examples(cfg, errors);
  RunResult r = run(examples, cfg);
  errors.insert(errors.end(), r.errors.begin(), r.errors.end());
  r.errors = std::move(errors);
  return r;
}

std::string render_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_records(std::ostream& os, const RunResult& r) {
  for (const auto& rec : r.records) os << rec.dump() << '\n';
}

void write_table(std::ostream& os, const RunResult& r) {
  for (const auto& rec : r.records) {
    os << "== " << render_value(rec["example"]) << " / " << render_value(rec["structure"]) << "  point "
       << render_value(rec["point"]) << "  u = (" << render_value(rec["u1"]) << ", " << render_value(rec["u2"])
       << ", " << render_value(rec["u3"]) << ", " << render_value(rec["u4"]) << ")\n";
    os << "   verdict: flat: " << render_value(rec["class.flat"])
       << ", pseudo_hyper_kaehler: " << render_value(rec["class.pseudo_hyper_kaehler"])
       << ", hypercomplex: " << render_value(rec["class.hypercomplex"]) << ", in_W: " << render_value(rec["class.in_W"])
       << "\n";
    for (const auto& [key, value] : rec.items()) {
      if (key == "example" || key == "structure" || key == "point" || key == "u1" || key == "u2" || key == "u3" ||
          key == "u4")
        continue;
      os << "   " << std::left << std::setw(34) << key << ' ' << render_value(value) << '\n';
    }
  }
  for (const auto& f : r.failures) os << "FAIL " << f << '\n';
}

VerifySummary verify_all(const std::vector<ManifoldSpec>& specs, const VerifyOptions& opt, std::ostream& out) {
  VerifySummary summary;
  summary.examples = static_cast<int>(specs.size());
  std::vector<std::string> ids;
  std::map<std::string, std::string> build_errors;
  std::vector<Example> examples;
  std::vector<std::vector<Point>> points;
  for (const auto& spec : specs) {
    ids.push_back(spec.id);
    try {
      Example ex = Example::compile(spec);
      auto pts = ex.default_points();
      if (ex.kind() != Construction::Lie) {
        auto extra = random_points(ex, opt.random_points, opt.seed);
        pts.insert(pts.end(), extra.begin(), extra.end());
      }
      points.push_back(std::move(pts));
      examples.push_back(std::move(ex));
    } catch (const Error& e) {
      build_errors[spec.id] = e.what();
    }
  }

  RunConfig cfg;
  cfg.compare = true;
  cfg.fd_check = true;
  cfg.threads = opt.threads;
  Evaluation ev = evaluate(examples, points, cfg);

  if (opt.format == OutputFormat::Records) write_records(out, ev.result);

  static const std::vector<std::string> groups = {"build",    "curvature",  "norms", "tau_star",
                                                  "classes",  "identities", "fd",    "theorems"};
  std::map<std::string, std::map<std::string, int>> cells; // id -> group -> 0 fail / 1 pass
  for (const auto& id : ids) cells[id]["build"] = build_errors.count(id) ? 0 : 1;
  for (const auto& rec : ev.result.records) {
    const auto id = rec["example"].get<std::string>();
    for (const auto& [key, value] : rec.items()) {
      if (!has_prefix(key, "pass.")) continue;
      auto& cell = cells[id].try_emplace(group_of(key), 1).first->second;
      cell = cell && value.get<bool>();
    }
  }
  std::set<std::string> error_ids;
  for (const auto& e : ev.result.errors) {
    for (const auto& id : ids)
      if (has_prefix(e, id + " ") || has_prefix(e, id + "/")) error_ids.insert(id);
  }

  std::vector<VerdictRecord> verdicts;
  for (std::size_t e = 0; e < examples.size(); ++e)
    for (std::size_t s = 0; s < examples[e].structures().size(); ++s)
      if (!ev.verdicts[e][s].empty())
        verdicts.push_back({examples[e].id(), examples[e].structures()[s].name, aggregate(ev.verdicts[e][s])});
  std::sort(verdicts.begin(), verdicts.end(), [](const VerdictRecord& a, const VerdictRecord& b) {
    return std::tie(a.example, a.structure) < std::tie(b.example, b.structure);
  });
  std::string theorem_error;
  TheoremReport theorems;
  try {
    theorems = theorem_crosschecks(verdicts);
  } catch (const TheoremViolation& e) {
    theorem_error = e.what();
  }
  for (const auto& id : ids) {
    if (build_errors.count(id)) continue;
    cells[id]["theorems"] = theorem_error.find(id) == std::string::npos ? 1 : 0;
  }

  std::vector<std::string> sorted_ids = ids;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  out << std::left << std::setw(18) << "example";
  for (const auto& g : groups) out << ' ' << std::setw(10) << g;
  out << '\n';
  for (const auto& id : sorted_ids) {
    bool ok = !error_ids.count(id);
    out << std::setw(18) << id;
    for (const auto& g : groups) {
      auto it = cells[id].find(g);
      std::string mark = "-";
      if (it != cells[id].end()) {
        mark = it->second ? "PASS" : "FAIL";
        ok = ok && it->second;
      }
      out << ' ' << std::setw(10) << mark;
    }
    out << '\n';
    if (ok) ++summary.passed;
    else summary.failed.push_back(id);
  }
  for (const auto& [id, what] : build_errors) out << "INVALID " << what << '\n';
  for (const auto& e : ev.result.errors) out << "ERROR " << e << '\n';
  for (const auto& f : ev.result.failures) out << "FAIL " << f << '\n';
  static const char* names[] = {"1.1", "1.2", "1.3", "1.4"};
  for (int t = 0; t < 4; ++t)
    out << "theorem " << names[t] << ": hypotheses met by " << theorems.exercised[t] << " structure(s)"
        << (theorem_error.empty() ? ", conclusions hold" : "") << '\n';
  for (const auto& n : theorems.notes) out << "  " << n << '\n';
  if (!theorem_error.empty()) out << "THEOREM VIOLATION " << theorem_error << '\n';
  out << summary.passed << '/' << summary.examples << " examples pass\n";

  if (!build_errors.empty() || !ev.result.errors.empty()) summary.exit_code = 2;
  else if (!summary.failed.empty() || !theorem_error.empty()) summary.exit_code = 1;
  return summary;
}

VerifySummary verify_all(const VerifyOptions& opt, std::ostream& out) {
  std::vector<ManifoldSpec> specs;
  for (const auto& id : list()) specs.push_back(parse_manifold(source(id)));
  return verify_all(specs, opt, out);
}

} // namespace hcx
