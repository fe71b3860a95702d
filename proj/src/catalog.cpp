#include "hcx/catalog.hpp"

#include "catalog_data.hpp"
#include "hcx/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace hcx {
namespace {

constexpr double kChartOrthoTol = 1e-10;
constexpr double kEmbeddedOrthoTol = 1e-8;
constexpr double kHessianSymTol = 1e-12;

/// Shortest round-trip rendering of each coordinate.
std::string point_text(const Point& p) {
  std::string out = "(";
  for (int i = 0; i < kDim; ++i) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, p[i]);
    out.append(buf, res.ptr);
    out += i + 1 < kDim ? ", " : ")";
  }
  return out;
}

[[noreturn]] void invalid(const ManifoldSpec& spec, const std::string& what) {
  throw ValidationError(spec.id + ": " + what);
}

std::function<JetMatrix(const Point&)> jet_matrix(const std::array<std::array<std::optional<Expr>, kDim>, kDim>& m,
                                                 bool symmetric_upper) {
  return [m, symmetric_upper](const Point& p) {
    const auto u = seed(p);
    JetMatrix out{};
    for (int i = 0; i < kDim; ++i)
      for (int j = symmetric_upper ? i : 0; j < kDim; ++j) {
        if (!m[i][j]) continue;
        out[i][j] = m[i][j]->eval(u);
        if (symmetric_upper) out[j][i] = out[i][j];
      }
    return out;
  };
}

std::vector<double> parse_ambient(const ManifoldSpec& spec) {
  std::vector<double> out;
  for (char c : spec.ambient) {
    if (c == '+') out.push_back(1.0);
    else if (c == '-') out.push_back(-1.0);
    else if (c != ' ') invalid(spec, "ambient signature must consist of + and -");
  }
  return out;
}

double hessian_asymmetry(const JetMatrix& g) {
  double worst = 0.0;
  for (const auto& row : g)
    for (const auto& c : row)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) worst = std::max(worst, std::abs(c.hess[i][j] - c.hess[j][i]));
  return worst;
}

} // namespace

Example::Example(ManifoldSpec spec, Signature eps) : spec_(std::move(spec)), eps_(eps) {}

Example Example::compile(ManifoldSpec spec) {
  if (spec.id.empty()) throw ValidationError("manifold entry without an id");
  std::optional<Signature> eps;
  try {
    eps = Signature::parse(spec.signature);
  } catch (const Error& e) {
    invalid(spec, std::string("signature: ") + e.what());
  }
  int positive = 0;
  for (double e : eps->values()) positive += e > 0 ? 1 : 0;
  if (positive != 2) invalid(spec, "signature must be neutral (two + and two -)");

  if (spec.kind == Construction::Lie && spec.points.empty()) spec.points.push_back(Point{});
  if (spec.points.empty()) invalid(spec, "no default sample point");
  if (spec.structures.empty()) invalid(spec, "no almost hypercomplex structure declared");

  Example ex(std::move(spec), *eps);
  const ManifoldSpec& s = ex.spec_;
  if (s.embedded_tolerance) ex.tol_ = Tolerances{1e-6, 1e-4};

  switch (s.kind) {
  case Construction::Chart: {
    for (int i = 0; i < kDim; ++i)
      if (!s.metric[i][i]) invalid(s, "metric component g" + std::to_string(i + 1) + std::to_string(i + 1) + " missing");
    ex.metric_ = ChartMetric{jet_matrix(s.metric, true), 2, 2};
    break;
  }
  case Construction::Embedding: {
    auto ambient = parse_ambient(s);
    if (s.embedding.empty()) invalid(s, "embedding has no components");
    if (ambient.size() != s.embedding.size())
      invalid(s, "ambient signature has " + std::to_string(ambient.size()) + " entries but the embedding has " +
                     std::to_string(s.embedding.size()) + " components");
    auto comps = s.embedding;
    Embedding emb{[comps](const Point& p) {
                    const auto u = seed(p);
                    std::vector<Jet2> z;
                    z.reserve(comps.size());
                    for (const auto& c : comps) z.push_back(c.eval(u));
                    return z;
                  },
                  std::move(ambient)};
    ex.embedding_ = emb;
    ex.metric_ = induced_metric(std::move(emb));
    break;
  }
  case Construction::Lie: {
    LieAlgebraBasis basis;
    basis.generators = s.generators;
    basis.eps = *eps;
    for (int a = 0; a < kDim; ++a)
      if (basis.generators[a].empty()) invalid(s, "generator " + std::to_string(a + 1) + " missing");
    try {
      ex.lie_snapshot_ = homogeneous_snapshot(basis);
    } catch (const Error& e) {
      invalid(s, std::string("Lie algebra: ") + e.what());
    }
    ex.lie_ = std::move(basis);
    break;
  }
  }

  if (s.kind != Construction::Lie) {
    std::array<std::array<std::optional<Expr>, kDim>, kDim> coeffs{}; // [i][a]
    for (int a = 0; a < kDim; ++a)
      for (int i = 0; i < kDim; ++i) coeffs[i][a] = s.frame[a][i];
    bool any = false;
    for (const auto& row : coeffs)
      for (const auto& c : row) any = any || c.has_value();
    if (!any) invalid(s, "frame missing");
    ex.frame_ = FrameField{jet_matrix(coeffs, false), *eps};
  }

  for (const auto& decl : s.structures) {
    try {
      auto h = HTriple::from_pair(matrix_from_images(decl.j1), matrix_from_images(decl.j2));
      verify_compatibility(h, *eps);
      ex.structures_.push_back(NamedStructure{decl.name, h, decl.expect, decl.classes});
    } catch (const IncompatibleStructure& e) {
      invalid(s, "structure " + decl.name + ": J" + std::to_string(e.alpha()) + " incompatible with the metric (" +
                     e.what() + ")");
    } catch (const Error& e) {
      invalid(s, "structure " + decl.name + ": " + e.what());
    }
  }

  const double ortho_tol = s.embedded_tolerance ? kEmbeddedOrthoTol : kChartOrthoTol;
  for (const auto& p : s.points) {
    if (s.kind != Construction::Lie) {
      for (const auto& g : s.guards) {
        bool ok = false;
        try {
          ok = g.holds(p);
        } catch (const Error&) {
        }
        if (!ok) invalid(s, "default point " + point_text(p) + " violates guard " + g.text());
      }
      try {
        const JetMatrix g = ex.metric_->components(p);
        const double asym = hessian_asymmetry(g);
        if (asym > kHessianSymTol)
          invalid(s, "metric Hessian not symmetric at " + point_text(p) + " (" + std::to_string(asym) + ")");
        const double r = orthonormality_residual(*ex.metric_, *ex.frame_, p);
        if (!(r <= ortho_tol)) {
          std::ostringstream os;
          os.precision(3);
          os << "frame not orthonormal at " << point_text(p) << ": residual " << std::scientific << r << " > "
             << ortho_tol;
          invalid(s, os.str());
        }
        (void)ex.snapshot(p);
      } catch (const ValidationError&) {
        throw;
      } catch (const Error& e) {
        invalid(s, "geometry at " + point_text(p) + ": " + e.what());
      }
    }
    for (const auto& st : ex.structures_) {
      for (const auto& e : ex.expectations(st)) {
        for (bool printed : {true, false}) {
          auto t = e.target(printed);
          if (!t) continue;
          double v = NAN;
          try {
            v = t->eval(p);
          } catch (const Error&) {
          }
          if (!std::isfinite(v))
            invalid(s, "expected " + e.key + " not finite at " + point_text(p));
        }
      }
    }
  }
  return ex;
}

const NamedStructure& Example::structure(const std::string& name) const {
  if (name.empty()) return structures_.front();
  for (const auto& st : structures_)
    if (st.name == name) return st;
  throw UnknownExample(spec_.id + ": no structure named " + name);
}

bool Example::in_domain(const Point& p) const {
  for (double x : p)
    if (!std::isfinite(x)) return false;
  for (const auto& g : spec_.guards) {
    try {
      if (!g.holds(p)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

void Example::check_domain(const Point& p) const {
  for (double x : p)
    if (!std::isfinite(x)) throw DomainError(spec_.id + ": non-finite point " + point_text(p));
  for (const auto& g : spec_.guards) {
    bool ok = false;
    try {
      ok = g.holds(p);
    } catch (const Error&) {
    }
    if (!ok) throw DomainError(spec_.id + ": point " + point_text(p) + " violates " + g.text());
  }
}

FrameSnapshot Example::snapshot(const Point& p) const {
  if (lie_snapshot_) {
    FrameSnapshot s = *lie_snapshot_;
    s.point = p;
    return s;
  }
  check_domain(p);
  return hcx::snapshot(*metric_, *frame_, p);
}

std::vector<Expectation> Example::expectations(const NamedStructure& s) const {
  std::vector<Expectation> out = spec_.expect;
  out.insert(out.end(), s.expect.begin(), s.expect.end());
  return out;
}

std::vector<ClassExpectation> Example::class_expectations(const NamedStructure& s) const {
  std::vector<ClassExpectation> out = spec_.classes;
  out.insert(out.end(), s.classes.begin(), s.classes.end());
  return out;
}

std::map<std::string, double> Example::expected(const NamedStructure& s, const Point& p, bool printed_only) const {
  std::map<std::string, double> out;
  for (const auto& e : expectations(s))
    if (auto t = e.target(printed_only)) out[e.key] = t->eval(p);
  return out;
}

std::array<std::pair<double, double>, kDim> Example::box() const {
  if (spec_.box) return *spec_.box;
  std::array<std::pair<double, double>, kDim> b{};
  const Point& c = spec_.points.front();
  for (int i = 0; i < kDim; ++i) b[i] = {c[i] - 1.0, c[i] + 1.0};
  return b;
}

std::vector<std::string> list() {
  std::vector<std::string> ids;
  for (const auto& [id, text] : detail::catalog_sources()) ids.push_back(id);
  return ids;
}

const std::string& source(const std::string& id) {
  for (const auto& [key, text] : detail::catalog_sources())
    if (key == id) return text;
  throw UnknownExample("unknown example: " + id);
}

Example build(const std::string& id) { return Example::compile(parse_manifold(source(id))); }

std::map<std::string, double> expected(const std::string& id, const Point& p, const std::string& structure,
                                       bool printed_only) {
  const Example ex = build(id);
  ex.check_domain(p);
  return ex.expected(ex.structure(structure), p, printed_only);
}

} // namespace hcx
