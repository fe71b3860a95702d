#pragma once

// The ten example manifolds. Each entry is stored as declarative manifold
// text (see manifold_file.hpp) and compiled into jet evaluators, a frame, an
// almost hypercomplex structure per named variant and closed-form
// expectations; compilation validates everything it can before any
// invariant is computed.

#include "hcx/chart_geometry.hpp"
#include "hcx/classify.hpp"
#include "hcx/homogeneous.hpp"
#include "hcx/hstructure.hpp"
#include "hcx/manifold_file.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hcx {

struct NamedStructure {
  std::string name;
  HTriple h;
  std::vector<Expectation> expect;
  std::vector<ClassExpectation> classes;
};

class Example {
public:
  /// Validates frame orthonormality, structure compatibility, the domain
  /// guard and finiteness of every closed form at the default points.
  /// Throws ValidationError naming the entry and the failing invariant.
  static Example compile(ManifoldSpec spec);

  const std::string& id() const noexcept { return spec_.id; }
  const ManifoldSpec& spec() const noexcept { return spec_; }
  const Signature& eps() const noexcept { return eps_; }
  Construction kind() const noexcept { return spec_.kind; }
  const std::vector<NamedStructure>& structures() const noexcept { return structures_; }
  const NamedStructure& structure(const std::string& name) const;
  const std::vector<Point>& default_points() const noexcept { return spec_.points; }
  const Tolerances& tolerances() const noexcept { return tol_; }

  const std::optional<ChartMetric>& metric() const noexcept { return metric_; }
  const std::optional<FrameField>& frame() const noexcept { return frame_; }
  const std::optional<Embedding>& embedding() const noexcept { return embedding_; }
  const std::optional<LieAlgebraBasis>& lie() const noexcept { return lie_; }

  bool in_domain(const Point& p) const;
  /// Throws DomainError naming the violated guard.
  void check_domain(const Point& p) const;

  /// Geometry at p (the point is irrelevant for Lie entries).
  FrameSnapshot snapshot(const Point& p) const;

  /// Manifold-wide plus structure-specific expectations.
  std::vector<Expectation> expectations(const NamedStructure& s) const;
  std::vector<ClassExpectation> class_expectations(const NamedStructure& s) const;

  /// key -> closed-form value at p (erratum-corrected unless printed_only).
  std::map<std::string, double> expected(const NamedStructure& s, const Point& p, bool printed_only = false) const;

  /// Sampling box; falls back to +-1 around the first default point.
  std::array<std::pair<double, double>, kDim> box() const;

private:
  Example(ManifoldSpec spec, Signature eps);
  ManifoldSpec spec_;
  Signature eps_;
  Tolerances tol_;
  std::optional<ChartMetric> metric_;
  std::optional<FrameField> frame_;
  std::optional<Embedding> embedding_;
  std::optional<LieAlgebraBasis> lie_;
  std::optional<FrameSnapshot> lie_snapshot_; // constant over the group
  std::vector<NamedStructure> structures_;
};

/// Catalog ids in their canonical order.
std::vector<std::string> list();
/// Declarative source text of a catalog entry. Throws UnknownExample.
const std::string& source(const std::string& id);
/// Parsed and compiled catalog entry. Throws UnknownExample.
Example build(const std::string& id);
/// Closed-form values at p for the entry's first (or named) structure.
std::map<std::string, double> expected(const std::string& id, const Point& p, const std::string& structure = {},
                                       bool printed_only = false);

} // namespace hcx
