#pragma once

// Declarative text format for example manifolds. One directive per line,
// '#' starts a comment:
//
//   manifold ID                    title TEXT
//   kind chart|embedding|lie       signature ++--
//   let NAME = EXPR                (usable in later expressions)
//   metric I J = EXPR              (chart; g_IJ = g_JI, 1-based)
//   embedding K = EXPR             (component Z^K, 1-based, consecutive)
//   ambient +++--                  (diagonal ambient metric of the embedding)
//   frame A = E1, E2, E3, E4       (coordinate components of e_A)
//   generator A = ROW; ROW; ...    (lie; whitespace-separated entries)
//   require EXPR OP EXPR           (domain guard, OP one of != > < >= <=)
//   box LO:HI, LO:HI, LO:HI, LO:HI (sampling box for grids / random points)
//   point X1, X2, X3, X4           (default sample point)
//   tolerance analytic|embedded
//   structure NAME                 (starts an almost hypercomplex structure)
//   J1 = e2,-e1,-e4,e3             J2 = e3,e4,-e1,-e2
//   expect KEY = EXPR              (closed form as printed in the source)
//   erratum KEY = EXPR | NOTE      (verified replacement for a printed form)
//   class KEY = true|false
//   note TEXT
//
// expect / erratum / class lines before the first `structure` concern the
// manifold itself (curvature); afterwards they belong to the structure.

#include "hcx/expr.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcx {

enum class Construction { Chart, Embedding, Lie };

std::string_view construction_name(Construction c);

struct Guard {
  Expr lhs;
  std::string op;
  Expr rhs;
  bool holds(const Point& u) const;
  std::string text() const;
};

struct Expectation {
  std::string key;
  std::optional<Expr> printed;
  std::optional<Expr> erratum;
  std::string note;
  /// The value to check against: the erratum unless `printed_only`.
  std::optional<Expr> target(bool printed_only) const;
};

struct ClassExpectation {
  std::string key;
  bool value = false;
};

struct StructureDecl {
  std::string name;
  std::string j1; // images text, e.g. "e2,-e1,-e4,e3"
  std::string j2;
  std::vector<Expectation> expect;
  std::vector<ClassExpectation> classes;
};

struct ManifoldSpec {
  std::string id;
  std::string title;
  Construction kind = Construction::Chart;
  std::string signature = "++--";
  std::vector<std::pair<std::string, Expr>> lets;
  /// Upper triangle, metric[i][j] for i <= j (0-based); absent = 0.
  std::array<std::array<std::optional<Expr>, kDim>, kDim> metric{};
  std::vector<Expr> embedding;
  std::string ambient;
  /// frame[a][i] = E^i_a.
  std::array<std::array<std::optional<Expr>, kDim>, kDim> frame{};
  std::array<std::vector<std::vector<double>>, kDim> generators{};
  std::vector<Guard> guards;
  std::optional<std::array<std::pair<double, double>, kDim>> box;
  std::vector<Point> points;
  bool embedded_tolerance = false;
  std::vector<Expectation> expect;
  std::vector<ClassExpectation> classes;
  std::vector<StructureDecl> structures;
  std::vector<std::string> notes;
};

/// Throws ParseError carrying the 1-based line number.
ManifoldSpec parse_manifold(std::string_view text);

/// Canonical text; parse_manifold(serialize(s)) is equivalent to s.
std::string serialize(const ManifoldSpec& spec);

/// Field-by-field equality with expressions compared by syntax tree.
bool equivalent(const ManifoldSpec& a, const ManifoldSpec& b);

} // namespace hcx
