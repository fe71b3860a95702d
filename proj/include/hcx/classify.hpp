#pragma once

// Class membership for each J_alpha (Kaehler, W4 / almost Kaehler for the
// Hermitian J1, W1 / W2 / W3 for the Norden J2, J3, integrability,
// isotropic Kaehler) and the structure theorems as runtime cross-checks.

#include "hcx/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcx {

struct Tolerances {
  double zero = 1e-8;  // "vanishes" tests
  double match = 1e-6; // formula residuals, relative to max(1, max|F|)
};

/// Residual of F1 against the W4 (locally conformally Kaehler) right-hand
/// side built from theta1.
double w4_residual(const StructuralTensors& t, const HTriple& h, const Signature& eps);
/// Residual of F_alpha against the W1 right-hand side; alpha in {2, 3}.
double w1_residual(const StructuralTensors& t, const HTriple& h, const Signature& eps, int alpha);
/// max |F(x,y,z) + F(y,z,x) + F(z,x,y)| over frame triples.
double cyclic_residual(const Tensor3& f);
/// max |F(x,y,Jz) + F(y,z,Jx) + F(z,x,Jy)| over frame triples.
double cyclic_j_residual(const Tensor3& f, const Mat4& j);

bool is_kaehler(const StructuralTensors& t, int alpha, double tol);
bool is_hermitian_W4(const StructuralTensors& t, const HTriple& h, const Signature& eps, double tol);
bool is_almost_kaehler(const StructuralTensors& t, double tol);
bool is_norden_W1(const StructuralTensors& t, const HTriple& h, const Signature& eps, int alpha, double tol);
/// (W2, W3) membership of J_alpha, alpha in {2, 3}.
std::pair<bool, bool> norden_W2_W3(const StructuralTensors& t, const HTriple& h, int alpha, double tol);
bool is_integrable(const StructuralTensors& t, int alpha, double tol);
/// All N_alpha vanish. Throws ConsistencyError if exactly two vanish (two
/// vanishing Nijenhuis tensors force the third to vanish).
bool is_hypercomplex(const StructuralTensors& t, double tol);
bool is_isotropic_kaehler(const SignedNorms& n, int alpha, double tol);

struct AlphaVerdict {
  bool kaehler = false;
  bool integrable = false;
  bool isotropic_kaehler = false;
  bool main_class_W = false; // W4 for alpha = 1, W1 for alpha = 2, 3
  std::optional<bool> almost_kaehler; // alpha = 1 only
  std::optional<bool> norden_W2;      // alpha = 2, 3 only
  std::optional<bool> norden_W3;

  bool operator==(const AlphaVerdict&) const = default;
};

struct ClassVerdict {
  PerAlpha<AlphaVerdict> alpha{};
  bool in_W = false; // intersection of the three main classes
  bool pseudo_hyper_kaehler = false;
  bool hypercomplex = false;
  bool flat = false;

  bool operator==(const ClassVerdict&) const = default;
};

ClassVerdict classify(const PointAnalysis& pa, const HTriple& h, const Tolerances& tol = {});

/// AND over sample points.
ClassVerdict aggregate(const std::vector<ClassVerdict>& verdicts);

/// Verdict of one structure on one manifold at one point.
struct VerdictRecord {
  std::string example;
  std::string structure;
  ClassVerdict verdict;
};

struct TheoremReport {
  /// How many records met each theorem's hypothesis (index 0 = Thm 1.1).
  std::array<int, 4> exercised{};
  std::vector<std::string> notes;
};

/// 1.1: W(J_a) and W(J_b) imply W(J_c).
/// 1.2: K(J_a) and W(J_b), a != b, imply pseudo-hyper-Kaehler.
/// 1.3: in W with one isotropic Kaehler J implies all three isotropic.
/// 1.4: pseudo-hyper-Kaehler implies flat.
/// Throws TheoremViolation naming the record and theorem.
TheoremReport theorem_crosschecks(const std::vector<VerdictRecord>& records);

} // namespace hcx
