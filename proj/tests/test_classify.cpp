#include "hcx/catalog.hpp"
#include "hcx/classify.hpp"
#include "hcx/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hcx;

namespace {

const Example& catalog_entry(const std::string& id) {
  static std::map<std::string, Example> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, build(id)).first;
  return it->second;
}

struct Classified {
  PointAnalysis pa;
  ClassVerdict v;
};

Classified classify_at(const std::string& id, std::size_t k = 0, const std::string& structure = {},
                       std::optional<Tolerances> tol = {}) {
  const Example& ex = catalog_entry(id);
  const auto& st = ex.structure(structure);
  auto pa = analyze(ex.snapshot(ex.default_points().at(k)), st.h, ex.tolerances().zero);
  auto v = classify(pa, st.h, tol.value_or(ex.tolerances()));
  return {std::move(pa), v};
}

// F evaluated on arbitrary frame-component vectors.
double f_eval(const Tensor3& f, const Vec4& x, const Vec4& y, const Vec4& z) {
  double s = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) s += x[a] * y[b] * z[c] * f[a][b][c];
  return s;
}

// Cyclic sums over random vector triples, independent of the frame loops.
std::pair<double, double> brute_cyclic(const Tensor3& f, const Mat4& j) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double w2 = 0.0, w3 = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Vec4 x, y, z;
    for (int a = 0; a < kDim; ++a) {
      x[a] = dist(rng);
      y[a] = dist(rng);
      z[a] = dist(rng);
    }
    w3 = std::max(w3, std::abs(f_eval(f, x, y, z) + f_eval(f, y, z, x) + f_eval(f, z, x, y)));
    w2 = std::max(w2, std::abs(f_eval(f, x, y, j * z) + f_eval(f, y, z, j * x) + f_eval(f, z, x, j * y)));
  }
  return {w2, w3};
}

VerdictRecord record(std::string example, ClassVerdict v) { return {std::move(example), "H", v}; }

ClassVerdict all_kaehler(bool flat) {
  ClassVerdict v;
  for (auto& a : v.alpha) {
    a.kaehler = a.integrable = a.isotropic_kaehler = a.main_class_W = true;
  }
  v.in_W = v.pseudo_hyper_kaehler = v.hypercomplex = true;
  v.flat = flat;
  return v;
}

} // namespace

TEST(Classes, ComplexCylinderIsPseudoHyperKaehler) {
  for (std::size_t k = 0; k < 2; ++k) {
    const auto c = classify_at("cx_cylinder", k);
    for (const auto& a : c.v.alpha) {
      EXPECT_TRUE(a.kaehler);
      EXPECT_TRUE(a.integrable);
      EXPECT_TRUE(a.isotropic_kaehler);
      EXPECT_TRUE(a.main_class_W);
    }
    EXPECT_TRUE(c.v.pseudo_hyper_kaehler);
    EXPECT_TRUE(c.v.hypercomplex);
    EXPECT_TRUE(c.v.in_W);
    EXPECT_TRUE(c.v.flat);
  }
}

TEST(Classes, SemiSpaceIsHypercomplexInW) {
  const auto c = classify_at("semi_space");
  EXPECT_TRUE(c.v.hypercomplex);
  EXPECT_TRUE(c.v.in_W);
  EXPECT_FALSE(c.v.pseudo_hyper_kaehler);
  EXPECT_LE(w4_residual(c.pa.tensors, catalog_entry("semi_space").structure("").h, c.pa.snap.eps), 1e-10);
  for (int a = 2; a <= 3; ++a)
    EXPECT_LE(w1_residual(c.pa.tensors, catalog_entry("semi_space").structure("").h, c.pa.snap.eps, a), 1e-10);
  for (const auto& a : c.v.alpha) EXPECT_FALSE(a.isotropic_kaehler);
}

TEST(Classes, EngelIsIsotropicKaehlerOnly) {
  for (const auto& name : {"H", "H_remark"}) {
    const auto c = classify_at("engel_a", 0, name);
    for (const auto& a : c.v.alpha) {
      EXPECT_FALSE(a.kaehler);
      EXPECT_FALSE(a.integrable);
      EXPECT_TRUE(a.isotropic_kaehler);
    }
    EXPECT_FALSE(*c.v.alpha[0].almost_kaehler);
    EXPECT_FALSE(c.v.hypercomplex);
  }
  const auto b = classify_at("engel_b");
  EXPECT_TRUE(*b.v.alpha[0].almost_kaehler);
  EXPECT_FALSE(b.v.alpha[0].kaehler);
}

TEST(Classes, QuarterSpaceKaehlerForJ1Only) {
  const auto c = classify_at("quarter_space", 1);
  EXPECT_TRUE(c.v.alpha[0].kaehler);
  EXPECT_FALSE(c.v.alpha[1].integrable);
  EXPECT_FALSE(c.v.alpha[2].integrable);
  for (const auto& a : c.v.alpha) EXPECT_TRUE(a.isotropic_kaehler);
  EXPECT_FALSE(c.v.hypercomplex);
}

TEST(Classes, ConeLeavesW1ForNordenStructures) {
  const auto c = classify_at("cx_cone");
  EXPECT_TRUE(c.v.alpha[0].kaehler);
  EXPECT_FALSE(c.v.alpha[1].main_class_W);
  EXPECT_FALSE(c.v.alpha[2].main_class_W);
  EXPECT_TRUE(c.v.hypercomplex);
  EXPECT_TRUE(c.v.flat);
}

TEST(Classes, ComplexSphereKaehlerForJ2) {
  const auto c = classify_at("cx_sphere");
  EXPECT_TRUE(c.v.alpha[1].kaehler);
  EXPECT_FALSE(c.v.alpha[0].kaehler);
  EXPECT_FALSE(c.v.alpha[0].integrable);
  EXPECT_FALSE(c.v.flat);
}

TEST(Classes, LieGroupsIntegrabilityPattern) {
  const auto a = classify_at("lie_a");
  EXPECT_FALSE(a.v.alpha[0].integrable);
  EXPECT_TRUE(a.v.alpha[1].integrable);
  EXPECT_FALSE(a.v.alpha[2].integrable);
  EXPECT_FALSE(a.v.hypercomplex);
  const auto b = classify_at("lie_b");
  EXPECT_TRUE(b.v.alpha[0].kaehler);
  EXPECT_TRUE(b.v.flat);
  EXPECT_FALSE(b.v.hypercomplex);
}

TEST(Classes, NordenW2W3AgreeWithBruteForce) {
  for (const auto& id : {"lie_b", "lie_a", "cx_cone", "semi_space", "engel_a"}) {
    const auto c = classify_at(id);
    const auto& h = catalog_entry(id).structure("").h;
    for (int al = 2; al <= 3; ++al) {
      const auto [w2, w3] = brute_cyclic(c.pa.tensors.F[al - 1], h.J(al));
      const double scale = std::max(1.0, max_abs(c.pa.tensors.F[al - 1]));
      EXPECT_EQ(*c.v.alpha[al - 1].norden_W2, w2 <= 1e-6 * scale) << id << " alpha " << al << " w2 " << w2;
      EXPECT_EQ(*c.v.alpha[al - 1].norden_W3, w3 <= 1e-6 * scale) << id << " alpha " << al << " w3 " << w3;
    }
  }
}

TEST(Classes, OptionalFieldsMatchAlpha) {
  const auto c = classify_at("engel_a");
  EXPECT_TRUE(c.v.alpha[0].almost_kaehler.has_value());
  EXPECT_FALSE(c.v.alpha[0].norden_W2.has_value());
  for (int a = 1; a < 3; ++a) {
    EXPECT_FALSE(c.v.alpha[a].almost_kaehler.has_value());
    EXPECT_TRUE(c.v.alpha[a].norden_W2.has_value());
    EXPECT_TRUE(c.v.alpha[a].norden_W3.has_value());
  }
}

TEST(Classes, KaehlerImpliesWeakerClasses) {
  for (const auto& id : list()) {
    const Example& ex = catalog_entry(id);
    for (std::size_t k = 0; k < ex.default_points().size(); ++k)
      for (const auto& st : ex.structures()) {
        const auto c = classify_at(id, k, st.name);
        for (const auto& a : c.v.alpha)
          if (a.kaehler) {
            EXPECT_TRUE(a.main_class_W) << id;
            EXPECT_TRUE(a.integrable) << id;
            EXPECT_TRUE(a.isotropic_kaehler) << id;
          }
        if (c.v.pseudo_hyper_kaehler) EXPECT_TRUE(c.v.hypercomplex) << id;
      }
  }
}

TEST(Classes, VerdictsStableUnderTighterTolerance) {
  for (const auto& id : list()) {
    const Example& ex = catalog_entry(id);
    for (std::size_t k = 0; k < ex.default_points().size(); ++k) {
      const Tolerances tight{ex.tolerances().zero * 1e-3, ex.tolerances().match * 1e-3};
      const auto loose = classify_at(id, k, {}, ex.tolerances());
      const auto strict = classify_at(id, k, {}, tight);
      // Analytic entries are exact to rounding, so a thousandfold tighter
      // tolerance must not change a verdict.
      if (ex.kind() != Construction::Embedding) EXPECT_EQ(loose.v, strict.v) << id;
    }
  }
}

TEST(Classes, HypercomplexRejectsTwoOfThree) {
  StructuralTensors t{};
  t.N[2][0][1][2] = 1.0;
  EXPECT_THROW(is_hypercomplex(t, 1e-8), ConsistencyError);
  t.N[1][0][1][2] = 1.0;
  EXPECT_FALSE(is_hypercomplex(t, 1e-8));
  EXPECT_TRUE(is_hypercomplex(StructuralTensors{}, 1e-8));
}

TEST(Classes, AggregateIsConjunction) {
  ClassVerdict a = all_kaehler(true), b = all_kaehler(true);
  b.alpha[1].kaehler = false;
  b.pseudo_hyper_kaehler = false;
  const auto g = aggregate({a, b});
  EXPECT_FALSE(g.alpha[1].kaehler);
  EXPECT_TRUE(g.alpha[0].kaehler);
  EXPECT_FALSE(g.pseudo_hyper_kaehler);
  EXPECT_TRUE(g.flat);
  EXPECT_EQ(aggregate({a}), a);
}

TEST(Theorems, CatalogSatisfiesAllFour) {
  std::vector<VerdictRecord> recs;
  for (const auto& id : list()) {
    const Example& ex = catalog_entry(id);
    for (std::size_t k = 0; k < ex.default_points().size(); ++k)
      for (const auto& st : ex.structures()) recs.push_back({id, st.name, classify_at(id, k, st.name).v});
  }
  const auto rep = theorem_crosschecks(recs);
  EXPECT_GE(rep.exercised[0], 1);
  EXPECT_GE(rep.exercised[1], 1);
  EXPECT_GE(rep.exercised[2], 1);
  EXPECT_GE(rep.exercised[3], 1);
}

TEST(Theorems, ToyRecordsCountedOncePerRecord) {
  const auto rep = theorem_crosschecks({record("toy", all_kaehler(true))});
  EXPECT_EQ(rep.exercised, (std::array<int, 4>{1, 1, 1, 1}));
  EXPECT_TRUE(rep.notes.empty());
  const auto empty = theorem_crosschecks({});
  EXPECT_EQ(empty.notes.size(), 4u);
}

TEST(Theorems, FabricatedViolationsAreNamed) {
  auto expect_violation = [](const ClassVerdict& v, const std::string& thm) {
    try {
      theorem_crosschecks({record("fabricated", v)});
      FAIL() << "expected a violation of " << thm;
    } catch (const TheoremViolation& e) {
      const std::string what = e.what();
      EXPECT_NE(what.find("fabricated"), std::string::npos) << what;
      EXPECT_NE(what.find(thm), std::string::npos) << what;
    }
  };
  // 1.1: two main classes without the third.
  ClassVerdict v11{};
  v11.alpha[0].main_class_W = v11.alpha[1].main_class_W = true;
  expect_violation(v11, "1.1");
  // 1.2: K(J1) and W(J2) without pseudo-hyper-Kaehler.
  ClassVerdict v12{};
  v12.alpha[0].kaehler = true;
  v12.alpha[1].main_class_W = true;
  expect_violation(v12, "1.2");
  // 1.3: in W, one isotropic Kaehler, not all.
  ClassVerdict v13{};
  for (auto& a : v13.alpha) a.main_class_W = true;
  v13.in_W = true;
  v13.alpha[0].isotropic_kaehler = true;
  expect_violation(v13, "1.3");
  // 1.4: pseudo-hyper-Kaehler but curved.
  expect_violation(all_kaehler(false), "1.4");
}
