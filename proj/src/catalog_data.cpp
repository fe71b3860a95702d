// Declarative sources of the catalog entries. Closed forms under `expect`
// are the published values; `erratum` lines carry independently verified
// replacements where a published form does not hold.

#include "catalog_data.hpp"

namespace hcx::detail {

const std::vector<std::pair<std::string, std::string>>& catalog_sources() {
  static const std::vector<std::pair<std::string, std::string>> sources = {
      {"engel_a", R"(manifold engel_a
title Engel manifold: isotropic hyper-Kaehler, neither integrable nor symplectic
kind chart
signature ++--
note The cross term is +2 x1 dx2 dx3; with -2 x1 the stated frame is not orthonormal.
metric 1 1 = 1
metric 2 2 = 1 - u1^2 - u3^2
metric 2 3 = u1
metric 2 4 = u3
metric 3 3 = -1
metric 4 4 = -1
frame 1 = 1, 0, 0, 0
frame 2 = 0, 1, u1, u3
frame 3 = 0, 0, -1, 0
frame 4 = 0, 0, 0, -1
box -1:1, -1:1, -1:1, -1:1
point 0.3, 0.2, 0.5, 0.1
expect R.1221 = 3/4
expect R.2332 = 1
expect R.1331 = 1/4
expect R.2142 = -1/4
expect R.2442 = -1/4
expect R.3143 = -1/4
expect R.3443 = 1/4
expect tau = 0
class flat = false
structure H
J1 = e2,-e1,-e4,e3
J2 = e3,e4,-e1,-e2
expect norm_F.1 = 0
expect norm_N.1 = 8
expect tau_star.1 = -2
expect norm_F.2 = 0
expect norm_N.2 = 0
expect tau_star.2 = 0
expect norm_F.3 = 0
expect norm_N.3 = -8
expect tau_star.3 = 0
class kaehler.1 = false
class kaehler.2 = false
class kaehler.3 = false
class integrable.1 = false
class integrable.2 = false
class integrable.3 = false
class isotropic_kaehler.1 = true
class isotropic_kaehler.2 = true
class isotropic_kaehler.3 = true
class main_W.1 = false
class almost_kaehler.1 = false
class in_W = false
structure H_remark
J1 = e2,-e1,e4,-e3
J2 = e3,-e4,-e1,e2
expect norm_F.1 = 0
expect norm_N.1 = 8
expect norm_F.2 = 0
expect norm_N.2 = 0
expect norm_F.3 = 0
expect norm_N.3 = -8
class kaehler.1 = false
class kaehler.2 = false
class kaehler.3 = false
class integrable.1 = false
class integrable.2 = false
class integrable.3 = false
class isotropic_kaehler.1 = true
class isotropic_kaehler.2 = true
class isotropic_kaehler.3 = true
class main_W.1 = false
class almost_kaehler.1 = false
class in_W = false
)"},
      {"engel_b", R"(manifold engel_b
title Engel manifold: isotropic hyper-Kaehler, non-integrable but symplectic
kind chart
signature +-+-
metric 1 1 = 1
metric 2 2 = -(1 - u1^2 + u3^2)
metric 2 3 = -u1
metric 2 4 = u3
metric 3 3 = 1
metric 4 4 = -1
frame 1 = 1, 0, 0, 0
frame 2 = 0, 1, u1, u3
frame 3 = 0, 0, -1, 0
frame 4 = 0, 0, 0, -1
box -1:1, -1:1, -1:1, -1:1
point 0.3, 0.2, 0.5, 0.1
expect tau = 0
structure H
J1 = e3,e4,-e1,-e2
J2 = e2,-e1,-e4,e3
expect norm_N.1 = 0
expect norm_N.2 = 8
expect norm_N.3 = -8
expect norm_F.1 = 0
expect norm_F.2 = 0
expect norm_F.3 = 0
expect tau_star.1 = 0
expect tau_star.2 = 0
expect tau_star.3 = 0
class kaehler.1 = false
class kaehler.2 = false
class kaehler.3 = false
class integrable.1 = false
class integrable.2 = false
class integrable.3 = false
class isotropic_kaehler.1 = true
class isotropic_kaehler.2 = true
class isotropic_kaehler.3 = true
class almost_kaehler.1 = true
structure H_prime
J1 = e3,-e4,-e1,e2
J2 = e2,-e1,e4,-e3
expect norm_N.1 = 0
expect norm_N.2 = 8
expect norm_N.3 = -8
expect norm_F.1 = 0
expect norm_F.2 = 0
expect norm_F.3 = 0
expect tau_star.1 = 0
expect tau_star.2 = 0
expect tau_star.3 = 0
class kaehler.1 = false
class kaehler.2 = false
class kaehler.3 = false
class integrable.1 = false
class integrable.2 = false
class integrable.3 = false
class isotropic_kaehler.1 = true
class isotropic_kaehler.2 = true
class isotropic_kaehler.3 = true
class almost_kaehler.1 = true
)"},
      {"semi_space", R"(manifold semi_space
title Real semi-space with a conformally flat metric
kind chart
signature ++--
require u1 > 0
metric 1 1 = 1/u1^2
metric 2 2 = 1/u1^2
metric 3 3 = -1/u1^2
metric 4 4 = -1/u1^2
frame 1 = u1, 0, 0, 0
frame 2 = 0, u1, 0, 0
frame 3 = 0, 0, u1, 0
frame 4 = 0, 0, 0, u1
box 0.3:3, -2:2, -2:2, -2:2
point 0.5, 0.2, 0.5, 0.1
point 1, 0.2, 0.5, 0.1
point 2, 0.2, 0.5, 0.1
expect constant_curvature = -1
expect tau = -12
class flat = false
class einstein = true
structure H
J1 = e2,-e1,e4,-e3
J2 = e3,-e4,-e1,e2
expect norm_N.1 = 0
expect norm_N.2 = 0
expect norm_N.3 = 0
expect norm_F.1 = 8
expect norm_theta.1 = 4
expect norm_F.2 = -16
expect norm_F.3 = -16
expect norm_theta.2 = -16
expect norm_theta.3 = -16
expect tau_star.1 = 4
expect tau_star.2 = 0
expect tau_star.3 = 0
class integrable.1 = true
class integrable.2 = true
class integrable.3 = true
class hypercomplex = true
class in_W = true
class isotropic_kaehler.1 = false
class isotropic_kaehler.2 = false
class isotropic_kaehler.3 = false
)"},
      {"quarter_space", R"(manifold quarter_space
title Real quarter-space with a product of two hyperbolic-plane metrics
kind chart
signature ++--
require u1 > 0
require u3 > 0
metric 1 1 = 1/u1^2
metric 2 2 = 1/u1^2
metric 3 3 = -1/u3^2
metric 4 4 = -1/u3^2
frame 1 = u1, 0, 0, 0
frame 2 = 0, u1, 0, 0
frame 3 = 0, 0, u3, 0
frame 4 = 0, 0, 0, u3
box 0.3:3, -2:2, 0.3:3, -2:2
point 1, 0, 1, 0
point 1.3, 0.2, 0.7, -0.4
expect R.1221 = -1
expect R.3443 = 1
expect ricci.11 = -1
expect ricci.22 = -1
expect ricci.33 = -1
expect ricci.44 = -1
expect sectional.12 = -1
expect sectional.34 = 1
expect tau = 0
structure H
J1 = e2,-e1,e4,-e3
J2 = e3,-e4,-e1,e2
expect norm_N.1 = 0
expect norm_F.1 = 0
expect norm_theta.1 = 0
expect norm_N.2 = 0
expect norm_F.2 = 0
expect norm_theta.2 = 0
expect norm_N.3 = 0
expect norm_F.3 = 0
expect norm_theta.3 = 0
expect tau_star.1 = 0
expect tau_star.2 = 0
expect tau_star.3 = 0
class kaehler.1 = true
class integrable.2 = false
class integrable.3 = false
class hypercomplex = false
class isotropic_kaehler.1 = true
class isotropic_kaehler.2 = true
class isotropic_kaehler.3 = true
)"},
      {"cylinder_pseudo", R"(manifold cylinder_pseudo
title Real pseudo-hyper-cylinder in a pseudo-Euclidean 5-space
kind embedding
signature ++--
tolerance embedded
note The hypersurface is a line times a space of constant curvature 1; the curvature errata follow from that.
require u4 != 0
ambient +++--
embedding 1 = u1
embedding 2 = cosh(u4)*cos(u2)
embedding 3 = cosh(u4)*sin(u2)
embedding 4 = sinh(u4)*cos(u3)
embedding 5 = sinh(u4)*sin(u3)
frame 1 = 1, 0, 0, 0
frame 2 = 0, 1/cosh(u4), 0, 0
frame 3 = 0, 0, 1/sinh(u4), 0
frame 4 = 0, 0, 0, 1
box -1:1, -3:3, -3:3, 0.3:2.5
point 0.3, 0.2, 0.5, 0.5
point 0.3, 0.2, 0.5, 1
point 0.3, 0.2, 0.5, 2
expect R.2332 = -1
expect R.2442 = -tanh(u4)^2
erratum R.2442 = -1 | constant curvature 1 on the second factor
expect R.3443 = coth(u4)^2
erratum R.3443 = 1 | constant curvature 1 on the second factor
expect ricci.22 = 1 + tanh(u4)^2
erratum ricci.22 = 2 | trace of the corrected curvature
expect ricci.33 = -1 - coth(u4)^2
erratum ricci.33 = -2 | trace of the corrected curvature
expect ricci.44 = -tanh(u4)^2 - coth(u4)^2
erratum ricci.44 = -2 | trace of the corrected curvature
expect tau = 2*(1 + tanh(u4)^2 + coth(u4)^2)
erratum tau = 6 | trace of the corrected curvature
class flat = false
structure H
J1 = e2,-e1,-e4,e3
J2 = e3,e4,-e1,-e2
expect norm_N.1 = -8*tanh(u4)^2
expect norm_F.1 = -4*tanh(u4)^2
expect norm_nablaJ.1 = -4*tanh(u4)^2
expect norm_theta.1 = -tanh(u4)^2
expect norm_N.2 = -8*coth(u4)^2
expect norm_theta.2 = (2*tanh(u4) + coth(u4))^2
expect norm_F.2 = 4*(2*tanh(u4)^2 + coth(u4)^2)
expect norm_nablaJ.2 = 4*(2*tanh(u4)^2 + coth(u4)^2)
expect norm_N.3 = -8*(tanh(u4) - coth(u4))^2
expect norm_theta.3 = (tanh(u4) + coth(u4))^2
expect norm_F.3 = 4*(tanh(u4)^2 + coth(u4)^2)
expect norm_nablaJ.3 = 4*(tanh(u4)^2 + coth(u4)^2)
expect tau_star.1 = 0
erratum tau_star.1 = -2 | from the corrected curvature
expect tau_star.2 = 0
expect tau_star.3 = 0
class integrable.1 = false
class integrable.2 = false
class integrable.3 = false
class kaehler.1 = false
class kaehler.2 = false
class kaehler.3 = false
)"},
      {"cx_cylinder", R"(manifold cx_cylinder
title Complex cylinder, decomplexified
kind embedding
signature ++--
tolerance embedded
ambient +++---
embedding 1 = cos(u1)*cosh(u3)
embedding 2 = sin(u1)*cosh(u3)
embedding 3 = u2
embedding 4 = sin(u1)*sinh(u3)
embedding 5 = -cos(u1)*sinh(u3)
embedding 6 = u4
frame 1 = 1, 0, 0, 0
frame 2 = 0, 1, 0, 0
frame 3 = 0, 0, 1, 0
frame 4 = 0, 0, 0, 1
box -2:2, -2:2, -2:2, -2:2
point 0.3, 0.2, 0.5, 0.1
point 1, 0.7, -0.4, 0.3
expect constant_curvature = 0
expect max_riemann = 0
expect tau = 0
class flat = true
structure H
J1 = e2,-e1,-e4,e3
J2 = e3,e4,-e1,-e2
expect norm_F.1 = 0
expect norm_F.2 = 0
expect norm_F.3 = 0
expect norm_N.1 = 0
expect norm_N.2 = 0
expect norm_N.3 = 0
class kaehler.1 = true
class kaehler.2 = true
class kaehler.3 = true
class pseudo_hyper_kaehler = true
class hypercomplex = true
)"},
      {"cx_cone", R"(manifold cx_cone
title Complex cone, decomplexified
kind embedding
signature ++--
tolerance embedded
note Since nabla J1 = 0 and J3 = J1 J2, the J3 norms coincide with the J2 norms.
require u1^2 + u3^2 != 0
let r = u1^2 + u3^2
let lam = u1/r
let mu = u3/r
ambient +++---
embedding 1 = u1*cos(u2)*cosh(u4) - u3*sin(u2)*sinh(u4)
embedding 2 = u1*sin(u2)*cosh(u4) + u3*cos(u2)*sinh(u4)
embedding 3 = u1
embedding 4 = u1*sin(u2)*sinh(u4) + u3*cos(u2)*cosh(u4)
embedding 5 = -u1*cos(u2)*sinh(u4) + u3*sin(u2)*cosh(u4)
embedding 6 = u3
frame 1 = 1/sqrt(2), 0, 0, 0
frame 2 = 0, lam, 0, mu
frame 3 = 0, 0, 1/sqrt(2), 0
frame 4 = 0, -mu, 0, lam
box 0.3:1.5, -2:2, 0.3:1.5, -1:1
point 1, 0.7, 0.4, 0.3
point 0.6, -0.2, 1.1, 0.5
expect max_riemann = 0
class flat = true
structure H
J1 = e2,-e1,-e4,e3
J2 = e3,e4,-e1,-e2
expect norm_N.1 = 0
expect norm_N.2 = 0
expect norm_N.3 = 0
expect norm_F.1 = 0
expect norm_F.2 = 16*(mu^2 - lam^2)
expect norm_nablaJ.2 = 16*(mu^2 - lam^2)
expect norm_theta.2 = 8*(mu^2 - lam^2)
expect norm_F.3 = 4*(mu^2 - lam^2)
erratum norm_F.3 = 16*(mu^2 - lam^2) | equals the J2 value because nabla J1 = 0
expect norm_nablaJ.3 = 4*(mu^2 - lam^2)
erratum norm_nablaJ.3 = 16*(mu^2 - lam^2) | equals the J2 value because nabla J1 = 0
expect norm_theta.3 = 2*(mu^2 - lam^2)
erratum norm_theta.3 = 8*(mu^2 - lam^2) | equals the J2 value because nabla J1 = 0
class kaehler.1 = true
class kaehler.2 = false
class kaehler.3 = false
class main_W.2 = false
class main_W.3 = false
class integrable.1 = true
class integrable.2 = true
class integrable.3 = true
class hypercomplex = true
)"},
      {"cx_sphere", R"(manifold cx_sphere
title Complex unit sphere, decomplexified
kind embedding
signature ++--
tolerance embedded
note The complex unit sphere is a complex space form: nu = 1 and nu*2 = 0 on every totally real frame section.
require cos(u1)^2 + sinh(u3)^2 > 1e-12
let D = cos(u1)^2 + sinh(u3)^2
let lam = cos(u1)*cosh(u3)/D
let mu = sin(u1)*sinh(u3)/D
let nu_printed = (sinh(2*u3)^2 - sin(2*u1)^2)/(4*D^4)
let nus_printed = sin(2*u1)*sinh(2*u3)/(2*D^4)
let th1 = (sin(2*u1)^2 - sinh(2*u3)^2)/D^2
ambient +++---
embedding 1 = cos(u1)*cos(u2)*cosh(u3)*cosh(u4) - sin(u1)*sin(u2)*sinh(u3)*sinh(u4)
embedding 2 = cos(u1)*sin(u2)*cosh(u3)*cosh(u4) + sin(u1)*cos(u2)*sinh(u3)*sinh(u4)
embedding 3 = sin(u1)*cosh(u3)
embedding 4 = cos(u1)*sin(u2)*cosh(u3)*sinh(u4) + sin(u1)*cos(u2)*sinh(u3)*cosh(u4)
embedding 5 = -cos(u1)*cos(u2)*cosh(u3)*sinh(u4) + sin(u1)*sin(u2)*sinh(u3)*cosh(u4)
embedding 6 = -cos(u1)*sinh(u3)
frame 1 = 1, 0, 0, 0
frame 2 = 0, lam, 0, mu
frame 3 = 0, 0, 1, 0
frame 4 = 0, -mu, 0, lam
box -1:1, -2:2, 0.2:1.2, -1:1
point 0.3, 0.5, 0.8, 0.2
point -0.7, 1, 0.4, -0.3
point 0, 0.4, 1, 0.2
expect nu = nu_printed
erratum nu = 1 | complex space form
expect nu_star2 = nus_printed
erratum nu_star2 = 0 | complex space form
expect tau = 8*nu_printed
erratum tau = 8 | tau = 8 nu with nu = 1
expect almost_einstein_residual = 0
class flat = false
structure H
J1 = e2,-e1,-e4,e3
J2 = e3,e4,-e1,-e2
expect tau_star.1 = 0
expect tau_star.2 = 8*nus_printed
erratum tau_star.2 = 0 | tau*2 = 8 nu*2 with nu*2 = 0
expect tau_star.3 = 0
expect norm_N.1 = -32*nu_printed
erratum norm_N.1 = 8*th1 | chain with the computed Lie form norm
expect norm_nablaJ.1 = -16*nu_printed
erratum norm_nablaJ.1 = 4*th1 | chain with the computed Lie form norm
expect norm_theta.1 = -4*nu_printed
erratum norm_theta.1 = th1 | computed Lie form norm
expect norm_N.3 = -32*nu_printed
erratum norm_N.3 = 8*th1 | chain with the computed Lie form norm
expect norm_nablaJ.3 = 16*nu_printed
erratum norm_nablaJ.3 = -4*th1 | chain with the computed Lie form norm
expect norm_theta.3 = 4*nu_printed
erratum norm_theta.3 = -th1 | chain with the computed Lie form norm
expect norm_F.2 = 0
class kaehler.2 = true
class kaehler.1 = false
class kaehler.3 = false
class integrable.1 = false
class integrable.3 = false
)"},
      {"lie_a", R"(manifold lie_a
title Lie group, complex for J2 but not hypercomplex
kind lie
signature ++--
generator 1 = 0 0 1 0; 0 0 0 0; 0 0 0 0; 0 0 0 0
generator 2 = 0 1 0 0; -1 0 0 0; 0 0 0 0; 0 0 0 0
generator 3 = 0 0 0 0; 0 0 1 0; 0 0 0 0; 0 0 0 0
generator 4 = 0 0 0 0; 0 0 0 0; 0 0 0 0; 0 0 0 1
point 0, 0, 0, 0
expect R.1221 = 1
expect R.1331 = 1
expect R.2332 = -1
expect tau = 2
class flat = false
structure H
J1 = e2,-e1,-e4,e3
J2 = e3,e4,-e1,-e2
expect norm_N.1 = -8
expect norm_nablaJ.1 = -4
expect norm_theta.1 = -1
expect norm_nablaJ.2 = 8
expect norm_theta.2 = 4
expect norm_N.2 = 0
expect norm_N.3 = -8
expect norm_nablaJ.3 = 12
expect norm_theta.3 = 1
expect tau_star.1 = -2
expect tau_star.2 = 0
expect tau_star.3 = 0
class integrable.1 = false
class integrable.2 = true
class integrable.3 = false
class hypercomplex = false
)"},
      {"lie_b", R"(manifold lie_b
title Lie group, flat and Kaehler for J1 but not hypercomplex
kind lie
signature +-+-
generator 1 = 0 0 1 0; 0 0 0 0; 0 0 0 0; 0 0 0 0
generator 2 = 0 1 0 0; -1 0 0 0; 0 0 0 0; 0 0 0 0
generator 3 = 0 0 0 0; 0 0 1 0; 0 0 0 0; 0 0 0 0
generator 4 = 0 0 0 0; 0 0 0 0; 0 0 0 0; 0 0 0 1
point 0, 0, 0, 0
expect max_riemann = 0
class flat = true
structure H
J1 = e3,e4,-e1,-e2
J2 = -e4,e3,-e2,e1
expect norm_F.1 = 0
expect norm_N.2 = -8
expect norm_N.3 = -8
expect norm_nablaJ.2 = 4
expect norm_nablaJ.3 = 4
expect norm_F.2 = 4
expect norm_F.3 = 4
expect norm_theta.2 = 1
expect norm_theta.3 = 1
class kaehler.1 = true
class integrable.2 = false
class integrable.3 = false
class hypercomplex = false
)"},
  };
  return sources;
}

} // namespace hcx::detail
