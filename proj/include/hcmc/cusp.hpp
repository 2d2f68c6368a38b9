#pragma once

// Cusp ends C = {z >= t0} / G(u, v): reduction to the fundamental
// parallelogram, torus systoles, the vertical/tilted plane families
// P_{H,c}(k1, k2) and their quotient annuli.

#include <limits>

#include "hcmc/hmodel.hpp"
#include "hcmc/lattice.hpp"
#include "hcmc/surfaces.hpp"
#include "hcmc/trimesh.hpp"

namespace hcmc {

class CuspEnd {
 public:
  CuspEnd(Latticed lattice, double t0) : lattice_(std::move(lattice)), t0_(t0) {
    if (!(t0 > 0)) throw InvalidArgument("CuspEnd: t0 must be positive");
  }
  const Latticed& lattice() const { return lattice_; }
  double t0() const { return t0_; }
  bool contains(const HPointd& p) const { return p.z() >= t0_; }

 private:
  Latticed lattice_;
  double t0_;
};

/// Element (m, n) of pi_1 of the cusp, i.e. the deck translation tau(m, n).
struct HomotopyClass {
  long m = 0;
  long n = 0;
  bool operator==(const HomotopyClass&) const = default;
  bool is_trivial() const { return m == 0 && n == 0; }
};

struct Reduction {
  HPointd point;
  HomotopyClass removed;  ///< p = tau(removed)(point)
};

/// Representative of p in the half-open parallelogram {s u + t v : s, t in [0, 1)}.
/// Lattice coordinates within 1e-12 below an integer are rounded up to it,
/// which makes the reduction idempotent in floating point.
Reduction reduce(const HPointd& p, const Latticed& L);

struct ShortestVector {
  long m = 0;
  long n = 0;
  double length = 0;  ///< Euclidean |m u + n v|
};

/// Shortest nonzero lattice vector by Lagrange-Gauss reduction.
ShortestVector shortest_vector(const Latticed& L);

/// Systole of the flat torus H(t) / G(u, v): min |m u + n v| / t.
double systole_torus(const Latticed& L, double t);

/// Half the systole; constant on the flat torus.
double injectivity_radius_torus(const Latticed& L, double t);

struct PrimitiveSplit {
  long k = 0;  ///< gcd(|m|, |n|)
  long k1 = 0;
  long k2 = 0;
};

/// (m, n) = k (k1, k2) with gcd(k1, k2) = 1.
PrimitiveSplit primitive_split(const HomotopyClass& c);

/// The change of c under tau(m, n): tau(m, n)(P_{0,c}(k1, k2)) =
/// P_{0, c + (k1 n - k2 m) det(u, v)}(k1, k2).
double plane_shift(const Latticed& L, long k1, long k2, long m, long n);

/// Smallest positive plane_shift over (m, n): |det(u, v)| for coprime (k1, k2).
double plane_family_period(const Latticed& L, long k1, long k2);

/// P_{H,c}^{side}(k1, k2): the boundary line is
/// (k1 u_y + k2 v_y) x - (k1 u_x + k2 v_x) y + c = 0, invariant under tau(k1, k2).
TiltedPlane cusp_plane(const Latticed& L, long k1, long k2, double c, Side side, double H);

inline constexpr double kInfiniteHeight = std::numeric_limits<double>::infinity();

/// Hyperbolic area of the quotient annulus psi(P_{H,c}(k1, k2) cap {t_lo <= z <= t_hi}),
/// by adaptive quadrature of the induced area element after the substitution w = 1/z.
/// t_hi may be kInfiniteHeight.
double tilted_annulus_area(const Latticed& L, long k1, long k2, double H, double t_lo,
                           double t_hi = kInfiniteHeight);

struct AnnulusMeshOptions {
  double c = 0;
  Side side = Side::Plus;
  double t_lo = 1;
  double t_hi = 4;
  int n_along = 16;   ///< vertices around the annulus
  int n_height = 16;  ///< rows between t_lo and t_hi, geometrically spaced in z
};

/// Mesh of the quotient annulus of P_{H,c}(k1, k2). Faces crossing the seam
/// carry the deck shift k1 u + k2 v on the wrapped corners.
TriMesh mesh_quotient_annulus(const Latticed& L, long k1, long k2, double H,
                              const AnnulusMeshOptions& opt);

/// The quotient annulus with a horospherical flange of Euclidean width
/// `flange_width` attached along its lower boundary at z = t_lo. The flange
/// has mean curvature 1, so it lies outside the |H| < 1 hypotheses.
TriMesh mesh_flanged_annulus(const Latticed& L, long k1, long k2, double H,
                             const AnnulusMeshOptions& opt, double flange_width, int n_flange);

struct CuspAreaReport {
  double area = 0;
  double len_gamma1 = 0;
  double bound = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Area(E) <= Length(Gamma_1) / (1 - H^2), Gamma_1 being the boundary loop
/// with the lowest mean height. Corner shifts must be lattice vectors.
CuspAreaReport cusp_area_bound_check(const TriMesh& m, const Latticed& L, double H,
                                     double tolerance = 0.01);

}  // namespace hcmc
