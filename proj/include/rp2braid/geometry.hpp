#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rp2braid::geom {

using Vec3 = std::array<double, 3>;
using cplx = std::complex<double>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 normalized(const Vec3& a);
Vec3 neg(const Vec3& a);
// central angle, accurate for nearly equal and nearly antipodal vectors
double sphere_distance(const Vec3& a, const Vec3& b);

// Unit vector with the first coordinate of size > 1e-12 made positive.
struct RP2Point {
    Vec3 v{0, 0, 1};
    static RP2Point from(const Vec3& any);
    bool equals(const RP2Point& o, double tol = 1e-9) const;
};
double rp2_distance(const RP2Point& a, const RP2Point& b);

struct SphereConfiguration {
    std::vector<Vec3> x;       // x[i] and x[partner[i]] are antipodal
    std::vector<int> partner;  // x[0..n) are the input representatives, x[n+i] = -x[i]
    int n() const { return static_cast<int>(x.size()) / 2; }
};

SphereConfiguration antipodal_lift(const std::vector<RP2Point>& points, double tol = 1e-9);
std::vector<RP2Point> project(const std::vector<Vec3>& pts);
// one third of the minimum pairwise spherical distance
double separation(const SphereConfiguration& c);

// Stereographic chart from `pole` after a rotation taking it to the north pole.
struct Chart {
    Vec3 pole{0, 0, 1}, u{1, 0, 0}, w{0, 1, 0};
    static Chart from_pole(const Vec3& pole);
    cplx to_chart(const Vec3& p) const;
    Vec3 from_chart(cplx z) const;
};
// antipodal map in any such chart
inline cplx chart_antipode(cplx z) { return -1.0 / std::conj(z); }

// Axis poles, then 64 seeded random unit vectors; the candidate farthest from the configuration wins.
Chart choose_chart(const SphereConfiguration& c, std::uint64_t seed = 0);

// R_{x_i}(z) = C (z - z_i)^D / prod_k (z - z_k)^{2n-2}, in the shifted variable w = z - z_i.
struct RationalMapProduct {
    int base = 0;
    int degree = 0;                 // (2n-1)(2n-2)
    int multiplicity = 0;           // 2n-2
    cplx zi;                        // chart position of x_i
    cplx C;                         // constant of the product
    std::vector<cplx> shifts;       // z_k - z_i for k != i
    std::vector<cplx> denominator;  // coefficients of prod_k (w - a_k)^{2n-2}, low to high

    cplx operator()(cplx z) const;  // evaluated in product form
    // numerator - v * denominator as a polynomial in w
    std::vector<cplx> equation(cplx v) const;
};

RationalMapProduct build_R(int i, const SphereConfiguration& c, const Chart& chart);

struct RootReport {
    std::vector<cplx> roots;  // chart coordinates z (not shifted)
    double max_residual = 0;  // |P(w)| / sum |c_k| |w|^k
    double min_gap = 0;       // min pairwise distance of roots
    double min_simplicity = 0;
    int iterations = 0;
};

// Simultaneous iteration on a generic polynomial (coefficients low to high).
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs, std::uint64_t seed = 0, int* iterations = nullptr);
// All D solutions of R(z) = v. Throws std::runtime_error on non-convergence or a multiple root.
RootReport preimage_points(const RationalMapProduct& R, cplx v, std::uint64_t seed = 0);

struct RadiusChoice {
    double r = 0;
    std::vector<double> per_point;  // r_i
    int worst_point = -1;
};
// Throws std::runtime_error naming the point when the halving search is exhausted.
RadiusChoice choose_regular_radius(const SphereConfiguration& c, const Chart& chart, std::uint64_t seed = 0);

struct GeometryOptions {
    std::uint64_t seed = 0;
    std::optional<double> radius;  // replay a previous radius decision
    std::optional<Vec3> pole;      // replay a previous pole decision
};

struct SectionResult {
    std::string method;
    std::vector<RP2Point> inputs;
    std::vector<RP2Point> outputs;
    std::vector<Vec3> sphere_points;  // before projection
    std::vector<int> sphere_center;   // index into the lifted configuration
    double radius = 0;                // mobius only
    Vec3 pole{0, 0, 1};               // mobius only
    double sep = 0;
    double max_residual = 0;
    double min_separation = 0;        // over outputs and inputs, in RP^2
    double antipodal_residual = 0;    // sphere stage
    double max_center_distance = 0;   // max distance of a sphere point to its center
    bool discs_disjoint = false;
};

SectionResult section_mobius(const std::vector<RP2Point>& points, int k, const GeometryOptions& opt = {});
SectionResult section_shrink(const std::vector<RP2Point>& points);

// n points of RP^2 whose lifts are at least min_angle apart.
std::vector<RP2Point> seeded_configuration(int n, std::uint64_t seed, double min_angle = 0.25);

// max over a of the RP^2 distance to the nearest point of b, symmetrized; +inf on size mismatch
double set_distance(const std::vector<RP2Point>& a, const std::vector<RP2Point>& b);
// same on the sphere
double sphere_set_distance(const std::vector<Vec3>& a, const std::vector<Vec3>& b);
// max over p of min over q of |p + q|
double antipodal_closure_residual(const std::vector<Vec3>& pts);

double min_rp2_separation(const std::vector<RP2Point>& pts);

std::string render_svg(const SectionResult& r);

}  // namespace rp2braid::geom
