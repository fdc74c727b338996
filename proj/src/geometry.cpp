#include "rp2braid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rp2braid/kernels.hpp"

namespace rp2braid::geom {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& a) {
    double s = std::sqrt(dot(a, a));
    if (!(s > 0) || !std::isfinite(s)) throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    return {a[0] / s, a[1] / s, a[2] / s};
}

Vec3 neg(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

double sphere_distance(const Vec3& a, const Vec3& b) {
    Vec3 c = cross(a, b);
    return std::atan2(std::sqrt(dot(c, c)), dot(a, b));
}

RP2Point RP2Point::from(const Vec3& any) {
    // already-unit input is kept bit for bit so normalization is idempotent
    Vec3 v = std::fabs(dot(any, any) - 1) <= 2e-15 ? any : normalized(any);
    for (double c : v) {
        if (std::fabs(c) > 1e-12) {
            if (c < 0) v = neg(v);
            break;
        }
    }
    return {v};
}

bool RP2Point::equals(const RP2Point& o, double tol) const { return rp2_distance(*this, o) <= tol; }

double rp2_distance(const RP2Point& a, const RP2Point& b) {
    Vec3 c = cross(a.v, b.v);
    return std::atan2(std::sqrt(dot(c, c)), std::fabs(dot(a.v, b.v)));
}

SphereConfiguration antipodal_lift(const std::vector<RP2Point>& points, double tol) {
    const int n = static_cast<int>(points.size());
    if (n < 1) throw std::invalid_argument("need at least one point");
    SphereConfiguration c;
    c.x.resize(2 * n);
    c.partner.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        Vec3 v = RP2Point::from(points[i].v).v;
        for (int j = 0; j < i; ++j)
            if (rp2_distance({v}, {c.x[j]}) <= tol)
                throw std::invalid_argument("input points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                            " coincide in RP^2");
        c.x[i] = v;
        c.x[n + i] = neg(v);
        c.partner[i] = n + i;
        c.partner[n + i] = i;
    }
    return c;
}

std::vector<RP2Point> project(const std::vector<Vec3>& pts) {
    std::vector<RP2Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(RP2Point::from(p));
    return out;
}

double separation(const SphereConfiguration& c) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.x.size(); ++i)
        for (std::size_t j = i + 1; j < c.x.size(); ++j) m = std::min(m, sphere_distance(c.x[i], c.x[j]));
    return m / 3.0;
}

// ---- chart

Chart Chart::from_pole(const Vec3& pole) {
    Chart ch;
    ch.pole = normalized(pole);
    Vec3 axis{1, 0, 0};
    if (std::fabs(ch.pole[0]) > 0.6) axis = {0, 1, 0};
    double d = dot(axis, ch.pole);
    ch.u = normalized({axis[0] - d * ch.pole[0], axis[1] - d * ch.pole[1], axis[2] - d * ch.pole[2]});
    ch.w = cross(ch.pole, ch.u);
    return ch;
}

cplx Chart::to_chart(const Vec3& p) const {
    double a = dot(p, u), b = dot(p, w), c = dot(p, pole);
    // 1 - c loses digits near the south pole; a^2 + b^2 = (1 - c)(1 + c) is stable there
    double one_minus_c = c > 0 ? (a * a + b * b) / (1 + c) : 1 - c;
    return {a / one_minus_c, b / one_minus_c};
}

Vec3 Chart::from_chart(cplx z) const {
    double s = std::norm(z);
    double a = 2 * z.real() / (s + 1), b = 2 * z.imag() / (s + 1), c = (s - 1) / (s + 1);
    return {a * u[0] + b * w[0] + c * pole[0], a * u[1] + b * w[1] + c * pole[1], a * u[2] + b * w[2] + c * pole[2]};
}

Chart choose_chart(const SphereConfiguration& c, std::uint64_t seed) {
    std::vector<Vec3> cand{{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> g;
    for (int t = 0; t < 64; ++t) cand.push_back(normalized({g(rng), g(rng), g(rng)}));
    double best = -1;
    Vec3 pick{0, 0, 1};
    for (const auto& p : cand) {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& x : c.x) d = std::min(d, sphere_distance(p, x));
        if (d < 1e-3) continue;
        if (d > best) {
            best = d;
            pick = p;
        }
    }
    if (best < 0) throw std::runtime_error("no stereographic pole away from the configuration");
    return Chart::from_pole(pick);
}

// ---- the rational map

cplx RationalMapProduct::operator()(cplx z) const {
    cplx w = z - zi;
    cplx num = C;
    cplx den = 1.0;
    for (const auto& a : shifts) {
        // one factor w^{mult} / (w - a)^{mult} per k keeps the magnitudes balanced
        cplx ratio = w / (w - a);
        cplx p = 1.0;
        for (int e = 0; e < multiplicity; ++e) p *= ratio;
        den *= p;
    }
    return num * den;
}

std::vector<cplx> RationalMapProduct::equation(cplx v) const {
    std::vector<cplx> c(denominator.size());
    for (std::size_t k = 0; k < denominator.size(); ++k) c[k] = -v * denominator[k];
    c[degree] += C;
    return c;
}

RationalMapProduct build_R(int i, const SphereConfiguration& c, const Chart& chart) {
    const int N = static_cast<int>(c.x.size());
    if (i < 0 || i >= N) throw std::invalid_argument("base index out of range");
    std::vector<cplx> z(N);
    for (int k = 0; k < N; ++k) z[k] = chart.to_chart(c.x[k]);
    RationalMapProduct R;
    R.base = i;
    R.degree = (N - 1) * (N - 2);
    R.multiplicity = N - 2;
    R.zi = z[i];
    R.C = 1.0;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            if (j != k && j != i && k != i) R.C *= (z[j] - z[k]) / (z[j] - z[i]);
    for (int k = 0; k < N; ++k)
        if (k != i) R.shifts.push_back(z[k] - z[i]);
    std::vector<cplx> poly{1.0};
    for (const auto& a : R.shifts)
        for (int e = 0; e < R.multiplicity; ++e) {
            std::vector<cplx> next(poly.size() + 1, 0.0);
            for (std::size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] += poly[t];
                next[t] -= a * poly[t];
            }
            poly = std::move(next);
        }
    R.denominator = std::move(poly);
    return R;
}

// ---- roots

namespace {

struct NewtonRatio {
    virtual ~NewtonRatio() = default;
    virtual cplx operator()(cplx w) const = 0;
};

struct HornerRatio : NewtonRatio {
    const std::vector<cplx>& c;
    explicit HornerRatio(const std::vector<cplx>& coeffs) : c(coeffs) {}
    cplx operator()(cplx w) const override {
        cplx p = c.back(), d = 0.0;
        for (std::size_t k = c.size() - 1; k-- > 0;) {
            d = d * w + p;
            p = p * w + c[k];
        }
        return p / d;
    }
};

// P(w) = C w^D - v G(w), G = prod (w - a_k)^e, without expanding anything
struct ProductRatio : NewtonRatio {
    const RationalMapProduct& R;
    cplx v;
    ProductRatio(const RationalMapProduct& r, cplx val) : R(r), v(val) {}
    cplx operator()(cplx w) const override {
        cplx G = 1.0, logd = 0.0;
        for (const auto& a : R.shifts) {
            cplx f = w - a, p = 1.0;
            for (int e = 0; e < R.multiplicity; ++e) p *= f;
            G *= p;
            logd += static_cast<double>(R.multiplicity) / f;
        }
        cplx wd = std::pow(w, R.degree - 1);
        cplx P = R.C * wd * w - v * G;
        cplx dP = R.C * static_cast<double>(R.degree) * wd - v * G * logd;
        return P / dP;
    }
};

std::vector<cplx> aberth(const NewtonRatio& ratio, int D, double rho, std::uint64_t seed, int* iters) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0, 2 * M_PI);
    const double phi = phase(rng);
    std::vector<double> re(D), im(D), sr(D), si(D);
    for (int j = 0; j < D; ++j) {
        double t = 2 * M_PI * j / D + phi;
        re[j] = rho * std::cos(t);
        im[j] = rho * std::sin(t);
    }
    int it = 0;
    bool done = false;
    for (; it < 500 && !done; ++it) {
        kernels::aberth_sums(re.data(), im.data(), D, sr.data(), si.data());
        double worst = 0;
        for (int j = 0; j < D; ++j) {
            cplx w{re[j], im[j]};
            cplx N = ratio(w);
            cplx step = N / (1.0 - N * cplx{sr[j], si[j]});
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                throw std::runtime_error("root finder produced a non-finite step");
            w -= step;
            re[j] = w.real();
            im[j] = w.imag();
            worst = std::max(worst, std::abs(step) / std::max(std::abs(w), 1e-300));
        }
        done = worst < 1e-13;
    }
    if (!done) throw std::runtime_error("root finder did not converge in 500 iterations");
    std::vector<cplx> out(D);
    for (int j = 0; j < D; ++j) {
        cplx w{re[j], im[j]};
        out[j] = w - ratio(w);  // polish
    }
    if (iters) *iters = it;
    return out;
}

void residuals(const std::vector<cplx>& coeffs, const std::vector<cplx>& w, std::vector<double>& rel) {
    const std::size_t deg = coeffs.size() - 1;
    std::vector<double> cr(deg + 1), ci(deg + 1), zr(w.size()), zi(w.size()), vr(w.size()), vi(w.size()), nm(w.size());
    for (std::size_t k = 0; k <= deg; ++k) {
        cr[k] = coeffs[k].real();
        ci[k] = coeffs[k].imag();
    }
    for (std::size_t p = 0; p < w.size(); ++p) {
        zr[p] = w[p].real();
        zi[p] = w[p].imag();
    }
    kernels::horner_batch(cr.data(), ci.data(), deg, zr.data(), zi.data(), w.size(), vr.data(), vi.data(), nm.data());
    rel.resize(w.size());
    for (std::size_t p = 0; p < w.size(); ++p) rel[p] = std::hypot(vr[p], vi[p]) / nm[p];
}

}  // namespace

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs, std::uint64_t seed, int* iterations) {
    std::vector<cplx> c = coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    const int D = static_cast<int>(c.size()) - 1;
    if (D < 1) return {};
    std::size_t low = 0;
    while (c[low] == 0.0) ++low;  // zero roots
    std::vector<cplx> out(low, 0.0);
    if (low > 0) c.erase(c.begin(), c.begin() + low);
    const int d = static_cast<int>(c.size()) - 1;
    if (d >= 1) {
        double rho = std::pow(std::abs(c[0] / c[d]), 1.0 / d);
        auto r = aberth(HornerRatio(c), d, rho, seed, iterations);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

RootReport preimage_points(const RationalMapProduct& R, cplx v, std::uint64_t seed) {
    const int D = R.degree;
    cplx G0 = 1.0;
    for (const auto& a : R.shifts) G0 *= std::pow(-a, R.multiplicity);
    double rho = std::pow(std::abs(v * G0 / R.C), 1.0 / D);
    RootReport rep;
    std::vector<cplx> w = aberth(ProductRatio(R, v), D, rho, seed, &rep.iterations);

    std::vector<cplx> eq = R.equation(v);
    std::vector<double> rel;
    residuals(eq, w, rel);
    rep.max_residual = *std::max_element(rel.begin(), rel.end());
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (int a = 0; a < D; ++a)
        for (int b = a + 1; b < D; ++b) rep.min_gap = std::min(rep.min_gap, std::abs(w[a] - w[b]));
    rep.min_simplicity = std::numeric_limits<double>::infinity();
    {
        // |w P'(w)| relative to the same absolute-value norm as the residual
        std::vector<double> nrm;
        residuals(eq, w, nrm);
        for (int j = 0; j < D; ++j) {
            cplx G = 1.0, logd = 0.0;
            for (const auto& a : R.shifts) {
                G *= std::pow(w[j] - a, R.multiplicity);
                logd += static_cast<double>(R.multiplicity) / (w[j] - a);
            }
            cplx dP = R.C * static_cast<double>(D) * std::pow(w[j], D - 1) - v * G * logd;
            double norm = 0;
            for (int k = 0; k <= D; ++k) norm += std::abs(eq[k]) * std::pow(std::abs(w[j]), k);
            rep.min_simplicity = std::min(rep.min_simplicity, std::abs(w[j] * dP) / norm);
        }
    }
    if (rep.min_gap < 1e-10 || rep.min_simplicity < 1e-10)
        throw std::runtime_error("multiple root detected; the value is not regular");
    rep.roots.resize(D);
    for (int j = 0; j < D; ++j) rep.roots[j] = w[j] + R.zi;
    return rep;
}

// ---- regular radius

namespace {

std::pair<Vec3, Vec3> tangent_frame(const Vec3& x) {
    Vec3 a = std::fabs(x[0]) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    double d = dot(a, x);
    Vec3 t1 = normalized({a[0] - d * x[0], a[1] - d * x[1], a[2] - d * x[2]});
    return {t1, cross(x, t1)};
}

Vec3 along(const Vec3& x, const Vec3& dir, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * x[0] + s * dir[0], c * x[1] + s * dir[1], c * x[2] + s * dir[2]};
}

bool regular_at(const RationalMapProduct& R, const Chart& chart, const Vec3& center, double sep, double r,
                std::uint64_t seed) {
    for (int t = 0; t < 8; ++t) {
        cplx v = std::polar(r, 2 * M_PI * t / 8);
        RootReport rep;
        try {
            rep = preimage_points(R, v, seed + t);
        } catch (const std::runtime_error&) {
            return false;
        }
        if (rep.min_gap <= 1e-8 || rep.min_simplicity <= 1e-10) return false;
        for (const auto& z : rep.roots)
            if (sphere_distance(chart.from_chart(z), center) > sep) return false;
    }
    return true;
}

}  // namespace

RadiusChoice choose_regular_radius(const SphereConfiguration& c, const Chart& chart, std::uint64_t seed) {
    const double sep = separation(c);
    const int N = static_cast<int>(c.x.size());
    std::vector<RationalMapProduct> Rs;
    double r0 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < N; ++i) {
        Rs.push_back(build_R(i, c, chart));
        auto [t1, t2] = tangent_frame(c.x[i]);
        for (int t = 0; t < 8; ++t) {
            double th = 2 * M_PI * t / 8;
            Vec3 dir{std::cos(th) * t1[0] + std::sin(th) * t2[0], std::cos(th) * t1[1] + std::sin(th) * t2[1],
                     std::cos(th) * t1[2] + std::sin(th) * t2[2]};
            r0 = std::min(r0, std::abs(Rs[i](chart.to_chart(along(c.x[i], dir, sep)))));
        }
    }
    r0 *= 0.5;
    RadiusChoice out;
    out.r = std::numeric_limits<double>::infinity();
    for (int i = 0; i < N; ++i) {
        double r = r0;
        int h = 0;
        while (!regular_at(Rs[i], chart, c.x[i], sep, r, seed + 1000 * i)) {
            if (++h > 60 || !(r > 0))
                throw std::runtime_error("no regular radius found for lifted point " + std::to_string(i + 1));
            r *= 0.5;
        }
        out.per_point.push_back(r);
        if (r < out.r) {
            out.r = r;
            out.worst_point = i;
        }
    }
    return out;
}

// ---- set comparisons

double min_rp2_separation(const std::vector<RP2Point>& pts) {
    std::vector<double> x, y, z;
    for (const auto& p : pts) {
        x.push_back(p.v[0]);
        y.push_back(p.v[1]);
        z.push_back(p.v[2]);
    }
    double c2 = kernels::min_pair_chord2(x.data(), y.data(), z.data(), pts.size());
    if (!std::isfinite(c2)) return c2;
    return 2 * std::asin(std::min(1.0, std::sqrt(c2) / 2));
}

double set_distance(const std::vector<RP2Point>& a, const std::vector<RP2Point>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    auto directed = [](const std::vector<RP2Point>& p, const std::vector<RP2Point>& q) {
        double worst = 0;
        for (const auto& s : p) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& t : q) best = std::min(best, rp2_distance(s, t));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double sphere_set_distance(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    auto directed = [](const std::vector<Vec3>& p, const std::vector<Vec3>& q) {
        double worst = 0;
        for (const auto& s : p) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& t : q) best = std::min(best, sphere_distance(s, t));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double antipodal_closure_residual(const std::vector<Vec3>& pts) {
    double worst = 0;
    for (const auto& p : pts) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : pts) {
            Vec3 s{p[0] + q[0], p[1] + q[1], p[2] + q[2]};
            best = std::min(best, std::sqrt(dot(s, s)));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

// ---- constructions

namespace {

void finish(SectionResult& res, const SphereConfiguration& c) {
    const int n = c.n();
    std::vector<RP2Point> out;
    for (std::size_t p = 0; p < res.sphere_points.size(); ++p)
        if (res.sphere_center[p] < n) out.push_back(RP2Point::from(res.sphere_points[p]));
    std::sort(out.begin(), out.end(), [](const RP2Point& a, const RP2Point& b) { return a.v < b.v; });
    res.outputs = out;
    std::vector<RP2Point> all = out;
    all.insert(all.end(), res.inputs.begin(), res.inputs.end());
    res.min_separation = min_rp2_separation(all);
    res.antipodal_residual = antipodal_closure_residual(res.sphere_points);
    res.max_center_distance = 0;
    for (std::size_t p = 0; p < res.sphere_points.size(); ++p)
        res.max_center_distance =
            std::max(res.max_center_distance, sphere_distance(res.sphere_points[p], c.x[res.sphere_center[p]]));
    double min_center = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.x.size(); ++i)
        for (std::size_t j = i + 1; j < c.x.size(); ++j) min_center = std::min(min_center, sphere_distance(c.x[i], c.x[j]));
    // the farthest shrink target sits exactly at distance sep; allow rounding
    res.discs_disjoint = res.max_center_distance <= res.sep * (1 + 1e-12) && min_center > 2 * res.sep;
}

}  // namespace

SectionResult section_mobius(const std::vector<RP2Point>& points, int k, const GeometryOptions& opt) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::invalid_argument("the Mobius construction needs n >= 3");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    SphereConfiguration c = antipodal_lift(points);
    SectionResult res;
    res.method = "mobius";
    for (int i = 0; i < n; ++i) res.inputs.push_back({c.x[i]});
    res.sep = separation(c);
    Chart chart = opt.pole ? Chart::from_pole(*opt.pole) : choose_chart(c, opt.seed);
    res.pole = chart.pole;
    res.radius = opt.radius ? *opt.radius : choose_regular_radius(c, chart, opt.seed).r;
    for (int i = 0; i < 2 * n; ++i) {
        RationalMapProduct R = build_R(i, c, chart);
        for (int t = 1; t <= k; ++t) {
            RootReport rep = preimage_points(R, res.radius / t, opt.seed + 7919 * i + t);
            res.max_residual = std::max(res.max_residual, rep.max_residual);
            for (const auto& z : rep.roots) {
                res.sphere_points.push_back(normalized(chart.from_chart(z)));
                res.sphere_center.push_back(i);
            }
        }
    }
    finish(res, c);
    return res;
}

SectionResult section_shrink(const std::vector<RP2Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::invalid_argument("the shrinking construction needs n >= 3");
    SphereConfiguration c = antipodal_lift(points);
    SectionResult res;
    res.method = "shrink";
    for (int i = 0; i < n; ++i) res.inputs.push_back({c.x[i]});
    res.sep = separation(c);
    const int N = 2 * n;
    for (int i = 0; i < N; ++i) {
        double M = 0;
        for (int j = 0; j < N; ++j)
            if (j != i && j != c.partner[i]) M = std::max(M, sphere_distance(c.x[i], c.x[j]));
        for (int j = 0; j < N; ++j) {
            if (j == i || j == c.partner[i]) continue;
            const Vec3& a = c.x[i];
            const Vec3& b = c.x[j];
            double d = dot(a, b);
            Vec3 dir = normalized({b[0] - d * a[0], b[1] - d * a[1], b[2] - d * a[2]});
            double phi = sphere_distance(a, b) * res.sep / M;
            res.sphere_points.push_back(along(a, dir, phi));
            res.sphere_center.push_back(i);
        }
    }
    finish(res, c);
    return res;
}

std::vector<RP2Point> seeded_configuration(int n, std::uint64_t seed, double min_angle) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<RP2Point> pts;
        for (int i = 0; i < n; ++i) pts.push_back(RP2Point::from(normalized({g(rng), g(rng), g(rng)})));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) ok = rp2_distance(pts[i], pts[j]) >= min_angle;
        if (ok) return pts;
    }
    throw std::runtime_error("could not draw a separated configuration");
}

std::string render_svg(const SectionResult& r) {
    const double R = 180, cx0 = 200, cx1 = 600, cy = 200;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"430\" viewBox=\"0 0 800 430\">\n";
    s << "<rect width=\"800\" height=\"430\" fill=\"white\"/>\n";
    for (double cx : {cx0, cx1})
        s << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << R << "\" fill=\"none\" stroke=\"black\"/>\n";
    s << "<text x=\"" << cx0 << "\" y=\"415\" text-anchor=\"middle\" font-size=\"14\">z &gt;= 0</text>\n";
    s << "<text x=\"" << cx1 << "\" y=\"415\" text-anchor=\"middle\" font-size=\"14\">z &lt; 0 (seen from below)</text>\n";
    auto dot_at = [&](const Vec3& p, double rad, const char* color) {
        bool upper = p[2] >= 0;
        double x = upper ? cx0 + R * p[0] : cx1 - R * p[0];
        double y = cy - R * p[1];
        s << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << rad << "\" fill=\"" << color << "\"/>\n";
    };
    for (const auto& p : r.sphere_points) dot_at(p, 1.5, "#1f4fbf");
    for (const auto& p : r.inputs) {
        dot_at(p.v, 4, "#c0392b");
        dot_at(neg(p.v), 4, "#c0392b");
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace rp2braid::geom
