#include "sgm/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sgm::num {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_{2k}/(2k)! for k = 1..7
constexpr double kBernFact[7] = {
    1.0 / 12.0,            // B2/2!
    -1.0 / 720.0,          // B4/4!
    1.0 / 30240.0,         // B6/6!
    -1.0 / 1209600.0,      // B8/8!
    1.0 / 47900160.0,      // B10/10!
    -691.0 / 1307674368000.0,
    7.0 / 74724249600.0,
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0)) throw std::domain_error("numerics: hurwitz_zeta needs s > 1");
    if (!(q > 0.0)) throw std::domain_error("numerics: hurwitz_zeta needs q > 0");
    const int m = 18;
    double acc = 0.0;
    for (int j = 0; j < m; ++j) acc += std::pow(q + j, -s);
    const double x = q + m;
    acc += std::pow(x, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(x, -s);
    // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * x^{-s-2k+1}
    double poch = s;
    double xp = std::pow(x, -s - 1.0);
    const double x2 = 1.0 / (x * x);
    for (int k = 1; k <= 7; ++k) {
        acc += kBernFact[k - 1] * poch * xp;
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        xp *= x2;
    }
    return acc;
}

double gauss_2f1_pos(double a, double b, double c, double w) {
    if (!(w >= 0.0 && w < 1.0)) throw std::domain_error("numerics: 2F1 argument outside [0,1)");
    double term = 1.0, acc = 1.0;
    for (int j = 0; j < 20000; ++j) {
        term *= (a + j) * (b + j) / ((c + j) * (1.0 + j)) * w;
        acc += term;
        if (std::abs(term) < 1e-17 * std::abs(acc)) return acc;
    }
    throw std::runtime_error("numerics: 2F1 series did not converge");
}

double poly_geometric_tail(std::int64_t n, double mu, double rho) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("numerics: rho outside (0,1)");
    if (mu < 0.0) throw std::domain_error("numerics: mu must be >= 0");
    const double lrho = std::log(rho);
    double acc = 0.0;
    std::int64_t k = n + 1;
    for (;; ++k) {
        const double term = std::exp(mu * std::log(static_cast<double>(k)) +
                                     static_cast<double>(k) * lrho);
        acc += term;
        // (1+1/k)^mu <= exp(mu/k): once rho*exp(mu/k) < 1 the remainder is geometric
        const double ratio = rho * std::exp(mu / static_cast<double>(k + 1));
        if (ratio < 1.0 && term < 1e-18 * acc + 1e-320) {
            const double next = std::exp(mu * std::log(static_cast<double>(k + 1)) +
                                         static_cast<double>(k + 1) * lrho);
            acc += next / (1.0 - ratio);
            break;
        }
        if (k > n + 20000000) throw std::runtime_error("numerics: tail sum too slow to converge");
    }
    return acc;
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double lo, double hi,
                   double flo, double fmid, double fhi, double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol, int max_depth) {
    if (hi <= lo) return 0.0;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    const double scale = std::max(std::abs(whole), 1e-300);
    return simpson_rec(f, lo, hi, flo, fmid, fhi, whole, rel_tol * scale, max_depth);
}

double grid_sup(const std::function<double(double)>& f, double T) {
    const int n = 4097;
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < n; ++i) {
        const double t = T * static_cast<double>(i) / (n - 1);
        const double v = f(t);
        if (v > best) { best = v; best_i = i; }
    }
    const double h = T / (n - 1);
    const double lo = std::max(0.0, best_i * h - h);
    const double hi = std::min(T, best_i * h + h);
    auto neg = [&](double t) { return -f(t); };
    const MinResult refined = golden_min(neg, lo, hi, 1e-12, 200);
    return std::max(best, -refined.fx);
}

MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     double rel_tol, int max_iter) {
    const double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b) + 1e-300); ++i) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

MinResult golden_min_positive(const std::function<double(double)>& f, double x0,
                              double rel_tol, int max_iter) {
    // f convex on (0, inf) and decreasing at 0+: expand the right edge by
    // doubling until f turns upward, then the minimum lies inside [0, hi].
    double hi = x0;
    double prev = f(hi);
    for (int i = 0; i < 1100; ++i) {
        hi *= 2.0;
        const double fhi = f(hi);
        if (fhi > prev || !std::isfinite(fhi)) break;
        prev = fhi;
        if (hi > 1e290) throw std::runtime_error("numerics: no interior minimum found");
    }
    return golden_min(f, 0.0, hi, rel_tol, max_iter);
}

std::uint64_t mix64(std::uint64_t seed, std::uint64_t path, std::uint64_t k) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ (path * 0xa24baed4963ee407ULL));
    h = splitmix64(h ^ (k * 0x9fb21c651e98df25ULL));
    return h;
}

double uniform01(std::uint64_t key) {
    return (static_cast<double>(key >> 11) + 0.5) * 0x1.0p-53;
}

double gaussian_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t k) {
    const std::uint64_t key = mix64(seed, path, k);
    const double u1 = uniform01(key);
    const double u2 = uniform01(splitmix64(key ^ 0xd6e8feb86659fd93ULL));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double uniform_sym_draw(std::uint64_t seed, std::uint64_t path, std::uint64_t k) {
    return 2.0 * uniform01(mix64(seed, path, k)) - 1.0;
}

}  // namespace sgm::num
