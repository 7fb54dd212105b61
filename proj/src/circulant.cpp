#include "hadlab/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hadlab/dilation.hpp"
#include "hadlab/numtheory.hpp"

namespace hadlab {

namespace {

void require_prime(int p, const char* who) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw DomainError(std::string(who) + ": p must be prime");
}

double rsqrt(double v, const char* what) {
    if (v < -1e-12) throw DomainError(std::string("negative radicand in ") + what);
    return std::sqrt(std::max(0.0, v));
}

CVec vec(std::initializer_list<cplx> l) {
    CVec v(static_cast<Eigen::Index>(l.size()));
    Eigen::Index i = 0;
    for (cplx c : l) v(i++) = c;
    return v;
}

}  // namespace

// ---- cyclic n-roots ----

double cyclic_residual(const CVec& z) {
    const auto n = z.size();
    if (n == 0) throw DomainError("cyclic_residual: empty vector");
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(z(i)) == 0) throw DomainError("cyclic_residual: zero entry");
    double r = 0;
    for (Eigen::Index len = 1; len < n; ++len) {
        cplx s = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            cplx pr = 1;
            for (Eigen::Index j = 0; j < len; ++j) pr *= z((i + j) % n);
            s += pr;
        }
        r = std::max(r, std::abs(s));
    }
    cplx pr = 1;
    for (Eigen::Index i = 0; i < n; ++i) pr *= z(i);
    return std::max(r, std::abs(pr - 1.0));
}

CVec x_from_z(const CVec& z) {
    const auto n = z.size();
    CVec x(n);
    if (n == 0) return x;
    x(0) = 1;
    for (Eigen::Index i = 1; i < n; ++i) x(i) = x(i - 1) * z(i - 1);
    return x;
}

CVec z_from_x(const CVec& x) {
    const auto n = x.size();
    CVec z(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(x(i)) == 0) throw DomainError("z_from_x: zero entry");
        z(i) = x((i + 1) % n) / x(i);
    }
    return z;
}

double circulant_residual(const CVec& x) {
    const auto n = x.size();
    double r = 0;
    for (Eigen::Index k = 1; k < n; ++k) {
        cplx s = 0;
        for (Eigen::Index i = 0; i < n; ++i) s += x((i + k) % n) / x(i);
        r = std::max(r, std::abs(s));
    }
    return r;
}

CVec classical(int n, int alpha, int beta) {
    if (n < 1) throw DomainError("classical: n < 1");
    if (std::gcd(static_cast<int>(mod(alpha, n)), n) != 1) throw DomainError("classical: alpha not a unit mod n");
    CVec x(n);
    for (int i = 0; i < n; ++i) {
        const double e = (n % 2 == 0) ? alpha * double(i) * i / 2.0 + double(beta) * i
                                      : alpha * double(i) * (i - 1) / 2.0 + double(beta) * i;
        x(i) = std::polar(1.0, 2 * kPi * e / n);
    }
    return x;
}

CVec backelin(int n, int m, const CVec& zprefix, cplx alpha, double tol) {
    if (m < 1 || n % (m * m) != 0) throw DomainError("backelin: m^2 must divide n");
    if (zprefix.size() != m) throw DomainError("backelin: prefix length must be m");
    if (std::abs(zprefix.prod() - 1.0) > tol) throw DomainError("backelin: prefix product must be 1");
    const int r = n / m;
    if (std::abs(std::pow(alpha, r) - 1.0) > tol) throw DomainError("backelin: alpha^(n/m) != 1");
    for (int d = 1; d < r; ++d)
        if (r % d == 0 && std::abs(std::pow(alpha, d) - 1.0) < tol)
            throw DomainError("backelin: alpha not primitive");
    CVec z(n);
    cplx a = 1;
    for (int b = 0; b < r; ++b, a *= alpha)
        for (int j = 0; j < m; ++j) z(b * m + j) = a * zprefix(j);
    return z;
}

// ---- simple index k ----

Cosets make_cosets(int p, int k, int g) {
    require_prime(p, "cosets");
    if (k < 1 || (p - 1) % k != 0) throw DomainError("cosets: k must divide p - 1");
    if (g < 1 || !is_primitive_root(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(p)))
        throw DomainError("cosets: g is not a generator");
    Cosets cs;
    cs.p = p;
    cs.k = k;
    cs.g = g;
    const auto lg = dlog_table(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(p));
    cs.cls.assign(p, -1);
    for (int i = 1; i < p; ++i) cs.cls[i] = lg[i] % k;
    cs.m = cs.cls[p - 1];
    cs.n = IMat::Zero(k, k);
    for (int b = 1; b < p - 1; ++b) ++cs.n(cs.cls[b], cs.cls[b + 1]);
    return cs;
}

IMat transition_numbers(int p, int g, int k) { return make_cosets(p, k, g).n; }

std::pair<int, int> two_squares(int p) {
    if (p % 4 != 1) throw DomainError("two_squares: p must be 1 mod 4");
    const int lim = static_cast<int>(std::sqrt(double(p))) + 1;
    for (int s = -lim; s <= lim; ++s) {
        if (mod(s, 4) != 1) continue;
        const int t2 = p - s * s;
        if (t2 <= 0) continue;
        const int t = static_cast<int>(std::lround(std::sqrt(double(t2))));
        if (t * t == t2) return {s, t};
    }
    throw DomainError("two_squares: no decomposition");
}

KatreRajwade katre_rajwade(int p, int g) {
    require_prime(p, "katre_rajwade");
    if (p % 8 != 1) throw DomainError("katre_rajwade: p must be 1 mod 8");
    auto [s, t] = two_squares(p);
    const long long w = static_cast<long long>(powmod(g, 3 * (p - 1) / 4, p));
    if (mod(s * w - t, p) != 0) t = -t;
    if (mod(s * w - t, p) != 0) throw DomainError("katre_rajwade: sign of t not determined");
    KatreRajwade kr;
    kr.s = s;
    kr.t = t;
    const int n00 = (p - 11 - 6 * s) / 16, n01 = (p - 3 + 2 * s + 4 * t) / 16, n02 = (p - 3 + 2 * s) / 16,
              n03 = (p - 3 + 2 * s - 4 * t) / 16, n12 = (p + 1 - 2 * s) / 16;
    kr.n.resize(4, 4);
    kr.n << n00, n01, n02, n03,   //
        n01, n03, n12, n12,       //
        n02, n12, n02, n12,       //
        n03, n12, n12, n01;
    return kr;
}

int index3_generator(int p) {
    require_prime(p, "index3");
    if (p % 6 != 1) throw DomainError("index3: p must be 1 mod 6");
    for (auto g : primitive_roots(static_cast<std::uint64_t>(p))) {
        const IMat n = transition_numbers(p, static_cast<int>(g), 3);
        if (n(0, 1) == n(0, 2)) throw AmbiguityError("index3: n01 == n02");
        if (n(0, 1) < n(0, 2)) return static_cast<int>(g);
    }
    throw DomainError("index3: no generator with n01 < n02");
}

int index4_generator(int p) {
    require_prime(p, "index4");
    if (p % 8 != 1) throw DomainError("index4: p must be 1 mod 8");
    for (auto g : primitive_roots(static_cast<std::uint64_t>(p))) {
        const IMat n = transition_numbers(p, static_cast<int>(g), 4);
        if (n(0, 1) > n(0, 3)) return static_cast<int>(g);
    }
    throw DomainError("index4: no generator with n01 > n03");
}

double index_residual(const Cosets& cs, const CVec& c) {
    const int k = cs.k;
    if (c.size() != k) throw DomainError("index_residual: length mismatch");
    double r = 0;
    for (int a = 0; a < k; ++a) {
        cplx s = c(a) + 1.0 / c((a + cs.m) % k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s += double(cs.n(i, j)) * c((a + j) % k) / c((a + i) % k);
        r = std::max(r, std::abs(s));
    }
    return r;
}

CVec x_from_c(const Cosets& cs, const CVec& c) {
    CVec x(cs.p);
    x(0) = 1;
    for (int i = 1; i < cs.p; ++i) x(i) = c(cs.cls[i]);
    return x;
}

std::string classify_tag(const CVec& c, double tol) {
    bool uni = true, real = true;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        uni = uni && std::abs(std::abs(c(i)) - 1) < tol;
        real = real && std::abs(c(i).imag()) < tol * (1 + std::abs(c(i)));
    }
    if (uni) return "unimodular";
    if (real) return "real";
    return "complex";
}

IndexKSolution make_solution(const Cosets& cs, const CVec& c) {
    IndexKSolution s;
    s.p = cs.p;
    s.k = cs.k;
    s.g = cs.g;
    s.c = c;
    s.tag = classify_tag(c);
    s.residual = index_residual(cs, c);
    return s;
}

CVec cyclic_shift(const CVec& c, int r) {
    const auto k = c.size();
    CVec o(k);
    for (Eigen::Index i = 0; i < k; ++i) o(i) = c((i + r) % k);
    return o;
}
CVec conj_vec(const CVec& c) { return c.conjugate(); }
CVec recip_vec(const CVec& c) { return c.cwiseInverse(); }

std::vector<CMat> index2(int p) {
    require_prime(p, "index2");
    if (p == 2) throw DomainError("index2: p must be odd");
    const double P = p, sp = std::sqrt(P);
    std::vector<CMat> out;
    auto build = [&](cplx onS, cplx onN) {
        CVec x(p);
        x(0) = 1;
        for (int i = 1; i < p; ++i) x(i) = legendre(i, p) == 1 ? onS : onN;
        out.push_back(circulant(x));
    };
    if (p % 4 == 3) {
        for (int sg : {1, -1}) build(1.0, cplx(-(P - 1) / (P + 1), sg * 2 * sp / (P + 1)));
    } else {
        for (int sg : {1, -1}) {
            const cplx a((-1 + sg * sp) / (P - 1), rsqrt(P * P - 3 * P + sg * 2 * sp, "index2") / (P - 1));
            build(a, std::conj(a));
            build(std::conj(a), a);
        }
    }
    return out;
}

std::vector<IndexKSolution> index3_solutions(int p) {
    const int g = index3_generator(p);
    const Cosets cs = make_cosets(p, 3, g);
    // 4p = A^2 + 27 B^2 with A = 1 mod 3, B > 0
    int A = 0, B = 0;
    const int lim = static_cast<int>(std::sqrt(4.0 * p)) + 1;
    for (int a = -lim; a <= lim && !B; ++a) {
        if (mod(a, 3) != 1 || (4 * p - a * a) % 27 != 0) continue;
        const int b2 = (4 * p - a * a) / 27;
        if (b2 <= 0) continue;
        const int b = static_cast<int>(std::lround(std::sqrt(double(b2))));
        if (b * b == b2) A = a, B = b;
    }
    if (!B) throw DomainError("index3: no decomposition 4p = A^2 + 27B^2");
    const double P = p, u = std::sqrt(P), v = std::sqrt(P + 4 * A + 16), s3 = std::sqrt(3.0), s4 = std::sqrt(P - 4);
    const double theta = std::acos(A * u / (2 * P)) / 3;

    const double d1 = 2 * (P * P - 3 * P - A);
    const cplx al1((P * A - 2 * P - 2 * A) / d1, 3 * s3 * u * s4 * B / d1);
    const cplx be1(-u * (P - 4) * (A + 2) / d1, -3 * s3 * s4 * (P - 2) * B / d1);
    const cplx ga1(-3 * s3 * u * (P - 4) * B / d1, s4 * (P * A - 2 * P - 2 * A) / d1);

    const double d2 = u * u + u * v + 2;
    const double w1 = rsqrt(4 + u - v, "index3") * rsqrt(4 - u + v, "index3");
    const double w2 = rsqrt(u + v + 4, "index3") * rsqrt(u + v - 4, "index3");
    const cplx al2(-(u * u - u * v - 4) / (2 * d2), u * w1 / (2 * d2));
    const cplx be2(u * (A + 2) / d2, (u * u + u * v + 4) * w1 / (4 * d2));
    const cplx ga2(3 * s3 * u * B / d2, (u * u - u * v - 4) * w2 / (4 * d2));

    std::vector<IndexKSolution> out;
    for (auto [al, be, ga] : {std::tuple{al1, be1, ga1}, std::tuple{al2, be2, ga2}}) {
        CVec c(3);
        for (int i = 0; i < 3; ++i) {
            const double ph = theta - 2 * kPi * i / 3;
            c(i) = al + be * std::cos(ph) + ga * std::sin(ph);
        }
        for (bool cj : {false, true})
            for (int r = 0; r < 3; ++r) {
                const CVec s = cyclic_shift(c, r);
                out.push_back(make_solution(cs, cj ? conj_vec(s) : s));
            }
    }
    return out;
}

std::vector<CMat> index3(int p) {
    const auto sols = index3_solutions(p);
    const Cosets cs = make_cosets(p, 3, sols.front().g);
    std::vector<CMat> out;
    for (const auto& s : sols) out.push_back(circulant(x_from_c(cs, s.c)));
    return out;
}

Index4Params index4_params(int p, int sign) {
    require_prime(p, "index4");
    if (p % 8 != 1) throw DomainError("index4: p must be 1 mod 8");
    auto [s, t] = two_squares(p);
    const double P = p, den = double(t) * t * (P - 1) * (P - 1);
    Index4Params q;
    q.s = s;
    q.t = t;
    q.zeta = 2 * (-1 + sign * std::sqrt(P)) / (P - 1);
    q.A = 2 * P * (P - 2 * s + 1) / den;
    q.B = sign * 2 * (P * (s - 2) + s) / den;
    q.C = P * (P * (double(t) * t + 2) - 4 * s - 3.0 * t * t + 2) / den;
    q.D = sign * 2 * (P * (s - 2) + s + double(t) * t) / den;
    return q;
}

std::vector<IndexKSolution> index4_symmetric_solutions(int p) {
    const int g = index4_generator(p);
    const Cosets cs = make_cosets(p, 4, g);
    const double sp = std::sqrt(double(p));
    std::vector<IndexKSolution> out;
    for (int sign : {1, -1}) {
        const Index4Params q = index4_params(p, sign);
        const double ra = q.zeta / 2 + rsqrt(q.A + q.B * sp, "index4") - rsqrt(q.C + q.D * sp, "index4");
        const double rb = q.zeta - ra;
        if (std::abs(ra) > 1 || std::abs(rb) > 1) throw DomainError("index4: real part outside [-1,1]");
        const double ia = std::sqrt(1 - ra * ra);
        const double rhs = 2 * (q.zeta - 2 * ra) * (2 + q.zeta * (q.s - 1));
        if (std::abs(rhs) < 1e-12) throw AmbiguityError("index4: sign of Im b undetermined");
        const double ib = (rhs > 0 ? 1 : -1) * std::sqrt(1 - rb * rb);
        const cplx a(ra, ia), b(rb, ib);
        out.push_back(make_solution(cs, vec({a, b, std::conj(a), std::conj(b)})));
    }
    return out;
}

std::vector<CMat> index4_symmetric(int p) {
    const auto sols = index4_symmetric_solutions(p);
    const Cosets cs = make_cosets(p, 4, sols.front().g);
    std::vector<CMat> out;
    for (const auto& s : sols) out.push_back(circulant(x_from_c(cs, s.c)));
    return out;
}

// ---- all index-4 cyclic 17-roots ----

std::pair<cplx, cplx> lift(cplx h) {
    const double a = h.real(), b = h.imag();
    cplx x1;
    if (b == 0 && std::abs(a) <= 2)
        x1 = cplx(a / 2, std::sqrt(4 - a * a) / 2);
    else if (b == 0)
        x1 = a / 2 + std::sqrt(a * a - 4) / 2;
    else if (a == 0)
        x1 = cplx(0, b / 2 + std::sqrt(b * b + 4) / 2);
    else {
        const double R = std::sqrt(4 * a * a * b * b + std::pow(a * a - b * b - 4, 2));
        const double sg = a * b > 0 ? 1 : -1;
        x1 = cplx(a / 2 + std::sqrt(std::max(0.0, 2 * a * a - 2 * b * b - 8 + 2 * R)) / 4,
                  b / 2 + sg * std::sqrt(std::max(0.0, -2 * a * a + 2 * b * b + 8 + 2 * R)) / 4);
    }
    return {x1, 1.0 / x1};
}

int SolutionSet::count(const std::string& tag) const {
    return static_cast<int>(std::count_if(sols.begin(), sols.end(), [&](const auto& s) { return s.tag == tag; }));
}

double SolutionSet::max_residual() const {
    double r = 0;
    for (const auto& s : sols) r = std::max(r, s.residual);
    return r;
}

SolutionSet index4_p17_all() {
    const int p = 17;
    const Cosets cs = make_cosets(p, 4, index4_generator(p));
    const double r17 = std::sqrt(17.0), q = std::pow(17.0, 0.75);
    auto L = [](cplx h) { return lift(h).first; };
    auto Li = [](cplx h) { return lift(h).second; };

    SolutionSet set;
    auto add = [&](const char* src, const CVec& c) {
        set.sols.push_back(make_solution(cs, c));
        set.source.emplace_back(src);
    };
    auto add_shifts = [&](const char* src, const CVec& c) {
        for (int r = 0; r < 4; ++r) add(src, cyclic_shift(c, r));
    };

    // V1: constant real solutions
    const double eps = (-15 + std::sqrt(221.0)) / 2;
    add("V1", vec({eps, eps, eps, eps}));
    add("V1", vec({1 / eps, 1 / eps, 1 / eps, 1 / eps}));

    // V2: index-2 type
    for (int sg : {1, -1}) {
        const cplx c((-1 + sg * r17) / 16, std::sqrt(238 + sg * 2 * r17) / 16);
        add("V2", vec({c, std::conj(c), c, std::conj(c)}));
        add("V2", vec({std::conj(c), c, std::conj(c), c}));
    }

    // V3 V4
    auto h0 = [&](int A, int B) { return -(1 + A * 5 * r17) / 8 + B * std::sqrt(34 + A * 2 * r17) / 8; };
    auto h1 = [&](int A, int B) { return (-1 + A * 3 * r17) / 8 + B * std::sqrt(34 + A * 2 * r17) / 8; };
    add_shifts("V3V4", vec({L(h0(1, 1)), L(h1(1, -1)), Li(h0(1, 1)), Li(h1(1, -1))}));
    add_shifts("V3V4", vec({L(h0(-1, -1)), Li(h1(-1, 1)), Li(h0(-1, -1)), L(h1(-1, 1))}));
    add_shifts("V3V4", vec({L(h0(1, -1)), Li(h1(1, 1)), Li(h0(1, -1)), L(h1(1, 1))}));
    add_shifts("V3V4", vec({L(h0(-1, 1)), L(h1(-1, -1)), Li(h0(-1, 1)), Li(h1(-1, -1))}));

    // V5: complex solutions
    auto h5 = [&](int A, int B) {
        const double inner = std::sqrt(289 + 136 * r17 + A * 68 * q);
        const double s1 = std::sqrt(34 + 18 * r17), s2 = std::sqrt(34 + A * 4 * q + 2 * inner);
        const double s3 = std::sqrt(-34 + 18 * r17), s4 = std::sqrt(-34 - A * 4 * q + 2 * inner);
        return cplx(2 + A * s1 / 4 + B * s2 / 4, A * (-s3 / 4 - B * s4 / 4));
    };
    const CVec c5 = vec({L(h5(1, 1)), Li(h5(-1, -1)), L(h5(1, -1)), L(h5(-1, 1))});
    for (const CVec& c : {c5, conj_vec(c5), recip_vec(c5), recip_vec(conj_vec(c5))}) add_shifts("V5", c);

    // V6: quartics in h from the elementary symmetric functions
    auto sigma = [&](int j, int A, int B) -> double {
        switch (j) {
            case 0: return (53 + A * 59 * r17) / 13 + B * std::sqrt(63546 + A * 6358 * r17) / 13;
            case 1:
                return (48164 + A * 7130 * r17) / 338 + B * std::sqrt(3307173846.0 + A * 705523222.0 * r17) / 338;
            case 2:
                return (801857 + A * 89585 * r17) / 4394 +
                       B * 4 * std::sqrt(48275292054.0 + A * 8767889417.0 * r17) / 4394;
            default:
                return -(11854643 + A * 2053159 * r17) / 8788 +
                       B * 2 * std::sqrt(53118166790942.0 + A * 12183750689646.0 * r17) / 8788;
        }
    };
    const int signs[4][4][2] = {{{1, -1}, {1, -1}, {1, -1}, {1, 1}},
                                {{-1, 1}, {-1, -1}, {-1, -1}, {-1, 1}},
                                {{-1, -1}, {-1, 1}, {-1, 1}, {-1, -1}},
                                {{1, 1}, {1, 1}, {1, 1}, {1, -1}}};
    for (int i = 0; i < 4; ++i) {
        double sg[4];
        for (int j = 0; j < 4; ++j) sg[j] = sigma(j, signs[i][j][0], signs[i][j][1]);
        const auto r = real_roots({sg[3], -sg[2], sg[1], -sg[0], 1.0});
        if (r.size() != 4) throw AmbiguityError("V6: quartic does not have four real roots");
        for (int j = 0; j + 1 < 4; ++j)
            if (r[j + 1] - r[j] < 1e-9) throw AmbiguityError("V6: near-equal roots");
        CVec c;
        switch (i) {
            case 0: c = vec({L(r[0]), L(r[2]), L(r[3]), Li(r[1])}); break;
            case 1: c = vec({L(r[0]), L(r[1]), L(r[3]), Li(r[2])}); break;
            case 2: c = vec({L(r[0]), L(r[1]), L(r[2]), Li(r[3])}); break;
            default: c = vec({L(r[0]), Li(r[1]), Li(r[2]), Li(r[3])}); break;
        }
        add_shifts("V6", c);
        add_shifts("V6", recip_vec(c));
    }
    return set;
}

// ---- circulant core ----

double core_residual(const CVec& x) {
    const auto n = x.size();
    double r = std::abs(1.0 + x.sum());
    for (Eigen::Index k = 1; k < n; ++k) {
        cplx s = 1;
        for (Eigen::Index i = 0; i < n; ++i) s += x((i + k) % n) / x(i);
        r = std::max(r, std::abs(s));
    }
    return r;
}

double core_z_residual(const CVec& z) {
    const auto n = z.size();
    double r = 0;
    for (Eigen::Index len = 1; len < n; ++len) {
        cplx s = 1;
        for (Eigen::Index i = 0; i < n; ++i) {
            cplx pr = 1;
            for (Eigen::Index j = 0; j < len; ++j) pr *= z((i + j) % n);
            s += pr;
        }
        r = std::max(r, std::abs(s));
    }
    return std::max(r, std::abs(z.prod() - 1.0));
}

CoreSolution make_core(const CVec& x) {
    CoreSolution c;
    c.n = static_cast<int>(x.size());
    c.x = x;
    c.bordered = border_with_ones(circulant(x));
    c.residual = core_residual(x);
    return c;
}

CoreSolution core_x_from_z(const CVec& z, double tol) {
    const auto n = z.size();
    if (n == 0) throw DomainError("core_x_from_z: empty vector");
    if (unimod_defect(z) > tol) throw DomainError("core_x_from_z: z not unimodular");
    cplx S = 0, pr = 1;
    for (Eigen::Index i = 0; i < n; ++i) S += (pr *= z(i));
    if (std::abs(std::abs(S) - 1) > tol) throw DomainError("core_x_from_z: |S| != 1, not a solution");
    if (core_z_residual(z) > tol * n) throw DomainError("core_x_from_z: quotient system not satisfied");
    return make_core(-std::conj(S) * x_from_z(z));
}

CVec core_x_from_c(const Cosets& cs, const CVec& c) {
    CVec x(cs.p);
    x(0) = -double(cs.p - 1) / cs.k * c.sum() - 1.0;
    for (int i = 1; i < cs.p; ++i) x(i) = c(cs.cls[i]);
    return x;
}

std::vector<CoreSolution> core_index2(int p) {
    require_prime(p, "core_index2");
    if (p % 4 != 1) throw DomainError("core_index2: p must be 1 mod 4");
    const Cosets cs = make_cosets(p, 2, static_cast<int>(smallest_primitive_root(p)));
    const double P = p;
    const cplx w(-2 / (P - 1), std::sqrt((P - 1) * (P - 1) - 4) / (P - 1));
    std::vector<CoreSolution> out;
    for (cplx a : {I1, -I1, w, std::conj(w)}) out.push_back(make_core(core_x_from_c(cs, vec({a, std::conj(a)}))));
    return out;
}

namespace {

std::vector<CoreSolution> core_shifts(int p, const CVec& c) {
    const Cosets cs = make_cosets(p, 4, index4_generator(p));
    std::vector<CoreSolution> out;
    for (int r = 0; r < 4; ++r) out.push_back(make_core(core_x_from_c(cs, cyclic_shift(c, r))));
    return out;
}

}  // namespace

std::vector<CoreSolution> core_index4_a(int p) {
    require_prime(p, "core_index4_a");
    if (p % 8 != 1) throw DomainError("core_index4_a: p must be 1 mod 8");
    const double t = two_squares(p).second, r = std::sqrt(1 + t * t);
    const cplx a((1 - r) / t, std::sqrt(-2 + 2 * r) / t);
    return core_shifts(p, vec({a, -a, std::conj(a), -std::conj(a)}));
}

std::pair<double, double> core_index4_b_AB(int p) {
    require_prime(p, "core_index4_b");
    if (p % 8 != 1) throw DomainError("core_index4_b: p must be 1 mod 8");
    auto [si, ti] = two_squares(p);
    const double s = si, t = ti, P = p, t2 = t * t, s1 = std::pow(s - 1, 4);
    const double A = (t2 * (P * P + 2 * (s - 2) * (s - 2) + 1) + 2 * s1) / (t2 * (P - 1) * (P - 1));
    const double B = 4 * (t2 * (P + (s - 2) * (s - 2) + 2) + s1) / (t2 * t2 * std::pow(P - 1, 4)) *
                     (t2 * (t2 * (2 * s * s + t2 - 1) + ((s + 1) * (s + 1) + 2) * (s - 1) * (s - 1)) + s1);
    return {A, B};
}

std::vector<CoreSolution> core_index4_b(int p) {
    auto [A, B] = core_index4_b_AB(p);
    const double P = p, r = rsqrt(A - std::sqrt(B), "core_index4_b"), z = 2 / (P - 1);
    const cplx a(-z + r, rsqrt(1 - (z - r) * (z - r), "core_index4_b"));
    const cplx b(-z - r, -rsqrt(1 - (z + r) * (z + r), "core_index4_b"));
    return core_shifts(p, vec({a, b, std::conj(a), std::conj(b)}));
}

double q7_alpha_cubic_residual(double a) {
    const double t[4] = {a * a * a, -40169 * a * a, 122486812 * a, 124134308};
    return std::abs(t[0] + t[1] + t[2] + t[3]) /
           (std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]) + std::abs(t[3]));
}

Q7Data q7_data() {
    Q7Data d;
    const double S = std::sqrt(1993741.0);
    const double a = 40169.0 / 3 + 50 * S / 3 * std::cos(std::acos(2731019453.0 * S / (1993741.0 * 1993741.0)) / 3 -
                                                          4 * kPi / 3);
    d.alpha = a;
    const double a2 = a * a;
    d.h = {-17074 * a2 + 3269963754 * a + 2727593304,
           4644 * a2 + 2280446676 * a + 8524444776,
           11393 * a2 + 427075897 * a + 1676016222,
           1956 * a2 + 64132324 * a - 12170223176,
           16 * a2 + 9768064 * a - 5227993936,
           4109140000,
           2054570000};
    d.roots = real_roots(d.h);
    if (d.roots.size() != 6) throw AmbiguityError("q7: h(u) does not have six real roots");
    std::vector<cplx> z;
    for (double r : d.roots) {
        if (std::abs(r) > 2) throw AmbiguityError("q7: root outside [-2, 2]");
        z.emplace_back(r / 2, std::sqrt(1 - r * r / 4));
    }
    d.x = vec({z[0], z[2], std::conj(z[1]), z[3], std::conj(z[4]), std::conj(z[5])});
    d.H = border_with_ones(circulant(d.x));
    return d;
}

CMat q7() { return q7_data().H; }

std::vector<Q11Data> q11_data(bool both_orders) {
    const double R = std::sqrt(12309.0);
    const double g = std::sqrt(396 + 18 * std::cbrt(8468 + 12 * R) + 3 * std::cbrt(1829088 - 2592 * R)) / 3;
    const double mid = -(std::pow(g, 5) - 132 * std::pow(g, 3) - 56 * g * g + 1088 * g + 1232);
    const Poly quartic{1008.0, -(336 * g - 1344), mid, -(336 * g - 1344), 1008.0};
    std::vector<cplx> as;
    for (cplx r : proots(quartic)) {
        if (std::abs(std::abs(r) - 1) > 1e-8) throw AmbiguityError("q11: non-unimodular root");
        if (r.imag() > 1e-8) as.push_back(r / std::abs(r));
    }
    if (as.size() != 2) throw AmbiguityError("q11: expected two roots in the upper half plane");
    std::sort(as.begin(), as.end(), [](cplx u, cplx v) { return u.real() < v.real(); });
    if (std::abs(as[0].real() - as[1].real()) < 1e-9) throw AmbiguityError("q11: roots not separated");

    std::vector<Q11Data> out;
    for (cplx a : as) {
        const Poly bc{59.0, 103.0, -176.0, 117.0, -56.0, -83.0, 53.0, 30.0};
        const cplx sigma = -peval(bc, a) / 48.0;
        auto [b, c] = decompose_pair(-sigma);
        std::vector<std::pair<cplx, cplx>> orders{{b, c}};
        if (both_orders) orders.emplace_back(c, b);
        for (auto [bb, cc] : orders) {
            Q11Data d;
            d.gamma = g;
            d.a = a;
            d.sigma = sigma;
            d.b = bb;
            d.c = cc;
            const cplx ab = std::conj(a), bb_ = std::conj(bb), cb = std::conj(cc);
            d.x = vec({a, bb, bb_, cc, cb, ab, cb, cc, bb_, bb});
            d.H = border_with_ones(circulant(d.x));
            out.push_back(d);
        }
    }
    return out;
}

std::vector<CMat> q11() {
    std::vector<CMat> out;
    for (const auto& d : q11_data()) out.push_back(d.H);
    return out;
}

}  // namespace hadlab
