#include "hadlab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "hadlab/numtheory.hpp"
#include "hadlab/poly.hpp"

namespace hadlab {

namespace {

const cplx w3 = root_of_unity(1, 3);

CMat from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    CMat M(n, n);
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        if (static_cast<Eigen::Index>(r.size()) != n) throw std::logic_error("from_rows: ragged");
        Eigen::Index j = 0;
        for (cplx v : r) M(i, j++) = v;
        ++i;
    }
    return M;
}

struct Args {
    const FamilyPoint& p;
    cplx operator[](std::size_t i) const { return p.params[i]; }
    double re(std::size_t i) const { return p.params[i].real(); }
    int integer(std::size_t i) const {
        double v = p.params[i].real();
        if (std::abs(v - std::round(v)) > 1e-9 || std::abs(p.params[i].imag()) > 1e-9)
            throw DomainError(p.family + ": parameter " + std::to_string(i) + " must be an integer");
        return static_cast<int>(std::lround(v));
    }
    int sign(std::size_t i) const {
        int s = integer(i);
        if (s != 1 && s != -1) throw DomainError(p.family + ": branch parameter must be +1 or -1");
        return s;
    }
    cplx unimodular(std::size_t i) const {
        cplx z = p.params[i];
        if (std::abs(std::abs(z) - 1.0) > 1e-9) throw DomainError(p.family + ": parameter must be unimodular");
        return z;
    }
};

int odd_prime(const Args& a, std::size_t i, int residue4 = 0) {
    int p = a.integer(i);
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError(a.p.family + ": p must be an odd prime");
    if (residue4 && p % 4 != residue4)
        throw DomainError(a.p.family + ": p must be " + std::to_string(residue4) + " mod 4");
    return p;
}

CMat bicirculant(const CMat& A, const CMat& B) {
    const auto m = A.rows();
    CMat H(2 * m, 2 * m);
    H << A, B, B.adjoint(), -A.adjoint();
    return H;
}

Eigen::MatrixXd class_matrix(const std::vector<int>& cls, int c) {
    const int p = static_cast<int>(cls.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) M(i, j) = cls[(j - i + p) % p] == c ? 1.0 : 0.0;
    return M;
}

// ---- order 4 and 6 ----

CMat f4_1(const Args& a) {
    cplx x = a.unimodular(0), ia = I1 * x;
    return from_rows({{1, 1, 1, 1}, {1, ia, -1.0, -ia}, {1, -1.0, 1, -1.0}, {1, -ia, -1.0, ia}});
}

CMat f6_2(const Args& p) {
    cplx a = p.unimodular(0), b = p.unimodular(1), w = w3, w2 = w3 * w3;
    return from_rows({{1, 1, 1, 1, 1, 1},
                      {1, w, w2, a, a * w, a * w2},
                      {1, w2, w, b, b * w2, b * w},
                      {1, 1, 1, -1.0, -1.0, -1.0},
                      {1, w, w2, -a, -a * w, -a * w2},
                      {1, w2, w, -b, -b * w2, -b * w}});
}

CMat d6_1(const Args& p) {
    cplx c = p.unimodular(0), cb = std::conj(c), i = I1;
    return from_rows({{1, 1, 1, 1, 1, 1},
                      {1, -1.0, i, -c * i, -i, c * i},
                      {1, i, -1.0, c * i, -i, -c * i},
                      {1, -cb * i, cb * i, -1.0, i, -i},
                      {1, -i, -i, i, -1.0, i},
                      {1, cb * i, -cb * i, -i, i, -1.0}});
}

CMat s6(const Args&) {
    cplx w = w3, w2 = w3 * w3;
    return from_rows({{1, 1, 1, 1, 1, 1},
                      {1, 1, w, w2, w2, w},
                      {1, w, 1, w, w2, w2},
                      {1, w2, w, 1, w, w2},
                      {1, w2, w2, w, 1, w},
                      {1, w, w2, w2, w, 1}});
}

CMat b6_1(const Args& p) {
    const double th = p.re(0);
    const int s = p.sign(1);
    if (std::abs(th) > kPi + 1e-12 || std::abs(th) < b6_theta_min() - 1e-12)
        throw DomainError("B6_1: theta outside the admissible domain");
    cplx y = std::polar(1.0, th);
    cplx x = (1.0 + 2.0 * y + y * y + double(s) * std::sqrt(2.0) * std::sqrt(1.0 + 2.0 * y + 2.0 * y * y * y + y * y * y * y)) /
             (1.0 + 2.0 * y - y * y);
    cplx z = (1.0 + 2.0 * y - y * y) / (y * (-1.0 + 2.0 * y + y * y));
    cplx xyz = x * y * z;
    auto C = [](cplx v) { return std::conj(v); };
    return from_rows({{1, 1, 1, 1, 1, 1},
                      {1, -1.0, -C(x), -y, y, C(x)},
                      {1, -x, 1, y, C(z), -C(xyz)},
                      {1, -C(y), C(y), -1.0, -C(xyz), C(xyz)},
                      {1, C(y), z, -xyz, 1, -C(x)},
                      {1, x, -xyz, xyz, -x, -1.0}});
}

// t/4 +- i t sqrt(16 - |t|^2) / (4|t|)
std::pair<cplx, cplx> m6_pair(cplx t) {
    double m = std::abs(t);
    cplx im = I1 * t * std::sqrt(std::max(0.0, 16.0 - m * m)) / (4.0 * m);
    return {t / 4.0 + im, t / 4.0 - im};
}

CMat m6_1(const Args& p) {
    cplx x = p.unimodular(0);
    if (std::abs(x - I1) < 1e-9 || std::abs(x + I1) < 1e-9) throw DomainError("M6_1: x = +-i excluded");
    auto [a, b] = m6_pair(x * x - 2.0 * x - 1.0);
    auto [c, d] = m6_pair(-(x * x + 1.0));
    auto [e, f] = m6_pair(x * x + 2.0 * x - 1.0);
    return from_rows({{1, 1, 1, 1, 1, 1},
                      {1, -1.0, x, x, -x, -x},
                      {1, x, a, b, c, d},
                      {1, x, b, a, d, c},
                      {1, -x, c, d, e, f},
                      {1, -x, d, c, f, e}});
}

std::vector<cplx> cubic_unit_roots(cplx alpha) {
    // x^3 - alpha x^2 + conj(alpha) x - 1
    auto r = proots({-1.0, std::conj(alpha), -alpha, 1.0});
    std::sort(r.begin(), r.end(), [](cplx u, cplx v) { return std::arg(u) < std::arg(v); });
    for (auto& z : r) z /= std::abs(z);
    return r;
}

CMat x6_2(const Args& p) {
    cplx al = p[0];
    if (!x6_in_domain(al, 1e-12)) throw DomainError("X6_2: alpha outside D(alpha) <= 0, D(-alpha) <= 0");
    auto r = cubic_unit_roots(al), q = cubic_unit_roots(-al);
    cplx x = r[0], y = r[1], u = q[0], v = q[1];
    return from_rows({{1, 1, 1, 1, 1, 1},
                      {1, x * x * y, x * y * y, x * y / (u * v), u * x * y, v * x * y},
                      {1, x / y, x * x * y, x / u, x / v, u * v * x},
                      {1, u * v * x, u * x * y, -1.0, -u * x * y, -u * v * x},
                      {1, x / u, v * x * y, -x / u, -1.0, -v * x * y},
                      {1, x / v, x * y / (u * v), -x * y / (u * v), -x / v, -1.0}});
}

cplx karlsson_f(double x1, double x2) {
    double s = 1.0 + std::sin(x1) * std::sin(x2);
    return std::polar(1.0, (x1 + x2) / 2) * (std::cos((x1 - x2) / 2) - I1 * std::sin((x1 + x2) / 2)) *
           (0.5 + I1 * std::sqrt(1.0 / s - 0.25));
}

CMat k6_2(const Args& p) {
    double x1 = p.re(0), x2 = p.re(1);
    if (1.0 + std::sin(x1) * std::sin(x2) < 1e-9) throw DomainError("K6_2: sin(x1) sin(x2) = -1 excluded");
    cplx z1 = std::polar(1.0, x1), z2 = std::polar(1.0, x2);
    cplx f1 = karlsson_f(x1, x2), f2 = karlsson_f(x1, -x2), f3 = karlsson_f(-x1, -x2), f4 = karlsson_f(-x1, x2);
    auto C = [](cplx v) { return std::conj(v); };
    return from_rows({{1, 1, 1, 1, 1, 1},
                      {1, -1.0, z1, -z1, z1, -z1},
                      {1, z2, -f1, -z2 * f2, -C(f3), -z2 * C(f4)},
                      {1, -z2, -z1 * C(f2), z1 * z2 * C(f1), -z1 * f4, z1 * z2 * f3},
                      {1, z2, -C(f3), -z2 * C(f4), -f1, -z2 * f2},
                      {1, -z2, -z1 * f4, z1 * z2 * f3, -z1 * C(f2), z1 * z2 * C(f1)}});
}

cplx mobius(cplx al, cplx be, cplx z) { return (al * z - be) / (std::conj(be) * z - std::conj(al)); }
cplx mobius_inv(cplx al, cplx be, cplx w) { return (std::conj(al) * w - be) / (std::conj(be) * w - al); }

CMat k6_3(const Args& p) {
    double th = p.re(0), ph = p.re(1);
    cplx z1 = p.unimodular(2);
    const double r3 = std::sqrt(3.0) / 2;
    cplx a11 = -0.5 + I1 * r3 * (std::cos(th) + std::polar(1.0, -ph) * std::sin(th));
    cplx a12 = -0.5 + I1 * r3 * (-std::cos(th) + std::polar(1.0, ph) * std::sin(th));
    Eigen::Matrix2cd F2, A, B;
    F2 << 1, 1, 1, -1;
    A << a11, a12, std::conj(a12), -std::conj(a11);
    B = -F2 - A;
    cplx aA = A(0, 1) * A(0, 1), bA = A(0, 0) * A(0, 0), aB = B(0, 1) * B(0, 1), bB = B(0, 0) * B(0, 0);
    cplx w1 = z1 * z1;
    cplx z2 = std::sqrt(mobius_inv(aA, bA, mobius(aB, bB, w1)));
    cplx z3 = std::sqrt(mobius(aA, bA, w1));
    cplx z4 = std::sqrt(mobius(aB, bB, w1));
    auto Z = [](cplx z) {
        Eigen::Matrix2cd M;
        M << 1, 1, z, -z;
        return M;
    };
    Eigen::Matrix2cd Z1 = Z(z1), Z2 = Z(z2), Z3 = Z(z3).transpose(), Z4 = Z(z4).transpose();
    CMat H(6, 6);
    H << F2, Z1, Z2, Z3, 0.5 * Z3 * A * Z1, 0.5 * Z3 * B * Z2, Z4, 0.5 * Z4 * B * Z1, 0.5 * Z4 * A * Z2;
    return H;
}

// ---- order 8 ----

CMat f8_5(const Args& p) {
    cplx a = p.unimodular(0), b = p.unimodular(1), c = p.unimodular(2), d = p.unimodular(3), e = p.unimodular(4);
    cplx g = std::conj(a) * c * e;
    return from_rows({{1, 1, 1, 1, 1, 1, 1, 1},
                      {1, a, b, c, -1.0, -a, -b, -c},
                      {1, d, -1.0, -d, 1, d, -1.0, -d},
                      {1, e, -b, -g, -1.0, -e, b, g},
                      {1, -1.0, 1, -1.0, 1, -1.0, 1, -1.0},
                      {1, -a, b, -c, -1.0, a, -b, c},
                      {1, -d, -1.0, d, 1, -d, -1.0, d},
                      {1, -e, -b, g, -1.0, e, b, -g}});
}

CMat s8_4(const Args& p) {
    cplx a = p.unimodular(0), b = p.unimodular(1), c = p.unimodular(2), d = p.unimodular(3);
    cplx ad = a * std::conj(d), bd = b * std::conj(d), cd = c * d;
    return from_rows({{1, 1, 1, 1, 1, 1, 1, 1},
                      {1, d, -d, -d, -1.0, cd, -cd, d},
                      {1, ad, bd, -bd, 1, -1.0, -1.0, -ad},
                      {1, a, -b, b, -1.0, -cd, cd, -a},
                      {1, -1.0, -bd, bd, 1, c, -c, -1.0},
                      {1, -d, b, -b, -1.0, d, d, -d},
                      {1, -ad, -1.0, -1.0, 1, -c, c, ad},
                      {1, -a, d, d, -1.0, -d, -d, a}});
}

CMat d8b_5(const Args& p) {
    cplx a = p.unimodular(0), b = p.unimodular(1), c = p.unimodular(2), d = p.unimodular(3), e = p.unimodular(4);
    cplx g = b * std::conj(c) * e;
    return from_rows({{1, 1, 1, 1, 1, 1, 1, 1},
                      {1, a, -a, d, -d, -a, a, -1.0},
                      {1, b, g, -d, d, -g, -b, -1.0},
                      {1, c, -e, -1.0, -1.0, e, -c, 1},
                      {1, -c, e, -1.0, -1.0, -e, c, 1},
                      {1, -b, -g, -d, d, g, b, -1.0},
                      {1, -a, a, d, -d, a, -a, -1.0},
                      {1, -1.0, -1.0, 1, 1, -1.0, -1.0, 1}});
}

CMat h8_5(const Args& p) {
    cplx a = p.unimodular(0), b = p.unimodular(1), c = p.unimodular(2), d = p.unimodular(3), e = p.unimodular(4);
    return from_rows({{1, 1, 1, 1, 1, 1, 1, 1},
                      {1, -1.0, c, -c, d, -d, e, -e},
                      {1, 1, 1, 1, -1.0, -1.0, -1.0, -1.0},
                      {1, -1.0, c, -c, -d, d, -e, e},
                      {1, 1, -1.0, -1.0, a, a, -a, -a},
                      {1, -1.0, -c, c, b * d, -b * d, -b * e, b * e},
                      {1, 1, -1.0, -1.0, -a, -a, a, a},
                      {1, -1.0, -c, c, -b * d, b * d, b * e, -b * e}});
}

// ---- Petrescu-type ----

CMat p7_1(const Args& p) {
    cplx a = p.unimodular(0), ab = std::conj(a), w = w3, w2 = w3 * w3;
    return from_rows({{1, a * w2, w, -a * w2, w, w2, 1},
                      {ab * w2, 1, -ab * w2, w, w2, w, 1},
                      {w, -a * w2, 1, a * w2, w, w2, 1},
                      {-ab * w2, w, ab * w2, 1, w2, w, 1},
                      {w2, w, w2, w, -w2, 1, 1},
                      {w, w2, w, w2, 1, -w2, 1},
                      {1, 1, 1, 1, 1, 1, -w2}});
}

CMat p13a_4(const Args& p) {
    cplx a = p.unimodular(0), b = p.unimodular(1), c = p.unimodular(2), d = p.unimodular(3);
    const int s = p.sign(4);
    const double rd = d.real();
    cplx eo(-rd / 2, s * std::sqrt(std::max(0.0, 1.0 - rd * rd / 4)));
    cplx e = eo / w3, o = w3;
    CMat X(4, 4), Y(4, 4);
    X << o, a, b, c, d * d * o / a, o, -b * d * e / a, -c * d * o / (a * e), o / b, -a * o / (b * d * e), -1.0,
        c * o / (b * d * e), o / c, -a * e / (c * d), b * e / (c * d), -1.0;
    Y << -1.0, -a, -b, -c, -d * d * o / a, -1.0, b * d * e / a, c * d * o / (a * e), -o / b, a * o / (b * d * e), o,
        -c * o / (b * d * e), -o / c, a * e / (c * d), -b * e / (c * d), o;
    CMat T(4, 5);
    const int tp[4][4] = {{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) T(i, j) = root_of_unity(tp[i][j], 5);
        T(i, 4) = 1;
    }
    CMat D = CMat::Constant(5, 5, w3 * w3);
    for (int i = 0; i < 5; ++i) D(i, i) = 1;
    return petrescu_assemble({X, Y, T, D});
}

CMat p4_1(const Args& p) {
    cplx a = p.unimodular(0);
    return from_rows({{a, -a, -1.0, 1}, {-a, a, -1.0, 1}, {-1.0, -1.0, 1, 1}, {1, 1, 1, 1}});
}

// ---- bicirculant and Paley-type ----

CMat w22(const Args&) {
    auto P = paley_matrix(11);
    Eigen::MatrixXd S = (P.array() > 0).cast<double>(), N = (P.array() < 0).cast<double>();
    CMat I = CMat::Identity(11, 11);
    CMat A = w3 * w3 * I + w3 * P.cast<cplx>();
    CMat B = w3 * I - w3 * w3 * N.cast<cplx>() - w3 * S.cast<cplx>();
    return bicirculant(A, B);
}

CMat w34(const Args&) {
    auto cls = residue_classes(17, 4);
    CMat Q = class_matrix(cls, 0).cast<cplx>(), S = class_matrix(cls, 2).cast<cplx>();
    CMat N = (class_matrix(cls, 1) + class_matrix(cls, 3)).cast<cplx>();
    CMat I = CMat::Identity(17, 17);
    CMat A = I + Q + w3 * S + w3 * w3 * N;
    CMat B = I - Q - w3 * S - w3 * w3 * N;
    return bicirculant(A, B);
}

CMat w58(const Args&) {
    auto cls = residue_classes(29, 4);   // smallest primitive root of 29 is 2
    CMat Q = class_matrix(cls, 0).cast<cplx>(), S = class_matrix(cls, 2).cast<cplx>();
    CMat N1 = class_matrix(cls, 1).cast<cplx>(), N2 = class_matrix(cls, 3).cast<cplx>();
    CMat I = CMat::Identity(29, 29);
    cplx w = w3, w2 = w3 * w3;
    CMat A = w * I + w * Q + w2 * S + w2 * N1 - w2 * N2;
    CMat B = w2 * I - w * Q + w * S - w * N1 + w * N2;
    return bicirculant(A, B);
}

CMat bhp2_6(int p) {
    Eigen::MatrixXd P = paley_matrix(p), Id = Eigen::MatrixXd::Identity(p, p), J = Eigen::MatrixXd::Ones(p, p);
    Eigen::MatrixXd S = (P.array() > 0).cast<double>(), N = (P.array() < 0).cast<double>();
    CMat X = Id.cast<cplx>() - w3 * w3 * (J - Id).cast<cplx>();
    CMat Y = -w3 * (P + Id).cast<cplx>();
    CMat Z = w3 * (P - Id).cast<cplx>();
    CMat H(p * p, p * p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            H.block(i * p, j * p, p, p) = i == j ? X : (S(i, j) > 0 ? Y : Z);
    return H;
}

CMat paley_real(const Args& a) {
    int p = odd_prime(a, 0, 3);
    return border_with_ones((paley_matrix(p) - Eigen::MatrixXd::Identity(p, p)).cast<cplx>());
}

CMat paley_bh4(const Args& a) {
    int p = odd_prime(a, 0, 1);
    return border_with_ones(I1 * paley_matrix(p).cast<cplx>() - CMat::Identity(p, p));
}

// normalized symmetric conference matrix of order p+1
Eigen::MatrixXd conference(int p) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(p + 1, p + 1);
    C.row(0).tail(p).setOnes();
    C.col(0).tail(p).setOnes();
    C.bottomRightCorner(p, p) = paley_matrix(p);
    return C;
}

CMat conf_s(const Args& a) {
    int p = odd_prime(a, 0, 1);
    int s = a.sign(1);
    const int n = p + 1;
    cplx x(-2.0 / (n - 2), s * std::sqrt(double(n) * (n - 4)) / (n - 2));
    auto C = conference(p);
    CMat H = (C + Eigen::MatrixXd::Identity(n, n)).cast<cplx>();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (i != j) H(i, j) = C(i, j) > 0 ? x : std::conj(x);
    return H;
}

CMat conf_f5(const Args& a) {
    int p = odd_prime(a, 0, 1);
    int sa = a.sign(1), sb = a.sign(2);
    const double n = p + 1;
    cplx x((-1.0 + sa * std::sqrt(n - 1)) / (n - 2), sb * std::sqrt(n * n - 5 * n + 4 + sa * 2 * std::sqrt(n - 1)) / (n - 2));
    auto P = paley_matrix(p);
    CMat H(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) H(i, j) = P(i, j) == 0 ? cplx(1) : (P(i, j) > 0 ? x : std::conj(x));
    return H;
}

CMat two_entry(const Args& a) {
    int p = odd_prime(a, 0, 3);
    int s = a.sign(1);
    const double m = (p + 1) / 4.0;
    cplx x(-1.0 + 1.0 / (2 * m), s * std::sqrt(4 * m - 1) / (2 * m));
    auto P = paley_matrix(p);
    CMat H(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) H(i, j) = P(i, j) > 0 ? cplx(1) : x;
    return H;
}

// Blocks x_ij h_j^* h_i over the rows of F_n. With (n-1)(n-2)/2 parameters the x_ij above the diagonal are
// given and the result is self-adjoint with constant diagonal; with (n-1)^2 parameters all x_ij, i,j >= 1.
CMat selfadj_lift(const Args& a) {
    const int n = a.integer(0);
    if (n < 2) throw DomainError("SELFADJ_LIFT: n must be at least 2");
    const std::size_t k = a.p.params.size() - 1;
    const std::size_t nsa = static_cast<std::size_t>((n - 1) * (n - 2) / 2), nfull = static_cast<std::size_t>((n - 1) * (n - 1));
    if (k != 0 && k != nsa && k != nfull) throw DomainError("SELFADJ_LIFT: wrong number of block parameters");
    CMat X = CMat::Ones(n, n);
    std::size_t t = 1;
    if (k == nfull && k != 0) {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) X(i, j) = a.unimodular(t++);
    } else if (k == nsa) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                X(i, j) = a.unimodular(t++);
                X(j, i) = std::conj(X(i, j));
            }
    }
    CMat F = fourier(n);
    CMat K(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) K.block(i * n, j * n, n, n) = X(i, j) * (F.row(j).adjoint() * F.row(i));
    return K;
}

CMat from_table(const std::string& id) { return blog_to_cmat(catalog_blog(id)); }

using Ctor = std::function<CMat(const Args&)>;

struct Entry {
    FamilyInfo info;
    Ctor make;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r{
        {{"F4_1", "a", 1, 0}, f4_1},
        {{"F6_2", "a b", 2, 0}, f6_2},
        {{"D6_1", "c", 1, 0}, d6_1},
        {{"S6", "", 0, 3}, s6},
        {{"B6_1", "theta branch(+-1)", 2, 0}, b6_1},
        {{"M6_1", "x (x != +-i)", 1, 0}, m6_1},
        {{"X6_2", "alpha (D(alpha)<=0, D(-alpha)<=0)", 1, 0}, x6_2},
        {{"K6_2", "x1 x2 (real)", 2, 0}, k6_2},
        {{"K6_3", "theta phi z1", 3, 0}, k6_3},
        {{"F8_5", "a b c d e", 5, 0}, f8_5},
        {{"S8_4", "a b c d", 4, 0}, s8_4},
        {{"D8B_5", "a b c d e", 5, 0}, d8b_5},
        {{"H8_5", "a b c d e", 5, 0}, h8_5},
        {{"P7_1", "a", 1, 0}, p7_1},
        {{"P13A_4", "a b c d branch(+-1)", 5, 0}, p13a_4},
        {{"P4_1", "a", 1, 0}, p4_1},
        {{"BH16_4", "", 0, 4}, [](const Args&) { return from_table("BH16_4"); }},
        {{"BH16_6", "", 0, 6}, [](const Args&) { return from_table("BH16_6"); }},
        {{"L14A", "", 0, 4}, [](const Args&) { return from_table("L14A"); }},
        {{"W19", "", 0, 6}, [](const Args&) { return from_table("W19"); }},
        {{"W22", "", 0, 6}, w22},
        {{"W25", "", 0, 6}, [](const Args&) { return bhp2_6(5); }},
        {{"W34", "", 0, 6}, w34},
        {{"W58", "", 0, 6}, w58},
        {{"BHp2_6", "p (odd prime)", 1, 6}, [](const Args& a) { return bhp2_6(odd_prime(a, 0)); }},
        {{"PALEY_REAL", "p (prime, 3 mod 4)", 1, 2}, paley_real},
        {{"PALEY_BH4", "p (prime, 1 mod 4)", 1, 4}, paley_bh4},
        {{"CONF_S", "p (prime, 1 mod 4) branch(+-1)", 2, 0}, conf_s},
        {{"CONF_F5", "p (prime, 1 mod 4) signA signB", 3, 0}, conf_f5},
        {{"TWO_ENTRY", "p (prime, 3 mod 4) branch(+-1)", 2, 0}, two_entry},
        {{"SELFADJ_LIFT", "n [x_ij...]", -1, 0}, selfadj_lift},
        {{"Q9H", "", 0, 3}, [](const Args&) { return from_table("Q9H"); }},
    };
    return r;
}

const Entry& lookup(const std::string& id) {
    for (const auto& e : registry())
        if (e.info.id == id) return e;
    throw DomainError("unknown family " + id);
}

}  // namespace

Eigen::MatrixXd paley_matrix(int p) {
    Eigen::MatrixXd P(p, p);
    std::vector<int> x(p, 0);
    for (int i = 1; i < p; ++i) x[i] = legendre(i, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) P(i, j) = x[(j - i + p) % p];
    return P;
}

std::vector<int> residue_classes(int p, int idx) {
    if (!is_prime(static_cast<std::uint64_t>(p)) || (p - 1) % idx) throw DomainError("residue_classes: bad p or index");
    const auto g = smallest_primitive_root(static_cast<std::uint64_t>(p));
    auto lg = dlog_table(g, static_cast<std::uint64_t>(p));
    std::vector<int> cls(p, -1);
    for (int x = 1; x < p; ++x) cls[x] = lg[x] % idx;
    return cls;
}

double x6_D(cplx a) {
    double m = std::norm(a);
    return m * m + 18 * m - 8 * (a * a * a).real() - 27;
}

bool x6_in_domain(cplx alpha, double tol) { return x6_D(alpha) <= tol && x6_D(-alpha) <= tol; }

double b6_theta_min() { return std::acos((std::sqrt(3.0) - 1) / 2); }

const std::vector<FamilyInfo>& family_list() {
    static const std::vector<FamilyInfo> l = [] {
        std::vector<FamilyInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return l;
}

const FamilyInfo& family_info(const std::string& id) { return lookup(id).info; }

CMat construct(const FamilyPoint& p) {
    const auto& e = lookup(p.family);
    if (e.info.nparams >= 0 && static_cast<int>(p.params.size()) != e.info.nparams)
        throw DomainError(p.family + ": expected " + std::to_string(e.info.nparams) + " parameters");
    if (e.info.nparams < 0 && p.params.empty()) throw DomainError(p.family + ": missing parameters");
    return e.make(Args{p});
}

FamilyPoint random_point(const std::string& id, std::mt19937_64& rng) {
    const auto& info = lookup(id).info;
    std::uniform_real_distribution<double> U(0.0, 2 * kPi);
    std::uniform_int_distribution<int> coin(0, 1);
    auto uni = [&] { return std::polar(1.0, U(rng)); };
    auto sgn = [&] { return cplx(coin(rng) ? 1.0 : -1.0); };
    auto pick = [&](std::vector<int> v) { return cplx(v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]); };
    FamilyPoint fp{id, {}};
    auto& P = fp.params;
    if (id == "B6_1") {
        std::uniform_real_distribution<double> T(b6_theta_min() + 1e-6, kPi);
        P = {cplx(coin(rng) ? T(rng) : -T(rng)), sgn()};
    } else if (id == "M6_1") {
        cplx x;
        do x = uni();
        while (std::abs(x - I1) < 1e-3 || std::abs(x + I1) < 1e-3);
        P = {x};
    } else if (id == "X6_2") {
        std::uniform_real_distribution<double> B(-3.0, 3.0);
        cplx a;
        do a = cplx(B(rng), B(rng));
        while (!x6_in_domain(a, -0.5));
        P = {a};
    } else if (id == "K6_2") {
        std::uniform_real_distribution<double> T(-kPi, kPi);
        double x1, x2;
        do {
            x1 = T(rng);
            x2 = T(rng);
        } while (1.0 + std::sin(x1) * std::sin(x2) < 0.05);
        P = {cplx(x1), cplx(x2)};
    } else if (id == "K6_3") {
        std::uniform_real_distribution<double> T(0.0, kPi);
        P = {cplx(T(rng)), cplx(T(rng)), uni()};
    } else if (id == "P13A_4") {
        P = {uni(), uni(), uni(), uni(), sgn()};
    } else if (id == "BHp2_6") {
        P = {pick({3, 5, 7})};
    } else if (id == "PALEY_REAL") {
        P = {pick({3, 7, 11, 19, 23})};
    } else if (id == "PALEY_BH4") {
        P = {pick({5, 13, 17, 29})};
    } else if (id == "CONF_S") {
        P = {pick({5, 13, 17}), sgn()};
    } else if (id == "CONF_F5") {
        P = {pick({5, 13, 17}), sgn(), sgn()};
    } else if (id == "TWO_ENTRY") {
        P = {pick({3, 7, 11, 19})};
        P.push_back(sgn());
    } else if (id == "SELFADJ_LIFT") {
        int n = static_cast<int>(pick({2, 3, 4}).real());
        P = {cplx(n)};
        int k = coin(rng) ? (n - 1) * (n - 2) / 2 : (n - 1) * (n - 1);
        for (int t = 0; t < k; ++t) P.push_back(uni());
    } else {
        for (int t = 0; t < info.nparams; ++t) P.push_back(uni());
    }
    return fp;
}

CMat petrescu_assemble(const PetrescuBlocks& b) {
    const auto s = b.X.rows();
    if (b.X.cols() != s || b.Y.rows() != s || b.Y.cols() != s || b.T.rows() != s || b.T.cols() != s + 1 ||
        b.D.rows() != s + 1 || b.D.cols() != s + 1)
        throw DomainError("petrescu_assemble: block sizes must be s, s, s x (s+1), s+1");
    CMat H(3 * s + 1, 3 * s + 1);
    H << b.X, b.Y, b.T, b.Y, b.X, b.T, b.T.adjoint(), b.T.adjoint(), b.D;
    return H;
}

PetrescuBlocks petrescu_split(const CMat& H) {
    const auto n = H.rows();
    if (n < 4 || (n - 1) % 3) throw DomainError("petrescu_split: order must be 3s+1");
    const auto s = (n - 1) / 3;
    return {H.block(0, 0, s, s), H.block(0, s, s, s), H.block(0, 2 * s, s, s + 1), H.block(2 * s, 2 * s, s + 1, s + 1)};
}

PetrescuReport petrescu_validate(const CMat& H, double tol) {
    auto b = petrescu_split(H);
    const auto s = b.X.rows();
    PetrescuReport r;
    r.s = static_cast<int>(s);
    const double ds = static_cast<double>(s);
    const CMat Is = CMat::Identity(s, s), I1s = CMat::Identity(s + 1, s + 1), J1 = CMat::Ones(s + 1, s + 1);
    auto add = [&](const std::string& name, double res) { r.checks.push_back({name, res, res <= tol}); };
    auto dev = [](const CMat& M) { return max_abs(M); };

    add("layout", std::max({dev(H.block(s, 0, s, s) - b.Y), dev(H.block(s, s, s, s) - b.X),
                            dev(H.block(s, 2 * s, s, s + 1) - b.T), dev(H.block(2 * s, 0, s + 1, s) - b.T.adjoint()),
                            dev(H.block(2 * s, s, s + 1, s) - b.T.adjoint())}));
    add("pt1 TT* = (s+1)I", dev(b.T * b.T.adjoint() - (ds + 1) * Is));
    add("pt2 T*T = (s+1)I - J", dev(b.T.adjoint() * b.T - (ds + 1) * I1s + J1));
    add("pt3 TJ = 0", dev(b.T * CMat::Ones(s + 1, 1)));
    add("unimodular X,Y,D", std::max({unimod_defect(b.X), unimod_defect(b.Y), unimod_defect(b.D)}));
    CMat P = b.X + b.Y, M = b.X - b.Y;
    add("p1 (X+Y)(X+Y)* = (s-1)I", dev(P * P.adjoint() - (ds - 1) * Is));
    add("p4 (X-Y)(X-Y)* = (3s+1)I", dev(M * M.adjoint() - (3 * ds + 1) * Is));
    add("p3 DD* = D*D = (s-1)I + 2J", std::max(dev(b.D * b.D.adjoint() - (ds - 1) * I1s - 2.0 * J1),
                                              dev(b.D.adjoint() * b.D - (ds - 1) * I1s - 2.0 * J1)));
    add("p5 (X+Y)T + TD* = 0", dev(P * b.T + b.T * b.D.adjoint()));
    add("PS1 X+Y = -TD*T*/(s+1)", dev(P + b.T * b.D.adjoint() * b.T.adjoint() / (ds + 1)));
    add("PS2 JD = DJ", dev(J1 * b.D - b.D * J1));
    {
        // JD = DJ = cJ with |c| = sqrt(n)
        CMat JD = J1 * b.D;
        cplx c = JD(0, 0);
        double res = std::max(dev(JD - c * J1), std::abs(std::abs(c) - std::sqrt(3 * ds + 1)));
        add("PL1234 JD = cJ, |c| = sqrt(n)", res);
    }
    {
        double det2 = std::norm(b.D.determinant());
        double want = std::pow(ds - 1, ds) * (3 * ds + 1);
        add("det |det D|^2 = (s-1)^s (3s+1)", std::abs(det2 - want) / std::max(1.0, want));
    }
    r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const PetrescuCheck& c) { return c.pass; });
    return r;
}

WeighingPair weighing_family_W10(cplx a, cplx b, cplx c) {
    auto C = [](cplx v) { return std::conj(v); };
    cplx ba = b * C(a), ab = a * C(b);
    CMat W = from_rows({{0, a, b, 1, -a, -b, 1, 1, -1.0, -1.0},
                        {C(a), 0, ba, -C(a), 1, -ba, 1, -1.0, c, -c},
                        {C(b), ab, 0, -C(b), -ab, 1, 1, -1.0, -c, c},
                        {1, -a, -b, 0, a, b, 1, 1, -1.0, -1.0},
                        {-C(a), 1, -ba, C(a), 0, ba, 1, -1.0, c, -c},
                        {-C(b), -ab, 1, C(b), ab, 0, 1, -1.0, -c, c},
                        {1, 1, 1, 1, 1, 1, 0, 1, 1, 1},
                        {1, -1.0, -1.0, 1, -1.0, -1.0, 1, 0, 1, 1},
                        {-1.0, C(c), -C(c), -1.0, C(c), -C(c), 1, 1, 0, 1},
                        {-1.0, -C(c), C(c), -1.0, -C(c), C(c), 1, 1, 1, 0}});
    return {W, W + I1 * CMat::Identity(10, 10)};
}

}  // namespace hadlab
