#include "hadlab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <Eigen/SVD>

#include "hadlab/combinatorics.hpp"
#include "hadlab/numtheory.hpp"

namespace hadlab {

DefectReport defect(const CMat& M, double rank_tol) {
    const int n = static_cast<int>(M.rows());
    const int rows = n * (n - 1);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(std::max(rows, 1), n * n);
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                cplx c = M(i, k) * std::conj(M(j, k));
                A(e, i * n + k) += c.real();
                A(e, j * n + k) -= c.real();
                A(e + 1, i * n + k) += c.imag();
                A(e + 1, j * n + k) -= c.imag();
            }
            e += 2;
        }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& s = svd.singularValues();
    DefectReport r;
    r.singular_values.assign(s.data(), s.data() + s.size());
    const double smax = s.size() ? s(0) : 0.0;
    const double thr = rank_tol * smax;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s(k) > thr) ++r.rank;
        if (s(k) > thr / 10 && s(k) < thr * 10) r.ambiguous = true;
    }
    if (rows == 0) r.rank = 0;
    r.m = n * n - r.rank;
    r.d = r.m - 2 * n + 1;
    return r;
}

int fourier_defect(int n) {
    if (n < 2) throw DomainError("fourier_defect: n must be at least 2");
    double prod = 1;
    for (auto [p, a] : factorize(static_cast<std::uint64_t>(n)))
        prod *= 1.0 + a - static_cast<double>(a) / static_cast<double>(p);
    return static_cast<int>(std::lround(n * prod)) - 2 * n + 1;
}

namespace {
// Cluster unimodular values by angle with wrap-around; representatives are cluster means.
std::vector<cplx> dedup_unimodular(std::vector<double> ang, double tol) {
    std::vector<cplx> out;
    if (ang.empty()) return out;
    std::sort(ang.begin(), ang.end());
    std::vector<std::vector<double>> groups{{ang[0]}};
    for (std::size_t k = 1; k < ang.size(); ++k) {
        if (ang[k] - groups.back().back() < tol) groups.back().push_back(ang[k]);
        else groups.push_back({ang[k]});
    }
    if (groups.size() > 1 && groups.front().front() + 2 * kPi - groups.back().back() < tol) {
        for (double a : groups.front()) groups.back().push_back(a + 2 * kPi);
        groups.erase(groups.begin());
    }
    for (const auto& g : groups) {
        double m = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
        out.push_back(std::polar(1.0, m));
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });
    return out;
}
}  // namespace

std::vector<cplx> haagerup_set(const CMat& M, double tol) {
    const auto n = M.rows();
    std::vector<double> ang;
    ang.reserve(static_cast<std::size_t>(n * n * n * n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k)
            for (Eigen::Index j = 0; j < n; ++j) {
                cplx a = M(i, j) * std::conj(M(k, j));
                for (Eigen::Index l = 0; l < n; ++l) ang.push_back(std::arg(a * M(k, l) * std::conj(M(i, l))));
            }
    return dedup_unimodular(std::move(ang), tol);
}

bool same_value_set(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (cplx x : a) {
        bool f = false;
        for (cplx y : b)
            if (std::abs(x - y) < 10 * tol) {
                f = true;
                break;
            }
        if (!f) return false;
    }
    return true;
}

namespace {
double minor_abs(const CMat& M, const std::vector<int>& R, const std::vector<int>& C) {
    const std::size_t d = R.size();
    if (d == 1) return std::abs(M(R[0], C[0]));
    if (d == 2) return std::abs(M(R[0], C[0]) * M(R[1], C[1]) - M(R[0], C[1]) * M(R[1], C[0]));
    if (d == 3) {
        auto m = [&](int i, int j) { return M(R[i], C[j]); };
        cplx det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        return std::abs(det);
    }
    CMat S(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) S(i, j) = M(R[i], C[j]);
    return std::abs(Eigen::PartialPivLU<CMat>(S).determinant());
}
}  // namespace

Fingerprint fingerprint(const CMat& M, int dmax, double tol_fp) {
    const int n = static_cast<int>(M.rows());
    Fingerprint fp;
    for (int d = 2; d <= dmax && d <= n; ++d) {
        auto subs = subsets(n, d);
        std::vector<double> vals;
        vals.reserve(subs.size() * subs.size());
        for (const auto& R : subs)
            for (const auto& C : subs) vals.push_back(minor_abs(M, R, C));
        std::sort(vals.begin(), vals.end());
        FingerprintLevel lv{d, {}};
        for (std::size_t k = 0; k < vals.size();) {
            std::size_t e = k + 1;
            while (e < vals.size() && vals[e] - vals[e - 1] < tol_fp) ++e;
            double v = vals[k];
            if (v < tol_fp) v = 0.0;
            lv.values.emplace_back(v, static_cast<long long>(e - k));
            k = e;
        }
        fp.levels.push_back(std::move(lv));
    }
    return fp;
}

bool Fingerprint::same_as(const Fingerprint& o, double tol) const {
    if (levels.size() != o.levels.size()) return false;
    for (std::size_t l = 0; l < levels.size(); ++l) {
        const auto& a = levels[l].values;
        const auto& b = o.levels[l].values;
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].second != b[k].second || std::abs(a[k].first - b[k].first) > 10 * tol) return false;
    }
    return true;
}

long long vanishing_minors(const CMat& M, int d, double tol) {
    const int n = static_cast<int>(M.rows());
    auto subs = subsets(n, d);
    long long c = 0;
    for (const auto& R : subs)
        for (const auto& C : subs)
            if (minor_abs(M, R, C) < tol) ++c;
    return c;
}

RankCounts rank_profile_slot(const CMat& M, int j, int k, double rank_tol) {
    const int n = static_cast<int>(M.rows());
    std::map<int, long long> cnt;
    auto rs = subsets(n, j), cs = subsets(n, k);
    CMat S(j, k);
    for (const auto& R : rs)
        for (const auto& C : cs) {
            for (int a = 0; a < j; ++a)
                for (int b = 0; b < k; ++b) S(a, b) = M(R[a], C[b]);
            Eigen::JacobiSVD<CMat> svd(S);
            const auto& s = svd.singularValues();
            int r = 0;
            for (Eigen::Index t = 0; t < s.size(); ++t)
                if (s(t) > rank_tol * s(0)) ++r;
            ++cnt[r];
        }
    return RankCounts(cnt.begin(), cnt.end());
}

std::map<std::pair<int, int>, RankCounts> rank_profile(const CMat& M, double rank_tol) {
    const int n = static_cast<int>(M.rows());
    if (n < 4) throw DomainError("rank_profile: order must be at least 4");
    std::map<std::pair<int, int>, RankCounts> out;
    for (int j = 2; j <= n - 2; ++j)
        for (int k = 2; k <= n - 2; ++k) out[{j, k}] = rank_profile_slot(M, j, k, rank_tol);
    return out;
}

namespace {
int elimination_rank_prime_power(std::vector<std::vector<long long>> rows, long long p, long long pe) {
    auto val = [&](long long x) {
        x = mod(x, pe);
        if (x == 0) return 1 << 30;
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    auto inv_unit = [&](long long u) {
        for (long long t = 1; t < pe; ++t)
            if (mod(u * t, pe) == 1) return t;
        return 0LL;
    };
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t top = 0;
    for (std::size_t c = 0; c < ncols && top < rows.size(); ++c) {
        std::size_t best = rows.size();
        int bv = 1 << 30;
        for (std::size_t r = top; r < rows.size(); ++r) {
            int v = val(rows[r][c]);
            if (v < bv) {
                bv = v;
                best = r;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[top], rows[best]);
        long long pv = 1;
        for (int k = 0; k < bv; ++k) pv *= p;
        long long u = mod(rows[top][c], pe) / pv;
        long long ui = inv_unit(u);
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            long long x = mod(rows[r][c], pe);
            if (x == 0) continue;
            long long f = mod((x / pv) * ui, pe);
            for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = mod(rows[r][k] - f * rows[top][k], pe);
        }
        ++top;
    }
    return static_cast<int>(top);
}
}  // namespace

int zq_rank_upper_bound(const BLog& L) {
    int best = 0;
    for (auto [p, e] : factorize(static_cast<std::uint64_t>(L.q))) {
        long long pe = 1;
        for (int k = 0; k < e; ++k) pe *= static_cast<long long>(p);
        std::vector<std::vector<long long>> rows(L.n, std::vector<long long>(L.n));
        for (int i = 0; i < L.n; ++i)
            for (int j = 0; j < L.n; ++j) rows[i][j] = mod(L.L(i, j), pe);
        best = std::max(best, elimination_rank_prime_power(rows, static_cast<long long>(p), pe));
    }
    return std::max(best, 1);
}

ZqRankResult zq_rank(const BLog& L, long long budget) {
    const int n = L.n, q = L.q;
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<int> r(n);
        for (int j = 0; j < n; ++j) r[j] = static_cast<int>(mod(L.L(i, j), q));
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
    }
    const int m = static_cast<int>(rows.size());
    const int ub = std::min(zq_rank_upper_bound(L), m);
    auto key = [&](const std::vector<int>& v) { return std::string(v.begin(), v.end()); };
    long long spent = 0;
    for (int r = 1; r < ub; ++r) {
        long long combos = 1;
        for (int k = 0; k < r; ++k) combos *= q;
        for (const auto& T : subsets(m, r)) {
            spent += combos;
            if (spent > budget) return {r, false};
            std::unordered_set<std::string> span;
            std::vector<int> coef(r, 0), v(n);
            for (long long c = 0; c < combos; ++c) {
                std::fill(v.begin(), v.end(), 0);
                for (int t = 0; t < r; ++t)
                    if (coef[t])
                        for (int j = 0; j < n; ++j) v[j] = (v[j] + coef[t] * rows[T[t]][j]) % q;
                span.insert(key(v));
                for (int t = 0; t < r; ++t) {
                    if (++coef[t] < q) break;
                    coef[t] = 0;
                }
            }
            bool all = true;
            for (const auto& row : rows)
                if (!span.count(key(row))) {
                    all = false;
                    break;
                }
            if (all) return {r, true};
        }
    }
    return {ub, true};
}

}  // namespace hadlab
