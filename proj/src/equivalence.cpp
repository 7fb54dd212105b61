#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "hadlab/combinatorics.hpp"
#include "hadlab/invariants.hpp"

namespace hadlab {

CMat apply_witness(const CMat& H, const Witness& w) {
    const auto n = H.rows();
    CMat K(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            K(i, j) = w.row_phase(i) * H(w.row_perm[i], w.col_perm[j]) * w.col_phase(j);
    return K;
}

namespace {

// Entry labels shared by both matrices: clusters of the target's entry angles.
struct Labeler {
    std::vector<double> reps;
    double tol;
    Labeler(const CMat& M, double t) : tol(t) {
        std::vector<double> a;
        for (Eigen::Index i = 0; i < M.size(); ++i) a.push_back(std::arg(M.data()[i]));
        std::sort(a.begin(), a.end());
        for (double x : a)
            if (reps.empty() || x - reps.back() > tol) reps.push_back(x);
        if (reps.size() > 1 && reps.front() + 2 * kPi - reps.back() < tol) reps.pop_back();
    }
    int label(cplx z) const {
        if (std::abs(std::abs(z) - 1.0) > 1e-6) return -1;
        double a = std::arg(z);
        for (std::size_t k = 0; k < reps.size(); ++k) {
            double d = std::abs(a - reps[k]);
            d = std::min(d, 2 * kPi - d);
            if (d <= tol) return static_cast<int>(k);
        }
        return -1;
    }
};

using LabelMat = std::vector<int>;   // row-major n*n

bool label_matrix(const CMat& M, const Labeler& lb, LabelMat& out) {
    const auto n = M.rows();
    out.assign(static_cast<std::size_t>(n * n), 0);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            int l = lb.label(M(i, j));
            if (l < 0) return false;
            out[i * n + j] = l;
        }
    return true;
}

std::vector<int> histogram(const LabelMat& A, int n, int nl, int idx, bool row) {
    std::vector<int> h(nl, 0);
    for (int k = 0; k < n; ++k) ++h[row ? A[idx * n + k] : A[k * n + idx]];
    return h;
}

// Finds row/column bijections sigma, tau with B(sigma i, tau j) = A(i, j), sigma(0) = r, tau(0) = c.
class PermSearch {
public:
    PermSearch(const LabelMat& A, const LabelMat& B, int n, int nl, long long& nodes, long long budget)
        : A_(A), B_(B), n_(n), nl_(nl), nodes_(nodes), budget_(budget) {
        for (int i = 0; i < n; ++i) {
            rowKeyA_.push_back(histogram(A, n, nl, i, true));
            rowKeyB_.push_back(histogram(B, n, nl, i, true));
        }
    }

    bool prefilter(int r, int c) const {
        std::vector<std::vector<int>> ra, rb, ca, cb;
        for (int i = 0; i < n_; ++i) {
            ra.push_back(rowKeyA_[i]);
            rb.push_back(rowKeyB_[i]);
            ca.push_back(histogram(A_, n_, nl_, i, false));
            cb.push_back(histogram(B_, n_, nl_, i, false));
        }
        if (ra[0] != rb[r] || ca[0] != cb[c]) return false;
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        return ra == rb && ca == cb;
    }

    // on_leaf(sigma, tau, multiplicity) returns true to stop. Returns false when the budget ran out.
    bool run(int r, int c, const std::function<bool(const std::vector<int>&, const std::vector<int>&, long long)>& on_leaf) {
        sigma_.assign(n_, -1);
        usedB_.assign(n_, false);
        sigma_[0] = r;
        usedB_[r] = true;
        std::vector<int> ka(n_, 1), kb(n_, 1);
        ka[0] = 0;
        kb[c] = 0;
        stop_ = false;
        out_of_budget_ = false;
        c_ = c;
        rec(1, ka, kb, 2, on_leaf);
        return !out_of_budget_;
    }

private:
    void rec(int i, const std::vector<int>& ka, const std::vector<int>& kb, int ncol,
             const std::function<bool(const std::vector<int>&, const std::vector<int>&, long long)>& on_leaf) {
        if (stop_ || out_of_budget_) return;
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return;
        }
        if (i == n_) {
            leaf(ka, kb, ncol, on_leaf);
            return;
        }
        std::vector<int> cnt(static_cast<std::size_t>(ncol * nl_), 0), code(static_cast<std::size_t>(ncol * nl_), -1);
        std::vector<int> na(n_), nb(n_);
        for (int s = 0; s < n_ && !stop_ && !out_of_budget_; ++s) {
            if (usedB_[s] || rowKeyB_[s] != rowKeyA_[i]) continue;
            std::fill(cnt.begin(), cnt.end(), 0);
            std::fill(code.begin(), code.end(), -1);
            int next = 0;
            for (int j = 0; j < n_; ++j) {
                int key = ka[j] * nl_ + A_[i * n_ + j];
                if (code[key] < 0) code[key] = next++;
                ++cnt[key];
                na[j] = code[key];
            }
            bool ok = true;
            for (int j = 0; j < n_; ++j) {
                int key = kb[j] * nl_ + B_[s * n_ + j];
                if (--cnt[key] < 0 || code[key] < 0) {
                    ok = false;
                    break;
                }
                nb[j] = code[key];
            }
            if (!ok) continue;
            sigma_[i] = s;
            usedB_[s] = true;
            rec(i + 1, na, nb, next, on_leaf);
            usedB_[s] = false;
            sigma_[i] = -1;
        }
    }

    void leaf(const std::vector<int>& ka, const std::vector<int>& kb, int ncol,
              const std::function<bool(const std::vector<int>&, const std::vector<int>&, long long)>& on_leaf) {
        std::vector<std::vector<int>> ca(ncol), cb(ncol);
        for (int j = 0; j < n_; ++j) {
            ca[ka[j]].push_back(j);
            cb[kb[j]].push_back(j);
        }
        std::vector<int> tau(n_, -1);
        long long mult = 1;
        for (int k = 0; k < ncol; ++k) {
            if (ca[k].size() != cb[k].size()) return;
            for (std::size_t t = 0; t < ca[k].size(); ++t) {
                tau[ca[k][t]] = cb[k][t];
                mult *= static_cast<long long>(t + 1);
            }
        }
        if (tau[0] != c_) return;
        if (on_leaf(sigma_, tau, mult)) stop_ = true;
    }

    const LabelMat& A_;
    const LabelMat& B_;
    int n_, nl_;
    long long& nodes_;
    long long budget_;
    std::vector<std::vector<int>> rowKeyA_, rowKeyB_;
    std::vector<int> sigma_;
    std::vector<bool> usedB_;
    bool stop_ = false, out_of_budget_ = false;
    int c_ = 0;
};

}  // namespace

EquivResult are_equivalent(const CMat& H, const CMat& K, const EquivOptions& opt) {
    EquivResult res;
    if (H.rows() != K.rows()) {
        res.verdict = Verdict::Inequivalent;
        res.reason = "orders differ";
        return res;
    }
    const int n = static_cast<int>(H.rows());
    if (opt.invariant_precheck) {
        if (!same_value_set(haagerup_set(H, opt.tol), haagerup_set(K, opt.tol), opt.tol)) {
            res.verdict = Verdict::Inequivalent;
            res.reason = "Haagerup sets differ";
            return res;
        }
        int dmax = std::min(3, n / 2);
        if (dmax >= 2 && !fingerprint(H, dmax).same_as(fingerprint(K, dmax))) {
            res.verdict = Verdict::Inequivalent;
            res.reason = "fingerprints differ";
            return res;
        }
    }
    Dephased dk = dephase(K);
    Labeler lb(dk.H, opt.tol * 10);
    LabelMat A;
    if (!label_matrix(dk.H, lb, A)) {
        res.reason = "target entries not unimodular";
        return res;
    }
    const int nl = static_cast<int>(lb.reps.size());
    bool exhausted = true;
    for (int r = 0; r < n && !res.witness; ++r)
        for (int c = 0; c < n && !res.witness; ++c) {
            Dephased dh = dephase_at(H, r, c);
            LabelMat B;
            if (!label_matrix(dh.H, lb, B)) continue;
            PermSearch ps(A, B, n, nl, res.nodes, opt.budget);
            if (!ps.prefilter(r, c)) continue;
            bool within = ps.run(r, c, [&](const std::vector<int>& sg, const std::vector<int>& tau, long long) {
                Witness w{sg, tau, CVec(n), CVec(n)};
                for (int i = 0; i < n; ++i) w.row_phase(i) = dh.row(sg[i]) / dk.row(i);
                for (int j = 0; j < n; ++j) w.col_phase(j) = dh.col(tau[j]) / dk.col(j);
                if (max_abs(apply_witness(H, w) - K) <= 1e3 * opt.tol * std::max(1, n)) {
                    res.witness = w;
                    return true;
                }
                return false;
            });
            if (!within) {
                exhausted = false;
                r = n;
                break;
            }
        }
    if (res.witness) {
        res.verdict = Verdict::Equivalent;
        res.reason = "witness verified";
    } else if (exhausted) {
        res.verdict = Verdict::Inequivalent;
        res.reason = "exhaustive search";
    } else {
        res.verdict = Verdict::Undecided;
        res.reason = "budget exhausted";
    }
    return res;
}

long long automorphism_count(const CMat& H, int q, long long budget, double tol) {
    const int n = static_cast<int>(H.rows());
    Dephased d0 = dephase(H);
    Labeler lb(d0.H, tol * 10);
    LabelMat A;
    if (!label_matrix(d0.H, lb, A)) throw DomainError("automorphism_count: entries not unimodular");
    const int nl = static_cast<int>(lb.reps.size());
    long long nodes = 0, total = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Dephased dh = dephase_at(H, r, c);
            LabelMat B;
            if (!label_matrix(dh.H, lb, B)) continue;
            PermSearch ps(A, B, n, nl, nodes, budget);
            if (!ps.prefilter(r, c)) continue;
            bool ok = ps.run(r, c, [&](const std::vector<int>&, const std::vector<int>&, long long m) {
                total += m;
                return false;
            });
            if (!ok) return -1;
        }
    return total * q;
}

std::string ActFlags::str() const {
    auto ch = [](Verdict v) { return v == Verdict::Equivalent ? 'Y' : v == Verdict::Inequivalent ? 'N' : '?'; };
    return {ch(adjoint), ch(conjugate), ch(transpose)};
}

ActFlags act_classify(const CMat& H, const EquivOptions& opt) {
    ActFlags f;
    f.adjoint = are_equivalent(H, H.adjoint(), opt).verdict;
    f.conjugate = are_equivalent(H, H.conjugate(), opt).verdict;
    f.transpose = are_equivalent(H, H.transpose(), opt).verdict;
    return f;
}

namespace {
// Backtracking over column permutations pi; check(k, pi) validates column k against columns < k.
bool perm_search(int n, const std::function<bool(int, const std::vector<int>&)>& check) {
    std::vector<int> pi(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int k) {
        if (k == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            pi[k] = j;
            if (check(k, pi)) {
                used[j] = true;
                if (rec(k + 1)) return true;
                used[j] = false;
            }
        }
        pi[k] = -1;
        return false;
    };
    return rec(0);
}
}  // namespace

bool equivalent_to_symmetric(const CMat& H, double tol) {
    const int n = static_cast<int>(H.rows());
    // G = H P_pi; need G_ij / G_ji = c_j / c_i with c_0 = 1.
    std::vector<cplx> c(n);
    return perm_search(n, [&](int k, const std::vector<int>& pi) {
        auto G = [&](int i, int j) { return H(i, pi[j]); };
        if (k == 0) {
            c[0] = 1.0;
            return true;
        }
        c[k] = G(0, k) / G(k, 0);
        for (int i = 1; i < k; ++i)
            if (std::abs(G(i, k) / G(k, i) - c[k] / c[i]) > tol * 10) return false;
        return true;
    });
}

bool equivalent_to_hermitian(const CMat& H, double tol) {
    const int n = static_cast<int>(H.rows());
    // G_ij / conj(G_ji) = d_i d_j with d_i^2 = G_ii / conj(G_ii).
    std::vector<cplx> d(n);
    return perm_search(n, [&](int k, const std::vector<int>& pi) {
        auto G = [&](int i, int j) { return H(i, pi[j]); };
        auto R = [&](int i, int j) { return G(i, j) / std::conj(G(j, i)); };
        if (k == 0) {
            d[0] = std::sqrt(R(0, 0));
            return true;
        }
        d[k] = R(0, k) / d[0];
        if (std::abs(d[k] * d[k] - R(k, k)) > tol * 10) return false;
        for (int i = 1; i < k; ++i)
            if (std::abs(R(i, k) - d[i] * d[k]) > tol * 10) return false;
        return true;
    });
}

bool has_sub_hadamard(const CMat& H, int d, double tol) {
    const int n = static_cast<int>(H.rows());
    auto subs = subsets(n, d);
    CMat S(d, d);
    for (const auto& R : subs)
        for (const auto& C : subs) {
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) S(a, b) = H(R[a], C[b]);
            if (hadamard_ok(S, tol)) return true;
        }
    return false;
}

}  // namespace hadlab
