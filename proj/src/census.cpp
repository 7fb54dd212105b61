#include "hadlab/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace hadlab {

namespace {

using Row = std::vector<int>;

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
};

bool vanishing(const std::vector<int>& counts, int q) {
    cplx s = 0;
    for (int k = 0; k < q; ++k) s += static_cast<double>(counts[k]) * root_of_unity(k, q);
    return std::abs(s) < 1e-9;
}

bool orthogonal(const Row& a, const Row& b, int q) {
    std::vector<int> c(q, 0);
    for (std::size_t j = 0; j < a.size(); ++j) ++c[((a[j] - b[j]) % q + q) % q];
    return vanishing(c, q);
}

// Rows x with x_0 = 0 orthogonal to the all-zero row, in lexicographic order.
std::vector<Row> candidate_rows(int n, int q) {
    std::vector<Row> out;
    Row x(n, 0);
    std::vector<int> c(q, 0);
    while (true) {
        std::fill(c.begin(), c.end(), 0);
        for (int v : x) ++c[v];
        if (vanishing(c, q)) out.push_back(x);
        int j = n - 1;
        while (j >= 1 && x[j] == q - 1) x[j--] = 0;
        if (j < 1) break;
        ++x[j];
    }
    return out;
}

// Tie state: bit j set while columns j + 1 and j + 2 agree on all rows so far.
bool column_compatible(const Row& r, std::uint32_t tie) {
    for (std::size_t j = 0; j + 2 < r.size(); ++j)
        if ((tie >> j & 1u) && r[j + 1] > r[j + 2]) return false;
    return true;
}
std::uint32_t next_tie(const Row& r, std::uint32_t tie) {
    for (std::size_t j = 0; j + 2 < r.size(); ++j)
        if ((tie >> j & 1u) && r[j + 1] != r[j + 2]) tie &= ~(1u << j);
    return tie;
}

struct Search {
    int n = 0, q = 0;
    std::vector<Row> cand;
    std::vector<Bits> adj;
    long long budget = 0;
    std::atomic<long long> nodes{0};
    std::atomic<bool> aborted{false};

    Bits above_and(const Bits& P, int idx) const {
        Bits r = P;
        const std::size_t wi = static_cast<std::size_t>(idx) >> 6;
        for (std::size_t k = 0; k < wi; ++k) r.w[k] = 0;
        const int b = idx & 63;
        r.w[wi] &= b == 63 ? 0 : (~std::uint64_t(0) << (b + 1));
        for (std::size_t k = wi; k < r.w.size(); ++k) r.w[k] &= adj[idx].w[k];
        return r;
    }

    // Extends `chosen` to depth `target`, calling emit at each completed prefix.
    template <class Emit>
    void rec(std::vector<int>& chosen, const Bits& P, std::uint32_t tie, int target, Emit&& emit) {
        if (static_cast<int>(chosen.size()) == target) {
            emit(chosen, P, tie);
            return;
        }
        const int need = target - static_cast<int>(chosen.size());
        if (P.count() < need) return;
        for (std::size_t wi = 0; wi < P.w.size(); ++wi) {
            std::uint64_t word = P.w[wi];
            while (word) {
                const int idx = static_cast<int>(wi * 64 + __builtin_ctzll(word));
                word &= word - 1;
                if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
                    aborted = true;
                    return;
                }
                if (aborted) return;
                const Row& r = cand[idx];
                if (!column_compatible(r, tie)) continue;
                Bits NP = above_and(P, idx);
                chosen.push_back(idx);
                rec(chosen, NP, next_tie(r, tie), target, emit);
                chosen.pop_back();
            }
        }
    }
};

std::string unit_path(const std::string& dir, int n, int q, std::size_t u) {
    return dir + "/census_n" + std::to_string(n) + "_q" + std::to_string(q) + "_u" + std::to_string(u) + ".txt";
}

bool load_unit(const std::string& path, std::vector<std::vector<int>>& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::size_t count = 0, len = 0;
    if (!(in >> count >> len)) return false;
    std::vector<std::vector<int>> v(count, std::vector<int>(len));
    for (auto& m : v)
        for (auto& x : m)
            if (!(in >> x)) return false;
    std::string tail;
    if (!(in >> tail) || tail != "end") return false;
    out = std::move(v);
    return true;
}

void save_unit(const std::string& path, const std::vector<std::vector<int>>& found, std::size_t len) {
    std::ofstream out(path + ".tmp");
    out << found.size() << ' ' << len << '\n';
    for (const auto& m : found) {
        for (int x : m) out << x << ' ';
        out << '\n';
    }
    out << "end\n";
    out.close();
    std::filesystem::rename(path + ".tmp", path);
}

std::string invariant_key(const BLog& L) {
    const int n = L.n, q = L.q;
    std::vector<long long> h(q, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l)
                    ++h[((L.L(i, j) + L.L(k, l) - L.L(i, l) - L.L(k, j)) % q + 2 * q) % q];
    std::ostringstream os;
    for (auto c : h) os << c << ',';
    auto fp = fingerprint(blog_to_cmat(L), std::min(3, n / 2));
    for (const auto& lev : fp.levels) {
        os << '|';
        for (const auto& [v, m] : lev.values) os << std::llround(v * 1e6) << ':' << m << ',';
    }
    return os.str();
}

template <class F>
void parallel_for(std::size_t count, int workers, F&& f) {
    workers = std::max(1, workers);
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) f(i);
    };
    if (workers == 1) {
        body();
        return;
    }
    std::vector<std::thread> ts;
    for (int t = 0; t < workers; ++t) ts.emplace_back(body);
    for (auto& t : ts) t.join();
}

}  // namespace

std::vector<BLog> enumerate_dephased(int n, int q, const CensusOptions& opt, CensusResult* info) {
    if (n < 1 || q < 1) throw DomainError("enumerate_bh: n and q must be positive");
    if (n - 1 > 32) throw DomainError("enumerate_bh: order too large");
    CensusResult dummy;
    CensusResult& res = info ? *info : dummy;
    res.n = n;
    res.q = q;
    res.complete = true;
    std::vector<BLog> out;
    if (n == 1) {
        out.push_back({1, q, IMat::Zero(1, 1)});
        res.matrices = 1;
        return out;
    }
    double space = (n - 1) * std::log2(static_cast<double>(q));
    if (space > 40) throw DomainError("enumerate_bh: candidate row space too large");

    Search S;
    S.n = n;
    S.q = q;
    S.budget = std::numeric_limits<long long>::max();
    S.cand = candidate_rows(n, q);
    const std::size_t K = S.cand.size();
    S.adj.assign(K, Bits(K));
    parallel_for(K, opt.workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < K; ++j)
            if (j != i && orthogonal(S.cand[i], S.cand[j], q)) S.adj[i].set(j);
    });
    Bits all(K);
    for (std::size_t i = 0; i < K; ++i) all.set(i);
    const std::uint32_t tie0 = n >= 3 ? ((1u << (n - 2)) - 1) : 0u;

    // Work units: prefixes of up to two rows.
    struct Unit {
        std::vector<int> prefix;
        Bits P;
        std::uint32_t tie;
    };
    std::vector<Unit> units;
    const int depth = std::min(2, n - 1);
    {
        std::vector<int> chosen;
        S.rec(chosen, all, tie0, depth,
              [&](const std::vector<int>& c, const Bits& P, std::uint32_t t) { units.push_back({c, P, t}); });
    }
    // Only the unit searches count against the budget, so a resumed run sees the same unit list.
    S.nodes = 0;
    S.budget = opt.budget;

    std::vector<std::vector<std::vector<int>>> found(units.size());
    std::vector<char> done(units.size(), 0);
    if (!opt.checkpoint_dir.empty()) {
        std::filesystem::create_directories(opt.checkpoint_dir);
        for (std::size_t u = 0; u < units.size(); ++u)
            done[u] = load_unit(unit_path(opt.checkpoint_dir, n, q, u), found[u]);
    }
    parallel_for(units.size(), opt.workers, [&](std::size_t u) {
        if (done[u] || S.aborted) return;
        std::vector<int> chosen = units[u].prefix;
        std::vector<std::vector<int>> local;
        S.rec(chosen, units[u].P, units[u].tie, n - 1,
              [&](const std::vector<int>& c, const Bits&, std::uint32_t) { local.push_back(c); });
        if (S.aborted) return;
        found[u] = std::move(local);
        done[u] = 1;
        if (!opt.checkpoint_dir.empty())
            save_unit(unit_path(opt.checkpoint_dir, n, q, u), found[u], static_cast<std::size_t>(n - 1));
    });
    res.nodes = std::min(S.nodes.load(), S.budget);
    res.complete = std::all_of(done.begin(), done.end(), [](char d) { return d != 0; });

    for (const auto& f : found)
        for (const auto& rows : f) {
            BLog L{n, q, IMat::Zero(n, n)};
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n; ++j) L.L(i + 1, j) = S.cand[rows[i]][j];
            out.push_back(std::move(L));
        }
    res.matrices = static_cast<long long>(out.size());
    return out;
}

Classification classify_butson(const std::vector<BLog>& mats, int workers) {
    Classification c;
    std::vector<std::string> keys(mats.size());
    parallel_for(mats.size(), workers, [&](std::size_t i) { keys[i] = invariant_key(mats[i]); });
    std::map<std::string, std::vector<int>> buckets;   // key -> class ids
    c.cls.assign(mats.size(), -1);
    EquivOptions eo;
    eo.invariant_precheck = false;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        auto& b = buckets[keys[i]];
        CMat H = blog_to_cmat(mats[i]);
        for (int k : b) {
            ++c.equivalence_calls;
            auto r = are_equivalent(blog_to_cmat(mats[c.rep_index[k]]), H, eo);
            if (r.verdict == Verdict::Equivalent) {
                c.cls[i] = k;
                break;
            }
            if (r.verdict == Verdict::Undecided) ++c.undecided;
        }
        if (c.cls[i] < 0) {
            c.cls[i] = static_cast<int>(c.rep_index.size());
            c.rep_index.push_back(static_cast<int>(i));
            b.push_back(c.cls[i]);
        }
    }
    return c;
}

std::vector<int> act_partition(const std::vector<CMat>& reps, int* count) {
    std::vector<int> cls(reps.size(), -1);
    std::vector<int> heads;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t h = 0; h < heads.size() && cls[i] < 0; ++h) {
            const CMat& K = reps[heads[h]];
            for (const CMat& X : {CMat(K), CMat(K.adjoint()), CMat(K.conjugate()), CMat(K.transpose())})
                if (are_equivalent(reps[i], X).verdict == Verdict::Equivalent) {
                    cls[i] = static_cast<int>(h);
                    break;
                }
        }
        if (cls[i] < 0) {
            cls[i] = static_cast<int>(heads.size());
            heads.push_back(static_cast<int>(i));
        }
    }
    if (count) *count = static_cast<int>(heads.size());
    return cls;
}

CensusResult enumerate_bh(int n, int q, const CensusOptions& opt) {
    CensusResult res;
    auto mats = enumerate_dephased(n, q, opt, &res);
    if (!opt.classify) {
        res.reps = std::move(mats);
        return res;
    }
    auto c = classify_butson(mats, opt.workers);
    res.equivalence_calls = c.equivalence_calls;
    res.undecided = c.undecided;
    std::vector<CMat> H;
    for (int i : c.rep_index) {
        res.reps.push_back(mats[i]);
        H.push_back(blog_to_cmat(mats[i]));
    }
    res.act_class = act_partition(H, &res.act_classes);
    return res;
}

std::string ClassStats::hbs() const {
    auto yn = [](bool b) { return b ? 'Y' : 'N'; };
    return {yn(hermitian), yn(subhad), yn(symmetric)};
}

ClassStats class_stats(const BLog& L) {
    ClassStats s;
    CMat H = blog_to_cmat(L);
    s.defect = defect(H).d;
    s.auto_order = automorphism_count(H, L.q);
    s.minors4 = L.n >= 4 ? vanishing_minors(H, 4) : 0;
    auto z = zq_rank(L);
    s.zq = z.r;
    s.zq_exact = z.exact;
    s.act = act_classify(H);
    s.hermitian = equivalent_to_hermitian(H);
    s.subhad = L.n >= 4 && has_sub_hadamard(H, 4);
    s.symmetric = equivalent_to_symmetric(H);
    return s;
}

std::string stats_table(const std::vector<std::string>& labels, const std::vector<ClassStats>& stats) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "No" << std::setw(28) << "Family" << std::setw(5) << "ACT" << std::setw(5) << "HBS"
       << std::right << std::setw(8) << "Auto" << std::setw(8) << "Defect" << std::setw(5) << "Zq" << std::setw(11)
       << "Invariant" << '\n';
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto& s = stats[i];
        os << std::left << std::setw(4) << i + 1 << std::setw(28) << (i < labels.size() ? labels[i] : "") << std::setw(5)
           << s.act.str() << std::setw(5) << s.hbs() << std::right << std::setw(8) << s.auto_order << std::setw(8)
           << s.defect << std::setw(5) << (std::to_string(s.zq) + (s.zq_exact ? "" : "+")) << std::setw(11) << s.minors4
           << '\n';
    }
    return os.str();
}

std::vector<FamilyPoint> table1_points() {
    const cplx o = 1.0, i = I1;
    return {{"F8_5", {o, o, o, o, o}}, {"F8_5", {o, i, i, i, i}}, {"F8_5", {i, o, i, o, i}},
            {"F8_5", {o, o, o, o, i}}, {"F8_5", {o, o, i, i, i}}, {"F8_5", {o, o, i, o, i}},
            {"S8_4", {o, o, i, i}},    {"S8_4", {o, o, o, i}},    {"S8_4", {o, i, o, i}},
            {"D8B_5", {o, o, i, i, o}}};
}

// ---- spectral lifts ----

namespace {
IMat imat(int r, int c, std::initializer_list<int> v) {
    IMat M(r, c);
    auto it = v.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) M(i, j) = *it++;
    return M;
}
IMat modq(IMat M, int q) {
    for (Eigen::Index i = 0; i < M.size(); ++i) M(i) = ((M(i) % q) + q) % q;
    return M;
}
}  // namespace

BLog spectral_matrix(const SpectralPair& p) {
    if (p.q < 1 || p.Q.cols() != p.S.rows() || p.Q.rows() != p.S.cols())
        throw DomainError("spectral: Q must be n x r and S r x n");
    const int n = static_cast<int>(p.Q.rows());
    return {n, p.q, modq(p.Q * p.S, p.q)};
}

LiftResult spectral_lift(const SpectralPair& p, int m, LiftMode mode) {
    BLog base = spectral_matrix(p);
    if (!hadamard_ok(blog_to_cmat(base))) throw DomainError("spectral_lift: EXP(2 pi i QS / q) is not Hadamard");
    if (m < 1) throw DomainError("spectral_lift: m must be positive");
    const int n = base.n, r = static_cast<int>(p.Q.cols());
    LiftResult res;
    auto& f = res.factors;
    if (mode == LiftMode::Dita) {
        f.q = m * p.q;
        f.Q = IMat(m * n, r);
        f.S = IMat(r, m * n);
        for (int b = 0; b < m; ++b) {
            IMat Qb = p.Q, Sb = m * p.S;
            Qb.col(0).array() += b * p.q;
            Sb.row(0).array() += b;
            f.Q.block(b * n, 0, n, r) = Qb;
            f.S.block(0, b * n, r, n) = Sb;
        }
    } else {
        if (m != 2) throw DomainError("spectral_lift: doubling requires m = 2");
        if (p.q % 2 != 0) throw DomainError("spectral_lift: doubling requires even q");
        for (int j = 0; j < n; ++j)
            if (p.S(0, j) % 2 != 0) throw DomainError("spectral_lift: first row of S must be even");
        f.q = p.q;
        f.Q = IMat(2 * n, r);
        f.S = IMat(r, 2 * n);
        IMat Q2 = p.Q, S2 = p.S;
        Q2.col(0).array() += p.q / 2;
        S2.row(0).array() += 1;
        f.Q << p.Q, Q2;
        f.S << p.S, S2;
    }
    f.Q = modq(f.Q, f.q);
    f.S = modq(f.S, f.q);
    res.L = spectral_matrix(f);
    return res;
}

SpectralPair spectral_f2() { return {imat(2, 1, {0, 1}), imat(1, 2, {0, 1}), 2}; }

SpectralPair spectral_km() {
    IMat S = imat(3, 6, {0, 2, 4, 1, 5, 6, 0, 6, 3, 4, 2, 7, 0, 6, 7, 2, 4, 3});
    IMat Qt = imat(3, 6, {0, 0, 1, 0, 0, 7, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1});
    return {Qt.transpose(), S, 8};
}

SpectralPair spectral_km_prime() {
    IMat S = imat(3, 6, {0, 4, 2, 6, 6, 2, 0, 2, 4, 1, 5, 6, 0, 6, 3, 4, 2, 7});
    IMat Qt = imat(3, 6, {0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 7, 0, 0, 0, 1, 7, 0});
    return {Qt.transpose(), S, 8};
}

SpectralPair spectral_ex12() {
    IMat S = imat(3, 12, {0, 2, 4, 2, 6, 6, 0, 2, 4, 2, 6, 6, 0, 4, 2, 6, 7, 3,
                          1, 5, 3, 7, 0, 4, 0, 5, 6, 1, 4, 2, 0, 5, 6, 1, 4, 2});
    IMat Qt = imat(3, 12, {0, 0, 1, 1, 0, 1, 2, 2, 3, 3, 2, 3, 0, 1, 0, 3, 0, 0,
                           4, 5, 4, 7, 4, 4, 0, 0, 0, 0, 1, 3, 4, 4, 4, 4, 5, 7});
    return {Qt.transpose(), S, 8};
}

SpectralPair spectral_tao() {
    IMat Q = imat(6, 6, {0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 1, 0, 1, 0, 1, 2, 2,
                         0, 2, 1, 0, 1, 2, 0, 2, 2, 1, 0, 1, 0, 1, 2, 2, 1, 0});
    return {Q, IMat::Identity(6, 6), 3};
}

}  // namespace hadlab
