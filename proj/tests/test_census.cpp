#include <doctest.h>

#include <filesystem>
#include <numeric>

#include "hadlab/catalog.hpp"
#include "hadlab/census.hpp"
#include "hadlab/invariants.hpp"

using namespace hadlab;

namespace {

// All dephased BH(n, q), no pruning, reduced to classes by pairwise equivalence checks.
std::vector<CMat> brute_force_classes(int n, int q) {
    const int cells = (n - 1) * (n - 1);
    std::vector<int> x(cells, 0);
    std::vector<CMat> reps;
    while (true) {
        CMat H = CMat::Ones(n, n);
        for (int i = 0; i < cells; ++i) H(1 + i / (n - 1), 1 + i % (n - 1)) = root_of_unity(x[i], q);
        if ((H * H.adjoint() - double(n) * CMat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9) {
            bool seen = false;
            for (const auto& R : reps)
                if (are_equivalent(R, H).verdict == Verdict::Equivalent) {
                    seen = true;
                    break;
                }
            if (!seen) reps.push_back(H);
        }
        int j = cells - 1;
        while (j >= 0 && x[j] == q - 1) x[j--] = 0;
        if (j < 0) break;
        ++x[j];
    }
    return reps;
}

bool same_blogs(const std::vector<BLog>& a, const std::vector<BLog>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].L != b[i].L) return false;
    return true;
}

}  // namespace

TEST_CASE("census: small orders") {
    CHECK(enumerate_bh(1, 4).reps.size() == 1);
    CHECK(enumerate_bh(2, 2).reps.size() == 1);
    CHECK(enumerate_bh(2, 3).reps.empty());
    CHECK(enumerate_bh(4, 4).reps.size() == 2);
    CHECK(enumerate_bh(6, 4).reps.size() == 1);
    CHECK(enumerate_bh(3, 3).reps.size() == 1);
    // The unique BH(6, 3) class is S6.
    auto r6 = enumerate_bh(6, 3);
    REQUIRE(r6.reps.size() == 1);
    CHECK(are_equivalent(blog_to_cmat(r6.reps[0]), construct({"S6", {}})).verdict == Verdict::Equivalent);
    auto r44 = enumerate_bh(4, 4);
    bool f4 = false, h4 = false;
    for (const auto& L : r44.reps) {
        CMat H = blog_to_cmat(L);
        f4 = f4 || are_equivalent(H, fourier(4)).verdict == Verdict::Equivalent;
        h4 = h4 || are_equivalent(H, kronecker(fourier(2), fourier(2))).verdict == Verdict::Equivalent;
    }
    CHECK(f4);
    CHECK(h4);
}

TEST_CASE("census: completeness against unpruned brute force") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {2, 4}, {3, 3}, {4, 4}, {3, 6}}) {
        CAPTURE(n);
        CAPTURE(q);
        auto brute = brute_force_classes(n, q);
        auto r = enumerate_bh(n, q);
        CHECK(r.complete);
        CHECK(r.reps.size() == brute.size());
        for (const auto& B : brute) {
            int hits = 0;
            for (const auto& L : r.reps)
                if (are_equivalent(blog_to_cmat(L), B).verdict == Verdict::Equivalent) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("census: BH(8,4) has 15 classes and 10 ACT classes") {
    CensusOptions opt;
    opt.workers = 4;
    auto r = enumerate_bh(8, 4, opt);
    CHECK(r.complete);
    CHECK(r.undecided == 0);
    CHECK(r.reps.size() == 15);
    CHECK(r.act_classes == 10);
    std::vector<CMat> H;
    for (const auto& L : r.reps) {
        H.push_back(blog_to_cmat(L));
        CHECK(hadamard_ok(H.back(), 1e-10));
        CHECK(L.L.row(0).isZero());
        CHECK(L.L.col(0).isZero());
    }
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = i + 1; j < H.size(); ++j)
            CHECK(are_equivalent(H[i], H[j]).verdict == Verdict::Inequivalent);

    // Every ACT representative point is equivalent to exactly one census class, and they hit all ten ACT classes.
    std::vector<int> act_hit;
    for (const auto& p : table1_points()) {
        CMat X = construct(p);
        int hit = -1;
        for (std::size_t i = 0; i < H.size(); ++i)
            if (are_equivalent(H[i], X).verdict == Verdict::Equivalent) {
                CHECK(hit < 0);
                hit = static_cast<int>(i);
            }
        REQUIRE(hit >= 0);
        act_hit.push_back(r.act_class[hit]);
    }
    std::sort(act_hit.begin(), act_hit.end());
    std::vector<int> all(10);
    std::iota(all.begin(), all.end(), 0);
    CHECK(act_hit == all);

    // Vanishing 4 x 4 minors separate the ACT classes.
    std::vector<long long> minors(10, -1);
    for (std::size_t i = 0; i < H.size(); ++i) {
        long long v = vanishing_minors(H[i], 4);
        auto& slot = minors[r.act_class[i]];
        if (slot < 0) slot = v;
        CHECK(slot == v);
    }
    std::sort(minors.begin(), minors.end());
    CHECK(std::adjacent_find(minors.begin(), minors.end()) == minors.end());
}

TEST_CASE("census: determinism across worker counts") {
    CensusOptions a, b;
    a.workers = 1;
    b.workers = 6;
    auto ra = enumerate_dephased(8, 4, a), rb = enumerate_dephased(8, 4, b);
    CHECK(same_blogs(ra, rb));
    auto ca = enumerate_bh(6, 4, a), cb = enumerate_bh(6, 4, b);
    CHECK(same_blogs(ca.reps, cb.reps));
}

TEST_CASE("census: budget and checkpoints") {
    CensusOptions small;
    small.budget = 100;
    CensusResult info;
    enumerate_dephased(8, 4, small, &info);
    CHECK_FALSE(info.complete);

    auto dir = std::filesystem::temp_directory_path() / "hadlab_census_ckpt";
    std::filesystem::remove_all(dir);
    CensusOptions ck;
    ck.checkpoint_dir = dir.string();
    CensusResult first;
    auto m1 = enumerate_dephased(8, 4, ck, &first);
    CHECK(first.complete);
    auto files = std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{});
    CHECK(files > 0);
    // Resume with a budget too small to redo anything: all units come from disk.
    ck.budget = 1;
    CensusResult second;
    auto m2 = enumerate_dephased(8, 4, ck, &second);
    CHECK(second.complete);
    CHECK(same_blogs(m1, m2));
    std::filesystem::remove(*std::filesystem::directory_iterator(dir));
    ck.budget = 1'000'000;
    CensusResult third;
    CHECK(same_blogs(enumerate_dephased(8, 4, ck, &third), m1));
    std::filesystem::remove_all(dir);
}

TEST_CASE("census: BH(8,4) representative statistics") {
    const std::vector<int> defects{21, 9, 13, 15, 7, 11, 11, 5, 9, 9};
    const std::vector<long long> minors{1428, 852, 1204, 948, 836, 596, 504, 360, 652, 348};
    const std::vector<long long> autos{43008, 1024, 2048, 1536, 512, 256, 768, 192, 256, 256};
    const std::vector<int> z4{3, 2, 2, 3, 2, 3, 4, 3, 3, 3};
    const std::vector<std::string> act{"YYY", "YYY", "YYY", "NYN", "NYN", "YYY", "YYY", "NYN", "NYN", "NYN"};
    const std::vector<std::string> hbs{"YYY", "YYY", "NYY", "NYN", "NYN", "YYY", "YYY", "NYN", "NYN", "NYN"};
    auto pts = table1_points();
    REQUIRE(pts.size() == 10);
    std::vector<ClassStats> all;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CAPTURE(i);
        auto L = cmat_to_blog(construct(pts[i]), 4);
        auto s = class_stats(L);
        CHECK(s.defect == defects[i]);
        CHECK(s.minors4 == minors[i]);
        CHECK(s.auto_order == autos[i]);
        CHECK(s.zq == z4[i]);
        CHECK(s.zq_exact);
        CHECK(s.act.str() == act[i]);
        CHECK(s.hbs() == hbs[i]);
        // Defect is an equivalence invariant; check on the dephased form too.
        CHECK(defect(dephase(construct(pts[i])).H).d == defects[i]);
        all.push_back(s);
        labels.push_back(pts[i].family);
    }
    auto table = stats_table(labels, all);
    CHECK(table.find("43008") != std::string::npos);
    CHECK(std::count(table.begin(), table.end(), '\n') == 11);
}

TEST_CASE("spectral: F2 lifts to F4") {
    auto r = spectral_lift(spectral_f2(), 2);
    IMat want(4, 4);
    want << 0, 0, 0, 0, 0, 2, 1, 3, 0, 0, 2, 2, 0, 2, 3, 1;
    CHECK(r.L.q == 4);
    CHECK(r.L.L == want);
    CMat K = blog_to_cmat(r.L);
    CHECK(max_abs(K - fourier(4)) > 0.5);
    CHECK(are_equivalent(K, fourier(4)).verdict == Verdict::Equivalent);
    CHECK(are_equivalent(K, kronecker(fourier(2), fourier(2))).verdict == Verdict::Inequivalent);
    CHECK(r.factors.Q.cols() == 1);
}

TEST_CASE("spectral: Z8-rank 3 matrices of orders 12 and 24") {
    auto km = spectral_matrix(spectral_km());
    CHECK(hadamard_ok(blog_to_cmat(km)));
    IMat printed(6, 6);
    printed << 0, 0, 0, 0, 0, 0, 0, 4, 2, 6, 6, 2, 0, 2, 4, 1, 5, 6, 0, 6, 3, 4, 2, 7, 0, 6, 7, 2, 4, 3, 0, 2, 6, 5, 1, 4;
    CHECK(km.L == printed);
    auto kmp = spectral_matrix(spectral_km_prime());
    CHECK(hadamard_ok(blog_to_cmat(kmp)));
    CHECK(zq_rank(kmp).r == 3);

    auto b12 = spectral_lift(spectral_km_prime(), 2, LiftMode::Doubling).L;
    CHECK(b12.n == 12);
    CHECK(b12.q == 8);
    CHECK(hadamard_ok(blog_to_cmat(b12), 1e-10));
    auto z12 = zq_rank(b12);
    CHECK(z12.exact);
    CHECK(z12.r == 3);

    auto e12 = spectral_matrix(spectral_ex12());
    CHECK(hadamard_ok(blog_to_cmat(e12), 1e-10));
    CHECK(zq_rank(e12).r == 3);
    auto b24 = spectral_lift(spectral_ex12(), 2, LiftMode::Doubling).L;
    CHECK(b24.n == 24);
    CHECK(hadamard_ok(blog_to_cmat(b24), 1e-10));
    auto z24 = zq_rank(b24);
    CHECK(z24.exact);
    CHECK(z24.r == 3);
    // The lifted matrix contains the original as its top-left block.
    CHECK(b24.L.topLeftCorner(12, 12) == e12.L);

    // Dita-type lift of the BH(6, 8) pair: BH(12, 16) with a rank-3 factorization.
    auto d = spectral_lift(spectral_km(), 2);
    CHECK(d.L.q == 16);
    CHECK(hadamard_ok(blog_to_cmat(d.L), 1e-10));
    CHECK(d.factors.Q.cols() == 3);
    CHECK(zq_rank_upper_bound(d.L) >= 1);
}

TEST_CASE("spectral: Tao's example and lift errors") {
    auto t = spectral_matrix(spectral_tao());
    CHECK(t.n == 6);
    CHECK(t.q == 3);
    CHECK(hadamard_ok(blog_to_cmat(t), 1e-10));
    CHECK(729 % 6 != 0);

    CHECK_THROWS_AS(spectral_lift(spectral_km(), 2, LiftMode::Doubling), DomainError);   // odd first row of S
    CHECK_THROWS_AS(spectral_lift(spectral_tao(), 2, LiftMode::Doubling), DomainError);  // odd q
    CHECK_THROWS_AS(spectral_lift(spectral_ex12(), 3, LiftMode::Doubling), DomainError);
    SpectralPair bad = spectral_f2();
    bad.S(0, 1) = 0;
    CHECK_THROWS_AS(spectral_lift(bad, 2), DomainError);
}
