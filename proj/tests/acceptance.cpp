// Acceptance run: one PASS/FAIL line per criterion, with runtime limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hadlab/catalog.hpp"
#include "hadlab/census.hpp"
#include "hadlab/circulant.hpp"
#include "hadlab/dilation.hpp"
#include "hadlab/feasibility.hpp"
#include "hadlab/invariants.hpp"
#include "hadlab/mubframes.hpp"
#include "hadlab/poly.hpp"

using namespace hadlab;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

bool c1_catalog(Check& c) {
    std::mt19937_64 rng(2024);
    for (const auto& f : family_list())
        for (int k = 0; k < 20; ++k)
            if (!is_hadamard(construct(random_point(f.id, rng)), 1e-10).pass) {
                c.expect(false, f.id + " failed");
                break;
            }
    c.expect(family_list().size() >= 30, "fewer than 30 constructors");
    return c.ok;
}

bool c2_defect(Check& c) {
    const CMat F2 = fourier(2);
    c.expect(defect(fourier(6)).d == 4, "d(F6)");
    c.expect(defect(kronecker(F2, F2)).d == 3, "d(H4)");
    for (int p : {2, 3, 5, 7, 11, 13}) c.expect(defect(fourier(p)).d == 0, "d(F" + std::to_string(p) + ")");
    c.expect(defect(construct({"L14A", {}})).d == 0, "d(L14A)");
    const int want[] = {21, 9, 13, 15, 7, 11, 11, 5, 9, 9};
    int i = 0;
    for (const auto& p : table1_points()) {
        const auto d = defect(construct(p));
        c.expect(d.d == want[i] && !d.ambiguous, "BH(8,4) row " + std::to_string(i + 1));
        ++i;
    }
    return c.ok;
}

bool c3_fingerprint(Check& c) {
    const CMat F2 = fourier(2);
    const auto fp = fingerprint(kronecker(kronecker(F2, F2), F2), 4);
    const std::vector<std::vector<std::pair<double, long long>>> printed{
        {{0, 336}, {2, 448}}, {{0, 1344}, {4, 1792}}, {{0, 1428}, {8, 3136}, {16, 336}}};
    bool same = fp.levels.size() == 3;
    for (std::size_t d = 0; same && d < 3; ++d) {
        same = fp.levels[d].values.size() == printed[d].size();
        for (std::size_t k = 0; same && k < printed[d].size(); ++k)
            same = std::abs(fp.levels[d].values[k].first - printed[d][k].first) < 1e-9 &&
                   fp.levels[d].values[k].second == printed[d][k].second;
    }
    c.expect(same, "F2xF2xF2 fingerprint");
    const long long want[] = {1428, 852, 1204, 948, 836, 596, 504, 360, 652, 348};
    int i = 0;
    for (const auto& p : table1_points()) {
        c.expect(vanishing_minors(construct(p), 4) == want[i], "minors row " + std::to_string(i + 1));
        ++i;
    }
    return c.ok;
}

bool c4_census(Check& c) {
    using clk = std::chrono::steady_clock;
    for (auto [n, want] : {std::pair{4, 2}, std::pair{6, 1}}) {
        const auto t0 = clk::now();
        const auto r = enumerate_bh(n, 4);
        const double s = std::chrono::duration<double>(clk::now() - t0).count();
        c.expect(r.complete && static_cast<int>(r.reps.size()) == want, "BH(" + std::to_string(n) + ",4) count");
        c.expect(s < 1.0, "BH(" + std::to_string(n) + ",4) slower than 1 s");
    }
    CensusOptions opt;
    opt.workers = 8;
    const auto r = enumerate_bh(8, 4, opt);
    c.expect(r.complete && r.undecided == 0, "BH(8,4) search incomplete");
    c.expect(r.reps.size() == 15, "BH(8,4) classes = " + std::to_string(r.reps.size()));
    c.expect(r.act_classes == 10, "BH(8,4) ACT classes = " + std::to_string(r.act_classes));
    return c.ok;
}

bool c5_dilation(Check& c) {
    const double x = real_roots({1, -2, 0, 4})[0];
    const cplx a(x, std::sqrt(1 - x * x));
    const cplx cc = (-a * a * a + a * a + a + 1.0) / (a * a * a * a + a * a * a + a * a - a);
    const auto r = dilate({a, std::conj(a), cc, a});
    c.expect(r.status == DilationResult::Status::Ok && !r.matrices.empty(), "example quadruple gave no output");
    const CMat S6 = construct({"S6", {}});
    for (const auto& M : r.matrices) {
        c.expect(hadamard_ok(M, 1e-8), "example output not Hadamard");
        c.expect(!k6_membership(M), "example output in K6(3)");
        c.expect(are_equivalent(M, S6).verdict == Verdict::Inequivalent, "example output not separated from S6");
    }
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(0, 2 * kPi);
    int tried = 0;
    while (tried < 100) {
        QuadPoint q{std::polar(1.0, U(rng)), std::polar(1.0, U(rng)), std::polar(1.0, U(rng)), std::polar(1.0, U(rng))};
        if (!canonical_precheck(q) || !embed_precheck(quad_matrix(q)).pass) continue;
        ++tried;
        const auto d = dilate(q);
        const cplx pref = std::pow(q.a * q.b, 4) * std::pow(q.c * q.d, 3);
        c.expect(d.status == DilationResult::Status::Ok, "random quadruple rejected after prechecks");
        c.expect(self_inversive_defect(pscale(d.rows.P, 1.0 / pref)) < 1e-9, "row polynomial not self-inversive");
        c.expect(self_inversive_defect(pscale(d.cols.P, 1.0 / pref)) < 1e-9, "column polynomial not self-inversive");
        for (const auto& M : d.matrices) c.expect(hadamard_ok(M, 1e-8), "random output not Hadamard");
    }
    return c.ok;
}

bool c6_circulant(Check& c) {
    auto all_had = [](const std::vector<CMat>& Ms) {
        if (Ms.empty()) return false;
        for (const auto& M : Ms)
            if (!hadamard_ok(M, 1e-8)) return false;
        return true;
    };
    c.expect(all_had(index2(7)), "index2(7)");
    c.expect(all_had(index3(7)), "index3(7)");
    c.expect(all_had(index3(13)), "index3(13)");
    c.expect(all_had(index4_symmetric(17)), "index4_symmetric(17)");
    c.expect(all_had(index4_symmetric(41)), "index4_symmetric(41)");
    const RPoly mp{1, -12, 24, 4, -9, 27, -21, 27, -9, 4, 24, -12, 1};
    const auto s7 = index3_solutions(7);
    double worst = 0;
    for (std::size_t i = 6; i < s7.size(); ++i)
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(peval(to_complex(mp), s7[i].c(j))));
    c.expect(s7.size() == 12 && worst < 1e-6, "j=2 branch minimal polynomial residual");
    return c.ok;
}

bool c7_index4_p17(Check& c) {
    const SolutionSet set = index4_p17_all();
    c.expect(set.sols.size() == 70, "solution count");
    c.expect(set.count("real") == 26 && set.count("unimodular") == 28 && set.count("complex") == 16, "class counts");
    c.expect(set.max_residual() < 1e-8, "residual");
    const Cosets cs = make_cosets(17, 4, 3);
    for (std::size_t i = 0; i < set.sols.size(); ++i)
        if (set.sols[i].tag == "unimodular")
            c.expect(hadamard_ok(circulant(x_from_c(cs, set.sols[i].c)), 1e-8), "unimodular solution not Hadamard");
    for (const auto& s : index4_symmetric_solutions(17)) {
        bool found = false;
        for (std::size_t i = 0; i < set.sols.size(); ++i)
            found = found || (set.source[i] == "V3V4" && (set.sols[i].c - s.c).cwiseAbs().maxCoeff() < 1e-10);
        c.expect(found, "symmetric solution missing");
    }
    return c.ok;
}

bool c8_cores(Check& c) {
    const auto d = q7_data();
    c.expect(hadamard_ok(q7(), 1e-8), "q7");
    c.expect(q7_alpha_cubic_residual(d.alpha) < 1e-4, "q7 cubic");
    const auto Q = q11();
    c.expect(Q.size() == 2, "q11 count");
    for (const auto& M : Q) c.expect(hadamard_ok(M, 1e-8), "q11");
    if (Q.size() == 2) c.expect(!fingerprint(Q[0], 5).same_as(fingerprint(Q[1], 5)), "q11 fingerprints coincide");
    return c.ok;
}

bool c9_mub(Check& c) {
    std::vector<CMat> Ts{d6_bicirculant(std::polar(1.0, 0.9))};
    std::mt19937_64 rng(17);
    while (Ts.size() < 4) {
        const auto p = random_point("X6_2", rng);
        Ts.push_back(x6_bicirculant(p.params[0]));
    }
    for (const auto& T : Ts) {
        const auto z = zauner_factor(T);
        c.expect(z.deviation < 1e-6, "zauner deviation");
        c.expect(is_mub(z.triplet(), 1e-6), "triplet not unbiased");
    }
    const auto L = equiangular_from_mubs(real_mubs_r4(), 1);
    bool cos_ok = L.count() == 12 && L.dim == 7;
    for (int i = 0; cos_ok && i < L.count(); ++i) {
        cos_ok = std::abs(L.V.row(i).norm() - 1) < 1e-12;
        for (int j = i + 1; j < L.count(); ++j) cos_ok = cos_ok && std::abs(std::abs(L.V.row(i).dot(L.V.row(j))) - 1.0 / 3) < 1e-12;
    }
    c.expect(cos_ok, "12 lines in R^7");
    const auto s = signature_check(q9_signature());
    c.expect(s.ok && std::abs(s.mu + 2) < 1e-9 && std::abs(frame_dimension(9, s.mu) - 6) < 1e-9, "Q9");
    const auto h = hoggar64();
    double worst = 0;
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j)
            if (i != j) worst = std::max(worst, std::abs(std::abs(h.gram(i, j)) - 1.0 / 24));
    c.expect(worst < 1e-12, "Hoggar Gram");
    return c.ok;
}

bool c10_feasibility(Check& c) {
    for (int n : {5, 11, 15, 17, 23, 29, 33, 35}) c.expect(bh6_tests(n).infeasible, "BH(" + std::to_string(n) + ",6)");
    for (int n : {7, 13, 19, 25, 37}) c.expect(!bh6_tests(n).infeasible, "BH(" + std::to_string(n) + ",6)");
    c.expect(!petrescu_feasible(19).infeasible, "Petrescu 19");
    c.expect(petrescu_feasible(13).infeasible, "Petrescu 13");
    c.expect(petrescu_feasible(31).infeasible, "Petrescu 31");
    return c.ok;
}

bool c11_spectral(Check& c) {
    const auto f4 = spectral_lift(spectral_f2(), 2).L;
    c.expect(f4.n == 4 && are_equivalent(blog_to_cmat(f4), fourier(4)).verdict == Verdict::Equivalent, "F4 from F2");
    const auto b12 = spectral_lift(spectral_km_prime(), 2, LiftMode::Doubling).L;
    const auto b24 = spectral_lift(spectral_ex12(), 2, LiftMode::Doubling).L;
    for (const auto* L : {&b12, &b24}) {
        const std::string tag = "BH(" + std::to_string(L->n) + ",8)";
        c.expect(L->q == 8 && hadamard_ok(blog_to_cmat(*L), 1e-10), tag + " not Hadamard");
        const auto z = zq_rank(*L);
        c.expect(z.exact && z.r == 3, tag + " rank " + std::to_string(z.r));
    }
    return c.ok;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<bool(Check&)> run;
    };
    const std::vector<Criterion> cs{
        {"catalog soundness", 60, c1_catalog},         {"defect reproduction", 120, c2_defect},
        {"fingerprint reproduction", 300, c3_fingerprint}, {"BH(8,4) census", 1800, c4_census},
        {"dilation pipeline", 180, c5_dilation},       {"circulant formulas", 30, c6_circulant},
        {"simple index-4 17-roots", 10, c7_index4_p17}, {"circulant cores", 10, c8_cores},
        {"MUB, lines, frames", 120, c9_mub},           {"feasibility tables", 1, c10_feasibility},
        {"spectral lifts", 120, c11_spectral},
    };
    int failed = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = cs[i].run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s >= cs[i].limit_s) c.expect(false, "over time limit");
        ok = ok && c.ok;
        failed += !ok;
        std::printf("%s %2zu %-26s %8.2fs%s%s\n", ok ? "PASS" : "FAIL", i + 1, cs[i].name, s, ok ? "" : "  ",
                    c.why.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
