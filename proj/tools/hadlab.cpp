#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hadlab/catalog.hpp"
#include "hadlab/census.hpp"
#include "hadlab/circulant.hpp"
#include "hadlab/core.hpp"
#include "hadlab/dilation.hpp"
#include "hadlab/feasibility.hpp"
#include "hadlab/invariants.hpp"
#include "hadlab/io.hpp"
#include "hadlab/mubframes.hpp"
#include "hadlab/reports.hpp"

using namespace hadlab;

namespace {

constexpr int kOk = 0, kDomain = 1, kAmbiguous = 2;

bool ends_with(const std::string& s, const std::string& t) {
    return s.size() >= t.size() && s.compare(s.size() - t.size(), t.size(), t) == 0;
}

CMat load_any(const std::string& path) {
    if (path == "-") return read_cmat(std::cin);
    return ends_with(path, ".blog") ? blog_to_cmat(load_blog(path)) : load_cmat(path);
}

cplx parse_param(const std::string& s) {
    if (s == "i") return I1;
    if (s == "-i") return -I1;
    return parse_complex(s);
}

void emit_matrix(std::ostream& out, const CMat& M, int q) {
    if (q > 0) write_blog(out, cmat_to_blog(M, q));
    else write_cmat(out, M);
}

void emit_list(std::ostream& out, const std::vector<CMat>& Ms) {
    out << "count " << Ms.size() << '\n';
    for (std::size_t k = 0; k < Ms.size(); ++k) {
        const auto r = is_hadamard(Ms[k]);
        out << "# matrix " << k + 1 << " hadamard " << (r.pass ? "yes" : "no") << " ortho "
            << format_real(r.max_row_defect, 3) << '\n';
        write_cmat(out, Ms[k]);
    }
}

std::string yn(bool b) { return b ? "yes" : "no"; }

struct Ctx {
    std::string out_path;
    std::ostringstream buf;
    int code = kOk;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hadlab: complex Hadamard matrix workbench"};
    app.require_subcommand(1);
    Ctx ctx;
    app.add_option("--tol-ortho", default_tol().ortho, "orthogonality tolerance, scaled by n")->capture_default_str();
    app.add_option("--tol-unimod", default_tol().unimod, "unimodularity tolerance")->capture_default_str();
    app.add_option("--tol-root", default_tol().root, "polynomial root acceptance tolerance")->capture_default_str();
    app.add_option("-o,--out", ctx.out_path, "write the report to a file instead of stdout");
    auto& out = ctx.buf;

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a catalog matrix");
    std::string fam;
    std::vector<std::string> params;
    int as_blog = 0;
    bool list = false;
    long long seed = -1;
    c_construct->add_option("family", fam, "family id");
    c_construct->add_option("params", params, "parameters: re | re,im | i");
    c_construct->add_option("--blog", as_blog, "emit as .blog with this root order");
    c_construct->add_option("--random", seed, "use a random in-domain point from this seed");
    c_construct->add_flag("--list", list, "list family ids");
    c_construct->callback([&] {
        if (list) {
            for (const auto& f : family_list()) out << f.id << ' ' << f.nparams << ' ' << f.params << '\n';
            return;
        }
        if (fam.empty()) throw DomainError("construct: family id required");
        FamilyPoint p{fam, {}};
        if (seed >= 0) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
            p = random_point(fam, rng);
        } else {
            for (const auto& s : params) p.params.push_back(parse_param(s));
        }
        emit_matrix(out, construct(p), as_blog);
    });

    // verify
    auto* c_verify = app.add_subcommand("verify", "check the Hadamard property");
    std::string in;
    c_verify->add_option("--in", in, ".cmat or .blog file, - for stdin")->required();
    c_verify->callback([&] {
        const CMat M = load_any(in);
        const auto r = is_hadamard(M);
        out << "n " << M.rows() << '\n'
            << "max_row_defect " << format_real(r.max_row_defect, 3) << '\n'
            << "max_unimod_defect " << format_real(r.max_unimod_defect, 3) << '\n'
            << "result " << (r.pass ? "pass" : "fail") << '\n';
        if (!r.pass) ctx.code = kDomain;
    });

    // invariants
    auto* c_inv = app.add_subcommand("invariants", "equivalence invariants of a matrix");
    int fp_depth = 0;
    bool want_profile = false, want_zq = false;
    c_inv->add_option("--in", in, ".cmat or .blog file")->required();
    c_inv->add_option("--fingerprint", fp_depth, "fingerprint up to this minor size (default floor(n/2), at most 4)");
    c_inv->add_flag("--rank-profile", want_profile, "rectangular rank profile");
    c_inv->add_flag("--zq", want_zq, "Z_q-rank (.blog input only)");
    c_inv->callback([&] {
        const CMat M = load_any(in);
        const int n = static_cast<int>(M.rows());
        const auto d = defect(M);
        out << "n " << n << '\n' << "defect " << d.d << (d.ambiguous ? " ambiguous" : "") << '\n';
        out << "haagerup_set_size " << haagerup_set(M).size() << '\n';
        const int dm = fp_depth > 0 ? fp_depth : std::min(4, n / 2);
        if (dm >= 2) out << "fingerprint\n" << format_fingerprint(fingerprint(M, dm));
        if (n >= 4) out << "vanishing_minors_4 " << vanishing_minors(M, 4) << '\n';
        if (want_profile) out << "rank_profile\n" << format_rank_profile(rank_profile(M));
        if (want_zq) {
            if (!ends_with(in, ".blog")) throw DomainError("invariants --zq needs a .blog input");
            const auto z = zq_rank(load_blog(in));
            out << "zq_rank " << z.r << (z.exact ? "" : " lower_bound") << '\n';
            if (!z.exact) ctx.code = kAmbiguous;
        }
        if (d.ambiguous) ctx.code = kAmbiguous;
    });

    // equivalent
    auto* c_eq = app.add_subcommand("equivalent", "decide monomial equivalence of two matrices");
    std::string in2;
    long long budget = 10'000'000;
    c_eq->add_option("a", in, "first matrix")->required();
    c_eq->add_option("b", in2, "second matrix")->required();
    c_eq->add_option("--budget", budget, "search node budget")->capture_default_str();
    c_eq->callback([&] {
        EquivOptions eo;
        eo.budget = budget;
        const auto r = are_equivalent(load_any(in), load_any(in2), eo);
        const char* v = r.verdict == Verdict::Equivalent     ? "equivalent"
                        : r.verdict == Verdict::Inequivalent ? "inequivalent"
                                                             : "undecided";
        out << "verdict " << v << '\n' << "nodes " << r.nodes << '\n';
        if (!r.reason.empty()) out << "reason " << r.reason << '\n';
        if (r.witness) {
            out << "row_perm";
            for (int x : r.witness->row_perm) out << ' ' << x;
            out << "\ncol_perm";
            for (int x : r.witness->col_perm) out << ' ' << x;
            out << '\n';
        }
        if (r.verdict == Verdict::Undecided) ctx.code = kAmbiguous;
    });

    // dilate
    auto* c_dil = app.add_subcommand("dilate", "complete a unimodular 2x2 quadruple to 6x6 Hadamard matrices");
    std::vector<std::string> quad;
    bool no_filter = false;
    c_dil->add_option("abcd", quad, "a b c d (re,im or i)")->required()->expected(4);
    c_dil->add_flag("--keep-all", no_filter, "keep members of K6(3) and matrices equivalent to S6");
    c_dil->callback([&] {
        QuadPoint q{parse_param(quad[0]), parse_param(quad[1]), parse_param(quad[2]), parse_param(quad[3])};
        DilationOptions opt;
        opt.root_tol = default_tol().root;
        opt.filter_scope = !no_filter;
        const auto r = dilate(q, opt);
        const char* st = r.status == DilationResult::Status::Ok         ? "ok"
                         : r.status == DilationResult::Status::Rejected ? "rejected"
                                                                        : "degenerate";
        out << "status " << st << '\n';
        if (!r.reason.empty()) out << "reason " << r.reason << '\n';
        for (const auto& l : r.log) out << "log " << l << '\n';
        out << "dropped_scope " << r.dropped_scope << '\n';
        emit_list(out, r.matrices);
        if (r.status == DilationResult::Status::Rejected) ctx.code = kDomain;
        if (r.status == DilationResult::Status::Degenerate) ctx.code = kAmbiguous;
    });

    // circulant
    auto* c_circ = app.add_subcommand("circulant", "circulant Hadamard matrices from cyclic p-roots of simple index k");
    std::string kind;
    int p = 0;
    c_circ->add_option("kind", kind, "index2 | index3 | index4")
        ->required()
        ->check(CLI::IsMember({"index2", "index3", "index4"}));
    c_circ->add_option("p", p, "prime")->required();
    c_circ->callback([&] {
        if (kind == "index2") emit_list(out, index2(p));
        else if (kind == "index3") emit_list(out, index3(p));
        else emit_list(out, index4_symmetric(p));
    });

    // core
    auto* c_core = app.add_subcommand("core", "Hadamard matrices with a circulant core");
    std::string core_kind;
    int core_p = 0;
    c_core->add_option("kind", core_kind, "q7 | q11 | index2 | index4a | index4b")
        ->required()
        ->check(CLI::IsMember({"q7", "q11", "index2", "index4a", "index4b"}));
    c_core->add_option("p", core_p, "prime (index kinds)");
    c_core->callback([&] {
        std::vector<CMat> Ms;
        if (core_kind == "q7") Ms.push_back(q7());
        else if (core_kind == "q11") Ms = q11();
        else {
            if (core_p < 2) throw DomainError("core " + core_kind + ": prime p required");
            auto sols = core_kind == "index2"    ? core_index2(core_p)
                        : core_kind == "index4a" ? core_index4_a(core_p)
                                                 : core_index4_b(core_p);
            for (const auto& s : sols) Ms.push_back(s.bordered);
        }
        emit_list(out, Ms);
    });

    // census
    auto* c_census = app.add_subcommand("census", "enumerate and classify BH(n,q)");
    int cn = 0, cq = 0;
    CensusOptions copt;
    bool emit_reps = false;
    c_census->add_option("n", cn, "order")->required();
    c_census->add_option("q", cq, "root order")->required();
    c_census->add_option("--workers", copt.workers, "worker threads")->capture_default_str();
    c_census->add_option("--budget", copt.budget, "search node budget")->capture_default_str();
    c_census->add_option("--checkpoint-dir", copt.checkpoint_dir, "checkpoint directory (default $HADLAB_CHECKPOINT_DIR)");
    c_census->add_flag("--reps", emit_reps, "print class representatives");
    c_census->callback([&] {
        if (copt.checkpoint_dir.empty())
            if (const char* env = std::getenv("HADLAB_CHECKPOINT_DIR")) copt.checkpoint_dir = env;
        const auto r = enumerate_bh(cn, cq, copt);
        out << "n " << r.n << "\nq " << r.q << "\ncomplete " << yn(r.complete) << "\nmatrices " << r.matrices
            << "\nclasses " << r.reps.size() << "\nact_classes " << r.act_classes << "\nequivalence_calls "
            << r.equivalence_calls << "\nundecided " << r.undecided << '\n';
        if (emit_reps)
            for (std::size_t k = 0; k < r.reps.size(); ++k) {
                out << "# class " << k + 1 << " act " << r.act_class[k] + 1 << '\n';
                write_blog(out, r.reps[k]);
            }
        if (!r.complete || r.undecided > 0) ctx.code = kAmbiguous;
    });

    // feasible
    auto* c_feas = app.add_subcommand("feasible", "number-theoretic existence tests");
    int fn = 0, fq = 6;
    bool petrescu = false;
    c_feas->add_option("n", fn, "order")->required();
    c_feas->add_option("q", fq, "root order")->capture_default_str();
    c_feas->add_flag("--petrescu", petrescu, "test for Petrescu-type BH(n,q)");
    c_feas->callback([&] {
        const auto v = petrescu ? petrescu_feasible(fn, fq) : bh_feasible(fn, fq);
        out << "n " << fn << "\nq " << fq << "\nverdict " << v.verdict() << '\n';
        for (const auto& r : v.reasons) out << "rule " << r << '\n';
    });

    // mub
    auto* c_mub = app.add_subcommand("mub", "mutually unbiased bases");
    std::vector<std::string> mub_in;
    std::string d6c, x6a;
    c_mub->add_option("--check", mub_in, "Hadamard matrices forming a MUB with the identity");
    c_mub->add_option("--zauner", in, "factor a bicirculant Hadamard matrix of order 2m");
    c_mub->add_option("--d6", d6c, "factor the D6 bicirculant at parameter c");
    c_mub->add_option("--x6", x6a, "factor the X6 bicirculant at parameter alpha");
    c_mub->callback([&] {
        if (!mub_in.empty()) {
            MubSet s;
            for (const auto& f : mub_in) s.hads.push_back(load_any(f));
            s.n = static_cast<int>(s.hads[0].rows());
            out << "bases " << s.size() << "\nmax_defect " << format_real(mub_defect(s), 3) << "\nmub "
                << yn(is_mub(s)) << '\n';
            if (!is_mub(s)) ctx.code = kDomain;
            return;
        }
        CMat T;
        if (!in.empty()) T = load_any(in);
        else if (!d6c.empty()) T = d6_bicirculant(parse_param(d6c));
        else if (!x6a.empty()) T = x6_bicirculant(parse_param(x6a));
        else throw DomainError("mub: one of --check, --zauner, --d6, --x6 required");
        const auto z = zauner_factor(T);
        const auto trip = z.triplet();
        out << "deviation " << format_real(z.deviation, 3) << "\nresidual " << format_real(z.residual, 3)
            << "\nflat " << yn(z.flat) << "\ntriplet_defect " << format_real(mub_defect(trip), 3) << '\n';
        out << "# Z1\n";
        write_cmat(out, z.Z1);
        out << "# Z2\n";
        write_cmat(out, z.Z2);
    });

    // lines
    auto* c_lines = app.add_subcommand("lines", "real equiangular lines from mutually unbiased bases");
    int lt = 1, ldims = 0, lcount = 0, bound = 0;
    bool lprint = false;
    c_lines->add_option("--t", lt, "use 2^t-dimensional bases (t = 1 only)")->capture_default_str();
    c_lines->add_option("--dims", ldims, "truncate to this dimension");
    c_lines->add_option("--count", lcount, "keep this many lines");
    c_lines->add_option("--bound", bound, "print the lower bound on line count in R^n");
    c_lines->add_flag("--print", lprint, "print the unit vectors");
    c_lines->callback([&] {
        if (bound > 0) {
            out << "n " << bound << "\nlower_bound " << line_lower_bound(bound) << '\n';
            return;
        }
        LineSet L = equiangular_from_mubs(real_mubs_r4(), lt);
        if (ldims > 0 || lcount > 0) L = truncate_lines(L, ldims > 0 ? ldims : L.dim, lcount > 0 ? lcount : L.count());
        out << "dim " << L.dim << "\nlines " << L.count() << "\ncosine " << format_real(L.c, 12) << "\ndefect "
            << format_real(line_defect(L), 3) << '\n';
        if (lprint)
            for (int i = 0; i < L.count(); ++i) {
                for (int j = 0; j < L.dim; ++j) out << (j ? " " : "") << format_real(L.V(i, j), 17);
                out << '\n';
            }
    });

    // frame
    auto* c_frame = app.add_subcommand("frame", "equiangular tight frame signature matrices");
    bool q9 = false, hog = false;
    int paley = 0, sign = 1;
    c_frame->add_option("--in", in, "signature matrix (.cmat)");
    c_frame->add_flag("--q9", q9, "the order-9 signature matrix");
    c_frame->add_flag("--hoggar", hog, "the 64 Hoggar lines in C^8");
    c_frame->add_option("--paley", paley, "signature from the skew Paley design of prime p = 3 mod 4");
    c_frame->add_option("--sign", sign, "+1 or -1")->capture_default_str();
    c_frame->callback([&] {
        CMat Q;
        if (hog) Q = hoggar64().Q;
        else if (q9) Q = q9_signature();
        else if (paley > 0) Q = skew_to_signature(paley_design(paley), sign).Q;
        else if (!in.empty()) Q = load_any(in);
        else throw DomainError("frame: one of --in, --q9, --hoggar, --paley required");
        if (sign == -1 && paley == 0) Q = -Q;
        const auto s = signature_check(Q);
        const int n = static_cast<int>(Q.rows());
        out << "n " << n << "\nsignature " << yn(s.ok) << "\nmu " << format_real(s.mu, 10) << "\nresidual "
            << format_real(s.residual, 3) << "\neigenvalues " << s.eigen_count << '\n';
        if (!s.ok) {
            ctx.code = kDomain;
            return;
        }
        out << "frame_dimension " << format_real(frame_dimension(n, s.mu), 10) << '\n';
    });

    // reproduce
    auto* c_rep = app.add_subcommand("reproduce", "regenerate the printed tables");
    std::string what;
    c_rep->add_option("what", what, "table1 | appendixB | fingerprints")
        ->required()
        ->check(CLI::IsMember({"table1", "appendixB", "fingerprints"}));
    c_rep->callback([&] {
        if (what == "table1") out << report_table1();
        else if (what == "appendixB") out << report_index4_p17();
        else out << report_fingerprints();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kDomain;
    } catch (const AmbiguityError& e) {
        std::cerr << "ambiguous: " << e.what() << '\n';
        return kAmbiguous;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }

    if (ctx.out_path.empty()) {
        std::cout << ctx.buf.str();
    } else {
        std::ofstream f(ctx.out_path);
        if (!f) {
            std::cerr << "error: cannot write " << ctx.out_path << '\n';
            return kDomain;
        }
        f << ctx.buf.str();
    }
    return ctx.code;
}
