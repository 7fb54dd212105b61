#include "hadlab/reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hadlab/catalog.hpp"
#include "hadlab/census.hpp"
#include "hadlab/circulant.hpp"
#include "hadlab/io.hpp"

namespace hadlab {

std::string format_real(double x, int digits) {
    if (std::abs(x) < 1e-14) x = 0.0;   // rounding noise and "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string format_fingerprint(const Fingerprint& fp) {
    std::ostringstream os;
    for (const auto& lev : fp.levels) {
        os << "d=" << lev.d << ':';
        for (const auto& [v, m] : lev.values) os << " (" << format_real(v, 10) << ", " << m << ')';
        os << '\n';
    }
    return os.str();
}

std::string format_rank_profile(const std::map<std::pair<int, int>, RankCounts>& rp) {
    std::ostringstream os;
    for (const auto& [jk, counts] : rp) {
        os << jk.first << 'x' << jk.second << ':';
        for (const auto& [r, m] : counts) os << " (" << r << ", " << m << ')';
        os << '\n';
    }
    return os.str();
}

namespace {
std::string point_label(const FamilyPoint& p) {
    std::string s = p.family + "(";
    for (std::size_t i = 0; i < p.params.size(); ++i) {
        const cplx z = p.params[i];
        s += i ? "," : "";
        if (std::abs(z - cplx(1, 0)) < 1e-12) s += "1";
        else if (std::abs(z - I1) < 1e-12) s += "i";
        else s += format_complex(z, 6);
    }
    return s + ")";
}
}  // namespace

std::string report_table1() {
    std::vector<std::string> labels;
    std::vector<ClassStats> stats;
    for (const auto& p : table1_points()) {
        labels.push_back(point_label(p));
        stats.push_back(class_stats(cmat_to_blog(construct(p), 4)));
    }
    return stats_table(labels, stats);
}

std::string report_index4_p17() {
    const SolutionSet set = index4_p17_all();
    std::ostringstream os;
    os << "# p=17 k=4: no source tag residual c0 c1 c2 c3\n";
    for (std::size_t i = 0; i < set.sols.size(); ++i) {
        const auto& s = set.sols[i];
        os << i + 1 << ' ' << set.source[i] << ' ' << s.tag << ' ' << format_real(s.residual, 3);
        for (Eigen::Index j = 0; j < s.c.size(); ++j)
            os << ' ' << format_real(s.c(j).real(), 12) << ',' << format_real(s.c(j).imag(), 12);
        os << '\n';
    }
    os << "total " << set.sols.size() << '\n';
    os << "real " << set.count("real") << '\n';
    os << "unimodular " << set.count("unimodular") << '\n';
    os << "complex " << set.count("complex") << '\n';
    os << "max_residual " << format_real(set.max_residual(), 3) << '\n';
    return os.str();
}

std::string report_fingerprints() {
    const CMat F2 = fourier(2);
    const CMat H4 = kronecker(F2, F2);
    std::ostringstream os;
    os << "fingerprint F2xF2xF2\n" << format_fingerprint(fingerprint(kronecker(H4, F2), 4));
    os << "rank profile F2xF2\n" << format_rank_profile(rank_profile(H4));
    os << "rank profile F4\n" << format_rank_profile(rank_profile(fourier(4)));
    os << "vanishing 4x4 minors, BH(8,4) ACT representatives\n";
    int k = 1;
    for (const auto& p : table1_points()) os << k++ << ' ' << point_label(p) << ' ' << vanishing_minors(construct(p), 4) << '\n';
    return os.str();
}

}  // namespace hadlab
