#include "hadlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hadlab {

cplx parse_complex(const std::string& s) {
    auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            double re = std::stod(s, &used);
            if (used != s.size()) throw DomainError("bad number: " + s);
            return {re, 0.0};
        }
        std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        double re = std::stod(a, &used);
        if (used != a.size()) throw DomainError("bad number: " + s);
        double im = std::stod(b, &used);
        if (used != b.size()) throw DomainError("bad number: " + s);
        return {re, im};
    } catch (const std::logic_error&) {
        throw DomainError("bad complex number: " + s);
    }
}

std::string format_complex(cplx z, int digits) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*g,%.*g", digits, z.real(), digits, z.imag());
    return buf;
}

CMat read_cmat(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw DomainError("malformed .cmat header");
    CMat M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw DomainError("malformed .cmat: too few entries");
            M(i, j) = parse_complex(tok);
        }
    return M;
}

void write_cmat(std::ostream& out, const CMat& M) {
    out << M.rows() << '\n';
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) out << (j ? " " : "") << format_complex(M(i, j));
        out << '\n';
    }
}

BLog read_blog(std::istream& in) {
    BLog L;
    if (!(in >> L.n >> L.q) || L.n < 1 || L.q < 1) throw DomainError("malformed .blog header");
    L.L.resize(L.n, L.n);
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.n; ++j) {
            int v;
            if (!(in >> v)) throw DomainError("malformed .blog: too few entries");
            if (v < 0 || v >= L.q) throw DomainError("malformed .blog: entry out of range");
            L.L(i, j) = v;
        }
    return L;
}

void write_blog(std::ostream& out, const BLog& L) {
    out << L.n << ' ' << L.q << '\n';
    for (int i = 0; i < L.n; ++i) {
        for (int j = 0; j < L.n; ++j) out << (j ? " " : "") << L.L(i, j);
        out << '\n';
    }
}

CMat load_cmat(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return read_cmat(f);
}

void save_cmat(const std::string& path, const CMat& M) {
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path);
    write_cmat(f, M);
}

BLog load_blog(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return read_blog(f);
}

void save_blog(const std::string& path, const BLog& L) {
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path);
    write_blog(f, L);
}

}  // namespace hadlab
