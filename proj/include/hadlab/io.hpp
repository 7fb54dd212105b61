#pragma once

#include <iosfwd>
#include <string>

#include "hadlab/core.hpp"

namespace hadlab {

// .cmat: "n" then n rows of "re,im" entries; .blog: "n q" then n rows of integers in [0,q).
CMat read_cmat(std::istream& in);
void write_cmat(std::ostream& out, const CMat& M);
BLog read_blog(std::istream& in);
void write_blog(std::ostream& out, const BLog& L);

CMat load_cmat(const std::string& path);
void save_cmat(const std::string& path, const CMat& M);
BLog load_blog(const std::string& path);
void save_blog(const std::string& path, const BLog& L);

// Parses "re,im" or a plain real number.
cplx parse_complex(const std::string& s);
std::string format_complex(cplx z, int digits = 17);

}  // namespace hadlab
