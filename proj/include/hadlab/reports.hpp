#pragma once

#include <string>

#include "hadlab/invariants.hpp"

namespace hadlab {

// Plain-text reports with a fixed field order; byte-identical across runs.
std::string format_fingerprint(const Fingerprint& fp);
std::string format_rank_profile(const std::map<std::pair<int, int>, RankCounts>& rp);
std::string format_real(double x, int digits = 12);   // magnitudes below 1e-14 print as 0

std::string report_table1();          // statistics of the ten BH(8,4) ACT representatives
std::string report_index4_p17();      // the 70 simple index-4 cyclic 17-roots with class counts
std::string report_fingerprints();    // printed fingerprint and rank-profile examples

}  // namespace hadlab
