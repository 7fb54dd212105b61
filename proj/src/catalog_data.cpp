// Sporadic matrices as .blog text: "n q" then the n x n log matrix.
#include <map>
#include <sstream>

#include "hadlab/catalog.hpp"
#include "hadlab/io.hpp"

namespace hadlab {

namespace {

const char* const kL14A = R"(14 4
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 2 2 0 3 2 2 1 3 2 1 0
0 0 1 1 1 3 0 3 2 3 2 0 2 2
0 0 1 3 3 3 2 1 1 2 0 1 3 2
0 0 3 0 2 1 2 3 0 0 1 2 2 2
0 1 2 3 2 2 3 1 0 3 2 0 1 0
0 1 3 1 0 2 2 3 3 2 3 1 0 1
0 2 0 0 2 1 1 1 2 3 3 3 0 2
0 2 0 3 1 2 0 2 3 1 1 1 3 3
0 2 1 2 0 0 2 2 0 0 2 3 3 1
0 2 2 0 1 3 2 0 2 1 0 3 2 0
0 2 3 2 3 0 1 3 1 2 1 0 1 3
0 3 2 1 0 1 0 1 0 2 3 2 2 3
0 3 2 2 3 2 0 0 2 0 1 2 0 1
)";

const char* const kBH16_4 = R"(16 4
0 0 1 0 0 2 3 2 2 2 0 2 2 3 1 0
1 2 2 3 3 3 3 3 1 1 1 1 3 2 3 0
0 0 2 0 2 0 2 0 2 0 2 0 1 3 2 0
1 0 3 2 1 3 2 1 1 2 2 3 2 1 0 0
0 2 3 3 1 2 0 1 2 0 3 2 0 1 2 0
2 3 2 2 2 0 0 1 0 0 0 2 2 3 1 0
3 3 3 1 1 1 2 2 3 3 1 1 3 2 3 0
0 2 0 2 0 0 0 2 0 2 2 0 1 3 2 0
3 2 1 1 2 1 0 3 2 1 2 3 2 1 0 0
2 0 1 2 0 0 2 3 3 1 3 2 0 1 2 0
0 3 2 2 1 0 3 2 2 1 0 0 0 0 0 2
2 3 0 1 2 2 3 0 1 2 0 0 0 0 2 0
2 1 3 2 0 2 1 3 2 0 0 0 1 3 0 0
1 2 1 3 3 1 2 1 3 3 1 3 0 0 0 0
3 1 2 0 2 3 1 2 0 2 3 1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 3 1 0 0
)";

const char* const kBH16_6 = R"(16 6
0 0 0 0 0 3 0 3 3 3 0 2 2 4 4 0
0 0 0 2 4 0 3 3 5 1 0 4 4 2 2 0
0 0 3 4 2 3 3 3 1 5 3 0 3 0 3 0
0 2 4 2 3 3 5 1 5 3 3 2 5 4 1 0
0 4 2 3 4 3 1 5 3 1 3 4 1 2 5 0
3 0 3 3 3 0 0 0 0 0 0 2 2 4 4 0
0 3 3 5 1 0 0 0 2 4 0 4 4 2 2 0
3 3 3 1 5 0 0 3 4 2 3 0 3 0 3 0
3 5 1 5 3 0 2 4 2 3 3 2 5 4 1 0
3 1 5 3 1 0 4 2 3 4 3 4 1 2 5 0
0 0 3 3 3 0 0 3 3 3 0 0 0 0 0 3
4 2 0 4 2 4 2 0 4 2 0 0 0 0 3 0
4 2 3 1 5 4 2 3 1 5 0 0 0 3 0 0
2 4 0 2 4 2 4 0 2 4 0 0 3 0 0 0
2 4 3 5 1 2 4 3 5 1 0 3 0 0 0 0
0 0 0 0 0 0 0 0 0 0 3 0 0 0 0 0
)";

const char* const kW19 = R"(19 6
3 0 1 1 0 0 5 4 3 5 3 2 1 1 3 5 4 3 0
0 0 1 3 3 1 4 2 4 5 1 5 1 4 3 3 1 5 0
0 0 1 4 2 4 2 4 3 2 4 1 3 3 1 4 5 1 0
1 2 4 2 1 2 4 4 2 4 5 0 3 5 1 1 3 4 0
2 5 4 3 2 0 4 2 0 1 4 2 4 1 5 3 1 3 0
0 3 5 4 5 0 4 5 3 1 3 4 5 3 4 1 3 1 0
5 4 3 5 3 2 3 0 1 1 0 0 1 1 3 5 4 3 0
4 2 4 5 1 5 0 0 1 3 3 1 1 4 3 3 1 5 0
2 4 3 2 4 1 0 0 1 4 2 4 3 3 1 4 5 1 0
4 4 2 4 5 0 1 2 4 2 1 2 3 5 1 1 3 4 0
4 2 0 1 4 2 2 5 4 3 2 0 4 1 5 3 1 3 0
4 5 3 1 3 4 0 3 5 4 5 0 5 3 4 1 3 1 0
5 5 3 3 2 1 5 5 3 3 2 1 0 0 0 0 1 1 3
5 2 3 1 5 3 5 2 3 1 5 3 0 0 1 3 0 1 0
3 3 5 5 1 2 3 3 5 5 1 2 1 3 0 0 0 1 0
1 3 2 5 3 5 1 3 2 5 3 5 0 1 0 1 0 4 1
2 5 1 3 5 3 2 5 1 3 5 3 1 0 4 1 1 0 0
3 1 5 2 3 5 3 1 5 2 3 5 1 0 1 0 4 0 1
0 0 0 0 0 0 0 0 0 0 0 0 4 1 1 0 1 0 0
)";

const char* const kQ9H = R"(9 3
0 0 0 0 0 0 0 0 0
0 0 0 1 1 1 2 2 2
0 0 0 2 2 2 1 1 1
0 2 1 0 1 2 0 1 2
0 2 1 2 0 1 1 2 0
0 2 1 1 2 0 2 0 1
0 1 2 0 2 1 0 2 1
0 1 2 2 1 0 1 0 2
0 1 2 1 0 2 2 1 0
)";

const std::map<std::string, const char*>& tables() {
    static const std::map<std::string, const char*> t{
        {"L14A", kL14A}, {"BH16_4", kBH16_4}, {"BH16_6", kBH16_6}, {"W19", kW19}, {"Q9H", kQ9H}};
    return t;
}

}  // namespace

BLog catalog_blog(const std::string& id) {
    auto it = tables().find(id);
    if (it == tables().end()) throw DomainError("no embedded table for " + id);
    std::istringstream in(it->second);
    BLog L = read_blog(in);
    if (!hadamard_ok(blog_to_cmat(L), 1e-10)) throw DomainError("embedded table " + id + " is not Hadamard");
    return L;
}

}  // namespace hadlab
