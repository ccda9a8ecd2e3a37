// Nontrivial Kazhdan-Lusztig polynomials P_{e,w} in S_n, and the F_p moment-graph
// stalks on the smallest singular interval.
#include <cstdlib>
#include <iostream>

#include "klrtor/klrtor.hpp"

using namespace klrtor;

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? static_cast<std::size_t>(std::atoi(argv[1])) : 5;
    if (n < 1 || n > 6) {
        std::cerr << "usage: demo_kl_table [n in 1..6]\n";
        return 1;
    }
    KLCache cache;
    const auto e = Permutation::identity(n);
    std::size_t singular = 0;
    for (const auto& w : all_permutations(n)) {
        auto p = kl_polynomial(e, w, cache);
        if (p == LaurentPoly(1)) continue;
        ++singular;
        std::cout << w.to_string() << "  " << p.to_string("q") << "\n";
    }
    std::cout << singular << " of " << all_permutations(n).size() << " permutations have P_{e,w} != 1\n\n";

    auto g = bmp::MomentGraph(Permutation::identity(4), Permutation::parse("3412"));
    auto sheaf = bmp::bmp_sheaf(g, PrimeField(2));
    for (const auto& v : g.vertices())
        std::cout << "stalk at " << v.to_string() << ": " << sheaf.stalk_rank(v).to_poly(2).to_string("q") << "\n";
}
