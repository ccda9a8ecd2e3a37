// The pair of A5 strata sigma > pi with d = (2,4,4,4,2), and the flag-quiver permutations
// that carry the same degeneration.
#include <iostream>

#include "klrtor/klrtor.hpp"

using namespace klrtor;

int main() {
    auto a5 = RootSystem::make(Quiver::equioriented_a(5));
    const DimVector d({2, 4, 4, 4, 2});
    auto sigma = Multisegment::parse(a5, "12+23+34+45+14+25");
    auto pi = Multisegment::parse(a5, "2*33+2*12+2*45+2*24");

    std::cout << "d = " << d.to_string() << ": " << enumerate_strata(a5, d).size() << " strata, |Seq(d)| = "
              << enumerate_seq_count(d).get_str() << "\n";
    for (const auto* m : {&sigma, &pi}) {
        auto info = stratum_info(*m);
        std::cout << "  " << m->to_string() << "  orbit dim " << info.orbit_dim << ", codim " << info.codim << "\n";
    }
    std::cout << "  pi in closure of sigma: " << std::boolalpha << closure_leq(sigma, pi) << "\n\n";

    const Permutation x = Permutation::parse("62845173"), y = Permutation::parse("21654387");
    std::cout << "flag quiver A15: " << x.to_string() << " -> " << multisegment_of_permutation(x).to_string() << "\n"
              << "                 " << y.to_string() << " -> " << multisegment_of_permutation(y).to_string() << "\n";
    std::cout << "  lengths " << x.length() << ", " << y.length() << "; Bruhat " << y.to_string() << " <= " << x.to_string() << ": "
              << bruhat_leq(y, x) << "\n";
    KLCache cache;
    std::cout << "  P_{y,x} = " << kl_polynomial(y, x, cache).to_string("q") << "\n";
}
