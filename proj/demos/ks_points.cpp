// Point counts of the Kashiwara-Saito variety and the fitted polynomial.
#include <iostream>

#include "klrtor/klrtor.hpp"

using namespace klrtor;

int main() {
    for (std::uint32_t p : {2u, 3u})
        std::cout << "q = " << p << ": brute force " << ks::count_points_bruteforce(p).get_str() << ", stratified "
                  << ks::count_points_stratified(p).get_str() << "\n";
    auto est = ks::dimension_estimate();
    std::cout << "|S(F_q)| = " << est.polynomial.to_string("q") << "\n"
              << "degree " << est.degree << ", holdout q = " << est.holdout.first << " gives " << est.holdout.second.get_str() << "\n";
}
