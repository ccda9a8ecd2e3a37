#pragma once
// Test oracle: Bruhat order by the subword property of a reduced word.

#include <set>
#include <vector>

#include "klrtor/weyl/permutation.hpp"

namespace oracle {

/// A reduced word for w as simple reflections acting on positions (bubble sort).
inline std::vector<std::size_t> reduced_word(const klrtor::Permutation& w) {
    std::vector<int> a = w.one_line();
    std::vector<std::size_t> word;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                word.push_back(i + 1);
                swapped = true;
            }
    }
    // sorting applied s_{k1}, s_{k2}, ... on the right, so w = s_{km} ... s_{k1}
    return {word.rbegin(), word.rend()};
}

/// Every product of a subword of a reduced word of w, i.e. the lower Bruhat interval of w.
inline std::set<klrtor::Permutation> lower_interval(const klrtor::Permutation& w) {
    const auto word = reduced_word(w);
    std::set<klrtor::Permutation> out;
    const std::size_t m = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        klrtor::Permutation p = klrtor::Permutation::identity(w.size());
        for (std::size_t k = 0; k < m; ++k)
            if (mask & (std::size_t{1} << k)) p = p.right_transposition(word[k], word[k] + 1);
        out.insert(p);
    }
    return out;
}

} // namespace oracle
