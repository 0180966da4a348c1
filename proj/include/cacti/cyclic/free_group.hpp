#pragma once

#include <string>
#include <vector>

namespace cacti::cyclic {

// The two-term complex F_p[F(a_1..a_n)] -> (+)_i F_p[F]{da_i} with
// w |-> sum_i (w a_i - a_i w) da_i, on the word-length-truncated basis.
struct FreeGroupReport {
    int n_gens = 0;
    int max_len = 0;
    int p = 2;
    // kernel dimension of the map restricted to words of length <= l,
    // for l = 0..max_len (the filtration is honest: images stay in range)
    std::vector<int> kernel_by_length;
    // cokernel of the associated-graded (length-raising) part of the map,
    // per target length stratum 0..max_len
    std::vector<int> cokernel_by_length;
};

FreeGroupReport free_group_thc(int n_gens, int max_len, int p);

// reduced words of length exactly l (letters 1..n, negatives are inverses)
std::vector<std::vector<int>> reduced_words(int n_gens, int len);

}  // namespace cacti::cyclic
