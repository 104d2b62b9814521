#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "collatz/codec.hpp"

namespace collatz {

// Longest common contiguous run of two strings, with one witness position
// in each. Ties break to the smallest offset_a, then smallest offset_b.
struct CommonSubstring {
    std::size_t length = 0;
    std::size_t offset_a = 0;
    std::size_t offset_b = 0;
};

CommonSubstring longest_common_substring(std::string_view a, std::string_view b);

// Count of equal leading characters.
std::size_t longest_common_prefix(std::string_view a, std::string_view b);

// Pairwise longest-common-substring lengths of the encodings of `ns`.
// Symmetric; entry (i,i) is the encoding length of ns[i].
struct SimilarityMatrix {
    std::vector<std::uint64_t> ns;
    std::vector<std::vector<std::size_t>> lcs;
};

SimilarityMatrix similarity_matrix(const std::vector<std::uint64_t>& ns,
                                   std::uint64_t step_cap = kDefaultStepCap);

}  // namespace collatz
