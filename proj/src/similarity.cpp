#include "collatz/similarity.hpp"

#include <algorithm>

namespace collatz {

CommonSubstring longest_common_substring(std::string_view a, std::string_view b) {
    CommonSubstring best;
    if (a.empty() || b.empty()) {
        return best;
    }
    // Rolling-row DP: run[j] = length of the common suffix of a[..i] and
    // b[..j]. Scanning i then j ascending visits equal-length candidates in
    // order of (offset_a, offset_b), so strict improvement keeps the
    // required tie-break for free.
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                cur[j] = prev[j - 1] + 1;
                if (cur[j] > best.length) {
                    best.length = cur[j];
                    best.offset_a = i - cur[j];
                    best.offset_b = j - cur[j];
                }
            } else {
                cur[j] = 0;
            }
        }
        std::swap(prev, cur);
    }
    return best;
}

std::size_t longest_common_prefix(std::string_view a, std::string_view b) {
    const std::size_t limit = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < limit && a[k] == b[k]) {
        ++k;
    }
    return k;
}

SimilarityMatrix similarity_matrix(const std::vector<std::uint64_t>& ns,
                                   std::uint64_t step_cap) {
    SimilarityMatrix m;
    m.ns = ns;

    std::vector<std::string> encodings;
    encodings.reserve(ns.size());
    for (std::uint64_t n : ns) {
        encodings.push_back(encode(BigInt(n), step_cap).bits);
    }

    const std::size_t k = ns.size();
    m.lcs.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        m.lcs[i][i] = encodings[i].size();
        for (std::size_t j = i + 1; j < k; ++j) {
            const std::size_t len = longest_common_substring(encodings[i], encodings[j]).length;
            m.lcs[i][j] = len;
            m.lcs[j][i] = len;
        }
    }
    return m;
}

}  // namespace collatz
