#include "brunnian/sublinks.hpp"

#include <algorithm>

namespace brunnian {

SublinkReport sublink_vanishing(const MultiBlockForm& f) {
    std::size_t k = f.num_parts();
    if (k < 2) throw DimensionMismatch("sublink test needs at least two parts");

    // nonempty proper subsets, ordered by size then lexicographically
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    SublinkReport report;
    for (auto& s : subsets) {
        SublinkEntry e;
        e.subset = s;
        IntMatrix sub = compose_multi(restrict_parts(f, s));
        e.det = alexander(sub);
        e.vanishes = e.det.is_zero();
        if (!e.vanishes) report.all_vanish = false;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace brunnian
