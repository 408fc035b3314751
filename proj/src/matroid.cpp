#include "ehrhart/matroid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ehrhart {

Rank2Matroid::Rank2Matroid(std::vector<int> hyperplane_sizes) : parts_(std::move(hyperplane_sizes)) {
    if (parts_.empty())
        throw std::invalid_argument("Rank2Matroid: empty partition");
    for (int a : parts_)
        if (a < 1)
            throw std::invalid_argument("Rank2Matroid: parts must be positive");
    if (parts_.size() < 2)
        throw std::invalid_argument("Rank2Matroid: a single hyperplane means rank 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Rank2Matroid::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Classification classify(const Rank2Matroid& m) {
    Classification c;
    const auto& p = m.parts();
    const int n = m.ground_set_size();
    c.connected = m.connected();
    c.uniform = std::all_of(p.begin(), p.end(), [](int a) { return a == 1; });
    c.sparse_paving = std::all_of(p.begin(), p.end(), [](int a) { return a <= 2; });
    c.lambda = static_cast<int>(std::count(p.begin(), p.end(), 2));
    c.minimal = n >= 3 && p.size() == 3 && p[0] == n - 2 && p[1] == 1 && p[2] == 1;
    return c;
}

HRepresentation h_representation(const Rank2Matroid& m, long t) {
    if (t < 1)
        throw std::invalid_argument("h_representation: t must be >= 1");
    HRepresentation h;
    h.ambient_dim = m.ground_set_size();
    h.var_upper = t;
    h.coord_sum = 2 * t;
    int begin = 0;
    for (int a : m.parts()) {
        h.blocks.push_back({begin, begin + a, Relation::LessEq, t});
        begin += a;
    }
    return h;
}

std::vector<Rank2Matroid> enumerate_partitions(int n, int min_parts) {
    if (n < 2)
        throw std::invalid_argument("enumerate_partitions: n must be >= 2");
    if (min_parts != 2 && min_parts != 3)
        throw std::invalid_argument("enumerate_partitions: min_parts must be 2 or 3");
    std::vector<Rank2Matroid> out;
    std::vector<int> cur;
    // largest-first recursion yields descending-lexicographic order
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            if (static_cast<int>(cur.size()) >= min_parts)
                out.emplace_back(cur);
            return;
        }
        for (int first = std::min(rest, max_part); first >= 1; --first) {
            cur.push_back(first);
            rec(rest - first, first);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace ehrhart
