#pragma once

#include <string>
#include <vector>

namespace ehrhart {

// A loopless rank-2 matroid, represented by the multiset of its hyperplane
// sizes (= parallel-class sizes), which partition the ground set. Stored
// sorted descending; construction canonicalizes and validates.
//
// s >= 3 iff the matroid is connected; s == 2 gives the direct sum of two
// rank-1 uniform matroids (accepted and flagged disconnected). A single part
// would force rank 1 and is rejected.
class Rank2Matroid {
public:
    explicit Rank2Matroid(std::vector<int> hyperplane_sizes);

    const std::vector<int>& parts() const { return parts_; }
    int ground_set_size() const { return n_; }     // n
    int hyperplane_count() const { return static_cast<int>(parts_.size()); }  // s
    bool connected() const { return parts_.size() >= 3; }

    bool operator==(const Rank2Matroid& o) const { return parts_ == o.parts_; }

    std::string to_string() const;  // "a1,a2,...,as"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct Classification {
    bool connected = false;      // s >= 3
    bool uniform = false;        // all parts 1
    bool minimal = false;        // sorted parts = [n-2, 1, 1], n >= 3
    bool sparse_paving = false;  // all parts <= 2
    int lambda = 0;              // number of parts equal to 2
};

Classification classify(const Rank2Matroid& m);

enum class Relation { LessEq, Less, Greater };

// sum_{i in [begin, end)} x_i  rel  rhs, over 0-based coordinates.
struct BlockConstraint {
    int begin = 0;
    int end = 0;
    Relation rel = Relation::LessEq;
    long rhs = 0;
};

// Inequality description of a dilated (half-open) polytope:
//   x integer in [0, var_upper]^ambient_dim,  sum x_i = coord_sum,
//   plus the block constraints. For the t-th dilate of a rank-2 matroid
//   polytope: var_upper = t, coord_sum = 2t, one block per hyperplane with
//   relation <=; auxiliary rank-1 regions use coord_sum = t.
struct HRepresentation {
    int ambient_dim = 0;
    long var_upper = 0;
    long coord_sum = 0;
    std::vector<BlockConstraint> blocks;
};

// The t-th dilate of the matroid base polytope, with the canonical labeling:
// hyperplanes occupy consecutive index blocks in descending-size order.
HRepresentation h_representation(const Rank2Matroid& m, long t);

// All partitions of n with at least min_parts parts (each part >= 1), as
// matroids, in descending-lexicographic order. min_parts must be 2 or 3;
// 3 restricts to connected matroids.
std::vector<Rank2Matroid> enumerate_partitions(int n, int min_parts);

}  // namespace ehrhart
