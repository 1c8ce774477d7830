#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "peq/error.hpp"

namespace peq {

// Canonical set partition of {1,...,l}, stored as a restricted growth
// string over 0-based positions: labels[0] == 0 and every label is at most
// one more than the maximum of the labels before it. Block k is the set of
// positions carrying label k, so blocks are implicitly ordered by minimum
// element. Two partitions are equal iff their label sequences are equal.
class SetPartition {
  public:
    SetPartition() = default;  // the unique partition of the empty set
    explicit SetPartition(std::vector<int> labels);

    // Canonicalizes an arbitrary equality pattern: positions get the same
    // label iff they hold equal values in `pattern`.
    static SetPartition from_equality_pattern(const std::vector<int>& pattern);

    int ground_size() const { return static_cast<int>(labels_.size()); }
    int block_count() const;
    const std::vector<int>& labels() const { return labels_; }
    // Blocks as sorted 0-based position lists, ordered by minimum element.
    std::vector<std::vector<int>> blocks() const;

    // Space-separated label text, e.g. "0 0 1 2"; empty string for l = 0.
    std::string str() const;
    // Inverse of str(). Rejects non-canonical label sequences.
    static SetPartition parse(const std::string& text);

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend std::strong_ordering operator<=>(const SetPartition&,
                                            const SetPartition&) = default;

  private:
    std::vector<int> labels_;
};

// Partition whose blocks group equal entries of the tuple (values 1..n).
SetPartition partition_of_tuple(const std::vector<int>& tuple, int n);

// All partitions of {1,...,l} with at most max_blocks blocks, in
// lexicographic label order. l = 0 yields the single empty partition.
std::vector<SetPartition> enumerate_partitions(int l, int max_blocks);

// True iff every block of q is contained in some block of p.
bool refines(const SetPartition& q, const SetPartition& p);

// All q with at most max_blocks blocks that p refines, in lexicographic
// label order. Contains p itself whenever p has at most max_blocks blocks.
std::vector<SetPartition> coarsenings(const SetPartition& p, int max_blocks);

// Number of partitions of {1,...,l} with at most max_blocks blocks
// (a partial Bell sum, computed by Stirling recurrence).
std::int64_t count_partitions(int l, int max_blocks);

// Incidence matrix of refinement and its exact integer inverse, both
// indexed by enumerate_partitions(l, max_blocks):
// zeta[p][q] = 1 iff p refines q, and zeta * moebius = identity.
struct ZetaMoebius {
    std::vector<SetPartition> order;
    std::vector<std::vector<std::int64_t>> zeta;
    std::vector<std::vector<std::int64_t>> moebius;
};
ZetaMoebius zeta_and_moebius(int l, int max_blocks);

}  // namespace peq
