#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

namespace partq {

/// Weakly decreasing positive parts. The default-constructed value is the
/// empty partition (weight 0).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    long weight() const {
        long w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Overpartition: a partition plus a set of part values whose first
/// occurrence carries an overline (at most one overline per value).
struct Overpartition {
    std::vector<int> parts;       // weakly decreasing
    std::vector<int> overlined;   // strictly increasing distinct values, each a part value

    void validate() const {
        for (size_t i = 0; i < overlined.size(); ++i) {
            if (i > 0 && overlined[i] <= overlined[i - 1])
                throw std::invalid_argument("overlined values must be strictly increasing");
            if (!std::binary_search(parts.rbegin(), parts.rend(), overlined[i]))
                throw std::invalid_argument("overlined value is not a part");
        }
    }
};

/// Predicate bundle for restricted enumeration. All filters combine; the
/// zero-initialised bundle allows every partition.
struct PartitionConstraint {
    int modulus = 0;                  // 0 = no residue filter
    std::vector<int> residues;        // allowed part residues mod modulus
    bool odd_only = false;
    bool odd_parts_distinct = false;
    int max_part = 0;                 // 0 = unbounded

    bool allows(int part) const {
        if (odd_only && part % 2 == 0) return false;
        if (max_part > 0 && part > max_part) return false;
        if (modulus > 0 &&
            std::find(residues.begin(), residues.end(), part % modulus) == residues.end())
            return false;
        return true;
    }

    static PartitionConstraint none() { return {}; }
    static PartitionConstraint residue(int a, int m) {
        PartitionConstraint c;
        c.modulus = m;
        c.residues = {((a % m) + m) % m};
        return c;
    }
    static PartitionConstraint odd() {
        PartitionConstraint c;
        c.odd_only = true;
        return c;
    }
    static PartitionConstraint pod() {
        PartitionConstraint c;
        c.odd_parts_distinct = true;
        return c;
    }
};

namespace detail {

template <typename F>
void partition_rec(long remaining, int cap, const PartitionConstraint& c,
                   std::vector<int>& acc, F&& visit) {
    if (remaining == 0) {
        visit(const_cast<const std::vector<int>&>(acc));
        return;
    }
    const int hi = static_cast<int>(std::min<long>(remaining, cap));
    for (int k = 1; k <= hi; ++k) {
        if (!c.allows(k)) continue;
        // an odd part that must stay distinct blocks re-use of the same value
        const int sub_cap = (c.odd_parts_distinct && k % 2 == 1) ? k - 1 : k;
        acc.push_back(k);
        partition_rec(remaining - k, sub_cap, c, acc, visit);
        acc.pop_back();
    }
}

} // namespace detail

/// Visit every partition of n satisfying the constraint exactly once.
/// Parts arrive weakly decreasing (largest first); successive partitions are
/// ordered colexicographically by sorted parts, i.e. ascending lexicographic
/// on the decreasing part vector: for n=4 the order is 1+1+1+1, 2+1+1, 2+2,
/// 3+1, 4. The order is stable and documented so golden tests can rely on it.
template <typename F>
void for_each_partition(long n, const PartitionConstraint& c, F&& visit) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative number");
    std::vector<int> acc;
    const int cap = (c.max_part > 0) ? static_cast<int>(std::min<long>(n, c.max_part))
                                     : static_cast<int>(n);
    detail::partition_rec(n, cap, c, acc, visit);
}

std::vector<Partition> list_partitions(long n, const PartitionConstraint& c = {});

/// Visit every overpartition of n exactly once: for each underlying
/// partition (enumeration order above), overline subsets of its distinct
/// values in increasing binary-counter order over the values sorted
/// ascending (bit i = overline the i-th smallest distinct value).
/// The visitor receives the decreasing parts and the ascending overlined
/// values; both spans are only valid during the call.
template <typename F>
void for_each_overpartition(long n, F&& visit) {
    std::vector<int> distinct, over;
    for_each_partition(n, {}, [&](const std::vector<int>& parts) {
        distinct.assign(parts.rbegin(), parts.rend());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        const size_t d = distinct.size();
        for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
            over.clear();
            for (size_t i = 0; i < d; ++i)
                if (mask >> i & 1) over.push_back(distinct[i]);
            visit(parts, const_cast<const std::vector<int>&>(over));
        }
    });
}

std::vector<Overpartition> list_overpartitions(long n);

/// The Durfee rectangle of offset `offset`: the largest h with rows
/// 1..h (1-indexed) all holding at least h + offset boxes; h = 0 always
/// qualifies (degenerate rectangle of width `offset`). The qualifying set is
/// downward closed, so the maximum is well defined.
struct DurfeeResult {
    int height = 0;
    int width = 0;    // height + offset
    int offset = 0;
};

DurfeeResult durfee(std::span<const int> row_boxes, int offset);

/// m-modular Young diagram of a partition whose parts all lie in one residue
/// class a mod m (1 <= a < m is not required here, but 1 <= a <= m is): the
/// part m*b + a becomes a row of b + 1 boxes.
struct ModularDiagram {
    int modulus = 1;
    int residue = 1;
    std::vector<int> row_boxes;   // weakly decreasing

    static ModularDiagram from_partition(const Partition& p, int m, int a);
    Partition to_partition() const;
};

} // namespace partq
