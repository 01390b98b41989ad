#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "partsum/rational.hpp"

namespace partsum {

/// Integer partition: weakly decreasing sequence of positive parts summing
/// to n. The default-constructed value is the empty partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    unsigned n() const { return n_; }
    std::span<const unsigned> parts() const { return parts_; }
    unsigned count() const { return static_cast<unsigned>(parts_.size()); }
    unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// A partition of n written as exactly n weakly decreasing entries
/// (lambda_1, ..., lambda_n) with trailing zeros.
class PaddedPartition {
public:
    PaddedPartition(const Partition& p, unsigned n);

    unsigned n() const { return static_cast<unsigned>(lambda_.size()); }
    std::span<const unsigned> lambda() const { return lambda_; }
    unsigned largest() const { return lambda_.empty() ? 0 : lambda_.front(); }

    bool operator==(const PaddedPartition&) const = default;

private:
    std::vector<unsigned> lambda_;
};

PaddedPartition pad(const Partition& p, unsigned n);

/// Restartable stream over the partitions of n in reverse lexicographic
/// order (largest first), optionally restricted to parts <= max_part.
/// Memory use is O(n); n = 0 yields the single empty partition.
class PartitionStream {
public:
    static constexpr unsigned kNoBound = std::numeric_limits<unsigned>::max();

    explicit PartitionStream(unsigned n, unsigned max_part = kNoBound);

    /// Advances to the next partition; false once exhausted.
    bool next();
    /// Parts of the current partition; valid after next() returned true.
    std::span<const unsigned> parts() const { return buf_; }
    Partition current() const { return Partition(buf_); }
    void reset();

private:
    void fill_greedy(unsigned remainder, unsigned bound);

    unsigned n_;
    unsigned max_part_;
    bool started_ = false;
    bool done_ = false;
    std::vector<unsigned> buf_;
};

template <typename F>
void for_each_partition(unsigned n, F&& f) {
    PartitionStream stream(n);
    while (stream.next()) f(stream.parts());
}

/// p(n) via Euler's pentagonal-number recurrence; never enumerates.
BigInt partition_count(unsigned n);

/// Transpose of the Ferrers diagram; swaps part count and largest part.
Partition conjugate(const Partition& p);

/// t_i = number of parts equal to i, for i = 1..n (index i-1).
std::vector<unsigned> multiplicities(const Partition& p);

/// Inverse of multiplicities(); rejects t unless sum i*t_i = len(t).
Partition from_multiplicities(std::span<const unsigned> t);

/// Stream over all 2^(n-1) compositions of n >= 1. Order is deterministic:
/// part boundaries follow the binary count over the n-1 gap positions.
class CompositionStream {
public:
    explicit CompositionStream(unsigned n);

    bool next();
    std::span<const unsigned> parts() const { return buf_; }

private:
    unsigned n_;
    std::uint64_t mask_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::vector<unsigned> buf_;
};

/// One text line per part, largest first; bullet glyphs separated by single
/// spaces, each row newline-terminated.
std::string ferrers(const Partition& p);

}  // namespace partsum
