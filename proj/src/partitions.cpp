#include "partsum/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace partsum {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    unsigned long sum = 0;
    unsigned prev = std::numeric_limits<unsigned>::max();
    for (unsigned p : parts_) {
        if (p == 0) throw std::invalid_argument("Partition: zero part");
        if (p > prev) throw std::invalid_argument("Partition: parts not weakly decreasing");
        prev = p;
        sum += p;
    }
    if (sum > std::numeric_limits<unsigned>::max())
        throw std::invalid_argument("Partition: sum overflows");
    n_ = static_cast<unsigned>(sum);
}

PaddedPartition::PaddedPartition(const Partition& p, unsigned n) {
    if (p.n() != n)
        throw std::invalid_argument("PaddedPartition: partition does not sum to n");
    if (p.count() > n)
        throw std::invalid_argument("PaddedPartition: more than n parts");
    lambda_.assign(p.parts().begin(), p.parts().end());
    lambda_.resize(n, 0);
}

PaddedPartition pad(const Partition& p, unsigned n) { return PaddedPartition(p, n); }

PartitionStream::PartitionStream(unsigned n, unsigned max_part)
    : n_(n), max_part_(max_part) {
    buf_.reserve(n);
}

void PartitionStream::fill_greedy(unsigned remainder, unsigned bound) {
    while (remainder > 0) {
        unsigned p = std::min(remainder, bound);
        buf_.push_back(p);
        remainder -= p;
    }
}

bool PartitionStream::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (n_ == 0) return true;  // the single empty partition
        if (max_part_ == 0) {
            done_ = true;
            return false;
        }
        fill_greedy(n_, max_part_);
        return true;
    }
    if (n_ == 0) {
        done_ = true;
        return false;
    }
    // Reverse-lex successor: decrement the last part greater than 1 and
    // refill the freed units greedily under the new bound.
    std::size_t j = buf_.size();
    while (j > 0 && buf_[j - 1] == 1) --j;
    if (j == 0) {
        done_ = true;
        return false;
    }
    unsigned freed = std::accumulate(buf_.begin() + (j - 1), buf_.end(), 0u);
    unsigned bound = buf_[j - 1] - 1;
    buf_.resize(j - 1);
    fill_greedy(freed, bound);
    return true;
}

void PartitionStream::reset() {
    started_ = false;
    done_ = false;
    buf_.clear();
}

BigInt partition_count(unsigned n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (unsigned long k = 1;; ++k) {
            unsigned long g1 = k * (3 * k - 1) / 2;  // generalized pentagonal numbers
            unsigned long g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            if (k % 2 == 1) {
                acc += p[m - g1];
                if (g2 <= m) acc += p[m - g2];
            } else {
                acc -= p[m - g1];
                if (g2 <= m) acc -= p[m - g2];
            }
        }
        p[m] = acc;
    }
    return p[n];
}

Partition conjugate(const Partition& p) {
    std::vector<unsigned> conj;
    conj.reserve(p.largest());
    for (unsigned i = 1; i <= p.largest(); ++i) {
        unsigned count = 0;
        for (unsigned part : p.parts()) {
            if (part >= i) ++count;
            else break;  // parts are decreasing
        }
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

std::vector<unsigned> multiplicities(const Partition& p) {
    std::vector<unsigned> t(p.n(), 0);
    for (unsigned part : p.parts()) ++t[part - 1];
    return t;
}

Partition from_multiplicities(std::span<const unsigned> t) {
    unsigned long weighted = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        weighted += static_cast<unsigned long>(i + 1) * t[i];
    if (weighted != t.size())
        throw std::invalid_argument("from_multiplicities: sum i*t_i != n");
    std::vector<unsigned> parts;
    for (std::size_t i = t.size(); i > 0; --i)
        parts.insert(parts.end(), t[i - 1], static_cast<unsigned>(i));
    return Partition(std::move(parts));
}

CompositionStream::CompositionStream(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("CompositionStream: n must be >= 1");
    if (n > 63) throw std::invalid_argument("CompositionStream: n too large to enumerate");
    buf_.reserve(n);
}

bool CompositionStream::next() {
    if (done_) return false;
    if (!started_) started_ = true;
    else if (++mask_ >= (std::uint64_t{1} << (n_ - 1))) {
        done_ = true;
        return false;
    }
    buf_.clear();
    unsigned run = 1;
    for (unsigned gap = 0; gap < n_ - 1; ++gap) {
        if (mask_ >> gap & 1) {
            buf_.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    buf_.push_back(run);
    return true;
}

std::string ferrers(const Partition& p) {
    std::string out;
    for (unsigned part : p.parts()) {
        for (unsigned i = 0; i < part; ++i) {
            if (i > 0) out += ' ';
            out += "•";
        }
        out += '\n';
    }
    return out;
}

}  // namespace partsum
