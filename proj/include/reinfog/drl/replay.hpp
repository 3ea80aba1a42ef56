#pragma once

// Replay buffers: a bounded FIFO sampled uniformly, and a reservoir that keeps
// a uniform sample of an unbounded stream.

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "reinfog/drl/experience.hpp"

namespace reinfog::drl {

namespace detail {

// Floyd's algorithm: k distinct indices from [0, n) in O(k) expected time.
template <typename Rng>
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng) {
    if (k > n) throw std::invalid_argument("cannot sample " + std::to_string(k) + " items from " + std::to_string(n));
    std::vector<std::size_t> out;
    out.reserve(k);
    std::unordered_set<std::size_t> taken;
    for (std::size_t j = n - k; j < n; ++j) {
        const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
        const std::size_t pick = taken.count(t) ? j : t;
        taken.insert(pick);
        out.push_back(pick);
    }
    return out;
}

}  // namespace detail

template <typename T>
class RandomReplayBuffer {
public:
    explicit RandomReplayBuffer(std::size_t capacity) : capacity_(capacity) {
        if (capacity_ == 0) throw std::invalid_argument("replay capacity must be >= 1");
        ring_.reserve(capacity_);
    }

    /// Evicts the oldest item once full.
    void push(T item) {
        if (ring_.size() < capacity_) {
            ring_.push_back(std::move(item));
        } else {
            ring_[head_] = std::move(item);
            head_ = (head_ + 1) % capacity_;
        }
    }

    /// k items uniformly without replacement.
    template <typename Rng>
    std::vector<T> sample(std::size_t k, Rng& rng) const {
        std::vector<T> out;
        out.reserve(k);
        for (std::size_t i : detail::sample_indices(ring_.size(), k, rng)) out.push_back(ring_[i]);
        return out;
    }

    /// Oldest first.
    std::vector<T> items() const {
        std::vector<T> out;
        out.reserve(ring_.size());
        for (std::size_t i = 0; i < ring_.size(); ++i) out.push_back(ring_[(head_ + i) % ring_.size()]);
        return out;
    }

    std::size_t size() const noexcept { return ring_.size(); }
    std::size_t capacity() const noexcept { return capacity_; }

private:
    std::size_t capacity_;
    std::size_t head_ = 0;
    std::vector<T> ring_;
};

template <typename T>
class ReservoirReplayBuffer {
public:
    explicit ReservoirReplayBuffer(std::size_t capacity) : capacity_(capacity) {
        if (capacity_ == 0) throw std::invalid_argument("reservoir capacity must be >= 1");
        slots_.reserve(capacity_);
    }

    /// The N-th item replaces a uniformly chosen slot with probability k/N once full.
    template <typename Rng>
    void push(T item, Rng& rng) {
        ++seen_;
        if (slots_.size() < capacity_) {
            slots_.push_back(std::move(item));
            return;
        }
        const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, seen_ - 1)(rng);
        if (r < capacity_) slots_[static_cast<std::size_t>(r)] = std::move(item);
    }

    template <typename Rng>
    std::vector<T> sample(std::size_t k, Rng& rng) const {
        std::vector<T> out;
        out.reserve(k);
        for (std::size_t i : detail::sample_indices(slots_.size(), k, rng)) out.push_back(slots_[i]);
        return out;
    }

    const std::vector<T>& items() const noexcept { return slots_; }
    std::size_t size() const noexcept { return slots_.size(); }
    std::size_t capacity() const noexcept { return capacity_; }
    std::uint64_t seen() const noexcept { return seen_; }

private:
    std::size_t capacity_;
    std::uint64_t seen_ = 0;
    std::vector<T> slots_;
};

}  // namespace reinfog::drl
