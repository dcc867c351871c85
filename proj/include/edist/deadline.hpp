#pragma once

#include <chrono>
#include <optional>

#include "edist/errors.hpp"

namespace edist {

/// Cooperative wall-clock deadline. Default-constructed deadlines never
/// expire. Algorithms poll it at loop boundaries; hitting it raises
/// TimeoutError, so machines are never torn down mid-construction.
class Deadline {
public:
    Deadline() = default;

    static Deadline after(std::chrono::duration<double> d) {
        Deadline dl;
        dl.at_ = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(d);
        return dl;
    }

    static Deadline after_seconds(double secs) { return after(std::chrono::duration<double>(secs)); }

    bool unlimited() const noexcept { return !at_.has_value(); }

    bool expired() const {
        return at_.has_value() && std::chrono::steady_clock::now() >= *at_;
    }

    void check() const {
        if (expired()) throw TimeoutError();
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Amortizes the clock read in tight worklist loops: calls Deadline::check
/// once every `stride` ticks.
class DeadlineTicker {
public:
    explicit DeadlineTicker(const Deadline& dl, unsigned stride = 4096)
        : dl_(dl), stride_(stride), count_(0) {}

    void tick() {
        if (++count_ >= stride_) {
            count_ = 0;
            dl_.check();
        }
    }

private:
    const Deadline& dl_;
    unsigned stride_;
    unsigned count_;
};

}  // namespace edist
