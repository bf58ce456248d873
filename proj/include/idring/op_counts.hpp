#pragma once

#include <cstdint>

namespace idring {

/// Tally of group and hash operations performed while a CountingScope is
/// active on the current thread.
struct OpCounts {
    std::uint64_t pairings = 0;
    std::uint64_t base_muls = 0;
    std::uint64_t base_adds = 0;
    std::uint64_t key_muls = 0;
    std::uint64_t key_adds = 0;  // subtraction included
    std::uint64_t gt_muls = 0;
    std::uint64_t gt_pows = 0;
    std::uint64_t scalar_muls = 0;
    std::uint64_t hash_calls = 0;    // hashes onto the scalar field (H1, H3)
    std::uint64_t point_hashes = 0;  // hashes onto the key group (H2, warrant)

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Installs a fresh OpCounts for the current thread. Scopes nest: only the
/// innermost scope receives tallies, and the enclosing one resumes when it
/// ends.
class CountingScope {
public:
    CountingScope();
    ~CountingScope();
    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

    const OpCounts& counts() const noexcept { return counts_; }

private:
    OpCounts counts_;
    OpCounts* previous_;
};

namespace detail {

OpCounts* active_counts() noexcept;

inline void tally(std::uint64_t OpCounts::*field) noexcept {
    if (OpCounts* c = active_counts()) ++(c->*field);
}

}  // namespace detail
}  // namespace idring
