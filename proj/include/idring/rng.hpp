#pragma once

#include <array>
#include <cstdint>

#include "idring/bytes.hpp"

namespace idring {

/// ChaCha20 keystream generator. Seeded instances are reproducible, which is
/// what tests and `--seed` rely on; such signatures leak nothing about keys
/// but are linkable to anyone who knows the seed, so real use goes through
/// from_entropy().
class Rng {
public:
    /// The seed may be any length; it is hashed down to a 256-bit key.
    explicit Rng(ByteView seed);
    explicit Rng(std::uint64_t seed);

    static Rng from_entropy();

    void fill(std::span<std::uint8_t> out);
    std::uint64_t next_u64();

    /// Uniform in [0, bound).
    std::uint64_t uniform(std::uint64_t bound);

private:
    void refill();

    std::array<std::uint8_t, 32> key_{};
    std::uint64_t block_ = 0;
    std::array<std::uint8_t, 64> buffer_{};
    std::size_t used_ = 64;
};

}  // namespace idring
