#include "idring/rng.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>

#include <sodium.h>

namespace idring {

namespace {

void ensure_sodium() {
    static const bool ready = [] { return sodium_init() >= 0; }();
    if (!ready) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

Rng::Rng(ByteView seed) {
    ensure_sodium();
    crypto_hash_sha256(key_.data(), seed.data(), seed.size());
}

Rng::Rng(std::uint64_t seed) {
    ensure_sodium();
    std::array<std::uint8_t, 8> be{};
    for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
    crypto_hash_sha256(key_.data(), be.data(), be.size());
}

Rng Rng::from_entropy() {
    ensure_sodium();
    std::array<std::uint8_t, 32> seed{};
    randombytes_buf(seed.data(), seed.size());
    Rng rng{ByteView(seed)};
    sodium_memzero(seed.data(), seed.size());
    return rng;
}

void Rng::refill() {
    static constexpr std::array<std::uint8_t, crypto_stream_chacha20_NONCEBYTES> kNonce{};
    buffer_.fill(0);
    crypto_stream_chacha20_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(), kNonce.data(),
                                  block_++, key_.data());
    used_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
    std::size_t done = 0;
    while (done < out.size()) {
        if (used_ == buffer_.size()) refill();
        std::size_t n = std::min(out.size() - done, buffer_.size() - used_);
        std::memcpy(out.data() + done, buffer_.data() + used_, n);
        used_ += n;
        done += n;
    }
}

std::uint64_t Rng::next_u64() {
    std::array<std::uint8_t, 8> b{};
    fill(b);
    std::uint64_t v = 0;
    for (auto x : b) v = v << 8 | x;
    return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform: zero bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

}  // namespace idring
