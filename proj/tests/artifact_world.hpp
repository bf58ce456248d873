#pragma once

#include "oracles.hpp"

namespace idring::oracle {

// One random valid artifact of each kind, drawn from a small shared world.
struct World {
    Rng rng;
    KgcSetup kgc;

    explicit World(std::uint64_t seed) : rng(seed), kgc(setup(rng)) {}

    RingDescriptor random_ring() {
        const std::size_t r = 1 + rng.uniform(5);
        std::vector<Bytes> members;
        for (std::size_t i = 0; i < r; ++i) {
            Bytes id = random_bytes(rng, 1 + rng.uniform(12));
            id.push_back(static_cast<std::uint8_t>(i));
            members.push_back(id);
        }
        return RingDescriptor(members);
    }

    std::vector<Artifact> one_of_each() {
        std::vector<Artifact> out;
        out.emplace_back(kgc.params);
        const Bytes id = random_bytes(rng, 1 + rng.uniform(20));
        out.emplace_back(extract(kgc.master, id));

        const RingDescriptor ring = random_ring();
        const std::size_t k = rng.uniform(ring.size());
        const Bytes m = random_bytes(rng, rng.uniform(40));
        out.emplace_back(ring_sign(kgc.params, ring, k, extract(kgc.master, ring[k]), m, rng));

        const LongTermKeyPair original = generate_long_term_key(kgc.params, rng);
        const Bytes w = random_bytes(rng, 1 + rng.uniform(30));
        const DelegationToken token = delegate(original, w);
        out.emplace_back(token);

        const std::size_t n = 1 + rng.uniform(4);
        std::vector<LongTermKeyPair> proxies;
        std::vector<BasePoint> publics;
        for (std::size_t i = 0; i < n; ++i) {
            proxies.push_back(generate_long_term_key(kgc.params, rng));
            publics.push_back(proxies.back().public_key);
        }
        const std::size_t s = rng.uniform(n);
        const ProxyKeyPair pk = proxy_key_gen(kgc.params, token, proxies[s], original.public_key);
        out.emplace_back(proxy_ring_sign(kgc.params, original.public_key, publics, s, pk, w, m, rng));
        out.emplace_back(original);
        out.emplace_back(kgc.master);
        out.emplace_back(PublicKey{original.public_key});
        out.emplace_back(pk);
        return out;
    }
};

}  // namespace idring::oracle
