#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "stampgate/core_model.hpp"

namespace stampgate::crypto {

using Key256 = std::array<std::uint8_t, 32>;

struct MasterKey {
    Key256 bytes{};
    bool operator==(const MasterKey&) const = default;
};

// One-time key for a single (plan, packet) pair; pure function of its inputs.
struct DynamicKey {
    Key256 bytes{};
    std::uint64_t counter = 0;
    bool operator==(const DynamicKey&) const = default;
};

// nonce[24] ‖ ciphertext ‖ tag[16]
inline constexpr std::size_t kNonceBytes = 24;
inline constexpr std::size_t kTagBytes = 16;
inline constexpr std::size_t kSealOverhead = kNonceBytes + kTagBytes;

// Key input is seq[8] ‖ plan_id[8], big-endian.
DynamicKey derive_key(const MasterKey& master, std::uint64_t seq, std::uint64_t plan_id = 0);

// Deterministic authenticated sealing. The nonce is synthesised from the key
// and plaintext, so equal inputs seal to equal bytes and distinct plaintexts
// under one key never share a nonce. Throws Error(InvalidArgument) on empty input.
Bytes seal(const DynamicKey& key, ByteView plaintext);

// Wrong key, truncation and any modification all yield nullopt.
std::optional<Bytes> open(const DynamicKey& key, ByteView sealed);

Digest digest(ByteView bytes);

// Seeded deterministic key material for the simulator.
MasterKey master_key_from_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace stampgate::crypto
