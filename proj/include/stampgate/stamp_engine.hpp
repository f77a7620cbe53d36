#pragma once

#include <cstdint>
#include <optional>

#include "stampgate/core_model.hpp"
#include "stampgate/crypto_kit.hpp"

namespace stampgate {

struct StampKey {
    crypto::Key256 bytes{};
};

struct FreshnessWindow {
    Tick max_age = 500;
};

enum class VerifyOutcome { Ok, Stale, Mismatch, Garbled };

std::string_view to_string(VerifyOutcome v) noexcept;

// Sealed-stamp size: 48-byte plaintext plus sealing overhead.
inline constexpr std::size_t kStampTokenBytes = kStampPlainBytes + crypto::kSealOverhead;

Digest header_digest(const PacketHeader& h);

class StampEngine {
public:
    explicit StampEngine(StampKey key);

    // Serials start at 1 and strictly increase.
    Stamp issue_stamp(const PacketHeader& h, Tick now);

    // Checks in order: opens, then freshness, then header binding.
    [[nodiscard]] VerifyOutcome verify_stamp(const Stamp& s, const PacketHeader& h, Tick now,
                                             FreshnessWindow w) const;

    [[nodiscard]] std::optional<StampContents> open_stamp(const Stamp& s) const;
    [[nodiscard]] std::uint64_t issued() const noexcept { return next_serial_ - 1; }

private:
    crypto::DynamicKey seal_key_;
    std::uint64_t next_serial_ = 1;
};

}  // namespace stampgate
