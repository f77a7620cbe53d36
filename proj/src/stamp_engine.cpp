#include "stampgate/stamp_engine.hpp"

namespace stampgate {

std::string_view to_string(VerifyOutcome v) noexcept {
    switch (v) {
        case VerifyOutcome::Ok: return "Ok";
        case VerifyOutcome::Stale: return "Stale";
        case VerifyOutcome::Mismatch: return "Mismatch";
        case VerifyOutcome::Garbled: return "Garbled";
    }
    return "Unknown";
}

Digest header_digest(const PacketHeader& h) {
    const auto bytes = canonical_header_bytes(h);
    return crypto::digest(bytes);
}

StampEngine::StampEngine(StampKey key)
    : seal_key_(crypto::derive_key(crypto::MasterKey{key.bytes}, 0, 0)) {}

Stamp StampEngine::issue_stamp(const PacketHeader& h, Tick now) {
    const StampContents contents{header_digest(h), now, next_serial_++};
    const auto plain = encode_stamp_contents(contents);
    return Stamp{crypto::seal(seal_key_, plain)};
}

std::optional<StampContents> StampEngine::open_stamp(const Stamp& s) const {
    auto plain = crypto::open(seal_key_, s.token);
    if (!plain || plain->size() != kStampPlainBytes) return std::nullopt;
    return decode_stamp_contents(*plain);
}

VerifyOutcome StampEngine::verify_stamp(const Stamp& s, const PacketHeader& h, Tick now,
                                        FreshnessWindow w) const {
    const auto contents = open_stamp(s);
    if (!contents) return VerifyOutcome::Garbled;
    if (contents->issued_at > now || now - contents->issued_at > w.max_age) return VerifyOutcome::Stale;
    if (contents->header_digest != header_digest(h)) return VerifyOutcome::Mismatch;
    return VerifyOutcome::Ok;
}

}  // namespace stampgate
