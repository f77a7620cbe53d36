#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stampgate {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using Tick = std::uint64_t;
using Units = std::uint64_t;
using Digest = std::array<std::uint8_t, 32>;

struct SourceAddr {
    std::uint32_t value = 0;
    auto operator<=>(const SourceAddr&) const = default;
};

struct EndpointId {
    std::uint16_t index = 0;
    auto operator<=>(const EndpointId&) const = default;
};

// Client ids always carry the top bit so they never collide with plan ids
// when either is used as key-derivation input.
inline constexpr std::uint64_t kClientIdTag = 0x8000'0000'0000'0000ULL;

struct ClientId {
    std::uint64_t value = 0;
    auto operator<=>(const ClientId&) const = default;
};

struct Signature {
    std::uint16_t issuer = 0;
    std::uint64_t serial = 0;
    std::uint16_t checksum = 0;
    auto operator<=>(const Signature&) const = default;
};

// 16-bit one's-complement sum over issuer[2] ‖ serial[8], big-endian words.
std::uint16_t signature_checksum(std::uint16_t issuer, std::uint64_t serial) noexcept;
Signature make_signature(std::uint16_t issuer, std::uint64_t serial) noexcept;
bool is_well_formed(const Signature& sig) noexcept;

enum class ServiceCategory : std::uint8_t { Message = 0, FileUpload = 1, Query = 2 };

std::string_view to_string(ServiceCategory category) noexcept;
std::optional<ServiceCategory> parse_service(std::string_view name) noexcept;

class ServiceSet {
public:
    ServiceSet() = default;
    ServiceSet(std::initializer_list<ServiceCategory> categories) {
        for (auto c : categories) insert(c);
    }

    void insert(ServiceCategory c) noexcept { bits_ |= bit(c); }
    [[nodiscard]] bool contains(ServiceCategory c) const noexcept { return (bits_ & bit(c)) != 0; }
    [[nodiscard]] bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] std::vector<ServiceCategory> to_vector() const;

    bool operator==(const ServiceSet&) const = default;

private:
    static constexpr std::uint8_t bit(ServiceCategory c) noexcept {
        return static_cast<std::uint8_t>(1U << static_cast<unsigned>(c));
    }
    std::uint8_t bits_ = 0;
};

struct Ticket {
    ClientId client;
    ServiceSet services;
    Tick issued_at = 0;
    Tick expires_at = 0;

    [[nodiscard]] bool valid_at(Tick now) const noexcept { return now >= issued_at && now < expires_at; }
    [[nodiscard]] bool permits(ServiceCategory c, Tick now) const noexcept {
        return valid_at(now) && services.contains(c);
    }
};

enum class PacketKind : std::uint8_t { Data = 0, Control = 1 };

// For Control datagrams plan_id carries the sender's ClientId value and seq
// the client's control counter.
struct PacketHeader {
    std::uint64_t plan_id = 0;
    std::uint32_t seq = 0;
    std::uint32_t payload_len = 0;
    SourceAddr source;
    EndpointId dest;
    PacketKind kind = PacketKind::Data;

    bool operator==(const PacketHeader&) const = default;
};

inline constexpr std::size_t kHeaderBytes = 23;
using HeaderBytes = std::array<std::uint8_t, kHeaderBytes>;

// plan_id[8] seq[4] payload_len[4] source[4] dest[2] kind[1], big-endian.
HeaderBytes canonical_header_bytes(const PacketHeader& h) noexcept;
// Throws Error(MalformedBytes) on a short buffer or an unknown kind byte.
PacketHeader parse_header(ByteView bytes);

struct Packet {
    PacketHeader clear_header;
    Bytes sealed_body;

    bool operator==(const Packet&) const = default;
};

// Datagram wire form: clear header followed by the sealed body.
Bytes encode_datagram(const Packet& p);
Packet decode_datagram(ByteView wire);

struct Stamp {
    Bytes token;
    bool operator==(const Stamp&) const = default;
};

struct StampContents {
    Digest header_digest{};
    Tick issued_at = 0;
    std::uint64_t serial = 0;
};

inline constexpr std::size_t kStampPlainBytes = 48;

// digest[32] issued_at[8] serial[8]
std::array<std::uint8_t, kStampPlainBytes> encode_stamp_contents(const StampContents& c) noexcept;
StampContents decode_stamp_contents(ByteView bytes);

struct TransferSpec {
    ClientId client;
    std::uint64_t total_size = 0;
    std::string name;
    Digest content_digest{};
    ServiceCategory service = ServiceCategory::Message;
};

struct PlanEntry {
    PacketHeader header;
    Stamp stamp;
    EndpointId endpoint;
};

struct TransferPlan {
    std::uint64_t plan_id = 0;
    TransferSpec spec;
    std::vector<PlanEntry> entries;
    EndpointId next_endpoint;
    std::vector<bool> received;

    [[nodiscard]] bool complete() const noexcept;
};

// Big-endian helpers shared by every byte layout in the project.
void put_be(Bytes& out, std::uint64_t v, std::size_t width);
std::uint64_t get_be(ByteView in, std::size_t offset, std::size_t width);

std::string to_hex(ByteView bytes);

}  // namespace stampgate
