#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "stampgate/core_model.hpp"
#include "stampgate/cost_table.hpp"
#include "stampgate/crypto_kit.hpp"

namespace stampgate {

// Unauthenticated request layout: exactly 256 bytes,
//   magic[4] = "HACS", phase[1], payload, zero padding.
// Phase 1 payload is issuer[2] serial[8] checksum[2].
namespace request_format {
inline constexpr std::size_t kSize = 256;
inline constexpr std::array<std::uint8_t, 4> kMagic{0x48, 0x41, 0x43, 0x53};
inline constexpr std::uint8_t kPhaseInitial = 0;
inline constexpr std::uint8_t kPhaseSignature = 1;
inline constexpr std::size_t kSignatureOffset = 5;
inline constexpr std::size_t kSignatureBytes = 12;
}  // namespace request_format

Bytes make_initial_request();
Bytes make_signature_request(const Signature& sig);

// ceil(t_fixed * c / n). Throws Error(CapacityZero) when n == 0 and
// Error(InvalidArgument) when c > n.
Tick block_duration(Tick t_fixed, std::uint64_t c, std::uint64_t n);

// Invalid signatures ordered by spoof count, highest first; equal counts keep
// insertion order. Only the first check_depth entries are ever probed.
class BlackSignatureList {
public:
    struct Entry {
        Signature signature;
        std::uint64_t count = 0;
        std::uint64_t inserted = 0;
    };

    struct Probe {
        std::optional<std::size_t> rank;  // 1-based
        std::size_t comparisons = 0;
    };

    explicit BlackSignatureList(std::size_t check_depth = 64) : check_depth_(check_depth) {}

    // Increments (or creates) the entry and returns its new 1-based rank.
    std::size_t insert(const Signature& sig);

    [[nodiscard]] Probe probe(const Signature& sig) const;
    [[nodiscard]] std::optional<std::size_t> rank_of(const Signature& sig) const;
    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::size_t check_depth() const noexcept { return check_depth_; }

private:
    std::size_t check_depth_;
    std::uint64_t next_order_ = 0;
    std::vector<Entry> entries_;
    std::map<Signature, std::size_t> index_;
};

enum class FilterVerdict {
    ForwardToTicketEngine,
    ReplyPublicKey,
    DropMalformed,
    DropRateLimited,
    DropBlacklisted,
    DropAlreadyAuthenticated,
};

std::string_view to_string(FilterVerdict v) noexcept;

struct FilterOutcome {
    FilterVerdict verdict = FilterVerdict::DropMalformed;
    std::optional<Signature> signature;
    std::size_t blacklist_rank = 0;
    std::size_t comparisons = 0;
    Units units = 0;
};

struct LoadSample {
    std::uint64_t served = 0;
    std::uint64_t capacity = 1;
};

struct FilterConfig {
    std::size_t check_depth = 64;
    Tick t_fixed = 10;
};

// Sent to a freshly authenticated client over the CA channel.
struct DispatchRecord {
    ClientId client;
    SourceAddr source;
    Bytes sealed_master;
    EndpointId next_endpoint;
};

// One row per distinct (c, n) pair that set a source gate.
struct GateStat {
    Tick duration = 0;
    std::uint64_t times = 0;
};

class FilterRedirect {
public:
    using LoadProbe = std::function<LoadSample()>;

    FilterRedirect(FilterConfig config, CostTable costs, LoadProbe load);

    FilterOutcome handle_request(ByteView raw, SourceAddr src, Tick now);

    std::size_t blacklist_insert(const Signature& sig) { return blacklist_.insert(sig); }

    // Throws Error(UnknownSource) when src has no pending authentication.
    DispatchRecord on_authenticated(ClientId client, SourceAddr src, const crypto::MasterKey& master,
                                    const crypto::MasterKey& client_pki, EndpointId next);
    // The ticket engine rejected src's signature; it may submit a renewed one.
    void on_rejected(SourceAddr src);

    [[nodiscard]] bool is_authenticated(SourceAddr src) const { return authenticated_.contains(src); }
    [[nodiscard]] bool is_pending(SourceAddr src) const { return pending_.contains(src); }
    [[nodiscard]] const BlackSignatureList& blacklist() const noexcept { return blacklist_; }
    [[nodiscard]] const std::map<std::pair<std::uint64_t, std::uint64_t>, GateStat>& gate_stats() const noexcept {
        return gate_stats_;
    }
    [[nodiscard]] const FilterConfig& config() const noexcept { return config_; }
    [[nodiscard]] std::optional<Tick> blocked_until(SourceAddr src, Tick now) const;

private:
    FilterOutcome drop(FilterVerdict v, Units extra = 0) const;
    void purge_gate(Tick now);

    FilterConfig config_;
    CostTable costs_;
    LoadProbe load_;
    BlackSignatureList blacklist_;
    std::map<SourceAddr, Tick> gate_;
    std::set<SourceAddr> pending_;
    std::set<SourceAddr> authenticated_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, GateStat> gate_stats_;
    std::size_t gate_inserts_since_purge_ = 0;
};

}  // namespace stampgate
