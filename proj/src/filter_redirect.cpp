#include "stampgate/filter_redirect.hpp"

#include <algorithm>

#include "stampgate/error.hpp"

namespace stampgate {

namespace rf = request_format;

Bytes make_initial_request() {
    Bytes out(rf::kSize, 0);
    std::copy(rf::kMagic.begin(), rf::kMagic.end(), out.begin());
    out[4] = rf::kPhaseInitial;
    return out;
}

Bytes make_signature_request(const Signature& sig) {
    Bytes out(rf::kSize, 0);
    std::copy(rf::kMagic.begin(), rf::kMagic.end(), out.begin());
    out[4] = rf::kPhaseSignature;
    Bytes body;
    put_be(body, sig.issuer, 2);
    put_be(body, sig.serial, 8);
    put_be(body, sig.checksum, 2);
    std::copy(body.begin(), body.end(), out.begin() + rf::kSignatureOffset);
    return out;
}

Tick block_duration(Tick t_fixed, std::uint64_t c, std::uint64_t n) {
    if (n == 0) throw Error(Errc::CapacityZero, "block_duration needs n > 0");
    if (c > n) throw Error(Errc::InvalidArgument, "served count exceeds capacity");
    const unsigned __int128 num = static_cast<unsigned __int128>(t_fixed) * c;
    return static_cast<Tick>((num + n - 1) / n);
}

// --- BlackSignatureList ---------------------------------------------------

std::size_t BlackSignatureList::insert(const Signature& sig) {
    std::size_t pos = 0;
    if (auto it = index_.find(sig); it != index_.end()) {
        pos = it->second;
        ++entries_[pos].count;
    } else {
        pos = entries_.size();
        entries_.push_back(Entry{sig, 1, next_order_++});
        index_.emplace(sig, pos);
    }
    // Bubble up until the (count desc, insertion asc) order holds again.
    auto ahead = [](const Entry& a, const Entry& b) {
        return a.count > b.count || (a.count == b.count && a.inserted < b.inserted);
    };
    while (pos > 0 && ahead(entries_[pos], entries_[pos - 1])) {
        std::swap(entries_[pos], entries_[pos - 1]);
        index_[entries_[pos].signature] = pos;
        index_[entries_[pos - 1].signature] = pos - 1;
        --pos;
    }
    return pos + 1;
}

BlackSignatureList::Probe BlackSignatureList::probe(const Signature& sig) const {
    Probe p;
    const auto depth = std::min(check_depth_, entries_.size());
    for (std::size_t i = 0; i < depth; ++i) {
        ++p.comparisons;
        if (entries_[i].signature == sig) {
            p.rank = i + 1;
            break;
        }
    }
    return p;
}

std::optional<std::size_t> BlackSignatureList::rank_of(const Signature& sig) const {
    if (auto it = index_.find(sig); it != index_.end()) return it->second + 1;
    return std::nullopt;
}

// --- FilterRedirect -------------------------------------------------------

std::string_view to_string(FilterVerdict v) noexcept {
    switch (v) {
        case FilterVerdict::ForwardToTicketEngine: return "ForwardToTicketEngine";
        case FilterVerdict::ReplyPublicKey: return "ReplyPublicKey";
        case FilterVerdict::DropMalformed: return "DropMalformed";
        case FilterVerdict::DropRateLimited: return "DropRateLimited";
        case FilterVerdict::DropBlacklisted: return "DropBlacklisted";
        case FilterVerdict::DropAlreadyAuthenticated: return "DropAlreadyAuthenticated";
    }
    return "Unknown";
}

FilterRedirect::FilterRedirect(FilterConfig config, CostTable costs, LoadProbe load)
    : config_(config), costs_(costs), load_(std::move(load)), blacklist_(config.check_depth) {
    if (!load_) load_ = [] { return LoadSample{}; };
}

FilterOutcome FilterRedirect::drop(FilterVerdict v, Units extra) const {
    FilterOutcome out;
    out.verdict = v;
    out.units = costs_.header_inspect + extra + costs_.drop;
    return out;
}

std::optional<Tick> FilterRedirect::blocked_until(SourceAddr src, Tick now) const {
    auto it = gate_.find(src);
    if (it == gate_.end() || it->second <= now) return std::nullopt;
    return it->second;
}

void FilterRedirect::purge_gate(Tick now) {
    std::erase_if(gate_, [now](const auto& kv) { return kv.second <= now; });
    gate_inserts_since_purge_ = 0;
}

FilterOutcome FilterRedirect::handle_request(ByteView raw, SourceAddr src, Tick now) {
    // (a) fixed size, magic, known phase, zero padding
    if (raw.size() != rf::kSize || !std::equal(rf::kMagic.begin(), rf::kMagic.end(), raw.begin())) {
        return drop(FilterVerdict::DropMalformed);
    }
    const auto phase = raw[4];
    if (phase != rf::kPhaseInitial && phase != rf::kPhaseSignature) {
        return drop(FilterVerdict::DropMalformed);
    }
    const std::size_t padding_from =
        phase == rf::kPhaseInitial ? rf::kSignatureOffset : rf::kSignatureOffset + rf::kSignatureBytes;
    if (std::any_of(raw.begin() + static_cast<std::ptrdiff_t>(padding_from), raw.end(),
                    [](std::uint8_t b) { return b != 0; })) {
        return drop(FilterVerdict::DropMalformed);
    }

    // (b) one processed request per source per window; drops do not refresh it
    if (blocked_until(src, now)) return drop(FilterVerdict::DropRateLimited);
    const auto load = load_();
    const auto n = load.capacity;
    const auto c = std::min(load.served, n);
    const Tick d = block_duration(config_.t_fixed, c, n);
    auto& stat = gate_stats_[{c, n}];
    stat.duration = d;
    ++stat.times;
    if (d > 0) {
        gate_[src] = now + d;
        if (++gate_inserts_since_purge_ >= 4096) purge_gate(now);
    }

    // (c)
    if (pending_.contains(src) || authenticated_.contains(src)) {
        return drop(FilterVerdict::DropAlreadyAuthenticated);
    }

    // (d)
    if (phase == rf::kPhaseInitial) {
        FilterOutcome out;
        out.verdict = FilterVerdict::ReplyPublicKey;
        out.units = costs_.header_inspect + costs_.key_reply;
        return out;
    }

    // (e)
    Signature sig;
    sig.issuer = static_cast<std::uint16_t>(get_be(raw, rf::kSignatureOffset, 2));
    sig.serial = get_be(raw, rf::kSignatureOffset + 2, 8);
    sig.checksum = static_cast<std::uint16_t>(get_be(raw, rf::kSignatureOffset + 10, 2));
    if (!is_well_formed(sig)) return drop(FilterVerdict::DropMalformed);

    // (f)
    const auto probe = blacklist_.probe(sig);
    const Units probe_units = costs_.blacklist_probe * probe.comparisons;
    if (probe.rank) {
        auto out = drop(FilterVerdict::DropBlacklisted, probe_units);
        out.blacklist_rank = *probe.rank;
        out.comparisons = probe.comparisons;
        out.signature = sig;
        return out;
    }

    // (g)
    pending_.insert(src);
    FilterOutcome out;
    out.verdict = FilterVerdict::ForwardToTicketEngine;
    out.signature = sig;
    out.comparisons = probe.comparisons;
    out.units = costs_.header_inspect + probe_units;
    return out;
}

DispatchRecord FilterRedirect::on_authenticated(ClientId client, SourceAddr src,
                                                const crypto::MasterKey& master,
                                                const crypto::MasterKey& client_pki, EndpointId next) {
    if (pending_.erase(src) == 0) {
        throw Error(Errc::UnknownSource, "no pending authentication for source");
    }
    authenticated_.insert(src);
    const auto pki_key = crypto::derive_key(client_pki, 0, client.value);
    return DispatchRecord{client, src, crypto::seal(pki_key, master.bytes), next};
}

void FilterRedirect::on_rejected(SourceAddr src) { pending_.erase(src); }

}  // namespace stampgate
