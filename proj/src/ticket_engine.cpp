#include "stampgate/ticket_engine.hpp"

#include "stampgate/error.hpp"

namespace stampgate {

std::optional<crypto::MasterKey> SivRegistry::validate(const Signature& sig) {
    ++calls_;
    if (auto it = valid_.find(sig); it != valid_.end()) return it->second;
    return std::nullopt;
}

TicketEngine::TicketEngine(SivRegistry& siv, ServicePolicy policy, FilterRedirect& filter,
                           EndpointDirector& director, std::uint64_t key_seed)
    : siv_(siv), policy_(std::move(policy)), filter_(filter), director_(director), key_seed_(key_seed) {}

AuthOutcome TicketEngine::authenticate(const Signature& sig, SourceAddr src, Tick now) {
    const auto holder_key = siv_.validate(sig);
    if (!holder_key) {
        ++counters_.invalid;
        ++counters_.renewal_requests;
        const auto rank = filter_.blacklist_insert(sig);
        filter_.on_rejected(src);
        return AuthInvalid{rank};
    }

    auto row = policy_.by_issuer.find(sig.issuer);
    if (row == policy_.by_issuer.end() || row->second.empty()) {
        throw Error(Errc::ConfigInvalid, "issuer " + std::to_string(sig.issuer) + " has no service policy");
    }

    const std::uint64_t index = next_client_++;
    const ClientId client{kClientIdTag | index};
    Ticket ticket{client, row->second, now, now + policy_.ticket_lifetime};
    auto master = crypto::master_key_from_seed(key_seed_, index);

    const auto endpoint = director_.register_client(client, src, now);
    ++counters_.director_registrations;
    auto dispatch = filter_.on_authenticated(client, src, master, *holder_key, endpoint);
    ++counters_.filter_notifications;
    ++counters_.issued;
    return AuthIssued{ticket, master, std::move(dispatch), endpoint};
}

}  // namespace stampgate
