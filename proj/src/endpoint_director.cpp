#include "stampgate/endpoint_director.hpp"

#include <algorithm>

#include "stampgate/error.hpp"

namespace stampgate {

EndpointDirector::EndpointDirector(std::uint16_t endpoint_count, Tick session_lifetime)
    : endpoint_count_(endpoint_count), session_lifetime_(session_lifetime), load_(endpoint_count, 0) {
    if (endpoint_count == 0) throw Error(Errc::InvalidArgument, "endpoint count must be >= 1");
}

EndpointId EndpointDirector::least_loaded() const {
    const auto it = std::min_element(load_.begin(), load_.end());
    return EndpointId{static_cast<std::uint16_t>(it - load_.begin())};
}

void EndpointDirector::add(const Expectation& e) { ++load_[e.endpoint.index]; }

EndpointId EndpointDirector::register_client(ClientId client, SourceAddr src, Tick now) {
    expire(now);
    revoke_client(client);
    const auto endpoint = least_loaded();
    const Tick expires = now + session_lifetime_;
    Expectation e{endpoint, src, client, SessionScope{}, expires};
    sessions_[client] = e;
    session_expiry_[client] = expires;
    add(e);
    return endpoint;
}

EndpointId EndpointDirector::assign_endpoint(std::uint64_t plan_id, std::uint32_t seq, SourceAddr src,
                                             ClientId client, Tick now) {
    expire(now);
    auto session = sessions_.find(client);
    if (session == sessions_.end()) throw Error(Errc::UnknownClient, "no live session for client");
    const auto key = std::make_pair(plan_id, seq);
    if (auto old = packets_.find(key); old != packets_.end()) {
        --load_[old->second.endpoint.index];
        packets_.erase(old);
    }
    const auto endpoint = least_loaded();
    Expectation e{endpoint, src, client, PacketScope{plan_id, seq}, session->second.expires_at};
    packets_[key] = e;
    packets_by_client_[client].push_back(key);
    add(e);
    return endpoint;
}

EndpointId EndpointDirector::next_endpoint(ClientId client, Tick now) {
    expire(now);
    auto session = sessions_.find(client);
    if (session == sessions_.end()) throw Error(Errc::UnknownClient, "no live session for client");
    --load_[session->second.endpoint.index];
    const auto endpoint = least_loaded();
    session->second.endpoint = endpoint;
    add(session->second);
    return endpoint;
}

bool EndpointDirector::is_expected(EndpointId endpoint, SourceAddr src, const HeaderSummary& summary,
                                   Tick now) const {
    if (summary.kind == PacketKind::Control) {
        auto it = sessions_.find(ClientId{summary.plan_id});
        return it != sessions_.end() && it->second.expires_at > now && it->second.endpoint == endpoint &&
               it->second.source == src;
    }
    auto it = packets_.find({summary.plan_id, summary.seq});
    return it != packets_.end() && it->second.expires_at > now && it->second.endpoint == endpoint;
}

void EndpointDirector::revoke_client(ClientId client) {
    if (auto s = sessions_.find(client); s != sessions_.end()) {
        --load_[s->second.endpoint.index];
        sessions_.erase(s);
    }
    session_expiry_.erase(client);
    if (auto list = packets_by_client_.find(client); list != packets_by_client_.end()) {
        for (const auto& key : list->second) {
            if (auto p = packets_.find(key); p != packets_.end() && p->second.client == client) {
                --load_[p->second.endpoint.index];
                packets_.erase(p);
            }
        }
        packets_by_client_.erase(list);
    }
}

void EndpointDirector::expire(Tick now) {
    std::vector<ClientId> due;
    for (const auto& [client, expires] : session_expiry_) {
        if (expires <= now) due.push_back(client);
    }
    for (auto client : due) revoke_client(client);
}

std::vector<std::uint64_t> EndpointDirector::loads(Tick now) {
    expire(now);
    return load_;
}

std::uint64_t EndpointDirector::live_sessions(Tick now) {
    expire(now);
    return sessions_.size();
}

std::optional<Expectation> EndpointDirector::session_of(ClientId client, Tick now) const {
    auto it = sessions_.find(client);
    if (it == sessions_.end() || it->second.expires_at <= now) return std::nullopt;
    return it->second;
}

std::optional<Expectation> EndpointDirector::packet_expectation(std::uint64_t plan_id, std::uint32_t seq,
                                                                Tick now) const {
    auto it = packets_.find({plan_id, seq});
    if (it == packets_.end() || it->second.expires_at <= now) return std::nullopt;
    return it->second;
}

std::optional<Tick> EndpointDirector::session_expiry(ClientId client) const {
    auto it = session_expiry_.find(client);
    if (it == session_expiry_.end()) return std::nullopt;
    return it->second;
}

}  // namespace stampgate
