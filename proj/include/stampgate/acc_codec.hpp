#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stampgate/core_model.hpp"
#include "stampgate/crypto_kit.hpp"

namespace stampgate::acc {

// Sealed body plaintexts:
//   Data:    inner_header[23] ‖ stamp_token[88] ‖ payload[payload_len]
//   Control: inner_header[23] ‖ op[1] ‖ op-specific bytes
// TransferRequest bytes: total_size[8] service[1] digest[32] name_len[2] name
enum class ControlOp : std::uint8_t { TransferRequest = 1, NextEndpointRequest = 2 };

// Data key: derive(master, seq, plan_id). Control key: derive(master, seq, client).
crypto::DynamicKey data_key(const crypto::MasterKey& master, const PacketHeader& h);
crypto::DynamicKey control_key(const crypto::MasterKey& master, ClientId client, std::uint32_t seq);
// Server-to-client replies for control seq use a counter outside the u32 seq space.
crypto::DynamicKey reply_key(const crypto::MasterKey& master, ClientId client, std::uint32_t seq);

Packet seal_data_packet(const PlanEntry& entry, const crypto::MasterKey& master, ByteView payload);

struct DataBody {
    PacketHeader inner;
    Stamp stamp;
    Bytes payload;
};
std::optional<DataBody> parse_data_body(ByteView plain);

PacketHeader control_header(ClientId client, SourceAddr src, EndpointId endpoint, std::uint32_t seq);
Packet seal_transfer_request(ClientId client, SourceAddr src, EndpointId endpoint, std::uint32_t seq,
                             const TransferSpec& spec, const crypto::MasterKey& master);
Packet seal_next_endpoint_request(ClientId client, SourceAddr src, EndpointId endpoint, std::uint32_t seq,
                                  const crypto::MasterKey& master);

struct ControlBody {
    PacketHeader inner;
    ControlOp op = ControlOp::TransferRequest;
    std::optional<TransferSpec> spec;
};
std::optional<ControlBody> parse_control_body(ByteView plain, ClientId client);

// What a client learns from a plan delivery.
struct ClientPlan {
    std::uint64_t plan_id = 0;
    EndpointId next_endpoint;
    std::vector<PlanEntry> entries;
};

// plan_id[8] next_endpoint[2] count[4] { header[23] endpoint[2] stamp[88] }*
Bytes encode_plan_delivery(const TransferPlan& plan);
std::optional<ClientPlan> decode_plan_delivery(ByteView plain);

}  // namespace stampgate::acc
