// Packet model: MAC frame > routing packet > TCP segment.
// Segments are indexed units (seqno counts segments, starting at 1),
// not byte ranges.
#ifndef PACKSIM_PACKET_HPP
#define PACKSIM_PACKET_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "packsim/time.hpp"

namespace packsim {

using NodeId = int32_t;
using FlowId = int32_t;
using Seqno = int64_t; // 0 = none

constexpr NodeId broadcast_addr = -1;
constexpr NodeId no_node = -2;

struct TcpSegment {
    FlowId flow = -1;
    Seqno seqno = 0;      // data: >= 1; pure ack: 0
    Seqno ack_no = 0;     // highest in-order segment received at the sink
    bool is_ack = false;
    Seqno miss_seqno = 0; // PACK fields, 0 when unset
    int num_miss = 0;
    SimTime sent_at{};    // time of this transmission
    int size_bytes = 0;
};

// Routing envelope for TCP segments travelling hop by hop.
struct DataPacket {
    NodeId src = no_node; // connection endpoints
    NodeId dst = no_node;
    TcpSegment seg;
};

struct RreqPacket {
    NodeId origin = no_node;
    NodeId dest = no_node;
    uint32_t bcast_id = 0;
    int hop_count = 0; // hops travelled from the flooding node
    int ttl = 0;
    uint32_t dest_seq_known = 0;
    bool is_repair = false; // scoped local-repair flood (PART)
    NodeId repairer = no_node;
};

struct RrepPacket {
    NodeId origin = no_node; // node the reply travels to
    NodeId dest = no_node;   // route destination (the replying node)
    int hop_count = 0;       // hops travelled from dest, increases per hop
    int phc = 0;             // proxy hop count; 0 = no proxy (plain AODV)
    uint32_t dest_seq = 0;
    FlowId flow = -1;
    bool is_repair = false;
};

struct RerrPacket {
    std::vector<NodeId> unreachable;
    bool reset_flag = false;   // only ever set by a proxy node
    FlowId reset_flow = -1;
    NodeId reset_target = no_node; // TCP source the reset is for
};

struct PackPacket {
    FlowId flow = -1;
    Seqno miss_seqno = 0;
    int num_miss = 0;
    NodeId toward = no_node; // the TCP source
    NodeId proxy = no_node;
};

struct OhpackPacket { // one-hop broadcast, never forwarded
    FlowId flow = -1;
    Seqno miss_seqno = 0;
    int num_miss = 0;
    NodeId proxy = no_node;
};

struct MacAckPacket {
    uint32_t frame_seq = 0;
};

using Packet = std::variant<DataPacket, RreqPacket, RrepPacket, RerrPacket,
                            PackPacket, OhpackPacket, MacAckPacket>;

// wire sizes (bytes) of the routing-layer headers
constexpr int rreq_bytes = 48;
constexpr int rrep_bytes = 44;
constexpr int rerr_base_bytes = 20;
constexpr int pack_bytes = 28;
constexpr int ohpack_bytes = 28;
constexpr int mac_ack_bytes = 14;

int packet_bytes(const Packet& p);
const char* packet_kind(const Packet& p);

struct Frame {
    NodeId src_mac = no_node;
    NodeId dst_mac = broadcast_addr;
    uint32_t frame_seq = 0;
    int bytes = 0; // payload only; MAC header is added to airtime
    Packet payload;
};

} // namespace packsim

#endif
