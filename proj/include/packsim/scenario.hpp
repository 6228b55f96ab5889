// Scenario definition and the key-value scenario file format.
#ifndef PACKSIM_SCENARIO_HPP
#define PACKSIM_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "packsim/packet.hpp"
#include "packsim/time.hpp"

namespace packsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Routing { Aodv, Part };
enum class TcpVariant { Tahoe, Reno, NewReno, Vegas, Westwood };
enum class MobilityModel { Static, Rwp };
enum class Layout { Grid, Random };
enum class PhcRounding { Ceil, Floor };

const char* to_string(Routing r);
const char* to_string(TcpVariant v);
TcpVariant variant_from_string(const std::string& s);

struct FlowSpec {
    NodeId src = no_node;
    NodeId dst = no_node;
    double start_s = 0;
};

struct Scenario {
    std::string name = "unnamed";
    double duration_s = 360;
    uint64_t seed = 1;
    Routing routing = Routing::Aodv;
    bool pack = false; // pack requires routing = part
    TcpVariant variant = TcpVariant::NewReno;

    // [area]
    double area_w = 6000, area_h = 2000;

    // [nodes]
    Layout layout = Layout::Grid;
    int count = 0; // random layout; grid derives rows*cols
    int grid_rows = 7, grid_cols = 7;
    double grid_spacing = 200;

    // [radio]
    double range_m = 250;
    double link_rate_bps = 2e6;
    int mac_retries = 4;
    int mac_header_bytes = 34;
    int mac_queue_cap = 50;
    double slot_us = 20;
    int cw_min = 32, cw_max = 1024;
    double ack_timeout_us = 400;
    double difs_us = 50;

    // [mobility]
    MobilityModel mobility = MobilityModel::Static;
    double v_min = 1, v_max = 20;
    double pause_s = 100;

    // [aodv]
    int rreq_retries = 3;
    int rreq_ttl = 16;
    double route_lifetime_s = 10;
    double discovery_timeout_s = 1.0;
    double bcast_jitter_ms = 10;

    // [part]
    int min_allowable_hc = 3;
    PhcRounding phc_rounding = PhcRounding::Ceil;
    int repair_ttl = 3;
    double repair_timeout_s = 0.5;
    double proxy_error_window_s = 2.0;
    int proxy_error_threshold = 3; // resign when MORE than this many errors in window
    double source_fallback_rto_mult = 2.0;

    // [tcp]
    int mss_bytes = 1000;
    int init_ssthresh_bytes = 65536;
    int ack_bytes = 40;
    double rto_min_ms = 200;
    double rto_max_s = 60;
    double vegas_alpha = 2, vegas_beta = 4;
    double ww_filter_gain = 0.1;

    // [flows]
    std::vector<FlowSpec> flows;

    int node_count() const {
        return layout == Layout::Grid ? grid_rows * grid_cols : count;
    }
    SimTime duration() const { return seconds(duration_s); }

    // throws ConfigError on any violated constraint
    void validate() const;

    // canonical flat key=value text; load_scenario_text(dump()) round-trips
    std::string dump() const;

    // applies one "dotted.key=value" override
    void set(const std::string& key, const std::string& value);
};

Scenario load_scenario(const std::string& path);
Scenario load_scenario_text(const std::string& text, const std::string& origin = "<text>");

} // namespace packsim

#endif
