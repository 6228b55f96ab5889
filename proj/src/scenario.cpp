#include "packsim/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace packsim {

const char* to_string(Routing r) { return r == Routing::Aodv ? "aodv" : "part"; }

const char* to_string(TcpVariant v) {
    switch (v) {
        case TcpVariant::Tahoe: return "tahoe";
        case TcpVariant::Reno: return "reno";
        case TcpVariant::NewReno: return "newreno";
        case TcpVariant::Vegas: return "vegas";
        case TcpVariant::Westwood: return "westwood";
    }
    return "?";
}

TcpVariant variant_from_string(const std::string& s) {
    if (s == "tahoe") return TcpVariant::Tahoe;
    if (s == "reno") return TcpVariant::Reno;
    if (s == "newreno") return TcpVariant::NewReno;
    if (s == "vegas") return TcpVariant::Vegas;
    if (s == "westwood") return TcpVariant::Westwood;
    throw ConfigError("unknown tcp variant: " + s);
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double num(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a number: '" + v + "'");
    }
}

int inum(const std::string& key, const std::string& v) {
    double d = num(key, v);
    int i = int(d);
    if (double(i) != d) throw ConfigError("key '" + key + "': not an integer: '" + v + "'");
    return i;
}

bool boolean(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("key '" + key + "': not a boolean (on/off): '" + v + "'");
}

std::string fmt_num(double d) {
    char buf[64];
    if (d == int64_t(d) && std::abs(d) < 1e15)
        std::snprintf(buf, sizeof buf, "%lld", (long long)d);
    else
        std::snprintf(buf, sizeof buf, "%.9g", d);
    return buf;
}

} // namespace

void Scenario::set(const std::string& key, const std::string& v) {
    using Setter = std::function<void(Scenario&, const std::string&, const std::string&)>;
    static const std::map<std::string, Setter> table = {
        {"name", [](Scenario& s, const std::string&, const std::string& v) { s.name = v; }},
        {"duration_s", [](Scenario& s, const std::string& k, const std::string& v) { s.duration_s = num(k, v); }},
        {"seed", [](Scenario& s, const std::string& k, const std::string& v) { s.seed = uint64_t(num(k, v)); }},
        {"routing", [](Scenario& s, const std::string&, const std::string& v) {
             if (v == "aodv") s.routing = Routing::Aodv;
             else if (v == "part") s.routing = Routing::Part;
             else throw ConfigError("routing must be aodv|part, got '" + v + "'");
         }},
        {"pack", [](Scenario& s, const std::string& k, const std::string& v) { s.pack = boolean(k, v); }},
        {"variant", [](Scenario& s, const std::string&, const std::string& v) { s.variant = variant_from_string(v); }},
        {"area.width_m", [](Scenario& s, const std::string& k, const std::string& v) { s.area_w = num(k, v); }},
        {"area.height_m", [](Scenario& s, const std::string& k, const std::string& v) { s.area_h = num(k, v); }},
        {"nodes.layout", [](Scenario& s, const std::string&, const std::string& v) {
             if (v == "grid") s.layout = Layout::Grid;
             else if (v == "random") s.layout = Layout::Random;
             else throw ConfigError("nodes.layout must be grid|random, got '" + v + "'");
         }},
        {"nodes.count", [](Scenario& s, const std::string& k, const std::string& v) { s.count = inum(k, v); }},
        {"nodes.grid_rows", [](Scenario& s, const std::string& k, const std::string& v) { s.grid_rows = inum(k, v); }},
        {"nodes.grid_cols", [](Scenario& s, const std::string& k, const std::string& v) { s.grid_cols = inum(k, v); }},
        {"nodes.grid_spacing_m", [](Scenario& s, const std::string& k, const std::string& v) { s.grid_spacing = num(k, v); }},
        {"radio.range_m", [](Scenario& s, const std::string& k, const std::string& v) { s.range_m = num(k, v); }},
        {"radio.link_rate_bps", [](Scenario& s, const std::string& k, const std::string& v) { s.link_rate_bps = num(k, v); }},
        {"radio.mac_retries", [](Scenario& s, const std::string& k, const std::string& v) { s.mac_retries = inum(k, v); }},
        {"radio.mac_header_bytes", [](Scenario& s, const std::string& k, const std::string& v) { s.mac_header_bytes = inum(k, v); }},
        {"radio.mac_queue_cap", [](Scenario& s, const std::string& k, const std::string& v) { s.mac_queue_cap = inum(k, v); }},
        {"radio.slot_us", [](Scenario& s, const std::string& k, const std::string& v) { s.slot_us = num(k, v); }},
        {"radio.cw_min", [](Scenario& s, const std::string& k, const std::string& v) { s.cw_min = inum(k, v); }},
        {"radio.cw_max", [](Scenario& s, const std::string& k, const std::string& v) { s.cw_max = inum(k, v); }},
        {"radio.ack_timeout_us", [](Scenario& s, const std::string& k, const std::string& v) { s.ack_timeout_us = num(k, v); }},
        {"radio.difs_us", [](Scenario& s, const std::string& k, const std::string& v) { s.difs_us = num(k, v); }},
        {"mobility.model", [](Scenario& s, const std::string&, const std::string& v) {
             if (v == "static") s.mobility = MobilityModel::Static;
             else if (v == "rwp") s.mobility = MobilityModel::Rwp;
             else throw ConfigError("mobility.model must be static|rwp, got '" + v + "'");
         }},
        {"mobility.v_min_mps", [](Scenario& s, const std::string& k, const std::string& v) { s.v_min = num(k, v); }},
        {"mobility.v_max_mps", [](Scenario& s, const std::string& k, const std::string& v) { s.v_max = num(k, v); }},
        {"mobility.pause_s", [](Scenario& s, const std::string& k, const std::string& v) { s.pause_s = num(k, v); }},
        {"aodv.rreq_retries", [](Scenario& s, const std::string& k, const std::string& v) { s.rreq_retries = inum(k, v); }},
        {"aodv.rreq_ttl", [](Scenario& s, const std::string& k, const std::string& v) { s.rreq_ttl = inum(k, v); }},
        {"aodv.route_lifetime_s", [](Scenario& s, const std::string& k, const std::string& v) { s.route_lifetime_s = num(k, v); }},
        {"aodv.discovery_timeout_s", [](Scenario& s, const std::string& k, const std::string& v) { s.discovery_timeout_s = num(k, v); }},
        {"aodv.bcast_jitter_ms", [](Scenario& s, const std::string& k, const std::string& v) { s.bcast_jitter_ms = num(k, v); }},
        {"part.min_allowable_hc", [](Scenario& s, const std::string& k, const std::string& v) { s.min_allowable_hc = inum(k, v); }},
        {"part.phc_rounding", [](Scenario& s, const std::string&, const std::string& v) {
             if (v == "ceil") s.phc_rounding = PhcRounding::Ceil;
             else if (v == "floor") s.phc_rounding = PhcRounding::Floor;
             else throw ConfigError("part.phc_rounding must be ceil|floor, got '" + v + "'");
         }},
        {"part.repair_ttl", [](Scenario& s, const std::string& k, const std::string& v) { s.repair_ttl = inum(k, v); }},
        {"part.repair_timeout_s", [](Scenario& s, const std::string& k, const std::string& v) { s.repair_timeout_s = num(k, v); }},
        {"part.proxy_error_window_s", [](Scenario& s, const std::string& k, const std::string& v) { s.proxy_error_window_s = num(k, v); }},
        {"part.proxy_error_threshold", [](Scenario& s, const std::string& k, const std::string& v) { s.proxy_error_threshold = inum(k, v); }},
        {"part.source_fallback_rto_mult", [](Scenario& s, const std::string& k, const std::string& v) { s.source_fallback_rto_mult = num(k, v); }},
        {"tcp.mss_bytes", [](Scenario& s, const std::string& k, const std::string& v) { s.mss_bytes = inum(k, v); }},
        {"tcp.init_ssthresh_bytes", [](Scenario& s, const std::string& k, const std::string& v) { s.init_ssthresh_bytes = inum(k, v); }},
        {"tcp.ack_bytes", [](Scenario& s, const std::string& k, const std::string& v) { s.ack_bytes = inum(k, v); }},
        {"tcp.rto_min_ms", [](Scenario& s, const std::string& k, const std::string& v) { s.rto_min_ms = num(k, v); }},
        {"tcp.rto_max_s", [](Scenario& s, const std::string& k, const std::string& v) { s.rto_max_s = num(k, v); }},
        {"tcp.vegas_alpha", [](Scenario& s, const std::string& k, const std::string& v) { s.vegas_alpha = num(k, v); }},
        {"tcp.vegas_beta", [](Scenario& s, const std::string& k, const std::string& v) { s.vegas_beta = num(k, v); }},
        {"tcp.ww_filter_gain", [](Scenario& s, const std::string& k, const std::string& v) { s.ww_filter_gain = num(k, v); }},
    };

    if (key == "flow") {
        std::istringstream in(v);
        FlowSpec f;
        long src, dst;
        if (!(in >> src >> dst >> f.start_s))
            throw ConfigError("flow entry must be '<src> <dst> <start_s>', got '" + v + "'");
        std::string rest;
        if (in >> rest) throw ConfigError("flow entry has trailing tokens: '" + v + "'");
        f.src = NodeId(src);
        f.dst = NodeId(dst);
        flows.push_back(f);
        return;
    }
    if (key == "flows.clear") { // used by overrides to replace the flow list
        flows.clear();
        return;
    }
    auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown scenario key: '" + key + "'");
    it->second(*this, key, v);
}

void Scenario::validate() const {
    if (pack && routing != Routing::Part)
        throw ConfigError("pack=on requires routing=part");
    if (duration_s <= 0) throw ConfigError("duration_s must be positive");
    if (node_count() <= 0) throw ConfigError("node count must be positive");
    if (layout == Layout::Random && count <= 0)
        throw ConfigError("nodes.count required for random layout");
    if (layout == Layout::Grid) {
        if (grid_rows < 1 || grid_cols < 1) throw ConfigError("grid dimensions must be >= 1");
        if ((grid_cols - 1) * grid_spacing > area_w || (grid_rows - 1) * grid_spacing > area_h)
            throw ConfigError("grid exceeds area bounds");
    }
    if (range_m <= 0 || link_rate_bps <= 0) throw ConfigError("radio parameters must be positive");
    if (mobility == MobilityModel::Rwp && v_max < v_min)
        throw ConfigError("mobility.v_max_mps < mobility.v_min_mps");
    if (mss_bytes <= 0) throw ConfigError("tcp.mss_bytes must be positive");
    for (const auto& f : flows) {
        if (f.src < 0 || f.src >= node_count() || f.dst < 0 || f.dst >= node_count())
            throw ConfigError("flow endpoint out of range");
        if (f.src == f.dst) throw ConfigError("flow src == dst");
        if (f.start_s < 0 || f.start_s > duration_s)
            throw ConfigError("flow start outside run duration");
    }
}

std::string Scenario::dump() const {
    std::ostringstream o;
    o << "name = " << name << "\n";
    o << "duration_s = " << fmt_num(duration_s) << "\n";
    o << "seed = " << seed << "\n";
    o << "routing = " << to_string(routing) << "\n";
    o << "pack = " << (pack ? "on" : "off") << "\n";
    o << "variant = " << to_string(variant) << "\n";
    o << "area.width_m = " << fmt_num(area_w) << "\n";
    o << "area.height_m = " << fmt_num(area_h) << "\n";
    o << "nodes.layout = " << (layout == Layout::Grid ? "grid" : "random") << "\n";
    o << "nodes.count = " << count << "\n";
    o << "nodes.grid_rows = " << grid_rows << "\n";
    o << "nodes.grid_cols = " << grid_cols << "\n";
    o << "nodes.grid_spacing_m = " << fmt_num(grid_spacing) << "\n";
    o << "radio.range_m = " << fmt_num(range_m) << "\n";
    o << "radio.link_rate_bps = " << fmt_num(link_rate_bps) << "\n";
    o << "radio.mac_retries = " << mac_retries << "\n";
    o << "radio.mac_header_bytes = " << mac_header_bytes << "\n";
    o << "radio.mac_queue_cap = " << mac_queue_cap << "\n";
    o << "radio.slot_us = " << fmt_num(slot_us) << "\n";
    o << "radio.cw_min = " << cw_min << "\n";
    o << "radio.cw_max = " << cw_max << "\n";
    o << "radio.ack_timeout_us = " << fmt_num(ack_timeout_us) << "\n";
    o << "radio.difs_us = " << fmt_num(difs_us) << "\n";
    o << "mobility.model = " << (mobility == MobilityModel::Static ? "static" : "rwp") << "\n";
    o << "mobility.v_min_mps = " << fmt_num(v_min) << "\n";
    o << "mobility.v_max_mps = " << fmt_num(v_max) << "\n";
    o << "mobility.pause_s = " << fmt_num(pause_s) << "\n";
    o << "aodv.rreq_retries = " << rreq_retries << "\n";
    o << "aodv.rreq_ttl = " << rreq_ttl << "\n";
    o << "aodv.route_lifetime_s = " << fmt_num(route_lifetime_s) << "\n";
    o << "aodv.discovery_timeout_s = " << fmt_num(discovery_timeout_s) << "\n";
    o << "aodv.bcast_jitter_ms = " << fmt_num(bcast_jitter_ms) << "\n";
    o << "part.min_allowable_hc = " << min_allowable_hc << "\n";
    o << "part.phc_rounding = " << (phc_rounding == PhcRounding::Ceil ? "ceil" : "floor") << "\n";
    o << "part.repair_ttl = " << repair_ttl << "\n";
    o << "part.repair_timeout_s = " << fmt_num(repair_timeout_s) << "\n";
    o << "part.proxy_error_window_s = " << fmt_num(proxy_error_window_s) << "\n";
    o << "part.proxy_error_threshold = " << proxy_error_threshold << "\n";
    o << "part.source_fallback_rto_mult = " << fmt_num(source_fallback_rto_mult) << "\n";
    o << "tcp.mss_bytes = " << mss_bytes << "\n";
    o << "tcp.init_ssthresh_bytes = " << init_ssthresh_bytes << "\n";
    o << "tcp.ack_bytes = " << ack_bytes << "\n";
    o << "tcp.rto_min_ms = " << fmt_num(rto_min_ms) << "\n";
    o << "tcp.rto_max_s = " << fmt_num(rto_max_s) << "\n";
    o << "tcp.vegas_alpha = " << fmt_num(vegas_alpha) << "\n";
    o << "tcp.vegas_beta = " << fmt_num(vegas_beta) << "\n";
    o << "tcp.ww_filter_gain = " << fmt_num(ww_filter_gain) << "\n";
    for (const auto& f : flows)
        o << "flow = " << f.src << " " << f.dst << " " << fmt_num(f.start_s) << "\n";
    return o.str();
}

Scenario load_scenario_text(const std::string& text, const std::string& origin) {
    Scenario s;
    s.flows.clear();
    std::istringstream in(text);
    std::string raw, section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string l = trim(raw);
        size_t hash = l.find('#');
        if (hash != std::string::npos) l = trim(l.substr(0, hash));
        if (l.empty()) continue;
        if (l.front() == '[') {
            if (l.back() != ']') throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(l.substr(1, l.size() - 2));
            continue;
        }
        size_t eq = l.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(l.substr(0, eq));
        std::string val = trim(l.substr(eq + 1));
        // flow lines live in [flows] without a dotted prefix
        if (!section.empty() && section != "flows") key = section + "." + key;
        try {
            s.set(key, val);
        } catch (const ConfigError& e) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return load_scenario_text(buf.str(), path);
}

} // namespace packsim
