// Event trace: one line per event, versioned header carrying the fully
// resolved scenario so any trace can be replayed bit-exactly.
#ifndef PACKSIM_TRACE_HPP
#define PACKSIM_TRACE_HPP

#include <cstdarg>
#include <cstdio>
#include <string>

#include "packsim/packet.hpp"
#include "packsim/time.hpp"

namespace packsim {

constexpr const char* trace_format_version = "packsim-trace v1";

class Tracer {
public:
    Tracer() = default;
    ~Tracer();
    Tracer(const Tracer&) = delete;
    Tracer& operator=(const Tracer&) = delete;

    // header: resolved scenario dump, one "# key = value" line per key
    void open(const std::string& path, const std::string& scenario_dump);
    void close();
    bool on() const { return _f != nullptr; }
    const std::string& path() const { return _path; }

    void line(SimTime t, NodeId node, const char* layer, const char* kind,
              const char* fmt = "", ...)
#if defined(__GNUC__)
        __attribute__((format(printf, 6, 7)))
#endif
        ;

private:
    FILE* _f = nullptr;
    std::string _path;
};

// FNV-1a over the file bytes; used for determinism checks and replay.
uint64_t hash_file(const std::string& path);

// Reads the "# key = value" header of a trace back into scenario text.
std::string read_trace_header(const std::string& path);

} // namespace packsim

#endif
