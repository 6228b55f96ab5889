#include "packsim/trace.hpp"

#include <cinttypes>
#include <sstream>
#include <stdexcept>

namespace packsim {

Tracer::~Tracer() { close(); }

void Tracer::open(const std::string& path, const std::string& scenario_dump) {
    close();
    _f = std::fopen(path.c_str(), "wb");
    if (!_f) throw std::runtime_error("cannot open trace file: " + path);
    _path = path;
    std::fprintf(_f, "# %s\n", trace_format_version);
    std::istringstream in(scenario_dump);
    std::string l;
    while (std::getline(in, l)) std::fprintf(_f, "# %s\n", l.c_str());
    std::fprintf(_f, "# end-header\n");
}

void Tracer::close() {
    if (_f) {
        std::fclose(_f);
        _f = nullptr;
    }
}

void Tracer::line(SimTime t, NodeId node, const char* layer, const char* kind,
                  const char* fmt, ...) {
    if (!_f) return;
    std::fprintf(_f, "%" PRId64 " n%d %s %s", t.ns, node, layer, kind);
    if (fmt && fmt[0]) {
        std::fputc(' ', _f);
        va_list ap;
        va_start(ap, fmt);
        std::vfprintf(_f, fmt, ap);
        va_end(ap);
    }
    std::fputc('\n', _f);
}

uint64_t hash_file(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return 0;
    uint64_t h = 0xcbf29ce484222325ull;
    char buf[1 << 16];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0)
        for (size_t i = 0; i < n; ++i) h = (h ^ uint8_t(buf[i])) * 0x100000001b3ull;
    std::fclose(f);
    return h;
}

std::string read_trace_header(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string out;
    char buf[4096];
    bool first = true;
    while (std::fgets(buf, sizeof buf, f)) {
        std::string l(buf);
        if (l.rfind("# ", 0) != 0) break;
        l = l.substr(2);
        if (!l.empty() && l.back() == '\n') l.pop_back();
        if (l == "end-header") break;
        if (first) { first = false; continue; } // version line
        out += l;
        out += '\n';
    }
    std::fclose(f);
    return out;
}

} // namespace packsim
