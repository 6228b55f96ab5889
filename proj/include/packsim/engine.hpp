// Discrete-event engine: one clock, one queue, ties broken by insertion
// order. Single-threaded; a whole simulation owns one Engine.
#ifndef PACKSIM_ENGINE_HPP
#define PACKSIM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "packsim/time.hpp"

namespace packsim {

// Fatal contract violation inside the simulation.
struct SimError : std::logic_error {
    using std::logic_error::logic_error;
};

#define PS_REQUIRE(cond, msg) \
    do { if (!(cond)) throw ::packsim::SimError(std::string("contract violation: ") + (msg)); } while (0)

using EventHandle = uint64_t;
constexpr EventHandle no_event = 0;

struct EngineStats {
    uint64_t scheduled = 0;
    uint64_t dispatched = 0;
    uint64_t cancelled = 0;
};

class Engine {
public:
    SimTime now() const { return _clock; }

    // fire_at must not be in the past.
    EventHandle schedule(SimTime fire_at, std::function<void()> action) {
        PS_REQUIRE(fire_at >= _clock, "event scheduled into the past");
        EventHandle h = ++_next_seq;
        _q.push(Entry{fire_at, h, std::move(action)});
        ++_stats.scheduled;
        return h;
    }
    EventHandle schedule_in(SimTime delay, std::function<void()> action) {
        return schedule(_clock + delay, std::move(action));
    }

    void cancel(EventHandle h) {
        if (h == no_event) return;
        if (_cancelled.insert(h).second) ++_stats.cancelled;
    }

    // Dispatches every event with fire_at <= t_end in (fire_at, seq) order,
    // then advances the clock to t_end.
    EngineStats run_until(SimTime t_end) {
        while (!_q.empty()) {
            const Entry& top = _q.top();
            if (top.fire_at > t_end) break;
            Entry e = std::move(const_cast<Entry&>(_q.top()));
            _q.pop();
            if (_cancelled.erase(e.seq)) continue;
            PS_REQUIRE(e.fire_at >= _clock, "event dispatched behind the clock");
            _clock = e.fire_at;
            ++_stats.dispatched;
            e.action();
        }
        if (t_end > _clock) _clock = t_end;
        return _stats;
    }

    const EngineStats& stats() const { return _stats; }
    bool empty() const { return _q.size() == _cancelled.size(); }

private:
    struct Entry {
        SimTime fire_at;
        EventHandle seq;
        std::function<void()> action;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
            return a.seq > b.seq;
        }
    };

    SimTime _clock = t_zero;
    EventHandle _next_seq = 0;
    std::priority_queue<Entry, std::vector<Entry>, Later> _q;
    std::unordered_set<EventHandle> _cancelled;
    EngineStats _stats;
};

} // namespace packsim

#endif
