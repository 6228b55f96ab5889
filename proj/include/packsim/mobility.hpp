// Node placement and the random-waypoint model. Positions are computed
// on demand from waypoint legs; only waypoint arrivals are events.
#ifndef PACKSIM_MOBILITY_HPP
#define PACKSIM_MOBILITY_HPP

#include <cmath>
#include <vector>

#include "packsim/rng.hpp"
#include "packsim/scenario.hpp"
#include "packsim/time.hpp"

namespace packsim {

struct Position {
    double x = 0, y = 0;
};

inline double dist(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Grid placement: node k = row*cols + col at (col*spacing, row*spacing),
// offset to centre the grid in the area.
std::vector<Position> place_grid(int rows, int cols, double spacing,
                                 double area_w, double area_h);

std::vector<Position> place_random(int n, double area_w, double area_h, RngStream& rng);

// One node's motion state: a straight leg origin->waypoint at `speed`,
// then a pause. Static nodes never leave the Paused state.
struct MobilityState {
    Position origin;
    Position waypoint;
    SimTime depart{};     // when the current leg started
    double speed = 0;     // m/s on the current leg
    bool moving = false;

    Position pos_at(SimTime t) const {
        if (!moving) return origin;
        double d = dist(origin, waypoint);
        if (d <= 0) return waypoint;
        double travelled = speed * (t - depart).sec();
        if (travelled >= d) return waypoint;
        double f = travelled / d;
        return {origin.x + (waypoint.x - origin.x) * f,
                origin.y + (waypoint.y - origin.y) * f};
    }

    SimTime arrival() const {
        if (!moving || speed <= 0) return t_never;
        double d = dist(origin, waypoint);
        return depart + seconds(d / speed);
    }

    // waypoint reached: stop there
    void settle(SimTime now) {
        origin = pos_at(now);
        moving = false;
    }

    // draw the next leg per random waypoint
    void next_leg(SimTime now, double area_w, double area_h, double v_min,
                  double v_max, RngStream& rng) {
        origin = pos_at(now);
        waypoint = {rng.uniform(0, area_w), rng.uniform(0, area_h)};
        speed = rng.uniform(v_min, v_max);
        depart = now;
        moving = speed > 0;
    }
};

} // namespace packsim

#endif
