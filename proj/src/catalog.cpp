#include "toric/catalog.hpp"

#include <stdexcept>

namespace toric {

namespace {

std::vector<std::vector<std::size_t>> cycle_cones(std::size_t s) {
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 1; i <= s; ++i) cones.push_back({i, i % s + 1});
    return cones;
}

}  // namespace

StackyFan example_fan(const std::string& name) {
    StackyFan fan;
    if (name == "p2") return projective_plane();
    if (name == "root-p2-c2" || name == "root-p2-c3") {
        long c = name.back() - '0';
        fan = projective_plane();
        fan.B = fan.B.scaled(c);
        return fan;
    }
    if (name == "wps") return weighted_projective({1, 2, 3});
    if (name == "p112") {
        fan.n = 2;
        fan.B = IntMatrix::from_rows({{1, 0, -1}, {0, 1, -2}});
        fan.max_cones = {{1, 2}, {2, 3}, {3, 1}};
        return fan;
    }
    if (name == "hirzebruch-ex2") {
        // rays (1,0), (0,1), 2*(-1,1), (0,-1)
        fan.n = 2;
        fan.B = IntMatrix::from_rows({{1, 0, -2, 0}, {0, 1, 2, -1}});
        fan.max_cones = cycle_cones(4);
        return fan;
    }
    if (name == "example3") {
        // hirzebruch-ex2 with the extra ray (-1,0) inserted as D4
        fan.n = 2;
        fan.B = IntMatrix::from_rows({{1, 0, -2, -1, 0}, {0, 1, 2, 0, -1}});
        fan.max_cones = cycle_cones(5);
        return fan;
    }
    throw std::invalid_argument("unknown example fan: " + name);
}

std::vector<std::string> example_fan_names() {
    return {"p2", "root-p2-c2", "root-p2-c3", "wps", "p112", "hirzebruch-ex2", "example3"};
}

}  // namespace toric
