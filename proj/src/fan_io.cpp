#include "toric/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace toric {

namespace {

using nlohmann::json;

Int to_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw FanParseError(where + ": expected an integer");
}

}  // namespace

StackyFan parse_fan(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FanParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FanParseError("top level: expected an object");
    for (auto& [key, _] : j.items())
        if (key != "rank" && key != "torsion" && key != "B" && key != "cones")
            throw FanParseError("unknown field \"" + key + "\"");
    for (const char* req : {"rank", "B", "cones"})
        if (!j.contains(req)) throw FanParseError(std::string("missing field \"") + req + "\"");

    StackyFan fan;
    if (!j["rank"].is_number_integer() || j["rank"].get<long long>() < 0)
        throw FanParseError("rank: expected a nonnegative integer");
    fan.n = j["rank"].get<std::size_t>();

    if (j.contains("torsion")) {
        if (!j["torsion"].is_array()) throw FanParseError("torsion: expected an array");
        for (std::size_t i = 0; i < j["torsion"].size(); ++i)
            fan.torsion.push_back(to_int(j["torsion"][i], "torsion[" + std::to_string(i) + "]"));
    }

    if (!j["B"].is_array()) throw FanParseError("B: expected an array of rows");
    const std::size_t rows = fan.n + fan.r();
    if (j["B"].size() != rows)
        throw FanParseError("B: expected " + std::to_string(rows) + " rows (rank + torsion count), got " +
                            std::to_string(j["B"].size()));
    std::size_t s = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["B"][i];
        if (!row.is_array()) throw FanParseError("B[" + std::to_string(i) + "]: expected an array");
        if (i == 0) {
            s = row.size();
            fan.B = IntMatrix(rows, s);
        } else if (row.size() != s) {
            throw FanParseError("B[" + std::to_string(i) + "]: ragged row, expected " +
                                std::to_string(s) + " entries");
        }
        for (std::size_t c = 0; c < s; ++c)
            fan.B.at(i, c) =
                to_int(row[c], "B[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }

    if (!j["cones"].is_array()) throw FanParseError("cones: expected an array of index lists");
    for (std::size_t c = 0; c < j["cones"].size(); ++c) {
        const json& cone = j["cones"][c];
        if (!cone.is_array()) throw FanParseError("cones[" + std::to_string(c) + "]: expected an array");
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < cone.size(); ++t) {
            const std::string where = "cones[" + std::to_string(c) + "][" + std::to_string(t) + "]";
            if (!cone[t].is_number_integer() || cone[t].get<long long>() < 1)
                throw FanParseError(where + ": expected a 1-based ray index");
            idx.push_back(cone[t].get<std::size_t>());
        }
        fan.max_cones.push_back(std::move(idx));
    }
    return fan;
}

StackyFan load_fan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FanParseError("cannot open fan file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fan(buf.str());
}

std::string serialize_fan(const StackyFan& fan) {
    json j;
    j["rank"] = fan.n;
    j["torsion"] = json::array();
    for (const Int& a : fan.torsion) {
        if (a.fits_slong_p())
            j["torsion"].push_back(a.get_si());
        else
            j["torsion"].push_back(a.get_str());
    }
    j["B"] = json::array();
    for (std::size_t i = 0; i < fan.B.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < fan.B.cols(); ++c) {
            const Int& e = fan.B.at(i, c);
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        j["B"].push_back(std::move(row));
    }
    j["cones"] = fan.max_cones;
    return j.dump(2) + "\n";
}

}  // namespace toric
