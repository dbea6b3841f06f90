#pragma once

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

// Geometry export: a single JSON document of polylines / circles / point
// sets in R^3, schema_version "1".  Coordinates are written at full double
// precision (round-trip exact); the document validates itself on write.

namespace nk::expo {

struct ExportObject {
    std::string kind;  // "polyline" | "circle" | "points"
    std::vector<std::array<double, 3>> coordinates;
    std::vector<std::pair<std::string, std::string>> metadata;
};

struct ExportDocument {
    std::vector<ExportObject> objects;

    void validate() const {
        for (const auto& o : objects) {
            if (o.kind != "polyline" && o.kind != "circle" && o.kind != "points")
                throw std::invalid_argument("ExportDocument: unknown object kind '" + o.kind + "'");
            if (o.kind == "polyline" && o.coordinates.size() < 2)
                throw std::invalid_argument("ExportDocument: polyline needs at least 2 points");
            for (const auto& c : o.coordinates)
                for (double v : c)
                    if (!std::isfinite(v))
                        throw std::invalid_argument("ExportDocument: non-finite coordinate");
        }
    }

    nlohmann::ordered_json to_json() const {
        validate();
        nlohmann::ordered_json doc;
        doc["schema_version"] = "1";
        doc["objects"] = nlohmann::ordered_json::array();
        for (const auto& o : objects) {
            nlohmann::ordered_json jo;
            jo["kind"] = o.kind;
            jo["coordinates"] = nlohmann::ordered_json::array();
            for (const auto& c : o.coordinates) jo["coordinates"].push_back({c[0], c[1], c[2]});
            nlohmann::ordered_json meta = nlohmann::ordered_json::object();
            for (const auto& [k, v] : o.metadata) meta[k] = v;
            jo["metadata"] = meta;
            doc["objects"].push_back(jo);
        }
        return doc;
    }

    void write(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("ExportDocument: cannot open " + path);
        out << to_json().dump(2) << "\n";
    }
};

}  // namespace nk::expo
