#include "prymlab/catalog.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prymlab {

namespace {

std::vector<CatalogEntry> builtin_catalog() {
    return {
        {"Z2", {{1, 0}}},
        {"Z3", {{1, 2, 0}}},
        {"Z5", {{1, 2, 3, 4, 0}}},
        {"Z2xZ2", {{1, 0, 2, 3}, {0, 1, 3, 2}}},
        {"S3", {{1, 0, 2}, {1, 2, 0}}},
        // regular representation: 1, -1, i, -i, j, -j, k, -k
        {"Q8", {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}},
        // action on P^1(F_7), points 0..6 and infinity = 7; z+1 and -1/z
        {"PSL27", {{1, 2, 3, 4, 5, 6, 0, 7}, {7, 6, 3, 2, 5, 4, 1, 0}}},
    };
}

} // namespace

std::vector<CatalogEntry> parse_catalog_json(const std::string &text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array())
        throw std::runtime_error("catalog file must contain a \"groups\" array");
    std::vector<CatalogEntry> out;
    for (const auto &item : doc["groups"]) {
        CatalogEntry e;
        e.name = item.at("name").get<std::string>();
        for (const auto &gen : item.at("generators"))
            e.generators.push_back(gen.get<std::vector<int>>());
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> catalog_groups() {
    const char *path = std::getenv("PRYMLAB_CATALOG");
    if (path && *path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(std::string("cannot open catalog file ") + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_catalog_json(ss.str());
    }
    return builtin_catalog();
}

std::optional<CatalogEntry> catalog_lookup(const std::string &name) {
    for (auto &e : catalog_groups())
        if (e.name == name) return e;
    return std::nullopt;
}

} // namespace prymlab
