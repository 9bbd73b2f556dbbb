#include "hypwidth/body_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypwidth {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name) {
    const auto it = obj.find(name);
    if (it == obj.end())
        throw ParseError(std::string("body file: missing field '") + name + "'");
    return *it;
}

double number(const json& obj, const char* name) {
    const json& f = field(obj, name);
    if (!f.is_number())
        throw ParseError(std::string("body file: field '") + name + "' must be a number");
    return f.get<double>();
}

HPoint point(const json& j, const char* name) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string("body file: field '") + name + "' must be [x, y]");
    try {
        return HPoint(j[0].get<double>(), j[1].get<double>());
    } catch (const InvalidPoint& e) {
        throw ParseError(std::string("body file: field '") + name + "': " + e.what());
    }
}

std::vector<HPoint> point_list(const json& obj, const char* name) {
    const json& f = field(obj, name);
    if (!f.is_array())
        throw ParseError(std::string("body file: field '") + name + "' must be a list of [x, y]");
    std::vector<HPoint> out;
    out.reserve(f.size());
    for (const auto& e : f) out.push_back(point(e, name));
    return out;
}

Pose pose(const json& obj) {
    Pose p;
    if (obj.contains("center")) p.center = point(obj["center"], "center");
    if (obj.contains("rotation")) p.rotation = number(obj, "rotation");
    return p;
}

}  // namespace

ConvexBody parse_body_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("body file: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("body file: top level must be an object");
    const json& v = field(j, "variant");
    if (!v.is_string()) throw ParseError("body file: field 'variant' must be a string");
    const std::string variant = v.get<std::string>();
    try {
        if (variant == "circle")
            return ConvexBody::circle(point(field(j, "center"), "center"), number(j, "r"));
        if (variant == "segment")
            return ConvexBody::segment(point(field(j, "a"), "a"), point(field(j, "b"), "b"));
        if (variant == "polygon") return ConvexBody::polygon(point_list(j, "vertices"));
        if (variant == "regular-polygon")
            return ConvexBody::regular_polygon(static_cast<int>(number(j, "n")), number(j, "r"));
        if (variant == "reuleaux")
            return ConvexBody::reuleaux(static_cast<int>(number(j, "n")), number(j, "width"),
                                        pose(j));
        if (variant == "hypercycle-domain")
            return ConvexBody::hypercycle_domain(number(j, "a"), number(j, "h"), pose(j));
        if (variant == "magic-quadrangle") return ConvexBody::magic_quadrangle();
        if (variant == "sampled") {
            const json& h = field(j, "h_convex");
            if (!h.is_boolean())
                throw ParseError("body file: field 'h_convex' must be a boolean");
            return ConvexBody::sampled(point_list(j, "boundary"), h.get<bool>());
        }
    } catch (const BodyConstructionError& e) {
        throw ParseError(std::string("body file: ") + e.what());
    }
    throw ParseError("body file: unknown variant '" + variant + "'");
}

ConvexBody load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("body file: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_body_json(ss.str());
}

}  // namespace hypwidth
