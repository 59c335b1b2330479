#include "oklab/convex/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace oklab {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json polytope_to_json(const Polytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) {
        json pt = json::array();
        for (int ax = 0; ax < p.dim(); ++ax) pt.push_back(rational_to_string(v[ax]));
        verts.push_back(std::move(pt));
    }
    return json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

Polytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw std::invalid_argument("polytope_from_json: expected {dim, vertices}");
    int dim = j.at("dim").get<int>();
    const auto& verts = j.at("vertices");
    if (dim == 1) {
        if (verts.size() != 2) throw std::invalid_argument("polytope_from_json: 1-D needs 2 vertices");
        return Polytope::interval(rational_from_string(verts[0][0].get<std::string>()),
                                  rational_from_string(verts[1][0].get<std::string>()));
    }
    if (dim != 2) throw std::invalid_argument("polytope_from_json: dim must be 1 or 2");
    std::vector<RPoint> pts;
    for (const auto& v : verts)
        pts.emplace_back(rational_from_string(v[0].get<std::string>()),
                         rational_from_string(v[1].get<std::string>()));
    return Polytope::polygon(std::move(pts));
}

json grid_function_to_json(const GridFunction& f) {
    return json{{"polytope", polytope_to_json(f.grid->polytope())},
                {"resolution", f.grid->resolution()},
                {"values", f.values}};
}

GridFunction grid_function_from_json(const json& j) {
    Polytope p = polytope_from_json(j.at("polytope"));
    auto grid = Grid::make(std::move(p), j.at("resolution").get<int>());
    std::vector<double> values = j.at("values").get<std::vector<double>>();
    return GridFunction(std::move(grid), std::move(values));
}

std::string grid_function_to_csv(const GridFunction& f) {
    std::string out = f.grid->dim() == 1 ? "x1,value\n" : "x1,x2,value\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& q = f.grid->nodes()[i];
        out += format_double(q[0]);
        if (f.grid->dim() == 2) {
            out += ',';
            out += format_double(q[1]);
        }
        out += ',';
        out += format_double(f.values[i]);
        out += '\n';
    }
    return out;
}

}  // namespace oklab
