#include "relaymap/io.hpp"

#include <fstream>
#include <stdexcept>

namespace relaymap {

json grid_to_json(const GridMap& g) {
    json cells = json::array();
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) {
            if (g.has(r, c))
                cells.push_back(g.at(r, c));
            else
                cells.push_back(nullptr);
        }
    json j;
    j["rows"] = g.rows();
    j["cols"] = g.cols();
    j["t"] = g.t();
    j["cells"] = std::move(cells);
    j["provenance"] = g.provenance;
    return j;
}

GridMap grid_from_json(const json& j) {
    GridMap g(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("t").get<int>());
    const json& cells = j.at("cells");
    if (static_cast<int>(cells.size()) != g.rows() * g.cols())
        throw std::runtime_error("grid json: cell count mismatch");
    int i = 0;
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c, ++i)
            if (!cells[i].is_null()) g.set(r, c, cells[i].get<int>());
    g.provenance = j.value("provenance", std::string{});
    return g;
}

json fade_to_json(const SingularFade& f) {
    json j;
    j["k1"] = f.k1;
    j["k2"] = f.k2;
    j["m"] = f.m;
    j["phase_class"] = to_string(f.cls);
    return j;
}

SingularFade fade_from_json(const PskConfig& cfg, const json& j) {
    SingularFade f = make_fade(cfg, j.at("k1").get<int>(), j.at("k2").get<int>(),
                               j.at("m").get<int>());
    if (to_string(f.cls) != j.at("phase_class").get<std::string>())
        throw std::runtime_error("fade json: phase class inconsistent with k1,k2");
    return f;
}

namespace {

json cells_to_json(const std::vector<Cell>& cells) {
    json out = json::array();
    for (const Cell& c : cells) out.push_back(json::array({c.r, c.c}));
    return out;
}

std::vector<Cell> cells_from_json(const json& j) {
    std::vector<Cell> out;
    for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return out;
}

}  // namespace

json constraints_to_json(const ConstraintSet& cs) {
    json groups = json::array();
    for (const auto& g : cs.groups) groups.push_back(cells_to_json(g));
    json j;
    j["fade"] = fade_to_json(cs.fade);
    j["groups"] = std::move(groups);
    return j;
}

ConstraintSet constraints_from_json(const PskConfig& cfg, const json& j) {
    ConstraintSet cs;
    cs.fade = fade_from_json(cfg, j.at("fade"));
    for (const auto& g : j.at("groups")) cs.groups.push_back(cells_from_json(g));
    return cs;
}

json clustering_to_json(const Clustering& c) {
    json blocks = json::array();
    for (const auto& b : c.blocks()) blocks.push_back(cells_to_json(b));
    json j;
    j["blocks"] = std::move(blocks);
    return j;
}

Clustering clustering_from_json(const json& j) {
    std::vector<std::vector<Cell>> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(cells_from_json(b));
    return Clustering(std::move(blocks));
}

json mapbook_to_json(const MapBook& book) {
    json seeds = json::array();
    for (const auto& s : book.seeds) {
        json e;
        e["name"] = s.name;
        e["grid"] = grid_to_json(s.grid);
        seeds.push_back(std::move(e));
    }
    json clusterings = json::array();
    for (const auto& c : book.clusterings) clusterings.push_back(clustering_to_json(c));
    json assignment = json::array();
    for (const auto& e : book.assignment) {
        json a;
        a["fade"] = fade_to_json(e.fade);
        a["clustering"] = e.clustering;
        a["provenance"] = {{"seed", e.prov.seed},
                           {"shift", e.prov.shift},
                           {"transposed", e.prov.transposed}};
        assignment.push_back(std::move(a));
    }
    json j;
    j["m"] = book.cfg.m;
    j["complete"] = book.complete;
    j["seeds"] = std::move(seeds);
    j["clusterings"] = std::move(clusterings);
    j["assignment"] = std::move(assignment);
    j["issues"] = book.issues;
    return j;
}

MapBook mapbook_from_json(const json& j) {
    MapBook book;
    book.cfg = PskConfig::of(j.at("m").get<int>());
    book.complete = j.at("complete").get<bool>();
    for (const auto& e : j.at("seeds")) {
        SeedRecord s;
        s.name = e.at("name").get<std::string>();
        s.grid = grid_from_json(e.at("grid"));
        book.seeds.push_back(std::move(s));
    }
    for (const auto& c : j.at("clusterings")) book.clusterings.push_back(clustering_from_json(c));
    for (const auto& a : j.at("assignment")) {
        BookEntry e;
        e.fade = fade_from_json(book.cfg, a.at("fade"));
        e.clustering = a.at("clustering").get<int>();
        if (e.clustering < 0 || e.clustering >= static_cast<int>(book.clusterings.size()))
            throw std::runtime_error("map book json: clustering index out of range");
        const json& p = a.at("provenance");
        e.prov = {p.at("seed").get<int>(), p.at("shift").get<int>(),
                  p.at("transposed").get<bool>()};
        book.assignment.push_back(std::move(e));
    }
    if (j.contains("issues"))
        for (const auto& s : j.at("issues")) book.issues.push_back(s.get<std::string>());
    book.representatives.assign(book.clusterings.size(), GridMap(1, 1, 1));
    std::vector<bool> have(book.clusterings.size(), false);
    for (const auto& e : book.assignment)
        if (!have[e.clustering]) {
            book.representatives[e.clustering] = book.replay(e.prov);
            have[e.clustering] = true;
        }
    for (std::size_t i = 0; i < have.size(); ++i)
        if (!have[i]) throw std::runtime_error("map book json: clustering never assigned");
    return book;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace relaymap
