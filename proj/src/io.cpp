#include "posetcalc/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace posetcalc {

namespace {

// Split "u,v" at the top-level comma; labels may contain parenthesized commas
// like "(a,b)".
std::pair<std::string, std::string> split_cover_key(const std::string& key) {
    int depth = 0;
    for (size_t i = 0; i < key.size(); ++i) {
        char c = key[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0)
            return {key.substr(0, i), key.substr(i + 1)};
    }
    throw IoError("module: cover key '" + key + "' is not of the form u,v");
}

// Grid labels look like "i_j" with small non-negative integers.
std::optional<std::pair<int, int>> parse_grid_label(const std::string& s) {
    auto us = s.find('_');
    if (us == std::string::npos) return std::nullopt;
    try {
        size_t a = 0, b = 0;
        int i = std::stoi(s.substr(0, us), &a);
        int j = std::stoi(s.substr(us + 1), &b);
        if (a != us || b != s.size() - us - 1 || i < 0 || j < 0) return std::nullopt;
        return std::pair{i, j};
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

json poset_to_json(const Poset& p) {
    json j;
    j["objects"] = p.labels();
    json covers = json::array();
    for (const Cover& c : p.covers())
        covers.push_back(json::array({p.label(c.first), p.label(c.second)}));
    j["covers"] = covers;
    return j;
}

PosetPtr poset_from_json(const json& j) {
    if (!j.contains("objects") || !j.contains("covers"))
        throw IoError("poset: JSON requires 'objects' and 'covers'");
    std::vector<std::string> objects = j["objects"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2) throw IoError("poset: covers must be pairs");
        covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
    }
    return Poset::from_covers(std::move(objects), covers);
}

std::string poset_to_text(const Poset& p) {
    std::ostringstream os;
    os << "objects:";
    for (const auto& l : p.labels()) os << " " << l;
    os << "\n";
    for (const Cover& c : p.covers())
        os << "cover: " << p.label(c.first) << " " << p.label(c.second) << "\n";
    return os.str();
}

PosetPtr poset_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> objects;
    std::vector<std::pair<std::string, std::string>> covers;
    bool saw_objects = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "objects:") {
            std::string obj;
            while (ls >> obj) objects.push_back(obj);
            saw_objects = true;
        } else if (head == "cover:") {
            std::string u, v;
            if (!(ls >> u >> v)) throw IoError("poset: cover line needs two labels");
            covers.push_back({u, v});
        } else {
            throw IoError("poset: unexpected line starting with '" + head + "'");
        }
    }
    if (!saw_objects) throw IoError("poset: missing 'objects:' line");
    return Poset::from_covers(std::move(objects), covers);
}

PosetPtr parse_poset(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            json j = json::parse(content, nullptr, true, true);
            return poset_from_json(j);
        }
        break;
    }
    return poset_from_text(content);
}

PosetPtr load_poset(const std::string& path) {
    try {
        return parse_poset(read_file(path));
    } catch (const json::exception& e) {
        throw IoError("poset '" + path + "': " + e.what());
    }
}

json module_to_json(const PosetModule& m) {
    const Poset& p = *m.poset();
    json j;
    j["poset"] = poset_to_json(p);
    json dims = json::object();
    for (int x = 0; x < p.size(); ++x)
        if (m.dim(x) != 0) dims[p.label(x)] = m.dim(x);
    j["dims"] = dims;
    json maps = json::object();
    for (const Cover& c : p.covers()) {
        const Matrix& a = m.cover_map(c);
        if (a.is_zero()) continue;
        json rows = json::array();
        for (int i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (int jj = 0; jj < a.cols(); ++jj) row.push_back(a.at(i, jj).str());
            rows.push_back(row);
        }
        maps[p.label(c.first) + "," + p.label(c.second)] = rows;
    }
    j["maps"] = maps;
    return j;
}

PosetModule module_from_json(const json& j, const Field& f, const std::string& base_dir) {
    if (!j.contains("poset")) throw IoError("module: missing 'poset'");
    PosetPtr p;
    if (j["poset"].is_string()) {
        std::string path = j["poset"].get<std::string>();
        if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
        p = load_poset(path);
    } else {
        p = poset_from_json(j["poset"]);
    }
    std::vector<int> dims(p->size(), 0);
    if (j.contains("dims"))
        for (auto& [label, d] : j["dims"].items()) dims[p->index_of(label)] = d.get<int>();
    std::map<Cover, Matrix> maps;
    if (j.contains("maps")) {
        for (auto& [key, rows] : j["maps"].items()) {
            auto [ul, vl] = split_cover_key(key);
            Cover c{p->index_of(ul), p->index_of(vl)};
            if (!p->has_cover(c.first, c.second))
                throw IoError("module: map key '" + key + "' is not a cover");
            int r = dims[c.second], cc = dims[c.first];
            if (static_cast<int>(rows.size()) != r)
                throw IoError("module: map '" + key + "' row count mismatch");
            Matrix a(r, cc, f);
            for (int i = 0; i < r; ++i) {
                const auto& row = rows[i];
                if (static_cast<int>(row.size()) != cc)
                    throw IoError("module: map '" + key + "' column count mismatch");
                for (int jj = 0; jj < cc; ++jj) {
                    const auto& cell = row[jj];
                    Scalar s = cell.is_string()
                                   ? Scalar::parse(cell.get<std::string>(), f)
                                   : Scalar::of_int(cell.get<long>(), f);
                    a.set(i, jj, s);
                }
            }
            maps.emplace(c, std::move(a));
        }
    }
    return PosetModule(std::move(p), f, std::move(dims), std::move(maps));
}

PosetModule load_module(const std::string& path, const Field& f) {
    std::string dir = ".";
    auto slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    try {
        return module_from_json(json::parse(read_file(path), nullptr, true, true), f, dir);
    } catch (const json::exception& e) {
        throw IoError("module '" + path + "': " + e.what());
    }
}

json dimvec_to_json(const DimVector& d, const Poset& p) {
    json j = json::object();
    for (int x = 0; x < p.size(); ++x) j[p.label(x)] = d[x];
    return j;
}

json rank_invariant_to_json(const RankInvariant& r, const Poset& p) {
    json j = json::object();
    for (auto& [rel, rank] : r) j[p.label(rel.first) + "," + p.label(rel.second)] = rank;
    return j;
}

json module_map_to_json(const ModuleMap& t, const Poset& p) {
    json comps = json::object();
    for (int x = 0; x < p.size(); ++x) {
        const Matrix& a = t.components[x];
        json rows = json::array();
        for (int i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (int jj = 0; jj < a.cols(); ++jj) row.push_back(a.at(i, jj).str());
            rows.push_back(row);
        }
        comps[p.label(x)] = rows;
    }
    return json{{"components", comps}};
}

json iso_result_to_json(const IsoResult& r, const Poset& p) {
    json j;
    switch (r.verdict) {
        case IsoVerdict::Isomorphic: j["verdict"] = "isomorphic"; break;
        case IsoVerdict::NoIsoFound: j["verdict"] = "no-iso-found"; break;
        case IsoVerdict::DimsDiffer: j["verdict"] = "dims-differ"; break;
    }
    j["certified"] = r.certified;
    if (!r.certificate.empty()) j["certificate"] = r.certificate;
    if (r.witness) j["witness"] = module_map_to_json(*r.witness, p);
    if (r.verdict == IsoVerdict::NoIsoFound && !r.certified)
        j["failure_bound"] = r.failure_bound.get_str();
    return j;
}

namespace {

std::string aligned_grid(const std::vector<std::vector<std::string>>& cells) {
    size_t width = 0;
    for (const auto& row : cells)
        for (const auto& s : row) width = std::max(width, s.size());
    std::ostringstream os;
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {  // top row first
        for (size_t i = 0; i < it->size(); ++i)
            os << (i ? " " : "") << std::string(width - (*it)[i].size(), ' ') << (*it)[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string report_dimvec_grid_text(const DimVector& d, const Poset& p) {
    // base grid poset?
    int maxi = -1, maxj = -1;
    bool grid = p.size() > 0;
    std::vector<std::pair<int, int>> coords(p.size());
    for (int x = 0; x < p.size() && grid; ++x) {
        auto c = parse_grid_label(p.label(x));
        if (!c) {
            grid = false;
            break;
        }
        coords[x] = *c;
        maxi = std::max(maxi, c->first);
        maxj = std::max(maxj, c->second);
    }
    if (grid && static_cast<long>(p.size()) == static_cast<long>(maxi + 1) * (maxj + 1)) {
        std::vector<std::vector<std::string>> cells(maxj + 1,
                                                    std::vector<std::string>(maxi + 1, "."));
        for (int x = 0; x < p.size(); ++x)
            cells[coords[x].second][coords[x].first] = std::to_string(d[x]);
        return aligned_grid(cells);
    }

    // line poset of a grid: labels "(i_j,i'_j')"
    bool line_grid = p.size() > 0;
    std::vector<std::vector<std::string>> hcells, vcells;
    int hm = -1, hn = -1, vm = -1, vn = -1;
    std::vector<std::pair<bool, std::pair<int, int>>> where(p.size());
    for (int x = 0; x < p.size() && line_grid; ++x) {
        const std::string& l = p.label(x);
        if (l.size() < 2 || l.front() != '(' || l.back() != ')') {
            line_grid = false;
            break;
        }
        auto [a, b] = split_cover_key(l.substr(1, l.size() - 2));
        auto ca = parse_grid_label(a), cb = parse_grid_label(b);
        if (!ca || !cb) {
            line_grid = false;
            break;
        }
        bool horizontal = ca->second == cb->second;
        where[x] = {horizontal, *ca};
        if (horizontal) {
            hm = std::max(hm, ca->first);
            hn = std::max(hn, ca->second);
        } else {
            vm = std::max(vm, ca->first);
            vn = std::max(vn, ca->second);
        }
    }
    if (line_grid && (hm >= 0 || vm >= 0)) {
        std::ostringstream os;
        if (hm >= 0) {
            std::vector<std::vector<std::string>> cells(hn + 1,
                                                        std::vector<std::string>(hm + 1, "."));
            for (int x = 0; x < p.size(); ++x)
                if (where[x].first)
                    cells[where[x].second.second][where[x].second.first] = std::to_string(d[x]);
            os << "horizontal:\n" << aligned_grid(cells);
        }
        if (vm >= 0) {
            std::vector<std::vector<std::string>> cells(vn + 1,
                                                        std::vector<std::string>(vm + 1, "."));
            for (int x = 0; x < p.size(); ++x)
                if (!where[x].first)
                    cells[where[x].second.second][where[x].second.first] = std::to_string(d[x]);
            os << "vertical:\n" << aligned_grid(cells);
        }
        return os.str();
    }

    // flat fallback
    std::ostringstream os;
    for (int x = 0; x < p.size(); ++x) os << p.label(x) << ": " << d[x] << "\n";
    return os.str();
}

json report_dimvec_grid_json(const DimVector& d, const Poset& p) {
    return dimvec_to_json(d, p);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << content;
}

}  // namespace posetcalc
