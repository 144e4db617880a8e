#include "posetcalc/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <gmpxx.h>

namespace posetcalc {

namespace {

std::string cover_str(const Poset& p, const Cover& c) {
    return "(" + p.label(c.first) + "," + p.label(c.second) + ")";
}

// Union-find over object ids.
struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

std::shared_ptr<const Poset> Poset::from_covers(
    std::vector<std::string> objects,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
        if (!index.emplace(objects[i], i).second)
            throw PosetError("poset: duplicate object label '" + objects[i] + "'");
    }
    std::vector<Cover> ids;
    ids.reserve(covers.size());
    for (const auto& [u, v] : covers) {
        auto iu = index.find(u), iv = index.find(v);
        if (iu == index.end()) throw PosetError("poset: unknown object '" + u + "' in cover");
        if (iv == index.end()) throw PosetError("poset: unknown object '" + v + "' in cover");
        ids.emplace_back(iu->second, iv->second);
    }
    return from_cover_ids(std::move(objects), std::move(ids));
}

std::shared_ptr<const Poset> Poset::from_cover_ids(std::vector<std::string> objects,
                                                   std::vector<Cover> covers) {
    auto p = std::shared_ptr<Poset>(new Poset());
    const int n = static_cast<int>(objects.size());
    p->objects_ = std::move(objects);
    for (int i = 0; i < n; ++i) {
        if (!p->index_.emplace(p->objects_[i], i).second)
            throw PosetError("poset: duplicate object label '" + p->objects_[i] + "'");
    }

    std::sort(covers.begin(), covers.end());
    for (size_t i = 0; i + 1 < covers.size(); ++i)
        if (covers[i] == covers[i + 1])
            throw PosetError("poset: duplicate cover " + cover_str(*p, covers[i]));
    for (const Cover& c : covers) {
        if (c.first < 0 || c.first >= n || c.second < 0 || c.second >= n)
            throw PosetError("poset: cover object id out of range");
        if (c.first == c.second)
            throw PosetError("poset: self-loop at '" + p->objects_[c.first] + "'");
    }
    p->covers_ = covers;

    p->up_.assign(n, {});
    p->down_.assign(n, {});
    for (const Cover& c : covers) {
        p->up_[c.first].push_back(c.second);
        p->down_[c.second].push_back(c.first);
    }

    // Acyclicity via Kahn's algorithm.
    std::vector<int> indeg(n, 0);
    for (const Cover& c : covers) ++indeg[c.second];
    std::queue<int> q;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push(i);
    int seen = 0;
    while (!q.empty()) {
        int x = q.front(); q.pop();
        ++seen;
        for (int y : p->up_[x])
            if (--indeg[y] == 0) q.push(y);
    }
    if (seen != n) {
        std::vector<std::string> cyc;
        for (int i = 0; i < n; ++i)
            if (indeg[i] > 0) cyc.push_back(p->objects_[i]);
        std::ostringstream os;
        os << "poset: covers contain a directed cycle through {";
        for (size_t i = 0; i < cyc.size(); ++i) os << (i ? ", " : "") << cyc[i];
        os << "}";
        throw PosetError(os.str());
    }

    // Closure.
    p->leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p->leq_[i][i] = true;
    // DFS from each object over covers.
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int x = stack.back(); stack.pop_back();
            for (int y : p->up_[x])
                if (!p->leq_[s][y]) {
                    p->leq_[s][y] = true;
                    stack.push_back(y);
                }
        }
    }

    // Transitive reduction: no cover may also be reachable by a longer path.
    for (const Cover& c : covers) {
        for (int mid : p->up_[c.first]) {
            if (mid != c.second && p->leq_[mid][c.second]) {
                // Reconstruct a witness path c.first -> mid -> ... -> c.second.
                std::vector<int> path = {c.first, mid};
                int cur = mid;
                while (cur != c.second) {
                    for (int y : p->up_[cur])
                        if (p->leq_[y][c.second]) {
                            path.push_back(y);
                            cur = y;
                            break;
                        }
                }
                std::ostringstream os;
                os << "poset: cover " << cover_str(*p, c)
                   << " is not transitively reduced; witness path ";
                for (size_t i = 0; i < path.size(); ++i)
                    os << (i ? " < " : "") << p->objects_[path[i]];
                throw PosetError(os.str());
            }
        }
    }

    return p;
}

int Poset::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw PosetError("poset: unknown object '" + label + "'");
    return it->second;
}

std::optional<int> Poset::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Poset::has_cover(int u, int v) const {
    return std::binary_search(covers_.begin(), covers_.end(), Cover{u, v});
}

std::vector<int> Poset::minimal_objects() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
        if (down_[i].empty()) r.push_back(i);
    return r;
}

std::vector<int> Poset::maximal_objects() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
        if (up_[i].empty()) r.push_back(i);
    return r;
}

std::vector<int> Poset::up_set(int x) const {
    std::vector<int> r;
    for (int y = 0; y < size(); ++y)
        if (leq_[x][y]) r.push_back(y);
    return r;
}

std::vector<int> Poset::down_set(int x) const {
    std::vector<int> r;
    for (int y = 0; y < size(); ++y)
        if (leq_[y][x]) r.push_back(y);
    return r;
}

bool Poset::is_connected() const {
    if (size() <= 1) return true;
    DSU dsu(size());
    int comps = size();
    for (const Cover& c : covers_)
        if (dsu.unite(c.first, c.second)) --comps;
    return comps == 1;
}

int Poset::longest_chain_length() const {
    std::vector<int> depth(size(), 0);
    // relax covers along a linear extension; x < y implies the down-set of x
    // is strictly smaller, so down-set size is a valid topological key
    std::vector<size_t> weight(size());
    for (int x = 0; x < size(); ++x) weight[x] = down_set(x).size();
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight[a] < weight[b]; });
    int best = 0;
    for (int x : order)
        for (int y : up_[x]) {
            depth[y] = std::max(depth[y], depth[x] + 1);
            best = std::max(best, depth[y]);
        }
    return best;
}

long long Poset::nerve_euler_characteristic() const {
    // g(x) = 1 - sum_{y < x} g(y) counts chains with maximum x, signed.
    std::vector<mpz_class> g(size());
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return down_set(a).size() < down_set(b).size();
    });
    for (int x : order) {
        mpz_class s = 1;
        for (int y = 0; y < size(); ++y)
            if (less(y, x)) s -= g[y];
        g[x] = s;
    }
    mpz_class chi = 0;
    for (int x = 0; x < size(); ++x) chi += g[x];
    if (!chi.fits_slong_p()) throw PosetError("poset: Euler characteristic overflow");
    return chi.get_si();
}

int LineMap::line_object_of(const Cover& c) const {
    auto it = line_id.find(c);
    if (it == line_id.end()) throw PosetError("line poset: not a cover of the base");
    return it->second;
}

LineMap line_poset(const PosetPtr& base) {
    LineMap lm;
    lm.base = base;
    const auto& covers = base->covers();
    std::vector<std::string> labels;
    labels.reserve(covers.size());
    for (int i = 0; i < static_cast<int>(covers.size()); ++i) {
        labels.push_back("(" + base->label(covers[i].first) + "," +
                         base->label(covers[i].second) + ")");
        lm.back.push_back(covers[i].first);
        lm.front.push_back(covers[i].second);
        lm.line_id[covers[i]] = i;
    }
    std::vector<Cover> line_covers;
    for (int e = 0; e < static_cast<int>(covers.size()); ++e)
        for (int f = 0; f < static_cast<int>(covers.size()); ++f)
            if (lm.front[e] == lm.back[f]) line_covers.emplace_back(e, f);
    lm.line = Poset::from_cover_ids(std::move(labels), std::move(line_covers));
    return lm;
}

LineComponents line_components(const Poset& p) {
    LineMap lm = line_poset(std::make_shared<const Poset>(p));
    const Poset& lp = *lm.line;
    DSU dsu(lp.size());
    for (const Cover& c : lp.covers()) dsu.unite(c.first, c.second);
    std::map<int, std::vector<int>> groups;
    for (int e = 0; e < lp.size(); ++e) groups[dsu.find(e)].push_back(e);
    LineComponents out;
    for (auto& [root, members] : groups) {
        std::vector<Cover> covers;
        for (int e : members) covers.push_back(lm.cover_of(e));
        std::sort(covers.begin(), covers.end());
        if (members.size() == 1)
            out.isolated.push_back(covers.front());
        else
            out.components.push_back(std::move(covers));
    }
    std::sort(out.isolated.begin(), out.isolated.end());
    std::sort(out.components.begin(), out.components.end());
    return out;
}

namespace {

// Connected components of the line digraph of an edge subset, as index sets
// into `edges`.
std::vector<std::vector<int>> edge_line_components(const std::vector<Cover>& edges) {
    DSU dsu(static_cast<int>(edges.size()));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        for (int f = 0; f < static_cast<int>(edges.size()); ++f)
            if (edges[e].second == edges[f].first) dsu.unite(e, f);
    std::map<int, std::vector<int>> groups;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) groups[dsu.find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

bool edges_line_connected(const std::vector<Cover>& edges) {
    return edge_line_components(edges).size() <= 1;
}

bool edges_connect_all_objects(const std::vector<Cover>& edges, int n) {
    if (n <= 1) return true;
    DSU dsu(n);
    int comps = n;
    for (const Cover& c : edges)
        if (dsu.unite(c.first, c.second)) --comps;
    return comps == 1;
}

// Saturating count (0, 1, or 2+) of directed paths between all pairs.
std::vector<std::vector<int>> directed_path_counts(const std::vector<Cover>& edges, int n) {
    std::vector<std::vector<int>> succ(n);
    for (const Cover& c : edges) succ[c.first].push_back(c.second);
    std::vector<std::vector<int>> cnt(n, std::vector<int>(n, 0));
    std::vector<char> done(n, 0);
    std::function<void(int)> dfs = [&](int s) {
        if (done[s]) return;
        done[s] = 1;  // the cover digraph is acyclic
        for (int t : succ[s]) {
            dfs(t);
            cnt[s][t] = std::min(2, cnt[s][t] + 1);
            for (int v = 0; v < n; ++v) cnt[s][v] = std::min(2, cnt[s][v] + cnt[t][v]);
        }
    };
    for (int s = 0; s < n; ++s) dfs(s);
    return cnt;
}

}  // namespace

bool is_line_connected(const Poset& p) {
    return p.is_connected() && edges_line_connected(p.covers());
}

bool is_line_connected_edges(const std::vector<Cover>& edges) {
    return edges_line_connected(edges);
}

namespace {

// An undirected cycle in the edge set, as edge indices, or empty.
std::vector<size_t> find_undirected_cycle(const std::vector<Cover>& edges, int n) {
    DSU dsu(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!dsu.unite(edges[i].first, edges[i].second)) {
            // walk back: find the path between the endpoints among edges 0..i-1
            std::vector<std::vector<std::pair<int, size_t>>> adj(n);
            for (size_t j = 0; j < i; ++j) {
                adj[edges[j].first].push_back({edges[j].second, j});
                adj[edges[j].second].push_back({edges[j].first, j});
            }
            std::vector<std::pair<int, size_t>> parent(n, {-1, 0});
            std::vector<char> seen(n, 0);
            std::queue<int> q;
            q.push(edges[i].first);
            seen[edges[i].first] = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (auto [y, j] : adj[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        parent[y] = {x, j};
                        q.push(y);
                    }
            }
            std::vector<size_t> cycle = {i};
            int cur = edges[i].second;
            while (cur != edges[i].first) {
                cycle.push_back(parent[cur].second);
                cur = parent[cur].first;
            }
            std::sort(cycle.begin(), cycle.end());
            return cycle;
        }
    }
    return {};
}

// Complete deterministic search: repeatedly pick a violation (a pair joined
// by two directed paths, else an undirected cycle), branch on deleting one of
// its edges, and demand a spanning line connected forest at the leaves. A
// tree that exists is always found because it must omit at least one edge of
// every violation; line connectivity is only required of the final tree.
bool maxtree_search(std::vector<Cover>& edges, int n, std::set<std::vector<Cover>>& dead) {
    if (!edges_connect_all_objects(edges, n)) return false;
    if (dead.count(edges)) return false;

    std::vector<size_t> candidates;
    auto cnt = directed_path_counts(edges, n);
    Cover bad{-1, -1};
    for (int u = 0; u < n && bad.first < 0; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && cnt[u][v] >= 2) {
                bad = {u, v};
                break;
            }
    if (bad.first >= 0) {
        auto reach = [&](int a, int b) { return a == b || cnt[a][b] >= 1; };
        for (size_t i = 0; i < edges.size(); ++i)
            if (reach(bad.first, edges[i].first) && reach(edges[i].second, bad.second))
                candidates.push_back(i);
    } else {
        candidates = find_undirected_cycle(edges, n);
        if (candidates.empty()) return edges_line_connected(edges);  // already a tree
    }

    for (size_t i : candidates) {
        std::vector<Cover> trial = edges;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (maxtree_search(trial, n, dead)) {
            edges = std::move(trial);
            return true;
        }
    }
    dead.insert(edges);
    return false;
}

}  // namespace

TreeSubgraph line_connected_maximal_tree(const Poset& p) {
    if (!is_line_connected(p)) {
        LineComponents lc = line_components(p);
        std::ostringstream os;
        os << "poset: not line connected; line poset has "
           << lc.components.size() + lc.isolated.size() << " components";
        throw PosetError(os.str());
    }
    std::vector<Cover> edges = p.covers();
    const int n = p.size();
    std::set<std::vector<Cover>> dead;
    if (!maxtree_search(edges, n, dead))
        throw PosetError("poset: no line connected maximal tree exists");
    if (!is_undirected_forest(edges, n))
        throw PosetError("poset: maximal tree search returned a non-tree");
    TreeSubgraph t;
    t.edges = std::move(edges);
    std::set<int> objs;
    for (const Cover& c : t.edges) {
        objs.insert(c.first);
        objs.insert(c.second);
    }
    if (p.size() == 1) objs.insert(0);
    t.objects.assign(objs.begin(), objs.end());
    return t;
}

SubPoset full_subposet(const PosetPtr& p, const std::vector<int>& objs) {
    std::vector<int> ids = objs;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::string> labels;
    labels.reserve(ids.size());
    for (int x : ids) labels.push_back(p->label(x));
    std::map<int, int> local;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) local[ids[i]] = i;
    // Covers of the sub-poset: strict pairs with nothing of the subset between.
    std::vector<Cover> covers;
    for (int a : ids)
        for (int b : ids) {
            if (!p->less(a, b)) continue;
            bool direct = true;
            for (int c : ids)
                if (c != a && c != b && p->less(a, c) && p->less(c, b)) {
                    direct = false;
                    break;
                }
            if (direct) covers.emplace_back(local[a], local[b]);
        }
    SubPoset sp;
    sp.poset = Poset::from_cover_ids(std::move(labels), std::move(covers));
    sp.parent_ids = std::move(ids);
    return sp;
}

SubPoset comma_subposet(const LineMap& lm, int y, CommaKind kind) {
    if (y < 0 || y >= lm.base->size()) throw PosetError("comma: unknown object");
    std::vector<int> members;
    for (int e = 0; e < lm.line->size(); ++e) {
        bool in = false;
        switch (kind) {
            case CommaKind::FrontOver: in = lm.base->leq(lm.front[e], y); break;
            case CommaKind::BackOver: in = lm.base->leq(lm.back[e], y); break;
            case CommaKind::FrontUnder: in = lm.base->leq(y, lm.front[e]); break;
            case CommaKind::BackUnder: in = lm.base->leq(y, lm.back[e]); break;
        }
        if (in) members.push_back(e);
    }
    return full_subposet(lm.line, members);
}

SubPoset neighborhood(const PosetPtr& p, int y) {
    if (y < 0 || y >= p->size()) throw PosetError("neighborhood: unknown object");
    std::vector<Cover> edges;
    for (int u : p->down_covers(y)) edges.emplace_back(u, y);
    for (int v : p->up_covers(y)) edges.emplace_back(y, v);
    if (edges.empty()) {
        SubPoset sp;
        sp.poset = Poset::from_cover_ids({p->label(y)}, {});
        sp.parent_ids = {y};
        return sp;
    }
    return sub_digraph_poset(p, edges);
}

SubPoset sub_digraph_poset(const PosetPtr& p, const std::vector<Cover>& edges) {
    std::set<int> objset;
    for (const Cover& c : edges) {
        objset.insert(c.first);
        objset.insert(c.second);
    }
    std::vector<int> ids(objset.begin(), objset.end());
    std::map<int, int> local;
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
        local[ids[i]] = i;
        labels.push_back(p->label(ids[i]));
    }
    std::vector<Cover> covers;
    covers.reserve(edges.size());
    for (const Cover& c : edges) covers.emplace_back(local[c.first], local[c.second]);
    SubPoset sp;
    sp.poset = Poset::from_cover_ids(std::move(labels), std::move(covers));
    sp.parent_ids = std::move(ids);
    return sp;
}

bool poset_equal(const Poset& a, const Poset& b) {
    return a.labels() == b.labels() && a.covers() == b.covers();
}

PosetPtr opposite_poset(const Poset& p) {
    std::vector<Cover> covers;
    covers.reserve(p.covers().size());
    for (const Cover& c : p.covers()) covers.emplace_back(c.second, c.first);
    return Poset::from_cover_ids(p.labels(), std::move(covers));
}

bool is_undirected_forest(const std::vector<Cover>& edges, int n_objects) {
    DSU dsu(n_objects);
    for (const Cover& c : edges)
        if (!dsu.unite(c.first, c.second)) return false;
    return true;
}

bool is_tree(const Poset& p) {
    auto cnt = directed_path_counts(p.covers(), p.size());
    for (int u = 0; u < p.size(); ++u)
        for (int v = 0; v < p.size(); ++v)
            if (u != v && cnt[u][v] >= 2) return false;
    return true;
}

bool is_rooted_tree(const Poset& p) {
    return is_tree(p) && p.minimal_objects().size() == 1;
}

}  // namespace posetcalc
