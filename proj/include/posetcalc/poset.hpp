#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posetcalc {

struct PosetError : std::runtime_error {
    explicit PosetError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated hypotheses (tree required,
// rooted tree required, resolution too long, ...).
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

using Cover = std::pair<int, int>;

// Finite poset, stored as its Hasse diagram. Construction validates that the
// cover digraph is acyclic and transitively reduced; <= is the derived
// reflexive-transitive closure.
class Poset {
  public:
    static std::shared_ptr<const Poset> from_covers(
        std::vector<std::string> objects,
        const std::vector<std::pair<std::string, std::string>>& covers);
    static std::shared_ptr<const Poset> from_cover_ids(std::vector<std::string> objects,
                                                       std::vector<Cover> covers);

    int size() const { return static_cast<int>(objects_.size()); }
    const std::string& label(int i) const { return objects_[i]; }
    const std::vector<std::string>& labels() const { return objects_; }
    int index_of(const std::string& label) const;            // throws on unknown
    std::optional<int> find(const std::string& label) const;

    const std::vector<Cover>& covers() const { return covers_; }
    bool has_cover(int u, int v) const;
    bool leq(int x, int y) const { return leq_[x][y]; }
    bool less(int x, int y) const { return x != y && leq_[x][y]; }

    const std::vector<int>& up_covers(int x) const { return up_[x]; }     // x is covered by
    const std::vector<int>& down_covers(int x) const { return down_[x]; } // covering x from below

    std::vector<int> minimal_objects() const;
    std::vector<int> maximal_objects() const;
    std::vector<int> up_set(int x) const;    // { y : x <= y }, ascending ids
    std::vector<int> down_set(int x) const;
    bool is_connected() const;               // undirected connectivity of covers
    int longest_chain_length() const;        // number of covers on a longest chain

    // Sum over strict chains x0 < ... < xd of (-1)^d.
    long long nerve_euler_characteristic() const;

  private:
    Poset() = default;
    std::vector<std::string> objects_;
    std::vector<Cover> covers_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<int>> up_, down_;
    std::map<std::string, int> index_;
};

using PosetPtr = std::shared_ptr<const Poset>;

// A sub-poset together with the object map into its parent.
struct SubPoset {
    PosetPtr poset;
    std::vector<int> parent_ids;  // sub object i -> parent object id
};

// The line poset of a base poset: objects are the base covers, with a cover
// (e, e') whenever front(e) = back(e'). front and back map line objects back
// into the base.
struct LineMap {
    PosetPtr base;
    PosetPtr line;
    std::vector<int> front;  // line object -> target object of the cover
    std::vector<int> back;   // line object -> source object of the cover
    std::map<Cover, int> line_id;

    int line_object_of(const Cover& c) const;
    Cover cover_of(int line_obj) const { return {back[line_obj], front[line_obj]}; }
};

LineMap line_poset(const PosetPtr& base);

struct LineComponents {
    // Pre-images of the connected components of the line poset that contain a
    // composable pair, as base cover sets.
    std::vector<std::vector<Cover>> components;
    // Covers that form singleton components of the line poset.
    std::vector<Cover> isolated;
};

LineComponents line_components(const Poset& p);
bool is_line_connected(const Poset& p);
// Connectivity of the line digraph of a bare edge set.
bool is_line_connected_edges(const std::vector<Cover>& edges);

// A sub-digraph of the covers forming a directed forest.
struct TreeSubgraph {
    std::vector<Cover> edges;
    std::vector<int> objects;  // objects touched by the edges, ascending
};

// Spanning tree whose own line digraph is connected, per the redundant-path
// deletion procedure; deterministic (lexicographic tie-breaks). Throws
// PosetError naming the line components when p is not line connected.
TreeSubgraph line_connected_maximal_tree(const Poset& p);

enum class CommaKind { FrontOver, BackOver, FrontUnder, BackUnder };

// Full sub-poset of the line poset on {e : phi(e) <= y}, {e : beta(e) <= y},
// {e : y <= phi(e)} or {e : y <= beta(e)}.
SubPoset comma_subposet(const LineMap& lm, int y, CommaKind kind);

// Sub-poset generated by y and its cover-neighbours, with the covers through y.
SubPoset neighborhood(const PosetPtr& p, int y);

// Sub-poset generated by an edge subset of the covers.
SubPoset sub_digraph_poset(const PosetPtr& p, const std::vector<Cover>& edges);

// Full sub-poset on an object subset (covers = transitive reduction of the
// induced relation).
SubPoset full_subposet(const PosetPtr& p, const std::vector<int>& objs);

// Same labels, same covers.
bool poset_equal(const Poset& a, const Poset& b);

// Same objects, covers reversed.
PosetPtr opposite_poset(const Poset& p);

// At most one directed cover-path between any two objects (the directed-tree
// condition; equivalently the category algebra is the free path algebra of
// the Hasse quiver).
bool is_tree(const Poset& p);
// Tree with a unique minimal object (hence a connected arborescence).
bool is_rooted_tree(const Poset& p);
// Underlying undirected graph of an edge set is acyclic.
bool is_undirected_forest(const std::vector<Cover>& edges, int n_objects);

}  // namespace posetcalc
