#include "posetcalc/calculus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace posetcalc {

VirtualModule GradientResult::as_virtual() const {
    VirtualModule v(line.line, plus.field());
    v.add_plus(plus);
    v.add_minus(minus);
    return v;
}

GradientResult gradient(const PosetModule& m, const LineMap& lm) {
    return GradientResult{lm, front_restrict(m, lm), back_restrict(m, lm)};
}

GradientResult gradient(const PosetModule& m) { return gradient(m, line_poset(m.poset())); }

VirtualModule gradient_virtual(const VirtualModule& x, const LineMap& lm) {
    VirtualModule v(lm.line, x.field());
    for (const auto& m : x.plus()) {
        v.add_plus(front_restrict(m, lm));
        v.add_minus(back_restrict(m, lm));
    }
    for (const auto& m : x.minus()) {
        v.add_plus(back_restrict(m, lm));
        v.add_minus(front_restrict(m, lm));
    }
    return v;
}

LeibnizReport leibniz_check(const PosetModule& m, const PosetModule& n, const IsoOptions& opt) {
    LineMap lm = line_poset(m.poset());
    VirtualModule lhs = gradient_virtual(VirtualModule::of(tensor(m, n)), lm);

    GradientResult gm = gradient(m, lm), gn = gradient(n, lm);
    VirtualModule rhs =
        gm.as_virtual().tensor_with(VirtualModule::of(front_restrict(n, lm))) +
        VirtualModule::of(back_restrict(m, lm)).tensor_with(gn.as_virtual());

    LeibnizReport rep{lhs, rhs, dimvec(lhs) == dimvec(rhs), {}};
    rep.verdict = virtual_equal(lhs, rhs, opt);
    return rep;
}

// ---- Kan extensions ----

namespace {

std::vector<int> comma_ids(const LineMap& lm, int y, KanKind kind) {
    std::vector<int> ids;
    for (int e = 0; e < lm.line->size(); ++e) {
        bool in = false;
        switch (kind) {
            case KanKind::LeftFront: in = lm.base->leq(lm.front[e], y); break;
            case KanKind::LeftBack: in = lm.base->leq(lm.back[e], y); break;
            case KanKind::RightFront: in = lm.base->leq(y, lm.front[e]); break;
            case KanKind::RightBack: in = lm.base->leq(y, lm.back[e]); break;
        }
        if (in) ids.push_back(e);
    }
    return ids;
}

bool is_left(KanKind k) { return k == KanKind::LeftFront || k == KanKind::LeftBack; }

// Block inclusion of the direct sum over `sub` into the one over `super`.
Matrix block_inclusion(const PosetModule& n, const std::vector<int>& sub,
                       const std::vector<int>& super) {
    const Field& f = n.field();
    auto offsets = [&](const std::vector<int>& objs) {
        std::map<int, int> off;
        int total = 0;
        for (int x : objs) {
            off[x] = total;
            total += n.dim(x);
        }
        return std::pair{off, total};
    };
    auto [sub_off, sub_total] = offsets(sub);
    auto [super_off, super_total] = offsets(super);
    Matrix iota(super_total, sub_total, f);
    for (int x : sub)
        for (int i = 0; i < n.dim(x); ++i)
            iota.set(super_off[x] + i, sub_off[x] + i, Scalar::one(f));
    return iota;
}

}  // namespace

PosetModule kan_extension(const PosetModule& n, const LineMap& lm, KanKind kind) {
    if (n.poset() != lm.line && !poset_equal(*n.poset(), *lm.line))
        throw std::invalid_argument("kan: module does not live on the line poset");
    const Field& f = n.field();
    const Poset& base = *lm.base;

    std::vector<std::vector<int>> ids(base.size());
    std::vector<int> dims(base.size());
    std::vector<ColimitPresentation> colims(base.size());
    std::vector<LimitPresentation> lims(base.size());
    for (int y = 0; y < base.size(); ++y) {
        ids[y] = comma_ids(lm, y, kind);
        if (is_left(kind)) {
            colims[y] = colimit_over(n, ids[y]);
            dims[y] = colims[y].dim;
        } else {
            lims[y] = limit_over(n, ids[y]);
            dims[y] = lims[y].dim;
        }
    }

    std::map<Cover, Matrix> maps;
    for (const Cover& c : base.covers()) {
        const int y = c.first, z = c.second;
        if (is_left(kind)) {
            // the comma poset at y sits inside the one at z
            Matrix iota = block_inclusion(n, ids[y], ids[z]);
            auto x = colims[y].proj.solve_left(colims[z].proj * iota);
            if (!x) throw std::logic_error("kan: left structure map is inconsistent");
            maps.emplace(c, *x);
        } else {
            // the comma poset at z sits inside the one at y
            Matrix pi = block_inclusion(n, ids[z], ids[y]).transpose();
            auto x = lims[z].incl.solve(pi * lims[y].incl);
            if (!x) throw std::logic_error("kan: right structure map is inconsistent");
            maps.emplace(c, *x);
        }
    }
    PosetModule result(lm.base, f, std::move(dims), std::move(maps));
    auto rep = result.validate();
    if (!rep.ok) throw std::logic_error("kan: result fails path independence: " + rep.message);
    return result;
}

namespace {

std::vector<int> neighborhood_line_ids(const LineMap& lm, int y) {
    std::vector<int> ids;
    for (int u : lm.base->down_covers(y)) ids.push_back(lm.line_object_of({u, y}));
    for (int v : lm.base->up_covers(y)) ids.push_back(lm.line_object_of({y, v}));
    std::sort(ids.begin(), ids.end());
    return ids;
}

void require_tree_base(const LineMap& lm, const char* op) {
    if (!is_tree(*lm.base))
        throw HypothesisError(std::string(op) + ": the base poset is not a tree");
}

}  // namespace

DimVector kan_tree_closed_form_dims(const PosetModule& n, const LineMap& lm, KanKind kind) {
    require_tree_base(lm, "kan_tree_closed_form");
    const Poset& base = *lm.base;
    DimVector d(base.size(), 0);
    for (int y = 0; y < base.size(); ++y) {
        switch (kind) {
            case KanKind::LeftFront:
                for (int u : base.down_covers(y)) d[y] += n.dim(lm.line_object_of({u, y}));
                break;
            case KanKind::RightBack:
                for (int v : base.up_covers(y)) d[y] += n.dim(lm.line_object_of({y, v}));
                break;
            case KanKind::LeftBack:
                d[y] = colimit_over(n, neighborhood_line_ids(lm, y)).dim;
                break;
            case KanKind::RightFront:
                d[y] = limit_over(n, neighborhood_line_ids(lm, y)).dim;
                break;
        }
    }
    return d;
}

PosetModule kan_tree_closed_form(const PosetModule& n, const LineMap& lm, KanKind kind) {
    require_tree_base(lm, "kan_tree_closed_form");
    const Field& f = n.field();
    const Poset& base = *lm.base;
    DimVector dv = kan_tree_closed_form_dims(n, lm, kind);
    std::vector<int> dims(dv.begin(), dv.end());

    if (kind == KanKind::LeftFront || kind == KanKind::RightBack) {
        // blocks indexed by in-covers (LeftFront) or out-covers (RightBack)
        auto blocks = [&](int y) {
            std::vector<int> es;
            if (kind == KanKind::LeftFront)
                for (int u : base.down_covers(y)) es.push_back(lm.line_object_of({u, y}));
            else
                for (int v : base.up_covers(y)) es.push_back(lm.line_object_of({y, v}));
            std::sort(es.begin(), es.end());
            return es;
        };
        std::map<Cover, Matrix> maps;
        for (const Cover& c : base.covers()) {
            const int y = c.first, z = c.second;
            std::vector<int> src = blocks(y), dst = blocks(z);
            auto offset_of = [&](const std::vector<int>& es, int e) {
                int o = 0;
                for (int s : es) {
                    if (s == e) return o;
                    o += n.dim(s);
                }
                throw std::logic_error("kan closed form: block not found");
            };
            Matrix map(dims[z], dims[y], f);
            const int eyz = lm.line_object_of({y, z});
            if (kind == KanKind::LeftFront) {
                // every in-cover of y composes into the block (y,z) of z
                int dst_o = offset_of(dst, eyz);
                for (int e : src) {
                    int src_o = offset_of(src, e);
                    const Matrix& step = n.cover_map({e, eyz});
                    for (int i = 0; i < step.rows(); ++i)
                        for (int j = 0; j < step.cols(); ++j)
                            map.set(dst_o + i, src_o + j, step.at(i, j));
                }
            } else {
                // the block (y,z) of y maps to every out-cover block of z
                int src_o = offset_of(src, eyz);
                for (int e : dst) {
                    int dst_o = offset_of(dst, e);
                    const Matrix& step = n.cover_map({eyz, e});
                    for (int i = 0; i < step.rows(); ++i)
                        for (int j = 0; j < step.cols(); ++j)
                            map.set(dst_o + i, src_o + j, step.at(i, j));
                }
            }
            maps.emplace(c, std::move(map));
        }
        PosetModule result(lm.base, f, std::move(dims), std::move(maps));
        auto rep = result.validate();
        if (!rep.ok)
            throw std::logic_error("kan closed form: path independence failed: " + rep.message);
        return result;
    }

    // LeftBack / RightFront: neighbourhood value with structure transported
    // through the comparison maps against the pointwise Kan extension.
    PosetModule general = kan_extension(n, lm, kind);
    std::vector<Matrix> comparison(base.size());
    for (int y = 0; y < base.size(); ++y) {
        std::vector<int> small = neighborhood_line_ids(lm, y);
        std::vector<int> big = comma_ids(lm, y, kind);
        if (kind == KanKind::LeftBack) {
            ColimitPresentation cs = colimit_over(n, small);
            ColimitPresentation cb = colimit_over(n, big);
            Matrix iota = block_inclusion(n, small, big);
            auto x = cs.proj.solve_left(cb.proj * iota);
            if (!x) throw std::logic_error("kan closed form: comparison inconsistent");
            comparison[y] = *x;  // colim over neighbourhood -> general value
        } else {
            LimitPresentation ls = limit_over(n, small);
            LimitPresentation lb = limit_over(n, big);
            Matrix pi = block_inclusion(n, small, big).transpose();
            auto x = ls.incl.solve(pi * lb.incl);
            if (!x) throw std::logic_error("kan closed form: comparison inconsistent");
            comparison[y] = *x;  // general value -> lim over neighbourhood
        }
        if (!comparison[y].is_invertible())
            throw HypothesisError(
                "kan_tree_closed_form: the neighbourhood comparison at object '" +
                base.label(y) + "' is not invertible; the closed form does not carry the "
                "Kan extension here");
    }
    std::map<Cover, Matrix> maps;
    for (const Cover& c : base.covers()) {
        const Matrix& g = general.cover_map(c);
        if (kind == KanKind::LeftBack)
            maps.emplace(c, *comparison[c.second].inverse() * g * comparison[c.first]);
        else
            maps.emplace(c, comparison[c.second] * g * *comparison[c.first].inverse());
    }
    return PosetModule(lm.base, f, std::move(dims), std::move(maps));
}

VirtualModule divergence(const PosetModule& n, const LineMap& lm, DivergenceSide side) {
    VirtualModule v(lm.base, n.field());
    if (side == DivergenceSide::Left) {
        v.add_plus(kan_extension(n, lm, KanKind::LeftFront));
        v.add_minus(kan_extension(n, lm, KanKind::LeftBack));
    } else {
        v.add_plus(kan_extension(n, lm, KanKind::RightFront));
        v.add_minus(kan_extension(n, lm, KanKind::RightBack));
    }
    return v;
}

VirtualModule divergence_virtual(const VirtualModule& y, const LineMap& lm, DivergenceSide side) {
    VirtualModule v(lm.base, y.field());
    for (const auto& m : y.plus()) v = v + divergence(m, lm, side);
    for (const auto& m : y.minus()) v = v - divergence(m, lm, side);
    return v;
}

VirtualModule laplacian(const VirtualModule& x, const LineMap& lm, DivergenceSide side) {
    return divergence_virtual(gradient_virtual(x, lm), lm, side);
}

HarmonicReport harmonic_check(const VirtualModule& x, const LineMap& lm, DivergenceSide side,
                              const IsoOptions& opt) {
    HarmonicReport rep;
    VirtualModule lap = laplacian(x, lm, side);
    rep.vanishes = virtual_equal(lap, VirtualModule::zero(lm.base, x.field()), opt);
    if (side == DivergenceSide::Left && is_rooted_tree(*lm.base) && rep.vanishes.isomorphic()) {
        rep.dimension_identity_applicable = true;
        DimVector dp = dimvec(x.plus_sum()), dm = dimvec(x.minus_sum());
        for (const Cover& c : lm.base->covers())
            if (dp[c.second] - dp[c.first] != dm[c.second] - dm[c.first])
                rep.dimension_identity_holds = false;
    }
    return rep;
}

// ---- transport systems ----

Matrix TransportSystem::alpha(int u, int v) const {
    auto inv = rho[u].inverse();
    if (!inv) throw std::logic_error("transport: rho is singular");
    return rho[v] * *inv;
}

PosetModule module_from_transport(const PosetPtr& tree, const Field& f,
                                  const std::vector<Matrix>& rho, const Matrix& gamma0) {
    if (static_cast<int>(rho.size()) != tree->size())
        throw std::invalid_argument("transport: one rho per object required");
    const int n = gamma0.rows();
    std::vector<int> dims(tree->size(), n);
    std::map<Cover, Matrix> maps;
    for (const Cover& c : tree->covers()) {
        auto inv = rho[c.first].inverse();
        if (!inv) throw std::invalid_argument("transport: rho must be invertible");
        maps.emplace(c, rho[c.second] * gamma0 * *inv);
    }
    return PosetModule(tree, f, std::move(dims), std::move(maps));
}

VanishingReport vanishing_on_tree(const PosetModule& m, const TreeSubgraph& t,
                                  const IsoOptions& opt) {
    const Poset& p = *m.poset();
    for (const Cover& e : t.edges)
        if (!p.has_cover(e.first, e.second))
            throw std::invalid_argument("vanishing_on_tree: edge is not a cover of the base");
    if (!is_undirected_forest(t.edges, p.size()))
        throw HypothesisError("vanishing_on_tree: the edge set is not a tree");
    if (!is_line_connected_edges(t.edges)) {
        auto comps = line_components(p);
        std::ostringstream os;
        os << "vanishing_on_tree: the tree is not line connected";
        throw HypothesisError(os.str());
    }

    VanishingReport rep;
    rep.tree = t.edges.empty() && p.size() >= 1
                   ? full_subposet(m.poset(), t.objects)
                   : sub_digraph_poset(m.poset(), t.edges);
    PosetModule mt = restrict_along(m, rep.tree.poset, rep.tree.parent_ids);
    rep.restricted = mt;
    const Field& f = m.field();
    const PosetPtr& tp = rep.tree.poset;

    LineMap lmt = line_poset(tp);
    PosetModule phi = front_restrict(mt, lmt);
    PosetModule beta = back_restrict(mt, lmt);

    IsoOptions local = opt;
    local.coeff_bound = std::max<long>(local.coeff_bound, mt.total_dim() + 1);
    rep.iso = iso_check(beta, phi, local);
    if (!rep.iso.isomorphic()) {
        rep.status = rep.iso.certified ? VanishingStatus::Refuted : VanishingStatus::Unknown;
        rep.detail = rep.iso.certified
                         ? "gradient is nonzero: " + rep.iso.certificate
                         : "no witness found; Schwartz-Zippel failure bound " +
                               rep.iso.failure_bound.get_str();
        return rep;
    }

    // Spread the witness over the tree: rho[x0] = 1 and rho across each edge.
    std::vector<std::string> labels = tp->labels();
    int x0 = -1;
    for (int y = 0; y < tp->size(); ++y)
        if (!tp->up_covers(y).empty() && (x0 < 0 || labels[y] < labels[x0])) x0 = y;
    if (x0 < 0) x0 = 0;  // edgeless tree

    TransportSystem ts;
    ts.x0 = x0;
    ts.rho.assign(tp->size(), Matrix());
    ts.rho[x0] = Matrix::identity(mt.dim(x0), f);
    std::vector<char> known(tp->size(), 0);
    known[x0] = 1;
    std::queue<int> bfs;
    bfs.push(x0);
    while (!bfs.empty()) {
        int y = bfs.front();
        bfs.pop();
        for (const Cover& c : tp->covers()) {
            int other = -1;
            bool forward = false;
            if (c.first == y && !known[c.second]) {
                other = c.second;
                forward = true;
            } else if (c.second == y && !known[c.first]) {
                other = c.first;
            }
            if (other < 0) continue;
            const Matrix& a = rep.iso.witness->components[lmt.line_object_of(c)];
            if (forward)
                ts.rho[other] = a * ts.rho[y];
            else
                ts.rho[other] = *a.inverse() * ts.rho[y];
            known[other] = 1;
            bfs.push(other);
        }
    }
    for (int y = 0; y < tp->size(); ++y)
        if (!known[y]) throw std::logic_error("vanishing_on_tree: tree is not connected");

    // gamma0 through the least tree edge out of x0
    if (!tp->up_covers(x0).empty()) {
        int x1 = *std::min_element(
            tp->up_covers(x0).begin(), tp->up_covers(x0).end(),
            [&](int a, int b) { return labels[a] < labels[b]; });
        ts.base_edge = {x0, x1};
        ts.gamma0 = *ts.rho[x1].inverse() * mt.cover_map({x0, x1});
    } else {
        ts.gamma0 = Matrix::identity(mt.dim(x0), f);
    }

    // exhaustive compatibility check across pairs of tree covers
    for (const Cover& e1 : tp->covers())
        for (const Cover& e2 : tp->covers()) {
            Matrix lhs = ts.alpha(e1.second, e2.second) * mt.cover_map(e1);
            Matrix rhs = mt.cover_map(e2) * ts.alpha(e1.first, e2.first);
            if (lhs != rhs)
                throw std::logic_error("vanishing_on_tree: transport compatibility failed");
        }

    // factorization through gamma0 powers, on all comparable pairs
    if (ts.base_edge.first >= 0) {
        std::vector<std::vector<int>> dist(tp->size(), std::vector<int>(tp->size(), -1));
        for (int y = 0; y < tp->size(); ++y) {
            dist[y][y] = 0;
            std::function<void(int)> walk = [&](int cur) {
                for (int nxt : tp->up_covers(cur))
                    if (dist[y][nxt] < 0) {
                        dist[y][nxt] = dist[y][cur] + 1;
                        walk(nxt);
                    }
            };
            walk(y);
        }
        for (int y = 0; y < tp->size(); ++y)
            for (int z = 0; z < tp->size(); ++z) {
                if (y == z || !tp->leq(y, z)) continue;
                Matrix power = Matrix::identity(mt.dim(x0), f);
                for (int i = 0; i < dist[y][z]; ++i) power = ts.gamma0 * power;
                Matrix expect = ts.alpha(x0, z) * power * ts.alpha(y, x0);
                if (mt.eval(y, z) != expect)
                    throw std::logic_error("vanishing_on_tree: gamma0 factorization failed");
            }
    }

    // kernel and image modules (well-definedness per the transport system)
    {
        std::vector<int> kdims(tp->size(), 0), idims(tp->size(), 0);
        std::vector<Matrix> ibasis(tp->size());
        auto same_column_space = [](const Matrix& a, const Matrix& b) {
            int ra = a.rank(), rb = b.rank();
            return ra == rb && a.hstack(b).rank() == ra;
        };
        for (int u = 0; u < tp->size(); ++u) {
            const auto& ups = tp->up_covers(u);
            if (!ups.empty()) {
                Matrix k0 = mt.cover_map({u, ups.front()}).kernel_basis();
                for (int v : ups)
                    if (!same_column_space(k0, mt.cover_map({u, v}).kernel_basis()))
                        throw std::logic_error("vanishing_on_tree: kernel not well defined");
                kdims[u] = k0.cols();
            }
            const auto& downs = tp->down_covers(u);
            if (!downs.empty()) {
                auto image_basis = [&](int w) {
                    const Matrix& a = mt.cover_map({w, u});
                    std::vector<int> piv;
                    a.rref(&piv);
                    return a.columns(piv);
                };
                Matrix b0 = image_basis(downs.front());
                for (int w : downs)
                    if (!same_column_space(b0, image_basis(w)))
                        throw std::logic_error("vanishing_on_tree: image not well defined");
                ibasis[u] = b0;
                idims[u] = b0.cols();
            } else if (!ups.empty()) {
                // minimal object: image is the coimage of any outgoing map
                const Matrix& a = mt.cover_map({u, ups.front()});
                std::vector<int> piv;
                a.rref(&piv);
                Matrix cu(mt.dim(u), static_cast<int>(piv.size()), f);
                for (size_t j = 0; j < piv.size(); ++j) cu.set(piv[j], static_cast<int>(j), Scalar::one(f));
                ibasis[u] = cu;
                idims[u] = cu.cols();
            }
        }
        std::map<Cover, Matrix> imaps;
        for (const Cover& c : tp->covers()) {
            if (ibasis[c.first].cols() == 0 && idims[c.first] == 0) {
                imaps.emplace(c, Matrix::zero(idims[c.second], 0, f));
                continue;
            }
            auto x = ibasis[c.second].solve(mt.cover_map(c) * ibasis[c.first]);
            if (!x) throw std::logic_error("vanishing_on_tree: image maps inconsistent");
            imaps.emplace(c, *x);
        }
        rep.ker_module = PosetModule(tp, f, kdims, {});
        rep.im_module = PosetModule(tp, f, idims, std::move(imaps));
    }

    rep.locally_constant = mt.is_locally_constant();
    rep.transport = std::move(ts);
    rep.status = VanishingStatus::Certified;
    rep.detail = "vanishing gradient certified by a transport system";
    return rep;
}

// ---- integration ----

PosetModule integrate_injective(const PosetPtr& p, const Field& f, const Cover& e,
                                const IsoOptions& opt) {
    if (!is_rooted_tree(*p)) throw HypothesisError("integrate: the poset is not a rooted tree");
    if (!p->has_cover(e.first, e.second))
        throw HypothesisError("integrate: the edge is not a cover");

    const int root = p->minimal_objects().front();
    const int y = e.second;
    // unique root path root = path[0] < ... < path[n] = y
    std::vector<int> path;
    {
        int cur = y;
        while (true) {
            path.push_back(cur);
            const auto& downs = p->down_covers(cur);
            if (downs.empty()) break;
            cur = downs.front();  // in-degree 1 off the root
        }
        std::reverse(path.begin(), path.end());
    }
    const int n = static_cast<int>(path.size()) - 1;
    std::vector<int> path_index(p->size(), -1);
    for (int i = 0; i <= n; ++i) path_index[path[i]] = i;

    // depth of the deepest path vertex below each object
    std::vector<int> branch(p->size(), -1);
    for (int w = 0; w < p->size(); ++w) {
        for (int i = n; i >= 0; --i)
            if (p->leq(path[i], w)) {
                branch[w] = i;
                break;
            }
        if (branch[w] < 0) throw std::logic_error("integrate: object not above the root");
    }

    std::vector<int> dims(p->size());
    for (int w = 0; w < p->size(); ++w) dims[w] = branch[w];

    auto step_matrix = [&](int i) {  // k^i -> k^{i+1}, last coordinates
        Matrix a(i + 1, i, f);
        for (int r = 0; r < i; ++r) a.set(r + 1, r, Scalar::one(f));
        return a;
    };
    auto branch_matrix = [&](int i) {  // k^i -> k^i, [A | 0]
        Matrix b(i, i, f);
        for (int r = 0; r + 1 < i; ++r) b.set(r + 1, r, Scalar::one(f));
        return b;
    };

    std::map<Cover, Matrix> maps;
    for (const Cover& c : p->covers()) {
        int iu = path_index[c.first], iv = path_index[c.second];
        if (iu >= 0 && iv == iu + 1)
            maps.emplace(c, step_matrix(iu));
        else
            maps.emplace(c, branch_matrix(branch[c.second]));
    }
    PosetModule m(p, f, std::move(dims), std::move(maps));
    auto rep = m.validate();
    if (!rep.ok) throw std::logic_error("integrate: invalid module: " + rep.message);

    // postcondition: grad[M] = [G_e]
    LineMap lm = line_poset(p);
    GradientResult g = gradient(m, lm);
    PosetModule ge = PosetModule::injective_at(lm.line, f, lm.line_object_of(e));
    IsoOptions local = opt;
    local.coeff_bound = std::max<long>(local.coeff_bound, m.total_dim() + 1);
    local.trials = std::max(local.trials, 60);
    IsoResult check = iso_check(g.plus, direct_sum(g.minus, ge), local);
    if (!check.isomorphic())
        throw std::logic_error("integrate: gradient does not reproduce the injective class");
    return m;
}

}  // namespace posetcalc
