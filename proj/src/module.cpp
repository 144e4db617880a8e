#include "posetcalc/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace posetcalc {

namespace {

std::string path_str(const Poset& p, const std::vector<int>& path) {
    std::ostringstream os;
    for (size_t i = 0; i < path.size(); ++i) os << (i ? " < " : "") << p.label(path[i]);
    return os.str();
}

// Ascending by down-set size is a linear extension.
std::vector<int> topological_order(const Poset& p, const std::vector<int>& objs) {
    std::vector<int> order = objs;
    std::vector<size_t> weight(p.size(), 0);
    for (int x : objs) weight[x] = p.down_set(x).size();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight[a] < weight[b]; });
    return order;
}

}  // namespace

PosetModule::PosetModule(PosetPtr poset, Field field, std::vector<int> dims,
                         std::map<Cover, Matrix> maps)
    : poset_(std::move(poset)),
      field_(field),
      dims_(std::move(dims)),
      maps_(std::move(maps)),
      cache_mu_(std::make_unique<std::mutex>()) {
    if (static_cast<int>(dims_.size()) != poset_->size())
        throw std::invalid_argument("module: dims size != object count");
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("module: negative dimension");
    for (auto& [c, m] : maps_) {
        if (!poset_->has_cover(c.first, c.second))
            throw std::invalid_argument("module: map on a non-cover");
        if (m.rows() != dims_[c.second] || m.cols() != dims_[c.first])
            throw std::invalid_argument("module: map shape mismatch on cover (" +
                                        poset_->label(c.first) + "," + poset_->label(c.second) +
                                        ")");
        if (m.field() != field_) throw std::invalid_argument("module: map over wrong field");
    }
    for (const Cover& c : poset_->covers())
        if (!maps_.count(c))
            maps_.emplace(c, Matrix::zero(dims_[c.second], dims_[c.first], field_));
}

PosetModule::PosetModule(const PosetModule& o)
    : poset_(o.poset_),
      field_(o.field_),
      dims_(o.dims_),
      maps_(o.maps_),
      eval_cache_(o.eval_cache_),
      cache_mu_(std::make_unique<std::mutex>()) {}

PosetModule& PosetModule::operator=(const PosetModule& o) {
    if (this != &o) {
        poset_ = o.poset_;
        field_ = o.field_;
        dims_ = o.dims_;
        maps_ = o.maps_;
        eval_cache_ = o.eval_cache_;
        cache_mu_ = std::make_unique<std::mutex>();
    }
    return *this;
}

PosetModule PosetModule::zero(PosetPtr p, const Field& f) {
    std::vector<int> dims(p->size(), 0);
    return PosetModule(std::move(p), f, std::move(dims), {});
}

PosetModule PosetModule::constant(PosetPtr p, const Field& f, int d) {
    std::map<Cover, Matrix> maps;
    for (const Cover& c : p->covers()) maps.emplace(c, Matrix::identity(d, f));
    std::vector<int> dims(p->size(), d);
    return PosetModule(std::move(p), f, std::move(dims), std::move(maps));
}

PosetModule PosetModule::constant_zero_maps(PosetPtr p, const Field& f, int d) {
    std::vector<int> dims(p->size(), d);
    return PosetModule(std::move(p), f, std::move(dims), {});
}

PosetModule PosetModule::projective_at(PosetPtr p, const Field& f, int v) {
    if (v < 0 || v >= p->size()) throw PosetError("projective_at: unknown object");
    std::vector<int> dims(p->size(), 0);
    for (int u = 0; u < p->size(); ++u) dims[u] = p->leq(v, u) ? 1 : 0;
    std::map<Cover, Matrix> maps;
    for (const Cover& c : p->covers())
        if (dims[c.first] == 1 && dims[c.second] == 1) maps.emplace(c, Matrix::identity(1, f));
    return PosetModule(std::move(p), f, std::move(dims), std::move(maps));
}

PosetModule PosetModule::injective_at(PosetPtr p, const Field& f, int v) {
    if (v < 0 || v >= p->size()) throw PosetError("injective_at: unknown object");
    std::vector<int> dims(p->size(), 0);
    for (int u = 0; u < p->size(); ++u) dims[u] = p->leq(u, v) ? 1 : 0;
    std::map<Cover, Matrix> maps;
    for (const Cover& c : p->covers())
        if (dims[c.first] == 1 && dims[c.second] == 1) maps.emplace(c, Matrix::identity(1, f));
    return PosetModule(std::move(p), f, std::move(dims), std::move(maps));
}

PosetModule PosetModule::simple_at(PosetPtr p, const Field& f, int v) {
    if (v < 0 || v >= p->size()) throw PosetError("simple_at: unknown object");
    std::vector<int> dims(p->size(), 0);
    dims[v] = 1;
    return PosetModule(std::move(p), f, std::move(dims), {});
}

int PosetModule::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

const Matrix& PosetModule::cover_map(const Cover& c) const {
    auto it = maps_.find(c);
    if (it == maps_.end()) throw std::invalid_argument("module: not a cover");
    return it->second;
}

ValidationReport PosetModule::validate() const {
    const Poset& p = *poset_;
    for (int u = 0; u < p.size(); ++u) {
        std::vector<int> ups = p.up_set(u);
        std::vector<int> order = topological_order(p, ups);
        std::map<int, Matrix> comp;
        std::map<int, std::vector<int>> path;
        comp.emplace(u, Matrix::identity(dims_[u], field_));
        path[u] = {u};
        for (int v : order) {
            if (v == u) continue;
            for (int w : p.down_covers(v)) {
                if (!p.leq(u, w)) continue;
                Matrix cand = cover_map({w, v}) * comp.at(w);
                std::vector<int> cand_path = path.at(w);
                cand_path.push_back(v);
                auto it = comp.find(v);
                if (it == comp.end()) {
                    comp.emplace(v, std::move(cand));
                    path[v] = std::move(cand_path);
                } else if (it->second != cand) {
                    ValidationReport r;
                    r.ok = false;
                    r.message = "path independence fails between " + p.label(u) + " and " +
                                p.label(v) + ": path [" + path_str(p, path.at(v)) +
                                "] disagrees with path [" + path_str(p, cand_path) + "]";
                    return r;
                }
            }
        }
    }
    return {};
}

Matrix PosetModule::eval(int x, int y) const {
    if (!poset_->leq(x, y))
        throw std::invalid_argument("module: eval on non-relation " + poset_->label(x) +
                                    " <= " + poset_->label(y));
    if (x == y) return Matrix::identity(dims_[x], field_);
    {
        std::lock_guard<std::mutex> lock(*cache_mu_);
        auto it = eval_cache_.find({x, y});
        if (it != eval_cache_.end()) return it->second;
    }
    Matrix result;
    bool found = false;
    for (int w : poset_->down_covers(y)) {
        if (!poset_->leq(x, w)) continue;
        result = cover_map({w, y}) * eval(x, w);
        found = true;
        break;
    }
    if (!found) throw std::logic_error("module: no cover path found");
    std::lock_guard<std::mutex> lock(*cache_mu_);
    return eval_cache_.emplace(std::pair<int, int>{x, y}, std::move(result)).first->second;
}

bool PosetModule::is_locally_constant() const {
    for (const Cover& c : poset_->covers())
        if (!cover_map(c).is_invertible()) return false;
    return true;
}

bool PosetModule::is_virtually_trivial() const {
    for (const Cover& c : poset_->covers())
        if (!cover_map(c).is_zero()) return false;
    return true;
}

bool PosetModule::operator==(const PosetModule& o) const {
    return field_ == o.field_ && poset_equal(*poset_, *o.poset_) && dims_ == o.dims_ &&
           maps_ == o.maps_;
}

namespace {

void check_same_poset(const PosetModule& a, const PosetModule& b, const char* op) {
    if (a.field() != b.field()) throw std::invalid_argument(std::string(op) + ": mixed fields");
    if (a.poset() != b.poset() && !poset_equal(*a.poset(), *b.poset()))
        throw std::invalid_argument(std::string(op) + ": poset mismatch");
}

}  // namespace

PosetModule direct_sum(const PosetModule& a, const PosetModule& b) {
    check_same_poset(a, b, "direct_sum");
    std::vector<int> dims(a.poset()->size());
    for (int x = 0; x < a.poset()->size(); ++x) dims[x] = a.dim(x) + b.dim(x);
    std::map<Cover, Matrix> maps;
    for (const Cover& c : a.poset()->covers())
        maps.emplace(c, Matrix::block_diag(a.cover_map(c), b.cover_map(c)));
    return PosetModule(a.poset(), a.field(), std::move(dims), std::move(maps));
}

PosetModule direct_sum(const std::vector<const PosetModule*>& parts, PosetPtr p, const Field& f) {
    PosetModule acc = PosetModule::zero(p, f);
    for (const PosetModule* m : parts) acc = direct_sum(acc, *m);
    return acc;
}

PosetModule tensor(const PosetModule& a, const PosetModule& b) {
    check_same_poset(a, b, "tensor");
    std::vector<int> dims(a.poset()->size());
    for (int x = 0; x < a.poset()->size(); ++x) dims[x] = a.dim(x) * b.dim(x);
    std::map<Cover, Matrix> maps;
    for (const Cover& c : a.poset()->covers())
        maps.emplace(c, Matrix::kronecker(a.cover_map(c), b.cover_map(c)));
    return PosetModule(a.poset(), a.field(), std::move(dims), std::move(maps));
}

PosetModule restrict_along(const PosetModule& m, PosetPtr q, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != q->size())
        throw std::invalid_argument("restrict: object map size mismatch");
    for (const Cover& c : q->covers())
        if (!m.poset()->leq(f[c.first], f[c.second]))
            throw std::invalid_argument("restrict: object map is not monotone on cover (" +
                                        q->label(c.first) + "," + q->label(c.second) + ")");
    std::vector<int> dims(q->size());
    for (int a = 0; a < q->size(); ++a) dims[a] = m.dim(f[a]);
    std::map<Cover, Matrix> maps;
    for (const Cover& c : q->covers()) maps.emplace(c, m.eval(f[c.first], f[c.second]));
    return PosetModule(std::move(q), m.field(), std::move(dims), std::move(maps));
}

PosetModule front_restrict(const PosetModule& m, const LineMap& lm) {
    return restrict_along(m, lm.line, lm.front);
}

PosetModule back_restrict(const PosetModule& m, const LineMap& lm) {
    return restrict_along(m, lm.line, lm.back);
}

PosetModule grad_kernel_module(const PosetModule& m, const LineMap& lm) {
    std::vector<int> dims(lm.line->size());
    for (int e = 0; e < lm.line->size(); ++e) {
        const Matrix& a = m.cover_map(lm.cover_of(e));
        dims[e] = a.cols() - a.rank();
    }
    return PosetModule(lm.line, m.field(), std::move(dims), {});
}

PosetModule grad_cokernel_module(const PosetModule& m, const LineMap& lm) {
    std::vector<int> dims(lm.line->size());
    for (int e = 0; e < lm.line->size(); ++e) {
        const Matrix& a = m.cover_map(lm.cover_of(e));
        dims[e] = a.rows() - a.rank();
    }
    return PosetModule(lm.line, m.field(), std::move(dims), {});
}

PosetModule grad_image_module(const PosetModule& m, const LineMap& lm) {
    // Basis of each image: the pivot columns of the cover matrix.
    std::vector<Matrix> basis(lm.line->size());
    std::vector<int> dims(lm.line->size());
    for (int e = 0; e < lm.line->size(); ++e) {
        const Matrix& a = m.cover_map(lm.cover_of(e));
        std::vector<int> pivots;
        a.rref(&pivots);
        basis[e] = a.columns(pivots);
        dims[e] = static_cast<int>(pivots.size());
    }
    std::map<Cover, Matrix> maps;
    for (const Cover& lc : lm.line->covers()) {
        Cover target = lm.cover_of(lc.second);
        Matrix image_in_next = m.cover_map(target) * basis[lc.first];
        auto x = basis[lc.second].solve(image_in_next);
        if (!x) throw std::logic_error("image module: induced map does not land in image");
        maps.emplace(lc, *x);
    }
    return PosetModule(lm.line, m.field(), std::move(dims), std::move(maps));
}

bool is_natural(const ModuleMap& t, const PosetModule& from, const PosetModule& to) {
    if (static_cast<int>(t.components.size()) != from.poset()->size()) return false;
    for (int x = 0; x < from.poset()->size(); ++x) {
        const Matrix& c = t.components[x];
        if (c.rows() != to.dim(x) || c.cols() != from.dim(x)) return false;
    }
    for (const Cover& c : from.poset()->covers()) {
        if (t.components[c.second] * from.cover_map(c) != to.cover_map(c) * t.components[c.first])
            return false;
    }
    return true;
}

bool is_pointwise_invertible(const ModuleMap& t) {
    for (const Matrix& c : t.components)
        if (!c.is_invertible()) return false;
    return true;
}

ModuleMap identity_map(const PosetModule& m) {
    ModuleMap t;
    for (int x = 0; x < m.poset()->size(); ++x)
        t.components.push_back(Matrix::identity(m.dim(x), m.field()));
    return t;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (g.components.size() != f.components.size())
        throw std::invalid_argument("compose: component count mismatch");
    ModuleMap r;
    for (size_t i = 0; i < f.components.size(); ++i)
        r.components.push_back(g.components[i] * f.components[i]);
    return r;
}

std::vector<ModuleMap> hom_basis(const PosetModule& from, const PosetModule& to) {
    check_same_poset(from, to, "hom");
    const Poset& p = *from.poset();
    const Field& f = from.field();
    std::vector<int> offset(p.size() + 1, 0);
    for (int x = 0; x < p.size(); ++x)
        offset[x + 1] = offset[x] + to.dim(x) * from.dim(x);
    const int unknowns = offset[p.size()];

    int rows = 0;
    for (const Cover& c : p.covers()) rows += to.dim(c.second) * from.dim(c.first);
    Matrix sys(rows, unknowns, f);
    int row = 0;
    for (const Cover& c : p.covers()) {
        const Matrix& a = from.cover_map(c);  // from(u) -> from(v)
        const Matrix& b = to.cover_map(c);    // to(u) -> to(v)
        const int fu = from.dim(c.first), tv = to.dim(c.second);
        const int fv = from.dim(c.second), tu = to.dim(c.first);
        for (int i = 0; i < tv; ++i)
            for (int j = 0; j < fu; ++j) {
                // (T_v * a)_{ij} - (b * T_u)_{ij} = 0
                for (int k = 0; k < fv; ++k)
                    if (!a.at(k, j).is_zero())
                        sys.set(row, offset[c.second] + i * fv + k, a.at(k, j));
                for (int k = 0; k < tu; ++k)
                    if (!b.at(i, k).is_zero())
                        sys.set(row, offset[c.first] + k * fu + j,
                                sys.at(row, offset[c.first] + k * fu + j) - b.at(i, k));
                ++row;
            }
    }
    Matrix kernel = sys.kernel_basis();
    std::vector<ModuleMap> basis;
    for (int col = 0; col < kernel.cols(); ++col) {
        ModuleMap t;
        for (int x = 0; x < p.size(); ++x) {
            Matrix comp(to.dim(x), from.dim(x), f);
            for (int i = 0; i < to.dim(x); ++i)
                for (int j = 0; j < from.dim(x); ++j)
                    comp.set(i, j, kernel.at(offset[x] + i * from.dim(x) + j, col));
            t.components.push_back(std::move(comp));
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

long hom_dim(const PosetModule& from, const PosetModule& to) {
    return static_cast<long>(hom_basis(from, to).size());
}

namespace {

std::vector<std::pair<int, int>> strict_pairs(const Poset& p, const std::vector<int>& objs) {
    std::vector<std::pair<int, int>> pairs;
    for (int a : objs)
        for (int b : objs)
            if (p.less(a, b)) pairs.emplace_back(a, b);
    return pairs;
}

}  // namespace

ColimitPresentation colimit_over(const PosetModule& m, const std::vector<int>& objects) {
    const Field& f = m.field();
    ColimitPresentation out;
    out.objects = objects;
    int total = 0;
    for (int x : objects) {
        out.offsets.push_back(total);
        total += m.dim(x);
    }
    std::map<int, int> off;
    for (size_t i = 0; i < objects.size(); ++i) off[objects[i]] = out.offsets[i];

    auto pairs = strict_pairs(*m.poset(), objects);
    int rel_cols = 0;
    for (auto& [a, b] : pairs) rel_cols += m.dim(a);
    Matrix phi(total, rel_cols, f);
    int col = 0;
    for (auto& [a, b] : pairs) {
        Matrix e = m.eval(a, b);
        for (int j = 0; j < m.dim(a); ++j, ++col) {
            for (int i = 0; i < m.dim(b); ++i)
                if (!e.at(i, j).is_zero()) phi.set(off[b] + i, col, e.at(i, j));
            phi.set(off[a] + j, col, phi.at(off[a] + j, col) - Scalar::one(f));
        }
    }
    out.proj = phi.cokernel_projection();
    out.dim = out.proj.rows();
    return out;
}

LimitPresentation limit_over(const PosetModule& m, const std::vector<int>& objects) {
    const Field& f = m.field();
    LimitPresentation out;
    out.objects = objects;
    int total = 0;
    for (int x : objects) {
        out.offsets.push_back(total);
        total += m.dim(x);
    }
    std::map<int, int> off;
    for (size_t i = 0; i < objects.size(); ++i) off[objects[i]] = out.offsets[i];

    auto pairs = strict_pairs(*m.poset(), objects);
    int rel_rows = 0;
    for (auto& [a, b] : pairs) rel_rows += m.dim(b);
    Matrix psi(rel_rows, total, f);
    int row = 0;
    for (auto& [a, b] : pairs) {
        Matrix e = m.eval(a, b);
        for (int i = 0; i < m.dim(b); ++i, ++row) {
            for (int j = 0; j < m.dim(a); ++j)
                if (!e.at(i, j).is_zero()) psi.set(row, off[a] + j, e.at(i, j));
            psi.set(row, off[b] + i, psi.at(row, off[b] + i) - Scalar::one(f));
        }
    }
    out.incl = psi.kernel_basis();
    out.dim = out.incl.cols();
    return out;
}

Matrix ColimitPresentation::leg(int obj, const PosetModule& m) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == obj) return proj.submatrix(0, offsets[i], dim, m.dim(obj));
    throw std::invalid_argument("colimit: object not in diagram");
}

Matrix LimitPresentation::leg(int obj, const PosetModule& m) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == obj) return incl.submatrix(offsets[i], 0, m.dim(obj), dim);
    throw std::invalid_argument("limit: object not in diagram");
}

ColimitPresentation colimit(const PosetModule& m) {
    std::vector<int> all(m.poset()->size());
    std::iota(all.begin(), all.end(), 0);
    return colimit_over(m, all);
}

LimitPresentation limit(const PosetModule& m) {
    std::vector<int> all(m.poset()->size());
    std::iota(all.begin(), all.end(), 0);
    return limit_over(m, all);
}

PosetModule dual_module(const PosetModule& m, PosetPtr opposite) {
    std::map<Cover, Matrix> maps;
    for (const Cover& c : opposite->covers())
        maps.emplace(c, m.cover_map({c.second, c.first}).transpose());
    return PosetModule(std::move(opposite), m.field(), m.dims(), std::move(maps));
}

}  // namespace posetcalc
