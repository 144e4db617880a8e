#include "posetcalc/pairings.hpp"

#include <algorithm>
#include <numeric>

namespace posetcalc {

namespace {

// Minimal projective cover of m: F_x appears with multiplicity
// dim coker(sum of the incoming cover maps at x).
struct Cover0 {
    PosetModule p;                 // the covering projective module
    std::vector<int> mult;         // multiplicity per object
    ModuleMap q;                   // p ->> m
};

Cover0 projective_cover(const PosetModule& m) {
    const Poset& ps = *m.poset();
    const Field& f = m.field();
    std::vector<int> mult(ps.size(), 0);
    std::vector<Matrix> reps(ps.size());  // chosen lifts of a basis of the top
    for (int x = 0; x < ps.size(); ++x) {
        Matrix in(m.dim(x), 0, f);
        for (int u : ps.down_covers(x)) in = in.hstack(m.cover_map({u, x}));
        Matrix proj = in.cokernel_projection();
        mult[x] = proj.rows();
        if (mult[x] > 0) {
            auto v = proj.solve(Matrix::identity(mult[x], f));
            reps[x] = *v;
        } else {
            reps[x] = Matrix::zero(m.dim(x), 0, f);
        }
    }
    PosetModule p0 = PosetModule::zero(m.poset(), f);
    for (int x = 0; x < ps.size(); ++x)
        for (int i = 0; i < mult[x]; ++i)
            p0 = direct_sum(p0, PosetModule::projective_at(m.poset(), f, x));
    // q: block (x, i) at object w is eval(x, w) applied to the chosen lift
    ModuleMap q;
    for (int w = 0; w < ps.size(); ++w) {
        Matrix comp(m.dim(w), p0.dim(w), f);
        int col = 0;
        for (int x = 0; x < ps.size(); ++x) {
            if (!ps.leq(x, w)) continue;  // F_x vanishes at w otherwise
            Matrix carried = m.eval(x, w) * reps[x];
            for (int i = 0; i < mult[x]; ++i, ++col)
                for (int r = 0; r < m.dim(w); ++r) comp.set(r, col, carried.at(r, i));
        }
        if (col != p0.dim(w)) throw std::logic_error("projective cover: block bookkeeping");
        if (comp.rank() != m.dim(w)) throw std::logic_error("projective cover: not surjective");
        q.components.push_back(std::move(comp));
    }
    if (!is_natural(q, p0, m)) throw std::logic_error("projective cover: not natural");
    return {std::move(p0), std::move(mult), std::move(q)};
}

// Kernel of a natural surjection as a module, with its inclusion.
std::pair<PosetModule, ModuleMap> kernel_module(const ModuleMap& q, const PosetModule& from,
                                                const PosetModule& to) {
    const Poset& ps = *from.poset();
    const Field& f = from.field();
    std::vector<int> dims(ps.size());
    ModuleMap incl;
    for (int x = 0; x < ps.size(); ++x) {
        incl.components.push_back(q.components[x].kernel_basis());
        dims[x] = incl.components[x].cols();
    }
    std::map<Cover, Matrix> maps;
    for (const Cover& c : ps.covers()) {
        auto sol = incl.components[c.second].solve(from.cover_map(c) * incl.components[c.first]);
        if (!sol) throw std::logic_error("kernel module: maps do not restrict");
        maps.emplace(c, *sol);
    }
    return {PosetModule(from.poset(), f, std::move(dims), std::move(maps)), std::move(incl)};
}

}  // namespace

ProjectiveResolution projective_resolution(const PosetModule& m) {
    ProjectiveResolution res;
    const int bound = m.poset()->longest_chain_length() + 1;
    PosetModule current = m;
    std::optional<ModuleMap> prev_incl;  // kernel of the previous stage into its cover
    for (int stage = 0; stage <= bound + 1; ++stage) {
        if (current.is_zero_module()) break;
        if (stage > bound)
            throw std::logic_error("projective resolution exceeded the chain-length bound");
        Cover0 cov = projective_cover(current);
        if (stage == 0) {
            res.augmentation = cov.q;
        } else {
            // differential P_stage -> P_{stage-1} through the previous kernel
            ModuleMap d;
            for (size_t x = 0; x < cov.q.components.size(); ++x)
                d.components.push_back(prev_incl->components[x] * cov.q.components[x]);
            res.differentials.push_back(std::move(d));
        }
        auto [ker, incl] = kernel_module(cov.q, cov.p, current);
        res.terms.push_back(std::move(cov.p));
        res.multiplicities.push_back(std::move(cov.mult));
        prev_incl = std::move(incl);
        current = std::move(ker);
    }
    if (res.terms.empty()) {
        res.terms.push_back(PosetModule::zero(m.poset(), m.field()));
        res.multiplicities.push_back(std::vector<int>(m.poset()->size(), 0));
        res.augmentation = ModuleMap{};
        for (int x = 0; x < m.poset()->size(); ++x)
            res.augmentation.components.push_back(Matrix::zero(m.dim(x), 0, m.field()));
    }
    // exactness bookkeeping, object-wise: with f_0 the augmentation and f_i
    // the differentials, rank(f_i) = dim P_{i-1} - rank(f_{i-1}) and the
    // sequence ends with a zero kernel.
    const int stages = static_cast<int>(res.terms.size());
    for (int x = 0; x < m.poset()->size(); ++x) {
        int prev_rank = res.augmentation.components[x].rank();
        if (prev_rank != m.dim(x)) throw std::logic_error("resolution: augmentation not onto");
        for (int i = 0; i <= stages - 1; ++i) {
            int next_rank =
                i < stages - 1 ? res.differentials[i].components[x].rank() : 0;
            if (next_rank != res.terms[i].dim(x) - prev_rank)
                throw std::logic_error("resolution: not exact");
            prev_rank = next_rank;
        }
    }
    return res;
}

InjectiveResolution injective_resolution(const PosetModule& m) {
    PosetPtr op = opposite_poset(*m.poset());
    ProjectiveResolution dual = projective_resolution(dual_module(m, op));
    InjectiveResolution res;
    for (const auto& t : dual.terms) res.terms.push_back(dual_module(t, m.poset()));
    res.multiplicities = dual.multiplicities;
    auto transpose_map = [](const ModuleMap& mm) {
        ModuleMap t;
        for (const Matrix& c : mm.components) t.components.push_back(c.transpose());
        return t;
    };
    res.coaugmentation = transpose_map(dual.augmentation);
    for (const auto& d : dual.differentials) res.differentials.push_back(transpose_map(d));
    return res;
}

long hom_pairing(const VirtualModule& x, const VirtualModule& y) {
    long total = 0;
    for (const auto& a : x.plus()) {
        for (const auto& b : y.plus()) total += hom_dim(a, b);
        for (const auto& b : y.minus()) total -= hom_dim(a, b);
    }
    for (const auto& a : x.minus()) {
        for (const auto& b : y.plus()) total -= hom_dim(a, b);
        for (const auto& b : y.minus()) total += hom_dim(a, b);
    }
    return total;
}

namespace {

// Flatten a module map into one coordinate column.
Matrix vectorize(const ModuleMap& t, const Field& f) {
    int total = 0;
    for (const Matrix& c : t.components) total += c.rows() * c.cols();
    Matrix v(total, 1, f);
    int at = 0;
    for (const Matrix& c : t.components)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) v.set(at++, 0, c.at(i, j));
    return v;
}

}  // namespace

std::vector<long> ext_dims(const PosetModule& m, const PosetModule& n) {
    ProjectiveResolution res = projective_resolution(m);
    const Field& f = m.field();
    const int len = static_cast<int>(res.terms.size());

    std::vector<std::vector<ModuleMap>> bases(len);
    for (int i = 0; i < len; ++i) bases[i] = hom_basis(res.terms[i], n);

    // delta_i : Hom(P_i, n) -> Hom(P_{i+1}, n), T |-> T . d_{i+1}
    std::vector<Matrix> delta(len);
    for (int i = 0; i + 1 < len; ++i) {
        Matrix big(0, 0, f);
        // column basis matrix of Hom(P_{i+1}, n)
        Matrix basis_cols(0, 0, f);
        bool first = true;
        for (const ModuleMap& b : bases[i + 1]) {
            Matrix col = vectorize(b, f);
            basis_cols = first ? col : basis_cols.hstack(col);
            first = false;
        }
        Matrix images(0, 0, f);
        first = true;
        for (const ModuleMap& t : bases[i]) {
            ModuleMap u;
            for (size_t x = 0; x < t.components.size(); ++x)
                u.components.push_back(t.components[x] *
                                       res.differentials[i].components[x]);
            Matrix col = vectorize(u, f);
            images = first ? col : images.hstack(col);
            first = false;
        }
        if (bases[i].empty()) {
            delta[i] = Matrix::zero(static_cast<int>(bases[i + 1].size()), 0, f);
            continue;
        }
        if (bases[i + 1].empty()) {
            delta[i] = Matrix::zero(0, static_cast<int>(bases[i].size()), f);
            continue;
        }
        auto coords = basis_cols.solve(images);
        if (!coords) throw std::logic_error("ext: image misses the Hom space");
        delta[i] = *coords;
    }
    if (len > 0) delta[len - 1] = Matrix::zero(0, static_cast<int>(bases[len - 1].size()), f);

    std::vector<long> ext(len, 0);
    long prev_rank = 0;
    for (int i = 0; i < len; ++i) {
        long kernel = static_cast<long>(bases[i].size()) - delta[i].rank();
        ext[i] = kernel - prev_rank;
        prev_rank = delta[i].rank();
    }
    while (ext.size() > 1 && ext.back() == 0) ext.pop_back();
    return ext;
}

long euler_pairing(const PosetModule& m, const PosetModule& n) {
    long chi = 0;
    int sign = 1;
    for (long e : ext_dims(m, n)) {
        chi += sign * e;
        sign = -sign;
    }
    return chi;
}

long euler_pairing(const VirtualModule& x, const VirtualModule& y) {
    long total = 0;
    for (const auto& a : x.plus()) {
        for (const auto& b : y.plus()) total += euler_pairing(a, b);
        for (const auto& b : y.minus()) total -= euler_pairing(a, b);
    }
    for (const auto& a : x.minus()) {
        for (const auto& b : y.plus()) total -= euler_pairing(a, b);
        for (const auto& b : y.minus()) total += euler_pairing(a, b);
    }
    return total;
}

long euler_form(const Poset& p, const DimVector& f, const DimVector& g) {
    if (!is_tree(p))
        throw HypothesisError("euler_form: the Hasse diagram has parallel directed paths");
    if (static_cast<int>(f.size()) != p.size() || static_cast<int>(g.size()) != p.size())
        throw std::invalid_argument("euler_form: dimension vector size mismatch");
    long total = 0;
    for (int x = 0; x < p.size(); ++x) total += f[x] * g[x];
    for (const Cover& c : p.covers()) total -= f[c.first] * g[c.second];
    return total;
}

std::vector<long> cohomology_dims(const PosetModule& m) {
    return ext_dims(PosetModule::constant(m.poset(), m.field(), 1), m);
}

PairingGradReport pairing_with_gradient(const PosetModule& m, const PosetModule& n,
                                        const LineMap& lm) {
    PairingGradReport rep{};
    const Field& f = m.field();
    PosetModule phi = front_restrict(m, lm), beta = back_restrict(m, lm);
    rep.direct_left = euler_pairing(phi, n) - euler_pairing(beta, n);
    rep.direct_right = euler_pairing(n, phi) - euler_pairing(n, beta);

    PosetModule km = grad_kernel_module(m, lm), cm = grad_cokernel_module(m, lm);
    rep.via_kernels_left = euler_pairing(cm, n) - euler_pairing(km, n);
    rep.via_kernels_right = euler_pairing(n, cm) - euler_pairing(n, km);

    rep.via_simples_left = 0;
    rep.via_simples_right = 0;
    for (int e = 0; e < lm.line->size(); ++e) {
        long mult = cm.dim(e) - km.dim(e);
        if (mult == 0) continue;
        PosetModule se = PosetModule::simple_at(lm.line, f, e);
        rep.via_simples_left += mult * euler_pairing(se, n);
        rep.via_simples_right += mult * euler_pairing(n, se);
    }
    rep.consistent = rep.direct_left == rep.via_kernels_left &&
                     rep.direct_left == rep.via_simples_left &&
                     rep.direct_right == rep.via_kernels_right &&
                     rep.direct_right == rep.via_simples_right;
    return rep;
}

PseudoAdjointnessReport pseudo_adjointness_check(const PosetModule& m, const PosetModule& n,
                                                 const LineMap& lm) {
    if (!is_tree(*lm.base))
        throw HypothesisError("pseudo adjointness: the base is not a tree");
    ProjectiveResolution proj = projective_resolution(m);
    InjectiveResolution inj = injective_resolution(m);
    if (proj.length() > 1 || inj.length() > 1)
        throw HypothesisError("pseudo adjointness: resolutions longer than one step");

    const Field& f = m.field();
    VirtualModule vm = VirtualModule::of(m);
    VirtualModule nd_left = divergence(n, lm, DivergenceSide::Left);
    VirtualModule nd_right = divergence(n, lm, DivergenceSide::Right);
    VirtualModule vn = VirtualModule::of(n);

    VirtualModule ij(m.poset(), f);  // [I] - [J]
    ij.add_plus(inj.terms[0]);
    if (inj.length() >= 1) ij.add_minus(inj.terms[1]);
    VirtualModule pq(m.poset(), f);  // [P] - [Q]
    pq.add_plus(proj.terms[0]);
    if (proj.length() >= 1) pq.add_minus(proj.terms[1]);

    PseudoAdjointnessReport rep{};
    rep.left_chi = euler_pairing(nd_left, vm);
    rep.left_hom_resolution = hom_pairing(nd_left, ij);
    rep.left_hom_gradient = hom_pairing(vn, gradient_virtual(ij, lm));
    rep.left_holds = rep.left_chi == rep.left_hom_resolution &&
                     rep.left_chi == rep.left_hom_gradient;

    rep.right_chi = euler_pairing(vm, nd_right);
    rep.right_hom_resolution = hom_pairing(pq, nd_right);
    rep.right_hom_gradient = hom_pairing(gradient_virtual(pq, lm), vn);
    rep.right_holds = rep.right_chi == rep.right_hom_resolution &&
                      rep.right_chi == rep.right_hom_gradient;
    return rep;
}

}  // namespace posetcalc
