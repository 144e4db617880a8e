// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its wall time. All checks are exact; there are no tolerances.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "posetcalc/calculus.hpp"
#include "posetcalc/generators.hpp"
#include "posetcalc/io.hpp"
#include "posetcalc/pairings.hpp"
#include "test_util.hpp"

using namespace posetcalc;
using namespace posetcalc::testutil;

static const Field Q = Field::rationals();

namespace {

struct Criterion {
    int number;
    const char* description;
    bool ok = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    ~Criterion() {
        std::printf("[criterion %02d] %s — %s (%.2fs)\n", number, ok ? "PASS" : "FAIL",
                    description, seconds());
        std::fflush(stdout);
    }
};

#define CRIT(...)                          \
    do {                                   \
        bool crit_value_ = (__VA_ARGS__);  \
        crit.ok &= crit_value_;            \
        CHECK(crit_value_);                \
    } while (0)

// Exact equality decision in Gr(kP) for a LINEAR poset: the rank invariant
// (identities included) is a complete isomorphism invariant there, so the two
// genuine sides are compared by their rank invariants.
bool virtual_equal_on_chain(const VirtualModule& x, const VirtualModule& y) {
    PosetModule a = direct_sum(x.plus_sum(), y.minus_sum());
    PosetModule b = direct_sum(y.plus_sum(), x.minus_sum());
    return rank_invariant(a) == rank_invariant(b);
}

PosetModule example_seven_poset_module(const PosetPtr& p, long g0, long g1, long d0, long d1) {
    // value k on a,b,c,d, k^2 on m, 0 elsewhere; arrows into m are the
    // columns (1,0), (0,1), (g0,g1), (d0,d1)
    std::map<Cover, Matrix> maps;
    auto col = [&](long r0, long r1) { return Matrix::of_int(2, 1, Q, {r0, r1}); };
    maps.emplace(Cover{p->index_of("a"), p->index_of("m")}, col(1, 0));
    maps.emplace(Cover{p->index_of("b"), p->index_of("m")}, col(0, 1));
    maps.emplace(Cover{p->index_of("c"), p->index_of("m")}, col(g0, g1));
    maps.emplace(Cover{p->index_of("d"), p->index_of("m")}, col(d0, d1));
    std::vector<int> dims(p->size(), 1);
    dims[p->index_of("o")] = 0;
    dims[p->index_of("w")] = 0;
    dims[p->index_of("m")] = 2;
    return PosetModule(p, Q, std::move(dims), std::move(maps));
}

}  // namespace

TEST_CASE("criterion 01: equal gradients, different long-range ranks on a 3-chain") {
    Criterion crit{1, "3-chain pair: vanishing gradients, rk(0<2) = 0 vs 1"};
    auto c3 = chain(3);
    std::map<Cover, Matrix> mm, nn;
    mm.emplace(Cover{0, 1}, Matrix::of_int(2, 2, Q, {1, 0, 0, 0}));
    mm.emplace(Cover{1, 2}, Matrix::of_int(2, 2, Q, {0, 0, 0, 1}));
    nn.emplace(Cover{0, 1}, Matrix::of_int(2, 2, Q, {1, 0, 0, 0}));
    nn.emplace(Cover{1, 2}, Matrix::of_int(2, 2, Q, {1, 0, 0, 0}));
    PosetModule m(c3, Q, {2, 2, 2}, std::move(mm));
    PosetModule n(c3, Q, {2, 2, 2}, std::move(nn));

    auto lm = line_poset(c3);
    auto zero = VirtualModule::zero(lm.line, Q);
    CRIT(virtual_equal(gradient(m, lm).as_virtual(), zero).isomorphic());
    CRIT(virtual_equal(gradient(n, lm).as_virtual(), zero).isomorphic());
    CRIT(rank_invariant(m)[{0, 2}] == 0);
    CRIT(rank_invariant(n)[{0, 2}] == 1);
    CRIT(crit.seconds() < 1.0);
}

TEST_CASE("criterion 02: gradient and both Laplacians vanish together on linear posets") {
    Criterion crit{2, "100 modules on linear posets: grad/left/right Laplacian verdicts agree"};
    std::mt19937_64 rng(202);
    int vanishing_seen = 0, nonvanishing_seen = 0;
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);  // objects 0..n
        auto p = chain(n + 1);
        auto lm = line_poset(p);
        PosetModule m = [&] {
            if (t % 10 < 7) return random_module_free(p, Q, 4, rng);
            // vanishing-gradient instances: all maps conjugates of one gamma0
            int d = 1 + static_cast<int>(rng() % 3);
            std::vector<Matrix> rho(p->size());
            for (int y = 0; y < p->size(); ++y) {
                do {
                    rho[y] = random_matrix(d, d, Q, rng);
                } while (!rho[y].is_invertible());
            }
            return module_from_transport(p, Q, rho, random_matrix(d, d, Q, rng));
        }();

        auto grad = gradient(m, lm).as_virtual();
        bool grad_zero = virtual_equal_on_chain(grad, VirtualModule::zero(lm.line, Q));

        auto vm = VirtualModule::of(m);
        bool left_zero = virtual_equal_on_chain(laplacian(vm, lm, DivergenceSide::Left),
                                                VirtualModule::zero(p, Q));
        bool right_zero = virtual_equal_on_chain(laplacian(vm, lm, DivergenceSide::Right),
                                                 VirtualModule::zero(p, Q));
        CRIT(grad_zero == left_zero);
        CRIT(grad_zero == right_zero);
        (grad_zero ? vanishing_seen : nonvanishing_seen)++;
    }
    CRIT(vanishing_seen > 0);
    CRIT(nonvanishing_seen > 0);
    CRIT(crit.seconds() < 30.0);
}

TEST_CASE("criterion 03: tree closed forms match the pointwise Kan extensions") {
    Criterion crit{3, "50 random trees: closed-form vs pointwise Kan extension, all four kinds"};
    std::mt19937_64 rng(303);
    int mismatches[4] = {0, 0, 0, 0};
    const KanKind kinds[4] = {KanKind::LeftFront, KanKind::LeftBack, KanKind::RightFront,
                              KanKind::RightBack};
    for (int t = 0; t < 50; ++t) {
        auto p = random_tree(3 + static_cast<int>(rng() % 10), rng);
        auto lm = line_poset(p);
        if (lm.line->size() == 0) continue;
        auto n = random_module_free(lm.line, Q, 3, rng);
        for (int k = 0; k < 4; ++k) {
            PosetModule general = kan_extension(n, lm, kinds[k]);
            DimVector closed = kan_tree_closed_form_dims(n, lm, kinds[k]);
            bool dims_agree = dimvec(general) == closed;
            CRIT(dims_agree);
            if (!dims_agree) {
                ++mismatches[k];
                continue;
            }
            PosetModule closed_mod = kan_tree_closed_form(n, lm, kinds[k]);
            CRIT(iso_check(general, closed_mod).isomorphic());
        }
    }
    std::printf("  (dimension mismatches per kind: L_phi %d, L_beta %d, R_phi %d, R_beta %d)\n",
                mismatches[0], mismatches[1], mismatches[2], mismatches[3]);
    CRIT(crit.seconds() < 60.0);
}

TEST_CASE("criterion 04: Hom-pairing adjointness of gradient and divergences") {
    Criterion crit{4, "100 random pairs: <div_l Y, X> = <Y, grad X> and the right dual"};
    std::mt19937_64 rng(404);
    int done = 0;
    while (done < 100) {
        auto p = random_poset(2 + static_cast<int>(rng() % 7), rng, 0.4);
        auto lm = line_poset(p);
        auto x = testutil::random_module(p, Q, 1, rng);
        auto y = testutil::random_module(lm.line, Q, 1, rng);
        if (x.total_dim() > 8 || y.total_dim() > 8) continue;
        ++done;
        auto vx = VirtualModule::of(x), vy = VirtualModule::of(y);
        auto grad_x = gradient_virtual(vx, lm);
        long lhs = hom_pairing(divergence_virtual(vy, lm, DivergenceSide::Left), vx);
        long rhs = hom_pairing(vy, grad_x);
        CRIT(lhs == rhs);
        long lhs2 = hom_pairing(grad_x, vy);
        long rhs2 = hom_pairing(vx, divergence_virtual(vy, lm, DivergenceSide::Right));
        CRIT(lhs2 == rhs2);
    }
    CRIT(crit.seconds() < 60.0);
}

TEST_CASE("criterion 05: Euler form equals the Euler pairing on tree posets") {
    Criterion crit{5, "50 random trees: quiver Euler form = Ext alternating sum"};
    std::mt19937_64 rng(505);
    for (int t = 0; t < 50; ++t) {
        auto p = random_tree(2 + static_cast<int>(rng() % 8), rng);
        auto m = random_module_free(p, Q, 3, rng);
        auto n = random_module_free(p, Q, 3, rng);
        CRIT(euler_form(*p, dimvec(m), dimvec(n)) ==
             euler_pairing(VirtualModule::of(m), VirtualModule::of(n)));
    }
    CRIT(crit.seconds() < 60.0);
}

TEST_CASE("criterion 06: gradients separate modules the rank invariant cannot") {
    Criterion crit{6, "7-object poset: equal rank invariants, distinct gradients; "
                      "witness when the parameter relation holds"};
    auto p = Poset::from_covers({"o", "a", "b", "c", "d", "m", "w"},
                                {{"o", "a"}, {"o", "b"}, {"o", "c"}, {"o", "d"},
                                 {"a", "m"}, {"b", "m"}, {"c", "m"}, {"d", "m"},
                                 {"m", "w"}});
    // N: (x,y) = (1,1), (s,t) = (1,2); M: (z,w) = (2,1), (u,v) = (1,2)
    // w*x*t*u = 1*1*2*1 = 2, z*y*v*s = 2*1*2*1 = 4: distinct gradients
    PosetModule n = example_seven_poset_module(p, 1, 1, 1, 2);
    PosetModule m = example_seven_poset_module(p, 2, 1, 1, 2);
    CRIT(rank_invariant(m) == rank_invariant(n));

    auto lm = line_poset(p);
    auto gm = gradient(m, lm).as_virtual(), gn = gradient(n, lm).as_virtual();
    IsoResult neq = virtual_equal(gm, gn);
    CRIT(!neq.isomorphic());
    CRIT(neq.certified);  // rank or naturality obstruction, not a failed search

    // M': (z,w) = (2,1), (u,v) = (1,1): z*y*v*s = 2 = w*x*t*u
    PosetModule m2 = example_seven_poset_module(p, 2, 1, 1, 1);
    CRIT(rank_invariant(m2) == rank_invariant(n));
    IsoResult eq = virtual_equal(gradient(m2, lm).as_virtual(), gn);
    CRIT(eq.isomorphic());
    CRIT(eq.witness.has_value());
    CRIT(crit.seconds() < 60.0);
}

TEST_CASE("criterion 07: integration reproduces injective classes on rooted trees") {
    Criterion crit{7, "30 random rooted trees, every cover: grad(integral) = [G_e] with witness"};
    std::mt19937_64 rng(707);
    for (int t = 0; t < 30; ++t) {
        auto p = random_rooted_tree(3 + static_cast<int>(rng() % 8), rng);
        auto lm = line_poset(p);
        for (const Cover& e : p->covers()) {
            PosetModule m = integrate_injective(p, Q, e);
            auto ge = VirtualModule::of(
                PosetModule::injective_at(lm.line, Q, lm.line_object_of(e)));
            IsoOptions opt;
            opt.coeff_bound = m.total_dim() + 1;
            IsoResult r = virtual_equal(gradient(m, lm).as_virtual(), ge, opt);
            CRIT(r.isomorphic());
            CRIT(r.witness.has_value());
        }
    }
    CRIT(crit.seconds() < 120.0);
}

namespace {

struct TransportInstance {
    PosetPtr tree;
    PosetModule module;
    int dim;
};

std::vector<TransportInstance> transport_instances() {
    std::vector<TransportInstance> out;
    std::mt19937_64 rng(808);
    for (int t = 0; t < 20; ++t) {
        auto p = random_line_connected_tree(3 + static_cast<int>(rng() % 6), rng);
        int d = 1 + static_cast<int>(rng() % 3);
        std::vector<Matrix> rho(p->size());
        for (int y = 0; y < p->size(); ++y) {
            do {
                rho[y] = random_matrix(d, d, Q, rng);
            } while (!rho[y].is_invertible());
        }
        Matrix gamma0 = random_matrix(d, d, Q, rng);
        out.push_back({p, module_from_transport(p, Q, rho, gamma0), d});
    }
    return out;
}

TreeSubgraph spanning_tree_of(const PosetPtr& p) {
    TreeSubgraph t;
    t.edges = p->covers();
    for (int i = 0; i < p->size(); ++i) t.objects.push_back(i);
    return t;
}

}  // namespace

TEST_CASE("criterion 08: transport systems are recovered and perturbations refuted") {
    Criterion crit{8, "modules built from transport data: certified; rank perturbation refuted"};
    std::mt19937_64 rng(809);
    for (auto& inst : transport_instances()) {
        auto rep = vanishing_on_tree(inst.module, spanning_tree_of(inst.tree));
        CRIT(rep.status == VanishingStatus::Certified);
        CRIT(rep.transport.has_value());
        if (rep.status != VanishingStatus::Certified) continue;
        // conditions (identity, composition, compatibility) were verified
        // exhaustively inside; spot-check the factorization report here
        CRIT(rep.transport->rho[rep.transport->x0] == Matrix::identity(inst.dim, Q));

        // perturb one cover map's rank
        const Cover target = inst.tree->covers()[rng() % inst.tree->covers().size()];
        std::map<Cover, Matrix> maps;
        for (const Cover& c : inst.tree->covers()) maps.emplace(c, inst.module.cover_map(c));
        Matrix old = maps.at(target);
        Matrix degenerate = old;
        if (old.rank() > 0) {
            // zero out everything: rank drops
            degenerate = Matrix::zero(old.rows(), old.cols(), Q);
        } else {
            degenerate = Matrix::identity(inst.dim, Q);
        }
        maps.at(target) = degenerate;
        PosetModule bad(inst.tree, Q, inst.module.dims(), std::move(maps));
        if (inst.tree->covers().size() >= 2) {
            auto rep2 = vanishing_on_tree(bad, spanning_tree_of(inst.tree));
            CRIT(rep2.status == VanishingStatus::Refuted);
        }
    }
    CRIT(crit.seconds() < 60.0);
}

TEST_CASE("criterion 09: rank invariant is constant under a certified vanishing gradient") {
    Criterion crit{9, "certified instances: rank constant on identities and on covers"};
    for (auto& inst : transport_instances()) {
        auto ri = rank_invariant(inst.module);
        const Poset& p = *inst.tree;
        long id_rank = ri[{0, 0}];
        for (int y = 0; y < p.size(); ++y) CRIT(ri[{y, y}] == id_rank);
        long cover_rank = ri[{p.covers().front().first, p.covers().front().second}];
        for (const Cover& c : p.covers()) CRIT(ri[{c.first, c.second}] == cover_rank);
    }
    CRIT(crit.seconds() < 60.0);
}

TEST_CASE("criterion 10: Euler pairing of constants equals the nerve characteristic") {
    Criterion crit{10, "50 random posets: chi(Ext^*(k,k)) = chain-count Euler characteristic"};
    std::mt19937_64 rng(1010);
    for (int t = 0; t < 50; ++t) {
        auto p = random_poset(1 + static_cast<int>(rng() % 8), rng, 0.4);
        auto k = PosetModule::constant(p, Q, 1);
        long chi = 0;
        int sign = 1;
        for (long e : ext_dims(k, k)) {
            chi += sign * e;
            sign = -sign;
        }
        CRIT(chi == p->nerve_euler_characteristic());
    }
    CRIT(crit.seconds() < 60.0);
}

TEST_CASE("criterion 11: ladder line posets decompose as stated") {
    Criterion crit{11, "zigzag ladders: paths with <= 2 covers; double zigzag: one path"};
    for (int n = 2; n <= 8; ++n) {
        for (char orient : {'F', 'B'}) {
            auto z = gen_ladder(n, LadderType::Zigzag, orient);
            const auto lm = line_poset(z);
            const Poset& lp = *lm.line;
            // undirected components
            std::vector<int> comp(lp.size(), -1);
            int ncomp = 0;
            for (int s = 0; s < lp.size(); ++s) {
                if (comp[s] >= 0) continue;
                std::vector<int> stack = {s};
                comp[s] = ncomp;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (const Cover& c : lp.covers()) {
                        int o = c.first == x ? c.second : (c.second == x ? c.first : -1);
                        if (o >= 0 && comp[o] < 0) {
                            comp[o] = ncomp;
                            stack.push_back(o);
                        }
                    }
                }
                ++ncomp;
            }
            std::vector<int> sizes(ncomp, 0), edges(ncomp, 0);
            std::vector<int> degree(lp.size(), 0);
            for (int x = 0; x < lp.size(); ++x) ++sizes[comp[x]];
            for (const Cover& c : lp.covers()) {
                ++edges[comp[c.first]];
                ++degree[c.first];
                ++degree[c.second];
            }
            for (int k = 0; k < ncomp; ++k) {
                CRIT(edges[k] <= 2);
                CRIT(edges[k] == sizes[k] - 1);
            }
            for (int x = 0; x < lp.size(); ++x) CRIT(degree[x] <= 2);
        }
    }
    for (int n : {3, 5, 7, 9}) {  // even arrow counts 2, 4, 6, 8
        for (char orient : {'F', 'B'}) {
            auto z = gen_ladder(n, LadderType::DoubleZigzag, orient);
            auto lm = line_poset(z);
            const Poset& lp = *lm.line;
            CRIT(is_line_connected(*z));
            CRIT(static_cast<int>(lp.covers().size()) == lp.size() - 1);
            CRIT(is_undirected_forest(lp.covers(), lp.size()));
            std::vector<int> degree(lp.size(), 0);
            for (const Cover& c : lp.covers()) {
                ++degree[c.first];
                ++degree[c.second];
            }
            for (int x = 0; x < lp.size(); ++x) CRIT(degree[x] <= 2);
        }
    }
    CRIT(crit.seconds() < 10.0);
}

TEST_CASE("criterion 12: gradient dimensions decompose through kernels and cokernels") {
    Criterion crit{12, "100 random modules: dim(phi*) - dim(beta*) = dim C - dim K object-wise"};
    std::mt19937_64 rng(1212);
    for (int t = 0; t < 100; ++t) {
        auto p = t % 2 ? random_tree(2 + static_cast<int>(rng() % 7), rng)
                       : random_poset(2 + static_cast<int>(rng() % 7), rng, 0.4);
        auto m = t % 2 ? random_module_free(p, Q, 4, rng)
                       : testutil::random_module(p, Q, 2, rng);
        auto lm = line_poset(p);
        auto phi = front_restrict(m, lm), beta = back_restrict(m, lm);
        auto km = grad_kernel_module(m, lm), cm = grad_cokernel_module(m, lm);
        for (int e = 0; e < lm.line->size(); ++e)
            CRIT(phi.dim(e) - beta.dim(e) == cm.dim(e) - km.dim(e));
    }
    CRIT(crit.seconds() < 30.0);
}

TEST_CASE("criterion 13: Leibniz rule with witnesses") {
    Criterion crit{13, "50 random pairs on chains and trees: product rule verified"};
    std::mt19937_64 rng(1313);
    for (int t = 0; t < 50; ++t) {
        auto p = t % 2 ? chain(2 + static_cast<int>(rng() % 4))
                       : random_tree(2 + static_cast<int>(rng() % 5), rng);
        auto m = random_module_free(p, Q, 2, rng);
        auto n = random_module_free(p, Q, 2, rng);
        auto rep = leibniz_check(m, n);
        CRIT(rep.dimvec_match);
        CRIT(rep.verdict.isomorphic());
        CRIT(rep.verdict.witness.has_value());
    }
    CRIT(crit.seconds() < 120.0);
}

TEST_CASE("criterion 14: the 10x10 grid pipeline") {
    Criterion crit{14, "gen 10x10 grid: validates, surjective rows, non-positive "
                       "horizontal gradient, pipeline timed"};
    auto m = gen_grid(10, 10, 20260810, 8, Q);
    CRIT(m.validate().ok);
    const Poset& p = *m.poset();
    auto is_horizontal = [&](const Cover& c) {
        const std::string &ul = p.label(c.first), &vl = p.label(c.second);
        return ul.substr(ul.find('_')) == vl.substr(vl.find('_'));
    };
    for (const Cover& c : p.covers())
        if (is_horizontal(c)) {
            const Matrix& h = m.cover_map(c);
            CRIT(h.rank() == h.rows());
        }
    auto g = gradient(m);
    DimVector d = dimvec(g.as_virtual());
    for (int e = 0; e < g.line.line->size(); ++e)
        if (is_horizontal(g.line.cover_of(e))) CRIT(d[e] <= 0);
    std::string report = report_dimvec_grid_text(d, *g.line.line);
    CRIT(report.find("horizontal:") != std::string::npos);
    CRIT(report.find("vertical:") != std::string::npos);
    CRIT(crit.seconds() < 10.0);
}
