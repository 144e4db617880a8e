#pragma once

#include "posetcalc/grothendieck.hpp"

namespace posetcalc {

// ---- gradient ----

struct GradientResult {
    LineMap line;
    PosetModule plus;   // phi^* M, the front restriction
    PosetModule minus;  // beta^* M, the back restriction
    VirtualModule as_virtual() const;
};

GradientResult gradient(const PosetModule& m);
GradientResult gradient(const PosetModule& m, const LineMap& lm);
// Extension by additivity to formal differences.
VirtualModule gradient_virtual(const VirtualModule& x, const LineMap& lm);

struct LeibnizReport {
    VirtualModule lhs;  // grad of the product
    VirtualModule rhs;  // grad(x) . phi^* y + beta^* x . grad(y)
    bool dimvec_match = false;
    IsoResult verdict;
};

LeibnizReport leibniz_check(const PosetModule& m, const PosetModule& n, const IsoOptions& opt = {});

// ---- Kan extensions and divergence ----

enum class KanKind { LeftFront, LeftBack, RightFront, RightBack };

// Pointwise Kan extension along the front/back map: the value at y is the
// colimit (left) or limit (right) of the module over the matching comma
// sub-poset of the line poset; structure maps are induced by the inclusions
// of comma sub-posets. The result is validated.
PosetModule kan_extension(const PosetModule& n, const LineMap& lm, KanKind kind);

// Dimension vector promised by the tree closed forms: direct sums over in- or
// out-covers for LeftFront/RightBack, colimit/limit over the neighbourhood
// line poset for LeftBack/RightFront. Requires the base to be a tree.
DimVector kan_tree_closed_form_dims(const PosetModule& n, const LineMap& lm, KanKind kind);

// Module carrying the closed-form dimensions. LeftFront and RightBack carry
// intrinsic block structure maps; LeftBack and RightFront transport structure
// maps through the comparison with the pointwise Kan extension and throw
// HypothesisError when that comparison fails to be invertible.
PosetModule kan_tree_closed_form(const PosetModule& n, const LineMap& lm, KanKind kind);

enum class DivergenceSide { Left, Right };

// [L_phi N] - [L_beta N] (left) or [R_phi N] - [R_beta N] (right).
VirtualModule divergence(const PosetModule& n, const LineMap& lm, DivergenceSide side);
VirtualModule divergence_virtual(const VirtualModule& y, const LineMap& lm, DivergenceSide side);

// Composition of divergence with the gradient, flattened eagerly.
VirtualModule laplacian(const VirtualModule& x, const LineMap& lm, DivergenceSide side);

struct HarmonicReport {
    IsoResult vanishes;
    // On a rooted tree, a vanishing left Laplacian forces equal dimension
    // increments of the plus and minus parts along every cover.
    bool dimension_identity_applicable = false;
    bool dimension_identity_holds = true;
};

HarmonicReport harmonic_check(const VirtualModule& x, const LineMap& lm, DivergenceSide side,
                              const IsoOptions& opt = {});

// ---- vanishing gradient on trees ----

// The coherent family of isomorphisms recovered from a vanishing gradient on
// a line connected tree: rho[y] realizes alpha_{x0,y}, every alpha_{u,v} is
// rho[v] rho[u]^{-1}, and every structure map factors as
// alpha_{x0,y'} gamma0^k alpha_{y,x0} with k the tree distance.
struct TransportSystem {
    int x0 = -1;                // base object (id in the tree sub-poset)
    Cover base_edge{-1, -1};    // tree cover at x0 defining gamma0
    std::vector<Matrix> rho;
    Matrix gamma0;
    Matrix alpha(int u, int v) const;
};

enum class VanishingStatus { Certified, Refuted, Unknown };

struct VanishingReport {
    VanishingStatus status = VanishingStatus::Unknown;
    SubPoset tree;                        // the sub-poset generated by the tree
    std::optional<PosetModule> restricted;  // M restricted to it
    IsoResult iso;                        // witness or refutation evidence
    std::optional<TransportSystem> transport;
    // Per-object kernel and image modules, defined under the vanishing
    // hypothesis; kernel maps are zero, image maps are induced.
    std::optional<PosetModule> ker_module, im_module;
    bool locally_constant = false;
    std::string detail;
};

// Decides whether the restriction of m to the sub-poset generated by t has
// vanishing gradient; certifies with a TransportSystem or refutes through an
// invariant. t must be a line connected directed forest inside the covers.
VanishingReport vanishing_on_tree(const PosetModule& m, const TreeSubgraph& t,
                                  const IsoOptions& opt = {});

// Module over the tree sub-poset whose structure maps are
// rho[y'] gamma0 rho[y]^{-1} on covers; its gradient vanishes by construction.
PosetModule module_from_transport(const PosetPtr& tree, const Field& f,
                                  const std::vector<Matrix>& rho, const Matrix& gamma0);

// ---- integration on rooted trees ----

// The module M with gradient [G_e] for a cover e = (x,y) of a rooted tree:
// k^i along the root path with coordinate inclusions, branch values copied
// with one extra zero column. The postcondition grad[M] = [G_e] is verified
// before returning.
PosetModule integrate_injective(const PosetPtr& p, const Field& f, const Cover& e,
                                const IsoOptions& opt = {});

}  // namespace posetcalc
