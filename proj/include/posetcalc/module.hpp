#pragma once

#include <map>
#include <mutex>

#include "posetcalc/matrix.hpp"
#include "posetcalc/poset.hpp"

namespace posetcalc {

struct ValidationReport {
    bool ok = true;
    std::string message;
};

// A functor from a finite poset to finite dimensional vector spaces: one
// dimension per object, one matrix per cover. Matrices on longer relations
// are composed on demand and memoized; validate() checks that composites do
// not depend on the chosen cover path.
class PosetModule {
  public:
    // Missing covers in `maps` default to the zero matrix. Shape mismatches
    // throw; path independence is checked by validate(), not here.
    PosetModule(PosetPtr poset, Field field, std::vector<int> dims, std::map<Cover, Matrix> maps);

    static PosetModule zero(PosetPtr p, const Field& f);
    static PosetModule constant(PosetPtr p, const Field& f, int d);
    static PosetModule constant_zero_maps(PosetPtr p, const Field& f, int d);
    static PosetModule projective_at(PosetPtr p, const Field& f, int v);  // F_v
    static PosetModule injective_at(PosetPtr p, const Field& f, int v);   // G_v
    static PosetModule simple_at(PosetPtr p, const Field& f, int v);      // S_v

    const PosetPtr& poset() const { return poset_; }
    const Field& field() const { return field_; }
    int dim(int x) const { return dims_[x]; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    bool is_zero_module() const { return total_dim() == 0; }
    const Matrix& cover_map(const Cover& c) const;

    ValidationReport validate() const;
    // Composite along any cover path (identity when x == y); throws if x <= y
    // fails to hold.
    Matrix eval(int x, int y) const;

    bool is_locally_constant() const;
    bool is_virtually_trivial() const;

    bool operator==(const PosetModule& o) const;

    PosetModule(const PosetModule& o);
    PosetModule& operator=(const PosetModule& o);
    PosetModule(PosetModule&&) = default;
    PosetModule& operator=(PosetModule&&) = default;

  private:
    PosetPtr poset_;
    Field field_;
    std::vector<int> dims_;
    std::map<Cover, Matrix> maps_;
    mutable std::map<std::pair<int, int>, Matrix> eval_cache_;
    mutable std::unique_ptr<std::mutex> cache_mu_;
};

PosetModule direct_sum(const PosetModule& a, const PosetModule& b);
PosetModule direct_sum(const std::vector<const PosetModule*>& parts, PosetPtr p, const Field& f);
PosetModule tensor(const PosetModule& a, const PosetModule& b);

// Restriction along a monotone map f : Q -> P (f given on object ids).
// dims'(a) = dims(f(a)); the map on a cover (a,b) of Q is eval(f(a), f(b)).
PosetModule restrict_along(const PosetModule& m, PosetPtr q, const std::vector<int>& f);

PosetModule front_restrict(const PosetModule& m, const LineMap& lm);  // phi^* m
PosetModule back_restrict(const PosetModule& m, const LineMap& lm);   // beta^* m

// Line-poset modules of per-cover kernels, cokernels and images. Kernel and
// cokernel connecting maps are zero (they are virtually trivial); the image
// module carries the induced maps.
PosetModule grad_kernel_module(const PosetModule& m, const LineMap& lm);    // K_M
PosetModule grad_cokernel_module(const PosetModule& m, const LineMap& lm);  // C_M
PosetModule grad_image_module(const PosetModule& m, const LineMap& lm);     // I_M

// Natural transformation between two modules on the same poset, stored as one
// matrix per object.
struct ModuleMap {
    std::vector<Matrix> components;
};

bool is_natural(const ModuleMap& t, const PosetModule& from, const PosetModule& to);
bool is_pointwise_invertible(const ModuleMap& t);
ModuleMap identity_map(const PosetModule& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

// Basis of the space of natural transformations from `from` to `to`, found by
// solving the naturality constraints exactly.
std::vector<ModuleMap> hom_basis(const PosetModule& from, const PosetModule& to);
long hom_dim(const PosetModule& from, const PosetModule& to);

// Colimit of the restriction of `m` to the listed objects of its poset,
// presented as the cokernel of the relation map on the direct sum of point
// spaces; `proj` composed with the block inclusion at x is the canonical leg
// M(x) -> colim.
struct ColimitPresentation {
    int dim = 0;
    Matrix proj;                // dim x total
    std::vector<int> offsets;   // block offset per listed object
    std::vector<int> objects;
    Matrix leg(int obj, const PosetModule& m) const;
};

// Dual presentation: `incl` embeds the limit into the direct sum of point
// spaces; the leg at x is the x-block of rows.
struct LimitPresentation {
    int dim = 0;
    Matrix incl;                // total x dim
    std::vector<int> offsets;
    std::vector<int> objects;
    Matrix leg(int obj, const PosetModule& m) const;
};

ColimitPresentation colimit_over(const PosetModule& m, const std::vector<int>& objects);
LimitPresentation limit_over(const PosetModule& m, const std::vector<int>& objects);
ColimitPresentation colimit(const PosetModule& m);  // over the full poset
LimitPresentation limit(const PosetModule& m);

// Contravariant dual: same dimensions over the opposite poset, transposed maps.
PosetModule dual_module(const PosetModule& m, PosetPtr opposite);

}  // namespace posetcalc
