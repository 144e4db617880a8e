#pragma once

#include <optional>

#include "posetcalc/module.hpp"

namespace posetcalc {

// Formal difference of isomorphism classes of modules on one poset. Kept as
// plain lists; zero summands are pruned, nothing else is canonicalized.
class VirtualModule {
  public:
    VirtualModule(PosetPtr p, Field f) : poset_(std::move(p)), field_(f) {}

    static VirtualModule of(PosetModule m);
    static VirtualModule zero(PosetPtr p, const Field& f) { return VirtualModule(std::move(p), f); }

    void add_plus(PosetModule m);
    void add_minus(PosetModule m);

    const PosetPtr& poset() const { return poset_; }
    const Field& field() const { return field_; }
    const std::vector<PosetModule>& plus() const { return plus_; }
    const std::vector<PosetModule>& minus() const { return minus_; }

    VirtualModule operator+(const VirtualModule& o) const;
    VirtualModule operator-(const VirtualModule& o) const;
    VirtualModule operator-() const;
    // Ring product, expanded bilinearly.
    VirtualModule tensor_with(const VirtualModule& o) const;

    PosetModule plus_sum() const;   // direct sum of the plus list
    PosetModule minus_sum() const;

  private:
    PosetPtr poset_;
    Field field_;
    std::vector<PosetModule> plus_, minus_;
};

using DimVector = std::vector<long>;
// Rank of the induced map on every relation x <= y, identities included.
using RankInvariant = std::map<std::pair<int, int>, long>;

DimVector dimvec(const PosetModule& m);
DimVector dimvec(const VirtualModule& x);
RankInvariant rank_invariant(const PosetModule& m);
RankInvariant rank_invariant(const VirtualModule& x);
// The class in the reduced Grothendieck ring: multiplicities of the simple
// modules, i.e. the dimension vector.
DimVector reduced_class(const PosetModule& m);
DimVector reduced_class(const VirtualModule& x);

enum class IsoVerdict { Isomorphic, NoIsoFound, DimsDiffer };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::NoIsoFound;
    std::optional<ModuleMap> witness;  // pointwise invertible natural transformation
    // True when the answer is proven either way: DimsDiffer, an invariant or
    // Hom-dimension obstruction, or the symbolic determinant check.
    bool certified = false;
    std::string certificate;
    // For an uncertified NoIsoFound: upper bound on the probability that an
    // isomorphism exists but every random trial missed it (Schwartz-Zippel).
    mpq_class failure_bound = 1;

    bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
};

struct IsoOptions {
    int trials = 40;
    unsigned long seed = 1;
    long coeff_bound = 10;
    // Escalate to the exact symbolic test (rationals only) when the random
    // search fails and the instance is small enough.
    bool symbolic = true;
};

// One-sided randomized isomorphism test with certified refutations where an
// invariant (dimension vector, rank invariant, Hom dimensions) differs, and a
// deterministic symbolic decision on small rational instances.
IsoResult iso_check(const PosetModule& m, const PosetModule& n, const IsoOptions& opt = {});

// Equality in the Grothendieck group: [X] = [Y] iff the two cross sums are
// isomorphic. Dimension-vector and rank-invariant pre-checks give certified
// inequality; otherwise delegates to iso_check.
IsoResult virtual_equal(const VirtualModule& x, const VirtualModule& y,
                        const IsoOptions& opt = {});

}  // namespace posetcalc
