#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hoca/matrix.hpp"
#include "hoca/ring.hpp"

namespace hoca {

// Finitely generated module in invariant-factor presentation. Factor 0 is a
// free rank-1 summand of the ring, factor k >= 2 the quotient by k; factor 1
// is forbidden. The stored order of factors is presentation data; equality of
// isomorphism classes goes through normalized().
class FGModule {
public:
    FGModule() = default;
    FGModule(Ring ring, std::vector<Int> factors);

    static FGModule zero(const Ring& r) { return FGModule(r, {}); }
    static FGModule free(const Ring& r, int rank) { return FGModule(r, std::vector<Int>(rank, 0)); }
    static FGModule cyclic(const Ring& r, const Int& k) { return FGModule(r, {k}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Int>& factors() const { return factors_; }
    int rank() const { return int(factors_.size()); } // number of generators
    Int order_of_gen(int i) const { return ring_.order_of(factors_[i]); }

    bool is_zero() const { return factors_.empty(); }
    bool is_free() const; // every factor 0
    bool is_finite() const;
    Int order() const; // product of generator orders; 0 when infinite

    // Divisibility-chain normal form of the factor list.
    std::vector<Int> normalized() const;

    // Same ring and identical stored factor list (presentation equality).
    bool operator==(const FGModule& o) const { return ring_ == o.ring_ && factors_ == o.factors_; }
    bool operator!=(const FGModule& o) const { return !(*this == o); }

    std::string to_string() const; // e.g. "Z + Z/2", "0"

    std::vector<Int> reduce(std::vector<Int> v) const; // canonical coefficient representative

private:
    Ring ring_;
    std::vector<Int> factors_;
};

bool isomorphic(const FGModule& a, const FGModule& b);
FGModule direct_sum(const FGModule& a, const FGModule& b);

// Map of finitely generated modules: columns = source generators, rows =
// target generators. Entries are stored reduced modulo the target generator
// orders. Construction verifies that generator orders are respected.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(FGModule source, FGModule target, IntMat matrix);

    static ModuleMap zero(const FGModule& s, const FGModule& t) {
        return ModuleMap(s, t, IntMat::zero(t.rank(), s.rank()));
    }
    static ModuleMap identity(const FGModule& m) { return ModuleMap(m, m, IntMat::identity(m.rank())); }

    const FGModule& source() const { return src_; }
    const FGModule& target() const { return tgt_; }
    const IntMat& matrix() const { return mat_; }

    bool is_zero() const { return mat_.is_zero(); }
    std::vector<Int> apply(const std::vector<Int>& x) const { return tgt_.reduce(mat_.apply(x)); }

    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap operator-() const;
    ModuleMap scaled(const Int& c) const;
    bool operator==(const ModuleMap& o) const;

private:
    FGModule src_, tgt_;
    IntMat mat_;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f); // g after f
ModuleMap direct_sum_map(const ModuleMap& a, const ModuleMap& b);

struct KernelData {
    FGModule module;
    ModuleMap inclusion; // module -> source of f
};
KernelData module_kernel(const ModuleMap& f);

struct CokernelData {
    FGModule module;
    ModuleMap projection; // target of f -> module
    IntMat gen_lift;      // columns: chosen representatives in the target
};
CokernelData module_cokernel(const ModuleMap& f);

bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

// x with f(x) = y, deterministic (least SNF coordinates), or nullopt.
std::optional<std::vector<Int>> solve_linear(const ModuleMap& f, const std::vector<Int>& y);

// Is y in the image of f?
bool in_image(const ModuleMap& f, const std::vector<Int>& y);

// --- Hom and tensor with explicit bases -------------------------------------

// Basis of Hom(M, N): one generator per (source gen i, target gen j) pair that
// admits a nonzero hom; the generator sends e_i to multiplier * e_j.
struct HomBasis {
    FGModule module; // Hom(M, N) as an abstract module, factors in basis order
    FGModule from, to;
    struct Gen {
        int i, j;
        Int multiplier;
    };
    std::vector<Gen> gens;
};
HomBasis hom_basis(const FGModule& m, const FGModule& n);
FGModule module_hom(const FGModule& m, const FGModule& n);

std::vector<Int> hom_expand(const HomBasis& hb, const ModuleMap& f);
ModuleMap hom_realize(const HomBasis& hb, const std::vector<Int>& coeffs);

// Hom(M, N) -> Hom(M', N), phi -> phi . g  for g : M' -> M
ModuleMap hom_precompose(const HomBasis& from, const HomBasis& to, const ModuleMap& g);
// Hom(M, N) -> Hom(M, N'), phi -> h . phi  for h : N -> N'
ModuleMap hom_postcompose(const HomBasis& from, const HomBasis& to, const ModuleMap& h);

// Basis of M (x) N: pairs (i, j) with gcd of orders nontrivial.
struct TensorBasis {
    FGModule module;
    FGModule left, right;
    std::vector<std::pair<int, int>> gens;
    int index_of(int i, int j) const;
};
TensorBasis tensor_basis(const FGModule& m, const FGModule& n);
FGModule module_tensor(const FGModule& m, const FGModule& n);

// f (x) g as a map of tensor modules.
ModuleMap tensor_map(const TensorBasis& src, const TensorBasis& dst, const ModuleMap& f, const ModuleMap& g);

// --- Direct sums with offsets ------------------------------------------------

struct SumDecomposition {
    FGModule module;
    std::vector<FGModule> parts;
    std::vector<int> offsets; // generator offset of each part
    ModuleMap inclusion(int part) const;
    ModuleMap projection(int part) const;
};
SumDecomposition direct_sum(const std::vector<FGModule>& parts);

} // namespace hoca
