#include "hoca/module.hpp"

#include <algorithm>

namespace hoca {

FGModule::FGModule(Ring ring, std::vector<Int> factors)
    : ring_(std::move(ring)), factors_(std::move(factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        const Int& f = factors_[i];
        if (f == 1 || f < 0)
            throw Error(ErrorKind::MalformedInput,
                        "invariant factor at index " + std::to_string(i) + " is " + f.str() +
                            " (must be 0 or >= 2)");
        if (!ring_.is_integers() && f != 0 && ring_.modulus() % f != 0)
            throw Error(ErrorKind::MalformedInput,
                        "invariant factor " + f.str() + " does not divide the modulus " +
                            ring_.modulus().str());
    }
}

bool FGModule::is_free() const {
    for (const auto& f : factors_)
        if (f != 0) return false;
    return true;
}

bool FGModule::is_finite() const {
    if (!ring_.is_integers()) return true;
    for (const auto& f : factors_)
        if (f == 0) return false;
    return true;
}

Int FGModule::order() const {
    Int o = 1;
    for (const auto& f : factors_) {
        Int k = ring_.order_of(f);
        if (k == 0) return 0;
        o *= k;
    }
    return o;
}

std::vector<Int> FGModule::normalized() const {
    if (factors_.empty()) return {};
    // SNF of the diagonal matrix of generator orders gives the chain.
    IntMat d(rank(), rank());
    for (int i = 0; i < rank(); ++i) d.at(i, i) = order_of_gen(i);
    SmithResult s = smith_normal_form(d);
    std::vector<Int> out;
    for (int i = 0; i < rank(); ++i) {
        Int v = s.D.at(i, i);
        if (v == 1) continue;
        if (!ring_.is_integers() && v == ring_.modulus()) v = 0;
        out.push_back(v);
    }
    // chain order d1 | d2 | ... with zeros (free parts) last
    std::stable_sort(out.begin(), out.end(), [](const Int& a, const Int& b) {
        if (a == 0) return false;
        if (b == 0) return true;
        return a < b;
    });
    return out;
}

std::string FGModule::to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    std::vector<Int> nf = normalized();
    if (nf.empty()) return "0";
    for (size_t i = 0; i < nf.size(); ++i) {
        if (i) s += " + ";
        if (nf[i] == 0)
            s += ring_.is_integers() ? "Z" : "Z/" + ring_.modulus().str();
        else
            s += "Z/" + nf[i].str();
    }
    return s;
}

std::vector<Int> FGModule::reduce(std::vector<Int> v) const {
    for (int i = 0; i < rank(); ++i) v[i] = mod_floor(v[i], order_of_gen(i));
    return v;
}

bool isomorphic(const FGModule& a, const FGModule& b) {
    return a.ring() == b.ring() && a.normalized() == b.normalized();
}

FGModule direct_sum(const FGModule& a, const FGModule& b) {
    if (a.ring() != b.ring()) throw Error(ErrorKind::Usage, "direct_sum: ring mismatch");
    std::vector<Int> f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return FGModule(a.ring(), std::move(f));
}

ModuleMap::ModuleMap(FGModule source, FGModule target, IntMat matrix)
    : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
    if (src_.ring() != tgt_.ring()) throw Error(ErrorKind::Usage, "module map: ring mismatch");
    if (mat_.rows() != tgt_.rank() || mat_.cols() != src_.rank())
        throw Error(ErrorKind::MalformedInput, "module map: matrix shape mismatch");
    for (int i = 0; i < mat_.rows(); ++i) {
        Int ti = tgt_.order_of_gen(i);
        for (int j = 0; j < mat_.cols(); ++j) {
            mat_.at(i, j) = mod_floor(mat_.at(i, j), ti);
            Int sj = src_.order_of_gen(j);
            if (sj != 0 && !divides(ti, sj * mat_.at(i, j)))
                throw Error(ErrorKind::InvariantViolation,
                            "module map does not respect generator orders at entry (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    return ModuleMap(src_, tgt_, mat_ + o.mat_);
}
ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
    return ModuleMap(src_, tgt_, mat_ - o.mat_);
}
ModuleMap ModuleMap::operator-() const { return ModuleMap(src_, tgt_, -mat_); }
ModuleMap ModuleMap::scaled(const Int& c) const { return ModuleMap(src_, tgt_, mat_.scaled(c)); }

bool ModuleMap::operator==(const ModuleMap& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && mat_ == o.mat_;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (!(f.target() == g.source()))
        throw Error(ErrorKind::Usage, "compose: target/source mismatch");
    return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix());
}

ModuleMap direct_sum_map(const ModuleMap& a, const ModuleMap& b) {
    return ModuleMap(direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()),
                     a.matrix().dsum(b.matrix()));
}

namespace {

// Relation columns of a presentation Z^rank ->> M: order * e_i for each
// generator of finite order.
IntMat relation_columns(const FGModule& m) {
    std::vector<int> idx;
    for (int i = 0; i < m.rank(); ++i)
        if (m.order_of_gen(i) != 0) idx.push_back(i);
    IntMat r(m.rank(), int(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) r.at(idx[j], int(j)) = m.order_of_gen(idx[j]);
    return r;
}

// Quotient Z^n / column lattice, with the ambient module supplying the ring
// and (for Z/m) the ambient relations (callers must include them in L).
struct QuotientData {
    FGModule module;
    IntMat proj;     // n columns -> module gens
    IntMat gen_lift; // module gens as columns in Z^n
};

QuotientData quotient_by_lattice(const Ring& ring, int n, const IntMat& L) {
    SmithResult s = smith_normal_form(L);
    // generator i of the quotient has order d_i (0 beyond the rank)
    std::vector<Int> factors;
    std::vector<int> kept;
    IntMat uinv_needed; // computed lazily below via solve on U
    for (int i = 0; i < n; ++i) {
        Int d = (i < std::min(L.rows(), L.cols())) ? s.D.at(i, i) : Int(0);
        if (d == 1) continue;
        if (!ring.is_integers() && d == ring.modulus()) d = 0;
        factors.push_back(d);
        kept.push_back(i);
    }
    FGModule q(ring, factors);
    IntMat proj(int(kept.size()), n);
    for (size_t r = 0; r < kept.size(); ++r)
        for (int c = 0; c < n; ++c) proj.at(int(r), c) = s.U.at(kept[r], c);
    // U^{-1} columns for kept indices: solve U x = e_i (U unimodular).
    IntMat lift(n, int(kept.size()));
    for (size_t c = 0; c < kept.size(); ++c) {
        std::vector<Int> e(n, 0);
        e[kept[c]] = 1;
        auto x = solve_integer(s.U, e);
        lift.set_col(int(c), *x);
    }
    return {q, proj, lift};
}

} // namespace

CokernelData module_cokernel(const ModuleMap& f) {
    const FGModule& n = f.target();
    IntMat L = f.matrix().hcat(relation_columns(n));
    QuotientData q = quotient_by_lattice(n.ring(), n.rank(), L);
    ModuleMap proj(n, q.module, q.proj);
    return {q.module, proj, q.gen_lift};
}

KernelData module_kernel(const ModuleMap& f) {
    const FGModule& m = f.source();
    const FGModule& n = f.target();
    // Lattice L = { x : f(x) = 0 in N } = x-parts of ker [A | relN].
    IntMat B = f.matrix().hcat(relation_columns(n));
    IntMat W = kernel_lattice(B);
    IntMat X = W.submatrix(0, m.rank(), 0, W.cols());
    // Basis of the column lattice of X via SNF.
    SmithResult s = smith_normal_form(X);
    std::vector<std::vector<Int>> basis;
    for (int i = 0; i < s.rank; ++i) {
        std::vector<Int> e(m.rank(), 0);
        e[i] = s.D.at(i, i);
        auto col = solve_integer(s.U, e); // U^{-1} * (d_i e_i)
        basis.push_back(*col);
    }
    int k = int(basis.size());
    IntMat Bl(m.rank(), k);
    for (int j = 0; j < k; ++j) Bl.set_col(j, basis[j]);
    // Express the relations of M in the basis (each is in L).
    IntMat relM = relation_columns(m);
    IntMat C(k, relM.cols());
    for (int j = 0; j < relM.cols(); ++j) {
        auto c = solve_integer(Bl, relM.col_vec(j));
        if (!c) throw Error(ErrorKind::InvariantViolation, "kernel: relation escapes lattice");
        C.set_col(j, *c);
    }
    QuotientData q = quotient_by_lattice(m.ring(), k, C);
    // inclusion: generators of the quotient, lifted to Z^k, pushed through Bl
    IntMat incl = Bl * q.gen_lift;
    ModuleMap inclusion(q.module, m, incl);
    return {q.module, inclusion};
}

bool is_injective(const ModuleMap& f) { return module_kernel(f).module.is_zero(); }
bool is_surjective(const ModuleMap& f) { return module_cokernel(f).module.is_zero(); }
bool is_isomorphism(const ModuleMap& f) { return is_injective(f) && is_surjective(f); }

std::optional<std::vector<Int>> solve_linear(const ModuleMap& f, const std::vector<Int>& y) {
    const FGModule& m = f.source();
    const FGModule& n = f.target();
    if (int(y.size()) != n.rank()) throw Error(ErrorKind::Usage, "solve_linear: element size mismatch");
    IntMat B = f.matrix().hcat(relation_columns(n));
    auto w = solve_integer(B, y);
    if (!w) return std::nullopt;
    std::vector<Int> x(w->begin(), w->begin() + m.rank());
    return m.reduce(x);
}

bool in_image(const ModuleMap& f, const std::vector<Int>& y) { return solve_linear(f, y).has_value(); }

HomBasis hom_basis(const FGModule& m, const FGModule& n) {
    if (m.ring() != n.ring()) throw Error(ErrorKind::Usage, "hom: ring mismatch");
    const Ring& ring = m.ring();
    HomBasis hb;
    hb.from = m;
    hb.to = n;
    std::vector<Int> factors;
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < n.rank(); ++j) {
            Int a = m.order_of_gen(i), b = n.order_of_gen(j);
            Int ord, mult;
            if (a == 0) { // free source: any target value
                ord = b;
                mult = 1;
            } else if (b == 0) { // torsion into free: zero only
                continue;
            } else {
                Int g = gcd(a, b);
                if (g == 1) continue;
                ord = g;
                mult = b / g;
            }
            Int factor = ord;
            if (!ring.is_integers() && factor == ring.modulus()) factor = 0;
            factors.push_back(factor);
            hb.gens.push_back({i, j, mult});
        }
    hb.module = FGModule(ring, factors);
    return hb;
}

FGModule module_hom(const FGModule& m, const FGModule& n) { return hom_basis(m, n).module; }

std::vector<Int> hom_expand(const HomBasis& hb, const ModuleMap& f) {
    if (!(f.source() == hb.from && f.target() == hb.to))
        throw Error(ErrorKind::Usage, "hom_expand: basis mismatch");
    std::vector<Int> c(hb.gens.size(), 0);
    // entries not covered by any basis generator must vanish
    IntMat probe = IntMat::zero(hb.to.rank(), hb.from.rank());
    for (size_t k = 0; k < hb.gens.size(); ++k) {
        const auto& g = hb.gens[k];
        Int entry = f.matrix().at(g.j, g.i);
        if (entry % g.multiplier != 0)
            throw Error(ErrorKind::InvariantViolation, "hom_expand: entry not a basis multiple");
        c[k] = mod_floor(entry / g.multiplier, hb.module.order_of_gen(int(k)));
        probe.at(g.j, g.i) = entry;
    }
    if (!(probe == f.matrix()))
        throw Error(ErrorKind::InvariantViolation, "hom_expand: map outside hom module");
    return c;
}

ModuleMap hom_realize(const HomBasis& hb, const std::vector<Int>& coeffs) {
    IntMat a = IntMat::zero(hb.to.rank(), hb.from.rank());
    for (size_t k = 0; k < hb.gens.size(); ++k) {
        const auto& g = hb.gens[k];
        a.at(g.j, g.i) += coeffs[k] * g.multiplier;
    }
    return ModuleMap(hb.from, hb.to, a);
}

ModuleMap hom_precompose(const HomBasis& from, const HomBasis& to, const ModuleMap& g) {
    IntMat a(int(to.gens.size()), int(from.gens.size()));
    for (size_t k = 0; k < from.gens.size(); ++k) {
        std::vector<Int> e(from.gens.size(), 0);
        e[k] = 1;
        auto c = hom_expand(to, compose(hom_realize(from, e), g));
        a.set_col(int(k), c);
    }
    return ModuleMap(from.module, to.module, a);
}

ModuleMap hom_postcompose(const HomBasis& from, const HomBasis& to, const ModuleMap& h) {
    IntMat a(int(to.gens.size()), int(from.gens.size()));
    for (size_t k = 0; k < from.gens.size(); ++k) {
        std::vector<Int> e(from.gens.size(), 0);
        e[k] = 1;
        auto c = hom_expand(to, compose(h, hom_realize(from, e)));
        a.set_col(int(k), c);
    }
    return ModuleMap(from.module, to.module, a);
}

int TensorBasis::index_of(int i, int j) const {
    for (size_t k = 0; k < gens.size(); ++k)
        if (gens[k].first == i && gens[k].second == j) return int(k);
    return -1;
}

TensorBasis tensor_basis(const FGModule& m, const FGModule& n) {
    if (m.ring() != n.ring()) throw Error(ErrorKind::Usage, "tensor: ring mismatch");
    const Ring& ring = m.ring();
    TensorBasis tb;
    tb.left = m;
    tb.right = n;
    std::vector<Int> factors;
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < n.rank(); ++j) {
            Int a = m.order_of_gen(i), b = n.order_of_gen(j);
            Int g = (a == 0) ? b : (b == 0 ? a : gcd(a, b));
            if (g == 1) continue;
            Int factor = g;
            if (!ring.is_integers() && factor != 0 && factor == ring.modulus()) factor = 0;
            factors.push_back(factor);
            tb.gens.push_back({i, j});
        }
    tb.module = FGModule(ring, factors);
    return tb;
}

FGModule module_tensor(const FGModule& m, const FGModule& n) { return tensor_basis(m, n).module; }

ModuleMap tensor_map(const TensorBasis& src, const TensorBasis& dst, const ModuleMap& f,
                     const ModuleMap& g) {
    if (!(f.source() == src.left && g.source() == src.right && f.target() == dst.left &&
          g.target() == dst.right))
        throw Error(ErrorKind::Usage, "tensor_map: basis mismatch");
    IntMat a(int(dst.gens.size()), int(src.gens.size()));
    for (size_t c = 0; c < src.gens.size(); ++c) {
        auto [i, j] = src.gens[c];
        for (size_t r = 0; r < dst.gens.size(); ++r) {
            auto [k, l] = dst.gens[r];
            a.at(int(r), int(c)) = f.matrix().at(k, i) * g.matrix().at(l, j);
        }
    }
    return ModuleMap(src.module, dst.module, a);
}

ModuleMap SumDecomposition::inclusion(int part) const {
    IntMat a = IntMat::zero(module.rank(), parts[part].rank());
    for (int j = 0; j < parts[part].rank(); ++j) a.at(offsets[part] + j, j) = 1;
    return ModuleMap(parts[part], module, a);
}

ModuleMap SumDecomposition::projection(int part) const {
    IntMat a = IntMat::zero(parts[part].rank(), module.rank());
    for (int j = 0; j < parts[part].rank(); ++j) a.at(j, offsets[part] + j) = 1;
    return ModuleMap(module, parts[part], a);
}

SumDecomposition direct_sum(const std::vector<FGModule>& parts) {
    if (parts.empty()) throw Error(ErrorKind::Usage, "direct_sum of nothing");
    SumDecomposition d;
    d.parts = parts;
    std::vector<Int> factors;
    for (const auto& p : parts) {
        d.offsets.push_back(int(factors.size()));
        factors.insert(factors.end(), p.factors().begin(), p.factors().end());
    }
    d.module = FGModule(parts.front().ring(), factors);
    return d;
}

} // namespace hoca
