#include "gral/algebra.hpp"

#include <algorithm>

namespace gral {
namespace {

std::string triple(int32_t i, int32_t j, int32_t k) {
    return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

}  // namespace

void Algebra::set_product(int32_t i, int32_t j, SVec value) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw dimension_error("structure constant index out of range");
    for (const auto& [k, c] : value) {
        if (k < 0 || k >= dim_) throw dimension_error("structure constant coordinate out of range");
        if (c.field() != f_) throw field_mismatch();
    }
    auto& row = rows_[size_t(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int32_t jj) { return e.first < jj; });
    if (it != row.end() && it->first == j) {
        if (value.empty())
            row.erase(it);
        else
            it->second = std::move(value);
    } else if (!value.empty()) {
        row.insert(it, {j, std::move(value)});
    }
}

const SVec* Algebra::product(int32_t i, int32_t j) const {
    const auto& row = rows_[size_t(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int32_t jj) { return e.first < jj; });
    if (it != row.end() && it->first == j) return &it->second;
    return nullptr;
}

SVec Algebra::multiply(const SVec& u, const SVec& v) const {
    SVec acc;
    for (const auto& [i, x] : u) {
        if (i >= dim_) throw dimension_error("vector does not fit the algebra");
        for (const auto& [j, y] : v) {
            if (j >= dim_) throw dimension_error("vector does not fit the algebra");
            const SVec* p = product(i, j);
            if (p) acc = svec_axpy(acc, x * y, *p);
        }
    }
    return acc;
}

void Algebra::check_associativity() const {
    // Pre-compute column adjacency: for each j, the i with b_i*b_j != 0.
    std::vector<std::vector<int32_t>> col;
    col.resize(size_t(dim_));
    for (int32_t i = 0; i < dim_; ++i)
        for (const auto& [j, _] : rows_[size_t(i)]) col[size_t(j)].push_back(i);

    SVec ek(1);
    for (int32_t j = 0; j < dim_; ++j) {
        // Triples with b_i*b_j != 0: compare against b_i*(b_j*b_k) for all k.
        for (int32_t i : col[size_t(j)]) {
            const SVec& w = *product(i, j);
            for (int32_t k = 0; k < dim_; ++k) {
                SVec lhs;
                for (const auto& [l, c] : w) {
                    const SVec* p = product(l, k);
                    if (p) lhs = svec_axpy(lhs, c, *p);
                }
                ek[0] = {i, Scalar::one(f_)};
                const SVec* jk = product(j, k);
                SVec rhs = jk ? multiply(ek, *jk) : SVec{};
                if (lhs != rhs) throw Error("NonAssociative", "basis triple (" + triple(i, j, k) + ")");
            }
        }
        // Remaining triples with b_i*b_j = 0 need b_i*(b_j*b_k) = 0.
        for (const auto& [k, jk] : rows_[size_t(j)]) {
            for (int32_t i = 0; i < dim_; ++i) {
                if (product(i, j)) continue;  // handled above
                ek[0] = {i, Scalar::one(f_)};
                if (!multiply(ek, jk).empty())
                    throw Error("NonAssociative", "basis triple (" + triple(i, j, k) + ")");
            }
        }
    }
}

Subspace Algebra::product_span(const Subspace& u, const Subspace& v) const {
    if (u.ambient_dim() != dim_ || v.ambient_dim() != dim_)
        throw dimension_error("subspace does not fit the algebra");
    SpanBuilder b(f_, dim_);
    for (const auto& x : u.basis()) {
        for (const auto& y : v.basis()) {
            b.insert(multiply(x, y));
            if (b.is_full()) return b.finish();
        }
    }
    return b.finish();
}

bool Algebra::is_two_sided_ideal(const Subspace& u) const {
    SVec ei(1);
    for (int32_t i = 0; i < dim_; ++i) {
        ei[0] = {i, Scalar::one(f_)};
        for (const auto& x : u.basis()) {
            if (!u.contains(multiply(ei, x))) return false;
            if (!u.contains(multiply(x, ei))) return false;
        }
    }
    return true;
}

bool Algebra::is_idempotent_subspace(const Subspace& u) const { return product_span(u, u) == u; }

std::optional<SVec> Algebra::two_sided_unit() const {
    // Solve sum_j u_j (b_j b_i) = b_i and sum_j u_j (b_i b_j) = b_i for all i.
    Mat sys(f_, 2 * dim_ * dim_, dim_ + 1);
    for (int32_t j = 0; j < dim_; ++j) {
        for (int32_t i = 0; i < dim_; ++i) {
            if (const SVec* p = product(j, i))
                for (const auto& [k, c] : *p) sys.at(i * dim_ + k, j) = c;
            if (const SVec* p = product(i, j))
                for (const auto& [k, c] : *p) sys.at(dim_ * dim_ + i * dim_ + k, j) = c;
        }
    }
    for (int32_t i = 0; i < dim_; ++i) {
        sys.at(i * dim_ + i, dim_) = Scalar::one(f_);
        sys.at(dim_ * dim_ + i * dim_ + i, dim_) = Scalar::one(f_);
    }
    RrefResult rr = rref(sys);
    // Inconsistent when the last column is a pivot.
    for (int32_t p : rr.pivots)
        if (p == dim_) return std::nullopt;
    std::vector<Scalar> unit(size_t(dim_), Scalar::zero(f_));
    for (int32_t r = 0; r < rr.rank; ++r) unit[size_t(rr.pivots[r])] = rr.r.at(r, dim_);
    SVec u = svec_from_dense(unit);
    // Solution of the linear system is a candidate; double-check.
    SVec ei(1);
    for (int32_t i = 0; i < dim_; ++i) {
        ei[0] = {i, Scalar::one(f_)};
        if (multiply(u, ei) != ei || multiply(ei, u) != ei) return std::nullopt;
    }
    return u;
}

Subspace Algebra::two_sided_annihilator() const {
    Mat sys(f_, 2 * dim_ * dim_, dim_);
    for (int32_t j = 0; j < dim_; ++j)
        for (int32_t i = 0; i < dim_; ++i) {
            if (const SVec* p = product(j, i))
                for (const auto& [k, c] : *p) sys.at(i * dim_ + k, j) = c;
            if (const SVec* p = product(i, j))
                for (const auto& [k, c] : *p) sys.at(dim_ * dim_ + i * dim_ + k, j) = c;
        }
    RrefResult rr = rref(sys);
    // Null space from the free columns.
    std::vector<bool> is_pivot(size_t(dim_), false);
    for (int32_t p : rr.pivots) is_pivot[size_t(p)] = true;
    SpanBuilder b(f_, dim_);
    for (int32_t j = 0; j < dim_; ++j) {
        if (is_pivot[size_t(j)]) continue;
        std::vector<Scalar> v(size_t(dim_), Scalar::zero(f_));
        v[size_t(j)] = Scalar::one(f_);
        for (int32_t r = 0; r < rr.rank; ++r) v[size_t(rr.pivots[r])] = -rr.r.at(r, j);
        b.insert_dense(v);
    }
    return b.finish();
}

Algebra algebra_on_subspace(const Algebra& amb, const Subspace& sub) {
    const int32_t d = sub.rank();
    Algebra a(amb.field(), d);
    for (int32_t i = 0; i < d; ++i)
        for (int32_t j = 0; j < d; ++j) {
            SVec p = amb.multiply(sub.basis()[size_t(i)], sub.basis()[size_t(j)]);
            auto coords = sub.coordinates(p);
            if (!coords) throw Error("ClosureViolation", "subspace is not closed under the product");
            a.set_product(i, j, svec_from_dense(*coords));
        }
    return a;
}

GradedAlgebra GradedAlgebra::validate(Algebra alg, FiniteGroup grp, std::vector<int32_t> degrees) {
    if (int32_t(degrees.size()) != alg.dim()) throw dimension_error("degree list length must equal dim");
    for (int32_t d : degrees)
        if (d < 0 || d >= grp.order()) throw Error("GradingViolation", "degree index out of range");
    alg.check_associativity();
    for (int32_t i = 0; i < alg.dim(); ++i)
        for (int32_t j = 0; j < alg.dim(); ++j) {
            const SVec* p = alg.product(i, j);
            if (!p) continue;
            const int32_t want = grp.mul(degrees[size_t(i)], degrees[size_t(j)]);
            for (const auto& [k, c] : *p)
                if (degrees[size_t(k)] != want)
                    throw Error("GradingViolation", "basis triple (" + triple(i, j, k) + ")");
        }
    GradedAlgebra g;
    g.alg_ = std::move(alg);
    g.grp_ = std::move(grp);
    g.deg_ = std::move(degrees);
    return g;
}

GradedAlgebra GradedAlgebra::from_components(const Algebra& alg, FiniteGroup grp,
                                             const std::vector<Subspace>& components) {
    if (int32_t(components.size()) != grp.order())
        throw Error("GradingViolation", "one component per group element required");
    const Field f = alg.field();
    const int32_t d = alg.dim();
    // Change of basis: columns are the concatenated component bases.
    Mat change(f, d, d);
    std::vector<int32_t> degrees;
    int32_t col = 0;
    for (int32_t t = 0; t < grp.order(); ++t)
        for (const auto& row : components[size_t(t)].basis()) {
            if (col >= d) throw Error("GradingViolation", "components overshoot the dimension");
            for (const auto& [k, c] : row) change.at(k, col) = c;
            degrees.push_back(t);
            ++col;
        }
    if (col != d) throw Error("GradingViolation", "components do not span the algebra");
    auto inv = inverse(change);
    if (!inv) throw Error("GradingViolation", "components are not independent");

    Algebra rewritten(f, d);
    for (int32_t i = 0; i < d; ++i)
        for (int32_t j = 0; j < d; ++j) {
            SVec prod = alg.multiply(change.apply_row(i), change.apply_row(j));
            rewritten.set_product(i, j, inv->apply(prod));
        }
    return validate(std::move(rewritten), std::move(grp), std::move(degrees));
}

Subspace GradedAlgebra::component(int32_t t) const {
    SpanBuilder b(field(), dim());
    for (int32_t i = 0; i < dim(); ++i)
        if (deg_[size_t(i)] == t) b.insert({{i, Scalar::one(field())}});
    return b.finish();
}

Subspace GradedAlgebra::degree_ideal(int32_t t) const {
    Subspace d = alg_.product_span(component(t), component(grp_.inv(t)));
    const Subspace b1 = component(grp_.identity());
    if (!alg_.product_span(b1, d).is_subspace_of(d) || !alg_.product_span(d, b1).is_subspace_of(d))
        throw Error("NotIdeal", "degree ideal is not an ideal of the identity component");
    return d;
}

bool GradedAlgebra::is_idempotent_graded() const {
    const int32_t n = grp_.order();
    for (int32_t r = 0; r < n; ++r) {
        SpanBuilder b(field(), dim());
        for (int32_t s = 0; s < n; ++s) {
            Subspace prod = alg_.product_span(component(s), component(grp_.mul(grp_.inv(s), r)));
            for (const auto& row : prod.basis()) b.insert(row);
        }
        if (!(b.finish() == component(r))) return false;
    }
    return true;
}

bool GradedAlgebra::is_partially_strongly_graded() const {
    const int32_t n = grp_.order();
    for (int32_t r = 0; r < n; ++r) {
        Subspace br = component(r);
        Subspace triple = alg_.product_span(alg_.product_span(br, component(grp_.inv(r))), br);
        if (!(triple == br)) return false;
    }
    return true;
}

bool GradedAlgebra::is_strongly_graded() const {
    const int32_t n = grp_.order();
    for (int32_t r = 0; r < n; ++r)
        for (int32_t t = 0; t < n; ++t)
            if (!(alg_.product_span(component(r), component(t)) == component(grp_.mul(r, t))))
                return false;
    return true;
}

VerificationReport GradedAlgebra::psg_identity_report(const std::string& fixture) const {
    if (!is_partially_strongly_graded())
        throw Error("PreconditionFailed", "grading is not partially strong");
    VerificationReport rep;
    rep.theorem = "psg-identities";
    rep.fixture = fixture;
    const int32_t n = grp_.order();
    const int32_t e = grp_.identity();

    auto eq = [&](const std::string& name, const Subspace& l, const Subspace& r) {
        rep.record_eq_dims(name, l.rank(), r.rank(), l == r);
    };

    std::vector<Subspace> comp, dt;
    for (int32_t t = 0; t < n; ++t) comp.push_back(component(t));
    for (int32_t t = 0; t < n; ++t) dt.push_back(alg_.product_span(comp[size_t(t)], comp[size_t(grp_.inv(t))]));

    for (int32_t r = 0; r < n; ++r) {
        const int32_t ri = grp_.inv(r);
        for (int32_t s = 0; s < n; ++s) {
            eq("inv-product-left[r=" + std::to_string(r) + ",s=" + std::to_string(s) + "]",
               alg_.product_span(alg_.product_span(comp[size_t(ri)], comp[size_t(r)]), comp[size_t(s)]),
               alg_.product_span(comp[size_t(ri)], comp[size_t(grp_.mul(r, s))]));
            eq("inv-product-right[r=" + std::to_string(r) + ",s=" + std::to_string(s) + "]",
               alg_.product_span(alg_.product_span(comp[size_t(s)], comp[size_t(r)]), comp[size_t(ri)]),
               alg_.product_span(comp[size_t(grp_.mul(s, r))], comp[size_t(ri)]));
            eq("ideal-translate[t=" + std::to_string(r) + ",s=" + std::to_string(s) + "]",
               alg_.product_span(comp[size_t(r)], dt[size_t(s)]),
               alg_.product_span(dt[size_t(grp_.mul(r, s))], comp[size_t(r)]));
            eq("ideal-commute[t=" + std::to_string(r) + ",s=" + std::to_string(s) + "]",
               alg_.product_span(dt[size_t(r)], dt[size_t(s)]),
               alg_.product_span(dt[size_t(s)], dt[size_t(r)]));
        }
        eq("unital-left[t=" + std::to_string(r) + "]", alg_.product_span(comp[size_t(e)], comp[size_t(r)]),
           comp[size_t(r)]);
        eq("unital-right[t=" + std::to_string(r) + "]", alg_.product_span(comp[size_t(r)], comp[size_t(e)]),
           comp[size_t(r)]);
        eq("ideal-idempotent[t=" + std::to_string(r) + "]",
           alg_.product_span(dt[size_t(r)], dt[size_t(r)]), dt[size_t(r)]);
    }
    return rep;
}

std::optional<int32_t> GradedAlgebra::homogeneous_degree(const SVec& v) const {
    if (v.empty()) return std::nullopt;
    int32_t d = deg_[size_t(v.front().first)];
    for (const auto& [i, _] : v)
        if (deg_[size_t(i)] != d) return std::nullopt;
    return d;
}

bool GradedAlgebra::subspace_is_graded(const Subspace& u) const {
    for (const auto& row : u.basis())
        if (!homogeneous_degree(row)) return false;
    return true;
}

Subspace GradedAlgebra::homogeneous_part(const Subspace& u, int32_t t) const {
    SpanBuilder b(field(), dim());
    for (const auto& row : u.basis()) {
        auto d = homogeneous_degree(row);
        if (d && *d == t) b.insert(row);
    }
    return b.finish();
}

GradedAlgebra graded_algebra_on_subspace(const GradedAlgebra& amb, const Subspace& sub) {
    if (!amb.subspace_is_graded(sub)) throw Error("GradingViolation", "subspace is not graded");
    Algebra a = algebra_on_subspace(amb.algebra(), sub);
    std::vector<int32_t> deg;
    for (const auto& row : sub.basis()) deg.push_back(*amb.homogeneous_degree(row));
    return GradedAlgebra::validate(std::move(a), amb.group(), std::move(deg));
}

bool is_multiplicative(const Algebra& src, const Algebra& dst, const LinearMap& phi) {
    if (phi.m.cols != src.dim() || phi.m.rows != dst.dim()) throw dimension_error("map shape mismatch");
    std::vector<SVec> cols;
    cols.reserve(size_t(src.dim()));
    for (int32_t j = 0; j < src.dim(); ++j) cols.push_back(phi.m.apply_row(j));
    auto apply_sparse = [&](const SVec& v) {
        SVec out;
        for (const auto& [j, c] : v) out = svec_axpy(out, c, cols[size_t(j)]);
        return out;
    };
    for (int32_t i = 0; i < src.dim(); ++i) {
        for (int32_t j = 0; j < src.dim(); ++j) {
            const SVec* p = src.product(i, j);
            SVec lhs = p ? apply_sparse(*p) : SVec{};
            SVec rhs = dst.multiply(cols[size_t(i)], cols[size_t(j)]);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_degree_preserving(const GradedAlgebra& src, const GradedAlgebra& dst, const LinearMap& phi) {
    for (int32_t j = 0; j < src.dim(); ++j) {
        SVec col = phi.m.apply_row(j);
        for (const auto& [i, _] : col)
            if (dst.degree(i) != src.degree(j)) return false;
    }
    return true;
}

void require_graded_iso(const GradedAlgebra& src, const GradedAlgebra& dst, const LinearMap& phi) {
    if (!phi.is_bijective()) throw Error("VerificationFailed", "map is not bijective");
    if (!is_multiplicative(src.algebra(), dst.algebra(), phi))
        throw Error("VerificationFailed", "map is not multiplicative");
    if (!is_degree_preserving(src, dst, phi))
        throw Error("VerificationFailed", "map does not preserve degrees");
}

}  // namespace gral
