#include "gral/paction.hpp"

namespace gral {
namespace {

std::string pair_tag(int32_t s, int32_t t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

}  // namespace

GlobalAction GlobalAction::validate(FiniteGroup g, Algebra a, std::vector<Mat> maps) {
    if (int32_t(maps.size()) != g.order()) throw dimension_error("one automorphism per group element required");
    const int32_t d = a.dim();
    for (int32_t t = 0; t < g.order(); ++t) {
        const Mat& m = maps[size_t(t)];
        if (m.rows != d || m.cols != d) throw dimension_error("automorphism has wrong shape");
        if (!inverse(m)) throw Error("NotIsomorphism", "map " + std::to_string(t) + " is singular");
        if (!is_multiplicative(a, a, LinearMap{m}))
            throw Error("NotMultiplicative", "map " + std::to_string(t) + " is not an algebra map");
    }
    if (maps[size_t(g.identity())] != Mat::identity(a.field(), d))
        throw Error("IdentityMapNotTrivial", "identity element must act as the identity");
    for (int32_t s = 0; s < g.order(); ++s)
        for (int32_t t = 0; t < g.order(); ++t)
            if (maps[size_t(s)].times(maps[size_t(t)]) != maps[size_t(g.mul(s, t))])
                throw Error("CompositionFailed", "maps do not compose at " + pair_tag(s, t));
    GlobalAction b;
    b.group = std::move(g);
    b.algebra = std::move(a);
    b.maps = std::move(maps);
    return b;
}

Subspace GlobalAction::apply(int32_t t, const Subspace& u) const {
    SpanBuilder b(algebra.field(), algebra.dim());
    for (const auto& r : u.basis()) b.insert(apply(t, r));
    return b.finish();
}

SVec PartialAction::apply(int32_t t, const SVec& v) const {
    const Subspace& src = dom_[size_t(group_.inv(t))];
    auto coords = src.coordinates(v);
    if (!coords) throw dimension_error("vector is not in the source domain");
    SVec out;
    const Mat& m = map_[size_t(t)];
    for (int32_t j = 0; j < int32_t(coords->size()); ++j)
        if (!(*coords)[size_t(j)].is_zero()) out = svec_axpy(out, (*coords)[size_t(j)], m.apply_row(j));
    return out;
}

SVec PartialAction::apply_inverse(int32_t t, const SVec& v) const {
    const Subspace& dst = dom_[size_t(t)];
    auto coords = dst.coordinates(v);
    if (!coords) throw dimension_error("vector is not in the target domain");
    const Mat& minv = inv_[size_t(t)];
    SVec in_src;
    for (int32_t j = 0; j < int32_t(coords->size()); ++j)
        if (!(*coords)[size_t(j)].is_zero()) in_src = svec_axpy(in_src, (*coords)[size_t(j)], minv.apply_row(j));
    // in_src holds coordinates over the source-domain basis; expand.
    SVec out;
    const Subspace& src = dom_[size_t(group_.inv(t))];
    for (const auto& [j, c] : in_src) out = svec_axpy(out, c, src.basis()[size_t(j)]);
    return out;
}

Subspace PartialAction::apply(int32_t t, const Subspace& u) const {
    SpanBuilder b(alg_.field(), alg_.dim());
    for (const auto& r : u.basis()) b.insert(apply(t, r));
    return b.finish();
}

bool PartialAction::is_global() const {
    for (const auto& d : dom_)
        if (!d.is_full()) return false;
    return true;
}

bool PartialAction::domains_idempotent() const {
    for (const auto& d : dom_)
        if (!alg_.is_idempotent_subspace(d)) return false;
    return true;
}

PartialAction PartialAction::build(FiniteGroup g, Algebra a, std::vector<Subspace> domains,
                                   std::vector<Mat> maps, Flavor flavor) {
    if (int32_t(domains.size()) != g.order() || int32_t(maps.size()) != g.order())
        throw dimension_error("one domain and one map per group element required");
    PartialAction p;
    p.group_ = std::move(g);
    p.alg_ = std::move(a);
    p.dom_ = std::move(domains);
    p.map_ = std::move(maps);
    p.flavor_ = flavor;

    const Field f = p.alg_.field();
    for (int32_t t = 0; t < p.group_.order(); ++t) {
        const Subspace& src = p.dom_[size_t(p.group_.inv(t))];
        const Subspace& dst = p.dom_[size_t(t)];
        const Mat& m = p.map_[size_t(t)];
        if (m.rows != p.alg_.dim() || m.cols != src.rank())
            throw dimension_error("map " + std::to_string(t) + " has wrong shape");
        if (src.rank() != dst.rank())
            throw Error("NotIsomorphism", "domains of " + std::to_string(t) + " have different dimensions");
        // Express every column in target-domain coordinates; the square
        // coordinate matrix must be invertible for an isomorphism.
        Mat sq(f, dst.rank(), src.rank());
        for (int32_t j = 0; j < src.rank(); ++j) {
            auto coords = dst.coordinates(m.apply_row(j));
            if (!coords)
                throw Error("NotIsomorphism", "map " + std::to_string(t) + " leaves its target domain");
            for (int32_t i = 0; i < dst.rank(); ++i) sq.at(i, j) = (*coords)[size_t(i)];
        }
        auto invsq = inverse(sq);
        if (!invsq) throw Error("NotIsomorphism", "map " + std::to_string(t) + " is singular");
        p.inv_.push_back(*invsq);
    }
    p.check_common();
    if (flavor == Flavor::partial)
        p.check_partial_axioms();
    else
        p.check_product_axioms();
    return p;
}

void PartialAction::check_common() const {
    const int32_t e = group_.identity();
    if (!dom_[size_t(e)].is_full())
        throw Error("IdentityMapNotTrivial", "the identity domain must be the whole algebra");
    for (int32_t j = 0; j < alg_.dim(); ++j)
        if (map_[size_t(e)].apply_row(j) != dom_[size_t(e)].basis()[size_t(j)])
            throw Error("IdentityMapNotTrivial", "the identity element must act as the identity map");
    for (int32_t t = 0; t < group_.order(); ++t) {
        if (!alg_.is_two_sided_ideal(dom_[size_t(t)]))
            throw Error("NotIdeal", "domain " + std::to_string(t) + " is not a two-sided ideal");
        // Multiplicativity on basis pairs of the source domain.
        const Subspace& src = dom_[size_t(group_.inv(t))];
        for (const auto& u : src.basis())
            for (const auto& v : src.basis()) {
                if (apply(t, alg_.multiply(u, v)) != alg_.multiply(apply(t, u), apply(t, v)))
                    throw Error("NotMultiplicative", "map " + std::to_string(t) + " is not multiplicative");
            }
    }
}

void PartialAction::check_partial_axioms() const {
    const int32_t n = group_.order();
    for (int32_t s = 0; s < n; ++s) {
        const int32_t si = group_.inv(s);
        for (int32_t t = 0; t < n; ++t) {
            Subspace lhs = apply(s, intersect(dom_[size_t(si)], dom_[size_t(t)]));
            Subspace rhs = intersect(dom_[size_t(s)], dom_[size_t(group_.mul(s, t))]);
            if (!(lhs == rhs)) throw Error("IntersectionAxiomFailed", "at " + pair_tag(s, t));
        }
    }
    for (int32_t s = 0; s < n; ++s)
        for (int32_t t = 0; t < n; ++t) {
            Subspace overlap =
                intersect(dom_[size_t(group_.inv(t))], dom_[size_t(group_.inv(group_.mul(s, t)))]);
            for (const auto& x : overlap.basis())
                if (apply(s, apply(t, x)) != apply(group_.mul(s, t), x))
                    throw Error("CompositionFailed", "at " + pair_tag(s, t));
        }
}

void PartialAction::check_product_axioms() const {
    const int32_t n = group_.order();
    for (int32_t t = 0; t < n; ++t)
        if (!alg_.is_idempotent_subspace(dom_[size_t(t)]))
            throw Error("DomainNotIdempotent", "domain " + std::to_string(t));
    for (int32_t s = 0; s < n; ++s)
        for (int32_t t = s + 1; t < n; ++t)
            if (!(alg_.product_span(dom_[size_t(s)], dom_[size_t(t)]) ==
                  alg_.product_span(dom_[size_t(t)], dom_[size_t(s)])))
                throw Error("DomainsDontCommute", "at " + pair_tag(s, t));
    for (int32_t s = 0; s < n; ++s) {
        const int32_t si = group_.inv(s);
        for (int32_t t = 0; t < n; ++t) {
            Subspace lhs = apply(s, alg_.product_span(dom_[size_t(si)], dom_[size_t(t)]));
            Subspace rhs = alg_.product_span(dom_[size_t(s)], dom_[size_t(group_.mul(s, t))]);
            if (!(lhs == rhs)) throw Error("ProductAxiomFailed", "at " + pair_tag(s, t));
        }
    }
    for (int32_t s = 0; s < n; ++s)
        for (int32_t t = 0; t < n; ++t) {
            Subspace overlap = alg_.product_span(dom_[size_t(group_.inv(t))],
                                                 dom_[size_t(group_.inv(group_.mul(s, t)))]);
            for (const auto& x : overlap.basis())
                if (apply(s, apply(t, x)) != apply(group_.mul(s, t), x))
                    throw Error("CompositionFailed", "at " + pair_tag(s, t));
        }
}

PartialAction PartialAction::validate_partial(FiniteGroup g, Algebra a, std::vector<Subspace> domains,
                                              std::vector<Mat> maps) {
    return build(std::move(g), std::move(a), std::move(domains), std::move(maps), Flavor::partial);
}

PartialAction PartialAction::validate_product(FiniteGroup g, Algebra a, std::vector<Subspace> domains,
                                              std::vector<Mat> maps) {
    return build(std::move(g), std::move(a), std::move(domains), std::move(maps), Flavor::product);
}

PartialAction PartialAction::from_global(const GlobalAction& beta) {
    std::vector<Subspace> domains;
    std::vector<Mat> maps;
    for (int32_t t = 0; t < beta.group.order(); ++t) {
        domains.push_back(Subspace::full(beta.algebra.field(), beta.algebra.dim()));
        maps.push_back(beta.maps[size_t(t)]);
    }
    // The product axioms require an idempotent algebra; a global action on a
    // non-idempotent algebra still satisfies the intersection axioms.
    Subspace full = Subspace::full(beta.algebra.field(), beta.algebra.dim());
    if (beta.algebra.is_idempotent_subspace(full))
        return validate_product(beta.group, beta.algebra, std::move(domains), std::move(maps));
    return validate_partial(beta.group, beta.algebra, std::move(domains), std::move(maps));
}

bool PartialAction::operator==(const PartialAction& o) const {
    return group_ == o.group_ && alg_ == o.alg_ && dom_ == o.dom_ && map_ == o.map_;
}

PartialAction restrict_global(const GlobalAction& beta, const Subspace& ideal) {
    const Algebra& amb = beta.algebra;
    if (!amb.is_two_sided_ideal(ideal) || !amb.is_idempotent_subspace(ideal))
        throw Error("NotIdempotentIdeal", "restriction requires an idempotent two-sided ideal");
    const int32_t n = beta.group.order();
    std::vector<Subspace> translates;
    for (int32_t t = 0; t < n; ++t) {
        translates.push_back(beta.apply(t, ideal));
        Subspace lhs = amb.product_span(ideal, translates.back());
        Subspace rhs = amb.product_span(translates.back(), ideal);
        if (!(lhs == rhs)) throw Error("CommutationHypothesisFailed", "at " + std::to_string(t));
    }

    // Carrier algebra: the ideal itself, on its canonical basis.
    Algebra carrier = algebra_on_subspace(amb, ideal);
    const Field f = amb.field();
    auto to_carrier = [&](const SVec& v) {
        auto coords = ideal.coordinates(v);
        if (!coords) throw Error("NotIdempotentIdeal", "translate escapes the ideal");
        return svec_from_dense(*coords);
    };

    std::vector<Subspace> domains;
    for (int32_t t = 0; t < n; ++t) {
        Subspace dt_amb = amb.product_span(ideal, translates[size_t(t)]);
        SpanBuilder b(f, carrier.dim());
        for (const auto& r : dt_amb.basis()) b.insert(to_carrier(r));
        domains.push_back(b.finish());
    }
    std::vector<Mat> maps;
    for (int32_t t = 0; t < n; ++t) {
        const Subspace& src = domains[size_t(beta.group.inv(t))];
        Mat m(f, carrier.dim(), src.rank());
        for (int32_t j = 0; j < src.rank(); ++j) {
            // Lift to the ambient algebra, translate, come back.
            SVec amb_vec;
            for (const auto& [k, c] : src.basis()[size_t(j)])
                amb_vec = svec_axpy(amb_vec, c, ideal.basis()[size_t(k)]);
            for (const auto& [k, c] : to_carrier(beta.apply(t, amb_vec))) m.at(k, j) = c;
        }
        maps.push_back(std::move(m));
    }
    return PartialAction::validate_product(beta.group, std::move(carrier), std::move(domains),
                                           std::move(maps));
}

bool is_minimal_globalization(const GlobalAction& beta, const Subspace& ideal) {
    (void)restrict_global(beta, ideal);
    SpanBuilder orbit(beta.algebra.field(), beta.algebra.dim());
    for (int32_t t = 0; t < beta.group.order(); ++t)
        for (const auto& r : ideal.basis()) orbit.insert(beta.apply(t, r));
    return orbit.is_full();
}

SVec SkewAlgebra::embed(int32_t t, const SVec& v) const {
    auto coords = action.domain(t).coordinates(v);
    if (!coords) throw dimension_error("vector is not in the domain of the block");
    return svec_shift(svec_from_dense(*coords), offsets.at(size_t(t)));
}

Subspace SkewAlgebra::embed(int32_t t, const Subspace& u) const {
    SpanBuilder b(carrier.field(), carrier.dim());
    for (const auto& r : u.basis()) b.insert(embed(t, r));
    return b.finish();
}

Subspace SkewAlgebra::block(int32_t t) const {
    SpanBuilder b(carrier.field(), carrier.dim());
    for (int32_t j = 0; j < action.domain(t).rank(); ++j)
        b.insert({{index(t, j), Scalar::one(carrier.field())}});
    return b.finish();
}

SkewAlgebra skew_group_algebra(const PartialAction& action) {
    const FiniteGroup& g = action.group();
    const Algebra& a = action.algebra();
    const Field f = a.field();
    const int32_t n = g.order();

    std::vector<int32_t> offsets(static_cast<size_t>(n), 0);
    int32_t dim = 0;
    for (int32_t t = 0; t < n; ++t) {
        offsets[size_t(t)] = dim;
        dim += action.domain(t).rank();
    }

    Algebra alg(f, dim);
    std::vector<int32_t> deg(static_cast<size_t>(dim));
    for (int32_t t = 0; t < n; ++t)
        for (int32_t j = 0; j < action.domain(t).rank(); ++j) deg[size_t(offsets[size_t(t)] + j)] = t;

    // Sparse columns of every map, for the hot inner loop.
    std::vector<std::vector<SVec>> cols;
    cols.reserve(size_t(n));
    for (int32_t t = 0; t < n; ++t) {
        std::vector<SVec> c;
        for (int32_t j = 0; j < action.domain(g.inv(t)).rank(); ++j)
            c.push_back(action.map(t).apply_row(j));
        cols.push_back(std::move(c));
    }
    auto apply_fast = [&](int32_t t, const SVec& v) {
        auto coords = action.domain(g.inv(t)).coordinates_sparse(v);
        if (!coords) throw Error("AssociativityFailed", "skew product leaves its block");
        SVec out;
        for (const auto& [j, c] : *coords) out = svec_axpy(out, c, cols[size_t(t)][size_t(j)]);
        return out;
    };

    for (int32_t r = 0; r < n; ++r) {
        const Subspace& dr = action.domain(r);
        for (int32_t s = 0; s < n; ++s) {
            const Subspace& ds = action.domain(s);
            const int32_t rs = g.mul(r, s);
            const Subspace& target = action.domain(rs);
            for (int32_t j = 0; j < dr.rank(); ++j) {
                SVec pulled = action.apply_inverse(r, dr.basis()[size_t(j)]);
                for (int32_t k = 0; k < ds.rank(); ++k) {
                    SVec prod = a.multiply(pulled, ds.basis()[size_t(k)]);
                    if (prod.empty()) continue;
                    SVec w = apply_fast(r, prod);
                    if (w.empty()) continue;
                    auto coords = target.coordinates_sparse(w);
                    if (!coords)
                        throw Error("AssociativityFailed",
                                    "skew product leaves its block; the action is invalid");
                    alg.set_product(offsets[size_t(r)] + j, offsets[size_t(s)] + k,
                                    svec_shift(*coords, offsets[size_t(rs)]));
                }
            }
        }
    }

    SkewAlgebra out{GradedAlgebra(), std::move(offsets), action};
    try {
        out.carrier = GradedAlgebra::validate(std::move(alg), g, std::move(deg));
    } catch (const Error& e) {
        throw Error("AssociativityFailed", std::string("skew algebra validation failed: ") + e.what());
    }
    if (action.flavor() == PartialAction::Flavor::product) {
        if (!out.carrier.is_partially_strongly_graded())
            throw Error("VerificationFailed",
                        "skew algebra of a product partial action must be partially strongly graded");
        if (out.carrier.is_strongly_graded() != action.is_global())
            throw Error("VerificationFailed", "strong grading must match globality of the action");
    }
    return out;
}

PartialActionMorphism PartialActionMorphism::validate(const PartialAction& from, const PartialAction& to,
                                                      LinearMap phi) {
    if (!is_multiplicative(from.algebra(), to.algebra(), phi))
        throw Error("NotMultiplicative", "morphism is not an algebra homomorphism");
    for (int32_t t = 0; t < from.group().order(); ++t) {
        const Subspace& src = from.domain(from.group().inv(t));
        for (const auto& v : src.basis()) {
            if (!to.domain(from.group().inv(t)).contains(phi.apply(v)))
                throw Error("NotEquivariant", "domain image escapes at " + std::to_string(t));
            if (phi.apply(from.apply(t, v)) != to.apply(t, phi.apply(v)))
                throw Error("NotEquivariant", "maps do not intertwine at " + std::to_string(t));
        }
        // Also the target-side domains.
        for (const auto& v : from.domain(t).basis())
            if (!to.domain(t).contains(phi.apply(v)))
                throw Error("NotEquivariant", "domain image escapes at " + std::to_string(t));
    }
    return PartialActionMorphism{std::move(phi)};
}

LinearMap skew_morphism(const PartialActionMorphism& m, const SkewAlgebra& from, const SkewAlgebra& to) {
    const Field f = from.carrier.field();
    Mat out(f, to.carrier.dim(), from.carrier.dim());
    for (int32_t t = 0; t < from.action.group().order(); ++t) {
        const Subspace& src = from.action.domain(t);
        for (int32_t j = 0; j < src.rank(); ++j) {
            SVec image = to.embed(t, m.phi.apply(src.basis()[size_t(j)]));
            for (const auto& [k, c] : image) out.at(k, from.index(t, j)) = c;
        }
    }
    LinearMap lm{std::move(out)};
    if (!is_multiplicative(from.carrier.algebra(), to.carrier.algebra(), lm))
        throw Error("VerificationFailed", "induced skew morphism is not multiplicative");
    return lm;
}

bool check_pa_prp_equivalence(const PartialAction& action) {
    if (!action.domains_idempotent())
        throw Error("PreconditionFailed", "all domains must be idempotent");
    // Route one: validate the product axioms directly.
    bool product_valid = true;
    try {
        std::vector<Subspace> doms;
        std::vector<Mat> maps;
        for (int32_t t = 0; t < action.group().order(); ++t) {
            doms.push_back(action.domain(t));
            maps.push_back(action.map(t));
        }
        (void)PartialAction::validate_product(action.group(), action.algebra(), std::move(doms),
                                              std::move(maps));
    } catch (const Error&) {
        product_valid = false;
    }
    // Route two: the grading of the skew algebra.
    bool skew_psg = true;
    try {
        std::vector<Subspace> doms;
        std::vector<Mat> maps;
        for (int32_t t = 0; t < action.group().order(); ++t) {
            doms.push_back(action.domain(t));
            maps.push_back(action.map(t));
        }
        PartialAction as_partial = PartialAction::validate_partial(action.group(), action.algebra(),
                                                                   std::move(doms), std::move(maps));
        skew_psg = skew_group_algebra(as_partial).carrier.is_partially_strongly_graded();
    } catch (const Error& e) {
        throw Error("PreconditionFailed", std::string("action does not satisfy the base axioms: ") + e.what());
    }
    if (product_valid != skew_psg)
        throw Error("VerificationFailed", "product-axiom verdict disagrees with the skew grading");
    return skew_psg;
}

}  // namespace gral
