#include "gral/smash.hpp"

#include "gral/multiplier.hpp"

namespace gral {
namespace {

SmashAlgebra build_matrix_style(const GradedAlgebra& b, SmashAlgebra::Kind kind) {
    const FiniteGroup& g = b.group();
    const int32_t n = g.order();
    const int32_t d = b.dim();
    const Field f = b.field();

    SmashAlgebra s;
    s.kind = kind;
    s.base = b;
    s.slot.assign(size_t(n) * size_t(n), std::vector<int32_t>(size_t(d), -1));
    for (int32_t r = 0; r < n; ++r)
        for (int32_t ss = 0; ss < n; ++ss)
            for (int32_t k = 0; k < d; ++k) {
                if (kind == SmashAlgebra::Kind::smash && b.degree(k) != g.mul(g.inv(r), ss)) continue;
                s.slot[size_t(r * n + ss)][size_t(k)] = int32_t(s.labels.size());
                s.labels.push_back({k, r, ss});
            }

    const int32_t dim = int32_t(s.labels.size());
    Algebra alg(f, dim);
    std::vector<int32_t> deg(static_cast<size_t>(dim));
    for (int32_t i = 0; i < dim; ++i) deg[size_t(i)] = g.mul(s.labels[size_t(i)].r, g.inv(s.labels[size_t(i)].s));

    // (b_k e_{r,s})(b_k' e_{s,v}) = (b_k b_k') e_{r,v}
    for (int32_t i = 0; i < dim; ++i) {
        const auto& li = s.labels[size_t(i)];
        for (int32_t kk = 0; kk < d; ++kk) {
            const SVec* p = b.algebra().product(li.k, kk);
            if (!p) continue;
            for (int32_t v = 0; v < n; ++v) {
                int32_t j = s.slot[size_t(li.s * n + v)][size_t(kk)];
                if (j < 0) continue;
                SVec placed;
                for (const auto& [m, c] : *p) {
                    int32_t out = s.slot[size_t(li.r * n + v)][size_t(m)];
                    if (out < 0) throw Error("GradingViolation", "product leaves the labelled set");
                    placed.emplace_back(out, c);
                }
                std::sort(placed.begin(), placed.end(),
                          [](const auto& a, const auto& bb) { return a.first < bb.first; });
                alg.set_product(i, j, std::move(placed));
            }
        }
    }
    s.carrier = GradedAlgebra::validate(std::move(alg), g, std::move(deg));
    return s;
}

}  // namespace

int32_t SmashAlgebra::index_of(int32_t k, int32_t r, int32_t s) const {
    const int32_t n = base.group().order();
    if (k < 0 || k >= base.dim() || r < 0 || r >= n || s < 0 || s >= n)
        throw dimension_error("label out of range");
    return slot[size_t(r * n + s)][size_t(k)];
}

SVec SmashAlgebra::place(const SVec& base_vec, int32_t r, int32_t s) const {
    SVec out;
    for (const auto& [k, c] : base_vec) {
        int32_t i = index_of(k, r, s);
        if (i < 0) throw Error("GradingViolation", "vector cannot be placed at this position");
        out.emplace_back(i, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Subspace SmashAlgebra::place(const Subspace& base_space, int32_t r, int32_t s) const {
    SpanBuilder b(carrier.field(), carrier.dim());
    for (const auto& row : base_space.basis()) b.insert(place(row, r, s));
    return b.finish();
}

SmashAlgebra fmat(const GradedAlgebra& b) { return build_matrix_style(b, SmashAlgebra::Kind::full_matrix); }

SmashAlgebra smash(const GradedAlgebra& b) {
    SmashAlgebra s = build_matrix_style(b, SmashAlgebra::Kind::smash);
    // One full copy of the base per group element.
    if (s.carrier.dim() != b.group().order() * b.dim())
        throw Error("VerificationFailed", "smash dimension must be |G| * dim");
    return s;
}

GlobalAction dual_action(const SmashAlgebra& s) {
    const FiniteGroup& g = s.base.group();
    const Field f = s.carrier.field();
    const int32_t dim = s.carrier.dim();
    std::vector<Mat> maps;
    for (int32_t t = 0; t < g.order(); ++t) {
        Mat m(f, dim, dim);
        for (int32_t i = 0; i < dim; ++i) {
            const auto& l = s.labels[size_t(i)];
            int32_t j = s.index_of(l.k, g.mul(t, l.r), g.mul(t, l.s));
            if (j < 0) throw Error("VerificationFailed", "translation leaves the labelled set");
            m.at(j, i) = Scalar::one(f);
        }
        maps.push_back(std::move(m));
    }
    return GlobalAction::validate(g, s.carrier.algebra(), std::move(maps));
}

LinearMap diagonal_embedding(const SmashAlgebra& s) {
    const FiniteGroup& g = s.base.group();
    const Field f = s.carrier.field();
    Mat m(f, s.carrier.dim(), s.base.dim());
    for (int32_t k = 0; k < s.base.dim(); ++k)
        for (int32_t r = 0; r < g.order(); ++r) {
            int32_t i = s.index_of(k, r, g.mul(r, s.base.degree(k)));
            if (i < 0) throw Error("VerificationFailed", "diagonal embedding misses a label");
            m.at(i, k) = Scalar::one(f);
        }
    LinearMap lm{std::move(m)};
    if (!lm.is_injective()) throw Error("VerificationFailed", "diagonal embedding must be injective");
    if (!is_multiplicative(s.base.algebra(), s.carrier.algebra(), lm))
        throw Error("VerificationFailed", "diagonal embedding must be multiplicative");
    return lm;
}

Subspace dual_action_fixed_points(const SmashAlgebra& s) {
    GlobalAction beta = dual_action(s);
    const int32_t dim = s.carrier.dim();
    const Field f = s.carrier.field();
    // Rows of (beta_t - id) stacked; the fixed points are the null space.
    SpanBuilder rows(f, dim);
    for (int32_t t = 0; t < beta.group.order(); ++t) {
        const Mat& m = beta.maps[size_t(t)];
        for (int32_t i = 0; i < dim; ++i) {
            SVec row;
            for (int32_t j = 0; j < dim; ++j) {
                Scalar v = m.at(i, j);
                if (i == j) v = v - Scalar::one(f);
                if (!v.is_zero()) row.emplace_back(j, v);
            }
            rows.insert(row);
        }
    }
    return nullspace_of_rowspace(rows.finish(), dim);
}

LinearMap smash_functor(const SmashAlgebra& from, const SmashAlgebra& to, const LinearMap& phi) {
    if (!(from.base.group() == to.base.group())) throw dimension_error("groups differ");
    if (!is_degree_preserving(from.base, to.base, phi))
        throw Error("NotGraded", "map between the bases must preserve degrees");
    if (!is_multiplicative(from.base.algebra(), to.base.algebra(), phi))
        throw Error("NotMultiplicative", "map between the bases must be multiplicative");
    Mat m(from.carrier.field(), to.carrier.dim(), from.carrier.dim());
    for (int32_t i = 0; i < from.carrier.dim(); ++i) {
        const auto& l = from.labels[size_t(i)];
        for (const auto& [j, c] : to.place(phi.m.apply_row(l.k), l.r, l.s)) m.at(j, i) = c;
    }
    LinearMap out{std::move(m)};
    if (!is_multiplicative(from.carrier.algebra(), to.carrier.algebra(), out))
        throw Error("VerificationFailed", "induced map is not multiplicative");
    if (out.is_injective() != phi.is_injective())
        throw Error("VerificationFailed", "induced map must be injective exactly when the input is");
    return out;
}

Subspace partial_smash(const SmashAlgebra& s) {
    const FiniteGroup& g = s.base.group();
    SpanBuilder b(s.carrier.field(), s.carrier.dim());
    for (int32_t r = 0; r < g.order(); ++r)
        for (int32_t ss = 0; ss < g.order(); ++ss) {
            Subspace entry =
                s.base.product_span(s.base.component(g.inv(r)), s.base.component(ss));
            for (const auto& row : entry.basis()) b.insert(s.place(row, r, ss));
        }
    Subspace ideal = b.finish();
    if (!s.carrier.algebra().is_two_sided_ideal(ideal))
        throw Error("VerificationFailed", "partial smash must be a two-sided ideal");
    const bool whole = ideal.is_full();
    if (whole != s.base.is_strongly_graded())
        throw Error("VerificationFailed",
                    "partial smash equals the smash product exactly for strong gradings");
    return ideal;
}

CanonicalPartialAction canonical_partial_action(const GradedAlgebra& b, const std::string& fixture) {
    if (!b.is_partially_strongly_graded())
        throw Error("PreconditionFailed", "base must be partially strongly graded");
    CanonicalPartialAction out;
    out.smash_algebra = smash(b);
    out.ideal = partial_smash(out.smash_algebra);
    out.dual = dual_action(out.smash_algebra);
    out.report.theorem = "canonical-partial-action";
    out.report.fixture = fixture;

    const SmashAlgebra& s = out.smash_algebra;
    const FiniteGroup& g = b.group();
    const Algebra& carrier = s.carrier.algebra();

    for (int32_t t = 0; t < g.order(); ++t) {
        Subspace translated = out.dual.apply(t, out.ideal);
        Subspace left = carrier.product_span(out.ideal, translated);
        Subspace right = carrier.product_span(translated, out.ideal);
        // Entry space sum_r B_{r^-1} B_t B_{t^-1} B_s at every position.
        SpanBuilder disp(s.carrier.field(), s.carrier.dim());
        for (int32_t r = 0; r < g.order(); ++r)
            for (int32_t ss = 0; ss < g.order(); ++ss) {
                Subspace entry = b.product_span(
                    b.product_span(b.product_span(b.component(g.inv(r)), b.component(t)),
                                   b.component(g.inv(t))),
                    b.component(ss));
                for (const auto& row : entry.basis()) disp.insert(s.place(row, r, ss));
            }
        Subspace displayed = disp.finish();
        out.report.record_eq_dims("domain-two-sided[t=" + std::to_string(t) + "]", left.rank(),
                                  right.rank(), left == right);
        out.report.record_eq_dims("domain-displayed-span[t=" + std::to_string(t) + "]", left.rank(),
                                  displayed.rank(), left == displayed);
    }

    out.action = restrict_global(out.dual, out.ideal);

    SpanBuilder orbit(s.carrier.field(), s.carrier.dim());
    for (int32_t t = 0; t < g.order(); ++t)
        for (const auto& row : out.ideal.basis()) orbit.insert(out.dual.apply(t, row));
    out.report.record("orbit-spans-smash", std::to_string(s.carrier.dim()),
                      std::to_string(orbit.rank()), orbit.is_full());

    bool invariant = true;
    for (int32_t t = 0; t < g.order(); ++t)
        if (!(out.dual.apply(t, out.ideal) == out.ideal)) invariant = false;
    out.report.record_bool("ideal-invariant-iff-strongly-graded", b.is_strongly_graded(), invariant);
    return out;
}

DualityIso duality_iso(const GradedAlgebra& b, const std::string& fixture) {
    DualityIso out;
    out.matrix_algebra = fmat(b);
    out.report.theorem = "duality";
    out.report.fixture = fixture;

    SmashAlgebra sm = smash(b);
    GlobalAction beta = dual_action(sm);
    out.crossed = skew_group_algebra(PartialAction::from_global(beta));

    const FiniteGroup& g = b.group();
    const Field f = b.field();
    const int32_t dim = out.crossed.carrier.dim();
    out.report.record("dimension-identity", std::to_string(out.matrix_algebra.carrier.dim()),
                      std::to_string(dim), dim == out.matrix_algebra.carrier.dim() &&
                                               dim == g.order() * g.order() * b.dim());

    // (b_k e_{r,s}) delta_t -> b_k e_{r, t^-1 s}
    Mat psi(f, out.matrix_algebra.carrier.dim(), dim);
    bool label_degrees_ok = true;
    for (int32_t t = 0; t < g.order(); ++t)
        for (int32_t j = 0; j < sm.carrier.dim(); ++j) {
            const auto& l = sm.labels[size_t(j)];
            int32_t target = out.matrix_algebra.index_of(l.k, l.r, g.mul(g.inv(t), l.s));
            if (target < 0) throw Error("VerificationFailed", "image label missing");
            psi.at(target, out.crossed.index(t, j)) = Scalar::one(f);
            // Transported degree of the image: (r s^-1) t.
            int32_t expect = g.mul(g.mul(l.r, g.inv(l.s)), t);
            if (out.matrix_algebra.carrier.degree(target) != expect) label_degrees_ok = false;
        }
    out.psi = LinearMap{std::move(psi)};

    out.report.record_bool("bijective", true, out.psi.is_bijective());
    out.report.record_bool(
        "multiplicative", true,
        is_multiplicative(out.crossed.carrier.algebra(), out.matrix_algebra.carrier.algebra(), out.psi));
    // The degree function pulled back from the matrix algebra is a grading of
    // the crossed product, and psi maps it degree-to-degree.
    bool pullback_grading = label_degrees_ok;
    const Algebra& ca = out.crossed.carrier.algebra();
    std::vector<int32_t> tdeg(static_cast<size_t>(dim));
    for (int32_t t = 0; t < g.order(); ++t)
        for (int32_t j = 0; j < sm.carrier.dim(); ++j) {
            const auto& l = sm.labels[size_t(j)];
            tdeg[size_t(out.crossed.index(t, j))] = g.mul(g.mul(l.r, g.inv(l.s)), t);
        }
    for (int32_t i = 0; i < dim && pullback_grading; ++i)
        for (int32_t j = 0; j < dim; ++j) {
            const SVec* p = ca.product(i, j);
            if (!p) continue;
            for (const auto& [k, _] : *p)
                if (tdeg[size_t(k)] != g.mul(tdeg[size_t(i)], tdeg[size_t(j)])) {
                    pullback_grading = false;
                    break;
                }
        }
    out.report.record_bool("grade-preserving", true, pullback_grading);
    out.report.record("image-is-whole-matrix-algebra",
                      std::to_string(out.matrix_algebra.carrier.dim()), std::to_string(out.psi.rank()),
                      out.psi.rank() == out.matrix_algebra.carrier.dim());
    return out;
}

Subspace partial_duality_image(const GradedAlgebra& b) {
    CanonicalPartialAction cpa = canonical_partial_action(b);
    DualityIso dua = duality_iso(b);
    const FiniteGroup& g = b.group();

    // The crossed product of the canonical action sits inside the crossed
    // product of the dual action as the sum of its domain blocks.
    SpanBuilder emb(b.field(), dua.crossed.carrier.dim());
    const Algebra& carrier = cpa.smash_algebra.carrier.algebra();
    for (int32_t t = 0; t < g.order(); ++t) {
        Subspace dom_t = carrier.product_span(cpa.ideal, cpa.dual.apply(t, cpa.ideal));
        for (const auto& row : dom_t.basis()) emb.insert(svec_shift(row, dua.crossed.offsets[size_t(t)]));
    }
    Subspace embedded = emb.finish();
    SpanBuilder image(b.field(), dua.matrix_algebra.carrier.dim());
    for (const auto& row : embedded.basis()) image.insert(dua.psi.apply(row));
    Subspace img = image.finish();

    // Entry space sum_t B_{r^-1} B_t B_s at every position.
    SpanBuilder disp(b.field(), dua.matrix_algebra.carrier.dim());
    for (int32_t r = 0; r < g.order(); ++r)
        for (int32_t s = 0; s < g.order(); ++s) {
            SpanBuilder entry(b.field(), b.dim());
            for (int32_t t = 0; t < g.order(); ++t) {
                Subspace e = b.product_span(b.product_span(b.component(g.inv(r)), b.component(t)),
                                            b.component(s));
                for (const auto& row : e.basis()) entry.insert(row);
            }
            Subspace entry_space = entry.finish();
            for (const auto& row : entry_space.basis())
                disp.insert(dua.matrix_algebra.place(row, r, s));
        }
    if (!(img == disp.finish()))
        throw Error("VerificationFailed", "image differs from the displayed span");
    // A graded subalgebra of the matrix algebra.
    if (!dua.matrix_algebra.carrier.subspace_is_graded(img) ||
        !dua.matrix_algebra.carrier.algebra().product_span(img, img).is_subspace_of(img))
        throw Error("VerificationFailed", "image must be a graded subalgebra");
    return img;
}

}  // namespace gral
