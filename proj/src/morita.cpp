#include "gral/morita.hpp"

#include <algorithm>

namespace gral {
namespace {

SVec unit_vec(int32_t i, Field f) { return {{i, Scalar::one(f)}}; }

std::string tag(int32_t t) { return "[t=" + std::to_string(t) + "]"; }
std::string tag2(int32_t r, int32_t s) {
    return "[r=" + std::to_string(r) + ",s=" + std::to_string(s) + "]";
}

SVec relabel(const SVec& v, const std::vector<int32_t>& map) {
    SVec out;
    for (const auto& [k, c] : v) out.emplace_back(map.at(size_t(k)), c);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

// Left inverse of an injective matrix, for dropping vectors back through a
// column bridge.
struct LeftInverse {
    Mat inv;  // cols(m) x rows(m)

    static LeftInverse of(const Mat& m) {
        Mat aug(m.f, m.rows, m.cols + m.rows);
        for (int32_t i = 0; i < m.rows; ++i) {
            for (int32_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
            aug.at(i, m.cols + i) = Scalar::one(m.f);
        }
        RrefResult rr = rref(aug);
        for (int32_t j = 0; j < m.cols; ++j)
            if (j >= int32_t(rr.pivots.size()) || rr.pivots[size_t(j)] != j)
                throw Error("NotIsomorphism", "bridge matrix is not injective");
        LeftInverse li{Mat(m.f, m.cols, m.rows)};
        for (int32_t i = 0; i < m.cols; ++i)
            for (int32_t j = 0; j < m.rows; ++j) li.inv.at(i, j) = rr.r.at(i, m.cols + j);
        return li;
    }
};

// Coordinate bridge between a block of the context algebra and the carrier
// of the corresponding action.
struct Bridge {
    Mat fwd;
    LeftInverse back;
    std::vector<SVec> cols;

    explicit Bridge(const Mat& m) : fwd(m), back(LeftInverse::of(m)) {
        for (int32_t j = 0; j < m.cols; ++j) cols.push_back(m.apply_row(j));
    }
    SVec lift(const SVec& v) const {
        SVec out;
        for (const auto& [j, c] : v) out = svec_axpy(out, c, cols[size_t(j)]);
        return out;
    }
    Subspace lift(const Subspace& u, int32_t cdim) const {
        SpanBuilder b(fwd.f, cdim);
        for (const auto& r : u.basis()) b.insert(lift(r));
        return b.finish();
    }
    std::optional<SVec> drop(const SVec& v) const {
        SVec u = back.inv.apply(v);
        if (lift(u) != v) return std::nullopt;
        return u;
    }
    std::optional<Subspace> drop(const Subspace& u, int32_t adim) const {
        SpanBuilder b(fwd.f, adim);
        for (const auto& r : u.basis()) {
            auto d = drop(r);
            if (!d) return std::nullopt;
            b.insert(*d);
        }
        return b.finish();
    }
};

}  // namespace

void BilinTable::set(int32_t i, int32_t j, SVec value) {
    auto& row = rows_.at(size_t(i));
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

const SVec* BilinTable::at(int32_t i, int32_t j) const {
    const auto& row = rows_.at(size_t(i));
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int32_t jj) { return e.first < jj; });
    if (it != row.end() && it->first == j) return &it->second;
    return nullptr;
}

SVec BilinTable::apply(const SVec& u, const SVec& v) const {
    SVec acc;
    for (const auto& [i, x] : u)
        for (const auto& [j, y] : v) {
            const SVec* p = at(i, j);
            if (p) acc = svec_axpy(acc, x * y, *p);
        }
    return acc;
}

void validate_embedded(const EmbeddedContext& ctx) {
    const Algebra& c = ctx.C.algebra();
    auto closed = [&](const Subspace& u, const Subspace& v, const Subspace& target,
                      const std::string& what) {
        if (!c.product_span(u, v).is_subspace_of(target))
            throw Error("ClosureViolation", what + " is not contained in its block");
    };
    closed(ctx.A, ctx.A, ctx.A, "A*A");
    closed(ctx.B, ctx.B, ctx.B, "B*B");
    closed(ctx.A, ctx.X, ctx.X, "A*X");
    closed(ctx.X, ctx.B, ctx.X, "X*B");
    closed(ctx.B, ctx.Y, ctx.Y, "B*Y");
    closed(ctx.Y, ctx.A, ctx.Y, "Y*A");
    closed(ctx.X, ctx.Y, ctx.A, "X*Y");
    closed(ctx.Y, ctx.X, ctx.B, "Y*X");
    for (const Subspace* u : {&ctx.A, &ctx.B, &ctx.X, &ctx.Y})
        if (!ctx.C.subspace_is_graded(*u))
            throw Error("GradingViolation", "context piece is not graded");
}

AbstractContext to_abstract(const EmbeddedContext& ctx) {
    validate_embedded(ctx);
    const Algebra& c = ctx.C.algebra();
    AbstractContext out;
    out.A = graded_algebra_on_subspace(ctx.C, ctx.A);
    out.B = graded_algebra_on_subspace(ctx.C, ctx.B);
    auto space = [&](const Subspace& u) {
        GradedSpace s;
        s.f = ctx.C.field();
        s.dim = u.rank();
        for (const auto& row : u.basis()) s.deg.push_back(*ctx.C.homogeneous_degree(row));
        return s;
    };
    out.X = space(ctx.X);
    out.Y = space(ctx.Y);

    auto table = [&](const Subspace& u, const Subspace& v, const Subspace& target) {
        BilinTable t(u.rank());
        for (int32_t i = 0; i < u.rank(); ++i)
            for (int32_t j = 0; j < v.rank(); ++j) {
                SVec p = c.multiply(u.basis()[size_t(i)], v.basis()[size_t(j)]);
                auto coords = target.coordinates_sparse(p);
                if (!coords) throw Error("ClosureViolation", "product escapes its block");
                t.set(i, j, *coords);
            }
        return t;
    };
    out.ax = table(ctx.A, ctx.X, ctx.X);
    out.xb = table(ctx.X, ctx.B, ctx.X);
    out.by = table(ctx.B, ctx.Y, ctx.Y);
    out.ya = table(ctx.Y, ctx.A, ctx.Y);
    out.xy = table(ctx.X, ctx.Y, ctx.A);
    out.yx = table(ctx.Y, ctx.X, ctx.B);
    return out;
}

AbstractContext trivial_context(const GradedAlgebra& a) {
    EmbeddedContext ctx{a, Subspace::full(a.field(), a.dim()), Subspace::full(a.field(), a.dim()),
                        Subspace::full(a.field(), a.dim()), Subspace::full(a.field(), a.dim())};
    return to_abstract(ctx);
}

AbstractContext reverse_context(const AbstractContext& ctx) {
    AbstractContext out;
    out.A = ctx.B;
    out.B = ctx.A;
    out.X = ctx.Y;
    out.Y = ctx.X;
    out.ax = ctx.by;
    out.xb = ctx.ya;
    out.by = ctx.ax;
    out.ya = ctx.xb;
    out.xy = ctx.yx;
    out.yx = ctx.xy;
    return out;
}

AbstractContext transport_context(const AbstractContext& ctx, const GradedAlgebra* newA,
                                  const LinearMap* isoA, const GradedAlgebra* newB,
                                  const LinearMap* isoB) {
    AbstractContext out = ctx;
    if (isoA) {
        require_graded_iso(ctx.A, *newA, *isoA);
        out.A = *newA;
        auto inv = inverse(isoA->m);
        BilinTable ax(newA->dim()), ya(ctx.Y.dim), xy(ctx.X.dim);
        for (int32_t i = 0; i < newA->dim(); ++i) {
            SVec pre = inv->apply_row(i);
            for (int32_t j = 0; j < ctx.X.dim; ++j) {
                SVec val;
                for (const auto& [k, c] : pre) {
                    const SVec* p = ctx.ax.at(k, j);
                    if (p) val = svec_axpy(val, c, *p);
                }
                ax.set(i, j, val);
            }
        }
        for (int32_t i = 0; i < ctx.Y.dim; ++i)
            for (int32_t j = 0; j < newA->dim(); ++j) {
                SVec pre = inv->apply_row(j);
                SVec val;
                for (const auto& [k, c] : pre) {
                    const SVec* p = ctx.ya.at(i, k);
                    if (p) val = svec_axpy(val, c, *p);
                }
                ya.set(i, j, val);
            }
        for (int32_t i = 0; i < ctx.X.dim; ++i)
            for (int32_t j = 0; j < ctx.Y.dim; ++j) {
                const SVec* p = ctx.xy.at(i, j);
                xy.set(i, j, p ? isoA->apply(*p) : SVec{});
            }
        out.ax = std::move(ax);
        out.ya = std::move(ya);
        out.xy = std::move(xy);
    }
    if (isoB) {
        require_graded_iso(ctx.B, *newB, *isoB);
        out.B = *newB;
        auto inv = inverse(isoB->m);
        BilinTable by(newB->dim()), xb(ctx.X.dim), yx(ctx.Y.dim);
        for (int32_t i = 0; i < newB->dim(); ++i) {
            SVec pre = inv->apply_row(i);
            for (int32_t j = 0; j < ctx.Y.dim; ++j) {
                SVec val;
                for (const auto& [k, c] : pre) {
                    const SVec* p = ctx.by.at(k, j);
                    if (p) val = svec_axpy(val, c, *p);
                }
                by.set(i, j, val);
            }
        }
        for (int32_t i = 0; i < ctx.X.dim; ++i)
            for (int32_t j = 0; j < newB->dim(); ++j) {
                SVec pre = inv->apply_row(j);
                SVec val;
                for (const auto& [k, c] : pre) {
                    const SVec* p = ctx.xb.at(i, k);
                    if (p) val = svec_axpy(val, c, *p);
                }
                xb.set(i, j, val);
            }
        for (int32_t i = 0; i < ctx.Y.dim; ++i)
            for (int32_t j = 0; j < ctx.X.dim; ++j) {
                const SVec* p = ctx.yx.at(i, j);
                yx.set(i, j, p ? isoB->apply(*p) : SVec{});
            }
        out.by = std::move(by);
        out.xb = std::move(xb);
        out.yx = std::move(yx);
    }
    return out;
}

Linking linking_algebra(const AbstractContext& ctx) {
    const Field f = ctx.A.field();
    if (ctx.B.field() != f || ctx.X.f != f || ctx.Y.f != f) throw field_mismatch();
    if (!(ctx.A.group() == ctx.B.group())) throw dimension_error("context algebras over different groups");
    const int32_t a = ctx.A.dim(), x = ctx.X.dim, y = ctx.Y.dim, b = ctx.B.dim();
    const int32_t offA = 0, offX = a, offY = a + x, offB = a + x + y;
    const int32_t dim = a + x + y + b;

    Algebra alg(f, dim);
    auto put = [&](int32_t i, int32_t j, const SVec* v, int32_t off) {
        if (v && !v->empty()) alg.set_product(i, j, svec_shift(*v, off));
    };
    for (int32_t i = 0; i < a; ++i) {
        for (int32_t j = 0; j < a; ++j) put(offA + i, offA + j, ctx.A.algebra().product(i, j), offA);
        for (int32_t j = 0; j < x; ++j) put(offA + i, offX + j, ctx.ax.at(i, j), offX);
    }
    for (int32_t i = 0; i < x; ++i) {
        for (int32_t j = 0; j < b; ++j) put(offX + i, offB + j, ctx.xb.at(i, j), offX);
        for (int32_t j = 0; j < y; ++j) put(offX + i, offY + j, ctx.xy.at(i, j), offA);
    }
    for (int32_t i = 0; i < y; ++i) {
        for (int32_t j = 0; j < a; ++j) put(offY + i, offA + j, ctx.ya.at(i, j), offY);
        for (int32_t j = 0; j < x; ++j) put(offY + i, offX + j, ctx.yx.at(i, j), offB);
    }
    for (int32_t i = 0; i < b; ++i) {
        for (int32_t j = 0; j < b; ++j) put(offB + i, offB + j, ctx.B.algebra().product(i, j), offB);
        for (int32_t j = 0; j < y; ++j) put(offB + i, offY + j, ctx.by.at(i, j), offY);
    }

    std::vector<int32_t> deg;
    deg.reserve(size_t(dim));
    for (int32_t i = 0; i < a; ++i) deg.push_back(ctx.A.degree(i));
    for (int32_t i = 0; i < x; ++i) deg.push_back(ctx.X.deg.at(size_t(i)));
    for (int32_t i = 0; i < y; ++i) deg.push_back(ctx.Y.deg.at(size_t(i)));
    for (int32_t i = 0; i < b; ++i) deg.push_back(ctx.B.degree(i));

    Linking out;
    try {
        out.L = GradedAlgebra::validate(std::move(alg), ctx.A.group(), std::move(deg));
    } catch (const Error& e) {
        if (e.code() == "NonAssociative")
            throw Error("BalanceViolation",
                        std::string("context identities fail in the linking algebra: ") + e.what());
        throw;
    }
    out.offA = offA;
    out.offX = offX;
    out.offY = offY;
    out.offB = offB;

    // The degree-1 corner multiplier: L keeps the A and X rows, R keeps A and Y.
    Multiplier e{Mat(f, dim, dim), Mat(f, dim, dim)};
    for (int32_t i = 0; i < a + x; ++i) e.left.at(i, i) = Scalar::one(f);
    for (int32_t i = 0; i < a; ++i) e.right.at(i, i) = Scalar::one(f);
    for (int32_t i = offY; i < offY + y; ++i) e.right.at(i, i) = Scalar::one(f);
    if (!is_multiplier(out.L.algebra(), e))
        throw Error("BalanceViolation", "corner projections are not a multiplier");
    out.e = std::move(e);

    auto block = [&](int32_t off, int32_t len) {
        SpanBuilder sb(f, dim);
        for (int32_t i = 0; i < len; ++i) sb.insert(unit_vec(off + i, f));
        return sb.finish();
    };
    out.inside = EmbeddedContext{out.L, block(offA, a), block(offB, b), block(offX, x), block(offY, y)};
    validate_embedded(out.inside);
    return out;
}

VerificationReport linking_report(const AbstractContext& ctx, const std::string& fixture) {
    Linking lk = linking_algebra(ctx);
    if (!is_graded_equivalence(lk.inside))
        throw Error("PreconditionFailed", "context is not a graded equivalence");
    VerificationReport rep;
    rep.theorem = "linking-algebra";
    rep.fixture = fixture;

    const Algebra& l = lk.L.algebra();
    const int32_t dim = lk.L.dim();
    const Field f = lk.L.field();
    Subspace whole = Subspace::full(f, dim);

    auto image = [&](const Mat& m, const Subspace& u) {
        SpanBuilder sb(f, dim);
        for (const auto& row : u.basis()) sb.insert(m.apply(row));
        return sb.finish();
    };
    auto one_minus = [&](const Mat& m) {
        Mat o = Mat::identity(f, dim);
        for (int32_t i = 0; i < dim; ++i)
            for (int32_t j = 0; j < dim; ++j) o.at(i, j) = o.at(i, j) - m.at(i, j);
        return o;
    };

    rep.record_bool("idempotent-multiplier", true, lk.e.is_idempotent());
    rep.record_bool("degree-one", true, multiplier_has_degree(lk.L, lk.e, lk.L.group().identity()));
    rep.record_bool("linking-algebra-idempotent", true, lk.L.is_idempotent_graded());

    Subspace le = image(lk.e.right, whole);  // L e
    Subspace el = image(lk.e.left, whole);   // e L
    Subspace lme = image(one_minus(lk.e.right), whole);
    Subspace mel = image(one_minus(lk.e.left), whole);
    rep.record_eq_dims("LeL=L", l.product_span(le, el).rank(), dim, l.product_span(le, el) == whole);
    rep.record_eq_dims("L(1-e)L=L", l.product_span(lme, mel).rank(), dim,
                       l.product_span(lme, mel) == whole);

    // Corner isomorphisms are literal: the corners are the A and B blocks.
    Subspace eLe = image(lk.e.right, image(lk.e.left, whole));
    Subspace meLme = image(one_minus(lk.e.right), image(one_minus(lk.e.left), whole));
    rep.record_eq_dims("corner-A", eLe.rank(), lk.inside.A.rank(), eLe == lk.inside.A);
    rep.record_eq_dims("corner-B", meLme.rank(), lk.inside.B.rank(), meLme == lk.inside.B);
    rep.record_bool("corner-A-algebra", true,
                    graded_algebra_on_subspace(lk.L, lk.inside.A) == ctx.A);
    rep.record_bool("corner-B-algebra", true,
                    graded_algebra_on_subspace(lk.L, lk.inside.B) == ctx.B);

    // Strong equivalences between partially strongly graded algebras give
    // the degree-ideal corner identities and a partially strong linking.
    if (ctx.A.is_partially_strongly_graded() && ctx.B.is_partially_strongly_graded() &&
        is_strong_graded_equivalence(lk.inside)) {
        const FiniteGroup& g = lk.L.group();
        for (int32_t t = 0; t < g.order(); ++t) {
            Subspace dt = lk.L.degree_ideal(t);
            Subspace edte = image(lk.e.right, image(lk.e.left, dt));
            Subspace at = lk.L.homogeneous_part(lk.inside.A, t);
            Subspace ati = lk.L.homogeneous_part(lk.inside.A, g.inv(t));
            Subspace da = l.product_span(at, ati);
            rep.record_eq_dims("corner-degree-ideal-A" + tag(t), edte.rank(), da.rank(), edte == da);
            Subspace de = image(lk.e.right, dt);
            Subspace ed = image(lk.e.left, dt);
            rep.record_eq_dims("DeD=D" + tag(t), l.product_span(de, ed).rank(), dt.rank(),
                               l.product_span(de, ed) == dt);
            Subspace dme = image(one_minus(lk.e.right), dt);
            Subspace med = image(one_minus(lk.e.left), dt);
            rep.record_eq_dims("D(1-e)D=D" + tag(t), l.product_span(dme, med).rank(), dt.rank(),
                               l.product_span(dme, med) == dt);
        }
        rep.record_bool("linking-partially-strongly-graded", true,
                        lk.L.is_partially_strongly_graded());
    }
    return rep;
}

EmbeddedContext corner_context(const GradedAlgebra& c, const Multiplier& e) {
    const Field f = c.field();
    const int32_t dim = c.dim();
    if (!e.is_idempotent()) throw Error("NotIdempotent", "corner multiplier must be idempotent");
    if (!multiplier_has_degree(c, e, c.group().identity()))
        throw Error("NotDegreeOne", "corner multiplier must have degree one");
    if (!is_multiplier(c.algebra(), e)) throw Error("NotMultiplier", "not a multiplier pair");
    if (e.left.times(e.right) != e.right.times(e.left))
        throw Error("NotMultiplier", "left and right corner projections do not commute");

    Subspace whole = Subspace::full(f, dim);
    auto image = [&](const Mat& m, const Subspace& u) {
        SpanBuilder sb(f, dim);
        for (const auto& row : u.basis()) sb.insert(m.apply(row));
        return sb.finish();
    };
    Mat ml = Mat::identity(f, dim), mr = Mat::identity(f, dim);
    for (int32_t i = 0; i < dim; ++i)
        for (int32_t j = 0; j < dim; ++j) {
            ml.at(i, j) = ml.at(i, j) - e.left.at(i, j);
            mr.at(i, j) = mr.at(i, j) - e.right.at(i, j);
        }

    const Algebra& alg = c.algebra();
    if (!(alg.product_span(image(e.right, whole), image(e.left, whole)) == whole) ||
        !(alg.product_span(image(mr, whole), image(ml, whole)) == whole))
        throw Error("FullnessFailed", "corner multiplier is not full");

    EmbeddedContext ctx{c, image(e.right, image(e.left, whole)), image(mr, image(ml, whole)),
                        image(e.left, image(mr, whole)), image(e.right, image(ml, whole))};
    validate_embedded(ctx);
    if (!is_graded_equivalence(ctx))
        throw Error("VerificationFailed", "corner context is not a graded equivalence");
    return ctx;
}

bool is_graded_equivalence(const EmbeddedContext& ctx) {
    const Algebra& c = ctx.C.algebra();
    return c.product_span(ctx.X, ctx.Y) == ctx.A && c.product_span(ctx.Y, ctx.X) == ctx.B &&
           c.product_span(ctx.A, ctx.X) == ctx.X && c.product_span(ctx.X, ctx.B) == ctx.X &&
           c.product_span(ctx.B, ctx.Y) == ctx.Y && c.product_span(ctx.Y, ctx.A) == ctx.Y;
}

bool is_graded_equivalence(const AbstractContext& ctx) {
    return is_graded_equivalence(linking_algebra(ctx).inside);
}

namespace {

struct DegreePieces {
    std::vector<Subspace> at, bt, xt, yt, da, db;
};

DegreePieces degree_pieces(const EmbeddedContext& ctx) {
    const FiniteGroup& g = ctx.C.group();
    const Algebra& c = ctx.C.algebra();
    DegreePieces p;
    for (int32_t t = 0; t < g.order(); ++t) {
        p.at.push_back(ctx.C.homogeneous_part(ctx.A, t));
        p.bt.push_back(ctx.C.homogeneous_part(ctx.B, t));
        p.xt.push_back(ctx.C.homogeneous_part(ctx.X, t));
        p.yt.push_back(ctx.C.homogeneous_part(ctx.Y, t));
    }
    for (int32_t t = 0; t < g.order(); ++t) {
        p.da.push_back(c.product_span(p.at[size_t(t)], p.at[size_t(g.inv(t))]));
        p.db.push_back(c.product_span(p.bt[size_t(t)], p.bt[size_t(g.inv(t))]));
    }
    return p;
}

}  // namespace

bool is_strong_context(const EmbeddedContext& ctx) {
    const FiniteGroup& g = ctx.C.group();
    const Algebra& c = ctx.C.algebra();
    DegreePieces p = degree_pieces(ctx);
    for (int32_t t = 0; t < g.order(); ++t) {
        if (!(c.product_span(p.da[size_t(t)], p.da[size_t(t)]) == p.da[size_t(t)])) return false;
        if (!(c.product_span(p.db[size_t(t)], p.db[size_t(t)]) == p.db[size_t(t)])) return false;
    }
    for (int32_t t = 0; t < g.order(); ++t) {
        const int32_t ti = g.inv(t);
        if (!(c.product_span(p.da[size_t(t)], p.xt[size_t(t)]) == p.xt[size_t(t)])) return false;
        if (!(c.product_span(p.xt[size_t(t)], p.db[size_t(ti)]) == p.xt[size_t(t)])) return false;
        if (!(c.product_span(p.db[size_t(t)], p.yt[size_t(t)]) == p.yt[size_t(t)])) return false;
        if (!(c.product_span(p.yt[size_t(t)], p.da[size_t(ti)]) == p.yt[size_t(t)])) return false;
    }
    return true;
}

bool is_strong_graded_equivalence(const EmbeddedContext& ctx) {
    if (!is_strong_context(ctx)) return false;
    const Algebra& c = ctx.C.algebra();
    if (!(c.product_span(ctx.X, ctx.Y) == ctx.A) || !(c.product_span(ctx.Y, ctx.X) == ctx.B))
        return false;
    const FiniteGroup& g = ctx.C.group();
    DegreePieces p = degree_pieces(ctx);
    for (int32_t t = 0; t < g.order(); ++t) {
        const int32_t ti = g.inv(t);
        if (!(c.product_span(p.xt[size_t(t)], p.yt[size_t(ti)]) == p.da[size_t(t)])) return false;
        if (!(c.product_span(p.yt[size_t(t)], p.xt[size_t(ti)]) == p.db[size_t(t)])) return false;
    }
    return true;
}

bool is_strong_graded_equivalence(const AbstractContext& ctx) {
    return is_strong_graded_equivalence(linking_algebra(ctx).inside);
}

VerificationReport check_strong_props(const EmbeddedContext& ctx, const std::string& fixture) {
    if (!is_strong_context(ctx)) throw Error("PreconditionFailed", "context is not strong");
    VerificationReport rep;
    rep.theorem = "strong-context-props";
    rep.fixture = fixture;
    const FiniteGroup& g = ctx.C.group();
    const Algebra& c = ctx.C.algebra();
    const int32_t e = g.identity();
    DegreePieces p = degree_pieces(ctx);

    auto eq = [&](const std::string& name, const Subspace& l, const Subspace& r) {
        rep.record_eq_dims(name, l.rank(), r.rank(), l == r);
    };

    const bool sge = is_strong_graded_equivalence(ctx);
    for (int32_t r = 0; r < g.order(); ++r) {
        eq("component-translation-X" + tag(r), c.product_span(p.at[size_t(r)], p.xt[size_t(e)]),
           p.xt[size_t(r)]);
        eq("component-translation-X-right" + tag(r), c.product_span(p.xt[size_t(e)], p.bt[size_t(r)]),
           p.xt[size_t(r)]);
        eq("component-translation-Y" + tag(r), c.product_span(p.bt[size_t(r)], p.yt[size_t(e)]),
           p.yt[size_t(r)]);
        eq("component-translation-Y-right" + tag(r), c.product_span(p.yt[size_t(e)], p.at[size_t(r)]),
           p.yt[size_t(r)]);
        eq("ideal-exchange-X" + tag(r), c.product_span(p.da[size_t(r)], p.xt[size_t(e)]),
           c.product_span(p.xt[size_t(e)], p.db[size_t(r)]));
        eq("ideal-exchange-Y" + tag(r), c.product_span(p.db[size_t(r)], p.yt[size_t(e)]),
           c.product_span(p.yt[size_t(e)], p.da[size_t(r)]));
        // Fully unital pieces: Z_r = X_1 B_r is unital over the degree ideals.
        Subspace zr = c.product_span(p.xt[size_t(e)], p.bt[size_t(r)]);
        eq("fully-unital-Z" + tag(r), c.product_span(zr, p.db[size_t(g.inv(r))]), zr);
    }
    Subspace x1y1 = c.product_span(p.xt[size_t(e)], p.yt[size_t(e)]);
    for (int32_t r = 0; r < g.order(); ++r)
        for (int32_t s = 0; s < g.order(); ++s) {
            Subspace lhs = c.product_span(p.xt[size_t(r)], p.yt[size_t(s)]);
            Subspace factored = c.product_span(p.at[size_t(r)], c.product_span(x1y1, p.at[size_t(s)]));
            eq("pairing-factorization" + tag2(r, s), lhs, factored);
            rep.record_bool("pairing-inside-components" + tag2(r, s), true,
                            lhs.is_subspace_of(c.product_span(p.at[size_t(r)], p.at[size_t(s)])));
            if (sge) {
                eq("pairing-onto-components" + tag2(r, s), lhs,
                   c.product_span(p.at[size_t(r)], p.at[size_t(s)]));
                eq("pairing-onto-components-B" + tag2(r, s),
                   c.product_span(p.yt[size_t(r)], p.xt[size_t(s)]),
                   c.product_span(p.bt[size_t(r)], p.bt[size_t(s)]));
            }
            eq("module-ideal-translate" + tag2(r, s), c.product_span(p.xt[size_t(r)], p.db[size_t(s)]),
               c.product_span(p.da[size_t(g.mul(r, s))], p.xt[size_t(r)]));
        }
    // Degreewise Morita equivalences between the degree ideals.
    for (int32_t t = 0; t < g.order(); ++t) {
        Subspace w = c.product_span(p.da[size_t(t)], p.xt[size_t(e)]);
        Subspace v = c.product_span(p.db[size_t(t)], p.yt[size_t(e)]);
        eq("degreewise-pairing-A" + tag(t), c.product_span(w, v), p.da[size_t(t)]);
        eq("degreewise-pairing-B" + tag(t), c.product_span(v, w), p.db[size_t(t)]);
        eq("degreewise-unital-W" + tag(t), c.product_span(p.da[size_t(t)], w), w);
        eq("degreewise-unital-W-right" + tag(t), c.product_span(w, p.db[size_t(t)]), w);
        eq("degreewise-unital-V" + tag(t), c.product_span(p.db[size_t(t)], v), v);
        eq("degreewise-unital-V-right" + tag(t), c.product_span(v, p.da[size_t(t)]), v);
        if (sge) {
            const int32_t ti = g.inv(t);
            eq("definitional-pairing-A" + tag(t), c.product_span(p.xt[size_t(t)], p.yt[size_t(ti)]),
               p.da[size_t(t)]);
            eq("definitional-pairing-B" + tag(t), c.product_span(p.yt[size_t(t)], p.xt[size_t(ti)]),
               p.db[size_t(t)]);
        }
    }
    return rep;
}

TensorQuotient tensor_over(const GradedSpace& x, const FiniteGroup& g, int32_t mid_dim,
                           const BilinTable& xa, const BilinTable& ay, const GradedSpace& y) {
    const Field f = x.f;
    const int32_t nx = x.dim, ny = y.dim;
    const int32_t n = nx * ny;
    auto idx = [&](int32_t i, int32_t j) { return i * ny + j; };

    SpanBuilder rel(f, n);
    for (int32_t i = 0; i < nx; ++i)
        for (int32_t k = 0; k < mid_dim; ++k) {
            const SVec* xav = xa.at(i, k);
            for (int32_t j = 0; j < ny; ++j) {
                const SVec* ayv = ay.at(k, j);
                if (!xav && !ayv) continue;
                SVec r;
                if (xav)
                    for (const auto& [l, c] : *xav) r.emplace_back(idx(l, j), c);
                std::sort(r.begin(), r.end(),
                          [](const auto& u, const auto& v) { return u.first < v.first; });
                if (ayv)
                    for (const auto& [mm, c] : *ayv)
                        r = svec_axpy(r, -c, SVec{{idx(i, mm), Scalar::one(f)}});
                rel.insert(r);
            }
        }
    Subspace relations = rel.finish();

    // Relations must be homogeneous for the quotient grading.
    for (const auto& row : relations.basis()) {
        int32_t d = -1;
        for (const auto& [pos, _] : row) {
            int32_t di = g.mul(x.deg.at(size_t(pos / ny)), y.deg.at(size_t(pos % ny)));
            if (d < 0) d = di;
            if (d != di) throw Error("GradingViolation", "tensor relations are not homogeneous");
        }
    }

    TensorQuotient out;
    out.space.f = f;
    out.free_index.assign(size_t(n), -1);
    std::vector<bool> is_pivot(size_t(n), false);
    for (int32_t pcol : relations.pivots()) is_pivot[size_t(pcol)] = true;
    for (int32_t pos = 0; pos < n; ++pos) {
        if (is_pivot[size_t(pos)]) continue;
        out.free_index[size_t(pos)] = out.space.dim++;
        out.space.deg.push_back(g.mul(x.deg.at(size_t(pos / ny)), y.deg.at(size_t(pos % ny))));
    }

    // Projection of each pure tensor: reduce by the relation rows; the
    // residual is supported on free coordinates.
    out.proj.assign(size_t(nx), std::vector<SVec>(size_t(ny)));
    const auto& rows = relations.basis();
    const auto& pivots = relations.pivots();
    auto reduce = [&](SVec v) {
        SVec done;
        size_t r = 0;
        while (!v.empty()) {
            while (r < rows.size() && pivots[r] < v.front().first) ++r;
            if (r < rows.size() && pivots[r] == v.front().first) {
                v = svec_axpy(v, -v.front().second, rows[r]);
            } else {
                done.push_back(v.front());
                v.erase(v.begin());
            }
        }
        return done;
    };
    for (int32_t i = 0; i < nx; ++i)
        for (int32_t j = 0; j < ny; ++j) {
            SVec red = reduce(SVec{{idx(i, j), Scalar::one(f)}});
            SVec mapped;
            for (const auto& [pos, c] : red) mapped.emplace_back(out.free_index[size_t(pos)], c);
            std::sort(mapped.begin(), mapped.end(),
                      [](const auto& u, const auto& v) { return u.first < v.first; });
            out.proj[size_t(i)][size_t(j)] = std::move(mapped);
        }
    return out;
}

AbstractContext compose_contexts(const AbstractContext& m, const AbstractContext& n) {
    if (!(m.B == n.A)) throw Error("MiddleAlgebraMismatch", "middle algebras differ");
    const FiniteGroup& g = m.A.group();
    const int32_t mid = m.B.dim();

    TensorQuotient tx = tensor_over(m.X, g, mid, m.xb, n.ax, n.X);
    TensorQuotient ty = tensor_over(n.Y, g, mid, n.ya, m.by, m.Y);

    AbstractContext out;
    out.A = m.A;
    out.B = n.B;
    out.X = tx.space;
    out.Y = ty.space;

    const int32_t nxn = n.X.dim, nym = m.Y.dim;
    std::vector<std::pair<int32_t, int32_t>> xrep(size_t(tx.space.dim));
    for (int32_t pos = 0; pos < m.X.dim * nxn; ++pos)
        if (tx.free_index[size_t(pos)] >= 0)
            xrep[size_t(tx.free_index[size_t(pos)])] = {pos / nxn, pos % nxn};
    std::vector<std::pair<int32_t, int32_t>> yrep(size_t(ty.space.dim));
    for (int32_t pos = 0; pos < n.Y.dim * nym; ++pos)
        if (ty.free_index[size_t(pos)] >= 0)
            yrep[size_t(ty.free_index[size_t(pos)])] = {pos / nym, pos % nym};

    BilinTable ax(m.A.dim()), xb(tx.space.dim), by(n.B.dim()), ya(ty.space.dim);
    BilinTable xy(tx.space.dim), yx(ty.space.dim);

    for (int32_t q = 0; q < tx.space.dim; ++q) {
        const auto [i, j] = xrep[size_t(q)];
        for (int32_t ai = 0; ai < m.A.dim(); ++ai) {
            const SVec* axv = m.ax.at(ai, i);
            if (!axv) continue;
            SVec val;
            for (const auto& [l, c] : *axv) val = svec_axpy(val, c, tx.proj[size_t(l)][size_t(j)]);
            ax.set(ai, q, val);
        }
        for (int32_t bi = 0; bi < n.B.dim(); ++bi) {
            const SVec* xbv = n.xb.at(j, bi);
            if (!xbv) continue;
            SVec val;
            for (const auto& [l, c] : *xbv) val = svec_axpy(val, c, tx.proj[size_t(i)][size_t(l)]);
            xb.set(q, bi, val);
        }
        for (int32_t p = 0; p < ty.space.dim; ++p) {
            const auto [u, v] = yrep[size_t(p)];
            const SVec* mid_val = n.xy.at(j, u);  // pairing through the middle algebra
            if (!mid_val) continue;
            SVec acted;
            for (const auto& [k, c] : *mid_val) {
                const SVec* byv = m.by.at(k, v);
                if (byv) acted = svec_axpy(acted, c, *byv);
            }
            SVec val;
            for (const auto& [w, c] : acted) {
                const SVec* xyv = m.xy.at(i, w);
                if (xyv) val = svec_axpy(val, c, *xyv);
            }
            xy.set(q, p, val);
        }
    }
    for (int32_t p = 0; p < ty.space.dim; ++p) {
        const auto [u, v] = yrep[size_t(p)];
        for (int32_t bi = 0; bi < n.B.dim(); ++bi) {
            const SVec* byv = n.by.at(bi, u);
            if (!byv) continue;
            SVec val;
            for (const auto& [l, c] : *byv) val = svec_axpy(val, c, ty.proj[size_t(l)][size_t(v)]);
            by.set(bi, p, val);
        }
        for (int32_t ai = 0; ai < m.A.dim(); ++ai) {
            const SVec* yav = m.ya.at(v, ai);
            if (!yav) continue;
            SVec val;
            for (const auto& [l, c] : *yav) val = svec_axpy(val, c, ty.proj[size_t(u)][size_t(l)]);
            ya.set(p, ai, val);
        }
        for (int32_t q = 0; q < tx.space.dim; ++q) {
            const auto [i, j] = xrep[size_t(q)];
            const SVec* mid_val = m.yx.at(v, i);
            if (!mid_val) continue;
            SVec acted;
            for (const auto& [k, c] : *mid_val) {
                const SVec* axv = n.ax.at(k, j);
                if (axv) acted = svec_axpy(acted, c, *axv);
            }
            SVec val;
            for (const auto& [w, c] : acted) {
                const SVec* yxv = n.yx.at(u, w);
                if (yxv) val = svec_axpy(val, c, *yxv);
            }
            yx.set(p, q, val);
        }
    }
    out.ax = std::move(ax);
    out.xb = std::move(xb);
    out.by = std::move(by);
    out.ya = std::move(ya);
    out.xy = std::move(xy);
    out.yx = std::move(yx);
    (void)linking_algebra(out);  // validates the composite identities
    return out;
}

VerificationReport validate_action_equivalence(const ActionEquivalence& ae, const std::string& fixture) {
    VerificationReport rep;
    rep.theorem = "action-equivalence";
    rep.fixture = fixture;
    const Algebra& c = ae.C;
    const Field f = c.field();
    const int32_t dim = c.dim();
    const FiniteGroup& g = ae.theta.group();

    SpanBuilder all(f, dim);
    for (const Subspace* u : {&ae.A, &ae.X, &ae.Y, &ae.B})
        for (const auto& row : u->basis()) all.insert(row);
    rep.record("blocks-direct-sum", std::to_string(dim),
               std::to_string(ae.A.rank() + ae.X.rank() + ae.Y.rank() + ae.B.rank()),
               all.is_full() && ae.A.rank() + ae.X.rank() + ae.Y.rank() + ae.B.rank() == dim);
    rep.record_bool("theta-on-context-algebra", true, ae.theta.algebra() == c);
    rep.record_bool("theta-product-flavor", true, ae.theta.flavor() == PartialAction::Flavor::product);

    rep.record_eq_dims("XY=A", c.product_span(ae.X, ae.Y).rank(), ae.A.rank(),
                       c.product_span(ae.X, ae.Y) == ae.A);
    rep.record_eq_dims("YX=B", c.product_span(ae.Y, ae.X).rank(), ae.B.rank(),
                       c.product_span(ae.Y, ae.X) == ae.B);
    rep.record_eq_dims("AX=X", c.product_span(ae.A, ae.X).rank(), ae.X.rank(),
                       c.product_span(ae.A, ae.X) == ae.X);
    rep.record_eq_dims("XB=X", c.product_span(ae.X, ae.B).rank(), ae.X.rank(),
                       c.product_span(ae.X, ae.B) == ae.X);
    rep.record_eq_dims("BY=Y", c.product_span(ae.B, ae.Y).rank(), ae.Y.rank(),
                       c.product_span(ae.B, ae.Y) == ae.Y);
    rep.record_eq_dims("YA=Y", c.product_span(ae.Y, ae.A).rank(), ae.Y.rank(),
                       c.product_span(ae.Y, ae.A) == ae.Y);

    rep.record_bool("globality-matches", ae.alpha.is_global(), ae.alphap.is_global());

    Bridge ba(ae.bridge_a), bb(ae.bridge_b);
    bool bridges_ok = ae.bridge_a.cols == ae.alpha.algebra().dim() && ae.bridge_a.rows == dim &&
                      ae.bridge_b.cols == ae.alphap.algebra().dim() && ae.bridge_b.rows == dim &&
                      ae.A.rank() == ae.alpha.algebra().dim() &&
                      ae.B.rank() == ae.alphap.algebra().dim();
    for (int32_t i = 0; bridges_ok && i < ae.alpha.algebra().dim(); ++i) {
        if (!ae.A.contains(ba.cols[size_t(i)])) bridges_ok = false;
        for (int32_t j = 0; bridges_ok && j < ae.alpha.algebra().dim(); ++j) {
            const SVec* p = ae.alpha.algebra().product(i, j);
            if (c.multiply(ba.cols[size_t(i)], ba.cols[size_t(j)]) != (p ? ba.lift(*p) : SVec{}))
                bridges_ok = false;
        }
    }
    for (int32_t i = 0; bridges_ok && i < ae.alphap.algebra().dim(); ++i) {
        if (!ae.B.contains(bb.cols[size_t(i)])) bridges_ok = false;
        for (int32_t j = 0; bridges_ok && j < ae.alphap.algebra().dim(); ++j) {
            const SVec* p = ae.alphap.algebra().product(i, j);
            if (c.multiply(bb.cols[size_t(i)], bb.cols[size_t(j)]) != (p ? bb.lift(*p) : SVec{}))
                bridges_ok = false;
        }
    }
    rep.record_bool("bridges-multiplicative", true, bridges_ok);

    for (int32_t t = 0; t < g.order(); ++t) {
        const int32_t ti = g.inv(t);
        Subspace dt = ba.lift(ae.alpha.domain(t), dim);
        Subspace dpt = bb.lift(ae.alphap.domain(t), dim);
        const Subspace& dbar_t = ae.theta.domain(t);
        const Subspace& dbar_ti = ae.theta.domain(ti);

        rep.record_eq_dims("theta-domain-A-corner" + tag(t), intersect(dbar_t, ae.A).rank(), dt.rank(),
                           intersect(dbar_t, ae.A) == dt);
        rep.record_eq_dims("theta-domain-B-corner" + tag(t), intersect(dbar_t, ae.B).rank(),
                           dpt.rank(), intersect(dbar_t, ae.B) == dpt);
        bool maps_agree = true;
        try {
            for (const auto& v : ae.alpha.domain(ti).basis())
                if (ae.theta.apply(t, ba.lift(v)) != ba.lift(ae.alpha.apply(t, v)))
                    maps_agree = false;
            for (const auto& v : ae.alphap.domain(ti).basis())
                if (ae.theta.apply(t, bb.lift(v)) != bb.lift(ae.alphap.apply(t, v)))
                    maps_agree = false;
        } catch (const Error&) {
            // Corner domains that do not even embed into the domains of
            // theta are a failure of the restriction property.
            maps_agree = false;
        }
        rep.record_bool("theta-restricts" + tag(t), true, maps_agree);

        for (const auto& [name, block] : {std::pair<const char*, const Subspace*>{"A", &ae.A},
                                          {"X", &ae.X},
                                          {"Y", &ae.Y},
                                          {"B", &ae.B}}) {
            Subspace from = intersect(*block, dbar_ti);
            Subspace to = intersect(*block, dbar_t);
            Subspace image = ae.theta.apply(t, from);
            rep.record_eq_dims(std::string("theta-invariant-") + name + tag(t), image.rank(),
                               to.rank(), image == to);
        }

        int32_t pieces = intersect(dbar_t, ae.A).rank() + intersect(dbar_t, ae.X).rank() +
                         intersect(dbar_t, ae.Y).rank() + intersect(dbar_t, ae.B).rank();
        rep.record("domain-block-form" + tag(t), std::to_string(dbar_t.rank()),
                   std::to_string(pieces), pieces == dbar_t.rank());

        Subspace ydx = c.product_span(c.product_span(ae.Y, dt), ae.X);
        rep.record_eq_dims("YDX=D'" + tag(t), ydx.rank(), dpt.rank(), ydx == dpt);
        Subspace xt = c.product_span(c.product_span(dt, ae.X), dpt);
        Subspace yt = c.product_span(c.product_span(dpt, ae.Y), dt);
        rep.record_eq_dims("XtYt=D" + tag(t), c.product_span(xt, yt).rank(), dt.rank(),
                           c.product_span(xt, yt) == dt);
        rep.record_eq_dims("YtXt=D'" + tag(t), c.product_span(yt, xt).rank(), dpt.rank(),
                           c.product_span(yt, xt) == dpt);
        rep.record_eq_dims("DX=Xt" + tag(t), c.product_span(dt, ae.X).rank(), xt.rank(),
                           c.product_span(dt, ae.X) == xt);
        rep.record_eq_dims("XD'=Xt" + tag(t), c.product_span(ae.X, dpt).rank(), xt.rank(),
                           c.product_span(ae.X, dpt) == xt);
        rep.record_eq_dims("D'Y=Yt" + tag(t), c.product_span(dpt, ae.Y).rank(), yt.rank(),
                           c.product_span(dpt, ae.Y) == yt);
        rep.record_eq_dims("YD=Yt" + tag(t), c.product_span(ae.Y, dt).rank(), yt.rank(),
                           c.product_span(ae.Y, dt) == yt);
        rep.record_eq_dims("domain-X-corner" + tag(t), intersect(dbar_t, ae.X).rank(), xt.rank(),
                           intersect(dbar_t, ae.X) == xt);
        rep.record_eq_dims("domain-Y-corner" + tag(t), intersect(dbar_t, ae.Y).rank(), yt.rank(),
                           intersect(dbar_t, ae.Y) == yt);
        rep.record_eq_dims("ideal-unital-X" + tag(t), c.product_span(dt, xt).rank(), xt.rank(),
                           c.product_span(dt, xt) == xt);
        rep.record_eq_dims("ideal-unital-X-right" + tag(t), c.product_span(xt, dpt).rank(), xt.rank(),
                           c.product_span(xt, dpt) == xt);
        rep.record_eq_dims("ideal-unital-Y" + tag(t), c.product_span(dpt, yt).rank(), yt.rank(),
                           c.product_span(dpt, yt) == yt);
        rep.record_eq_dims("ideal-unital-Y-right" + tag(t), c.product_span(yt, dt).rank(), yt.rank(),
                           c.product_span(yt, dt) == yt);
    }
    return rep;
}

ActionEquivalence self_equivalence(const PartialAction& alpha) {
    const Algebra& a = alpha.algebra();
    const Field f = a.field();
    const int32_t d = a.dim();
    const FiniteGroup& g = alpha.group();

    // 2x2 block pattern over the algebra: blocks A, X, Y, B in order.
    Algebra c(f, 4 * d);
    const int32_t pattern[4][4] = {{0, 1, -1, -1}, {-1, -1, 0, 1}, {2, 3, -1, -1}, {-1, -1, 2, 3}};
    for (int32_t bi = 0; bi < 4; ++bi)
        for (int32_t bj = 0; bj < 4; ++bj) {
            const int32_t target = pattern[bi][bj];
            if (target < 0) continue;
            for (int32_t i = 0; i < d; ++i)
                for (int32_t j = 0; j < d; ++j) {
                    const SVec* p = a.product(i, j);
                    if (p) c.set_product(bi * d + i, bj * d + j, svec_shift(*p, target * d));
                }
        }

    auto block = [&](int32_t b) {
        SpanBuilder sb(f, 4 * d);
        for (int32_t i = 0; i < d; ++i) sb.insert(unit_vec(b * d + i, f));
        return sb.finish();
    };

    std::vector<Subspace> domains;
    std::vector<Mat> maps;
    for (int32_t t = 0; t < g.order(); ++t) {
        SpanBuilder sb(f, 4 * d);
        for (int32_t b = 0; b < 4; ++b)
            for (const auto& row : alpha.domain(t).basis()) sb.insert(svec_shift(row, b * d));
        domains.push_back(sb.finish());
    }
    for (int32_t t = 0; t < g.order(); ++t) {
        const Subspace& src = domains[size_t(g.inv(t))];
        Mat m(f, 4 * d, src.rank());
        for (int32_t j = 0; j < src.rank(); ++j) {
            const SVec& row = src.basis()[size_t(j)];
            const int32_t b = row.front().first / d;
            SVec in_a = svec_shift(row, -b * d);
            for (const auto& [k, cc] : svec_shift(alpha.apply(t, in_a), b * d)) m.at(k, j) = cc;
        }
        maps.push_back(std::move(m));
    }
    PartialAction theta = PartialAction::validate_product(g, c, std::move(domains), std::move(maps));

    Mat bridge_a(f, 4 * d, d), bridge_b(f, 4 * d, d);
    for (int32_t i = 0; i < d; ++i) {
        bridge_a.at(i, i) = Scalar::one(f);
        bridge_b.at(3 * d + i, i) = Scalar::one(f);
    }
    return ActionEquivalence{std::move(c), block(0),        block(1),
                             block(2),     block(3),        std::move(theta),
                             alpha,        alpha,           std::move(bridge_a),
                             std::move(bridge_b)};
}

ActionToSge action_equivalence_to_sge(const ActionEquivalence& ae, const std::string& fixture) {
    ActionToSge out;
    out.report.theorem = "action-equivalence-to-sge";
    out.report.fixture = fixture;
    const Field f = ae.C.field();
    const int32_t dim = ae.C.dim();
    const FiniteGroup& g = ae.theta.group();

    out.crossed = skew_group_algebra(ae.theta);
    const GradedAlgebra& cbar = out.crossed.carrier;
    const Algebra& cb = cbar.algebra();

    // Projections onto the A+X and A+Y parts of the block decomposition.
    Mat basis_change(f, dim, dim);
    int32_t col = 0;
    std::vector<int32_t> block_of(static_cast<size_t>(dim));
    for (const auto& [bidx, u] :
         {std::pair<int32_t, const Subspace*>{0, &ae.A}, {1, &ae.X}, {2, &ae.Y}, {3, &ae.B}}) {
        for (const auto& row : u->basis()) {
            block_of[size_t(col)] = bidx;
            for (const auto& [k, c] : row) basis_change.at(k, col) = c;
            ++col;
        }
    }
    if (col != dim) throw Error("PreconditionFailed", "blocks do not decompose the algebra");
    auto inv = inverse(basis_change);
    if (!inv) throw Error("PreconditionFailed", "blocks do not decompose the algebra");
    auto projector = [&](bool keep_x, bool keep_y) {
        Mat sel(f, dim, dim);
        for (int32_t i = 0; i < dim; ++i) {
            const int32_t b = block_of[size_t(i)];
            if (b == 0 || (b == 1 && keep_x) || (b == 2 && keep_y)) sel.at(i, i) = Scalar::one(f);
        }
        return basis_change.times(sel).times(*inv);
    };
    Mat pax = projector(true, false);
    Mat pay = projector(false, true);

    const int32_t cdim = cbar.dim();
    Multiplier e{Mat(f, cdim, cdim), Mat(f, cdim, cdim)};
    for (int32_t t = 0; t < g.order(); ++t) {
        const Subspace& dom = ae.theta.domain(t);
        for (int32_t j = 0; j < dom.rank(); ++j) {
            for (const auto& m_sel : {std::pair<const Mat*, Mat*>{&pax, &e.left}, {&pay, &e.right}}) {
                SVec img = m_sel.first->apply(dom.basis()[size_t(j)]);
                auto coords = dom.coordinates_sparse(img);
                if (!coords) throw Error("PreconditionFailed", "domains do not respect the block form");
                for (const auto& [k, c] : *coords)
                    m_sel.second->at(out.crossed.index(t, k), out.crossed.index(t, j)) = c;
            }
        }
    }
    out.e = std::move(e);

    out.report.record_bool("multiplier", true, is_multiplier(cb, out.e));
    out.report.record_bool("idempotent", true, out.e.is_idempotent());
    out.report.record_bool("degree-one", true, multiplier_has_degree(cbar, out.e, g.identity()));

    Subspace c1 = out.crossed.block(g.identity());
    SpanBuilder ec1b(f, cdim);
    for (const auto& row : c1.basis()) ec1b.insert(out.e.left.apply(row));
    Subspace ec1 = ec1b.finish();
    for (int32_t t = 0; t < g.order(); ++t) {
        Subspace ct = out.crossed.block(t);
        Subspace prod = cb.product_span(ct, ec1);
        out.report.record_eq_dims("CteC1=Ct" + tag(t), prod.rank(), ct.rank(), prod == ct);
    }
    out.report.record_bool("partially-strongly-graded", true, cbar.is_partially_strongly_graded());

    for (int32_t t = 0; t < g.order(); ++t) {
        Subspace dt = cbar.degree_ideal(t);
        SpanBuilder deb(f, cdim), edb(f, cdim), dmeb(f, cdim), medb(f, cdim);
        for (const auto& row : dt.basis()) {
            deb.insert(out.e.right.apply(row));
            edb.insert(out.e.left.apply(row));
            dmeb.insert(svec_axpy(row, -Scalar::one(f), out.e.right.apply(row)));
            medb.insert(svec_axpy(row, -Scalar::one(f), out.e.left.apply(row)));
        }
        Subspace lhs = cb.product_span(deb.finish(), edb.finish());
        out.report.record_eq_dims("DeD=D" + tag(t), lhs.rank(), dt.rank(), lhs == dt);
        Subspace lhs2 = cb.product_span(dmeb.finish(), medb.finish());
        out.report.record_eq_dims("D(1-e)D=D" + tag(t), lhs2.rank(), dt.rank(), lhs2 == dt);
    }

    out.context = corner_context(cbar, out.e);
    out.report.record_bool("corner-strong-graded-equivalence", true,
                           is_strong_graded_equivalence(out.context));

    SkewAlgebra skew_a = skew_group_algebra(ae.alpha);
    SkewAlgebra skew_b = skew_group_algebra(ae.alphap);
    Bridge ba(ae.bridge_a), bb(ae.bridge_b);
    auto corner_iso = [&](const Subspace& corner, const Bridge& br, const SkewAlgebra& target) {
        Mat iso(f, target.carrier.dim(), corner.rank());
        for (int32_t j = 0; j < corner.rank(); ++j) {
            SVec out_vec;
            const SVec& row = corner.basis()[size_t(j)];
            for (int32_t t = 0; t < g.order(); ++t) {
                SVec part;
                const int32_t off = out.crossed.offsets[size_t(t)];
                const int32_t len = ae.theta.domain(t).rank();
                for (const auto& [k, c] : row)
                    if (k >= off && k < off + len) part.emplace_back(k - off, c);
                if (part.empty()) continue;
                SVec in_c = ae.theta.domain(t).from_coordinates(part);
                auto in_base = br.drop(in_c);
                if (!in_base) throw Error("VerificationFailed", "corner leaves the bridge");
                out_vec = svec_axpy(out_vec, Scalar::one(f), target.embed(t, *in_base));
            }
            for (const auto& [k, c] : out_vec) iso.at(k, j) = c;
        }
        return LinearMap{std::move(iso)};
    };
    out.corner_iso_a = corner_iso(out.context.A, ba, skew_a);
    out.corner_iso_b = corner_iso(out.context.B, bb, skew_b);
    GradedAlgebra corner_a_alg = graded_algebra_on_subspace(cbar, out.context.A);
    GradedAlgebra corner_b_alg = graded_algebra_on_subspace(cbar, out.context.B);
    bool iso_a_ok = true, iso_b_ok = true;
    try {
        require_graded_iso(corner_a_alg, skew_a.carrier, out.corner_iso_a);
    } catch (const Error&) {
        iso_a_ok = false;
    }
    try {
        require_graded_iso(corner_b_alg, skew_b.carrier, out.corner_iso_b);
    } catch (const Error&) {
        iso_b_ok = false;
    }
    out.report.record_bool("corner-A-is-skew-algebra", true, iso_a_ok);
    out.report.record_bool("corner-B-is-skew-algebra", true, iso_b_ok);

    for (int32_t t = 0; t < g.order(); ++t) {
        Subspace dt = cbar.degree_ideal(t);
        SpanBuilder cornered(f, cdim);
        for (const auto& row : dt.basis()) cornered.insert(out.e.right.apply(out.e.left.apply(row)));
        Subspace corner_part = cornered.finish();
        SpanBuilder mapped(f, skew_a.carrier.dim());
        bool inside = true;
        for (const auto& row : corner_part.basis()) {
            auto coords = out.context.A.coordinates_sparse(row);
            if (!coords) {
                inside = false;
                break;
            }
            mapped.insert(out.corner_iso_a.apply(*coords));
        }
        Subspace target = skew_a.carrier.degree_ideal(t);
        Subspace got = mapped.finish();
        out.report.record_eq_dims("corner-degree-ideal" + tag(t), got.rank(), target.rank(),
                                  inside && got == target);
    }
    return out;
}

RestrictedEquivalence restrict_action_equivalence(const ActionEquivalence& ae, const Subspace& ideal,
                                                  const std::string& fixture) {
    RestrictedEquivalence out;
    out.report.theorem = "restrict-action-equivalence";
    out.report.fixture = fixture;
    if (!ae.theta.is_global())
        throw Error("PreconditionFailed", "restriction starts from an equivalence of global actions");
    if (!ideal.is_subspace_of(ae.A))
        throw Error("PreconditionFailed", "the ideal must sit inside the left block");

    const Algebra& c = ae.C;
    const Field f = c.field();
    const FiniteGroup& g = ae.theta.group();

    Subspace aprime = c.product_span(c.product_span(ae.Y, ideal), ae.X);
    out.ideal_right = aprime;
    Subspace x1 = c.product_span(ideal, ae.X);
    Subspace y1 = c.product_span(ae.Y, ideal);
    Subspace xn = c.product_span(x1, aprime);
    Subspace yn = c.product_span(aprime, y1);
    out.report.record_eq_dims("X-corner-unital", xn.rank(), x1.rank(), xn == x1);
    Subspace cn = sum(sum(ideal, xn), sum(yn, aprime));

    for (int32_t s = 0; s < g.order(); ++s)
        for (int32_t t = 0; t < g.order(); ++t) {
            Subspace lhs = c.product_span(ae.theta.apply(s, aprime), ae.theta.apply(t, aprime));
            Subspace rhs = c.product_span(
                c.product_span(ae.Y,
                               c.product_span(ae.theta.apply(s, ideal), ae.theta.apply(t, ideal))),
                ae.X);
            out.report.record_eq_dims("translate-product" + tag2(s, t), lhs.rank(), rhs.rank(),
                                      lhs == rhs);
        }

    std::vector<Mat> theta_maps;
    for (int32_t t = 0; t < g.order(); ++t) theta_maps.push_back(ae.theta.map(t));
    GlobalAction gamma = GlobalAction::validate(g, c, theta_maps);
    PartialAction theta_n = restrict_global(gamma, cn);

    Bridge ba(ae.bridge_a), bb(ae.bridge_b);
    auto corner_action = [&](const Bridge& br) {
        const int32_t adim = br.fwd.cols;
        std::vector<Mat> maps;
        for (int32_t t = 0; t < g.order(); ++t) {
            Mat m(f, adim, adim);
            for (int32_t j = 0; j < adim; ++j) {
                auto dropped = br.drop(ae.theta.apply(t, br.cols[size_t(j)]));
                if (!dropped) throw Error("PreconditionFailed", "corner is not invariant");
                for (const auto& [k, cc] : *dropped) m.at(k, j) = cc;
            }
            maps.push_back(std::move(m));
        }
        return maps;
    };
    GlobalAction beta_a = GlobalAction::validate(g, ae.alpha.algebra(), corner_action(ba));
    GlobalAction beta_b = GlobalAction::validate(g, ae.alphap.algebra(), corner_action(bb));
    auto drop_space = [&](const Bridge& br, const Subspace& u, int32_t adim) {
        auto d = br.drop(u, adim);
        if (!d) throw Error("PreconditionFailed", "ideal leaves its block");
        return *d;
    };
    PartialAction alpha_n = restrict_global(beta_a, drop_space(ba, ideal, ae.alpha.algebra().dim()));
    PartialAction alpha_np =
        restrict_global(beta_b, drop_space(bb, aprime, ae.alphap.algebra().dim()));

    Algebra cn_alg = algebra_on_subspace(c, cn);
    auto to_cn = [&](const Subspace& u) {
        SpanBuilder sb(f, cn.rank());
        for (const auto& row : u.basis()) {
            auto coords = cn.coordinates_sparse(row);
            if (!coords) throw Error("PreconditionFailed", "block leaves the context ideal");
            sb.insert(*coords);
        }
        return sb.finish();
    };
    auto bridge_into_cn = [&](const Bridge& br, const PartialAction& restricted,
                              const Subspace& ideal_in_c) {
        Mat m(f, cn.rank(), restricted.algebra().dim());
        Subspace ideal_drop = drop_space(br, ideal_in_c, br.fwd.cols);
        for (int32_t j = 0; j < restricted.algebra().dim(); ++j) {
            SVec in_c = br.lift(ideal_drop.basis()[size_t(j)]);
            auto coords = cn.coordinates_sparse(in_c);
            if (!coords) throw Error("PreconditionFailed", "carrier basis leaves the context ideal");
            for (const auto& [k, cc] : *coords) m.at(k, j) = cc;
        }
        return m;
    };
    Mat bra = bridge_into_cn(ba, alpha_n, ideal);
    Mat brb = bridge_into_cn(bb, alpha_np, aprime);
    ActionEquivalence eq{std::move(cn_alg), to_cn(ideal), to_cn(xn),        to_cn(yn),
                         to_cn(aprime),     theta_n,      alpha_n,          alpha_np,
                         std::move(bra),    std::move(brb)};
    VerificationReport inner = validate_action_equivalence(eq, fixture);
    for (auto& chk : inner.checks) out.report.checks.push_back(std::move(chk));
    out.equivalence = std::move(eq);
    return out;
}

SmashedContext smash_context(const AbstractContext& m, const std::string& fixture) {
    SmashedContext out;
    out.report.theorem = "smash-context";
    out.report.fixture = fixture;
    out.linked = linking_algebra(m);
    out.carrier = smash(out.linked.L);
    out.smash_a = smash(m.A);
    out.smash_b = smash(m.B);
    const Field f = m.A.field();
    const FiniteGroup& g = m.A.group();
    const int32_t sdim = out.carrier.carrier.dim();

    const int32_t a = m.A.dim(), x = m.X.dim, y = m.Y.dim, b = m.B.dim();
    auto block_span = [&](int32_t off, int32_t len) {
        SpanBuilder sb(f, sdim);
        for (int32_t i = 0; i < sdim; ++i) {
            const auto& l = out.carrier.labels[size_t(i)];
            if (l.k >= off && l.k < off + len) sb.insert(unit_vec(i, f));
        }
        return sb.finish();
    };
    Subspace sa = block_span(out.linked.offA, a);
    Subspace sx = block_span(out.linked.offX, x);
    Subspace sy = block_span(out.linked.offY, y);
    Subspace sb_ = block_span(out.linked.offB, b);
    out.context = EmbeddedContext{out.carrier.carrier, sa, sb_, sx, sy};
    validate_embedded(out.context);

    out.report.record_bool("block-A-is-smash", true,
                           graded_algebra_on_subspace(out.carrier.carrier, sa) == out.smash_a.carrier);
    out.report.record_bool("block-B-is-smash", true,
                           graded_algebra_on_subspace(out.carrier.carrier, sb_) == out.smash_b.carrier);
    out.report.record("block-dimensions",
                      std::to_string(out.smash_a.carrier.dim()) + "+" +
                          std::to_string(out.smash_b.carrier.dim()),
                      std::to_string(sa.rank()) + "+" + std::to_string(sb_.rank()),
                      sa.rank() == out.smash_a.carrier.dim() &&
                          sb_.rank() == out.smash_b.carrier.dim());

    GlobalAction beta_c = dual_action(out.carrier);
    GlobalAction beta_a = dual_action(out.smash_a);
    GlobalAction beta_b = dual_action(out.smash_b);

    std::vector<int32_t> to_s_a(size_t(out.smash_a.carrier.dim()));
    for (int32_t i = 0; i < out.smash_a.carrier.dim(); ++i) {
        const auto& l = out.smash_a.labels[size_t(i)];
        to_s_a[size_t(i)] = out.carrier.index_of(out.linked.offA + l.k, l.r, l.s);
    }
    std::vector<int32_t> to_s_b(size_t(out.smash_b.carrier.dim()));
    for (int32_t i = 0; i < out.smash_b.carrier.dim(); ++i) {
        const auto& l = out.smash_b.labels[size_t(i)];
        to_s_b[size_t(i)] = out.carrier.index_of(out.linked.offB + l.k, l.r, l.s);
    }
    bool invariant = true, restricts = true;
    for (int32_t t = 0; t < g.order(); ++t) {
        for (const Subspace* u : {&sa, &sx, &sy, &sb_})
            if (!(beta_c.apply(t, *u) == *u)) invariant = false;
        for (int32_t i = 0; i < out.smash_a.carrier.dim(); ++i)
            if (beta_c.apply(t, unit_vec(to_s_a[size_t(i)], f)) !=
                relabel(beta_a.apply(t, unit_vec(i, f)), to_s_a))
                restricts = false;
        for (int32_t i = 0; i < out.smash_b.carrier.dim(); ++i)
            if (beta_c.apply(t, unit_vec(to_s_b[size_t(i)], f)) !=
                relabel(beta_b.apply(t, unit_vec(i, f)), to_s_b))
                restricts = false;
    }
    out.report.record_bool("blocks-invariant", true, invariant);
    out.report.record_bool("restrictions-are-dual-actions", true, restricts);

    out.is_equivalence = is_graded_equivalence(out.linked.inside);
    out.report.record_bool("input-is-graded-equivalence", out.is_equivalence, out.is_equivalence);
    if (out.is_equivalence) {
        Mat bridge_a(f, sdim, out.smash_a.carrier.dim());
        for (int32_t i = 0; i < out.smash_a.carrier.dim(); ++i)
            bridge_a.at(to_s_a[size_t(i)], i) = Scalar::one(f);
        Mat bridge_b(f, sdim, out.smash_b.carrier.dim());
        for (int32_t i = 0; i < out.smash_b.carrier.dim(); ++i)
            bridge_b.at(to_s_b[size_t(i)], i) = Scalar::one(f);
        out.actions = ActionEquivalence{out.carrier.carrier.algebra(),
                                        sa,
                                        sx,
                                        sy,
                                        sb_,
                                        PartialAction::from_global(beta_c),
                                        PartialAction::from_global(beta_a),
                                        PartialAction::from_global(beta_b),
                                        std::move(bridge_a),
                                        std::move(bridge_b)};
        VerificationReport inner = validate_action_equivalence(out.actions, fixture);
        for (auto& chk : inner.checks) out.report.checks.push_back(std::move(chk));
    }
    return out;
}

CanonicalEquivalence sge_to_canonical_action_equivalence(const AbstractContext& m,
                                                         const std::string& fixture) {
    if (!m.A.is_partially_strongly_graded() || !m.B.is_partially_strongly_graded())
        throw Error("PreconditionFailed", "outer algebras must be partially strongly graded");
    if (!is_strong_graded_equivalence(m))
        throw Error("PreconditionFailed", "context is not a strong graded equivalence");

    CanonicalEquivalence out;
    out.report.theorem = "sge-to-canonical-equivalence";
    out.report.fixture = fixture;
    out.smashed = smash_context(m, fixture);
    const Field f = m.A.field();
    const int32_t sdim = out.smashed.carrier.carrier.dim();
    const Algebra& s_alg = out.smashed.carrier.carrier.algebra();

    auto translate = [&](const Subspace& u, const std::vector<int32_t>& map) {
        SpanBuilder sb(f, sdim);
        for (const auto& row : u.basis()) sb.insert(relabel(row, map));
        return sb.finish();
    };
    std::vector<int32_t> to_s_a(size_t(out.smashed.smash_a.carrier.dim()));
    for (int32_t i = 0; i < out.smashed.smash_a.carrier.dim(); ++i) {
        const auto& l = out.smashed.smash_a.labels[size_t(i)];
        to_s_a[size_t(i)] = out.smashed.carrier.index_of(out.smashed.linked.offA + l.k, l.r, l.s);
    }
    std::vector<int32_t> to_s_b(size_t(out.smashed.smash_b.carrier.dim()));
    for (int32_t i = 0; i < out.smashed.smash_b.carrier.dim(); ++i) {
        const auto& l = out.smashed.smash_b.labels[size_t(i)];
        to_s_b[size_t(i)] = out.smashed.carrier.index_of(out.smashed.linked.offB + l.k, l.r, l.s);
    }

    Subspace ia = translate(partial_smash(out.smashed.smash_a), to_s_a);
    Subspace ib = translate(partial_smash(out.smashed.smash_b), to_s_b);

    Subspace carried =
        s_alg.product_span(s_alg.product_span(out.smashed.context.Y, ia), out.smashed.context.X);
    out.report.record_eq_dims("Y-ideal-X-is-other-ideal", carried.rank(), ib.rank(), carried == ib);

    RestrictedEquivalence r = restrict_action_equivalence(out.smashed.actions, ia, fixture);
    out.report.record_eq_dims("right-ideal-matches", r.ideal_right.rank(), ib.rank(),
                              r.ideal_right == ib);

    CanonicalPartialAction cpa_a = canonical_partial_action(m.A, fixture);
    CanonicalPartialAction cpa_b = canonical_partial_action(m.B, fixture);
    out.report.record_bool("left-action-is-canonical", true, r.equivalence.alpha == cpa_a.action);
    out.report.record_bool("right-action-is-canonical", true, r.equivalence.alphap == cpa_b.action);

    for (auto& chk : r.report.checks) out.report.checks.push_back(std::move(chk));
    out.restricted = std::move(r);
    return out;
}

}  // namespace gral
