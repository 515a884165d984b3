#include "gral/multiplier.hpp"

#include <algorithm>

namespace gral {
namespace {

SVec unit_vec(int32_t i, Field f) { return {{i, Scalar::one(f)}}; }

}  // namespace

bool is_multiplier(const Algebra& a, const Multiplier& w) {
    const int32_t d = a.dim();
    if (w.left.rows != d || w.left.cols != d || w.right.rows != d || w.right.cols != d)
        throw dimension_error("multiplier shape mismatch");
    const Field f = a.field();
    for (int32_t i = 0; i < d; ++i) {
        SVec li = w.left.apply_row(i);
        SVec ri = w.right.apply_row(i);
        for (int32_t j = 0; j < d; ++j) {
            const SVec* p = a.product(i, j);
            SVec prod = p ? *p : SVec{};
            if (w.left.apply(prod) != a.multiply(li, unit_vec(j, f))) return false;
            if (w.right.apply(prod) != a.multiply(unit_vec(i, f), w.right.apply_row(j))) return false;
            if (a.multiply(ri, unit_vec(j, f)) != a.multiply(unit_vec(i, f), w.left.apply_row(j)))
                return false;
        }
    }
    return true;
}

bool multiplier_has_degree(const GradedAlgebra& b, const Multiplier& w, int32_t t) {
    for (int32_t j = 0; j < b.dim(); ++j) {
        const int32_t s = b.degree(j);
        for (const auto& [k, _] : w.left.apply_row(j))
            if (b.degree(k) != b.group().mul(t, s)) return false;
        for (const auto& [k, _] : w.right.apply_row(j))
            if (b.degree(k) != b.group().mul(s, t)) return false;
    }
    return true;
}

Multiplier multiplication_by(const Algebra& a, const SVec& b) {
    const int32_t d = a.dim();
    Multiplier w{Mat(a.field(), d, d), Mat(a.field(), d, d)};
    for (int32_t j = 0; j < d; ++j) {
        SVec ej = unit_vec(j, a.field());
        for (const auto& [k, c] : a.multiply(b, ej)) w.left.at(k, j) = c;
        for (const auto& [k, c] : a.multiply(ej, b)) w.right.at(k, j) = c;
    }
    return w;
}

SVec multiplier_coords(const Multiplier& w) {
    const int32_t d = w.left.rows;
    SVec out;
    for (int32_t i = 0; i < d; ++i)
        for (int32_t j = 0; j < d; ++j)
            if (!w.left.at(i, j).is_zero()) out.emplace_back(i * d + j, w.left.at(i, j));
    for (int32_t i = 0; i < d; ++i)
        for (int32_t j = 0; j < d; ++j)
            if (!w.right.at(i, j).is_zero()) out.emplace_back(d * d + i * d + j, w.right.at(i, j));
    return out;
}

Multiplier multiplier_from_coords(Field f, int32_t dim, const SVec& coords) {
    Multiplier w{Mat(f, dim, dim), Mat(f, dim, dim)};
    for (const auto& [idx, c] : coords) {
        if (idx < dim * dim)
            w.left.at(idx / dim, idx % dim) = c;
        else
            w.right.at((idx - dim * dim) / dim, (idx - dim * dim) % dim) = c;
    }
    return w;
}

Subspace nullspace_of_rowspace(const Subspace& rows, int32_t ncols) {
    std::vector<bool> is_pivot(size_t(ncols), false);
    for (int32_t p : rows.pivots()) is_pivot[size_t(p)] = true;
    SpanBuilder b(rows.field(), ncols);
    for (int32_t j = 0; j < ncols; ++j) {
        if (is_pivot[size_t(j)]) continue;
        SVec v;
        for (int32_t r = 0; r < rows.rank(); ++r) {
            for (const auto& [k, c] : rows.basis()[size_t(r)])
                if (k == j) v.emplace_back(rows.pivots()[size_t(r)], -c);
        }
        v.emplace_back(j, Scalar::one(rows.field()));
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        b.insert(v);
    }
    return b.finish();
}

GradedMultiplierAlgebra graded_multipliers(const GradedAlgebra& b) {
    const Algebra& a = b.algebra();
    const int32_t d = a.dim();
    const int32_t nl = d * d;      // L block size
    const int32_t nvars = 2 * nl;  // pair coordinates
    const Field f = a.field();
    const FiniteGroup& g = b.group();

    auto Lidx = [&](int32_t i, int32_t j) { return i * d + j; };
    auto Ridx = [&](int32_t i, int32_t j) { return nl + i * d + j; };

    // Defining identities as linear constraints on the pair coordinates.
    SpanBuilder core(f, nvars);
    std::vector<Scalar> row(size_t(nvars), Scalar::zero(f));
    auto flush = [&]() {
        core.insert(svec_from_dense(row));
        std::fill(row.begin(), row.end(), Scalar::zero(f));
    };
    for (int32_t i = 0; i < d; ++i)
        for (int32_t j = 0; j < d; ++j) {
            const SVec* p = a.product(i, j);
            for (int32_t m = 0; m < d; ++m) {
                // L(b_i b_j) = L(b_i) b_j
                if (p)
                    for (const auto& [l, c] : *p) row[size_t(Lidx(m, l))] += c;
                for (int32_t k = 0; k < d; ++k)
                    if (const SVec* q = a.product(k, j))
                        for (const auto& [mm, c] : *q)
                            if (mm == m) row[size_t(Lidx(k, i))] -= c;
                flush();
                // R(b_i b_j) = b_i R(b_j)
                if (p)
                    for (const auto& [l, c] : *p) row[size_t(Ridx(m, l))] += c;
                for (int32_t k = 0; k < d; ++k)
                    if (const SVec* q = a.product(i, k))
                        for (const auto& [mm, c] : *q)
                            if (mm == m) row[size_t(Ridx(k, j))] -= c;
                flush();
                // R(b_i) b_j = b_i L(b_j)
                for (int32_t k = 0; k < d; ++k) {
                    if (const SVec* q = a.product(k, j))
                        for (const auto& [mm, c] : *q)
                            if (mm == m) row[size_t(Ridx(k, i))] += c;
                    if (const SVec* q = a.product(i, k))
                        for (const auto& [mm, c] : *q)
                            if (mm == m) row[size_t(Lidx(k, j))] -= c;
                }
                flush();
            }
        }
    Subspace core_rows = core.finish();

    GradedMultiplierAlgebra out;
    out.report.theorem = "graded-multipliers";

    for (int32_t t = 0; t < g.order(); ++t) {
        SpanBuilder sys(f, nvars);
        for (const auto& r : core_rows.basis()) sys.insert(r);
        // Degree pattern: L(B_s) <= B_{ts} and R(B_s) <= B_{st}.
        for (int32_t i = 0; i < d; ++i)
            for (int32_t j = 0; j < d; ++j) {
                if (b.degree(i) != g.mul(t, b.degree(j))) sys.insert(unit_vec(Lidx(i, j), f));
                if (b.degree(i) != g.mul(b.degree(j), t)) sys.insert(unit_vec(Ridx(i, j), f));
            }
        out.components.push_back(nullspace_of_rowspace(sys.finish(), nvars));
    }

    // Components are linearly independent.
    SpanBuilder all(f, nvars);
    int32_t dim_sum = 0;
    for (const auto& comp : out.components) {
        dim_sum += comp.rank();
        for (const auto& r : comp.basis()) all.insert(r);
    }
    out.report.record("components-independent", std::to_string(dim_sum), std::to_string(all.rank()),
                      all.rank() == dim_sum);

    // Component products: degree-s times degree-t lands in degree st.
    bool closed = true;
    for (int32_t s = 0; s < g.order() && closed; ++s)
        for (int32_t t = 0; t < g.order() && closed; ++t) {
            const Subspace& target = out.components[size_t(g.mul(s, t))];
            for (const auto& ws : out.components[size_t(s)].basis()) {
                for (const auto& wt : out.components[size_t(t)].basis()) {
                    Multiplier prod =
                        multiplier_from_coords(f, d, ws).times(multiplier_from_coords(f, d, wt));
                    if (!target.contains(multiplier_coords(prod))) {
                        closed = false;
                        break;
                    }
                }
                if (!closed) break;
            }
        }
    out.report.record_bool("component-products-closed", true, closed);

    // The natural map b -> (L_b, R_b).
    std::vector<Multiplier> mu;
    SpanBuilder mu_span(f, nvars);
    bool mu_graded = true;
    for (int32_t j = 0; j < d; ++j) {
        mu.push_back(multiplication_by(a, unit_vec(j, f)));
        mu_span.insert(multiplier_coords(mu.back()));
        if (!out.components[size_t(b.degree(j))].contains(multiplier_coords(mu.back())))
            mu_graded = false;
    }
    out.mu_image = mu_span.finish();
    out.report.record_bool("mu-degree-preserving", true, mu_graded);

    bool mu_hom = true;
    for (int32_t i = 0; i < d && mu_hom; ++i)
        for (int32_t j = 0; j < d; ++j) {
            const SVec* p = a.product(i, j);
            Multiplier lhs = p ? multiplication_by(a, *p) : Multiplier{Mat(f, d, d), Mat(f, d, d)};
            if (multiplier_coords(lhs) != multiplier_coords(mu[size_t(i)].times(mu[size_t(j)]))) {
                mu_hom = false;
                break;
            }
        }
    out.report.record_bool("mu-multiplicative", true, mu_hom);

    // The image of mu is an ideal of the graded multiplier algebra.
    bool ideal = true;
    for (const auto& comp : out.components) {
        for (const auto& wc : comp.basis()) {
            Multiplier w = multiplier_from_coords(f, d, wc);
            for (int32_t j = 0; j < d && ideal; ++j) {
                if (!out.mu_image.contains(multiplier_coords(w.times(mu[size_t(j)])))) ideal = false;
                if (!out.mu_image.contains(multiplier_coords(mu[size_t(j)].times(w)))) ideal = false;
            }
            if (!ideal) break;
        }
        if (!ideal) break;
    }
    out.report.record_bool("mu-image-ideal", true, ideal);

    const int32_t ann = a.two_sided_annihilator().rank();
    out.mu_injective = out.mu_image.rank() == d;
    out.report.record("mu-injective-iff-zero-annihilator",
                      ann == 0 ? "injective" : "kernel dim " + std::to_string(ann),
                      "rank " + std::to_string(out.mu_image.rank()) + " of " + std::to_string(d),
                      (ann == 0) == out.mu_injective && out.mu_image.rank() == d - ann);
    return out;
}

}  // namespace gral
