#include "gral/fixtures.hpp"

namespace gral {
namespace {

SVec unit_vec(int32_t i, Field f) { return {{i, Scalar::one(f)}}; }

Algebra diagonal_algebra(Field f, int32_t n) {
    Algebra a(f, n);
    for (int32_t i = 0; i < n; ++i) a.set_product(i, i, unit_vec(i, f));
    return a;
}

Mat permutation_matrix(Field f, const std::vector<int32_t>& image) {
    Mat m(f, int32_t(image.size()), int32_t(image.size()));
    for (int32_t j = 0; j < int32_t(image.size()); ++j) m.at(image[size_t(j)], j) = Scalar::one(f);
    return m;
}

GradedAlgebra group_algebra(const FiniteGroup& g, Field f, const std::vector<Scalar>* scale) {
    Algebra a(f, g.order());
    for (int32_t s = 0; s < g.order(); ++s)
        for (int32_t t = 0; t < g.order(); ++t) {
            Scalar c = Scalar::one(f);
            if (scale)
                c = (*scale)[size_t(s)] * (*scale)[size_t(t)] / (*scale)[size_t(g.mul(s, t))];
            a.set_product(s, t, {{g.mul(s, t), c}});
        }
    std::vector<int32_t> deg(size_t(g.order()));
    for (int32_t t = 0; t < g.order(); ++t) deg[size_t(t)] = t;
    return GradedAlgebra::validate(std::move(a), g, std::move(deg));
}

GradedAlgebra dual_numbers(const FiniteGroup& g, Field f, int32_t deg_x) {
    Algebra a(f, 2);
    a.set_product(0, 0, unit_vec(0, f));
    a.set_product(0, 1, unit_vec(1, f));
    a.set_product(1, 0, unit_vec(1, f));
    return GradedAlgebra::validate(std::move(a), g, {g.identity(), deg_x});
}

GradedAlgebra mat2_checkerboard(Field f) {
    Algebra a(f, 4);
    const int rc[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    auto idx = [&](int r, int c) {
        for (int k = 0; k < 4; ++k)
            if (rc[k][0] == r && rc[k][1] == c) return k;
        return -1;
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (rc[i][1] == rc[j][0]) a.set_product(i, j, {{idx(rc[i][0], rc[j][1]), Scalar::one(f)}});
    return GradedAlgebra::validate(std::move(a), FiniteGroup::cyclic(2), {0, 0, 1, 1});
}

GlobalAction swap_action(Field f) {
    return GlobalAction::validate(FiniteGroup::cyclic(2), diagonal_algebra(f, 2),
                                  {Mat::identity(f, 2), permutation_matrix(f, {1, 0})});
}

GlobalAction cycle_action(Field f) {
    Mat cyc = permutation_matrix(f, {1, 2, 0});
    return GlobalAction::validate(FiniteGroup::cyclic(3), diagonal_algebra(f, 3),
                                  {Mat::identity(f, 3), cyc, cyc.times(cyc)});
}

// Direct sum of two graded algebras over one group.
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
    Algebra alg(a.field(), a.dim() + b.dim());
    for (int32_t i = 0; i < a.dim(); ++i)
        for (int32_t j = 0; j < a.dim(); ++j)
            if (const SVec* p = a.algebra().product(i, j)) alg.set_product(i, j, *p);
    for (int32_t i = 0; i < b.dim(); ++i)
        for (int32_t j = 0; j < b.dim(); ++j)
            if (const SVec* p = b.algebra().product(i, j))
                alg.set_product(a.dim() + i, a.dim() + j, svec_shift(*p, a.dim()));
    std::vector<int32_t> deg = a.degrees();
    for (int32_t d : b.degrees()) deg.push_back(d);
    return GradedAlgebra::validate(std::move(alg), a.group(), std::move(deg));
}

// Sub-matrix-algebra of the position corner S x S over a unital base.
GradedAlgebra position_corner(const GradedAlgebra& base, const std::vector<int32_t>& positions) {
    const FiniteGroup& g = base.group();
    const Field f = base.field();
    const int32_t d = base.dim();
    const int32_t np = int32_t(positions.size());
    Algebra a(f, np * np * d);
    auto idx = [&](int32_t pr, int32_t ps, int32_t k) { return (pr * np + ps) * d + k; };
    std::vector<int32_t> deg(size_t(np * np * d));
    for (int32_t pr = 0; pr < np; ++pr)
        for (int32_t ps = 0; ps < np; ++ps)
            for (int32_t k = 0; k < d; ++k)
                deg[size_t(idx(pr, ps, k))] =
                    g.mul(positions[size_t(pr)], g.inv(positions[size_t(ps)]));
    for (int32_t pr = 0; pr < np; ++pr)
        for (int32_t ps = 0; ps < np; ++ps)
            for (int32_t pv = 0; pv < np; ++pv)
                for (int32_t k = 0; k < d; ++k)
                    for (int32_t l = 0; l < d; ++l) {
                        const SVec* p = base.algebra().product(k, l);
                        if (!p) continue;
                        SVec placed;
                        for (const auto& [m, c] : *p) placed.emplace_back(idx(pr, pv, m), c);
                        a.set_product(idx(pr, ps, k), idx(ps, pv, l), std::move(placed));
                    }
    return GradedAlgebra::validate(std::move(a), g, std::move(deg));
}

}  // namespace

std::vector<std::string> fixture_ids() { return {"F1", "F2", "F3", "F4", "F5", "F6"}; }

Fixture fixture(const std::string& id, Field f) {
    Fixture out;
    out.id = id;
    if (id == "F1") {
        out.description = "group algebra of the order-2 cyclic group with its natural grading";
        out.algebra = group_algebra(FiniteGroup::cyclic(2), f, nullptr);
    } else if (id == "F2") {
        out.description = "dual numbers k[x]/(x^2) with x in the nontrivial degree over C2";
        out.algebra = dual_numbers(FiniteGroup::cyclic(2), f, 1);
    } else if (id == "F3") {
        out.description = "restriction of the coordinate swap on k^2 to the first coordinate";
        out.global = swap_action(f);
        out.ideal = Subspace::span(f, 2, {unit_vec(0, f)});
        out.action = restrict_global(*out.global, *out.ideal);
    } else if (id == "F4") {
        out.description = "2x2 matrix algebra with the checkerboard C2-grading";
        out.algebra = mat2_checkerboard(f);
    } else if (id == "F5") {
        out.description = "group algebra of the order-3 cyclic group";
        out.algebra = group_algebra(FiniteGroup::cyclic(3), f, nullptr);
    } else if (id == "F6") {
        out.description = "restriction of the coordinate cycle on k^3 to the first two coordinates";
        out.global = cycle_action(f);
        out.ideal = Subspace::span(f, 3, {unit_vec(0, f), unit_vec(1, f)});
        out.action = restrict_global(*out.global, *out.ideal);
    } else {
        throw Error("UnknownFixture", "no fixture named " + id);
    }
    return out;
}

GradedAlgebra random_graded_algebra(uint64_t seed, const FiniteGroup& g, Field f, int32_t max_dim) {
    SplitMix rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    auto scale_vec = [&]() {
        std::vector<Scalar> s;
        for (int32_t t = 0; t < g.order(); ++t) s.push_back(Scalar(f, 1 + rng.below(3)));
        s[size_t(g.identity())] = Scalar::one(f);
        return s;
    };
    const int32_t recipe = int32_t(rng.below(10));
    if (recipe < 3) {  // scaled group algebra: strongly graded
        auto s = scale_vec();
        return group_algebra(g, f, &s);
    }
    if (recipe < 5 && g.order() * 1 <= max_dim) {  // position corner of a group algebra
        auto s = scale_vec();
        GradedAlgebra base = group_algebra(g, f, &s);
        int32_t np = 1;
        while (np + 1 <= g.order() && (np + 1) * (np + 1) * base.dim() <= max_dim && rng.chance(1, 2))
            ++np;
        std::vector<int32_t> positions;
        for (int32_t i = 0; i < np; ++i) positions.push_back(int32_t(rng.below(g.order())));
        return position_corner(base, positions);
    }
    if (recipe < 7) {  // nilpotent extension: idempotent graded, not partially strong
        int32_t deg_x = g.order() > 1 ? int32_t(1 + rng.below(g.order() - 1)) : g.identity();
        return dual_numbers(g, f, deg_x);
    }
    if (recipe == 7) {  // zero-product line: not even idempotent
        return GradedAlgebra::validate(Algebra(f, 1), g,
                                       std::vector<int32_t>{g.identity()});
    }
    if (recipe == 8) {  // skew algebra of a generated action: partially strong
        // Domain dimensions over all group elements stay within the bound.
        int32_t inner = max_dim / g.order() > 0 ? max_dim / g.order() : 1;
        PartialAction alpha = random_product_partial_action(rng.next(), g, f, inner, nullptr);
        GradedAlgebra skew = skew_group_algebra(alpha).carrier;
        if (skew.dim() <= max_dim && skew.dim() > 0) return skew;
        auto s = scale_vec();
        return group_algebra(g, f, &s);
    }
    // direct sum of two smaller draws
    GradedAlgebra left = random_graded_algebra(rng.next(), g, f, max_dim / 2 > 1 ? max_dim / 2 : 1);
    GradedAlgebra right = random_graded_algebra(rng.next(), g, f, max_dim / 2 > 1 ? max_dim / 2 : 1);
    if (left.dim() + right.dim() <= max_dim) return direct_sum(left, right);
    return left;
}

PartialAction random_product_partial_action(uint64_t seed, const FiniteGroup& g, Field f,
                                            int32_t max_dim, int32_t* rerolls) {
    SplitMix rng(seed * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
    if (rerolls) *rerolls = 0;
    const int32_t n = g.order();

    const bool matrix_blocks = 4 * n <= max_dim && rng.chance(1, 3);
    const int32_t block_dim = matrix_blocks ? 4 : 1;

    // Orbit structure: a few copies of the regular permutation action plus
    // fixed blocks, then a relabeling of the block positions.
    const int32_t max_blocks = max_dim / block_dim > 0 ? max_dim / block_dim : 1;
    int32_t orbits = max_blocks >= n ? 1 : 0;
    while ((orbits + 1) * n <= max_blocks && rng.chance(1, 3)) ++orbits;
    int32_t fixed = orbits == 0 ? 1 : 0;
    while (orbits * n + fixed + 1 <= max_blocks && rng.chance(1, 4)) ++fixed;
    const int32_t blocks = orbits * n + fixed;

    // Permutation of the block index set.
    std::vector<int32_t> relabeling(static_cast<size_t>(blocks));
    for (int32_t i = 0; i < blocks; ++i) relabeling[size_t(i)] = i;
    for (int32_t i = blocks - 1; i > 0; --i)
        std::swap(relabeling[size_t(i)], relabeling[size_t(rng.below(i + 1))]);

    // Block o*n + u of orbit o moves to o*n + (t*u) under t; fixed blocks stay.
    auto act_block = [&](int32_t t, int32_t bl) {
        if (bl >= orbits * n) return bl;
        return (bl / n) * n + g.mul(t, bl % n);
    };

    const int32_t dim = blocks * block_dim;
    Algebra alg(f, dim);
    if (matrix_blocks) {
        // basis within a block: e11, e22, e12, e21
        const int rc[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
        auto idx = [&](int r, int c) {
            for (int k = 0; k < 4; ++k)
                if (rc[k][0] == r && rc[k][1] == c) return k;
            return -1;
        };
        for (int32_t bl = 0; bl < blocks; ++bl)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (rc[i][1] == rc[j][0])
                        alg.set_product(bl * 4 + i, bl * 4 + j,
                                        unit_vec(bl * 4 + idx(rc[i][0], rc[j][1]), f));
    } else {
        alg = diagonal_algebra(f, dim);
    }

    std::vector<Mat> maps;
    for (int32_t t = 0; t < n; ++t) {
        Mat m(f, dim, dim);
        for (int32_t bl = 0; bl < blocks; ++bl) {
            const int32_t src = relabeling[size_t(bl)];
            const int32_t dst = relabeling[size_t(act_block(t, bl))];
            for (int32_t k = 0; k < block_dim; ++k)
                m.at(dst * block_dim + k, src * block_dim + k) = Scalar::one(f);
        }
        maps.push_back(std::move(m));
    }
    GlobalAction beta = GlobalAction::validate(g, std::move(alg), std::move(maps));

    // Ideal spanned by a nonempty subset of the blocks; occasionally all of
    // them, which makes the restriction global.
    std::vector<bool> chosen(size_t(blocks), false);
    if (rng.chance(1, 5)) {
        chosen.assign(size_t(blocks), true);
    } else {
        bool any = false;
        while (!any) {
            for (int32_t i = 0; i < blocks; ++i) {
                chosen[size_t(i)] = rng.chance(1, 2);
                any = any || chosen[size_t(i)];
            }
            if (!any && rerolls) ++*rerolls;
        }
    }
    SpanBuilder sb(f, dim);
    for (int32_t bl = 0; bl < blocks; ++bl)
        if (chosen[size_t(bl)])
            for (int32_t k = 0; k < block_dim; ++k)
                sb.insert(unit_vec(relabeling[size_t(bl)] * block_dim + k, f));
    return restrict_global(beta, sb.finish());
}

}  // namespace gral
