#include <doctest.h>

#include <algorithm>

#include "gral/linalg.hpp"
#include "test_util.hpp"

using namespace gral;
using testutil::Rng;
using testutil::sc;

namespace {

const Field Q = Field::q();
const Field F101 = Field::fp(101);

SVec unit(int32_t i, Field f = Q) { return {{i, Scalar::one(f)}}; }

// Independent 3x3 determinant by cofactor expansion along the first row.
Scalar det3(const Mat& m) {
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    };
    return m.at(0, 0) * minor2(1, 2, 1, 2) - m.at(0, 1) * minor2(1, 2, 0, 2) +
           m.at(0, 2) * minor2(1, 2, 0, 1);
}

Subspace random_subspace(Rng& rng, Field f, int32_t dim) {
    SpanBuilder b(f, dim);
    int32_t count = int32_t(rng.below(dim + 1));
    for (int32_t v = 0; v < count; ++v) {
        SVec vec;
        for (int32_t i = 0; i < dim; ++i) {
            int64_t c = rng.below(5) - 2;
            if (c != 0) vec.emplace_back(i, sc(f, c));
        }
        b.insert(vec);
    }
    return b.finish();
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    Rng rng(7);
    for (int n = 0; n < 500; ++n) {
        Scalar a = sc(Q, rng.below(41) - 20, rng.below(19) + 1);
        Scalar b = sc(Q, rng.below(41) - 20, rng.below(19) + 1);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    for (int n = 0; n < 500; ++n) {
        Scalar a = sc(F101, rng.below(101));
        Scalar b = sc(F101, rng.below(101));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("scalar normalization and parsing") {
    CHECK(sc(Q, 2, -4).to_string() == "-1/2");
    CHECK(sc(Q, 6, 3).to_string() == "2");
    CHECK(sc(F101, -1).num() == 100);
    CHECK(Scalar::parse(Q, "-3/9") == sc(Q, -1, 3));
    CHECK(Scalar::parse(F101, "205") == sc(F101, 3));
    CHECK_THROWS_AS(sc(Q, 1, 2) + sc(F101, 1), Error);
    CHECK_THROWS_WITH_AS(Field::fp(9), "prime-field modulus must be prime: 9", Error);
}

TEST_CASE("rref basics") {
    Mat id2 = Mat::identity(Q, 2);
    auto r = rref(id2);
    CHECK(r.r == id2);
    CHECK(r.rank == 2);

    Mat z(Q, 2, 3);
    auto rz = rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.r == z);

    Mat m(Q, 2, 2);
    m.at(0, 0) = sc(Q, 2);
    m.at(0, 1) = sc(Q, 4);
    m.at(1, 0) = sc(Q, 1);
    m.at(1, 1) = sc(Q, 2);
    auto rm = rref(m);
    CHECK(rm.rank == 1);
    CHECK(rm.r.at(0, 0) == sc(Q, 1));
    CHECK(rm.r.at(0, 1) == sc(Q, 2));
    CHECK(rm.r.at(1, 0).is_zero());
    CHECK(rm.r.at(1, 1).is_zero());
    CHECK(rm.pivots == std::vector<int32_t>{0});
}

TEST_CASE("rref is idempotent") {
    Rng rng(11);
    for (int n = 0; n < 40; ++n) {
        Field f = n % 2 ? Q : F101;
        Mat m(f, 4, 5);
        for (auto& x : m.a) x = sc(f, rng.below(7) - 3);
        auto once = rref(m);
        auto twice = rref(once.r);
        CHECK(once.r == twice.r);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("span basics") {
    CHECK(Subspace::span(Q, 3, {}).rank() == 0);
    CHECK(Subspace::span(Q, 3, {unit(0), svec_scale(unit(0), sc(Q, 2))}).rank() == 1);

    // Rank of {e1+e2, e2+e3, e1-e3}: the 3x3 determinant vanishes but a
    // 2x2 minor does not, so the rank is 2.
    Mat m(Q, 3, 3);
    m.at(0, 0) = m.at(0, 1) = sc(Q, 1);
    m.at(1, 1) = m.at(1, 2) = sc(Q, 1);
    m.at(2, 0) = sc(Q, 1);
    m.at(2, 2) = sc(Q, -1);
    CHECK(det3(m).is_zero());
    CHECK(!(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).is_zero());

    Subspace s = Subspace::span(Q, 3, {{{0, sc(Q, 1)}, {1, sc(Q, 1)}},
                                       {{1, sc(Q, 1)}, {2, sc(Q, 1)}},
                                       {{0, sc(Q, 1)}, {2, sc(Q, -1)}}});
    CHECK(s.rank() == 2);

    CHECK_THROWS_AS(Subspace::span_dense(Q, 3, {{sc(Q, 1), sc(Q, 1)}}), Error);
}

TEST_CASE("sum and intersection") {
    Subspace u = Subspace::span(Q, 3, {{{0, sc(Q, 1)}, {1, sc(Q, 1)}}, {{1, sc(Q, 1)}, {2, sc(Q, 1)}}});
    Subspace zero = Subspace::zero(Q, 3);
    CHECK(sum(u, zero) == u);
    CHECK(intersect(u, u) == u);

    Subspace e1 = Subspace::span(Q, 3, {unit(0)});
    Subspace e2 = Subspace::span(Q, 3, {unit(1)});
    CHECK(intersect(e1, e2).is_zero());

    // span{e1+e2, e2+e3} meets span{e1, e3} exactly in span{e1-e3}:
    // a(e1+e2)+b(e2+e3) has no e2 part iff b = -a.
    Subspace v = Subspace::span(Q, 3, {unit(0), unit(2)});
    Subspace expected = Subspace::span(Q, 3, {{{0, sc(Q, 1)}, {2, sc(Q, -1)}}});
    CHECK(intersect(u, v) == expected);
}

TEST_CASE("intersection agrees with brute-force enumeration over a small prime field") {
    // Independent oracle: enumerate all of U over F_5 and keep the members of V.
    Field f5 = Field::fp(5);
    Rng rng(23);
    for (int n = 0; n < 30; ++n) {
        Subspace u = random_subspace(rng, f5, 4);
        Subspace v = random_subspace(rng, f5, 4);
        while (u.rank() > 2) u = random_subspace(rng, f5, 4);
        SpanBuilder oracle(f5, 4);
        std::vector<int64_t> c(size_t(u.rank()));
        int64_t total = 1;
        for (int i = 0; i < u.rank(); ++i) total *= 5;
        for (int64_t code = 0; code < total; ++code) {
            int64_t x = code;
            SVec vec;
            for (int i = 0; i < u.rank(); ++i) {
                c[size_t(i)] = x % 5;
                x /= 5;
                vec = svec_axpy(vec, sc(f5, c[size_t(i)]), u.basis()[size_t(i)]);
            }
            if (v.contains(vec)) oracle.insert(vec);
        }
        CHECK(intersect(u, v) == oracle.finish());
    }
}

TEST_CASE("membership and equality") {
    Subspace u = Subspace::span(Q, 2, {unit(0)});
    CHECK(u.contains({}));
    CHECK(!u.contains(unit(1)));

    Subspace a = Subspace::span(Q, 2, {{{0, sc(Q, 1)}, {1, sc(Q, 1)}}, {{0, sc(Q, 1)}, {1, sc(Q, -1)}}});
    Subspace b = Subspace::span(Q, 2, {unit(0), unit(1)});
    CHECK(a.rank() == 2);
    CHECK(b.rank() == 2);
    CHECK(a == b);

    CHECK_THROWS_AS(u.contains(unit(5)), Error);
    CHECK_THROWS_AS(sum(u, Subspace::zero(Q, 3)), Error);
}

TEST_CASE("coordinates recover members") {
    Subspace u = Subspace::span(Q, 4, {{{0, sc(Q, 1)}, {1, sc(Q, 2)}}, {{2, sc(Q, 1)}, {3, sc(Q, -1)}}});
    SVec v = svec_axpy(svec_scale(u.basis()[0], sc(Q, 3)), sc(Q, -2), u.basis()[1]);
    auto coords = u.coordinates(v);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == sc(Q, 3));
    CHECK((*coords)[1] == sc(Q, -2));
    CHECK(!u.coordinates(unit(1)).has_value());
}

TEST_CASE("modular law for dimensions") {
    Rng rng(42);
    for (int n = 0; n < 60; ++n) {
        Field f = n % 2 ? Q : F101;
        int32_t dim = 2 + int32_t(rng.below(7));
        Subspace u = random_subspace(rng, f, dim);
        Subspace v = random_subspace(rng, f, dim);
        CHECK(sum(u, v).rank() + intersect(u, v).rank() == u.rank() + v.rank());
        CHECK(intersect(u, v).is_subspace_of(u));
        CHECK(u.is_subspace_of(sum(u, v)));
    }
}

TEST_CASE("span is canonical under shuffling") {
    Rng rng(99);
    for (int n = 0; n < 30; ++n) {
        int32_t dim = 3 + int32_t(rng.below(5));
        std::vector<SVec> vecs;
        for (int k = 0; k < 5; ++k) {
            SVec v;
            for (int32_t i = 0; i < dim; ++i) {
                int64_t c = rng.below(5) - 2;
                if (c != 0) v.emplace_back(i, sc(Q, c));
            }
            vecs.push_back(v);
        }
        Subspace base = Subspace::span(Q, dim, vecs);
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            for (size_t i = vecs.size(); i > 1; --i) std::swap(vecs[i - 1], vecs[size_t(rng.below(int64_t(i)))]);
            CHECK(Subspace::span(Q, dim, vecs) == base);
        }
    }
}

TEST_CASE("matrix inverse") {
    Mat m(Q, 2, 2);
    m.at(0, 0) = sc(Q, 1);
    m.at(0, 1) = sc(Q, 2);
    m.at(1, 1) = sc(Q, 1);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m.times(*inv) == Mat::identity(Q, 2));

    Mat sing(Q, 2, 2);
    sing.at(0, 0) = sc(Q, 1);
    sing.at(1, 0) = sc(Q, 1);
    CHECK(!inverse(sing).has_value());
}
