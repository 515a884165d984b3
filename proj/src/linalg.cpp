#include "gral/linalg.hpp"

#include <algorithm>

namespace gral {

SVec svec_scale(const SVec& v, const Scalar& c) {
    if (c.is_zero()) return {};
    SVec r;
    r.reserve(v.size());
    for (const auto& [i, x] : v) r.emplace_back(i, x * c);
    return r;
}

SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b) {
    if (c.is_zero()) return a;
    SVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, b[j].second * c);
            ++j;
        } else {
            Scalar s = a[i].second + b[j].second * c;
            if (!s.is_zero()) r.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

SVec svec_from_dense(const std::vector<Scalar>& v) {
    SVec r;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.emplace_back(int32_t(i), v[i]);
    return r;
}

std::vector<Scalar> svec_to_dense(const SVec& v, int32_t dim, Field f) {
    std::vector<Scalar> r(size_t(dim), Scalar::zero(f));
    for (const auto& [i, x] : v) {
        if (i < 0 || i >= dim) throw dimension_error("sparse index out of range");
        r[size_t(i)] = x;
    }
    return r;
}

SVec svec_shift(const SVec& v, int32_t offset) {
    SVec r = v;
    for (auto& [i, x] : r) i += offset;
    return r;
}

Mat Mat::identity(Field f, int32_t n) {
    Mat m(f, n, n);
    for (int32_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::times(const Mat& o) const {
    if (f != o.f) throw field_mismatch();
    if (cols != o.rows) throw dimension_error("matrix product shape mismatch");
    Mat r(f, rows, o.cols);
    for (int32_t i = 0; i < rows; ++i)
        for (int32_t k = 0; k < cols; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int32_t j = 0; j < o.cols; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

SVec Mat::apply(const SVec& v) const {
    std::vector<Scalar> acc(size_t(rows), Scalar::zero(f));
    for (const auto& [j, x] : v) {
        if (j < 0 || j >= cols) throw dimension_error("vector index out of range");
        for (int32_t i = 0; i < rows; ++i) {
            const Scalar& m = at(i, j);
            if (!m.is_zero()) acc[size_t(i)] += m * x;
        }
    }
    return svec_from_dense(acc);
}

SVec Mat::apply_row(int32_t j) const {
    SVec r;
    for (int32_t i = 0; i < rows; ++i)
        if (!at(i, j).is_zero()) r.emplace_back(i, at(i, j));
    return r;
}

RrefResult rref(const Mat& m) {
    for (const auto& s : m.a)
        if (s.field() != m.f) throw field_mismatch();
    RrefResult res;
    res.r = m;
    Mat& r = res.r;
    int32_t row = 0;
    for (int32_t col = 0; col < m.cols && row < m.rows; ++col) {
        int32_t piv = -1;
        for (int32_t i = row; i < m.rows; ++i)
            if (!r.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int32_t j = 0; j < m.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
        Scalar inv = r.at(row, col).inverse();
        for (int32_t j = col; j < m.cols; ++j) r.at(row, j) *= inv;
        for (int32_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            Scalar c = r.at(i, col);
            if (c.is_zero()) continue;
            for (int32_t j = col; j < m.cols; ++j) r.at(i, j) -= c * r.at(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) throw dimension_error("inverse of non-square matrix");
    Mat aug(m.f, m.rows, 2 * m.cols);
    for (int32_t i = 0; i < m.rows; ++i) {
        for (int32_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = Scalar::one(m.f);
    }
    RrefResult rr = rref(aug);
    if (rr.rank != m.rows || (!rr.pivots.empty() && rr.pivots.back() >= m.cols)) return std::nullopt;
    Mat inv(m.f, m.rows, m.cols);
    for (int32_t i = 0; i < m.rows; ++i)
        for (int32_t j = 0; j < m.cols; ++j) inv.at(i, j) = rr.r.at(i, m.cols + j);
    return inv;
}

bool SpanBuilder::insert(SVec v) {
    while (!v.empty()) {
        if (v.front().first >= ambient_) throw dimension_error("vector longer than ambient space");
        if (v.front().second.field() != f_) throw field_mismatch();
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) {
            Scalar inv = v.front().second.inverse();
            rows_.emplace(v.front().first, svec_scale(v, inv));
            return true;
        }
        v = svec_axpy(v, -v.front().second, it->second);
    }
    return false;
}

bool SpanBuilder::contains(SVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return false;
        v = svec_axpy(v, -v.front().second, it->second);
    }
    return true;
}

Subspace SpanBuilder::finish() const {
    // Back-substitute to reach the unique reduced form.
    std::vector<int32_t> pivots;
    pivots.reserve(rows_.size());
    for (const auto& [p, _] : rows_) pivots.push_back(p);

    std::map<int32_t, SVec> reduced;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SVec row = it->second;
        // Entries at later pivot columns are eliminated using already-reduced rows.
        for (size_t k = 0; k < row.size();) {
            auto rit = reduced.find(row[k].first);
            if (rit != reduced.end()) {
                row = svec_axpy(row, -row[k].second, rit->second);
            } else {
                ++k;
            }
        }
        reduced.emplace(it->first, std::move(row));
    }

    Subspace s;
    s.f_ = f_;
    s.ambient_ = ambient_;
    s.pivots_ = pivots;
    s.rows_.reserve(reduced.size());
    for (auto& [p, row] : reduced) s.rows_.push_back(std::move(row));
    return s;
}

Subspace Subspace::zero(Field f, int32_t ambient) {
    Subspace s;
    s.f_ = f;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(Field f, int32_t ambient) {
    SpanBuilder b(f, ambient);
    for (int32_t i = 0; i < ambient; ++i) b.insert({{i, Scalar::one(f)}});
    return b.finish();
}

Subspace Subspace::span(Field f, int32_t ambient, const std::vector<SVec>& vectors) {
    SpanBuilder b(f, ambient);
    for (const auto& v : vectors) b.insert(v);
    return b.finish();
}

Subspace Subspace::span_dense(Field f, int32_t ambient, const std::vector<std::vector<Scalar>>& vectors) {
    SpanBuilder b(f, ambient);
    for (const auto& v : vectors) {
        if (int32_t(v.size()) != ambient) throw dimension_error("span: vector has wrong length");
        b.insert(svec_from_dense(v));
    }
    return b.finish();
}

std::vector<Scalar> Subspace::basis_row_dense(int32_t i) const {
    return svec_to_dense(rows_.at(size_t(i)), ambient_, f_);
}

bool Subspace::contains(const SVec& v) const {
    SVec w = v;
    size_t row = 0;
    while (!w.empty()) {
        if (w.front().first >= ambient_) throw dimension_error("vector longer than ambient space");
        while (row < rows_.size() && pivots_[row] < w.front().first) ++row;
        if (row == rows_.size() || pivots_[row] != w.front().first) return false;
        w = svec_axpy(w, -w.front().second, rows_[row]);
    }
    return true;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SVec& v) const {
    std::vector<Scalar> coords(rows_.size(), Scalar::zero(f_));
    SVec w = v;
    size_t row = 0;
    while (!w.empty()) {
        while (row < rows_.size() && pivots_[row] < w.front().first) ++row;
        if (row == rows_.size() || pivots_[row] != w.front().first) return std::nullopt;
        coords[row] = w.front().second;
        w = svec_axpy(w, -w.front().second, rows_[row]);
    }
    return coords;
}

std::optional<SVec> Subspace::coordinates_sparse(const SVec& v) const {
    SVec coords;
    SVec w = v;
    size_t row = 0;
    while (!w.empty()) {
        while (row < rows_.size() && pivots_[row] < w.front().first) ++row;
        if (row == rows_.size() || pivots_[row] != w.front().first) return std::nullopt;
        coords.emplace_back(int32_t(row), w.front().second);
        w = svec_axpy(w, -w.front().second, rows_[row]);
    }
    return coords;
}

SVec Subspace::from_coordinates(const SVec& coords) const {
    SVec out;
    for (const auto& [j, c] : coords) out = svec_axpy(out, c, rows_.at(size_t(j)));
    return out;
}

bool Subspace::is_subspace_of(const Subspace& o) const {
    check_compatible(o);
    for (const auto& r : rows_)
        if (!o.contains(r)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return f_ == o.f_ && ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

void Subspace::check_compatible(const Subspace& o) const {
    if (f_ != o.f_) throw field_mismatch();
    if (ambient_ != o.ambient_) throw dimension_error("subspaces live in different ambient spaces");
}

Subspace sum(const Subspace& u, const Subspace& v) {
    u.check_compatible(v);
    SpanBuilder b(u.f_, u.ambient_);
    for (const auto& r : u.rows_) b.insert(r);
    for (const auto& r : v.rows_) b.insert(r);
    return b.finish();
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    u.check_compatible(v);
    const int32_t d = u.ambient_;
    // Rows [x | x] for x in U, [y | 0] for y in V; echelonize; rows with a
    // zero left half carry a basis of the intersection in the right half.
    SpanBuilder b(u.f_, 2 * d);
    for (const auto& r : u.rows_) {
        SVec both = r;
        for (const auto& [i, x] : r) both.emplace_back(i + d, x);
        b.insert(std::move(both));
    }
    for (const auto& r : v.rows_) b.insert(r);
    Subspace stacked = b.finish();

    SpanBuilder out(u.f_, d);
    for (size_t i = 0; i < stacked.basis().size(); ++i) {
        if (stacked.pivots()[i] < d) continue;
        out.insert(svec_shift(stacked.basis()[i], -d));
    }
    return out.finish();
}

}  // namespace gral
