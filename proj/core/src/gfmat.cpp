#include "zdcode/gfmat.hpp"

#include "packed_rows.hpp"
#include "zdcode/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace zdcode {

namespace {

bool small_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void check_field(std::uint32_t p) {
    if (p > 251 || !small_prime(p))
        throw InvalidArgument("GfMatrix: field must be a prime <= 251, got " +
                              std::to_string(p));
}

RrefResult rref_gf2(const GfMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    detail::PackedRows pk(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m.at(i, j)) pk.set(i, j, true);

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (pk.get(i, col)) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t t = 0; t < pk.wpr; ++t)
                std::swap(pk.row(sel)[t], pk.row(r)[t]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && pk.get(i, col))
                detail::xor_into(pk.row(i), pk.row(r), pk.wpr);
        pivots.push_back(col);
        ++r;
    }

    GfMatrix out(2, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.at(i, j) = pk.get(i, j) ? 1 : 0;
    return {std::move(out), std::move(pivots)};
}

} // namespace

GfMatrix::GfMatrix(std::uint16_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    check_field(p);
}

GfMatrix GfMatrix::from_rows(std::uint16_t p,
                             const std::vector<std::vector<int>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    GfMatrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InvalidArgument("GfMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            int v = rows[i][j] % p;
            if (v < 0) v += p;
            m.at(i, j) = static_cast<std::uint8_t>(v);
        }
    }
    return m;
}

std::vector<std::uint8_t> GfMatrix::row_vec(std::size_t i) const {
    return {row(i), row(i) + cols_};
}

std::string GfMatrix::to_text() const {
    std::ostringstream os;
    os << p_ << ' ' << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << int(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

GfMatrix GfMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    long long p = 0, rows = -1, cols = -1;
    if (!(is >> p >> rows >> cols) || p < 2 || rows < 0 || cols < 0)
        throw InvalidArgument("GfMatrix::from_text: bad header");
    check_field(static_cast<std::uint32_t>(p));
    GfMatrix m(static_cast<std::uint16_t>(p), static_cast<std::size_t>(rows),
               static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            long long v;
            if (!(is >> v))
                throw InvalidArgument("GfMatrix::from_text: missing entries");
            if (v < 0 || v >= p)
                throw InvalidArgument("GfMatrix::from_text: entry out of range");
            m.at(i, j) = static_cast<std::uint8_t>(v);
        }
    long long extra;
    if (is >> extra)
        throw InvalidArgument("GfMatrix::from_text: trailing data");
    return m;
}

RrefResult rref(const GfMatrix& m) {
    if (m.field() == 2) return rref_gf2(m);

    const std::uint32_t p = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    GfMatrix a = m;
    auto inv = detail::inverse_table(static_cast<std::uint16_t>(p));

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a.at(i, col)) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a.at(sel, j), a.at(r, j));
        std::uint32_t scale = inv[a.at(r, col)];
        if (scale != 1)
            for (std::size_t j = col; j < cols; ++j)
                a.at(r, j) = static_cast<std::uint8_t>(a.at(r, j) * scale % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || !a.at(i, col)) continue;
            std::uint32_t coef = p - a.at(i, col); // subtract a[i][col] * row r
            detail::add_scaled(a.row(i), a.row(r), cols, coef, p);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const GfMatrix& m) { return rref(m).rank(); }

GfMatrix nullspace(const GfMatrix& m) {
    const std::uint32_t p = m.field();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    GfMatrix basis(m.field(), free_cols.size(), m.cols());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t f = free_cols[b];
        basis.at(b, f) = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
            std::uint32_t v = rr.mat.at(i, f);
            if (v) basis.at(b, rr.pivot_cols[i]) = static_cast<std::uint8_t>(p - v);
        }
    }
    return basis;
}

GfMatrix transpose(const GfMatrix& m) {
    GfMatrix t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

GfMatrix multiply(const GfMatrix& a, const GfMatrix& b) {
    if (a.field() != b.field())
        throw InvalidArgument("multiply: field mismatch");
    if (a.cols() != b.rows())
        throw InvalidArgument("multiply: shape mismatch");
    const std::uint32_t p = a.field();
    GfMatrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint32_t aik = a.at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = static_cast<std::uint8_t>(
                    (c.at(i, j) + aik * b.at(k, j)) % p);
        }
    return c;
}

bool row_space_membership(const GfMatrix& m, const std::vector<std::uint8_t>& v) {
    if (v.size() != m.cols())
        throw InvalidArgument("row_space_membership: length mismatch");
    for (std::uint8_t x : v)
        if (x >= m.field())
            throw InvalidArgument("row_space_membership: entry out of range");
    GfMatrix ext(m.field(), m.rows() + 1, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            ext.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j)
        ext.at(m.rows(), j) = v[j];
    return rank(ext) == rank(m);
}

} // namespace zdcode
