#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zdcode {

// Dense matrix over GF(p), p prime, p <= 251. Entries are residues in [0, p).
class GfMatrix {
  public:
    GfMatrix() = default;
    GfMatrix(std::uint16_t p, std::size_t rows, std::size_t cols);

    static GfMatrix from_rows(std::uint16_t p,
                              const std::vector<std::vector<int>>& rows);

    std::uint16_t field() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::uint8_t* row(std::size_t i) const { return a_.data() + i * cols_; }
    std::uint8_t* row(std::size_t i) { return a_.data() + i * cols_; }

    std::vector<std::uint8_t> row_vec(std::size_t i) const;

    friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

    // Text format: header "p rows cols", then one line per row,
    // entries space separated.
    std::string to_text() const;
    static GfMatrix from_text(const std::string& text);

  private:
    std::uint16_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> a_;
};

struct RrefResult {
    GfMatrix mat;
    std::vector<std::size_t> pivot_cols; // ascending, one per nonzero row
    std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form. Deterministic: pivots are chosen topmost in the
// leftmost eligible column, entries above and below each pivot cleared.
RrefResult rref(const GfMatrix& m);

std::size_t rank(const GfMatrix& m);

// Basis of { x : m x = 0 }, one vector per row. Zero rows count means trivial
// nullspace (returned matrix has 0 rows, cols() == m.cols()).
GfMatrix nullspace(const GfMatrix& m);

GfMatrix transpose(const GfMatrix& m);
GfMatrix multiply(const GfMatrix& a, const GfMatrix& b);

// True iff v lies in the row space of m. Decided by the rank test:
// rank(m) == rank(m with v appended).
bool row_space_membership(const GfMatrix& m, const std::vector<std::uint8_t>& v);

} // namespace zdcode
