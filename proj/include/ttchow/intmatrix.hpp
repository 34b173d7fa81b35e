#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttchow {

using Int = mpz_class;

enum class ErrorCode { parse, schema, validation, domain, guard, usage, internal };

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Degenerate shapes (0 x n, n x 0) are legal; a map from the zero group
/// is carried by a matrix with zero columns.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);
    static IntMatrix column_vector(const std::vector<Int>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    void set_column(std::size_t j, const std::vector<Int>& v);

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    /// [*this | rhs], row counts must agree.
    IntMatrix hconcat(const IntMatrix& rhs) const;
    /// Block-diagonal composite [[*this, 0], [0, rhs]].
    IntMatrix block_diag(const IntMatrix& rhs) const;
    /// First `n` rows.
    IntMatrix top_rows(std::size_t n) const;
    /// Columns selected by index list, in order.
    IntMatrix select_columns(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

/// u * m * v == s with u, v unimodular, s diagonal, nonnegative, and
/// d1 | d2 | ... (zero entries trail the chain). u_inv satisfies
/// u * u_inv == identity and is kept so that a basis of the column span
/// of m can be read off as { s_i * u_inv.column(i) : s_i != 0 }.
struct SmithForm {
    IntMatrix u, s, v;
    IntMatrix u_inv;
    std::vector<Int> diagonal() const;
    std::size_t nonzero_count() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Column span of an integer matrix as a sublattice of Z^rows, with exact
/// membership and coordinate queries via one Smith decomposition.
class ColumnLattice {
public:
    explicit ColumnLattice(const IntMatrix& generators);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    /// ambient x dim matrix whose columns are a lattice basis.
    const IntMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Int>& v) const;
    /// Some x with generators * x == v, if any.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& v) const;
    /// Unique coordinates of v in basis(), if v lies in the lattice.
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

private:
    std::size_t ambient_;
    SmithForm snf_;
    IntMatrix basis_;
    std::vector<std::size_t> basis_src_;  // diagonal indices backing basis columns
};

/// Basis of { x : m * x == 0 } as columns, read off the Smith transform.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace ttchow
