#include "ttchow/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace ttchow {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::parse: return "E_PARSE";
        case ErrorCode::schema: return "E_SCHEMA";
        case ErrorCode::validation: return "E_VALIDATION";
        case ErrorCode::domain: return "E_DOMAIN";
        case ErrorCode::guard: return "E_GUARD";
        case ErrorCode::usage: return "E_USAGE";
        case ErrorCode::internal: return "E_INTERNAL";
    }
    return "E_INTERNAL";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw Error(ErrorCode::validation, "matrix entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Int>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error(ErrorCode::validation, "matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_)
        throw Error(ErrorCode::validation, "hconcat row mismatch");
    IntMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
    }
    return out;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& rhs) const {
    IntMatrix out(rows_ + rhs.rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < rhs.rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out.at(rows_ + i, cols_ + j) = rhs.at(i, j);
    return out;
}

IntMatrix IntMatrix::top_rows(std::size_t n) const {
    IntMatrix out(n, cols_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    if (v.size() != m.cols())
        throw Error(ErrorCode::validation, "matrix-vector shape mismatch");
    std::vector<Int> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

std::vector<Int> SmithForm::diagonal() const {
    std::size_t n = std::min(s.rows(), s.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.at(i, i);
    return d;
}

std::size_t SmithForm::nonzero_count() const {
    std::size_t n = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++n;
    return n;
}

namespace {

// Row/column elementary operations applied to the working matrix while the
// transforms (and the inverse of u) are dragged along.
struct SnfWork {
    IntMatrix s, u, v, u_inv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
        for (std::size_t i = 0; i < u_inv.rows(); ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= q * row b
    void row_sub(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(a, j) -= q * s.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv.at(i, b) += q * u_inv.at(i, a);
    }
    // col a -= q * col b
    void col_sub(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < s.rows(); ++i) s.at(i, a) -= q * s.at(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(a, j) = -s.at(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv.at(i, a) = -u_inv.at(i, a);
    }
    void row_add(std::size_t a, std::size_t b) {  // row a += row b
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(a, j) += s.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += u.at(b, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv.at(i, b) -= u_inv.at(i, a);
    }
};

// Nearest-integer quotient keeps remainders at most half the pivot.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += 1;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
              IntMatrix::identity(m.rows())};
    const std::size_t limit = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < limit; ++t) {
        // Smallest |entry| pivot in the trailing submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < w.s.rows(); ++i)
            for (std::size_t j = t; j < w.s.cols(); ++j) {
                const Int& x = w.s.at(i, j);
                if (x == 0) continue;
                if (!found || abs(x) < abs(w.s.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < w.s.rows(); ++i) {
                if (w.s.at(i, t) == 0) continue;
                Int q = nearest_quotient(w.s.at(i, t), w.s.at(t, t));
                w.row_sub(i, t, q);
                if (w.s.at(i, t) != 0) {
                    w.swap_rows(t, i);  // strictly smaller pivot
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < w.s.cols(); ++j) {
                if (w.s.at(t, j) == 0) continue;
                Int q = nearest_quotient(w.s.at(t, j), w.s.at(t, t));
                w.col_sub(j, t, q);
                if (w.s.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot must divide the rest of the submatrix for the chain.
            bool divides = true;
            for (std::size_t i = t + 1; i < w.s.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < w.s.cols() && divides; ++j)
                    if (!mpz_divisible_p(w.s.at(i, j).get_mpz_t(), w.s.at(t, t).get_mpz_t())) {
                        w.row_add(t, i);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.s.at(t, t) < 0) w.negate_row(t);
    }

    return SmithForm{std::move(w.u), std::move(w.s), std::move(w.v), std::move(w.u_inv)};
}

ColumnLattice::ColumnLattice(const IntMatrix& generators)
    : ambient_(generators.rows()), snf_(smith_normal_form(generators)) {
    std::size_t n = std::min(snf_.s.rows(), snf_.s.cols());
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (snf_.s.at(i, i) != 0) keep.push_back(i);
    basis_ = IntMatrix(ambient_, keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        std::size_t i = keep[k];
        for (std::size_t r = 0; r < ambient_; ++r)
            basis_.at(r, k) = snf_.s.at(i, i) * snf_.u_inv.at(r, i);
    }
    basis_src_ = std::move(keep);
}

std::optional<std::vector<Int>> ColumnLattice::solve(const std::vector<Int>& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorCode::validation, "lattice query dimension mismatch");
    std::vector<Int> y = mat_vec(snf_.u, v);
    std::size_t n = std::min(snf_.s.rows(), snf_.s.cols());
    std::vector<Int> z(snf_.s.cols());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < n && snf_.s.at(i, i) != 0) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y[i].get_mpz_t(),
                        snf_.s.at(i, i).get_mpz_t());
            if (r != 0) return std::nullopt;
            z[i] = q;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(snf_.v, z);
}

bool ColumnLattice::contains(const std::vector<Int>& v) const {
    return solve(v).has_value();
}

std::optional<std::vector<Int>> ColumnLattice::coordinates(const std::vector<Int>& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorCode::validation, "lattice query dimension mismatch");
    std::vector<Int> y = mat_vec(snf_.u, v);
    std::vector<Int> w(basis_src_.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        bool on_basis = k < basis_src_.size() && basis_src_[k] == i;
        if (on_basis) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y[i].get_mpz_t(),
                        snf_.s.at(i, i).get_mpz_t());
            if (r != 0) return std::nullopt;
            w[k++] = q;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return w;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::size_t n = std::min(f.s.rows(), f.s.cols());
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= n || f.s.at(j, j) == 0) idx.push_back(j);
    return f.v.select_columns(idx);
}

}  // namespace ttchow
