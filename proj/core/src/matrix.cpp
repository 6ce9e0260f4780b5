#include "quiverhom/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "quiverhom/error.hpp"

namespace quiverhom {

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (field_.is_rationals())
        rationals_.assign(rows * cols, Rational(0));
    else
        residues_.assign(rows * cols, 0);
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, std::int64_t{1});
    return m;
}

ExactMatrix ExactMatrix::from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                       std::span<const std::int64_t> entries) {
    if (entries.size() != rows * cols) throw mismatch_error("entry count does not match shape");
    ExactMatrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entries[r * cols + c]);
    return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<std::int64_t> flat;
    for (const auto& r: rows) {
        if (r.size() != cols) throw mismatch_error("ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_integers(field, rows.size(), cols, flat);
}

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw precondition_error("matrix index out of range");
    if (field_.is_rationals()) return rationals_[r * cols_ + c];
    mpz_class v;
    v = static_cast<unsigned long>(residues_[r * cols_ + c]);
    return Rational(v);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_ || c >= cols_) throw precondition_error("matrix index out of range");
    if (field_.is_rationals()) {
        rationals_[r * cols_ + c] = value;
        rationals_[r * cols_ + c].canonicalize();
        return;
    }
    const mpz_class p = static_cast<unsigned long>(field_.prime());
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw precondition_error("denominator divisible by the field characteristic");
    ModArith F(field_.prime());
    residues_[r * cols_ + c] = F.mul(num.get_ui(), F.inv(den.get_ui()));
}

void ExactMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    if (r >= rows_ || c >= cols_) throw precondition_error("matrix index out of range");
    if (field_.is_rationals())
        rationals_[r * cols_ + c] = Rational(static_cast<long>(value));
    else
        residues_[r * cols_ + c] = ModArith(field_.prime()).from_signed(value);
}

bool ExactMatrix::is_zero() const {
    if (field_.is_rationals())
        return std::all_of(rationals_.begin(), rationals_.end(), [](const Rational& x) { return x == 0; });
    return std::all_of(residues_.begin(), residues_.end(), [](std::uint64_t x) { return x == 0; });
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (field_.is_rationals())
                t.rationals_[c * rows_ + r] = rationals_[r * cols_ + c];
            else
                t.residues_[c * rows_ + r] = residues_[r * cols_ + c];
        }
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (!(field_ == rhs.field_)) throw mismatch_error("matrices over different fields");
    if (cols_ != rhs.rows_) throw mismatch_error("inner dimensions do not agree");
    ExactMatrix out(field_, rows_, rhs.cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = rationals_[i * cols_ + k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out.rationals_[i * rhs.cols_ + j] += a * rhs.rationals_[k * rhs.cols_ + j];
            }
        return out;
    }
    ModArith F(field_.prime());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = residues_[i * cols_ + k];
            if (a == 0) continue;
            auto m = F.multiplier(a);
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                auto& o = out.residues_[i * rhs.cols_ + j];
                o = F.add(o, F.mul(rhs.residues_[k * rhs.cols_ + j], m));
            }
        }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw mismatch_error("matrix shapes or fields differ");
    ExactMatrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < rationals_.size(); ++i)
            out.rationals_[i] = rationals_[i] - rhs.rationals_[i];
    } else {
        ModArith F(field_.prime());
        for (std::size_t i = 0; i < residues_.size(); ++i)
            out.residues_[i] = F.sub(residues_[i], rhs.residues_[i]);
    }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           residues_ == other.residues_ && rationals_ == other.rationals_;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---- elimination kernels -------------------------------------------------

namespace {

std::size_t rank_mod(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                     const ModArith& F) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            std::swap_ranges(a.begin() + piv * cols + c, a.begin() + piv * cols + cols,
                             a.begin() + r * cols + c);
        const std::uint64_t inv = F.inv(a[r * cols + c]);
        const std::uint64_t* prow = &a[r * cols];
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t* row = &a[i * cols];
            if (row[c] == 0) continue;
            const auto m = F.multiplier(F.mul(row[c], inv));
            row[c] = 0;
            for (std::size_t k = c + 1; k < cols; ++k) row[k] = F.sub(row[k], F.mul(prow[k], m));
        }
        ++r;
    }
    return r;
}

// Fraction-free elimination on an integer matrix; every intermediate entry is
// a minor of the input, so the divisions by the previous pivot are exact.
std::size_t rank_bareiss(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = c; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
        const mpz_class& p = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpz_class lead = a[i * cols + c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                mpz_class v = a[i * cols + k] * p - lead * a[r * cols + k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * cols + k] = std::move(v);
            }
            a[i * cols + c] = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

std::vector<mpz_class> integer_rows(const ExactMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    auto q = m.rationals();
    std::vector<mpz_class> out(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q[r * cols + c].get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& x = q[r * cols + c];
            out[r * cols + c] = x.get_num() * (l / x.get_den());
        }
    }
    return out;
}

struct ModOps {
    using T = std::uint64_t;
    ModArith F;
    static bool is_zero(const T& x) { return x == 0; }
    T inv(const T& x) const { return F.inv(x); }
    T mul(const T& a, const T& b) const { return F.mul(a, b); }
    T sub(const T& a, const T& b) const { return F.sub(a, b); }
    T neg(const T& a) const { return F.neg(a); }
    T one() const { return 1; }
    T zero() const { return 0; }
};

struct RatOps {
    using T = Rational;
    static bool is_zero(const T& x) { return x == 0; }
    T inv(const T& x) const { return T(1) / x; }
    T mul(const T& a, const T& b) const { return a * b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T neg(const T& a) const { return -a; }
    T one() const { return T(1); }
    T zero() const { return T(0); }
};

// In-place reduced row echelon form; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref(std::vector<typename Ops::T>& a, std::size_t rows, std::size_t cols,
                              const Ops& ops, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && Ops::is_zero(a[piv * cols + c])) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
        auto inv = ops.inv(a[r * cols + c]);
        for (std::size_t k = 0; k < cols; ++k) a[r * cols + k] = ops.mul(a[r * cols + k], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || Ops::is_zero(a[i * cols + c])) continue;
            auto f = a[i * cols + c];
            for (std::size_t k = 0; k < cols; ++k)
                a[i * cols + k] = ops.sub(a[i * cols + k], ops.mul(f, a[r * cols + k]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Ops>
std::vector<std::vector<typename Ops::T>> kernel_generic(std::vector<typename Ops::T> a,
                                                         std::size_t rows, std::size_t cols,
                                                         const Ops& ops) {
    auto pivots = rref(a, rows, cols, ops, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p: pivots) is_pivot[p] = true;
    std::vector<std::vector<typename Ops::T>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Ops::T> v(cols, ops.zero());
        v[free] = ops.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = ops.neg(a[i * cols + free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class Ops>
bool inverse_generic(const std::vector<typename Ops::T>& m, std::size_t n, const Ops& ops,
                     std::vector<typename Ops::T>& out) {
    const std::size_t w = 2 * n;
    std::vector<typename Ops::T> a(n * w, ops.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * w + j] = m[i * n + j];
        a[i * w + n + i] = ops.one();
    }
    auto pivots = rref(a, n, w, ops, n);
    if (pivots.size() != n) return false;
    out.assign(n * n, ops.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a[i * w + n + j];
    return true;
}

} // namespace

std::size_t rank(const ExactMatrix& m) {
    if (m.empty()) return 0;
    if (m.field().is_rationals()) return rank_bareiss(integer_rows(m), m.rows(), m.cols());
    auto res = m.residues();
    std::vector<std::uint64_t> a(res.begin(), res.end());
    if (m.rows() > m.cols()) return rank(m.transpose());
    return rank_mod(std::move(a), m.rows(), m.cols(), ModArith(m.field().prime()));
}

std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m) {
    std::vector<ExactMatrix> out;
    const std::size_t cols = m.cols();
    auto emit = [&](const auto& basis, auto store) {
        for (const auto& v: basis) {
            ExactMatrix col(m.field(), cols, 1);
            for (std::size_t i = 0; i < cols; ++i) store(col, i, v[i]);
            out.push_back(std::move(col));
        }
    };
    if (m.field().is_rationals()) {
        auto q = m.rationals();
        emit(kernel_generic(std::vector<Rational>(q.begin(), q.end()), m.rows(), cols, RatOps{}),
             [](ExactMatrix& c, std::size_t i, const Rational& x) { c.rationals()[i] = x; });
    } else {
        auto r = m.residues();
        emit(kernel_generic(std::vector<std::uint64_t>(r.begin(), r.end()), m.rows(), cols,
                            ModOps{ModArith(m.field().prime())}),
             [](ExactMatrix& c, std::size_t i, std::uint64_t x) { c.residues()[i] = x; });
    }
    return out;
}

bool is_max_rank(const ExactMatrix& m) { return rank(m) == std::min(m.rows(), m.cols()); }

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix out(m.field(), n, n);
    bool ok = false;
    if (m.field().is_rationals()) {
        std::vector<Rational> in(m.rationals().begin(), m.rationals().end()), inv;
        ok = inverse_generic(in, n, RatOps{}, inv);
        if (ok) std::copy(inv.begin(), inv.end(), out.rationals().begin());
    } else {
        std::vector<std::uint64_t> in(m.residues().begin(), m.residues().end()), inv;
        ok = inverse_generic(in, n, ModOps{ModArith(m.field().prime())}, inv);
        if (ok) std::copy(inv.begin(), inv.end(), out.residues().begin());
    }
    if (!ok) throw precondition_error("matrix is singular");
    return out;
}

bool is_invertible(const ExactMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field, Rng& rng,
                          const RandomMatrixOptions& options) {
    ExactMatrix m(field, rows, cols);
    if (field.is_rationals()) {
        std::uniform_int_distribution<std::int64_t> dist(-options.rational_bound, options.rational_bound);
        for (auto& x: m.rationals()) x = Rational(static_cast<long>(dist(rng)));
    } else {
        std::uniform_int_distribution<std::uint64_t> dist(0, field.prime() - 1);
        for (auto& x: m.residues()) x = dist(rng);
    }
    return m;
}

} // namespace quiverhom
