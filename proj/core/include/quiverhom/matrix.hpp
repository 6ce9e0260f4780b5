#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quiverhom/field.hpp"

namespace quiverhom {

using Rational = mpq_class;
using Rng = std::mt19937_64;

/// Dense row-major matrix with exact entries over a FieldSpec.
///
/// Prime-field matrices store canonical residues; rational matrices store
/// canonicalized mpq values. 0 x n and n x 0 shapes are valid.
class ExactMatrix {
public:
    ExactMatrix(): ExactMatrix(FieldSpec{}, 0, 0) {}
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(FieldSpec field, std::size_t n);
    /// Entries given row-major; values are reduced into the field.
    static ExactMatrix from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                     std::span<const std::int64_t> entries);
    static ExactMatrix from_rows(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    /// Entry as a rational; prime-field entries are returned as integers in [0, p).
    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    void set(std::size_t r, std::size_t c, std::int64_t value);

    /// Raw storage, exactly one of which is in use.
    std::span<std::uint64_t> residues() { return residues_; }
    std::span<const std::uint64_t> residues() const { return residues_; }
    std::span<Rational> rationals() { return rationals_; }
    std::span<const Rational> rationals() const { return rationals_; }

    bool is_zero() const;
    ExactMatrix transpose() const;

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    bool operator==(const ExactMatrix& other) const;

    std::string to_string() const;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> residues_;
    std::vector<Rational> rationals_;
};

/// Rank by Gaussian elimination mod p, or fraction-free (Bareiss) elimination over Q.
std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel, as cols x 1 column vectors; cols - rank(m) of them.
std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m);

/// rank(m) == min(rows, cols).
bool is_max_rank(const ExactMatrix& m);

/// Inverse of a square matrix; throws precondition_error when singular.
ExactMatrix inverse(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);

struct RandomMatrixOptions {
    std::int64_t rational_bound = 1'000'000; // rational entries are integers in [-B, B]
};

/// I.i.d. uniform entries: all of F_p, or integers in [-B, B] over Q.
ExactMatrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field, Rng& rng,
                          const RandomMatrixOptions& options = {});

} // namespace quiverhom
