#include "quiverhom/representation.hpp"

#include "quiverhom/error.hpp"

namespace quiverhom {

Representation::Representation(Quiver quiver, DimVector dim, FieldSpec field,
                               std::vector<ExactMatrix> maps)
    : Representation(std::make_shared<const Quiver>(std::move(quiver)), std::move(dim), field,
                     std::move(maps)) {}

Representation::Representation(std::shared_ptr<const Quiver> quiver, DimVector dim,
                               FieldSpec field, std::vector<ExactMatrix> maps)
    : quiver_(std::move(quiver)), dim_(std::move(dim)), field_(field), maps_(std::move(maps)) {
    if (dim_.size() != quiver_->vertex_count())
        throw mismatch_error("dimension vector does not match the quiver");
    if (maps_.size() != quiver_->arrow_count())
        throw mismatch_error("expected one matrix per arrow");
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const auto& a = quiver_->arrows()[i];
        const auto& m = maps_[i];
        if (!(m.field() == field_))
            throw mismatch_error("arrow " + std::to_string(a.id) + " matrix is over another field");
        if (m.rows() != static_cast<std::size_t>(dim_[a.target]) ||
            m.cols() != static_cast<std::size_t>(dim_[a.source]))
            throw mismatch_error("arrow " + std::to_string(a.id) + " matrix is " +
                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                 ", expected " + std::to_string(dim_[a.target]) + "x" +
                                 std::to_string(dim_[a.source]));
    }
}

Representation Representation::zero(Quiver quiver, DimVector dim, FieldSpec field) {
    std::vector<ExactMatrix> maps;
    for (const auto& a: quiver.arrows())
        maps.emplace_back(field, static_cast<std::size_t>(dim.entries().at(a.target)),
                          static_cast<std::size_t>(dim.entries().at(a.source)));
    return Representation(std::move(quiver), std::move(dim), field, std::move(maps));
}

Representation Representation::simple(Quiver quiver, std::size_t i, FieldSpec field) {
    auto dim = DimVector::simple(quiver.vertex_count(), i);
    return zero(std::move(quiver), std::move(dim), field);
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!a.same_quiver(b) || !(a.field() == b.field()))
        throw mismatch_error("direct sum of representations over different quivers or fields");
    const auto& q = a.quiver();
    std::vector<ExactMatrix> maps;
    for (std::size_t i = 0; i < q.arrow_count(); ++i) {
        const auto& ma = a.map(i);
        const auto& mb = b.map(i);
        ExactMatrix m(a.field(), ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (std::size_t r = 0; r < ma.rows(); ++r)
            for (std::size_t c = 0; c < ma.cols(); ++c) m.set(r, c, ma.at(r, c));
        for (std::size_t r = 0; r < mb.rows(); ++r)
            for (std::size_t c = 0; c < mb.cols(); ++c) m.set(ma.rows() + r, ma.cols() + c, mb.at(r, c));
        maps.push_back(std::move(m));
    }
    return Representation(a.quiver_ptr(), a.dim() + b.dim(), a.field(), std::move(maps));
}

// ---- the differential ----------------------------------------------------

namespace {

void check_pair(const Representation& r, const Representation& s) {
    if (!r.same_quiver(s)) throw mismatch_error("representations of different quivers");
    if (!(r.field() == s.field())) throw mismatch_error("representations over different fields");
}

template <class Entries, class Accumulate>
void fill_F(const Representation& r, const Representation& s, Entries&& rho, Entries&& sigma,
            Accumulate&& acc) {
    const auto& q = r.quiver();
    const auto& a = r.dim();
    const auto& b = s.dim();
    std::vector<std::size_t> col_offset(q.vertex_count());
    std::size_t off = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        col_offset[i] = off;
        off += static_cast<std::size_t>(a[i] * b[i]);
    }
    std::size_t row_offset = 0;
    for (std::size_t x = 0; x < q.arrow_count(); ++x) {
        const auto& ar = q.arrows()[x];
        const std::size_t as = a[ar.source], at = a[ar.target];
        const std::size_t bs = b[ar.source], bt = b[ar.target];
        for (std::size_t c = 0; c < as; ++c)
            for (std::size_t rr = 0; rr < bt; ++rr) {
                const std::size_t row = row_offset + c * bt + rr;
                // f_t . rho_x
                for (std::size_t k = 0; k < at; ++k)
                    acc(row, col_offset[ar.target] + k * bt + rr, rho(x, k, c), false);
                // - sigma_x . f_s
                for (std::size_t k = 0; k < bs; ++k)
                    acc(row, col_offset[ar.source] + c * bs + k, sigma(x, rr, k), true);
            }
        row_offset += as * bt;
    }
}

} // namespace

ExactMatrix assemble_F(const Representation& r, const Representation& s) {
    check_pair(r, s);
    const auto& q = r.quiver();
    std::size_t rows = 0, cols = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        cols += static_cast<std::size_t>(r.dim()[i] * s.dim()[i]);
    for (const auto& ar: q.arrows())
        rows += static_cast<std::size_t>(r.dim()[ar.source] * s.dim()[ar.target]);

    ExactMatrix F(r.field(), rows, cols);
    if (r.field().is_prime_field()) {
        ModArith mod(r.field().prime());
        auto out = F.residues();
        auto entry = [](const Representation& rep) {
            return [&rep](std::size_t x, std::size_t i, std::size_t j) {
                const auto& m = rep.map(x);
                return m.residues()[i * m.cols() + j];
            };
        };
        fill_F(r, s, entry(r), entry(s),
               [&](std::size_t row, std::size_t col, std::uint64_t v, bool negate) {
                   auto& o = out[row * cols + col];
                   o = negate ? mod.sub(o, v) : mod.add(o, v);
               });
    } else {
        auto out = F.rationals();
        auto entry = [](const Representation& rep) {
            return [&rep](std::size_t x, std::size_t i, std::size_t j) -> const Rational& {
                const auto& m = rep.map(x);
                return m.rationals()[i * m.cols() + j];
            };
        };
        fill_F(r, s, entry(r), entry(s),
               [&](std::size_t row, std::size_t col, const Rational& v, bool negate) {
                   if (negate)
                       out[row * cols + col] -= v;
                   else
                       out[row * cols + col] += v;
               });
    }
    return F;
}

HomReport hom_report(const Representation& r, const Representation& s) {
    auto F = assemble_F(r, s);
    HomReport rep;
    rep.f_rows = F.rows();
    rep.f_cols = F.cols();
    rep.f_rank = rank(F);
    rep.hom = rep.f_cols - rep.f_rank;
    rep.euler = euler_form(r.quiver(), r.dim(), s.dim());
    const std::int64_t ext1 = static_cast<std::int64_t>(rep.hom) - rep.euler;
    if (ext1 < 0) throw internal_error("negative ext1 from the Euler form");
    rep.ext1 = static_cast<std::uint64_t>(ext1);
    if (rep.ext1 != rep.f_rows - rep.f_rank)
        throw internal_error("ext1 disagrees with the cokernel dimension of F");
    rep.max_rank = rep.f_rank == std::min(rep.f_rows, rep.f_cols);
    return rep;
}

Representation dual_rep(const Representation& r) {
    std::vector<ExactMatrix> maps;
    maps.reserve(r.maps().size());
    for (const auto& m: r.maps()) maps.push_back(m.transpose());
    return Representation(dual_quiver(r.quiver()), r.dim(), r.field(), std::move(maps));
}

// ---- GL(alpha) -----------------------------------------------------------

GlElement::GlElement(std::vector<ExactMatrix> blocks): blocks_(std::move(blocks)) {
    for (const auto& b: blocks_) {
        if (b.rows() != b.cols()) throw precondition_error("GL block is not square");
        if (!is_invertible(b)) throw precondition_error("GL block is not invertible");
    }
}

GlElement GlElement::identity(const DimVector& dim, const FieldSpec& field) {
    std::vector<ExactMatrix> blocks;
    for (auto d: dim.entries()) blocks.push_back(ExactMatrix::identity(field, static_cast<std::size_t>(d)));
    return GlElement(std::move(blocks));
}

GlElement GlElement::random(const DimVector& dim, const FieldSpec& field, Rng& rng) {
    std::vector<ExactMatrix> blocks;
    RandomMatrixOptions opts;
    opts.rational_bound = 9;
    for (auto d: dim.entries()) {
        const auto n = static_cast<std::size_t>(d);
        for (;;) {
            auto m = random_matrix(n, n, field, rng, opts);
            if (is_invertible(m)) {
                blocks.push_back(std::move(m));
                break;
            }
        }
    }
    return GlElement(std::move(blocks));
}

GlElement GlElement::operator*(const GlElement& other) const {
    if (blocks_.size() != other.blocks_.size()) throw mismatch_error("GL elements of different size");
    std::vector<ExactMatrix> out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(blocks_[i] * other.blocks_[i]);
    return GlElement(std::move(out));
}

Representation gl_act(const GlElement& g, const Representation& r) {
    const auto& q = r.quiver();
    if (g.blocks().size() != q.vertex_count()) throw mismatch_error("GL element has wrong vertex count");
    std::vector<ExactMatrix> inv;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        if (g.block(i).rows() != static_cast<std::size_t>(r.dim()[i]))
            throw mismatch_error("GL block size does not match the dimension vector");
        if (!(g.block(i).field() == r.field())) throw mismatch_error("GL element over another field");
        inv.push_back(inverse(g.block(i)));
    }
    std::vector<ExactMatrix> maps;
    for (std::size_t x = 0; x < q.arrow_count(); ++x) {
        const auto& a = q.arrows()[x];
        maps.push_back(g.block(a.target) * r.map(x) * inv[a.source]);
    }
    return Representation(r.quiver_ptr(), r.dim(), r.field(), std::move(maps));
}

// ---- exceptionality ------------------------------------------------------

bool is_exceptional(const Representation& r) {
    if (r.dim().is_zero()) return false;
    auto rep = hom_report(r, r);
    return rep.hom == 1 && rep.ext1 == 0;
}

bool is_ext_nontrivial_couple(const Representation& r, const Representation& s) {
    check_pair(r, s);
    if (!is_exceptional(r) || !is_exceptional(s))
        throw precondition_error("Ext-nontrivial couples are formed by exceptional representations");
    return hom_report(r, s).ext1 > 0 && hom_report(s, r).ext1 > 0;
}

} // namespace quiverhom
