#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quiverhom {

struct quiverhom_error: std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed quiver source text. Line and column are 1-based.
struct parse_error: quiverhom_error {
    enum class kind { syntax, undeclared_vertex, duplicate_vertex, empty_vertex_set };

    parse_error(kind k, std::size_t line, std::size_t column, const std::string& what);

    kind error_kind;
    std::size_t line;
    std::size_t column;
};

// Malformed JSON or CSV input.
struct format_error: quiverhom_error {
    using quiverhom_error::quiverhom_error;
};

// Vectors, matrices or representations that do not belong together.
struct mismatch_error: quiverhom_error {
    using quiverhom_error::quiverhom_error;
};

// An operation was called outside its documented precondition.
struct precondition_error: quiverhom_error {
    using quiverhom_error::quiverhom_error;
};

// The graph shape is not one an operation supports (e.g. roots of a cyclic quiver).
struct unsupported_shape_error: quiverhom_error {
    using quiverhom_error::quiverhom_error;
};

// A computed quantity violated an identity that must hold exactly; signals a bug.
struct internal_error: quiverhom_error {
    using quiverhom_error::quiverhom_error;
};

} // namespace quiverhom
