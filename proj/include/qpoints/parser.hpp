#pragma once

#include <map>
#include <string>
#include <utility>

#include "qpoints/components.hpp"
#include "qpoints/matrix.hpp"
#include "qpoints/scalar.hpp"

namespace qpoints {

/// Parse a scalar expression. Grammar:
///
///   expr     := term (('*' | '/') term)*
///   term     := atom ('^' exponent)?
///   exponent := signed-integer | '(' signed-integer '/' natural ')'
///   atom     := natural | identifier | 'i' | 'zeta(' natural ')'
///             | '-' atom | '(' expr ')'
///
/// 'i' is the fourth root of unity, 'zeta(n)' the primitive n-th root
/// e^(2*pi*i/n); '^' binds tighter than '*' and '/'. The literal 0 is
/// rejected with ZeroScalarError, everything else that fails with a
/// SyntaxError carrying the offending offset.
UnitMonomial parse_scalar(const std::string& text);

/// Deterministic text form that parse_scalar maps back to the same value:
/// phase first ("-1" or "zeta(d)^k"), then generators, symbols in
/// lexicographic order followed by primes ascending, joined with '*'.
std::string format_scalar(const UnitMonomial& x);

/// The textual form of a matrix: size plus upper-triangle entry expressions.
struct MatrixDocument {
    int n = 0;
    std::map<std::pair<int, int>, std::string> entries;
};

/// First parsing stage: split a matrix file into its document structure.
/// Format, line by line: `n = <natural>` first, then one `q <i> <j> = <expr>`
/// per upper-triangle entry (i < j); '#' starts a comment, blank lines are
/// ignored.
MatrixDocument parse_matrix_document(const std::string& text);

/// Second stage: parse every entry and assemble the matrix, with q[j][i]
/// and the diagonal filled in by construction. Throws MissingEntryError /
/// DuplicateEntryError / IndexOutOfRangeError / SyntaxError / ZeroScalarError.
QuantumMatrix matrix_from_document(const MatrixDocument& doc);

/// Both stages.
QuantumMatrix parse_matrix_file(const std::string& text);

/// Canonical matrix file for q; parse_matrix_file round-trips it.
std::string format_matrix_file(const QuantumMatrix& q);

/// Stable JSON rendering:
/// {"n": ..., "components": [[...], ...], "dimension": ..., "is_full_space": ...}
/// with components in the variety's canonical order.
std::string variety_to_json(const PointVariety& v);

}  // namespace qpoints
