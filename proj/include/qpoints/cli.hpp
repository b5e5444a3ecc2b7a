#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qpoints/components.hpp"

namespace qpoints::cli {

/// Human-readable variety listing: one `P(i_0,...,i_k)` line per component
/// in canonical order, then `dimension = d` and `full space: yes/no`.
std::string render_text(const PointVariety& v);

/// Run the command-line tool on already-split arguments (no program name).
/// A file argument of "-" reads the matrix document from `in`. Returns the
/// process exit code: 0 success, 1 domain error or oracle disagreement,
/// 2 usage or syntax error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qpoints::cli
