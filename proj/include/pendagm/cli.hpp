#pragma once

#include <iosfwd>

namespace pendagm::cli {

enum class Format { text, csv, json };
enum class AngleUnit { degrees, radians };

/// Output controls shared by every subcommand. precision is significant
/// digits (1..17) for text/CSV rendering; JSON always carries full
/// shortest-round-trip doubles. The angle unit changes how amplitude inputs
/// are read and how amplitude outputs are labelled, never the computation.
struct OutputSpec {
    Format format = Format::text;
    AngleUnit unit = AngleUnit::degrees;
    int precision = 12;
};

/// Parses argv and executes one subcommand (period, bounds, threshold,
/// renorm, table), writing the report to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 2 usage or domain error, 3 numerical
/// non-convergence.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pendagm::cli
