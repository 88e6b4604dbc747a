#ifndef DEGEN_COMMANDS_HPP
#define DEGEN_COMMANDS_HPP

// One entry point per CLI subcommand.  Each takes a plain argument struct
// (already range-checked only where the library cannot) and returns a
// Report; bad argument values throw std::domain_error or
// std::invalid_argument, which the CLI maps to a usage error.

#include <degen/models.hpp>
#include <degen/report.hpp>
#include <degen/typeiv.hpp>

#include <array>
#include <optional>

namespace degen {

struct ClassifyArgs {
    long max_a = 64;
    long max_e = 16;
    long max_b = 128;
    bool audit = false;
};
Report run_classify(const ClassifyArgs& args);

struct TableArgs {
    ModelKind kind = ModelKind::II;
    long d1 = 5;
    bool audit = true;  // the table is the main audit surface
};
Report run_table(const TableArgs& args);

struct CohArgs {
    bool threefold = false;
    long e = 0;
    long a = 0, b = 0;       // surface class; the pi^* part on a threefold
    long m = 0;              // E coefficient (threefold only)
    long d0a = 0, d0b = 0;   // bundle twisting class (threefold only)
    bool audit = false;
};
Report run_coh(const CohArgs& args);

struct CoverArgs {
    ModelKind kind = ModelKind::II;
    long d1 = 5;
    std::optional<std::array<long, 3>> f;  // (m, a, b); absent means O(B)
    bool audit = false;
};
Report run_cover(const CoverArgs& args);

struct TypeivArgs {
    long d = 12;
    bool audit = false;
};
Report run_typeiv(const TypeivArgs& args);

struct InvariantsArgs {
    long d1 = 5;
    bool audit = false;
};
Report run_invariants(const InvariantsArgs& args);

}  // namespace degen

#endif
