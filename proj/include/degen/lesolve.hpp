#ifndef DEGEN_LESOLVE_HPP
#define DEGEN_LESOLVE_HPP

// Constraint solver for the long exact cohomology sequence of a short
// exact sequence 0 -> A -> B -> C -> 0.
//
// Writing s_i, t_i for the ranks of H^i(A) -> H^i(B) and H^i(B) -> H^i(C)
// and r_i for the rank of the connecting map H^i(C) -> H^{i+1}(A),
// exactness says precisely
//
//     a_i = r_{i-1} + s_i,   b_i = s_i + t_i,   c_i = t_i + r_i,
//
// with r_{-1} = r_n = 0 and everything >= 0.  Given partial knowledge of
// the three dimension vectors the solver sweeps the connecting ranks and
// reports, per entry, the exact interval of values attained over all
// nonnegative solutions.  Chi additivity is built into the
// parametrization, so it never needs a separate check.

#include <degen/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace degen {

// One partially known dimension: a closed interval [lo, hi], where an
// absent hi means "no upper bound known".
struct PartialDim {
    Int lo = 0;
    std::optional<Int> hi;

    static PartialDim known(Int v) { return {v, v}; }
    static PartialDim unknown() { return {Int(0), std::nullopt}; }
    static PartialDim between(Int lo, Int hi) { return {std::move(lo), std::move(hi)}; }

    bool is_point() const { return hi.has_value() && *hi == lo; }
    std::string str() const {
        if (is_point()) return int_str(lo);
        return "[" + int_str(lo) + "," + (hi ? int_str(*hi) : std::string("?")) + "]";
    }
};

using PartialVec = std::vector<PartialDim>;

PartialVec known_vec(const std::vector<Int>& v);
PartialVec unknown_vec(size_t n);
std::string partial_str(const PartialVec& v);

// Entrywise sum; correlations between entries are not representable, so
// the result may be wider than the true range of the sum.
PartialVec partial_sum(const PartialVec& x, const PartialVec& y);

// True when every entry is a single value; `points` then extracts them.
bool all_points(const PartialVec& v);
std::vector<Int> points(const PartialVec& v);

struct SESProblem {
    PartialVec sub, mid, quot;  // 0 -> sub -> mid -> quot -> 0
};

struct SESSolution {
    bool feasible = false;
    // Entry i is the exact set {v : some nonnegative rank solution has
    // dimension v at degree i}, collapsed to an interval.
    PartialVec sub, mid, quot;
};

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// The data leave a connecting rank without any finite bound, or the rank
// sweep would be absurdly large.  Not a math failure; the input is too
// loose to enumerate.
struct SolverLimit : SolveError {
    using SolveError::SolveError;
};

SESSolution solve_ses(const SESProblem& p);

}  // namespace degen

#endif
