#ifndef MODCONG_SEQUENCES_HPP
#define MODCONG_SEQUENCES_HPP

#include <string>
#include <utility>

#include "modcong/powerseries.hpp"

namespace modcong {

// Named integer sequence with an index offset: values[i] is the member at
// index offset + i.  Reads below the offset (including negative indices)
// give 0; reads past the table end throw PrecisionExceeded.
struct SequenceTable {
    std::string name;
    long long offset = 0;
    std::vector<Int> values;

    const Int& at(long long index) const;
    long long end_index() const {
        return offset + static_cast<long long>(values.size());
    }
};

// C(2n,n)^2.
Int central_binomial_sq(unsigned long n);

// 1 + 4t + 36t^2 + 400t^3 + ... : the central-binomial-square generating
// series, the common ingredient of every table below.
PowerSeries hypergeom_series(std::size_t terms);

// Coefficients of the k-th power of hypergeom_series.
SequenceTable A_k_table(unsigned k, std::size_t length);

// Coefficient tables of (1-16t)^floor((n-1)/2) t^(2n-1) F^(6n-1)  and
// (1-16t)^floor((n-1)/2) t^(2n-2) F^(6n-3).
std::pair<SequenceTable, SequenceTable> B_C_tables(unsigned n, std::size_t length);

// D3(n) = A3(n-1) - 16 A3(n-2), with A3 = 0 below index 0.
SequenceTable D3_table(std::size_t length);

// B(n) = sum_k C(n+k,k) C(n,k)^2 evaluated from the definition.
Int apery_value(unsigned long n);

// Table of B(n) for 0 <= n < length.  Large tables are produced by the
// classical three-term recurrence n^2 B(n) = (11n^2-11n+3) B(n-1)
// + (n-1)^2 B(n-2) and cross-checked against the definitional sum at a
// prefix and at spot indices, so the recurrence never silently drifts.
SequenceTable apery_B_table(std::size_t length);

// Sum of cubes of divisors; sigma3_half(k) = sigma3(k/2) for even k, else 0.
Int sigma3(unsigned long k);
Int sigma3_half(unsigned long k);

// View the coefficients of a power series as a table (offset 0).
SequenceTable series_to_table(const PowerSeries& f, std::string name);

} // namespace modcong

#endif
