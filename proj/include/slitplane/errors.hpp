#pragma once

#include <stdexcept>

namespace slitplane {

// Base of all arithmetic contract violations in this library.
struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invert: the t^0 coefficient is not a nonzero scalar rational.
struct NonScalarUnit : SeriesError {
    using SeriesError::SeriesError;
};

// sqrt: the t^0 coefficient is not the scalar 1.
struct BadConstantTerm : SeriesError {
    using SeriesError::SeriesError;
};

// A coefficient required to vanish (t^0 of a composition argument, of a
// t-antiderivative input, or below a downward t-shift) is nonzero.
struct NonzeroConstant : SeriesError {
    using SeriesError::SeriesError;
};

// subst_monomial: exponent matrix of the images is not unimodular.
struct NonInvertibleSubstitution : SeriesError {
    using SeriesError::SeriesError;
};

// coeff: index outside 0..order.
struct OrderExceeded : SeriesError {
    using SeriesError::SeriesError;
};

// Invalid argument range (closed forms, enumerator limits, CLI ranges).
struct DomainError : SeriesError {
    using SeriesError::SeriesError;
};

// CLI series catalog lookup failed.
struct UnknownSeries : SeriesError {
    using SeriesError::SeriesError;
};

// Exact Laurent division left a remainder.
struct ExactDivisionError : SeriesError {
    using SeriesError::SeriesError;
};

} // namespace slitplane
