#pragma once

#include <stdexcept>
#include <string>

namespace bfi {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent inputs: files, schemas, dimensions, domains.
class DataError : public Error {
public:
    using Error::Error;
};

/// Numerical failures: non-PD systems, non-convergence, non-finite values.
class NumericError : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public NumericError {
public:
    explicit NotPositiveDefinite(int pivot)
        : NumericError("matrix not positive definite (pivot " + std::to_string(pivot) +
                       "); the log-posterior may not have a unique maximum — "
                       "consider a stronger prior precision"),
          pivot_index(pivot) {}
    int pivot_index;
};

class DimensionMismatch : public DataError {
public:
    DimensionMismatch(const std::string& context, int expected, int got)
        : DataError(context + ": expected dimension " + std::to_string(expected) + ", got " +
                    std::to_string(got)) {}
};

class NonFiniteLogPosterior : public NumericError {
public:
    NonFiniteLogPosterior() : NumericError("log-posterior is not finite; data contains degenerate values") {}
};

class CenterNotConverged : public NumericError {
public:
    explicit CenterNotConverged(int center)
        : NumericError("local fit for center " + std::to_string(center) +
                       " did not converge; refusing to aggregate"),
          center_index(center) {}
    int center_index;
};

class SchemaMismatch : public DataError {
public:
    using DataError::DataError;
};

class AggregateNotPositiveDefinite : public NumericError {
public:
    explicit AggregateNotPositiveDefinite(const std::string& detail)
        : NumericError("aggregate curvature not positive definite (" + detail +
                       "); priors are likely incompatible") {}
};

class BlockNotPositiveDefinite : public NumericError {
public:
    explicit BlockNotPositiveDefinite(int center)
        : NumericError("nuisance curvature block for center " + std::to_string(center) +
                       " not positive definite"),
          center_index(center) {}
    int center_index;
};

class InvalidAlpha : public DataError {
public:
    explicit InvalidAlpha(double alpha)
        : DataError("alpha must lie in (0, 0.5), got " + std::to_string(alpha)) {}
};

class InsufficientCenters : public DataError {
public:
    explicit InsufficientCenters(int got)
        : DataError("compatibility check needs at least 2 centers, got " + std::to_string(got)) {}
};

class UnknownVersion : public DataError {
public:
    explicit UnknownVersion(const std::string& version)
        : DataError("unrecognized payload format_version \"" + version + "\"") {}
};

class MalformedField : public DataError {
public:
    explicit MalformedField(const std::string& path, const std::string& detail = "")
        : DataError("malformed payload field " + path + (detail.empty() ? "" : ": " + detail)),
          field_path(path) {}
    std::string field_path;
};

class DimensionInconsistency : public DataError {
public:
    explicit DimensionInconsistency(const std::string& detail)
        : DataError("payload dimensions inconsistent: " + detail) {}
};

class ZeroVariance : public DataError {
public:
    explicit ZeroVariance(const std::string& covariate)
        : DataError("covariate \"" + covariate + "\" has zero pooled variance; cannot standardize"),
          covariate_name(covariate) {}
    std::string covariate_name;
};

class MissingColumn : public DataError {
public:
    explicit MissingColumn(const std::string& column)
        : DataError("required column \"" + column + "\" not found in CSV header"), column_name(column) {}
    std::string column_name;
};

class UnparseableCell : public DataError {
public:
    UnparseableCell(long row, const std::string& column, const std::string& value)
        : DataError("cannot parse cell at row " + std::to_string(row) + ", column \"" + column +
                    "\": \"" + value + "\""),
          row_index(row), column_name(column) {}
    long row_index;
    std::string column_name;
};

class EmptyFile : public DataError {
public:
    explicit EmptyFile(const std::string& path) : DataError("file is empty: " + path) {}
};

class PredictorMissing : public DataError {
public:
    PredictorMissing(long row, const std::string& predictor)
        : DataError("imputation predictor \"" + predictor + "\" itself missing at row " +
                    std::to_string(row)) {}
};

class ModelSchemaMismatch : public DataError {
public:
    using DataError::DataError;
};

}  // namespace bfi
