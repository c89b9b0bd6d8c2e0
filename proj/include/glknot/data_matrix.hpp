#ifndef GLKNOT_DATA_MATRIX_HPP
#define GLKNOT_DATA_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "glknot/errors.hpp"

namespace glknot {

/// An n x p observation matrix (rows = observations, columns = variables).
/// Requires n >= 3, p >= 2 and all entries finite.
struct DataMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> column_names;  // empty when no header was given

  Eigen::Index n() const { return values.rows(); }
  Eigen::Index p() const { return values.cols(); }
};

/// Validating constructor; throws dimension_error on bad shape or
/// non-finite entries.
DataMatrix make_data_matrix(Eigen::MatrixXd values,
                            std::vector<std::string> column_names = {});

/// Read a rectangular numeric CSV (comma separator, '.' decimal point,
/// optional single header row).  Ragged rows and non-numeric cells are
/// rejected with the offending coordinates.
DataMatrix load_csv(const std::string& path, bool has_header);

/// Center each column to mean 0 and scale to unit standard deviation
/// using the population convention (divide by n).  Idempotent.
DataMatrix standardize(const DataMatrix& d);

/// Append q columns of i.i.d. standard Gaussian noise, reproducible
/// from the seed.  The original p columns are preserved bitwise.
DataMatrix augment_noise(const DataMatrix& d, Eigen::Index q, std::uint64_t rng_seed);

/// Sample m rows without replacement, deterministic given the seed.
/// Requires 3 <= m <= n.
DataMatrix subsample_rows(const DataMatrix& d, Eigen::Index m, std::uint64_t rng_seed);

}  // namespace glknot

#endif
