#ifndef RIESZ_CONFIGURATION_HPP
#define RIESZ_CONFIGURATION_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace riesz {

/// An ordered list of k points in R^n, stored one point per row.
///
/// Coordinates must be finite. Distinctness is checked lazily by
/// kernel_matrix(), since the search code builds configurations that may
/// momentarily contain coincident points.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(Eigen::MatrixXd rows);
  Configuration(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const noexcept { return static_cast<std::size_t>(coords_.rows()); }
  bool empty() const noexcept { return coords_.rows() == 0; }
  int dimension() const noexcept { return static_cast<int>(coords_.cols()); }

  Eigen::RowVectorXd point(std::size_t i) const { return coords_.row(static_cast<Eigen::Index>(i)); }
  const Eigen::MatrixXd& coordinates() const noexcept { return coords_; }

  double distance(std::size_t i, std::size_t j) const;
  double diameter() const;

  /// Dimension of the affine hull, with rank tolerance relative to the diameter.
  int affine_dimension(double rel_tol = 1e-12) const;

  Configuration subset(std::span<const std::size_t> indices) const;
  Configuration scaled(double factor) const;

private:
  Eigen::MatrixXd coords_;
};

/// Reads the plain-text point format: one point per line, whitespace-separated
/// coordinates, '#' starts a comment, blank lines are ignored. Every point must
/// have the same number of coordinates.
Configuration read_points(std::istream& in);
Configuration read_points_file(const std::string& path);

/// Writes the same format with 17 significant digits per coordinate.
void write_points(std::ostream& out, const Configuration& config);

}  // namespace riesz

#endif  // RIESZ_CONFIGURATION_HPP
