#include "riesz/configuration.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz {

Configuration::Configuration(Eigen::MatrixXd rows) : coords_(std::move(rows)) {
  if (!coords_.allFinite()) {
    throw DomainError("configuration: coordinates must be finite");
  }
}

Configuration::Configuration(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t dim = rows.size() == 0 ? 0 : rows.begin()->size();
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim) throw DomainError("configuration: ragged coordinate rows");
    Eigen::Index c = 0;
    for (double v : row) coords(r, c++) = v;
    ++r;
  }
  *this = Configuration(std::move(coords));
}

double Configuration::distance(std::size_t i, std::size_t j) const {
  return (coords_.row(static_cast<Eigen::Index>(i)) - coords_.row(static_cast<Eigen::Index>(j))).norm();
}

double Configuration::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) best = std::max(best, distance(i, j));
  }
  return best;
}

int Configuration::affine_dimension(double rel_tol) const {
  if (size() < 2) return 0;
  const Eigen::RowVectorXd centroid = coords_.colwise().mean();
  const Eigen::MatrixXd centered = coords_.rowwise() - centroid;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
  const double cutoff = rel_tol * std::max(diameter(), 1e-300);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > cutoff) ++rank;
  }
  return rank;
}

Configuration Configuration::subset(std::span<const std::size_t> indices) const {
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(indices.size()), coords_.cols());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    rows.row(static_cast<Eigen::Index>(r)) = coords_.row(static_cast<Eigen::Index>(indices[r]));
  }
  return Configuration(std::move(rows));
}

Configuration Configuration::scaled(double factor) const {
  return Configuration(coords_ * factor);
}

Configuration read_points(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(value)) {
        throw ParseError("line " + std::to_string(line_no) + ": bad coordinate '" + token + "'");
      }
      row.push_back(value);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " coordinates, got " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  const Eigen::Index dim = rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      coords(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
    }
  }
  return Configuration(std::move(coords));
}

Configuration read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open point file '" + path + "'");
  return read_points(in);
}

void write_points(std::ostream& out, const Configuration& config) {
  char buf[32];
  const auto& coords = config.coordinates();
  for (Eigen::Index r = 0; r < coords.rows(); ++r) {
    for (Eigen::Index c = 0; c < coords.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", coords(r, c));
      if (c > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace riesz
