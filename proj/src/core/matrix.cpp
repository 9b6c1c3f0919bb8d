#include "polyinv/matrix.hpp"

#include <sstream>

namespace polyinv {

ScalarMatrix to_scalar(const RationalMatrix& m) {
  std::vector<Scalar> data(m.data().begin(), m.data().end());
  return ScalarMatrix(m.rows(), m.cols(), std::move(data));
}

RationalMatrix parse_rational_matrix_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Rational> data;
  std::size_t rows = 0, cols = 0;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    RationalVector row = parse_rational_vector(line);
    if (rows == 0) cols = row.size();
    else if (row.size() != cols)
      throw Error(ErrorCode::Dimension, "matrix CSV row " + std::to_string(rows + 1) + " has " +
                                            std::to_string(row.size()) + " entries, expected " +
                                            std::to_string(cols));
    data.insert(data.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::Parse, "empty matrix CSV");
  return RationalMatrix(rows, cols, std::move(data));
}

}  // namespace polyinv
