#include "specden/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace specden {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

SparseSymmetric load_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_matrix_market: cannot open '" + path + "'");
    }
    std::string header;
    if (!std::getline(in, header)) {
        throw std::runtime_error("load_matrix_market: '" + path + "' is empty");
    }
    std::istringstream hs(header);
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lowercase(object) != "matrix") {
        throw std::runtime_error("load_matrix_market: missing %%MatrixMarket matrix banner in '" +
                                 path + "'");
    }
    if (lowercase(format) != "coordinate") {
        throw std::runtime_error("load_matrix_market: only coordinate format is supported, got '" +
                                 format + "'");
    }
    if (lowercase(field) != "real" && lowercase(field) != "integer") {
        throw std::runtime_error("load_matrix_market: only real-valued matrices are supported, got '" +
                                 field + "'");
    }
    if (lowercase(symmetry) != "symmetric") {
        throw std::runtime_error("load_matrix_market: matrix must be declared symmetric, got '" +
                                 symmetry + "'");
    }

    std::string line;
    long rows = 0, cols = 0, entries = 0, parsed = 0;
    bool have_sizes = false;
    std::size_t line_no = 1;
    std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> triplets;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '%') {
            continue;
        }
        std::istringstream ls(line);
        if (!have_sizes) {
            if (!(ls >> rows >> cols >> entries) || rows < 1 || cols < 1 || entries < 0) {
                throw std::runtime_error("load_matrix_market: malformed size line " +
                                         std::to_string(line_no) + " in '" + path + "'");
            }
            if (rows != cols) {
                throw std::runtime_error("load_matrix_market: symmetric matrix must be square");
            }
            have_sizes = true;
            triplets.reserve(static_cast<std::size_t>(2 * entries));
            continue;
        }
        long i = 0, j = 0;
        double v = 0.0;
        if (!(ls >> i >> j >> v)) {
            throw std::runtime_error("load_matrix_market: malformed entry on line " +
                                     std::to_string(line_no) + " in '" + path + "'");
        }
        if (i < 1 || i > rows || j < 1 || j > cols) {
            throw std::runtime_error("load_matrix_market: index out of range on line " +
                                     std::to_string(line_no) + " in '" + path + "'");
        }
        triplets.emplace_back(i - 1, j - 1, v);
        if (i != j) {
            triplets.emplace_back(j - 1, i - 1, v);
        }
        ++parsed;
    }
    if (!have_sizes) {
        throw std::runtime_error("load_matrix_market: missing size line in '" + path + "'");
    }
    if (parsed != entries) {
        throw std::runtime_error("load_matrix_market: expected " + std::to_string(entries) +
                                 " entries in '" + path + "', found " + std::to_string(parsed));
    }
    return SparseSymmetric::from_triplets(rows, triplets);
}

} // namespace specden
