#include "greenbound/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "greenbound/error.hpp"

namespace greenbound {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
        throw InvalidInput("matrix JSON must be an object with \"n\" and \"entries\"");
    }
    const json& n_field = doc.at("n");
    if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
        throw InvalidInput("\"n\" must be a positive integer");
    }
    const auto n = static_cast<Eigen::Index>(n_field.get<long long>());
    const json& rows = doc.at("entries");
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
        throw InvalidInput("\"entries\" must hold n rows");
    }
    ComplexMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw InvalidInput("row " + std::to_string(i) + " must hold n [re, im] pairs");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const json& pair = row[static_cast<std::size_t>(j)];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
                throw InvalidInput("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") must be a [re, im] pair of numbers");
            }
            const double re = pair[0].get<double>();
            const double im = pair[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) {
                throw InvalidInput("matrix entries must be finite");
            }
            a(i, j) = Complex{re, im};
        }
    }
    return a;
}

ComplexMatrix parse_matrix_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed matrix JSON: ") + e.what());
    }
    return matrix_from_json(doc);
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open matrix file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_json(buffer.str());
}

json matrix_to_json(const ComplexMatrix& a) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            row.push_back({a(i, j).real(), a(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", a.rows()}, {"entries", std::move(rows)}};
}

}  // namespace greenbound
